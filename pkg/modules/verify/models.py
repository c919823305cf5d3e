"""
Verification value types
"""
from dataclasses import dataclass, field

MAX_REPORTED_EXAMPLES = 5


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def check(self, ok, description):
        self.checked += 1
        if not ok:
            self.failures.append(str(description))
        return ok

    def to_dict(self):
        return {
            'suite': self.suite,
            'passed': self.passed,
            'checked': self.checked,
            'failures': len(self.failures),
            'examples': self.failures[:MAX_REPORTED_EXAMPLES],
            'seconds': round(self.seconds, 3),
            'notes': self.notes,
        }
