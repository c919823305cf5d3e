"""
Atlas files: the enumerated representatives of one (n, r) as JSON
"""
import json
import logging

from modules.core.models import sym_from_entries
from modules.core.numeric import EXACT, numeric_mode
from modules.ctype.models import ConeInequality, CTypeDomain
from modules.shared.errors import ParseError
from modules.shared.formatting import render_scalar
from modules.vonorm.models import PhiSet

logger = logging.getLogger(__name__)


def domain_to_dict(domain: CTypeDomain):
    return {
        'phi': [list(v) for v in domain.phi.sorted_vectors()],
        'facets': [{'coeff': list(f.coeff), 'u': list(f.u), 'v': list(f.v)} for f in domain.facet_inequalities],
        'interior': [render_scalar(x) for x in domain.interior.entries()] if domain.interior is not None else None,
        'neighbors': list(domain.neighbors),
    }


def atlas_to_dict(n, r, domains):
    return {'n': n, 'r': r, 'classes': [domain_to_dict(d) for d in domains]}


def write_atlas(path, n, r, domains):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(atlas_to_dict(n, r, domains), f, indent=2)
    logger.info(f"✅ Atlas with {len(domains)} class(es) written to {path}")


def _domain_from_dict(data, r):
    phi = PhiSet(frozenset(tuple(v) for v in data['phi']), r)
    facets = []
    for item in data['facets']:
        ineq = ConeInequality.from_pair(tuple(item['u']), tuple(item['v']))
        if list(ineq.coeff) != list(item['coeff']):
            raise ParseError(f"facet coefficients {item['coeff']} do not match u={item['u']}, v={item['v']}")
        facets.append(ineq)
    interior = None
    if data.get('interior') is not None:
        with numeric_mode(EXACT):
            interior = sym_from_entries(data['interior'])
    return CTypeDomain(phi, r, tuple(facets), interior, tuple(data.get('neighbors', ())))


def read_atlas(path):
    """(n, r, domains) from an atlas file"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        n, r = int(data['n']), int(data['r'])
        domains = [_domain_from_dict(item, r) for item in data['classes']]
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ParseError(f"unreadable atlas {path}: {e}") from e
    return n, r, domains
