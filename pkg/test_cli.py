#!/usr/bin/env python3
"""
Command-line surface, settings and logging bootstrap
"""
import json
import logging
import sys

from click.testing import CliRunner

from app import cli
from config_loader import get_setting, load_settings_from_json
from logging_config import setup_logging
from modules.core.models import SymMat3
from modules.main_controller import MODULE_COMMANDS
from modules.reduction.selling import is_selling_reduced
from modules.shared.formatting import parse_scalar

IDENTITY = "1,1,1,0,0,0"
S1 = "6,12,12,-2,-2,-3"
S2 = "6,12,14,-3,-1,-5"


def run(*args):
    return CliRunner().invoke(cli, list(args))


def test_reduce_minkowski_keeps_reduced_form():
    result = run('reduce', '--kind', 'minkowski', '1,2,3,0,0,0')
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data['reduced'] == [1, 2, 3, 0, 0, 0]
    assert data['transform'] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_reduce_cell_selling():
    result = run('reduce', '--cell', '1,1,1,60,60,60', '--kind', 'selling')
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    gram = SymMat3(*(parse_scalar(x) for x in data['reduced']))
    assert is_selling_reduced(gram)
    assert data['kind'] == 'selling'


def test_reduce_errors_have_exit_codes():
    assert run('reduce', '1,x,3').exit_code == 2
    assert run('reduce', '1,1,1,1,0,0').exit_code == 3
    assert run('reduce').exit_code == 2
    assert 'error:' in run('reduce', '1,x,3').stderr


def test_embed_lines():
    assert run('embed', '--kind', 'm', IDENTITY).stdout.strip() == "1,1,1,2,2,2,2,2,2,3,3,3,3"
    assert run('embed', '--kind', 's', IDENTITY).stdout.strip() == "1,1,1,2,2,2,3,0,0,0,1,1,1"
    assert run('embed', '--kind', 'm', '1,2,3,0,0,0').stdout.strip() == "1,2,3,3,3,4,4,5,5,6,6,6,6"
    assert run('embed', '--cell', '1,1,1,90,90,90').stdout.strip() == "1,1,1,2,2,2,2,2,2,3,3,3,3"


def test_embed_in_float_mode():
    result = run('--mode', 'float', 'embed', '--kind', 'm', IDENTITY)
    assert result.exit_code == 0
    assert result.stdout.strip() == "1,1,1,2,2,2,2,2,2,3,3,3,3"


def test_embed_rejects_exact_scale_normalization():
    assert run('embed', '--normalize-scale', IDENTITY).exit_code == 2
    assert run('--mode', 'float', 'embed', '--normalize-scale', '8,8,8,0,0,0').exit_code == 0


def test_dist():
    assert run('dist', IDENTITY, IDENTITY).stdout.strip() == "0"
    assert parse_scalar(run('dist', S1, S2).stdout.strip()) > 0
    assert run('dist', '--algo', 'vonorm-generic', IDENTITY, '2,2,2,0,0,0').stdout.strip() == "3"
    assert run('dist', '--algo', 'rank2', '2,3,1', '2,7,3').stdout.strip() == "0"
    assert run('dist', IDENTITY).exit_code == 2


def test_isometries():
    data = json.loads(run('isometries', IDENTITY, IDENTITY).stdout)
    assert data['count'] == 48
    assert all(item['residual'] == 0 for item in data['isometries'])
    empty = run('isometries', IDENTITY, '1,5,9,0,0,0')
    assert empty.exit_code == 0
    assert json.loads(empty.stdout)['count'] == 0
    exact = json.loads(run('isometries', '--exact', S1, S2).stdout)
    assert exact['isometries'] == []


def test_ctype(tmp_path):
    assert run('ctype', '--n', '3', '--r', '2').stdout.strip() == "1 class"
    out = tmp_path / "atlas.json"
    result = run('ctype', '--n', '2', '--r', '4', '--out', str(out))
    assert result.stdout.strip() == "1 class"
    assert json.loads(out.read_text(encoding='utf-8'))['r'] == 4
    assert run('ctype', '--n', '4', '--r', '3').exit_code == 2


def test_ctype_mod_3_has_four_classes():
    assert run('ctype', '--n', '3', '--r', '3').stdout.strip() == "4 classes"


def test_dedupe(tmp_path):
    path = tmp_path / "grams.csv"
    path.write_text("id,s11,s22,s33,s12,s13,s23\na,1,1,1,0,0,0\nb,4,4,4,0,0,0\n", encoding='utf-8')
    result = run('dedupe', '--in', str(path), '--threshold', '1', '--out', str(tmp_path / "index.jsonl"),
                 '--csv-out', str(tmp_path / "fp.csv"))
    assert result.exit_code == 0
    assert json.loads(result.stdout)['clusters'] == [['a'], ['b']]
    assert len((tmp_path / "index.jsonl").read_text(encoding='utf-8').splitlines()) == 2
    assert (tmp_path / "fp.csv").exists()


def test_dedupe_with_explicit_kind_and_metric(tmp_path):
    path = tmp_path / "grams.csv"
    path.write_text("id,s11,s22,s33,s12,s13,s23\na,1,1,1,0,0,0\nb,2,1,1,1,0,0\n", encoding='utf-8')
    for kind in ('s', 'minkowski'):
        result = run('dedupe', '--in', str(path), '--kind', kind, '--metric', 'l2', '--threshold', '0')
        assert result.exit_code == 0
        assert json.loads(result.stdout)['clusters'] == [['a', 'b']]


def test_dedupe_empty_and_bad_files(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("", encoding='utf-8')
    result = run('dedupe', '--in', str(empty))
    assert result.exit_code == 0
    assert json.loads(result.stdout)['clusters'] == []
    bad = tmp_path / "bad.csv"
    bad.write_text("id,x,y\n1,2,3\n", encoding='utf-8')
    assert run('dedupe', '--in', str(bad)).exit_code == 2


def test_verify():
    result = run('verify', '--suite', 'separation')
    assert result.exit_code == 0
    data = json.loads(result.stdout.strip().splitlines()[0])
    assert data['suite'] == 'separation' and data['passed']
    assert run('verify', '--suite', 'theorem1', '--samples', '5').exit_code == 0
    assert run('verify', '--suite', 'nope').exit_code == 2


def test_settings_file_sets_defaults(tmp_path):
    settings = tmp_path / "settings.json"
    settings.write_text(json.dumps({'DEFAULT_KIND': 's'}), encoding='utf-8')
    result = run('--settings', str(settings), 'embed', IDENTITY)
    assert result.stdout.strip() == "1,1,1,2,2,2,3,0,0,0,1,1,1"


def test_config_loader(tmp_path, monkeypatch):
    assert load_settings_from_json(str(tmp_path / "missing.json")) == {}
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding='utf-8')
    assert load_settings_from_json(str(broken)) == {}
    monkeypatch.setenv('JOBS', '4')
    assert get_setting({}, 'JOBS') == '4'
    assert get_setting({'JOBS': 2}, 'JOBS') == 2
    monkeypatch.delenv('JOBS')
    assert get_setting({}, 'JOBS') == '1'
    assert get_setting({}, 'UNKNOWN_KEY', 'fallback') == 'fallback'


def test_file_logging(tmp_path):
    settings = {'LOG_TO_FILE': True, 'LOG_PATH': str(tmp_path), 'LOG_FILE_PREFIX': 'lattice13'}
    try:
        setup_logging(settings, 'info')
        logging.getLogger('lattice13.test').error("❌ boom")
        assert sorted(p.name for p in tmp_path.iterdir()) == ['lattice13.log', 'lattice13_error.log']
    finally:
        for handler in logging.getLogger().handlers:
            handler.close()
        setup_logging()
    assert 'boom' in (tmp_path / "lattice13_error.log").read_text(encoding='utf-8')


def test_every_module_command_is_registered():
    listed = {command.name for commands in MODULE_COMMANDS.values() for command in commands}
    assert listed == set(cli.commands)


if __name__ == "__main__":
    import pytest
    sys.exit(pytest.main([__file__, '-q']))
