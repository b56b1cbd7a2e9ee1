import io
import json
import logging
import sys

import pytest

from well_pressure import cli
from well_pressure.fitseries import PUBLISHED_COEFFICIENTS, load_coefficients
from well_pressure.util import config, files

hydrogen_flags = ['--width', '0.529angstrom', '--depth', '13.6058eV', '--mass', 'me']


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return (code, captured.out, captured.err)


def test_spectrum_table(capsys):
    (code, out, _) = run(capsys, 'spectrum', *hydrogen_flags)
    assert code == 0
    labels = [line.split()[0] for line in out.splitlines()]
    assert labels[:3] == ['branch', 'n', 'K_m']
    n_line = out.splitlines()[1]
    assert float(n_line.split()[1]) == pytest.approx(1.0, abs=1e-3)


def test_spectrum_json(capsys):
    (code, out, _) = run(capsys, 'spectrum', '--preset', 'hydrogen', '--json')
    assert code == 0
    document = json.loads(out)
    assert document['n'] == pytest.approx(0.99966, abs=1e-4)
    assert document['K_m'] == pytest.approx(5.2918e-11, rel=2e-3)
    assert 0.0 < document['E_over_V0'] < 1.0


def test_spectrum_all_branches(capsys):
    (code, out, _) = run(
        capsys, 'spectrum', '--preset', 'hydrogen', '--width', '5angstrom',
        '--all', '--json'
    )
    assert code == 0
    assert [state['branch'] for state in json.loads(out)] == [0, 1, 2, 3]


def test_missing_branch_is_domain_error(capsys):
    (code, _, err) = run(capsys, 'spectrum', *hydrogen_flags, '--branch', '1')
    assert code == 1
    assert 'does not exist' in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 3
    assert run(capsys, 'teleport')[0] == 3
    assert run(capsys, 'spectrum', '--width', '1nm', '--depth', '1eV')[0] == 3
    assert run(capsys, 'spectrum', '--preset', 'helium')[0] == 3
    assert run(capsys, 'sweep', '--parameter', 'width')[0] == 3


def test_domain_errors(capsys):
    flags = ['--depth', '13.6058eV', '--mass', 'me']
    assert run(capsys, 'spectrum', '--width', '-1m', *flags)[0] == 1
    assert run(capsys, 'spectrum', '--width', '1furlong', *flags)[0] == 1
    assert run(capsys, 'spectrum', '--width', '1eV', *flags)[0] == 1
    assert run(
        capsys, 'hydrogen', '--coefficients', '/nonexistent/coefficients.json'
    )[0] == 1


def test_attach_negative_values():
    assert cli.attach_negative_values(['--width', '-1m', '-v']) == [
        '--width=-1m', '-v'
    ]
    assert cli.attach_negative_values(['--gamma', '-.5']) == ['--gamma=-.5']
    assert cli.attach_negative_values(['--json', '-v']) == ['--json', '-v']


def test_fit_published(capsys):
    (code, out, _) = run(capsys, 'fit', '--paper', '--json')
    assert code == 0
    document = json.loads(out)
    assert document['c'] == list(PUBLISHED_COEFFICIENTS.c)
    assert document['source'] == 'paper'


def test_fit_writes_coefficients(capsys, tmp_path):
    path = str(tmp_path / 'coefficients.json')
    (code, out, _) = run(capsys, 'fit', '--out', path, '--workers', '2')
    assert code == 0
    coeffs = load_coefficients(path)
    assert coeffs.source == 'refit'
    assert coeffs.sigma <= 1e-5
    assert 'sigma' in out
    (code, out, _) = run(capsys, 'hydrogen', '--coefficients', path, '--json')
    assert json.loads(out)['classification'] == 'Ionizes'


def test_fit_rejects_small_grid(capsys):
    assert run(capsys, 'fit', '--grid', '1:10:11')[0] == 1


def test_hydrogen(capsys):
    (code, out, _) = run(capsys, 'hydrogen', '--json')
    assert code == 0
    document = json.loads(out)
    assert document['a0_m'] == pytest.approx(1.31056e-10, rel=2e-3)
    assert document['K_m'] == pytest.approx(5.2918e-11, rel=2e-3)
    assert document['a0_over_K'] == pytest.approx(2.4766, rel=1e-4)
    assert document['classification'] == 'Ionizes'
    assert document['reproduced']
    (code, out, _) = run(capsys, 'hydrogen')
    assert code == 0
    assert 'Ionizes' in out


def test_hydrogen_not_reproduced(capsys, tmp_path):
    settings = config.default_config()
    settings['hydrogen']['reference_a0_m'] = 2e-10
    files.json_dump(settings, str(tmp_path / 'settings.json'))
    (code, _, err) = run(capsys, 'hydrogen', '--config_dir', str(tmp_path))
    assert code == 2
    assert 'deviate' in err


@pytest.mark.parametrize('field, text', [
    ('width', '13.6058eV'), ('depth', '0.529angstrom'), ('mass', '13.6058eV')
])
def test_hydrogen_preset_dimensions(capsys, tmp_path, field, text):
    settings = config.default_config()
    settings['presets']['hydrogen'][field] = text
    files.json_dump(settings, str(tmp_path / 'settings.json'))
    (code, _, err) = run(capsys, 'hydrogen', '--config_dir', str(tmp_path))
    assert code == 1
    assert 'Expected a' in err


def test_verify(capsys):
    (code, out, _) = run(capsys, 'verify', '--json')
    assert code == 0
    verdicts = {
        check['equation']: check['verdict']
        for check in json.loads(out)['checks']
    }
    assert verdicts['small_width_expansion'] == 'consistent'
    assert verdicts['critical_width'] == 'discrepant'
    (code, out, _) = run(capsys, 'verify')
    assert code == 0
    assert out.splitlines()[0].split() == [
        'equation', 'printed', 'rederived', 'deviation', 'verdict'
    ]
    assert 'a0/K from full numerator' in out


def test_sweep_csv(capsys):
    (code, out, _) = run(
        capsys, 'sweep', '--parameter', 'width', '--from', '0.3angstrom',
        '--to', '3angstrom', '--steps', '10', '--depth', '13.6058eV',
        '--mass', 'me', '--gamma', '0.5'
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    assert lines[0].startswith('param,a_m,n')
    assert all(line.split(',')[9] != '' for line in lines[1:])


def test_sweep_json_and_gamma_conflict(capsys):
    (code, out, _) = run(
        capsys, 'sweep', '-x', 'gamma', '--from', '0', '--to', '1', '-n', '3',
        '--preset', 'hydrogen', '--json'
    )
    assert code == 0
    assert [row['param'] for row in json.loads(out)] == [0.0, 0.5, 1.0]
    (code, _, _) = run(
        capsys, 'sweep', '-x', 'gamma', '--from', '0', '--to', '1', '-n', '3',
        '--preset', 'hydrogen', '--gamma', '0.5'
    )
    assert code == 3


def test_sweep_rejects_bad_range(capsys):
    (code, _, _) = run(
        capsys, 'sweep', '-x', 'width', '--from', '3angstrom', '--to',
        '1angstrom', '-n', '3', '--preset', 'hydrogen'
    )
    assert code == 1


def test_sweep_all_rows_failed(capsys, tmp_path):
    path = str(tmp_path / 'above.json')
    with open(path, 'w') as f:
        json.dump({'c': [1.5, 0, 0, 0, 0, 1.0], 'sigma': 0, 'source': 'refit'}, f)
    (code, out, _) = run(
        capsys, 'sweep', '-x', 'gamma', '--from', '0.1', '--to', '0.9',
        '-n', '3', '--preset', 'hydrogen', '--coefficients', path
    )
    assert code == 2
    assert out.count('error:FitOutOfRange') == 3


def test_verbose_logging(capsys):
    (code, _, err) = run(capsys, 'spectrum', '--preset', 'hydrogen', '-v')
    assert code == 0
    assert 'DEBUG' in err


def test_sweep_wide_wells(capsys):
    (code, out, _) = run(
        capsys, 'sweep', '-x', 'width', '--from', '1e-8m', '--to', '3e-8m',
        '-n', '3', '--preset', 'hydrogen', '--gamma', '0.5'
    )
    assert code == 0
    assert 'error:' not in out
    for line in out.splitlines()[1:]:
        assert 0.0 <= float(line.split(',')[9]) < 1e-50


def test_verify_in_joules(capsys):
    (code, out, _) = run(
        capsys, 'verify', '--width', '1angstrom', '--depth', '1J',
        '--mass', 'me', '--json'
    )
    assert code == 0
    check = next(
        check for check in json.loads(out)['checks']
        if check['equation'] == 'pressure_series'
    )
    assert check['verdict'] == 'discrepant'
    assert check['printed'] == 1.0


def test_logging_follows_replaced_stderr(capsys, monkeypatch):
    assert run(capsys, 'fit', '--paper', '--json')[0] == 0
    buffer = io.StringIO()
    monkeypatch.setattr(sys, 'stderr', buffer)
    logging.getLogger('well_pressure').warning('after the command returned')
    assert 'after the command returned' in buffer.getvalue()
