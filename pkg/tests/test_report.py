import math
import pytest
from hardy_devkit import report
from hardy_devkit.report import BoundCheck, VerificationReport, FAIL, INCONCLUSIVE, PASS


def _sample() -> VerificationReport:
    rep = VerificationReport()
    rep.add('helson', 'closed_form', {"p": 1}, BoundCheck.equality(1.2247, 1.2247448713915890, 1e-3))
    rep.add('helson', 'inequality.0', {"k": 0}, BoundCheck(1.0, 1.3, 0.0))
    rep.add('poisson', 'supsup', {"k": 0}, BoundCheck(6.3, 6.0, 0.6))
    rep.add('poisson', 'pointwise.0', {"k": 0}, BoundCheck(0.25, 0.3, 0.0))
    rep.add('riesz', 'hankel.0', {"u": 1.0}, BoundCheck(2e-3, 1e-3, 0.0))
    return rep


def test_status_of():
    assert report.status_of(1.0, 1.0, 0.0) == PASS
    assert report.status_of(1.05, 1.0, 0.1) == INCONCLUSIVE
    assert report.status_of(1.2, 1.0, 0.1) == FAIL
    assert report.status_of(math.nan, 1.0, 0.1) == FAIL
    assert report.status_of(0.0, math.nan, 0.1) == FAIL
    assert report.status_of(0.0, 1.0, math.nan) == FAIL


def test_bound_check():
    c = BoundCheck(0.5, 2.0)
    assert c.margin == 1.5
    assert c.status == PASS
    eq = BoundCheck.equality(0.999, 1.0, 1e-2)
    assert eq.status == PASS
    assert eq.tolerance == 0.0
    assert BoundCheck.equality(0.9, 1.0, 1e-2).status == FAIL


def test_summary():
    rep = _sample()
    assert rep.summary() == {
        'helson': {PASS: 2, FAIL: 0, INCONCLUSIVE: 0},
        'poisson': {PASS: 1, FAIL: 0, INCONCLUSIVE: 1},
        'riesz': {PASS: 0, FAIL: 1, INCONCLUSIVE: 0},
    }
    assert rep.has_failures
    assert not VerificationReport().has_failures
    assert all(len(r.inputs_digest) == 16 for r in rep.rows)


def test_extend():
    a = _sample()
    a.wall_time = 1.5
    b = VerificationReport(wall_time=2.0)
    b.extend(a)
    assert len(b.rows) == 5
    assert b.wall_time == 3.5


def test_empty_csv():
    assert report.report_csv(VerificationReport()) == 'suite,check,inputs_digest,measured,bound,tolerance,status\n'


def test_emit_and_read(tmp_path):
    rep = _sample()
    report.emit_report(rep, tmp_path / 'one')
    report.emit_report(rep, tmp_path / 'two.csv')
    one = (tmp_path / 'one.csv').read_bytes()
    assert one == (tmp_path / 'two.csv').read_bytes()
    assert (tmp_path / 'one.json').read_bytes() == (tmp_path / 'two.json').read_bytes()

    back = report.read_report(tmp_path / 'one')
    assert back.rows == rep.rows
    assert report.audit(back) == []


def test_audit_tampered(tmp_path):
    report.emit_report(_sample(), tmp_path / 'run')
    csv_path = tmp_path / 'run.csv'
    text = csv_path.read_text()
    csv_path.write_text(text.replace(',0.001,0.0,fail', ',0.001,0.0,pass'))
    bad = report.audit(report.read_report(csv_path))
    assert [r.check for r in bad] == ['hankel.0']


def test_read_errors(tmp_path):
    p = tmp_path / 'cols.csv'
    p.write_text('suite,check\nx,y\n')
    with pytest.raises(ValueError):
        report.read_report(p)

    with pytest.raises(OSError, match='absent.csv'):
        report.read_report(tmp_path / 'absent')


def test_emit_unwritable(tmp_path):
    target = tmp_path / 'no' / 'such' / 'dir' / 'run'
    with pytest.raises(OSError, match='run.csv'):
        report.emit_report(VerificationReport(), target)


def test_config_echo(tmp_path):
    rep = _sample()
    report.emit_report(rep, tmp_path / 'bare')
    assert not (tmp_path / 'bare.config.json').exists()
    assert report.read_report(tmp_path / 'bare').config == {}

    rep.config = {"schema": 1, "seed": 7, "threads": 4, "output_path": "x", "T": 100.0}
    report.emit_report(rep, tmp_path / 'run')
    back = report.read_report(tmp_path / 'run')
    assert back.config == {"schema": 1, "seed": 7, "T": 100.0}
    assert (tmp_path / 'run.config.json').read_text().endswith('}\n')
