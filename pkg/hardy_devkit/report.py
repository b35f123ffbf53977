'''
Verification reports.

One row per check. A row's status follows from its numbers alone:

    measured <= bound                 -> pass
    measured <= bound + tolerance     -> inconclusive
    otherwise                         -> fail

Files:

    <out>.csv   suite,check,inputs_digest,measured,bound,tolerance,status
    <out>.json  {suite: {"pass": k, "fail": k, "inconclusive": k}}
    <out>.config.json  the config that produced the rows, less the run-only keys

Floats are written with repr, so identical runs give identical bytes.
'''
import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Union
from .digest import inputs_digest

logger = logging.getLogger(__name__)

# speed and location only, never the numbers
RUN_ONLY_KEYS = ('threads', 'output_path')

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
STATUSES = (PASS, FAIL, INCONCLUSIVE)

CSV_COLUMNS = ('suite', 'check', 'inputs_digest', 'measured', 'bound', 'tolerance', 'status')


def status_of(measured: float, bound: float, tolerance: float) -> str:
    '''
    The status rule. NaN anywhere is a failure.
    '''
    if any(math.isnan(x) for x in (measured, bound, tolerance)):
        return FAIL
    if measured <= bound:
        return PASS
    if measured <= bound + tolerance:
        return INCONCLUSIVE
    return FAIL


@dataclass(frozen=True)
class BoundCheck:
    ''' measured <= bound, with a tolerance band above the bound. '''
    measured: float
    bound: float
    tolerance: float = 0.0

    @property
    def margin(self) -> float:
        return self.bound - self.measured

    @property
    def status(self) -> str:
        return status_of(self.measured, self.bound, self.tolerance)

    @staticmethod
    def equality(value: float, target: float, tolerance: float) -> 'BoundCheck':
        ''' |value - target| <= tolerance, stored as a bound check. '''
        return BoundCheck(abs(value - target), tolerance, 0.0)


@dataclass(frozen=True)
class Row:
    suite: str
    check: str
    inputs_digest: str
    measured: float
    bound: float
    tolerance: float
    status: str

    @staticmethod
    def of(suite: str, check: str, inputs: Any, result: BoundCheck) -> 'Row':
        return Row(suite, check, inputs_digest(inputs), float(result.measured),
                   float(result.bound), float(result.tolerance), result.status)

    def audit(self) -> bool:
        ''' Whether the stored status is the one the rule gives. '''
        return self.status == status_of(self.measured, self.bound, self.tolerance)


@dataclass
class VerificationReport:
    rows: List[Row] = field(default_factory=list)
    config: Dict = field(default_factory=dict)
    # never written to files
    wall_time: float = 0.0

    def add(self, suite: str, check: str, inputs: Any, result: BoundCheck) -> Row:
        row = Row.of(suite, check, inputs, result)
        self.rows.append(row)
        if row.status == INCONCLUSIVE:
            logger.warning('%s/%s inconclusive: measured %.6g, bound %.6g', suite, check,
                           row.measured, row.bound)
        elif row.status == FAIL:
            logger.error('%s/%s failed: measured %.6g, bound %.6g', suite, check,
                         row.measured, row.bound)
        return row

    def extend(self, other: 'VerificationReport'):
        self.rows.extend(other.rows)
        self.wall_time += other.wall_time

    def summary(self) -> Dict[str, Dict[str, int]]:
        out = {}
        for r in self.rows:
            counts = out.setdefault(r.suite, {PASS: 0, FAIL: 0, INCONCLUSIVE: 0})
            counts[r.status] += 1
        return out

    @property
    def has_failures(self) -> bool:
        return any(r.status == FAIL for r in self.rows)


def _fmt(x: float) -> str:
    return repr(float(x))


def report_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator='\n')
    w.writerow(CSV_COLUMNS)
    for r in report.rows:
        w.writerow([r.suite, r.check, r.inputs_digest, _fmt(r.measured), _fmt(r.bound),
                    _fmt(r.tolerance), r.status])
    return buf.getvalue()


def report_summary_json(report: VerificationReport) -> str:
    return json.dumps(report.summary(), sort_keys=True, indent=2) + '\n'


def report_config_json(report: VerificationReport) -> str:
    echo = {k: v for (k, v) in report.config.items() if k not in RUN_ONLY_KEYS}
    return json.dumps(echo, sort_keys=True, indent=2) + '\n'


def _paths(path: Union[str, Path]):
    p = Path(path)
    if p.suffix == '.csv':
        return p, p.with_suffix('.json')
    return p.with_name(p.name + '.csv'), p.with_name(p.name + '.json')


def _config_path(csv_path: Path) -> Path:
    return csv_path.with_suffix('.config.json')


def emit_report(report: VerificationReport, path: Union[str, Path]):
    '''
    Write <path>.csv and <path>.json (a trailing .csv on path is kept), and
    <path>.config.json when the report carries a config.

    Raises
    ------
    OSError
        If a file cannot be written; the message names the file.
    '''
    csv_path, json_path = _paths(path)
    files = [(csv_path, report_csv(report)), (json_path, report_summary_json(report))]
    if report.config:
        files.append((_config_path(csv_path), report_config_json(report)))
    for (target, text) in files:
        try:
            with open(target, 'w', encoding='utf-8', newline='') as fh:
                fh.write(text)
        except OSError as e:
            raise OSError('cannot write report file {}: {}'.format(target, e.strerror or e)) from e
    logger.info('report written to %s (%d rows, %.2fs)', csv_path, len(report.rows), report.wall_time)


def read_report(path: Union[str, Path]) -> VerificationReport:
    '''
    Load the rows of an emitted CSV, and its config echo when present.
    '''
    csv_path, _ = _paths(path)
    try:
        with open(csv_path, 'r', encoding='utf-8', newline='') as fh:
            reader = csv.DictReader(fh)
            if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
                raise ValueError('{}: unexpected columns {}'.format(csv_path, reader.fieldnames))
            rows = [Row(d['suite'], d['check'], d['inputs_digest'], float(d['measured']),
                        float(d['bound']), float(d['tolerance']), d['status']) for d in reader]
    except OSError as e:
        raise OSError('cannot read report file {}: {}'.format(csv_path, e.strerror or e)) from e
    config = {}
    if _config_path(csv_path).exists():
        config = json.loads(_config_path(csv_path).read_text(encoding='utf-8'))
    return VerificationReport(rows, config)


def audit(report: VerificationReport) -> List[Row]:
    ''' Rows whose stored status disagrees with the rule. '''
    return [r for r in report.rows if not r.audit()]
