"""
Run configuration, per-check records and the assembled report.

Record details hold JSON values only (str, int, float, bool, None, lists and
string-keyed dicts), so a report survives a JSON round trip unchanged.
"""
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from django.conf import settings

from Scheme.eigen import parameter_point

from .exceptions import ConfigError

STATUSES = ('pass', 'fail', 'skipped')
FORMATS = ('text', 'json')
MODES = ('exact', 'numeric')


def jsonable(value):
    """Recursively convert check output to plain JSON values."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class CheckRecord:
    name: str
    status: str
    details: dict = field(default_factory=dict)
    witness: dict = None
    seconds: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ConfigError(f'unknown status {self.status!r}')
        if self.status == 'fail' and self.witness is None:
            raise ConfigError(f'failed check {self.name!r} carries no witness')

    @property
    def failed(self):
        return self.status == 'fail'

    @classmethod
    def from_report(cls, report, seconds=0.0, name=None):
        details = jsonable({'checked': report.checked, **report.details})
        if report.failures:
            details['failures'] = jsonable(report.failures)
        witness = jsonable(report.failures[0]) if report.failures else None
        return cls(name or report.name, 'pass' if report.passed else 'fail', details, witness, seconds)

    @classmethod
    def skipped(cls, name, reason):
        return cls(name, 'skipped', {'reason': reason})


def timed(name, check, *args, **kwargs):
    """Run ``check`` (returning an IdentityReport) and wrap the result as a record."""
    start = time.perf_counter()
    report = check(*args, **kwargs)
    return CheckRecord.from_report(report, round(time.perf_counter() - start, 6), name)


@dataclass
class RunConfig:
    command: str
    q: int = None
    m: int = None
    grid: bool = False
    symbolic: bool = False
    family: str = None
    branch: int = 0
    mode: str = None
    precision: int = None
    tolerance: str = None
    scheme: str = None
    output_format: str = 'text'
    seed: int = None
    coeffs: list = None
    lo: str = None
    hi: str = None

    def __post_init__(self):
        if (self.q is None) != (self.m is None):
            raise ConfigError('--q and --m must be given together')
        if self.q is not None:
            parameter_point(self.q, self.m)
        minimum = getattr(settings, 'MIN_PRECISION', 128)
        if self.precision is not None and self.precision < minimum:
            raise ConfigError(f'precision must be at least {minimum} bits, got {self.precision}')
        if self.output_format not in FORMATS:
            raise ConfigError(f'unknown output format {self.output_format!r}')
        if self.mode is not None and self.mode not in MODES:
            raise ConfigError(f'unknown mode {self.mode!r}')

    def points(self, grid_setting='DEFAULT_GRID'):
        """The (q, m) points this run covers, in order."""
        if self.grid:
            return [tuple(point) for point in getattr(settings, grid_setting)]
        if self.q is not None:
            return [(self.q, self.m)]
        return []


@dataclass
class Report:
    version: str
    config: RunConfig
    records: list = field(default_factory=list)

    @classmethod
    def start(cls, config):
        return cls(getattr(settings, 'TOOLKIT_VERSION', '1.0.0'), config)

    @property
    def passed(self):
        return not any(record.failed for record in self.records)

    def extend(self, records):
        self.records.extend(records)
