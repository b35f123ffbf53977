'''
Experiment configs.

A config is a JSON object checked against the CONFIG schema:

    {
        "schema": 1,
        "seed": 7,
        "polynomial": {"generator": {"tag": "random-gaussian", "n_max": 50, "decay": 0.6}},
        "p_values": [1, 2, 4],
        "sigma_grid": [0.1, 0.2, ..., 1.0],
        "T": 10000,
        "mc_samples": 100000,
        "suites": ["all"],
        "output_path": "report"
    }

"polynomial" holds either "coeffs" ([[re, im], ...]) or "generator".
Errors name the offending field with a dotted path.
'''
import json
import logging
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Dict, List, Union
from voluptuous import Schema, All, Optional, Range, Length, In, MultipleInvalid, Invalid
from .errors import ConfigError
from .series import MAX_N

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

GENERATOR_TAGS = ('random-gaussian', 'random-signs', 'zeta-truncation')

SUITES = ('carlson', 'ergodic', 'growth', 'helson', 'riesz', 'poisson', 'fatou', 'norms', 'all')

MAX_T = 1e6
MAX_SAMPLES = 10 ** 7
SEED_MAX = (1 << 64) - 1


def _real(v):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise Invalid('expected a number')
    return float(v)


def _integer(v):
    if isinstance(v, bool) or not isinstance(v, int):
        raise Invalid('expected an integer')
    return v


Real = _real
Integer = _integer


GENERATOR = Schema({
        "tag": In(GENERATOR_TAGS),
        "n_max": All(Integer, Range(min=1, max=MAX_N)),
        Optional("decay", default=0.0): All(Real, Range(min=0))
    },
    required=True
)


POLYNOMIAL = Schema({
    Optional("coeffs"): All([All([Real], Length(min=2, max=2))], Length(min=1, max=MAX_N)),
    Optional("generator"): GENERATOR
})


RIESZ = Schema({
    Optional("k", default=3.0): All(Real, Range(min=1, min_included=False)),
    Optional("N_list", default=[100, 1000, 10000, 100000]): All([All(Integer, Range(min=2, max=MAX_N))], Length(min=1)),
    Optional("contour_N", default=[10, 100]): All([All(Integer, Range(min=2, max=MAX_N))], Length(min=1)),
    Optional("contour_k", default=[2.0, 3.5]): All([All(Real, Range(min=1, min_included=False))], Length(min=1)),
    Optional("cutoff", default=200.0): All(Real, Range(min=1)),
})


CONFIG = Schema({
        "schema": SCHEMA_VERSION,
        "seed": All(Integer, Range(min=0, max=SEED_MAX)),
        "polynomial": POLYNOMIAL,
        Optional("p_values", default=[1.0, 2.0, 4.0]): All([All(Real, Range(min=1))], Length(min=1)),
        Optional("sigma_grid", default=[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]):
            All([All(Real, Range(min=0, min_included=False))], Length(min=3)),
        Optional("T", default=10000.0): All(Real, Range(min=0, min_included=False, max=MAX_T)),
        Optional("T_grid", default=[1.0, 10.0, 100.0, 1000.0]): All([All(Real, Range(min=1, max=MAX_T))], Length(min=1)),
        Optional("mc_samples", default=100000): All(Integer, Range(min=100, max=MAX_SAMPLES)),
        Optional("instances", default=10): All(Integer, Range(min=1, max=1000)),
        Optional("mc_instances", default=20): All(Integer, Range(min=1, max=1000)),
        Optional("oracle_instances", default=50): All(Integer, Range(min=1, max=1000)),
        Optional("oracle_T_max", default=1000.0): All(Real, Range(min=0, min_included=False, max=MAX_T)),
        Optional("safety", default=1.1): All(Real, Range(min=1)),
        Optional("suites", default=["all"]): All([In(SUITES)], Length(min=1)),
        Optional("output_path", default="report"): str,
        Optional("threads", default=1): All(Integer, Range(min=1, max=1024)),
        Optional("riesz", default={}): RIESZ,
    },
    required=True
)


def _path_of(e: Invalid) -> str:
    return '.'.join(str(x) for x in e.path) or '<root>'


@dataclass
class ExperimentConfig:
    seed: int
    polynomial: Dict
    p_values: List[float]
    sigma_grid: List[float]
    T: float
    T_grid: List[float]
    mc_samples: int
    instances: int
    safety: float
    suites: List[str]
    output_path: str
    threads: int = 1
    riesz: Dict = field(default_factory=dict)
    mc_instances: int = 20
    oracle_instances: int = 50
    oracle_T_max: float = 1000.0

    @staticmethod
    def from_dict(raw: Dict) -> 'ExperimentConfig':
        '''
        Validate and build a config.

        Raises
        ------
        ConfigError
            With the dotted path of the first bad field.
        '''
        try:
            d = CONFIG(raw)
        except MultipleInvalid as e:
            first = e.errors[0]
            raise ConfigError(_path_of(first), first.msg)
        except Invalid as e:
            raise ConfigError(_path_of(e), e.msg)

        poly = d['polynomial']
        if ('coeffs' in poly) == ('generator' in poly):
            raise ConfigError('polynomial', 'give exactly one of "coeffs" and "generator"')
        sg = d['sigma_grid']
        if any(b <= a for (a, b) in zip(sg, sg[1:])):
            raise ConfigError('sigma_grid', 'should be increasing')
        d.pop('schema')
        return ExperimentConfig(**d)

    @staticmethod
    def load(path: Union[str, Path]) -> 'ExperimentConfig':
        try:
            with open(path, 'r', encoding='utf-8') as fh:
                raw = json.load(fh)
        except OSError as e:
            raise OSError('cannot read config {}: {}'.format(path, e.strerror or e)) from e
        except ValueError as e:
            raise ConfigError('<root>', 'not valid JSON: {}'.format(e))
        logger.debug('config loaded from %s', path)
        return ExperimentConfig.from_dict(raw)

    def override(self, seed: int = None, output_path: str = None, threads: int = None) -> 'ExperimentConfig':
        ''' Apply command line overrides, validated like the file. '''
        d = self.echo()
        if seed is not None:
            d['seed'] = seed
        if output_path is not None:
            d['output_path'] = output_path
        if threads is not None:
            d['threads'] = threads
        return ExperimentConfig.from_dict(d)

    def echo(self) -> Dict:
        d = asdict(self)
        d['schema'] = SCHEMA_VERSION
        return d

    def suite_list(self) -> List[str]:
        if 'all' in self.suites:
            return [s for s in SUITES if s != 'all']
        return list(self.suites)


def default_config(seed: int = 0) -> ExperimentConfig:
    ''' A random-gaussian polynomial of length 50 and decay 0.6. '''
    return ExperimentConfig.from_dict({
        "schema": SCHEMA_VERSION,
        "seed": seed,
        "polynomial": {"generator": {"tag": "random-gaussian", "n_max": 50, "decay": 0.6}},
    })
