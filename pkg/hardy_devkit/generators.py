'''
Polynomial generators for experiments.

    random-gaussian   a_n = (g1 + i g2) / sqrt(2) n^-decay
    random-signs      a_n = +-1 n^-decay
    zeta-truncation   a_n = n^-decay

Random draws come from the "polynomial" stream, sub-stream `sub`, so
instance k of a suite is reproducible from (seed, k) alone.
'''
import logging
import math
from typing import Dict
import numpy as np
from voluptuous import MultipleInvalid
from .config import GENERATOR, GENERATOR_TAGS
from .series import DirichletPolynomial
from . import rng

logger = logging.getLogger(__name__)


def _decay(n_max: int, decay: float) -> np.ndarray:
    return np.arange(1, n_max + 1, dtype=np.float64) ** (-decay)


def generate_polynomial(spec: Dict, seed: int, sub: int = 0) -> DirichletPolynomial:
    '''
    Build the polynomial a generator spec describes.

    Parameters
    ----------
    spec : Dict
        {"tag": ..., "n_max": N, "decay": d}.
    seed : int
        Experiment seed.
    sub : int, optional
        Instance number, by default 0.

    Raises
    ------
    ValueError
        If the tag is unknown or a field is out of range.
    '''
    if spec.get('tag') not in GENERATOR_TAGS:
        raise ValueError('unknown generator tag {}'.format(spec.get('tag')))
    try:
        spec = GENERATOR(dict(spec))
    except MultipleInvalid as e:
        raise ValueError('invalid generator spec: {}'.format(e))
    n, decay = spec['n_max'], spec['decay']
    w = _decay(n, decay)
    tag = spec['tag']
    if tag == 'zeta-truncation':
        return DirichletPolynomial(w)

    g = rng.stream(seed, 'polynomial', sub)
    if tag == 'random-signs':
        signs = np.where(g.integers(0, 2, size=n) == 1, 1.0, -1.0)
        return DirichletPolynomial(signs * w)

    z = g.standard_normal((n, 2))
    return DirichletPolynomial((z[:, 0] + 1j * z[:, 1]) / math.sqrt(2) * w)


def polynomial_from_config(poly: Dict, seed: int, sub: int = 0) -> DirichletPolynomial:
    '''
    Explicit coefficients, or a generated polynomial for instance `sub`.
    '''
    if 'coeffs' in poly:
        return DirichletPolynomial([complex(re, im) for (re, im) in poly['coeffs']])
    return generate_polynomial(poly['generator'], seed, sub)
