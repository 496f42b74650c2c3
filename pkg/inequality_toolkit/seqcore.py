#!/usr/bin/env python
u"""
seqcore.py (10/2026)
Validated finite sequences, alternating sums in paired form and seeded
    generation of bounded monotone sequences

Alternating sums are always evaluated as sums of consecutive differences
    sum_k (-1)^(k+1) x_k = sum_k (x_(2k-1) - x_(2k))
    with a virtual zero term appended to odd-length sequences

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org

PROGRAM DEPENDENCIES:
    reports.py: verdict records shared by every inequality check
    utilities.py: tolerances and exceptions

UPDATE HISTORY:
    Written 10/2026
"""
from __future__ import annotations

import json
import math
import logging
import dataclasses
import numpy as np
from inequality_toolkit.reports import make_report
from inequality_toolkit.utilities import HypothesisError, default

# monotone directions
NONINCREASING = 'non-increasing'
NONDECREASING = 'non-decreasing'
DIRECTIONS = (NONINCREASING, NONDECREASING)
# generator distributions
DISTRIBUTIONS = ('uniform-gaps', 'geometric-decay')

def _as_array(values):
    """Returns a read-only one-dimensional float64 copy
    """
    if isinstance(values, Seq):
        return values.values
    arr = np.array(values, dtype=np.float64).ravel()
    arr.setflags(write=False)
    return arr

@dataclasses.dataclass(frozen=True)
class Seq:
    """
    Finite sequence of non-negative reals

    Parameters
    ----------
    values: array_like
        elements of the sequence (length n >= 1)
    """
    values: np.ndarray

    def __post_init__(self):
        values = _as_array(self.values)
        if (values.size == 0):
            raise HypothesisError('Sequences need at least one element')
        if not np.all(np.isfinite(values)):
            raise HypothesisError('Sequence elements must be finite')
        if np.any(values < 0):
            raise HypothesisError('Sequence elements must be non-negative')
        object.__setattr__(self, 'values', values)

    def __len__(self):
        return self.values.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    @property
    def n(self):
        return self.values.size

    def to_list(self):
        return self.values.tolist()

    def to_json(self):
        """Serializes the sequence as a JSON array
        """
        return json.dumps(self.to_list())

    @classmethod
    def from_json(cls, text: str, **kwargs):
        """Reads a sequence from a JSON array
        """
        return cls(np.array(json.loads(text), dtype=np.float64), **kwargs)

@dataclasses.dataclass(frozen=True)
class BoundedMonotoneSeq(Seq):
    """
    Monotone non-negative sequence with box bounds

    Parameters
    ----------
    values: array_like
        elements of the sequence
    direction: str, default 'non-increasing'
        ``'non-increasing'`` or ``'non-decreasing'``
    lo: float or NoneType, default None
        lower box bound (minimum of values if None)
    hi: float or NoneType, default None
        upper box bound (maximum of values if None)
    tol_mono: float or NoneType, default None
        monotonicity slack (``tol_mono*hi`` from altineqrc if None)
    """
    direction: str = NONINCREASING
    lo: float | None = None
    hi: float | None = None
    tol_mono: float | None = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        super().__post_init__()
        if self.direction not in DIRECTIONS:
            raise ValueError(f'Unknown direction {self.direction}')
        lo = float(self.values.min()) if self.lo is None else float(self.lo)
        hi = float(self.values.max()) if self.hi is None else float(self.hi)
        if (lo < 0) or (hi < lo):
            raise HypothesisError(f'Invalid box [{lo}, {hi}]')
        if np.any(self.values < lo) or np.any(self.values > hi):
            raise HypothesisError(f'Sequence leaves the box [{lo}, {hi}]')
        tol_mono = default('tol_mono')*hi if self.tol_mono is None \
            else float(self.tol_mono)
        if not validate_monotone(self.values, self.direction, tol_mono):
            raise HypothesisError(f'Sequence is not {self.direction}')
        object.__setattr__(self, 'lo', lo)
        object.__setattr__(self, 'hi', hi)
        object.__setattr__(self, 'tol_mono', tol_mono)

    def rescale(self, factor: float):
        """Returns the sequence multiplied by a positive factor
        """
        return BoundedMonotoneSeq(factor*self.values, direction=self.direction,
            lo=factor*self.lo, hi=factor*self.hi, tol_mono=factor*self.tol_mono)

# PURPOSE: build a non-increasing sequence with its tight box
def nonincreasing(values, **kwargs):
    """Shorthand for a ``BoundedMonotoneSeq`` in non-increasing order
    """
    return BoundedMonotoneSeq(values, direction=NONINCREASING, **kwargs)

def nondecreasing(values, **kwargs):
    """Shorthand for a ``BoundedMonotoneSeq`` in non-decreasing order
    """
    return BoundedMonotoneSeq(values, direction=NONDECREASING, **kwargs)

# PURPOSE: check monotonicity of consecutive differences
def validate_monotone(s, direction: str = NONINCREASING, tol_mono: float = 0.0):
    """
    Check whether a sequence is monotone within a tolerance

    Parameters
    ----------
    s: Seq or array_like
        sequence to check
    direction: str, default 'non-increasing'
        ``'non-increasing'`` or ``'non-decreasing'``
    tol_mono: float, default 0.0
        allowed violation of each consecutive difference

    Returns
    -------
    monotone: bool
        consecutive differences respect the direction
    """
    values = _as_array(s)
    delta = np.diff(values)
    if (direction == NONINCREASING):
        return bool(np.all(delta <= tol_mono))
    elif (direction == NONDECREASING):
        return bool(np.all(delta >= -tol_mono))
    raise ValueError(f'Unknown direction {direction}')

# PURPOSE: alternating sum via the pairing identity
def alt_sum(s):
    """
    Alternating sum ``sum_k (-1)^(k+1) s_k`` evaluated in paired form

    Parameters
    ----------
    s: Seq or array_like
        sequence of reals

    Returns
    -------
    total: float
        alternating sum with compensated (exactly rounded) accumulation
    """
    values = _as_array(s)
    # virtual zero term for odd lengths
    if (values.size % 2):
        values = np.append(values, 0.0)
    pairs = values[0::2] - values[1::2]
    return math.fsum(pairs)

# PURPOSE: left-to-right signed summation (reference for the paired form)
def alt_sum_direct(s):
    """Alternating sum accumulated left to right
    """
    values = _as_array(s)
    signs = np.where(np.arange(values.size) % 2, -1.0, 1.0)
    return math.fsum(signs*values)

# PURPOSE: compare both sides of the non-increasing/non-decreasing lemma
def lemma_compare(a, b, B: float, tol: float | None = None):
    """
    Compare ``alt_sum(a*b)`` against ``B*alt_sum(a)`` for a non-increasing
    sequence a and a non-decreasing sequence b bounded by B

    Parameters
    ----------
    a: BoundedMonotoneSeq
        non-increasing sequence
    b: BoundedMonotoneSeq
        non-decreasing sequence
    B: float
        upper bound of b
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    a = a if isinstance(a, BoundedMonotoneSeq) else nonincreasing(a)
    b = b if isinstance(b, BoundedMonotoneSeq) else nondecreasing(b)
    if (a.n != b.n):
        raise HypothesisError(f'Length mismatch {a.n} != {b.n}')
    if (a.direction != NONINCREASING) or (b.direction != NONDECREASING):
        raise HypothesisError('Lemma needs a non-increasing and b non-decreasing')
    if (B < b.values.max()):
        raise HypothesisError(f'B={B} is smaller than max(b)')
    lhs = alt_sum(a.values*b.values)
    rhs = B*alt_sum(a)
    return make_report('lemma', lhs, rhs, lhs, rhs, tol=tol, n=a.n,
        extra=dict(B=B))

@dataclasses.dataclass(frozen=True)
class GenSpec:
    """
    Seeded recipe for a bounded monotone sequence

    Parameters
    ----------
    n: int
        length of the sequence
    lo: float
        lower box bound
    hi: float
        upper box bound
    direction: str, default 'non-increasing'
        monotone direction of the output
    seed: int, default 0
        64-bit unsigned seed
    distribution: str, default 'uniform-gaps'
        ``'uniform-gaps'`` or ``'geometric-decay'``
    """
    n: int
    lo: float
    hi: float
    direction: str = NONINCREASING
    seed: int = 0
    distribution: str = 'uniform-gaps'

    def __post_init__(self):
        if (int(self.n) != self.n) or (self.n < 1):
            raise ValueError(f'Invalid length {self.n}')
        if not (0 <= self.lo <= self.hi) or not np.isfinite(self.hi):
            raise ValueError(f'Invalid box [{self.lo}, {self.hi}]')
        if self.direction not in DIRECTIONS:
            raise ValueError(f'Unknown direction {self.direction}')
        if not (0 <= self.seed < 2**64):
            raise ValueError(f'Seed {self.seed} is not a 64-bit unsigned integer')
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f'Unknown distribution {self.distribution}')

    def to_json(self):
        return json.dumps(dataclasses.asdict(self))

    @classmethod
    def from_json(cls, text: str):
        return cls(**json.loads(text))

# PURPOSE: seeded generation of a bounded monotone sequence
def generate(spec: GenSpec):
    """
    Generate a bounded monotone sequence from a seeded recipe

    The values are drawn, sorted into the requested direction and clamped
    into the box, so the output is exactly monotone and never rejected

    Parameters
    ----------
    spec: GenSpec
        generator recipe

    Returns
    -------
    s: BoundedMonotoneSeq
        sequence with box ``[spec.lo, spec.hi]``
    """
    rng = np.random.default_rng(spec.seed)
    if (spec.distribution == 'uniform-gaps'):
        values = spec.lo + (spec.hi - spec.lo)*rng.random(spec.n)
    else:
        # geometric decay from the upper bound with a random ratio
        ratio = rng.uniform(0.5, 1.0)
        values = spec.hi*ratio**np.arange(spec.n)*rng.uniform(0.5, 1.0)
    # sort into non-increasing order and clamp into the box
    values = np.clip(np.sort(values)[::-1], spec.lo, spec.hi)
    if (spec.direction == NONDECREASING):
        values = values[::-1]
    logging.debug(f'Generated {spec.n:d} values from seed {spec.seed:d}')
    return BoundedMonotoneSeq(np.ascontiguousarray(values),
        direction=spec.direction, lo=spec.lo, hi=spec.hi, tol_mono=0.0)

# PURPOSE: independent seeds for indexed trials
def trial_seed(seed: int, *indices: int):
    """
    Derive a 64-bit seed for an indexed trial from a master seed

    Parameters
    ----------
    seed: int
        master seed
    *indices: int
        trial index and stream identifiers
    """
    ss = np.random.SeedSequence([int(seed), *[int(i) for i in indices]])
    return int(ss.generate_state(1, dtype=np.uint64)[0])
