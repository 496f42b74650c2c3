#!/usr/bin/env python
u"""
ratios.py (10/2026)
Alternating Hölder, Cauchy and Minkowski ratio functionals with their sharp
    constants, the witness families demonstrating sharpness, the alternating
    quasi-norm for 0 < p < 1 and the classical positive-term and Jensen-type
    theorems used as oracles

    holder_ratio:          (S(a^q))^(1/q) (S(b^p))^(1/p) / S(ab) <= C_ab
    cauchy_ratio:          S(a^2) S(b^2) / S(ab)^2 <= c_ab^2
    minkowski_alt_ratio:   (S(a^p)^(1/p) + S(b^p)^(1/p)) / S((a+b)^p)^(1/p)
                               <= 2^(1-1/p)
    reverse_minkowski_ratio: 1 <= (|a|_p + |b|_p) / |a+b|_p <= 2^(1-1/p)
    where S denotes the alternating sum of a non-increasing sequence

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org

PROGRAM DEPENDENCIES:
    classical.py: conjugate exponents
    reports.py: verdict records shared by every inequality check
    seqcore.py: validated sequences and alternating sums
    utilities.py: tolerances and exceptions

UPDATE HISTORY:
    Written 10/2026
"""
from __future__ import annotations

import math
import logging
import dataclasses
from typing import Callable
import numpy as np
from inequality_toolkit.classical import ConjugateExponents
from inequality_toolkit.reports import (make_report, TracePoint,
    WitnessTrace, RatioReport)
from inequality_toolkit.seqcore import (Seq, BoundedMonotoneSeq, alt_sum,
    validate_monotone, nonincreasing, NONINCREASING)
from inequality_toolkit.utilities import (HypothesisError,
    QuotientNotMonotone, NonPositiveInnerSum, check_denominator, threshold,
    default)

@dataclasses.dataclass(frozen=True)
class BoundsBox:
    """
    Box bounds ``a_lo <= a_k <= a_hi`` and ``b_lo <= b_k <= b_hi``
    """
    a_lo: float
    a_hi: float
    b_lo: float
    b_hi: float

    def __post_init__(self):
        if not (0 <= self.a_lo <= self.a_hi) or not (0 <= self.b_lo <= self.b_hi):
            raise HypothesisError(f'Invalid bounds box {self}')

    @property
    def positive(self):
        return (self.a_lo > 0) and (self.b_lo > 0)

    def require_positive(self):
        if not self.positive:
            raise HypothesisError(f'Degenerate box with zero lower bound {self}')

    def contains(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        return bool(np.all((a >= self.a_lo) & (a <= self.a_hi)) and
            np.all((b >= self.b_lo) & (b <= self.b_hi)))

    def rescale(self, lam: float, mu: float):
        return BoundsBox(lam*self.a_lo, lam*self.a_hi, mu*self.b_lo, mu*self.b_hi)

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_sequences(cls, a, b):
        """Tight box of a pair of sequences
        """
        a, b = np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
        return cls(float(a.min()), float(a.max()), float(b.min()), float(b.max()))

@dataclasses.dataclass(frozen=True)
class QuotientBox:
    """
    Quotient bounds ``m <= a_k/b_k <= M``
    """
    m: float
    M: float

    def __post_init__(self):
        if not (self.m > 0):
            raise ValueError(f'Quotient lower bound m={self.m} must be positive')
        if not (self.M >= self.m) or not np.isfinite(self.M):
            raise ValueError(f'Invalid quotient box [{self.m}, {self.M}]')

    @classmethod
    def from_sequences(cls, a, b):
        quotient = np.asarray(a, dtype=np.float64)/np.asarray(b, dtype=np.float64)
        return cls(float(quotient.min()), float(quotient.max()))

# number of grid points for verifying midpoint convexity of builtins
_CONVEXITY_GRID = 33

@dataclasses.dataclass(frozen=True)
class ConvexFn:
    """
    Convex function on ``[0, x_max]``

    Use the ``power``, ``exponential`` and ``custom`` constructors.
    Builtins are checked for midpoint convexity at construction; custom
    functions carry the caller's assertion in ``declared_convex``.
    """
    fn: Callable
    x_max: float
    kind: str = 'custom'
    declared_convex: bool = True
    p: float | None = None

    def __post_init__(self):
        if not (self.x_max >= 0):
            raise ValueError(f'Invalid domain [0, {self.x_max}]')
        if (self.kind != 'custom') and not self.midpoint_convex():
            raise ValueError(f'{self.kind} function fails midpoint convexity')

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=np.float64))

    def midpoint_convex(self, points: int = _CONVEXITY_GRID):
        """
        Check ``f((x+y)/2) <= (f(x)+f(y))/2`` on all pairs of a uniform grid
        """
        x = np.linspace(0.0, self.x_max, points)
        X, Y = np.meshgrid(x, x)
        fx, fy, fm = self(X), self(Y), self(0.5*(X + Y))
        scale = np.maximum(1.0, np.abs(0.5*(fx + fy)))
        return bool(np.all(fm <= 0.5*(fx + fy) + 1e-12*scale))

    @classmethod
    def power(cls, p: float, x_max: float):
        """``f(x) = x^p`` with p >= 1
        """
        if (p < 1):
            raise ValueError(f'x^p is convex only for p >= 1, got {p}')
        return cls(lambda x: np.power(x, p), x_max, kind='power', p=float(p))

    @classmethod
    def exponential(cls, x_max: float):
        """``f(x) = exp(x) - 1``
        """
        return cls(np.expm1, x_max, kind='exponential')

    @classmethod
    def custom(cls, fn: Callable, x_max: float, declared_convex: bool = True):
        return cls(fn, x_max, kind='custom', declared_convex=declared_convex)

# PURPOSE: coerce input into a validated non-increasing sequence
def _nonincreasing(x, name: str = 'sequence', positive: bool = False):
    if isinstance(x, BoundedMonotoneSeq):
        if (x.direction != NONINCREASING):
            raise HypothesisError(f'{name} must be non-increasing')
    else:
        x = nonincreasing(x)
    if positive and not (x.values.min() > 0):
        raise HypothesisError(f'{name} must be strictly positive')
    return x

def _same_length(a, b):
    if (len(a) != len(b)):
        raise HypothesisError(f'Length mismatch {len(a)} != {len(b)}')

def _box(a, b, box: BoundsBox | None):
    """Tight box of the pair or a validated user box
    """
    if box is None:
        return BoundsBox.from_sequences(a, b)
    if not box.contains(a, b):
        raise HypothesisError(f'Sequences leave the bounds box {box}')
    return box

# PURPOSE: alternating power sum that must be non-negative
def _inner_sum(values, tol: float | None = None, name: str = 'inner sum'):
    total = alt_sum(values)
    if (total < -threshold(np.max(np.abs(values)), tol)):
        raise NonPositiveInnerSum(f'{name} = {total:.6g} is negative')
    return max(total, 0.0)

def _root(x: float, p: float):
    return float(np.power(max(x, 0.0), 1.0/p))

# PURPOSE: constant of the alternating reverse Hölder inequality
def holder_constant(box: BoundsBox, pq: ConjugateExponents):
    """
    Alternating reverse Hölder constant ``A^(q-1)/b + B^(p-1)/a``

    Parameters
    ----------
    box: BoundsBox
        bounds with strictly positive lower bounds
    pq: ConjugateExponents
        conjugate exponents
    """
    box.require_positive()
    C = box.a_hi**(pq.q - 1.0)/box.b_lo + box.b_hi**(pq.p - 1.0)/box.a_lo
    if not (C > 1):
        raise ArithmeticError(f'Hölder constant {C} is not greater than 1')
    return C

# PURPOSE: evaluate the alternating Hölder fraction on raw arrays
def _holder_fraction(a: np.ndarray, b: np.ndarray, pq: ConjugateExponents,
    tol: float | None = None):
    Sa = _inner_sum(np.power(a, pq.q), tol, 'alternating sum of a^q')
    Sb = _inner_sum(np.power(b, pq.p), tol, 'alternating sum of b^p')
    numerator = _root(Sa, pq.q)*_root(Sb, pq.p)
    ab = a*b
    denominator = alt_sum(ab)
    check_denominator(denominator, max(numerator, np.max(ab)), 'holder')
    return numerator, denominator, numerator/denominator

# PURPOSE: alternating reverse Hölder ratio
def holder_ratio(a, b, pq: ConjugateExponents, box: BoundsBox | None = None,
    tol: float | None = None):
    """
    Alternating Hölder fraction against its upper constant

    Parameters
    ----------
    a: BoundedMonotoneSeq or array_like
        positive non-increasing sequence
    b: BoundedMonotoneSeq or array_like
        positive non-increasing sequence
    pq: ConjugateExponents
        conjugate exponents
    box: BoundsBox or NoneType, default None
        bounds for the constant (tight box of the pair if None)
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    a = _nonincreasing(a, 'a', positive=True)
    b = _nonincreasing(b, 'b', positive=True)
    _same_length(a, b)
    box = _box(a.values, b.values, box)
    numerator, denominator, ratio = _holder_fraction(a.values, b.values, pq, tol)
    bound = holder_constant(box, pq)
    return make_report('holder', numerator, denominator, ratio, bound,
        lower=0.0, tol=tol, n=a.n, p=pq.p, q=pq.q, box=box.to_dict())

# PURPOSE: paired-plateau family with a vanishing Hölder fraction
def holder_zero_witness(n_even: int, plateau, b):
    """
    Construct ``a = {a_1,a_1,a_3,a_3,...}`` for which the alternating
    Hölder fraction vanishes exactly

    Parameters
    ----------
    n_even: int
        even length of the sequences
    plateau: array_like
        non-increasing positive plateau values (length n_even/2)
    b: array_like
        positive non-increasing sequence with an unequal adjacent pair

    Returns
    -------
    a: BoundedMonotoneSeq
        sequence of repeated plateau values
    b: BoundedMonotoneSeq
        validated second sequence
    """
    if (n_even < 2) or (n_even % 2):
        raise ValueError(f'Witness length must be even, got {n_even}')
    plateau = _nonincreasing(plateau, 'plateau', positive=True)
    b = _nonincreasing(b, 'b', positive=True)
    if (plateau.n != n_even//2) or (b.n != n_even):
        raise HypothesisError(f'Witness of length {n_even} needs '
            f'{n_even//2} plateau values and {n_even} values of b')
    # the denominator is sum_k a_(2k-1) (b_(2k-1) - b_(2k))
    if np.all(b.values[0::2] == b.values[1::2]):
        raise HypothesisError('b_(2k-1) = b_(2k) for all k is excluded')
    a = nonincreasing(np.repeat(plateau.values, 2), tol_mono=0.0)
    return a, b

# PURPOSE: odd-length family with an unbounded Hölder fraction
def holder_blowup_instance(b_tail: float, gap: float, pairs: int = 1):
    """
    Odd-length instance with ``a = 1``, vanishing last element of b, fixed
    ``b_(2n) = b_tail`` and total paired gap ``gap``

    Parameters
    ----------
    b_tail: float
        fixed value of the last even-indexed element of b
    gap: float
        sum of paired differences b_(2k-1) - b_(2k)
    pairs: int, default 1
        number of pairs n
    """
    step = gap/pairs
    upper = b_tail + step*np.arange(pairs, 0, -1)
    b = np.empty((2*pairs + 1))
    b[0:-1:2] = upper
    b[1:-1:2] = upper - step
    b[-1] = 0.0
    # avoid rounding the smallest pair away from b_tail
    b[-2] = b_tail
    return np.ones((2*pairs + 1)), b

def holder_blowup_trace(pq: ConjugateExponents, b_tail: float, gap_grid,
    pairs: int = 1, tol: float | None = None):
    """
    Trace of the alternating Hölder fraction as the paired gaps shrink

    Parameters
    ----------
    pq: ConjugateExponents
        conjugate exponents
    b_tail: float
        fixed positive value of ``b_(2n)``
    gap_grid: list
        positive strictly decreasing gap sums
    pairs: int, default 1
        number of pairs in each instance
    tol: float or NoneType, default None
        relative comparison tolerance

    Returns
    -------
    trace: WitnessTrace
        fraction (ratio), lower estimate ``p^(1/p)(b_tail/gap)^(1-1/p)``
        (bound) and their difference (gap) per grid point
    """
    gap_grid = np.asarray(gap_grid, dtype=np.float64)
    if not (b_tail > 0):
        raise ValueError(f'b_tail={b_tail} must be positive')
    if (gap_grid.size == 0) or np.any(gap_grid <= 0) or np.any(np.diff(gap_grid) >= 0):
        raise ValueError('Gap grid must be positive and strictly decreasing')
    points = []
    for gap in gap_grid:
        a, b = holder_blowup_instance(b_tail, gap, pairs=pairs)
        _, _, F = _holder_fraction(a, b, pq, tol)
        estimate = pq.p**(1.0/pq.p)*(b_tail/gap)**(1.0 - 1.0/pq.p)
        points.append(TracePoint(float(gap), F, estimate, F - estimate))
        logging.debug(f'holder blowup gap={gap:.3g} F={F:.6g}')
    return WitnessTrace('holder_blowup', 'gap', tuple(points), p=pq.p)

# PURPOSE: constant of the alternating reverse Cauchy inequality
def cauchy_constant(box: BoundsBox):
    """
    Alternating reverse Cauchy constant ``1/2 max(A/a + a/A, B/b + b/B)``

    Parameters
    ----------
    box: BoundsBox
        bounds with strictly positive lower bounds
    """
    box.require_positive()
    ra = box.a_hi/box.a_lo
    rb = box.b_hi/box.b_lo
    return 0.5*max(ra + 1.0/ra, rb + 1.0/rb)

# PURPOSE: alternating reverse Cauchy ratio
def cauchy_ratio(a, b, box: BoundsBox | None = None, tol: float | None = None):
    """
    Alternating Cauchy fraction against the squared constant

    Parameters
    ----------
    a: BoundedMonotoneSeq or array_like
        positive non-increasing sequence
    b: BoundedMonotoneSeq or array_like
        positive non-increasing sequence with monotone quotient a/b
    box: BoundsBox or NoneType, default None
        bounds for the constant (tight box of the pair if None)
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    a = _nonincreasing(a, 'a', positive=True)
    b = _nonincreasing(b, 'b', positive=True)
    _same_length(a, b)
    quotient = a.values/b.values
    tol_mono = default('tol_mono')*quotient.max()
    if not (validate_monotone(quotient, 'non-increasing', tol_mono) or
        validate_monotone(quotient, 'non-decreasing', tol_mono)):
        raise QuotientNotMonotone('Quotient a_k/b_k is not monotone')
    box = _box(a.values, b.values, box)
    Sa = _inner_sum(a.values**2, tol, 'alternating sum of a^2')
    Sb = _inner_sum(b.values**2, tol, 'alternating sum of b^2')
    ab = a.values*b.values
    Sab = alt_sum(ab)
    check_denominator(Sab, max(np.sqrt(Sa*Sb), np.max(ab)), 'cauchy')
    numerator = Sa*Sb
    denominator = Sab**2
    bound = cauchy_constant(box)**2
    return make_report('cauchy', numerator, denominator,
        numerator/denominator, bound, lower=0.0, tol=tol, n=a.n, p=2.0,
        q=2.0, box=box.to_dict())

# PURPOSE: constant of the positive-term reverse Cauchy inequality
def zhuang_constant(box: BoundsBox):
    """
    Positive-term reverse Cauchy constant ``1/2 max(A/b + b/A, a/B + B/a)``
    """
    box.require_positive()
    return 0.5*max(box.a_hi/box.b_lo + box.b_lo/box.a_hi,
        box.a_lo/box.b_hi + box.b_hi/box.a_lo)

def zhuang_check(a, b, box: BoundsBox | None = None, tol: float | None = None):
    """
    Check ``1 <= sum(a^2) sum(b^2) / sum(ab)^2 <= zhuang_constant^2``

    Parameters
    ----------
    a: Seq or array_like
        positive sequence (any order)
    b: Seq or array_like
        positive sequence (any order)
    box: BoundsBox or NoneType, default None
        bounds for the constant (tight box of the pair if None)
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    a, b = Seq(a).values, Seq(b).values
    _same_length(a, b)
    box = _box(a, b, box)
    bound = zhuang_constant(box)**2
    numerator = math.fsum(a**2)*math.fsum(b**2)
    denominator = math.fsum(a*b)**2
    check_denominator(denominator, numerator, 'zhuang')
    return make_report('zhuang', numerator, denominator,
        numerator/denominator, bound, lower=1.0, tol=tol, n=a.size, p=2.0,
        q=2.0, box=box.to_dict())

# PURPOSE: alternating Minkowski ratio (reciprocal for 0 < p < 1)
def minkowski_alt_ratio(a, b, p: float, tol: float | None = None):
    """
    Alternating Minkowski fraction against ``2^(1-1/p)`` for p >= 1 or its
    reciprocal against ``2^(1/p-1)`` for 0 < p < 1

    Parameters
    ----------
    a: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    b: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    p: float
        positive exponent
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    if not (p > 0):
        raise ValueError(f'Exponent p={p} must be positive')
    a = _nonincreasing(a, 'a')
    b = _nonincreasing(b, 'b')
    _same_length(a, b)
    ap, bp = np.power(a.values, p), np.power(b.values, p)
    abp = np.power(a.values + b.values, p)
    separate = _root(_inner_sum(ap, tol), p) + _root(_inner_sum(bp, tol), p)
    combined = _inner_sum(abp, tol)
    if (p >= 1):
        check_denominator(combined, np.max(abp), 'minkowski_alt')
        numerator, denominator = separate, _root(combined, p)
        bound = 2.0**(1.0 - 1.0/p)
    else:
        check_denominator(separate, _root(np.max(ap + bp), p), 'minkowski_alt')
        numerator, denominator = _root(combined, p), separate
        bound = 2.0**(1.0/p - 1.0)
    return make_report('minkowski_alt', numerator, denominator,
        numerator/denominator, bound, lower=0.0, tol=tol, n=a.n, p=p,
        extra=dict(reciprocal=bool(p < 1)))

# PURPOSE: termwise monotonicity of f(x,y) = (x+y)^p - x^p - y^p
def difference_monotone(a, b, p: float):
    """
    Check that ``f(a_k,b_k) >= f(a_(k+1),b_(k+1))`` with
    ``f(x,y) = (x+y)^p - x^p - y^p`` for p >= 1 (negated for 0 < p < 1)

    Parameters
    ----------
    a: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    b: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    p: float
        positive exponent
    """
    a = _nonincreasing(a, 'a').values
    b = _nonincreasing(b, 'b').values
    _same_length(a, b)
    f = np.power(a + b, p) - np.power(a, p) - np.power(b, p)
    f = f if (p >= 1) else -f
    tol_mono = 1e-12*max(1.0, np.max(np.abs(f)))
    return validate_monotone(f, NONINCREASING, tol_mono)

# PURPOSE: alternating superadditivity of powers
def alt_superadditivity_check(a, b, p: float, tol: float | None = None):
    """
    Check ``S(a^p + b^p) <= S((a+b)^p)`` for p >= 1 or the reverse for
    0 < p < 1, where S is the alternating sum

    Parameters
    ----------
    a: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    b: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    p: float
        positive exponent
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    if not (p > 0):
        raise ValueError(f'Exponent p={p} must be positive')
    a = _nonincreasing(a, 'a')
    b = _nonincreasing(b, 'b')
    _same_length(a, b)
    separate = alt_sum(np.power(a.values, p) + np.power(b.values, p))
    combined = alt_sum(np.power(a.values + b.values, p))
    lhs, rhs = (separate, combined) if (p >= 1) else (combined, separate)
    return make_report('alt_superadditivity', lhs, rhs, lhs, rhs, tol=tol,
        n=a.n, p=p, extra=dict(reverse=bool(p < 1)))

# PURPOSE: stable (1+b)^p - (1+c)^p with c = (b^p - 1)^(1/p)
def _eps_b_difference(b: float, p: float):
    # b - c without cancellation
    drop = -b*math.expm1(math.log1p(-b**(-p))/p)
    c = b - drop
    return (1.0 + c)**p*math.expm1(p*math.log1p(drop/(1.0 + c)))

# PURPOSE: sequences approaching the alternating Minkowski constant
def minkowski_witness(b: float, p: float, n: int = 3):
    """
    Witness pair ``a = {1,1,1,0,...}`` and ``b = {b, (b^p-1)^(1/p), 0,...}``

    Parameters
    ----------
    b: float
        family parameter greater than 1
    p: float
        positive exponent
    n: int, default 3
        length of the sequences (n >= 3)
    """
    if not (b > 1):
        raise ValueError(f'Family parameter b={b} must exceed 1')
    if (n < 3):
        raise ValueError(f'Witness needs at least three terms, got {n}')
    a = np.zeros((n))
    a[:3] = 1.0
    second = np.zeros((n))
    second[0] = b
    second[1] = (b**p - 1.0)**(1.0/p)
    return nonincreasing(a), nonincreasing(second)

def minkowski_sharpness_trace(p: float, b_grid):
    """
    Trace of ``epsilon_b = 2^(1-1/p) - F_M`` along the witness family

    Parameters
    ----------
    p: float
        exponent p > 1
    b_grid: list
        strictly increasing family parameters greater than 1
    """
    b_grid = np.asarray(b_grid, dtype=np.float64)
    if not (p > 1):
        raise ValueError(f'Sharpness trace needs p > 1, got {p}')
    if (b_grid.size == 0) or np.any(b_grid <= 1) or np.any(np.diff(b_grid) <= 0):
        raise ValueError('Grid entries must exceed 1 and increase strictly')
    bound = 2.0**(1.0 - 1.0/p)
    points = []
    for b in b_grid:
        F = 2.0/(_eps_b_difference(b, p) + 1.0)**(1.0/p)
        points.append(TracePoint(float(b), F, bound, bound - F))
    return WitnessTrace('minkowski_eps_b', 'b', tuple(points), p=p)

# PURPOSE: alternating quasi-norm for 0 < p < 1
def quasi_norm(x, p: float):
    """
    Alternating quasi-norm ``(S(x^p))^(1/p)`` for 0 < p < 1

    Parameters
    ----------
    x: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    p: float
        exponent in (0, 1)
    """
    if not (0 < p < 1):
        raise ValueError(f'Quasi-norm needs 0 < p < 1, got {p}')
    x = _nonincreasing(x, 'x')
    return _root(_inner_sum(np.power(x.values, p)), p)

def quasi_norm_axiom_suite(x, y, p: float, scalars=(0.5, 2.0, 3.0),
    tol: float | None = None):
    """
    Check definiteness, homogeneity and the quasi-triangle inequality with
    ``K = 2^(1/p-1)``

    Parameters
    ----------
    x: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    y: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence of the same length
    p: float
        exponent in (0, 1)
    scalars: list, default (0.5, 2.0, 3.0)
        scalars for the homogeneity axiom
    tol: float or NoneType, default None
        relative comparison tolerance

    Returns
    -------
    reports: list
        definiteness, one homogeneity report per scalar, quasi-triangle
    """
    x = _nonincreasing(x, 'x')
    y = _nonincreasing(y, 'y')
    _same_length(x, y)
    nx, ny = quasi_norm(x, p), quasi_norm(y, p)
    reports = []
    # definiteness: the quasi-norm vanishes exactly on paired plateaus
    # x_(2k-1) = x_(2k), which include the zero sequence
    padded = np.append(x.values, 0.0) if (x.n % 2) else x.values
    null = bool(np.all(padded[0::2] == padded[1::2]))
    zero = bool(np.all(x.values == 0))
    definite = make_report('quasi_norm_definite', nx, 1.0, nx,
        0.0 if null else nx, lower=0.0, tol=tol, n=x.n, p=p,
        extra=dict(zero=zero, paired_plateau=null and not zero))
    reports.append(dataclasses.replace(definite, holds=(nx == 0) == null))
    # absolute homogeneity
    for lam in scalars:
        scaled = quasi_norm(abs(lam)*x.values, p)
        expected = abs(lam)*nx
        reports.append(make_report('quasi_norm_homogeneity', scaled, nx,
            scaled, expected, lower=expected, tol=tol, n=x.n, p=p,
            extra=dict(scalar=lam)))
    # quasi-triangle inequality
    K = 2.0**(1.0/p - 1.0)
    nxy = quasi_norm(x.values + y.values, p)
    denominator = nx + ny
    ratio = nxy/denominator if (denominator > 0) else 0.0
    reports.append(make_report('quasi_norm_triangle', nxy, denominator,
        ratio, K, lower=0.0, tol=tol, n=x.n, p=p,
        extra=dict(degenerate=bool(denominator == 0))))
    return reports

def quasi_triangle_trace(p: float, b_grid):
    """
    Trace of ``K - |a+b|/(|a|+|b|)`` along the witness family for
    0 < p < 1, approaching ``K = 2^(1/p-1)``

    Parameters
    ----------
    p: float
        exponent in (0, 1)
    b_grid: list
        strictly increasing family parameters greater than 1
    """
    b_grid = np.asarray(b_grid, dtype=np.float64)
    if not (0 < p < 1):
        raise ValueError(f'Quasi-triangle trace needs 0 < p < 1, got {p}')
    if (b_grid.size == 0) or np.any(b_grid <= 1) or np.any(np.diff(b_grid) <= 0):
        raise ValueError('Grid entries must exceed 1 and increase strictly')
    K = 2.0**(1.0/p - 1.0)
    points = []
    for b in b_grid:
        # both witnesses have unit quasi-norm
        ratio = (_eps_b_difference(b, p) + 1.0)**(1.0/p)/2.0
        points.append(TracePoint(float(b), ratio, K, K - ratio))
    return WitnessTrace('quasi_triangle_eps_b', 'b', tuple(points), p=p)

# PURPOSE: reverse Minkowski ratio for non-negative terms
def reverse_minkowski_ratio(a, b, p: float, tol: float | None = None):
    """
    Check ``1 <= (|a|_p + |b|_p)/|a+b|_p <= 2^(1-1/p)``

    Parameters
    ----------
    a: Seq or array_like
        non-negative sequence (any order)
    b: Seq or array_like
        non-negative sequence (any order)
    p: float
        exponent p >= 1
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    if (p < 1):
        raise ValueError(f'Reverse Minkowski needs p >= 1, got {p}')
    a, b = Seq(a).values, Seq(b).values
    _same_length(a, b)
    numerator = _root(math.fsum(np.power(a, p)), p) + \
        _root(math.fsum(np.power(b, p)), p)
    combined = math.fsum(np.power(a + b, p))
    check_denominator(combined, 0.0, 'reverse_minkowski')
    denominator = _root(combined, p)
    return make_report('reverse_minkowski', numerator, denominator,
        numerator/denominator, 2.0**(1.0 - 1.0/p), lower=1.0, tol=tol,
        n=a.size, p=p)

def reverse_minkowski_witness(n: int, p: float):
    """
    Witness pair with n unit terms and ``b = {n^(1/p), 0, ...}``
    """
    if (int(n) != n) or (n < 1):
        raise ValueError(f'Witness length must be a positive integer, got {n}')
    b = np.zeros((int(n)))
    b[0] = float(n)**(1.0/p)
    return np.ones((int(n))), b

def reverse_minkowski_family_value(n: int, p: float):
    """
    Closed form ``2 (1 - 1/n + (1 + n^(-1/p))^p)^(-1/p)``
    """
    if (p == 1):
        return 1.0
    t = float(n)**(-1.0/p)
    # (1+t)^p - 1 - t^p without cancellation
    excess = math.expm1(p*math.log1p(t)) - t**p
    return 2.0*(2.0 + excess)**(-1.0/p)

def reverse_minkowski_sharpness_trace(p: float, n_grid):
    """
    Trace of ``epsilon_n = 2^(1-1/p) - ratio`` along the witness family

    Parameters
    ----------
    p: float
        exponent p >= 1
    n_grid: list
        strictly increasing positive integers
    """
    n_grid = np.asarray(n_grid)
    if (p < 1):
        raise ValueError(f'Sharpness trace needs p >= 1, got {p}')
    if (n_grid.size == 0) or np.any(n_grid < 1) or \
        np.any(n_grid != np.round(n_grid)) or np.any(np.diff(n_grid) <= 0):
        raise ValueError('Grid must hold strictly increasing positive integers')
    bound = 2.0**(1.0 - 1.0/p)
    points = []
    for n in n_grid:
        value = reverse_minkowski_family_value(int(n), p)
        points.append(TracePoint(float(n), value, bound, bound - value))
    return WitnessTrace('reverse_minkowski_eps_n', 'n', tuple(points), p=p)

# PURPOSE: two-sided bracket of a ratio of alternating power means
def power_ratio_bracket(x, r: int, R: int, box: BoundsBox | None = None,
    tol: float | None = None):
    """
    Check ``1 <= S(x^R)^(1/R) / S(x^r)^(1/r) <= (1/x_lo)(1 + x_hi^R)^(1/r)``
    for odd-length sequences

    Parameters
    ----------
    x: BoundedMonotoneSeq or array_like
        positive non-increasing sequence of odd length
    r: int
        smaller positive integer exponent
    R: int
        larger positive integer exponent
    box: BoundsBox or NoneType, default None
        bounds of x in the ``a`` fields (tight if None)
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    if (int(r) != r) or (int(R) != R) or (r < 1):
        raise ValueError(f'Exponents must be positive integers, got {r}, {R}')
    if (r > R):
        raise ValueError(f'Exponents need r <= R, got {r} > {R}')
    x = _nonincreasing(x, 'x', positive=True)
    if not (x.n % 2):
        raise HypothesisError(f'Power-ratio bracket needs odd length, got {x.n}')
    box = _box(x.values, x.values, box)
    box.require_positive()
    high = _root(_inner_sum(np.power(x.values, R), tol), R)
    low_sum = _inner_sum(np.power(x.values, r), tol)
    check_denominator(low_sum, np.max(x.values)**r, 'power_ratio')
    low = _root(low_sum, r)
    bound = (1.0 + box.a_hi**R)**(1.0/r)/box.a_lo
    return make_report('power_ratio', high, low, high/low, bound, lower=1.0,
        tol=tol, n=x.n, p=R/r, extra=dict(r=int(r), R=int(R)))

def _convex_on(f: ConvexFn, upper: float):
    if not f.declared_convex:
        raise HypothesisError('Function is not declared convex')
    if (f.x_max < upper):
        raise HypothesisError(f'Function domain [0, {f.x_max}] does not '
            f'cover [0, {upper}]')

# PURPOSE: Jensen-type inequality for odd-length alternating sums
def szego_check(b, f: ConvexFn, tol: float | None = None):
    """
    Check ``f(S(b)) <= S(f(b))`` for odd-length non-increasing b and
    convex f on ``[0, b_1]``

    Parameters
    ----------
    b: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence of odd length
    f: ConvexFn
        convex function
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    b = _nonincreasing(b, 'b')
    if not (b.n % 2):
        raise HypothesisError(f'Szegő inequality needs odd length, got {b.n}')
    _convex_on(f, b.values[0])
    lhs = float(f(alt_sum(b)))
    rhs = alt_sum(f(b.values))
    return make_report('szego', lhs, rhs, lhs, rhs, tol=tol, n=b.n, p=f.p,
        extra=dict(kind=f.kind))

def weinberger_check(b, p: float, tol: float | None = None):
    """
    Check ``S(b)^p <= S(b^p)`` for odd-length non-increasing b and p >= 1
    """
    b = _nonincreasing(b, 'b')
    report = szego_check(b, ConvexFn.power(p, b.values[0]), tol=tol)
    return dataclasses.replace(report, functional='weinberger')

def bellman_check(b, f: ConvexFn, tol: float | None = None):
    """
    Check ``f(S(b)) <= S(f(b))`` for even-length non-increasing b and convex
    f with ``f(0) <= 0``
    """
    b = _nonincreasing(b, 'b')
    if (b.n % 2):
        raise HypothesisError(f'Bellman inequality needs even length, got {b.n}')
    _convex_on(f, b.values[0])
    if (float(f(0.0)) > 0):
        raise HypothesisError('Bellman inequality needs f(0) <= 0')
    lhs = float(f(alt_sum(b)))
    rhs = alt_sum(f(b.values))
    return make_report('bellman', lhs, rhs, lhs, rhs, tol=tol, n=b.n, p=f.p,
        extra=dict(kind=f.kind))

# PURPOSE: weighted Jensen-type inequality for alternating sums
def brunk_olkin_check(w, b, f: ConvexFn, tol: float | None = None):
    """
    Check ``f(S(wb)) <= (1 - S(w)) f(0) + S(w f(b))`` for weights
    ``0 <= w_n <= ... <= w_1 <= 1``

    Parameters
    ----------
    w: BoundedMonotoneSeq or array_like
        non-increasing weights in [0, 1]
    b: BoundedMonotoneSeq or array_like
        non-negative non-increasing sequence
    f: ConvexFn
        convex function on ``[0, b_1]``
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    w = _nonincreasing(w, 'w')
    b = _nonincreasing(b, 'b')
    _same_length(w, b)
    if (w.values[0] > 1):
        raise HypothesisError(f'Weights must not exceed 1, got w_1={w.values[0]}')
    _convex_on(f, b.values[0])
    Sw = alt_sum(w)
    lhs = float(f(alt_sum(w.values*b.values)))
    rhs = (1.0 - Sw)*float(f(0.0)) + alt_sum(w.values*f(b.values))
    return make_report('brunk_olkin', lhs, rhs, lhs, rhs, tol=tol, n=b.n,
        p=f.p, extra=dict(kind=f.kind))

# PURPOSE: constant of the quotient-bounded reverse Minkowski inequality
def bougoffa_constant(qb: QuotientBox):
    """
    Quotient-bounded reverse Minkowski constant ``1 + 1/(m+1) - 1/(M+1)``
    """
    return 1.0 + 1.0/(qb.m + 1.0) - 1.0/(qb.M + 1.0)

def bougoffa_check(a, b, p: float, qb: QuotientBox | None = None,
    tol: float | None = None):
    """
    Check ``|a|_p + |b|_p <= C_mM |a+b|_p`` for positive sequences with
    ``m <= a_k/b_k <= M``

    Parameters
    ----------
    a: Seq or array_like
        positive sequence (any order)
    b: Seq or array_like
        positive sequence (any order)
    p: float
        exponent p >= 1
    qb: QuotientBox or NoneType, default None
        quotient bounds (tight if None)
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    report = reverse_minkowski_ratio(a, b, p, tol=tol)
    a, b = Seq(a).values, Seq(b).values
    if not (a.min() > 0) or not (b.min() > 0):
        raise HypothesisError('Quotient bounds need positive sequences')
    if qb is None:
        qb = QuotientBox.from_sequences(a, b)
    quotient = a/b
    if np.any(quotient < qb.m) or np.any(quotient > qb.M):
        raise HypothesisError(f'Quotients leave [{qb.m}, {qb.M}]')
    C = bougoffa_constant(qb)
    return make_report('bougoffa', report.numerator, report.denominator,
        report.ratio, C, lower=1.0, tol=tol, n=a.size, p=p,
        extra=dict(m=qb.m, M=qb.M, minkowski_bound=report.bound))

# PURPOSE: exponent below which 2^(1-1/p) beats the quotient constant
def crossover_exponent(qb: QuotientBox):
    """
    Exponent ``p* = ln 2/(ln 2 - ln C_mM)`` below which ``2^(1-1/p)`` is the
    smaller reverse Minkowski constant

    Parameters
    ----------
    qb: QuotientBox
        quotient bounds
    """
    C = bougoffa_constant(qb)
    if (C >= 2):
        raise ValueError(f'Quotient constant {C} outside [1, 2)')
    if (C == 1):
        logging.info('Quotient constant equals 1: empty advantage interval')
    return math.log(2.0)/(math.log(2.0) - math.log(C))
