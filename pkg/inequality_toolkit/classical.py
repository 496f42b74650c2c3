#!/usr/bin/env python
u"""
classical.py (10/2026)
Two-point inequalities for alpha, beta >= 0 used as standalone checks and as
    oracles for the alternating ratio functionals

    Jensen:          (a+b)^p <= 2^(p-1) (a^p+b^p), p >= 1 (reversed for 0<p<1)
    Young:           ab <= a^p/p + b^q/q, 1/p + 1/q = 1
    power bracket:   p b^(p-1) (a-b) <= a^p - b^p <= p a^(p-1) (a-b), a >= b
    superadditivity: a^p + b^p <= (a+b)^p, p >= 1

Every check reports ``ratio <= bound`` with the smaller side as ``ratio``

NOTES:
    0^0 evaluates to 1 (numpy power convention) wherever it is reached

PROGRAM DEPENDENCIES:
    reports.py: verdict records shared by every inequality check

UPDATE HISTORY:
    Written 10/2026
"""
from __future__ import annotations

import dataclasses
import numpy as np
from inequality_toolkit.reports import make_report

@dataclasses.dataclass(frozen=True)
class ConjugateExponents:
    """
    Conjugate Hölder exponents with ``1/p + 1/q = 1``

    Parameters
    ----------
    p: float
        exponent greater than 1
    """
    p: float
    q: float = dataclasses.field(init=False)

    def __post_init__(self):
        p = float(self.p)
        if not (p > 1) or not np.isfinite(p):
            raise ValueError(f'Conjugate exponents need p > 1, got {p}')
        q = p/(p - 1.0)
        if abs(1.0/p + 1.0/q - 1.0) > 1e-12:
            raise ValueError(f'Cannot form conjugate exponent for p={p}')
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

@dataclasses.dataclass(frozen=True)
class TwoPointCase:
    """
    Arguments of a two-point inequality

    Parameters
    ----------
    alpha: float
        first non-negative argument
    beta: float
        second non-negative argument
    p: float
        positive exponent
    """
    alpha: float
    beta: float
    p: float

    def __post_init__(self):
        for name in ('alpha','beta'):
            value = float(getattr(self, name))
            if not np.isfinite(value) or (value < 0):
                raise ValueError(f'{name}={value} must be finite and non-negative')
        if not (self.p > 0):
            raise ValueError(f'Exponent p={self.p} must be positive')

def _power(x: float, y: float):
    return float(np.power(np.float64(x), np.float64(y)))

# PURPOSE: Jensen's two-point inequality and its reverse
def jensen_check(c: TwoPointCase, tol: float | None = None):
    """
    Check ``(alpha+beta)^p <= 2^(p-1)(alpha^p+beta^p)`` for p >= 1 or the
    reverse inequality for 0 < p < 1

    Parameters
    ----------
    c: TwoPointCase
        arguments and exponent
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    if not (c.p > 0):
        raise ValueError(f'Exponent p={c.p} must be positive')
    power_mean = _power(2.0, c.p - 1.0)*(_power(c.alpha, c.p) + _power(c.beta, c.p))
    power_sum = _power(c.alpha + c.beta, c.p)
    if (c.p >= 1):
        lhs, rhs = power_sum, power_mean
    else:
        lhs, rhs = power_mean, power_sum
    return make_report('jensen', lhs, rhs, lhs, rhs, tol=tol, p=c.p,
        extra=dict(alpha=c.alpha, beta=c.beta, reverse=bool(c.p < 1)))

# PURPOSE: Young's inequality for conjugate exponents
def young_check(alpha: float, beta: float, pq: ConjugateExponents,
    tol: float | None = None):
    """
    Check ``alpha*beta <= alpha^p/p + beta^q/q``

    Parameters
    ----------
    alpha: float
        first non-negative argument
    beta: float
        second non-negative argument
    pq: ConjugateExponents
        conjugate exponents
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    TwoPointCase(alpha, beta, pq.p)
    lhs = alpha*beta
    rhs = _power(alpha, pq.p)/pq.p + _power(beta, pq.q)/pq.q
    return make_report('young', lhs, rhs, lhs, rhs, tol=tol, p=pq.p, q=pq.q,
        extra=dict(alpha=alpha, beta=beta))

# PURPOSE: two-sided bracket of a difference of powers
def power_bracket_check(alpha: float, beta: float, p: float,
    tol: float | None = None):
    """
    Check ``p beta^(p-1)(alpha-beta) <= alpha^p - beta^p <= p alpha^(p-1)(alpha-beta)``

    Parameters
    ----------
    alpha: float
        larger argument
    beta: float
        smaller non-negative argument
    p: float
        exponent p >= 1
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    TwoPointCase(alpha, beta, p)
    if (alpha < beta):
        raise ValueError(f'Power bracket needs alpha >= beta, got {alpha} < {beta}')
    if (p < 1):
        raise ValueError(f'Power bracket needs p >= 1, got {p}')
    middle = _power(alpha, p) - _power(beta, p)
    lower = p*_power(beta, p - 1.0)*(alpha - beta)
    upper = p*_power(alpha, p - 1.0)*(alpha - beta)
    return make_report('power_bracket', middle, alpha - beta, middle, upper,
        lower=lower, tol=tol, p=p, extra=dict(alpha=alpha, beta=beta))

# PURPOSE: superadditivity of powers for p >= 1
def superadditivity_check(alpha: float, beta: float, p: float,
    tol: float | None = None):
    """
    Check ``alpha^p + beta^p <= (alpha+beta)^p``

    Parameters
    ----------
    alpha: float
        first non-negative argument
    beta: float
        second non-negative argument
    p: float
        exponent p >= 1
    tol: float or NoneType, default None
        relative comparison tolerance
    """
    if (p < 1):
        raise ValueError(f'Superadditivity needs p >= 1, got {p}')
    TwoPointCase(alpha, beta, p)
    lhs = _power(alpha, p) + _power(beta, p)
    rhs = _power(alpha + beta, p)
    return make_report('superadditivity', lhs, rhs, lhs, rhs, tol=tol, p=p,
        extra=dict(alpha=alpha, beta=beta))
