#!/usr/bin/env python
u"""
series.py (10/2026)
Alternating series identities: the Dirichlet eta function, zeta recovered
    from eta, the function F(alpha, beta) and the harmonic and geometric
    series inequalities

    eta(s) = sum_k (-1)^(k+1) k^(-s) = (1 - 2^(1-s)) zeta(s), s > 0
    F(alpha, beta) = eta(q alpha)^(1/q) eta(p beta)^(1/p) / eta(alpha+beta)

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org

PROGRAM DEPENDENCIES:
    classical.py: conjugate exponents
    reports.py: verdict records shared by every inequality check
    seqcore.py: paired alternating sums
    utilities.py: tolerances

REFERENCES:
    H. Cohen, F. Rodriguez Villegas and D. Zagier, "Convergence acceleration
        of alternating series", Experimental Mathematics, 9(1), (2000).

UPDATE HISTORY:
    Updated 10/2026: flag geometric checks whose series cross-check disagrees
    Written 10/2026
"""
from __future__ import annotations

import math
import logging
import dataclasses
import numpy as np
from inequality_toolkit.classical import ConjugateExponents
from inequality_toolkit.reports import make_report
from inequality_toolkit.seqcore import alt_sum
from inequality_toolkit.utilities import default

# convergence rate of the Chebyshev acceleration
_RATE = 3.0 + math.sqrt(8.0)
# smallest supported series tolerance
_MIN_TOL = 1e-14
# brute-force partial sums are accumulated in chunks of this many terms
_CHUNK = 1_000_000

@dataclasses.dataclass(frozen=True)
class EtaResult:
    """
    Value of the Dirichlet eta function with its error estimate
    """
    s: float
    value: float
    est_error: float
    terms_used: int

def _series_tol(tol: float | None):
    tol = default('tol_series') if tol is None else float(tol)
    if (tol < _MIN_TOL):
        raise ValueError(f'Series tolerance {tol} is below {_MIN_TOL}')
    return tol

# PURPOSE: number of accelerated terms for a target tolerance
def eta_terms(tol: float):
    """
    Smallest term count with ``2/(3+sqrt(8))^n <= tol/4``
    """
    return int(math.ceil(math.log(8.0/tol)/math.log(_RATE)))

# PURPOSE: Dirichlet eta function by Chebyshev acceleration
def eta(s: float, tol: float | None = None):
    """
    Dirichlet eta function for real ``s > 0``

    The accelerated sum of Cohen, Rodriguez Villegas and Zagier has
    relative error below ``2/(3+sqrt(8))^n`` because ``(k+1)^(-s)`` are the
    moments of a positive weight on [0, 1]

    Parameters
    ----------
    s: float
        real argument
    tol: float or NoneType, default None
        absolute tolerance (packaged ``tol_series`` if None)

    Returns
    -------
    result: EtaResult
        value, error estimate and number of terms
    """
    if not (s > 0):
        raise ValueError(f'Eta is evaluated for s > 0 only, got s={s}')
    tol = _series_tol(tol)
    n = eta_terms(tol)
    d = _RATE**n
    d = 0.5*(d + 1.0/d)
    b, c = -1.0, -d
    terms = []
    for k in range(n):
        c = b - c
        terms.append(c*(k + 1.0)**(-s))
        b = (k + n)*(k - n)*b/((k + 0.5)*(k + 1.0))
    value = math.fsum(terms)/d
    est_error = 2.0*abs(value)/_RATE**n
    if (est_error > tol):
        raise ArithmeticError(f'eta({s}) error estimate {est_error} exceeds {tol}')
    logging.debug(f'eta({s:g}) = {value:.17g} from {n:d} terms')
    return EtaResult(float(s), value, est_error, n)

# PURPOSE: paired brute-force partial sum with remainder bound
def eta_partial(s: float, terms: int):
    """
    Partial sum of the eta series evaluated in paired form

    Parameters
    ----------
    s: float
        real argument
    terms: int
        number of terms (rounded up to an even count)

    Returns
    -------
    result: EtaResult
        partial sum bounded from the limit by the first omitted term
    """
    if not (s > 0):
        raise ValueError(f'Eta is evaluated for s > 0 only, got s={s}')
    if (terms < 1):
        raise ValueError(f'Invalid number of terms {terms}')
    terms = int(terms) + (int(terms) % 2)
    partial = []
    for start in range(1, terms + 1, _CHUNK):
        stop = min(start + _CHUNK, terms + 1)
        k = np.arange(start, stop, dtype=np.float64)
        partial.append(alt_sum(np.power(k, -s)))
    value = math.fsum(partial)
    return EtaResult(float(s), value, (terms + 1.0)**(-s), terms)

# PURPOSE: Riemann zeta function recovered from eta
def zeta_from_eta(s: float, tol: float | None = None):
    """
    Riemann zeta ``eta(s)/(1 - 2^(1-s))`` for real ``s > 0``, ``s != 1``

    Parameters
    ----------
    s: float
        real argument away from the pole at 1
    tol: float or NoneType, default None
        absolute tolerance of eta
    """
    if not (s > 0):
        raise ValueError(f'Zeta is recovered for s > 0 only, got s={s}')
    if (abs(s - 1.0) < 1e-6):
        raise ValueError(f's={s} is within 1e-6 of the pole at 1')
    # 1 - 2^(1-s) without cancellation near the pole
    factor = -math.expm1((1.0 - s)*math.log(2.0))
    return eta(s, tol).value/factor

# PURPOSE: function attaining its maximum 1 on q*alpha = p*beta
def F_func(alpha: float, beta: float, pq: ConjugateExponents,
    tol: float | None = None):
    """
    ``F = eta(q alpha)^(1/q) eta(p beta)^(1/p) / eta(alpha+beta)``

    Parameters
    ----------
    alpha: float
        positive argument
    beta: float
        positive argument
    pq: ConjugateExponents
        conjugate exponents
    tol: float or NoneType, default None
        absolute tolerance of eta
    """
    if not (alpha > 0) or not (beta > 0):
        raise ValueError(f'F needs alpha, beta > 0, got {alpha}, {beta}')
    numerator = eta(pq.q*alpha, tol).value**(1.0/pq.q) * \
        eta(pq.p*beta, tol).value**(1.0/pq.p)
    return numerator/eta(alpha + beta, tol).value

def harmonic_ineq_check(alpha: float, beta: float, pq: ConjugateExponents,
    tol: float | None = None):
    """
    Check ``eta(q alpha)^(1/q) eta(p beta)^(1/p) <= eta(alpha+beta)``
    within twice the series tolerance

    Parameters
    ----------
    alpha: float
        positive argument
    beta: float
        positive argument
    pq: ConjugateExponents
        conjugate exponents
    tol: float or NoneType, default None
        absolute tolerance of eta
    """
    tol = _series_tol(tol)
    F = F_func(alpha, beta, pq, tol)
    rhs = eta(alpha + beta, tol).value
    return make_report('harmonic', F*rhs, rhs, F, 1.0, tol=2.0*tol, p=pq.p,
        q=pq.q, extra=dict(alpha=alpha, beta=beta))

# PURPOSE: alternating geometric series sum_k (-1)^(k+1) x^(-k)
def geometric_series(x: float, terms: int = 200):
    """
    Truncated alternating geometric series in ``1/x`` with its exact tail

    Parameters
    ----------
    x: float
        base greater than 1
    terms: int, default 200
        number of explicitly summed terms
    """
    r = 1.0/x
    partial = alt_sum(np.power(r, np.arange(1, terms + 1)))
    tail = (-1.0)**terms*r**(terms + 1)/(1.0 + r)
    return partial + tail

def geometric_ineq_check(a: float, b: float, pq: ConjugateExponents,
    tol: float | None = None, terms: int = 200):
    """
    Check ``(1+a^q)^(-1/q) (1+b^p)^(-1/p) <= (1+ab)^(-1)`` and cross-check
    both closed forms against truncated series

    The report carries ``series_consistent`` in its extra fields, false when
    either closed form differs from its series by more than ``tol_series``

    Parameters
    ----------
    a: float
        base greater than 1
    b: float
        base greater than 1
    pq: ConjugateExponents
        conjugate exponents
    tol: float or NoneType, default None
        relative comparison tolerance
    terms: int, default 200
        truncation of the series cross-check
    """
    if not (a > 1) or not (b > 1):
        raise ValueError(f'Geometric inequality needs a, b > 1, got {a}, {b}')
    aq, bp = a**pq.q, b**pq.p
    lhs = (1.0 + aq)**(-1.0/pq.q)*(1.0 + bp)**(-1.0/pq.p)
    rhs = 1.0/(1.0 + a*b)
    # series forms of each side
    lhs_series = geometric_series(aq, terms)**(1.0/pq.q) * \
        geometric_series(bp, terms)**(1.0/pq.p)
    rhs_series = geometric_series(a*b, terms)
    delta = max(abs(lhs - lhs_series), abs(rhs - rhs_series))
    consistent = bool(delta <= default('tol_series'))
    if not consistent:
        logging.warning(f'Geometric closed forms differ from series by {delta:.3g}')
    return make_report('geometric', lhs, rhs, lhs, rhs, tol=tol, p=pq.p,
        q=pq.q, extra=dict(a=a, b=b, series_delta=delta,
        series_consistent=consistent))

# PURPOSE: grid scan of F(alpha, beta) over several exponents
def F_scan(alphas, betas, p_list, tol: float | None = None):
    """
    Evaluate ``F(alpha, beta)`` over a grid of arguments and exponents

    Parameters
    ----------
    alphas: list
        positive alpha values
    betas: list
        positive beta values
    p_list: list
        exponents p > 1
    tol: float or NoneType, default None
        absolute tolerance of eta

    Returns
    -------
    rows: list
        ``(alpha, beta, p, F, slack)`` per grid point in grid order
    summary: dict
        maximum of F with its location, number of violations of
        ``F <= 1 + 2 tol`` and the equality statistics on ``q alpha = p beta``
    """
    tol = _series_tol(tol)
    rows = []
    summary = dict(max_F=-np.inf, argmax=None, violations=0,
        equality_points=0, locus_points=0, locus_equalities=0)
    for p in p_list:
        pq = ConjugateExponents(p)
        for alpha in alphas:
            for beta in betas:
                F = F_func(alpha, beta, pq, tol)
                rows.append((alpha, beta, pq.p, F, 1.0 - F))
                if (F > summary['max_F']):
                    summary['max_F'] = F
                    summary['argmax'] = dict(alpha=alpha, beta=beta, p=pq.p)
                summary['violations'] += int(F > 1.0 + 2.0*tol)
                equal = bool(abs(1.0 - F) <= 2.0*tol)
                summary['equality_points'] += int(equal)
                if math.isclose(pq.q*alpha, pq.p*beta, rel_tol=1e-12):
                    summary['locus_points'] += 1
                    summary['locus_equalities'] += int(equal)
    logging.info(f'F scan of {len(rows):d} points: max F = {summary["max_F"]:.17g}')
    return rows, summary
