#!/usr/bin/env python
u"""
reports.py (10/2026)
Verdict records shared by every inequality check

    RatioReport: numerator, denominator, ratio, bound, slack and verdicts
    WitnessTrace: parameter grid of a witness family with per-point gaps

PROGRAM DEPENDENCIES:
    utilities.py: comparison thresholds and serialization

UPDATE HISTORY:
    Written 10/2026
"""
from __future__ import annotations

import dataclasses
import numpy as np
from inequality_toolkit.utilities import threshold, to_serializable

@dataclasses.dataclass(frozen=True)
class RatioReport:
    """
    Verdict of a single inequality check

    The checked statement always reads ``lower <= ratio <= bound``; one-sided
    checks leave ``lower`` unset.  ``slack`` is ``bound - ratio``.
    """
    functional: str
    numerator: float
    denominator: float
    ratio: float
    bound: float
    slack: float
    holds: bool
    equality: bool
    n: int | None = None
    p: float | None = None
    q: float | None = None
    lower: float | None = None
    lower_slack: float | None = None
    box: dict | None = None
    extra: dict = dataclasses.field(default_factory=dict)

    def to_dict(self):
        """Returns the report in its JSON schema
        """
        d = dict(functional=self.functional, n=self.n, p=self.p)
        if self.q is not None:
            d['q'] = self.q
        d.update(numerator=self.numerator, denominator=self.denominator,
            ratio=self.ratio, bound=self.bound, slack=self.slack,
            holds=self.holds, equality=self.equality)
        if self.lower is not None:
            d.update(lower=self.lower, lower_slack=self.lower_slack)
        if self.box is not None:
            d['box'] = self.box
        if self.extra:
            d['extra'] = self.extra
        return to_serializable(d)

# PURPOSE: build a report computing slack and verdicts
def make_report(functional: str, numerator: float, denominator: float,
    ratio: float, bound: float, lower: float | None = None,
    tol: float | None = None, **kwargs):
    """
    Build a ``RatioReport`` for ``lower <= ratio <= bound``

    Parameters
    ----------
    functional: str
        name of the checked functional
    numerator: float
        numerator (or left-hand side) of the check
    denominator: float
        denominator (or right-hand side) of the check
    ratio: float
        checked value
    bound: float
        upper bound of the check
    lower: float or NoneType, default None
        lower bound of a two-sided check
    tol: float or NoneType, default None
        relative comparison tolerance (packaged ``tol_cmp`` if None)
    **kwargs: dict
        remaining ``RatioReport`` fields
    """
    ratio = float(ratio)
    bound = float(bound)
    slack = bound - ratio
    upper_threshold = threshold(bound, tol)
    holds = bool(slack >= -upper_threshold)
    equality = bool(abs(slack) <= upper_threshold)
    lower_slack = None
    if lower is not None:
        lower = float(lower)
        lower_slack = ratio - lower
        lower_threshold = threshold(lower, tol)
        holds &= bool(lower_slack >= -lower_threshold)
        equality |= bool(abs(lower_slack) <= lower_threshold)
    return RatioReport(functional=functional, numerator=float(numerator),
        denominator=float(denominator), ratio=ratio, bound=bound,
        slack=slack, holds=holds, equality=equality, lower=lower,
        lower_slack=lower_slack, **kwargs)

@dataclasses.dataclass(frozen=True)
class TracePoint:
    param: float
    ratio: float
    bound: float
    gap: float

@dataclasses.dataclass(frozen=True)
class WitnessTrace:
    """
    Convergence evidence of a witness family over a parameter grid
    """
    family: str
    parameter: str
    points: tuple
    p: float | None = None

    @property
    def params(self):
        return np.array([pt.param for pt in self.points])

    @property
    def ratios(self):
        return np.array([pt.ratio for pt in self.points])

    @property
    def gaps(self):
        return np.array([pt.gap for pt in self.points])

    def is_monotone(self, field: str = 'gap', increasing: bool = False,
        strict: bool = True):
        """
        Check that a column of the trace is monotone along the grid

        Parameters
        ----------
        field: str, default 'gap'
            ``'gap'`` or ``'ratio'``
        increasing: bool, default False
            direction of monotonicity
        strict: bool, default True
            require strict monotonicity
        """
        values = self.gaps if (field == 'gap') else self.ratios
        delta = np.diff(values) if increasing else -np.diff(values)
        return bool(np.all(delta > 0)) if strict else bool(np.all(delta >= 0))

    def gap_monotone(self, strict: bool = True):
        """Gap to the sharp constant decreases along the grid
        """
        return self.is_monotone('gap', increasing=False, strict=strict)

    def rows(self):
        """Returns CSV rows (param, ratio, bound, gap)
        """
        return [(pt.param, pt.ratio, pt.bound, pt.gap) for pt in self.points]

    def to_dict(self):
        """Returns the trace in its JSON schema
        """
        return to_serializable(dict(family=self.family,
            parameter=self.parameter, p=self.p,
            points=[dataclasses.asdict(pt) for pt in self.points]))
