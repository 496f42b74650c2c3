#!/usr/bin/env python
u"""
extremal.py (10/2026)
Derivative-free search over bounded monotone sequences approaching the sharp
    constants of the ratio functionals

Sequences are parameterized by unconstrained reals: the first coordinate
    places the leading element within the box and the remaining coordinates
    are non-negative drops, so every trial point is feasible by construction.
    Each restart runs a compass search (coordinate pattern search with step
    halving) from a seeded random start.  Maximizing Minkowski searches seed
    their leading restarts from the constructive witness families scaled
    into the box.

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org

PROGRAM DEPENDENCIES:
    classical.py: conjugate exponents
    ratios.py: ratio functionals and sharp constants
    seqcore.py: validated sequences
    utilities.py: tolerances, exceptions and worker counts

UPDATE HISTORY:
    Updated 10/2026: start leading restarts from scaled witness families
    Written 10/2026
"""
from __future__ import annotations

import logging
import dataclasses
import concurrent.futures
import numpy as np
from inequality_toolkit.classical import ConjugateExponents
from inequality_toolkit.ratios import (BoundsBox, holder_ratio,
    holder_constant, cauchy_ratio, cauchy_constant, minkowski_alt_ratio,
    reverse_minkowski_ratio, power_ratio_bracket, minkowski_witness,
    reverse_minkowski_witness, WitnessTrace)
from inequality_toolkit.seqcore import nonincreasing
from inequality_toolkit.utilities import (HypothesisError,
    DegenerateDenominator, NonPositiveInnerSum, threshold, default,
    to_serializable)

# searchable functionals with default boxes for (a, b)
# the second box of the cauchy functional bounds the quotient a/b
DEFAULT_BOXES = dict(
    holder=((0.1, 1.0), (0.1, 1.0)),
    cauchy=((0.1, 1.0), (0.5, 2.0)),
    minkowski_alt=((0.0, 1.0), (0.0, 1.0)),
    reverse_minkowski=((0.0, 1.0), (0.0, 1.0)),
    power_ratio=((0.1, 1.0), (0.1, 1.0)),
)
FUNCTIONALS = tuple(DEFAULT_BOXES.keys())
DIRECTIONS = ('maximize', 'minimize')
# proved lower bounds used when minimizing
_LOWER_BOUNDS = dict(holder=0.0, cauchy=0.0, minkowski_alt=0.0,
    reverse_minkowski=1.0, power_ratio=1.0)
# witness families comparable with each functional
_FAMILIES = dict(minkowski_eps_b='minkowski_alt',
    quasi_triangle_eps_b='minkowski_alt',
    reverse_minkowski_eps_n='reverse_minkowski')
# attempts at drawing a non-degenerate start
_MAX_RESAMPLE = 100
# family parameters of the structured starts
_FAMILY_STARTS = (10.0, 100.0, 1000.0)

@dataclasses.dataclass(frozen=True)
class SearchConfig:
    """
    Configuration of a multi-start extremal search

    Parameters
    ----------
    functional: str
        ``holder``, ``cauchy``, ``minkowski_alt``, ``reverse_minkowski``
        or ``power_ratio``
    direction: str, default 'maximize'
        ``maximize`` or ``minimize``
    n: int, default 6
        sequence length
    p: float, default 2.0
        exponent (conjugate q derived for ``holder``)
    a_box: tuple or NoneType, default None
        bounds of a (functional default if None)
    b_box: tuple or NoneType, default None
        bounds of b, or of the quotient a/b for ``cauchy``
    restarts: int, default 64
        number of seeded random starts
    seed: int, default 0
        master seed of the restarts
    step_init: float, default 0.25
        initial compass step as a fraction of the box width
    step_min: float, default 1e-8
        smallest compass step
    max_evals: int, default 5000
        objective evaluations per restart
    r: int, default 1
        lower exponent of ``power_ratio``
    R: int, default 2
        upper exponent of ``power_ratio``
    """
    functional: str
    direction: str = 'maximize'
    n: int = 6
    p: float = 2.0
    a_box: tuple | None = None
    b_box: tuple | None = None
    restarts: int = 64
    seed: int = 0
    step_init: float = 0.25
    step_min: float = 1e-8
    max_evals: int = 5000
    r: int = 1
    R: int = 2

    def __post_init__(self):
        if self.functional not in FUNCTIONALS:
            raise ValueError(f'Unknown functional {self.functional}')
        if self.direction not in DIRECTIONS:
            raise ValueError(f'Unknown direction {self.direction}')
        if (int(self.n) != self.n) or (self.n < 1):
            raise ValueError(f'Invalid sequence length {self.n}')
        if (self.restarts < 1):
            raise ValueError(f'Need at least one restart, got {self.restarts}')
        if not (0 < self.step_min < self.step_init):
            raise ValueError(f'Need 0 < step_min < step_init, got '
                f'{self.step_min}, {self.step_init}')
        if (self.max_evals < 1):
            raise ValueError(f'Invalid evaluation budget {self.max_evals}')
        a_default, b_default = DEFAULT_BOXES[self.functional]
        a_box = tuple(map(float, a_default if self.a_box is None else self.a_box))
        b_box = tuple(map(float, b_default if self.b_box is None else self.b_box))
        for box in (a_box, b_box):
            if (len(box) != 2) or not (0 <= box[0] <= box[1]) or \
                not np.all(np.isfinite(box)):
                raise ValueError(f'Invalid box {box}')
        object.__setattr__(self, 'a_box', a_box)
        object.__setattr__(self, 'b_box', b_box)
        # hypotheses that the parameterization cannot satisfy
        if self.functional in ('holder','cauchy','power_ratio') and \
            not (a_box[0] > 0 and b_box[0] > 0):
            raise ValueError(f'{self.functional} needs positive lower bounds')
        if (self.functional == 'holder') and not (self.p > 1):
            raise ValueError(f'holder needs p > 1, got {self.p}')
        if (self.functional == 'reverse_minkowski') and (self.p < 1):
            raise ValueError(f'reverse_minkowski needs p >= 1, got {self.p}')
        if not (self.p > 0):
            raise ValueError(f'Exponent p={self.p} must be positive')
        if (self.functional == 'power_ratio'):
            if not (self.n % 2):
                raise ValueError(f'power_ratio needs odd length, got {self.n}')
            if not (1 <= self.r <= self.R):
                raise ValueError(f'Need 1 <= r <= R, got {self.r}, {self.R}')

    @property
    def dimension(self):
        """Number of unconstrained search coordinates
        """
        return self.n if (self.functional == 'power_ratio') else 2*self.n

    @property
    def maximize(self):
        return (self.direction == 'maximize')

    @property
    def bounds_box(self):
        """Box of the pair (a, b) implied by the configuration
        """
        a_lo, a_hi = self.a_box
        if (self.functional == 'cauchy'):
            c_lo, c_hi = self.b_box
            return BoundsBox(a_lo, a_hi, a_lo/c_hi, a_hi/c_lo)
        elif (self.functional == 'power_ratio'):
            return BoundsBox(a_lo, a_hi, a_lo, a_hi)
        return BoundsBox(a_lo, a_hi, *self.b_box)

    def bound(self):
        """Proved constant for the search direction
        """
        if not self.maximize:
            return _LOWER_BOUNDS[self.functional]
        box = self.bounds_box
        if (self.functional == 'holder'):
            return holder_constant(box, ConjugateExponents(self.p))
        elif (self.functional == 'cauchy'):
            return cauchy_constant(box)**2
        elif (self.functional == 'minkowski_alt') and (self.p < 1):
            return 2.0**(1.0/self.p - 1.0)
        elif self.functional in ('minkowski_alt','reverse_minkowski'):
            return 2.0**(1.0 - 1.0/self.p)
        return (1.0 + box.a_hi**self.R)**(1.0/self.r)/box.a_lo

    def to_dict(self):
        return to_serializable(dataclasses.asdict(self))

@dataclasses.dataclass(frozen=True)
class SearchResult:
    """
    Best witness found by a multi-start search
    """
    best_value: float
    witness: tuple
    bound: float
    gap: float
    restart_index: int
    evaluations: int
    history: tuple
    config: SearchConfig

    @property
    def violates(self):
        """Best value beyond the proved bound by more than ``tol_cmp``
        """
        if self.config.maximize:
            return self.best_value > self.bound + threshold(self.bound)
        return self.best_value < self.bound - threshold(self.bound)

    def to_dict(self):
        """Returns the result in its JSON schema
        """
        a, b = self.witness
        return to_serializable(dict(functional=self.config.functional,
            p=self.config.p, n=self.config.n,
            direction=self.config.direction, best_value=self.best_value,
            bound=self.bound, gap=self.gap,
            witness=dict(a=a.to_list(), b=b.to_list()),
            restarts=self.config.restarts, restart_index=self.restart_index,
            evaluations=self.evaluations, seed=self.config.seed))

# PURPOSE: map unconstrained reals onto a bounded non-increasing sequence
def param_to_seq(raw, n: int, lo: float, hi: float):
    """
    Map unconstrained reals to a feasible non-increasing sequence in
    ``[lo, hi]``

    Parameters
    ----------
    raw: array_like
        n unconstrained coordinates
    n: int
        sequence length
    lo: float
        lower bound
    hi: float
        upper bound

    Returns
    -------
    s: BoundedMonotoneSeq
        exactly non-increasing sequence with box ``[lo, hi]``
    """
    raw = np.asarray(raw, dtype=np.float64)
    if (raw.size != n):
        raise ValueError(f'Expected {n:d} coordinates, got {raw.size:d}')
    width = hi - lo
    first = np.clip(0.5*(lo + hi) + raw[0]*width, lo, hi)
    drops = np.cumsum(np.abs(raw[1:])*width)
    values = np.maximum(lo, first - np.concatenate(([0.0], drops)))
    return nonincreasing(values, lo=lo, hi=hi, tol_mono=0.0)

# PURPOSE: search coordinates of a feasible non-increasing sequence
def seq_to_param(values, lo: float, hi: float):
    """
    Unconstrained coordinates that ``param_to_seq`` maps back onto a
    non-increasing sequence in ``[lo, hi]``

    Parameters
    ----------
    values: array_like
        non-increasing sequence within the box
    lo: float
        lower bound
    hi: float
        upper bound

    Returns
    -------
    raw: np.ndarray
        leading position followed by the scaled drops
    """
    values = np.asarray(values, dtype=np.float64)
    if np.any(values < lo) or np.any(values > hi) or \
        np.any(np.diff(values) > 0):
        raise ValueError(f'Sequence is not non-increasing within [{lo}, {hi}]')
    width = hi - lo
    if (width == 0):
        return np.zeros_like(values)
    first = (values[0] - 0.5*(lo + hi))/width
    return np.concatenate(([first], -np.diff(values)/width))

# PURPOSE: constructive witnesses scaled into the search box
def family_starts(config: SearchConfig):
    """
    Search coordinates of the witness families of a maximizing Minkowski
    search, jointly rescaled into the boxes

    Witnesses that leave the boxes or have a degenerate value are skipped

    Parameters
    ----------
    config: SearchConfig
        search configuration

    Returns
    -------
    starts: list
        coordinate vectors in family order
    """
    if not config.maximize:
        return []
    if (config.functional == 'minkowski_alt') and (config.n >= 3):
        pairs = [minkowski_witness(b, config.p, n=config.n)
            for b in _FAMILY_STARTS]
        pairs = [(a.values, b.values) for a, b in pairs]
    elif (config.functional == 'reverse_minkowski'):
        pairs = [reverse_minkowski_witness(config.n, config.p)]
    else:
        return []
    starts = []
    for a, b in pairs:
        # both ratios are invariant under a common scale
        scale = min(config.a_box[1]/np.max(a), config.b_box[1]/np.max(b))
        try:
            x0 = np.concatenate((seq_to_param(scale*a, *config.a_box),
                seq_to_param(scale*b, *config.b_box)))
        except ValueError:
            continue
        if np.isfinite(objective(config, x0)):
            starts.append(x0)
    return starts

# PURPOSE: decode search coordinates into the witness pair
def decode(config: SearchConfig, raw):
    """
    Witness pair ``(a, b)`` for a vector of search coordinates
    """
    raw = np.asarray(raw, dtype=np.float64)
    n = config.n
    a = param_to_seq(raw[:n], n, *config.a_box)
    if (config.functional == 'power_ratio'):
        return a, a
    second = param_to_seq(raw[n:], n, *config.b_box)
    if (config.functional == 'cauchy'):
        # non-decreasing quotient chain keeps a/b monotone and b non-increasing
        quotient = second.values[::-1]
        return a, nonincreasing(a.values/quotient, tol_mono=0.0)
    return a, second

# PURPOSE: objective value of a witness pair
def evaluate(config: SearchConfig, a, b):
    """
    Value of the configured ratio functional at a witness pair
    """
    if (config.functional == 'holder'):
        pq = ConjugateExponents(config.p)
        report = holder_ratio(a, b, pq, box=config.bounds_box)
    elif (config.functional == 'cauchy'):
        report = cauchy_ratio(a, b, box=config.bounds_box)
    elif (config.functional == 'minkowski_alt'):
        report = minkowski_alt_ratio(a, b, config.p)
    elif (config.functional == 'reverse_minkowski'):
        report = reverse_minkowski_ratio(a, b, config.p)
    else:
        report = power_ratio_bracket(a, config.r, config.R,
            box=config.bounds_box)
    return report.ratio

def objective(config: SearchConfig, raw):
    """
    Objective at search coordinates with degenerate points scored as the
    worst possible value for the direction
    """
    worst = -np.inf if config.maximize else np.inf
    try:
        value = evaluate(config, *decode(config, raw))
    except (DegenerateDenominator, NonPositiveInnerSum, HypothesisError,
        FloatingPointError, ZeroDivisionError):
        return worst
    return value if np.isfinite(value) else worst

# PURPOSE: coordinate pattern search with step halving
def compass_search(f, x0, step_init: float = 0.25, step_min: float = 1e-8,
    max_evals: int = 5000, maximize: bool = True):
    """
    Compass search accepting the first strictly improving trial point

    Tries ``x + step*e_i`` and ``x - step*e_i`` in coordinate order; the
    step is halved after a sweep without improvement

    Parameters
    ----------
    f: obj
        objective function of a coordinate vector
    x0: array_like
        starting point
    step_init: float, default 0.25
        initial step
    step_min: float, default 1e-8
        smallest step
    max_evals: int, default 5000
        evaluation budget including the starting point
    maximize: bool, default True
        search direction

    Returns
    -------
    x: np.ndarray
        best point
    fx: float
        best objective value
    evals: int
        number of evaluations
    history: list
        objective value after each accepted step
    """
    sign = 1.0 if maximize else -1.0
    x = np.array(x0, dtype=np.float64)
    fx = f(x)
    evals = 1
    history = [fx]
    step = step_init
    while (step >= step_min) and (evals < max_evals):
        improved = False
        for i in range(x.size):
            for direction in (1.0, -1.0):
                trial = x.copy()
                trial[i] += direction*step
                fp = f(trial)
                evals += 1
                if (sign*fp > sign*fx):
                    x, fx = trial, fp
                    history.append(fx)
                    improved = True
                    break
                if (evals >= max_evals):
                    break
            if improved or (evals >= max_evals):
                break
        if not improved:
            step *= 0.5
    return x, fx, evals, history

# PURPOSE: random starting coordinates with a finite objective
def _random_start(config: SearchConfig, rng: np.random.Generator):
    worst = -np.inf if config.maximize else np.inf
    for _ in range(_MAX_RESAMPLE):
        chains = []
        for _ in range(config.dimension//config.n):
            first = rng.uniform(-0.5, 0.5)
            drops = rng.uniform(0.0, 2.0/config.n, size=config.n - 1)
            chains.append(np.concatenate(([first], drops)))
        x0 = np.concatenate(chains)
        f0 = objective(config, x0)
        if (f0 != worst):
            return x0
    raise ValueError(f'No feasible start for {config.functional} in '
        f'{_MAX_RESAMPLE:d} draws')

# PURPOSE: run a single restart (top-level for process pools)
def _run_restart(config: SearchConfig, index: int,
    seed: np.random.SeedSequence):
    starts = family_starts(config)
    if (index < len(starts)):
        x0 = starts[index]
    else:
        x0 = _random_start(config, np.random.default_rng(seed))
    x, fx, evals, history = compass_search(lambda z: objective(config, z),
        x0, step_init=config.step_init, step_min=config.step_min,
        max_evals=config.max_evals, maximize=config.maximize)
    logging.debug(f'restart {index:d}: {fx:.17g} after {evals:d} evaluations')
    return index, x, fx, evals, history

# PURPOSE: multi-start extremal search
def search(config: SearchConfig, threads: int | None = None):
    """
    Multi-start compass search for the extremal value of a ratio functional

    Parameters
    ----------
    config: SearchConfig
        search configuration
    threads: int or NoneType, default None
        number of worker processes (packaged ``threads`` if None)

    Returns
    -------
    result: SearchResult
        best witness, lowest restart index among equal values
    """
    threads = default('threads') if threads is None else max(1, int(threads))
    seeds = np.random.SeedSequence(config.seed).spawn(config.restarts)
    if (threads > 1) and (config.restarts > 1):
        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_run_restart, config, i, s)
                for i, s in enumerate(seeds)]
            runs = [future.result() for future in futures]
    else:
        runs = [_run_restart(config, i, s) for i, s in enumerate(seeds)]
    sign = 1.0 if config.maximize else -1.0
    best = runs[0]
    for run in runs[1:]:
        if (sign*run[2] > sign*best[2]):
            best = run
    index, x, fx, _, history = best
    bound = config.bound()
    logging.info(f'{config.functional} {config.direction}: {fx:.17g} '
        f'(bound {bound:.17g}, restart {index:d})')
    return SearchResult(best_value=float(fx), witness=decode(config, x),
        bound=float(bound), gap=float(abs(bound - fx)), restart_index=index,
        evaluations=sum(run[3] for run in runs), history=tuple(history),
        config=config)

# PURPOSE: compare a search against a constructive witness family
def sharpness_report(config: SearchConfig, trace: WitnessTrace,
    result: SearchResult | None = None, tol: float = 1e-3,
    threads: int | None = None):
    """
    Tabulate the search value against the best value of a witness family

    Parameters
    ----------
    config: SearchConfig
        maximizing search configuration
    trace: WitnessTrace
        trace of a constructive family for the same functional and p
    result: SearchResult or NoneType, default None
        completed search (run from config if None)
    tol: float, default 1e-3
        allowed shortfall of the search before flagging a regression
    threads: int or NoneType, default None
        number of worker processes

    Returns
    -------
    record: dict
        search and family values with a regression flag
    """
    if (_FAMILIES.get(trace.family) != config.functional):
        raise ValueError(f'Family {trace.family} does not bound {config.functional}')
    if (trace.p != config.p) or not config.maximize:
        raise ValueError('Search and family need the same p and maximization')
    if result is None:
        result = search(config, threads=threads)
    elif (result.config != config):
        raise ValueError('Search result was produced by another configuration')
    ibest = int(np.argmax(trace.ratios))
    family_value = float(trace.ratios[ibest])
    return dict(functional=config.functional, p=config.p, n=config.n,
        family=trace.family, family_param=float(trace.params[ibest]),
        family_value=family_value, search_value=result.best_value,
        bound=result.bound, difference=result.best_value - family_value,
        regression=bool(result.best_value < family_value - tol))

# PURPOSE: search-side counterpart of the Hölder blow-up family
def holder_growth_trend(config: SearchConfig, b_lows, threads: int | None = None):
    """
    Maximize the alternating Hölder fraction while the lower bound of b
    shrinks

    Parameters
    ----------
    config: SearchConfig
        maximizing ``holder`` configuration
    b_lows: list
        positive, strictly decreasing lower bounds of b
    threads: int or NoneType, default None
        number of worker processes

    Returns
    -------
    results: list
        one search result per lower bound
    """
    if (config.functional != 'holder') or not config.maximize:
        raise ValueError('Growth trend needs a maximizing holder search')
    b_lows = np.asarray(b_lows, dtype=np.float64)
    if np.any(b_lows <= 0) or np.any(np.diff(b_lows) >= 0):
        raise ValueError('Lower bounds must be positive and strictly decreasing')
    results = []
    for b_lo in b_lows:
        shrunk = dataclasses.replace(config,
            b_box=(float(b_lo), config.b_box[1]))
        results.append(search(shrunk, threads=threads))
    return results
