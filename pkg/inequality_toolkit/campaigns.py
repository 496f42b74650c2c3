#!/usr/bin/env python
u"""
campaigns.py (10/2026)
Seeded verification campaigns and the report builders behind each altineq
    subcommand

    verify:     seeded hypothesis-satisfying instances per functional
    constants:  sharp constants of a bounds box or quotient box
    sharpness:  witness-family traces with their monotone-gap verdict
    search:     multi-start extremal search
    series:     eta, zeta, F scans and the series inequalities

Every builder returns an exit status, a JSON report embedding its run
    manifest and optional CSV rows

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org

PROGRAM DEPENDENCIES:
    classical.py: two-point inequalities
    extremal.py: multi-start extremal search
    ratios.py: ratio functionals and witness families
    series.py: alternating series identities
    seqcore.py: seeded generation of bounded monotone sequences
    utilities.py: tolerances, exceptions and worker counts
    version.py: software version

UPDATE HISTORY:
    Updated 10/2026: fail geometric runs whose series cross-check disagrees
    Written 10/2026
"""
from __future__ import annotations

import logging
import datetime
import dataclasses
import concurrent.futures
import numpy as np
import inequality_toolkit.version
from inequality_toolkit import classical, ratios, series
from inequality_toolkit.extremal import search, SearchConfig
from inequality_toolkit.seqcore import (Seq, GenSpec, generate, trial_seed,
    lemma_compare, nonincreasing, DISTRIBUTIONS, NONINCREASING,
    NONDECREASING)
from inequality_toolkit.utilities import (HypothesisError,
    DegenerateDenominator, NonPositiveInnerSum, SCHEMA_VERSION, default,
    to_serializable)

# exit statuses
EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

# default exponents of the verification campaigns
DEFAULT_P = (1.0, 1.5, 2.0, 3.0)
DEFAULT_QUASI_P = (0.25, 0.5, 0.75)
# maximum number of offending instances kept in a report
MAX_OFFENDERS = 10
# exceptions counted as filtered instances rather than violations
_FILTERED = (HypothesisError, DegenerateDenominator, NonPositiveInnerSum)

@dataclasses.dataclass
class RunManifest:
    """
    Self-description embedded in every emitted report
    """
    command: str
    parameters: dict
    seed: int | None = None
    timestamp: str = dataclasses.field(default_factory=lambda:
        datetime.datetime.now(datetime.timezone.utc).isoformat())
    version: str = inequality_toolkit.version.version
    outputs: list = dataclasses.field(default_factory=list)

    def to_dict(self):
        return to_serializable(dict(schema_version=SCHEMA_VERSION,
            **dataclasses.asdict(self)))

def _report(manifest: RunManifest, **kwargs):
    return dict(schema_version=SCHEMA_VERSION, manifest=manifest, **kwargs)

class TrialDraw:
    """
    Seeded draws of a single campaign trial

    Parameters
    ----------
    seed: int
        master seed of the campaign
    index: int
        trial index
    n_range: tuple
        inclusive range of sequence lengths
    box_range: tuple
        range of the box bounds
    p_values: tuple
        exponents admissible for the functional
    """
    def __init__(self, seed: int, index: int, n_range: tuple,
        box_range: tuple, p_values: tuple):
        self.seed = seed
        self.index = index
        self.n_range = n_range
        self.box_range = box_range
        self.p_values = p_values
        self.rng = np.random.default_rng(trial_seed(seed, index, 0))
        self.distribution = DISTRIBUTIONS[self.rng.integers(len(DISTRIBUTIONS))]
        self.instance = {}

    def length(self, parity: int | None = None):
        """Sequence length, optionally forced to a parity
        """
        n = int(self.rng.integers(self.n_range[0], self.n_range[1] + 1))
        if (parity is not None) and (n % 2 != parity):
            n = n + 1 if (n + 1 <= self.n_range[1]) else n - 1
        if (n < 1):
            raise HypothesisError(f'No length of parity {parity} in {self.n_range}')
        return n

    def box(self, upper: float | None = None):
        """Random box ``[lo, hi]`` within the box range
        """
        low, high = self.box_range
        high = high if upper is None else min(high, upper)
        lo, hi = np.sort(self.rng.uniform(low, high, size=2))
        return float(lo), float(hi)

    def exponent(self):
        p = float(self.rng.choice(self.p_values))
        self.instance['p'] = p
        return p

    def sequence(self, n: int, stream: int, direction: str = NONINCREASING,
        box: tuple | None = None, name: str | None = None):
        """Bounded monotone sequence from an independent seed stream
        """
        lo, hi = self.box() if box is None else box
        genspec = GenSpec(n, lo, hi, direction=direction,
            seed=trial_seed(self.seed, self.index, stream),
            distribution=self.distribution)
        s = generate(genspec)
        self.instance[name or f'seq{stream:d}'] = s.to_list()
        return s

    def shuffled(self, n: int, stream: int, name: str):
        """Positive sequence in random order
        """
        s = self.sequence(n, stream, name=name)
        values = self.rng.permutation(s.values)
        self.instance[name] = values.tolist()
        return Seq(values)

# PURPOSE: single trial of each verification functional
def _trial_holder(draw: TrialDraw, **kwargs):
    n = draw.length()
    pq = classical.ConjugateExponents(draw.exponent())
    a = draw.sequence(n, 1, name='a')
    b = draw.sequence(n, 2, name='b')
    return ratios.holder_ratio(a, b, pq, tol=kwargs.get('tol'))

def _trial_cauchy(draw: TrialDraw, structured: bool = True, **kwargs):
    n = draw.length()
    a = draw.sequence(n, 1, name='a')
    if structured:
        # non-decreasing quotient keeps b non-increasing and a/b monotone
        c = draw.sequence(n, 2, direction=NONDECREASING, name='quotient')
        b = nonincreasing(a.values/c.values, tol_mono=0.0)
        draw.instance['b'] = b.to_list()
    else:
        b = draw.sequence(n, 2, name='b')
    return ratios.cauchy_ratio(a, b, tol=kwargs.get('tol'))

def _trial_zhuang(draw: TrialDraw, **kwargs):
    n = draw.length()
    a = draw.shuffled(n, 1, 'a')
    b = draw.shuffled(n, 2, 'b')
    return ratios.zhuang_check(a, b, tol=kwargs.get('tol'))

def _trial_minkowski_alt(draw: TrialDraw, **kwargs):
    n = draw.length()
    p = draw.exponent()
    a = draw.sequence(n, 1, name='a')
    b = draw.sequence(n, 2, name='b')
    return ratios.minkowski_alt_ratio(a, b, p, tol=kwargs.get('tol'))

def _trial_superadditivity(draw: TrialDraw, **kwargs):
    n = draw.length()
    p = draw.exponent()
    a = draw.sequence(n, 1, name='a')
    b = draw.sequence(n, 2, name='b')
    report = ratios.alt_superadditivity_check(a, b, p, tol=kwargs.get('tol'))
    # the termwise monotone difference implies the alternating verdict
    monotone = ratios.difference_monotone(a, b, p)
    return dataclasses.replace(report, holds=report.holds and monotone,
        extra=dict(report.extra, difference_monotone=monotone))

def _trial_reverse_minkowski(draw: TrialDraw, **kwargs):
    n = draw.length()
    p = draw.exponent()
    a = draw.shuffled(n, 1, 'a')
    b = draw.shuffled(n, 2, 'b')
    return ratios.reverse_minkowski_ratio(a, b, p, tol=kwargs.get('tol'))

def _trial_bougoffa(draw: TrialDraw, **kwargs):
    n = draw.length()
    p = draw.exponent()
    a = draw.shuffled(n, 1, 'a')
    b = draw.shuffled(n, 2, 'b')
    return ratios.bougoffa_check(a, b, p, tol=kwargs.get('tol'))

def _trial_lemma(draw: TrialDraw, **kwargs):
    n = draw.length()
    a = draw.sequence(n, 1, name='a')
    b = draw.sequence(n, 2, direction=NONDECREASING, name='b')
    return lemma_compare(a, b, b.hi, tol=kwargs.get('tol'))

def _convex_function(draw: TrialDraw, x_max: float):
    # powers for the admissible exponents, exp(x)-1 otherwise
    if draw.rng.integers(2):
        draw.instance['f'] = 'exponential'
        return ratios.ConvexFn.exponential(x_max)
    p = draw.exponent()
    draw.instance['f'] = f'power({p})'
    return ratios.ConvexFn.power(p, x_max)

def _trial_szego(draw: TrialDraw, **kwargs):
    b = draw.sequence(draw.length(parity=1), 1, name='b')
    f = _convex_function(draw, b.values[0])
    return ratios.szego_check(b, f, tol=kwargs.get('tol'))

def _trial_weinberger(draw: TrialDraw, **kwargs):
    b = draw.sequence(draw.length(parity=1), 1, name='b')
    return ratios.weinberger_check(b, draw.exponent(), tol=kwargs.get('tol'))

def _trial_bellman(draw: TrialDraw, **kwargs):
    b = draw.sequence(draw.length(parity=0), 1, name='b')
    f = _convex_function(draw, b.values[0])
    return ratios.bellman_check(b, f, tol=kwargs.get('tol'))

def _trial_brunk_olkin(draw: TrialDraw, **kwargs):
    n = draw.length()
    w = draw.sequence(n, 1, box=draw.box(upper=1.0), name='w')
    b = draw.sequence(n, 2, name='b')
    f = _convex_function(draw, b.values[0])
    return ratios.brunk_olkin_check(w, b, f, tol=kwargs.get('tol'))

def _trial_power_ratio(draw: TrialDraw, **kwargs):
    x = draw.sequence(draw.length(parity=1), 1, name='x')
    r = int(draw.rng.integers(1, 4))
    R = r + int(draw.rng.integers(0, 3))
    draw.instance.update(r=r, R=R)
    return ratios.power_ratio_bracket(x, r, R, tol=kwargs.get('tol'))

def _trial_quasi_norm(draw: TrialDraw, **kwargs):
    n = draw.length()
    p = draw.exponent()
    x = draw.sequence(n, 1, name='x')
    y = draw.sequence(n, 2, name='y')
    reports = ratios.quasi_norm_axiom_suite(x, y, p, tol=kwargs.get('tol'))
    failed = [r.functional for r in reports if not r.holds]
    triangle = reports[-1]
    return dataclasses.replace(triangle, functional='quasi_norm',
        holds=not failed, extra=dict(triangle.extra, failed=failed))

def _two_point(draw: TrialDraw):
    alpha, beta = draw.rng.uniform(*draw.box_range, size=2)
    draw.instance.update(alpha=float(alpha), beta=float(beta))
    return float(alpha), float(beta)

def _trial_jensen(draw: TrialDraw, **kwargs):
    alpha, beta = _two_point(draw)
    c = classical.TwoPointCase(alpha, beta, draw.exponent())
    return classical.jensen_check(c, tol=kwargs.get('tol'))

def _trial_young(draw: TrialDraw, **kwargs):
    alpha, beta = _two_point(draw)
    pq = classical.ConjugateExponents(draw.exponent())
    return classical.young_check(alpha, beta, pq, tol=kwargs.get('tol'))

def _trial_power_bracket(draw: TrialDraw, **kwargs):
    beta, alpha = sorted(_two_point(draw))
    return classical.power_bracket_check(alpha, beta, draw.exponent(),
        tol=kwargs.get('tol'))

# campaign functionals with their trial and admissible exponents
CAMPAIGNS = dict(
    holder=(_trial_holder, lambda p: p > 1),
    cauchy=(_trial_cauchy, None),
    zhuang=(_trial_zhuang, None),
    minkowski_alt=(_trial_minkowski_alt, lambda p: p > 0),
    superadditivity=(_trial_superadditivity, lambda p: p > 0),
    reverse_minkowski=(_trial_reverse_minkowski, lambda p: p >= 1),
    bougoffa=(_trial_bougoffa, lambda p: p >= 1),
    lemma=(_trial_lemma, None),
    szego=(_trial_szego, lambda p: p >= 1),
    weinberger=(_trial_weinberger, lambda p: p >= 1),
    bellman=(_trial_bellman, lambda p: p >= 1),
    brunk_olkin=(_trial_brunk_olkin, lambda p: p >= 1),
    power_ratio=(_trial_power_ratio, None),
    quasi_norm=(_trial_quasi_norm, lambda p: 0 < p < 1),
    jensen=(_trial_jensen, lambda p: p > 0),
    young=(_trial_young, lambda p: p > 1),
    power_bracket=(_trial_power_bracket, lambda p: p >= 1),
)

def admissible_exponents(functional: str, p_list=None):
    """
    Exponents of a campaign filtered by the functional's hypotheses
    """
    _, admissible = CAMPAIGNS[functional]
    if p_list is None:
        p_list = DEFAULT_QUASI_P if (functional == 'quasi_norm') else DEFAULT_P
    if admissible is None:
        return tuple(p_list)
    p_values = tuple(float(p) for p in p_list if admissible(p))
    if not p_values:
        raise ValueError(f'No admissible exponent for {functional} in {p_list}')
    return p_values

# PURPOSE: run a block of trials (top-level for process pools)
def _run_trials(functional: str, indices: range, seed: int, n_range: tuple,
    box_range: tuple, p_values: tuple, options: dict):
    trial, _ = CAMPAIGNS[functional]
    outcomes = []
    for i in indices:
        draw = TrialDraw(seed, i, n_range, box_range, p_values)
        try:
            report = trial(draw, **options)
        except _FILTERED as exc:
            outcomes.append((i, None, type(exc).__name__, draw.instance))
        else:
            outcomes.append((i, report, None, draw.instance))
    return outcomes

# PURPOSE: seeded verification campaign of a single functional
def verify_campaign(functional: str, trials: int, seed: int = 0,
    n_range: tuple = (2, 64), box_range: tuple = (0.1, 10.0),
    p_list=None, tol: float | None = None, structured: bool = True,
    threads: int | None = None):
    """
    Run seeded hypothesis-satisfying trials of a functional

    Parameters
    ----------
    functional: str
        campaign functional
    trials: int
        number of trials
    seed: int, default 0
        master seed
    n_range: tuple, default (2, 64)
        inclusive range of sequence lengths
    box_range: tuple, default (0.1, 10.0)
        range of the box bounds
    p_list: list or NoneType, default None
        exponents (campaign defaults if None)
    tol: float or NoneType, default None
        relative comparison tolerance
    structured: bool, default True
        build Cauchy pairs with monotone quotients
    threads: int or NoneType, default None
        number of worker processes

    Returns
    -------
    summary: dict
        counts, worst slack and offending instances
    rows: list
        per-trial CSV rows in trial order
    """
    if functional not in CAMPAIGNS:
        raise ValueError(f'Unknown functional {functional}')
    if (trials < 0):
        raise ValueError(f'Invalid number of trials {trials}')
    if not (1 <= n_range[0] <= n_range[1]):
        raise ValueError(f'Invalid length range {n_range}')
    if not (0 <= box_range[0] <= box_range[1]):
        raise ValueError(f'Invalid box range {box_range}')
    p_values = admissible_exponents(functional, p_list)
    threads = default('threads') if threads is None else max(1, int(threads))
    options = dict(tol=tol, structured=structured)
    args = (seed, tuple(n_range), tuple(box_range), p_values, options)
    if (threads > 1) and (trials > 1):
        # contiguous blocks merged back in trial order
        bounds = np.linspace(0, trials, threads + 1).astype(int)
        blocks = [range(bounds[j], bounds[j+1]) for j in range(threads)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_run_trials, functional, block, *args)
                for block in blocks]
            outcomes = [o for future in futures for o in future.result()]
    else:
        outcomes = _run_trials(functional, range(trials), *args)
    summary = dict(functional=functional, trials=trials, holds=0,
        equalities=0, errors=0, violations=0, error_types={},
        worst_slack=None, offending=[])
    rows = []
    for i, report, error, instance in outcomes:
        if report is None:
            summary['errors'] += 1
            summary['error_types'][error] = summary['error_types'].get(error, 0) + 1
            rows.append((i, functional, None, None, None, None, None,
                False, False, error))
            continue
        slack = report.slack if report.lower_slack is None \
            else min(report.slack, report.lower_slack)
        if (summary['worst_slack'] is None) or (slack < summary['worst_slack']):
            summary['worst_slack'] = slack
        summary['holds'] += int(report.holds)
        summary['equalities'] += int(report.equality)
        if not report.holds:
            summary['violations'] += 1
            if (len(summary['offending']) < MAX_OFFENDERS):
                summary['offending'].append(dict(trial=i, instance=instance,
                    report=report.to_dict()))
        rows.append((i, functional, report.n, report.p, report.ratio,
            report.bound, report.slack, report.holds, report.equality, 'ok'))
    logging.info(f'{functional}: {summary["holds"]:d}/{trials:d} hold, '
        f'{summary["violations"]:d} violations, {summary["errors"]:d} errors')
    return summary, rows

VERIFY_HEADER = ['trial', 'functional', 'n', 'p', 'ratio', 'bound', 'slack',
    'holds', 'equality', 'status']

def cmd_verify(functionals, trials: int, seed: int = 0,
    n_range: tuple = (2, 64), box_range: tuple = (0.1, 10.0), p_list=None,
    tol: float | None = None, structured: bool = True,
    threads: int | None = None):
    """
    Verification campaigns for one or more functionals

    Returns
    -------
    status: int
        ``EXIT_VIOLATION`` if any violation was found
    report: dict
        manifest and per-functional summaries
    rows: list
        per-trial CSV rows
    """
    functionals = [functionals] if isinstance(functionals, str) else list(functionals)
    manifest = RunManifest('verify', dict(functionals=functionals,
        trials=trials, n_range=list(n_range), box_range=list(box_range),
        p_list=p_list, tol=tol, structured=structured), seed=seed)
    summaries, rows = [], []
    for functional in functionals:
        summary, r = verify_campaign(functional, trials, seed=seed,
            n_range=n_range, box_range=box_range, p_list=p_list, tol=tol,
            structured=structured, threads=threads)
        summaries.append(summary)
        rows.extend(r)
    violations = sum(s['violations'] for s in summaries)
    status = EXIT_VIOLATION if violations else EXIT_PASS
    return status, _report(manifest, results=summaries,
        violations=violations), rows

def cmd_constants(box: tuple | None = None, p: float | None = None,
    quotient: tuple | None = None):
    """
    Sharp constants of a bounds box ``(a, A, b, B)`` with exponent p or of
    a quotient box ``(m, M)``

    Returns
    -------
    status: int
        ``EXIT_PASS``
    report: dict
        manifest and constants
    rows: list
        ``(name, value)`` rows
    """
    if (box is None) == (quotient is None):
        raise ValueError('Select exactly one of a bounds box or a quotient box')
    manifest = RunManifest('constants', dict(box=box, p=p, quotient=quotient))
    constants = {}
    if box is not None:
        if (len(box) != 4):
            raise ValueError(f'Bounds box needs a,A,b,B, got {box}')
        p = 2.0 if p is None else float(p)
        bounds = ratios.BoundsBox(*box)
        if (p > 1):
            pq = classical.ConjugateExponents(p)
            constants['holder_C'] = ratios.holder_constant(bounds, pq)
            constants['q'] = pq.q
        constants['cauchy_c'] = ratios.cauchy_constant(bounds)
        constants['zhuang_varsigma'] = ratios.zhuang_constant(bounds)
        constants['minkowski'] = 2.0**(1.0 - 1.0/p) if (p >= 1) \
            else 2.0**(1.0/p - 1.0)
        constants['p'] = p
    else:
        if (len(quotient) != 2):
            raise ValueError(f'Quotient box needs m,M, got {quotient}')
        qb = ratios.QuotientBox(*quotient)
        constants['bougoffa_C'] = ratios.bougoffa_constant(qb)
        constants['crossover_p'] = ratios.crossover_exponent(qb)
    rows = [(key, value) for key, value in constants.items()]
    return EXIT_PASS, _report(manifest, constants=constants), rows

# default grids of the witness families
SHARPNESS_GRIDS = dict(minkowski_eps_b=(10.0, 100.0, 1000.0),
    quasi_triangle_eps_b=(10.0, 100.0, 1000.0),
    reverse_minkowski_eps_n=(10, 100, 1000),
    holder_blowup=(1e-1, 1e-2, 1e-3, 1e-4))
FAMILIES = tuple(SHARPNESS_GRIDS.keys()) + ('holder_zero',)
TRACE_HEADER = ['param', 'ratio', 'bound', 'gap']

# PURPOSE: direct ratio evaluation at the family witnesses
def _cross_check(family: str, trace, p: float):
    deltas = []
    for pt in trace.points:
        if (family == 'minkowski_eps_b'):
            a, b = ratios.minkowski_witness(pt.param, p)
            direct = ratios.minkowski_alt_ratio(a, b, p).ratio
        elif (family == 'reverse_minkowski_eps_n'):
            a, b = ratios.reverse_minkowski_witness(int(pt.param), p)
            direct = ratios.reverse_minkowski_ratio(a, b, p).ratio
        else:
            return None
        deltas.append(abs(direct - pt.ratio))
    return deltas

def cmd_sharpness(family: str, grid=None, p: float = 2.0, n: int = 4,
    b_tail: float = 1.0, pairs: int = 1):
    """
    Witness-family trace with its monotone-gap verdict

    Parameters
    ----------
    family: str
        ``minkowski_eps_b``, ``quasi_triangle_eps_b``,
        ``reverse_minkowski_eps_n``, ``holder_blowup`` or ``holder_zero``
    grid: list or NoneType, default None
        family parameters (family defaults if None)
    p: float, default 2.0
        exponent
    n: int, default 4
        even length of the ``holder_zero`` witness
    b_tail: float, default 1.0
        fixed ``b_(2n)`` of the ``holder_blowup`` family
    pairs: int, default 1
        number of pairs of the ``holder_blowup`` family

    Returns
    -------
    status: int
        ``EXIT_VIOLATION`` if the trace fails its verdict
    report: dict
        manifest, trace and verdict
    rows: list
        trace CSV rows
    """
    if family not in FAMILIES:
        raise ValueError(f'Unknown family {family}')
    manifest = RunManifest('sharpness', dict(family=family, grid=grid, p=p,
        n=n, b_tail=b_tail, pairs=pairs))
    if (family == 'holder_zero'):
        plateau = np.linspace(1.0, 0.5, n//2) if (n >= 2) else []
        a, b = ratios.holder_zero_witness(n, plateau, np.linspace(1.0, 0.1, n))
        report = ratios.holder_ratio(a, b, classical.ConjugateExponents(p))
        passed = (report.ratio == 0.0)
        rows = [(k + 1, ak, bk) for k, (ak, bk) in
            enumerate(zip(a.values, b.values))]
        status = EXIT_PASS if passed else EXIT_VIOLATION
        return status, _report(manifest, family=family, passed=passed,
            witness=dict(a=a.to_list(), b=b.to_list()),
            report=report.to_dict()), rows
    grid = SHARPNESS_GRIDS[family] if grid is None else grid
    if (family == 'minkowski_eps_b'):
        trace = ratios.minkowski_sharpness_trace(p, grid)
        passed = trace.gap_monotone(strict=True) and np.all(trace.gaps > 0)
    elif (family == 'quasi_triangle_eps_b'):
        trace = ratios.quasi_triangle_trace(p, grid)
        passed = trace.gap_monotone(strict=True)
    elif (family == 'reverse_minkowski_eps_n'):
        trace = ratios.reverse_minkowski_sharpness_trace(p, grid)
        # p = 1 collapses to a flat trace of zeros
        passed = np.all(trace.gaps == 0) if (p == 1) else \
            (trace.gap_monotone(strict=True) and np.all(trace.gaps > 0))
    else:
        trace = ratios.holder_blowup_trace(classical.ConjugateExponents(p),
            b_tail, grid, pairs=pairs)
        passed = trace.is_monotone('ratio', increasing=True) and \
            np.all(trace.gaps >= 0)
    passed = bool(passed)
    logging.info(f'{family} trace {"passes" if passed else "fails"}')
    status = EXIT_PASS if passed else EXIT_VIOLATION
    return status, _report(manifest, family=family, passed=passed,
        trace=trace.to_dict(), cross_check=_cross_check(family, trace, p)), \
        trace.rows()

def cmd_search(config: SearchConfig, threads: int | None = None):
    """
    Extremal search report

    Returns
    -------
    status: int
        ``EXIT_VIOLATION`` if the best value breaks the proved bound
    report: dict
        manifest and search result
    rows: list
        witness rows ``(k, a_k, b_k)``
    """
    manifest = RunManifest('search', config.to_dict(), seed=config.seed)
    result = search(config, threads=threads)
    a, b = result.witness
    rows = [(k + 1, ak, bk) for k, (ak, bk) in enumerate(zip(a.values, b.values))]
    status = EXIT_VIOLATION if result.violates else EXIT_PASS
    return status, _report(manifest, result=result.to_dict(),
        violation=bool(result.violates)), rows

SERIES_MODES = ('eta', 'zeta', 'F_scan', 'harmonic', 'geometric')
F_SCAN_HEADER = ['alpha', 'beta', 'p', 'F', 'slack']

def cmd_series(mode: str, s: float | None = None, alpha: float | None = None,
    beta: float | None = None, p: float = 2.0, a: float | None = None,
    b: float | None = None, grid=None, p_list=None, tol: float | None = None):
    """
    Alternating series evaluations and inequality checks

    Returns
    -------
    status: int
        ``EXIT_VIOLATION`` if an inequality check fails
    report: dict
        manifest and results
    rows: list
        CSV rows
    """
    if mode not in SERIES_MODES:
        raise ValueError(f'Unknown series mode {mode}')
    manifest = RunManifest('series', dict(mode=mode, s=s, alpha=alpha,
        beta=beta, p=p, a=a, b=b, grid=grid, p_list=p_list, tol=tol))
    if mode in ('eta','zeta') and (s is None):
        raise ValueError(f'{mode} needs an argument s')
    if (mode == 'eta'):
        result = dataclasses.asdict(series.eta(s, tol))
        return EXIT_PASS, _report(manifest, eta=result), [tuple(result.values())]
    elif (mode == 'zeta'):
        value = series.zeta_from_eta(s, tol)
        return EXIT_PASS, _report(manifest, zeta=dict(s=s, value=value)), \
            [(s, value)]
    elif (mode == 'F_scan'):
        grid = [0.25*k for k in range(1, 13)] if grid is None else grid
        p_list = [p] if p_list is None else p_list
        rows, summary = series.F_scan(grid, grid, p_list, tol)
        status = EXIT_VIOLATION if summary['violations'] else EXIT_PASS
        return status, _report(manifest, summary=summary), rows
    pq = classical.ConjugateExponents(p)
    if (mode == 'harmonic'):
        if (alpha is None) or (beta is None):
            raise ValueError('harmonic needs alpha and beta')
        report = series.harmonic_ineq_check(alpha, beta, pq, tol)
    else:
        if (a is None) or (b is None):
            raise ValueError('geometric needs a and b')
        report = series.geometric_ineq_check(a, b, pq)
    # a closed form that disagrees with its series is not verified
    consistent = report.extra.get('series_consistent', True)
    status = EXIT_PASS if (report.holds and consistent) else EXIT_VIOLATION
    rows = [(report.ratio, report.bound, report.slack, report.holds,
        report.equality)]
    return status, _report(manifest, report=report.to_dict(),
        violations=int(not report.holds), equality=report.equality), rows
