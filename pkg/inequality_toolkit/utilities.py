#!/usr/bin/env python
u"""
utilities.py (10/2026)
Reads the supplied altineqrc file for default tolerances and worker counts
    and provides the shared exceptions and report writers

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org

UPDATE HISTORY:
    Updated 10/2026: read tolerances and worker counts from altineqrc
        ALTINEQ_THREADS caps rather than replaces the worker count
        added domain exceptions and JSON/CSV report writers
        resolve relative output files within the configured outdir
        removed ssl context and connection checks
    Updated 05/2023: use pathlib to find and operate on paths
        added more file operation functions and renamed to utilities.py
    Updated 03/2023: use numpy doc syntax for docstrings
    Written 10/2017
"""
from __future__ import annotations

import os
import re
import csv
import json
import math
import inspect
import logging
import pathlib
import fractions
import numpy as np

# schema version embedded in every emitted report
SCHEMA_VERSION = 1

class HypothesisError(ValueError):
    """A theorem hypothesis (monotonicity, box, length, exponent) is violated
    """
    pass

class QuotientNotMonotone(HypothesisError):
    """The quotient sequence a_k/b_k is not monotone
    """
    pass

class DegenerateDenominator(ArithmeticError):
    """The denominator of a ratio functional vanishes
    """
    pass

class NonPositiveInnerSum(ArithmeticError):
    """An alternating power sum is negative beyond tolerance
    """
    pass

# PURPOSE: get absolute path within a package from a relative path
def get_data_path(relpath: list | str | pathlib.Path):
    """
    Get the absolute path within a package from a relative path

    Parameters
    ----------
    relpath: list, str or pathlib.Path
        relative path
    """
    # current file path
    filename = inspect.getframeinfo(inspect.currentframe()).filename
    filepath = pathlib.Path(filename).absolute().parent
    if isinstance(relpath, list):
        # use *splat operator to extract from list
        return filepath.joinpath(*relpath)
    elif isinstance(relpath, (str, pathlib.Path)):
        return filepath.joinpath(relpath)

# parameter names and their types within altineqrc files
_parameter_types = dict(tol_cmp=float, tol_mono=float, tol_series=float,
    degenerate_abs=float, degenerate_rel=float, threads=int, outdir=str)

# PURPOSE: read altineqrc file and extract parameters
def read_altineqrc(altineqrc_file: str | pathlib.Path):
    """Read altineqrc file

    Parameters
    ----------
    altineqrc_file: str or pathlib.Path
        path to altineqrc file for setting parameters

    Returns
    -------
    parameters: dict
        typed parameters found within the file
    """
    # variable with parameter definitions
    parameters = {}
    # Opening parameter file and assigning file ID (f)
    altineqrc_file = pathlib.Path(altineqrc_file).expanduser().absolute()
    with altineqrc_file.open(mode='r', encoding='utf8') as f:
        # read entire line and keep all uncommented lines
        fin = [i for i in f.readlines() if i and re.match(r'^(?!\#|\n)', i)]
    # for each line in the file will extract the parameter (name and value)
    for fileline in fin:
        # Splitting the input line between parameter name and value
        key, _, value = fileline.partition(':')
        key = key.strip()
        if key not in _parameter_types:
            raise ValueError(f'Unknown parameter {key} in {altineqrc_file}')
        # filling the parameter definition variable
        parameters[key] = _parameter_types[key](value.strip())
    return parameters

# PURPOSE: merge packaged defaults, a user file and the environment
def get_parameters(config: str | pathlib.Path | None = None, **kwargs):
    """
    Get run parameters from the packaged altineqrc file

    Parameters
    ----------
    config: str, pathlib.Path or NoneType, default None
        user altineqrc file overriding the packaged defaults
    **kwargs: dict
        explicit overrides (``None`` values are ignored)

    The ``ALTINEQ_THREADS`` environment variable is an upper limit on the
    resolved worker count
    """
    parameters = read_altineqrc(get_data_path(['data','altineqrc']))
    if config is not None:
        parameters.update(read_altineqrc(config))
    parameters.update({k:v for k,v in kwargs.items() if v is not None})
    # environment caps the number of workers
    if os.environ.get('ALTINEQ_THREADS'):
        parameters['threads'] = min(parameters['threads'],
            int(os.environ['ALTINEQ_THREADS']))
    parameters['threads'] = max(1, parameters['threads'])
    return parameters

# default run parameters
_default_parameters = get_parameters()

def default(key: str):
    """Returns a packaged default parameter
    """
    return _default_parameters[key]

# PURPOSE: replace the process-wide defaults (used by the command line)
def configure(config: str | pathlib.Path | None = None, **kwargs):
    """
    Reload default parameters from a user altineqrc file and overrides

    Parameters
    ----------
    config: str, pathlib.Path or NoneType, default None
        user altineqrc file
    **kwargs: dict
        explicit overrides (``None`` values are ignored)
    """
    global _default_parameters
    _default_parameters = get_parameters(config, **kwargs)
    return _default_parameters

# PURPOSE: relative-absolute hybrid comparison threshold
def threshold(value: float, tol: float | None = None):
    """
    Comparison threshold ``tol*max(1,|value|)``

    Parameters
    ----------
    value: float
        right-hand side of the comparison
    tol: float or NoneType, default None
        relative tolerance (packaged ``tol_cmp`` if None)
    """
    tol = default('tol_cmp') if tol is None else tol
    return tol*max(1.0, abs(value))

# PURPOSE: surface vanishing denominators as errors
def check_denominator(denominator: float, scale: float = 0.0,
    functional: str = 'ratio'):
    """
    Raise if a denominator is zero or negligible against its scale

    Parameters
    ----------
    denominator: float
        denominator of the ratio functional
    scale: float, default 0.0
        magnitude of the terms entering the ratio
    functional: str, default 'ratio'
        name of the functional for the error message
    """
    if not np.isfinite(denominator):
        raise DegenerateDenominator(f'{functional}: denominator {denominator}')
    if (abs(denominator) < default('degenerate_abs')) or \
        (abs(denominator) < default('degenerate_rel')*abs(scale)):
        raise DegenerateDenominator(f'{functional}: denominator '
            f'{denominator:.3g} vanishes against scale {scale:.3g}')

# PURPOSE: parse exact rationals such as 3/2 before conversion
def parse_fraction(value: str | float | int):
    """
    Parse a real number given as a decimal or an exact rational

    Parameters
    ----------
    value: str, float or int
        number such as ``2``, ``1.5`` or ``3/2``
    """
    if isinstance(value, (float, int)):
        return float(value)
    try:
        return float(fractions.Fraction(value.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f'Cannot parse number {value!r}') from exc

def parse_list(value: str, cast=parse_fraction):
    """Parse a comma-separated list of numbers
    """
    return [cast(v) for v in value.split(',') if v.strip()]

def parse_range(value: str):
    """
    Parse a ``start:stop:step`` range including the end point

    Parameters
    ----------
    value: str
        range specification
    """
    start, stop, step = [parse_fraction(v) for v in value.split(':')]
    if (step <= 0) or (stop < start):
        raise ValueError(f'Invalid range {value}')
    count = int(math.floor((stop - start)/step + 1e-9)) + 1
    return [start + i*step for i in range(count)]

# PURPOSE: convert report values into JSON-safe python objects
def to_serializable(obj):
    """Recursively converts numpy types and non-finite numbers
    """
    if isinstance(obj, dict):
        return {str(k):to_serializable(v) for k,v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [to_serializable(v) for v in obj]
    elif isinstance(obj, np.ndarray):
        return [to_serializable(v) for v in obj.tolist()]
    elif isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    elif isinstance(obj, (int, np.integer)):
        return int(obj)
    elif isinstance(obj, (float, np.floating)):
        # non-finite values are written as strings
        return float(obj) if np.isfinite(obj) else str(float(obj))
    elif isinstance(obj, pathlib.Path):
        return str(obj)
    elif hasattr(obj, 'to_dict'):
        return to_serializable(obj.to_dict())
    return obj

def format_float(value: float):
    """Formats a float with 17 significant digits
    """
    return f'{float(value):.17g}'

# PURPOSE: serialize a report as JSON
def dumps(report: dict):
    """
    Serialize a report with round-trip exact floating point values

    Parameters
    ----------
    report: dict
        report contents
    """
    # shortest repr floats parse back to the identical double
    return json.dumps(to_serializable(report), indent=2, sort_keys=False)

# PURPOSE: write CSV rows with a header line
def write_csv(filename: str | pathlib.Path, header: list, rows: list):
    """
    Write rows to a CSV file (LF line endings, UTF-8)

    Parameters
    ----------
    filename: str or pathlib.Path
        output CSV file
    header: list
        column names
    rows: list
        row values
    """
    filename = pathlib.Path(filename).expanduser().absolute()
    filename.parent.mkdir(parents=True, exist_ok=True)
    with filename.open(mode='w', encoding='utf8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(v) if isinstance(v, (float, np.floating))
                else v for v in row])
    logging.info(str(compressuser(filename)))
    return filename

# PURPOSE: write a JSON report
def write_json(filename: str | pathlib.Path, report: dict):
    """
    Write a report to a JSON file

    Parameters
    ----------
    filename: str or pathlib.Path
        output JSON file
    report: dict
        report contents
    """
    filename = pathlib.Path(filename).expanduser().absolute()
    filename.parent.mkdir(parents=True, exist_ok=True)
    filename.write_text(dumps(report) + '\n', encoding='utf8')
    logging.info(str(compressuser(filename)))
    return filename

# PURPOSE: resolve an output file against the configured output directory
def output_path(filename: str | pathlib.Path):
    """
    Resolve a relative output file within the ``outdir`` parameter

    Parameters
    ----------
    filename: str or pathlib.Path
        requested output filename
    """
    filename = pathlib.Path(filename).expanduser()
    if not filename.is_absolute():
        filename = pathlib.Path(default('outdir')).expanduser().joinpath(filename)
    return filename.absolute()

def compressuser(filename: str | pathlib.Path):
    """
    Tilde-compresses a file to be relative to the home directory

    Parameters
    ----------
    filename: str
        output filename
    """
    filename = pathlib.Path(filename).expanduser().absolute()
    try:
        relative_to = filename.relative_to(pathlib.Path().home())
    except ValueError as exc:
        return filename
    else:
        return pathlib.Path('~').joinpath(relative_to)
