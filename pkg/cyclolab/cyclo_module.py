import random
import re
from pathlib import Path
from typing import Dict, List, Tuple

from sympy import primerange

from cyclolab.exceptions import InvalidArgument
from cyclolab.models.cyclotomic import CycloElem
from cyclolab.models.units import cyclotomic_unit

_EXPRESSION = re.compile(r'^(lambda|zeta)\^(-?\d+)$|^delta_(\d+)$')


def primes_in_range(lo: int, hi: int, cap: int = 2 ** 14) -> List[int]:
    """
    Odd primes in [lo, hi]

    Parameters
    ----------
    lo : int
        lower end, inclusive
    hi : int
        upper end, inclusive
    cap : int
        largest value hi may take

    Returns
    -------
    list
        ascending odd primes, possibly empty
    """
    if hi > cap:
        raise InvalidArgument(f'range end {hi} exceeds the prime cap {cap}')
    return [p for p in primerange(max(lo, 3), hi + 1)]


def parse_range(text: str) -> Tuple[int, int]:
    """
    "LO:HI" -> (lo, hi); a single number N means N:N

    Examples
    --------
    >>> parse_range('5:31')
    (5, 31)
    """
    lo, sep, hi = text.partition(':')
    try:
        bounds = (int(lo), int(hi if sep else lo))
    except ValueError as e:
        raise InvalidArgument(f'malformed range {text!r}, expected LO:HI') from e
    if bounds[0] > bounds[1]:
        raise InvalidArgument(f'empty range {text!r}')
    return bounds


def parse_split(text: str) -> Tuple[int, int]:
    """"d:g" -> (d, g)"""
    d, sep, g = text.partition(':')
    try:
        return int(d), int(g)
    except ValueError as e:
        raise InvalidArgument(f'malformed splitting {text!r}, expected d:g') from e


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in re.split(r'[,\s]+', text.strip()) if t]
    except ValueError as e:
        raise InvalidArgument(f'malformed integer list {text!r}') from e


def make_rng(seed: int, p: int) -> random.Random:
    """Per-prime generator; the same (seed, p) always yields the same stream."""
    return random.Random(f'{seed}:{p}')


def fixture_expression(expr: str, p: int, a: int) -> CycloElem:
    """
    Recompute the element a fixture claims to hold

    Parameters
    ----------
    expr : str
        lambda^k, zeta^k or delta_b
    p : int
        prime
    a : int
        precision

    Returns
    -------
    CycloElem
    """
    match = _EXPRESSION.match(expr.strip())
    if not match:
        raise InvalidArgument(f'unknown fixture expression {expr!r}')
    base, exponent, index = match.groups()
    if index is not None:
        return cyclotomic_unit(p, int(index), a)
    k = int(exponent)
    if base == 'zeta':
        return CycloElem.zeta(p, a, k)
    if k < 0:
        raise InvalidArgument('lambda takes non-negative exponents')
    return CycloElem.lam(p, a, k)


def read_fixture(path) -> Tuple[Dict[str, str], CycloElem]:
    """
    Load a CycloElem fixture file

    Metadata comes from "# key=value" lines, the element from the rest.

    Returns
    -------
    tuple
        (metadata, element)
    """
    text = Path(path).read_text()
    meta = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith('#') and '=' in line:
            key, _, value = line[1:].strip().partition('=')
            meta[key.strip()] = value.strip()
    return meta, CycloElem.from_text(text)
