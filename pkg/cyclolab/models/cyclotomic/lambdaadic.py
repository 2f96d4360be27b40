import logging
from functools import lru_cache
from math import comb
from typing import Optional

from cyclolab.exceptions import (
    InvalidArgument,
    NotInvertible,
    InexactDivision,
    InsufficientPrecision,
    InvariantViolation,
    TheoremViolation,
    )
from .element import CycloElem, encode_zeta_poly, decode_zeta_poly
from .attributes import FrobeniusWitness

_logger = logging.getLogger(__name__)


def p_adic_order(n: int, p: int) -> int:
    if n == 0:
        raise InvalidArgument('0 has infinite order')
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def v_pi(x: CycloElem) -> Optional[int]:
    """
    pi-adic valuation of x

    The candidate valuations k + (p-1) v_p(b_k) are pairwise distinct mod p-1,
    so their minimum is exact.

    Parameters
    ----------
    x : CycloElem

    Returns
    -------
    int
        valuation in [0, a(p-1)), None when x vanishes at its precision
    """
    best = None
    for k, b in enumerate(x.coeffs):
        if best is not None and k >= best:
            break
        if b:
            candidate = k + (x.p - 1) * p_adic_order(b, x.p)
            if best is None or candidate < best:
                best = candidate
    return best


def format_valuation(v: Optional[int], cap: int) -> str:
    return f'v={v} exact' if v is not None else f'v>={cap}'


def galois_action(x: CycloElem, s: int) -> CycloElem:
    """The automorphism zeta -> zeta^s applied to x."""
    p = x.p
    if s % p == 0:
        raise InvalidArgument('zeta -> zeta^0 is not an automorphism')
    permuted = [0] * p
    for i, c in enumerate(decode_zeta_poly(x)):
        permuted[i * s % p] += c
    return encode_zeta_poly(p, x.a, permuted)


def sigma_pow(x: CycloElem, j: int, u: int) -> CycloElem:
    """sigma^j(x) where sigma(zeta) = zeta^u"""
    j %= x.p - 1
    if j == 0:
        return x
    return galois_action(x, pow(u, j, x.p))


def conjugate(x: CycloElem) -> CycloElem:
    return galois_action(x, x.p - 1)


def power(x: CycloElem, e: int) -> CycloElem:
    return x ** e


def invert(x: CycloElem) -> CycloElem:
    """
    Inverse of a unit by Newton lifting y <- y (2 - x y)

    Raises
    ------
    NotInvertible
        when v_pi(x) > 0
    """
    b0 = x.coeffs[0]
    if b0 % x.p == 0:
        raise NotInvertible(f'v_pi(x) > 0, x={x!r}')
    y = CycloElem.from_int(x.p, x.a, pow(b0, -1, x.modulus))
    while True:
        error = 1 - x * y
        if error.is_zero:
            return y
        y = y + y * error


def congruent_mod_pi(x: CycloElem, y: CycloElem, k: int) -> bool:
    cap = min(x.cap, y.cap)
    if k > cap:
        raise InsufficientPrecision(f'congruence mod pi^{k} asked at precision pi^{cap}')
    v = v_pi(x - y)
    return v is None or v >= k


def normalize(x: CycloElem) -> CycloElem:
    """x^{p-1}, which is 1 mod pi for every unit x"""
    if x.coeffs[0] % x.p == 0:
        raise NotInvertible(f'cannot normalize a non-unit, x={x!r}')
    return x ** (x.p - 1)


@lru_cache(maxsize=None)
def _minus_e_inverse(p: int, a: int) -> CycloElem:
    # lambda^{p-1} = -p E with E a unit; returns -E^{-1}, so p = lambda^{p-1} * (-E^{-1})
    e = CycloElem(p, a, tuple(comb(p, j + 1) // p for j in range(p - 1)))
    return -invert(e)


def divide_by_lambda(x: CycloElem, k: int) -> CycloElem:
    """
    y with y * lambda^k = x

    Parameters
    ----------
    x : CycloElem
        dividend, v_pi(x) >= k
    k : int
        exponent

    Returns
    -------
    CycloElem
        at precision a - ceil(k / (p-1))

    Raises
    ------
    InexactDivision
        when v_pi(x) < k
    InsufficientPrecision
        when no p-digit would survive
    """
    if k < 0:
        raise InvalidArgument('negative exponent')
    if k == 0:
        return x
    p = x.p
    v = v_pi(x)
    if v is not None and v < k:
        raise InexactDivision(f'v_pi(x)={v} < {k}')
    q, r = divmod(k, p - 1)
    new_a = x.a - q - (1 if r else 0)
    if new_a < 1:
        raise InsufficientPrecision(f'dividing by lambda^{k} exhausts precision a={x.a}')

    y = x
    if q:
        # lambda^{q(p-1)} = p^q (-E)^q
        shrunk = CycloElem(p, x.a - q, tuple(c // p ** q for c in x.coeffs))
        y = shrunk * _minus_e_inverse(p, x.a - q) ** q
    if r:
        a = y.a - 1
        shifted = CycloElem(p, a, y.coeffs[r:] + (0,) * r)
        # low coefficients are divisible by p; p lambda^{i-r} = -E^{-1} lambda^{p-1+i-r}
        low = [0] * (p - 1)
        for i in range(r):
            low[p - 1 + i - r] = y.coeffs[i] // p
        y = shifted + CycloElem(p, a, tuple(low)) * _minus_e_inverse(p, a)

    if y * CycloElem.lam(p, y.a, k) != x.with_precision(y.a):
        raise InvariantViolation(f'lambda division self-check failed: p={p}, k={k}')
    return y


def frobenius_power_check(alpha: CycloElem, beta: CycloElem) -> FrobeniusWitness:
    """
    Measure v_pi(alpha^p - beta^p) for a unit alpha = beta mod pi

    Returns
    -------
    FrobeniusWitness

    Raises
    ------
    InvalidArgument
        when a precondition fails
    TheoremViolation
        when the measured valuation is below p + 1
    """
    if alpha.p != beta.p:
        raise InvalidArgument('alpha and beta live in different fields')
    p = alpha.p
    if min(alpha.a, beta.a) < 2:
        raise InvalidArgument('the check needs precision a >= 2')
    if alpha.coeffs[0] % p == 0:
        raise InvalidArgument('alpha must be a unit')
    if not congruent_mod_pi(alpha, beta, 1):
        raise InvalidArgument('alpha and beta must agree mod pi')
    difference = alpha ** p - beta ** p
    witness = FrobeniusWitness(p=p, valuation=v_pi(difference), cap=difference.cap, bound=p + 1)
    if not witness.holds:
        _logger.error(f'frobenius congruence violated: p={p}, v={witness.valuation}')
        raise TheoremViolation(f'v_pi(alpha^p - beta^p)={witness.valuation} < {p + 1}', witness)
    return witness


def teichmuller(value: int, p: int, a: int) -> int:
    """The (p-1)-th root of unity mod p^a congruent to value mod p."""
    return pow(value, p ** (a - 1), p ** a)


def groupring_power(x: CycloElem, e) -> CycloElem:
    """
    x^{P(sigma)} = prod_j sigma^j(x)^{c_j} for a GroupRingElem P

    Parameters
    ----------
    x : CycloElem
    e : GroupRingElem
        over the same prime

    Returns
    -------
    CycloElem
    """
    if e.p != x.p:
        raise InvalidArgument('group ring element over a different prime')
    result = CycloElem.one(x.p, x.a)
    for j, c in enumerate(e.coeffs):
        if c:
            result = result * sigma_pow(x, j, e.u) ** c
    return result
