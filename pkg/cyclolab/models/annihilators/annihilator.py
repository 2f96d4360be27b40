import logging
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Optional, Tuple

from sympy import isprime
from sympy.ntheory import primitive_root as _sympy_primitive_root, is_primitive_root

from cyclolab.exceptions import InvalidArgument, InvariantViolation, EigenvalueRejected
from .polynomial import FpPoly
from .groupring import GroupRingElem
from .eigenset import EigenSet
from .attributes import ValidationOptions, RankProfile, BoundComparison, BoundsReport

_logger = logging.getLogger(__name__)

# Rules whose soundness rests on p not dividing a class number we never compute.
HYPOTHESIS_DEPENDENT = {
    'mu-equals-u': False,
    'mu-equals-one': False,
    'mu-equals-minus-one': False,
    'vandiver-plus-part': True,
}


def require_odd_prime(p: int) -> int:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise InvalidArgument(f'{p} is not an odd prime')
    return p


def primitive_root(p: int) -> int:
    """
    Smallest positive primitive root mod p

    Parameters
    ----------
    p : int
        odd prime

    Returns
    -------
    int

    Examples
    --------
    >>> primitive_root(37)
    2
    """
    require_odd_prime(p)
    return int(_sympy_primitive_root(p))


def require_primitive_root(p: int, u: int) -> int:
    require_odd_prime(p)
    if not 1 <= u < p or not is_primitive_root(u, p):
        raise InvalidArgument(f'{u} is not a primitive root mod {p}')
    return u


@lru_cache(maxsize=None)
def power_table(p: int, u: int) -> Tuple[int, ...]:
    """
    The residues u_i = u^i mod p for i = 0..p-2

    Parameters
    ----------
    p : int
        odd prime
    u : int
        primitive root mod p

    Returns
    -------
    tuple
    """
    require_primitive_root(p, u)
    table = [1]
    for _ in range(p - 2):
        table.append(table[-1] * u % p)
    return tuple(table)


def u_index(p: int, u: int, i: int) -> int:
    """u_i for any integer i; u_{-i} is the inverse of u_i."""
    return power_table(p, u)[i % (p - 1)]


@lru_cache(maxsize=None)
def _log_table(p: int, u: int) -> Dict[int, int]:
    return {value: i for i, value in enumerate(power_table(p, u))}


def discrete_log(p: int, u: int, mu: int) -> int:
    try:
        return _log_table(p, u)[mu % p]
    except KeyError as e:
        raise InvalidArgument(f'{mu} has no discrete log mod {p}') from e


def poly_from_roots(p: int, roots: Iterable[int]) -> FpPoly:
    """
    Monic polynomial vanishing exactly on roots

    Parameters
    ----------
    p : int
        odd prime
    roots : iterable of int
        pairwise distinct residues in [1, p)

    Returns
    -------
    FpPoly
    """
    roots = list(roots)
    if len(set(roots)) != len(roots):
        raise InvalidArgument(f'duplicate roots in {sorted(roots)}')
    result = FpPoly.constant(p, 1)
    for r in sorted(roots):
        if not 1 <= r < p:
            raise InvalidArgument(f'root {r} outside [1, {p})')
        result = result * FpPoly(p, (-r, 1))
    return result


def poly_divrem(A: FpPoly, B: FpPoly) -> Tuple[FpPoly, FpPoly]:
    return divmod(A, B)


def _require_divisor(p: int, d: int):
    if d < 1 or (p - 1) % d:
        raise InvalidArgument(f'{d} does not divide p-1={p - 1}')


def induced_eigenvalues(M: EigenSet, d: int) -> EigenSet:
    """
    The set {mu^d : mu in M}; its size is r_d

    Parameters
    ----------
    M : EigenSet
        eigenvalue set
    d : int
        divisor of p-1

    Returns
    -------
    EigenSet
    """
    _require_divisor(M.p, d)
    return EigenSet.from_values(M.p, M.u, (pow(mu, d, M.p) for mu in M))


def induced_min_poly(M: EigenSet, d: int) -> FpPoly:
    """
    P_{r_d}(U^d) expanded in U, checked to be divisible by P_{r_1}(U)

    Parameters
    ----------
    M : EigenSet
        eigenvalue set
    d : int
        divisor of p-1

    Returns
    -------
    FpPoly
        monic of degree d * r_d
    """
    p = M.p
    result = FpPoly.constant(p, 1)
    for nu in induced_eigenvalues(M, d):
        result = result * (FpPoly.monomial(p, d) - FpPoly.constant(p, nu))
    _, remainder = divmod(result, poly_from_roots(p, M))
    if not remainder.is_zero:
        raise InvariantViolation(f'P_r1 does not divide P_rd(U^d): p={p}, d={d}, M={M.values}')
    return result


def annihilator_cofactor(M: EigenSet, d: int) -> FpPoly:
    """Q_d with P_{r_d}(U^d) = P_{r_1}(U) * Q_d(U)."""
    induced = induced_min_poly(M, d)
    base = poly_from_roots(M.p, M)
    quotient, _ = divmod(induced, base)
    if base * quotient != induced:
        raise InvariantViolation(f'cofactor check failed: p={M.p}, d={d}')
    return quotient


def symmetric_coefficients(M: EigenSet, d: int) -> Tuple[int, ...]:
    """
    Elementary symmetric functions S_0..S_{r_d} of the distinct mu^d

    P_{r_d}(U^d) = sum_k (-1)^k S_k U^{d (r_d - k)}.

    Returns
    -------
    tuple
    """
    p = M.p
    elementary = [1]
    for nu in induced_eigenvalues(M, d):
        elementary.append(0)
        for k in range(len(elementary) - 1, 0, -1):
            elementary[k] = (elementary[k] + nu * elementary[k - 1]) % p
    return tuple(elementary)


def reassemble_from_symmetric(p: int, coefficients: Tuple[int, ...], d: int) -> FpPoly:
    r = len(coefficients) - 1
    dense = [0] * (d * r + 1)
    for k, s in enumerate(coefficients):
        dense[d * (r - k)] = (-1) ** k * s
    return FpPoly(p, tuple(dense))


def rank_inequality_report(p: int, M: EigenSet, d: int, g: Optional[int] = None) -> RankProfile:
    """
    Ranks r_1, r_d, r_g of M and the inequalities linking them

    Parameters
    ----------
    p : int
        odd prime
    M : EigenSet
        eigenvalue set over p
    d : int
        divisor of p-1
    g : int
        complementary coprime divisor, d * g = p - 1

    Returns
    -------
    RankProfile
    """
    if M.p != p:
        raise InvalidArgument(f'eigenvalue set is over {M.p}, not {p}')
    _require_divisor(p, d)
    if g is not None:
        _require_divisor(p, g)
        if d * g != p - 1 or gcd(d, g) != 1:
            raise InvalidArgument(f'({d}, {g}) is not a coprime splitting of {p - 1}')

    r_1 = len(M)
    r_d = len(induced_eigenvalues(M, d))
    classes: Dict[int, list] = {}
    for mu in M:
        classes.setdefault(pow(mu, d, p), []).append(mu)
    profile = RankProfile(
        p=p, d=d, g=g, r_1=r_1, r_d=r_d, r_g=None,
        lower_bound_ok=r_d <= r_1,
        upper_bound_ok=r_1 <= d * r_d,
        classes=[(nu, tuple(mus)) for nu, mus in sorted(classes.items())],
        induced_poly=induced_min_poly(M, d).coeffs,
    )
    if g is not None:
        r_g = len(induced_eigenvalues(M, g))
        if r_d < 1 or r_g < 1:
            raise InvalidArgument('the product inequality needs r_d >= 1 and r_g >= 1')
        profile.r_g = r_g
        profile.reverse_bounds_ok = r_g <= r_1 <= g * r_g
        profile.product_ok = r_d * r_g >= r_1
        profile.rank_one_ok = (r_d != 1 or r_g == r_1) and (r_g != 1 or r_d == r_1)

    if not profile.passed:
        _logger.error(f'rank inequality violated: p={p}, d={d}, g={g}, r_1={r_1}, r_d={r_d}, r_g={profile.r_g}')
    return profile


def stickelberger_element(p: int, u: int) -> GroupRingElem:
    """p*theta = sum_m u_m sigma^{-m}"""
    table = power_table(p, u)
    coeffs = [0] * (p - 1)
    for m, u_m in enumerate(table):
        coeffs[(-m) % (p - 1)] = u_m
    return GroupRingElem(p, u, tuple(coeffs))


def groupring_eval_scalar(e: GroupRingElem, s: int) -> int:
    return e.eval_scalar(s)


def validate_eigenvalue_set(p: int, u: int, M: Iterable[int], opts: ValidationOptions = None) -> EigenSet:
    """
    Validate a proposed eigenvalue set against the exclusion rules

    Parameters
    ----------
    p : int
        odd prime
    u : int
        primitive root mod p
    M : iterable of int
        proposed eigenvalues
    opts : ValidationOptions
        rule toggles, every classical exclusion on by default

    Returns
    -------
    EigenSet

    Raises
    ------
    EigenvalueRejected
        carrying the identifier of the first violated rule
    """
    opts = opts or ValidationOptions()
    require_primitive_root(p, u)
    values = list(M)
    for mu in values:
        rule = None
        if not 1 <= mu < p:
            rule = 'mu-out-of-range'
        elif opts.reject_one and mu == 1:
            rule = 'mu-equals-one'
        elif opts.reject_u and mu == u:
            rule = 'mu-equals-u'
        elif opts.reject_minus_one and mu == p - 1:
            rule = 'mu-equals-minus-one'
        elif opts.vandiver and pow(mu, (p - 1) // 2, p) == 1:
            rule = 'vandiver-plus-part'
        if rule is not None:
            _logger.error(f'eigenvalue rejected: p={p}, u={u}, mu={mu}, rule={rule}')
            raise EigenvalueRejected(rule, mu)
    return EigenSet.from_values(p, u, values, keep_multiplicity=len(set(values)) != len(values))


def minus_plus_split(p: int, u: int, M: EigenSet) -> Tuple[EigenSet, EigenSet]:
    if (p, u) != (M.p, M.u):
        raise InvalidArgument(f'eigenvalue set belongs to p={M.p}, u={M.u}, not p={p}, u={u}')
    minus = [(mu, m) for mu, m in M.members if m % 2 == 1]
    plus = [(mu, m) for mu, m in M.members if m % 2 == 0]
    return EigenSet(p, u, tuple(minus)), EigenSet(p, u, tuple(plus))


def structure_bounds_check(r_p_minus: int, r_p_plus: int, r_1_minus: int, i_p: int, rho_1: int) -> BoundsReport:
    """
    r_p^- - r_p^+ <= i_p = r_1^- <= r_p^-  and  r_p^- - r_p^+ <= rho_1 <= r_p^-

    Returns
    -------
    BoundsReport
        every comparison reported separately
    """
    for value in (r_p_minus, r_p_plus, r_1_minus, i_p, rho_1):
        if value < 0:
            raise InvalidArgument('structure bounds take non-negative counts')
    gap = r_p_minus - r_p_plus
    comparisons = [
        BoundComparison('r_p^- - r_p^+ <= i_p', gap, i_p, gap <= i_p),
        BoundComparison('i_p = r_1^-', i_p, r_1_minus, i_p == r_1_minus),
        BoundComparison('i_p <= r_p^-', i_p, r_p_minus, i_p <= r_p_minus),
        BoundComparison('r_1^- <= r_p^-', r_1_minus, r_p_minus, r_1_minus <= r_p_minus),
        BoundComparison('r_p^- - r_p^+ <= rho_1', gap, rho_1, gap <= rho_1),
        BoundComparison('rho_1 <= r_p^-', rho_1, r_p_minus, rho_1 <= r_p_minus),
    ]
    return BoundsReport(comparisons)
