import logging
import random
from functools import lru_cache
from math import prod
from typing import List, Optional, Sequence, Tuple

from cyclolab.exceptions import InvalidArgument, InvariantViolation
from cyclolab.models.annihilators import power_table, require_primitive_root
from cyclolab.models.cyclotomic import (
    CycloElem,
    encode_zeta_poly,
    decode_zeta_poly,
    v_pi,
    sigma_pow,
    invert,
    congruent_mod_pi,
    teichmuller,
    p_adic_order,
    )
from .attributes import (
    SingularCandidate,
    EigenSpace,
    GammaRecord,
    ValuationAnalysis,
    ProductClassification,
    QuotientCheck,
    )

_logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def eigen_basis(p: int, u: int, a: int) -> Tuple[CycloElem, ...]:
    """
    g_i = e_i(lambda^i) for i = 0..p-2

    e_i = (p-1)^{-1} sum_j omega(u)^{-ij} sigma^j is the idempotent of the
    Teichmuller character omega^i, so sigma(g_i) = omega(u)^i g_i exactly mod
    p^a and v_pi(g_i) = i.
    """
    require_primitive_root(p, u)
    modulus = p ** a
    omega = teichmuller(u, p, a)
    scale = pow(p - 1, -1, modulus)
    conjugates = [sigma_pow(CycloElem.lam(p, a), j, u) for j in range(p - 1)]
    powers = [CycloElem.one(p, a) for _ in range(p - 1)]
    basis = []
    for i in range(p - 1):
        acc = [0] * (p - 1)
        omega_inv_i = pow(omega, -i, modulus)
        weight = 1
        for j in range(p - 1):
            for k, c in enumerate(powers[j].coeffs):
                acc[k] += weight * c
            weight = weight * omega_inv_i % modulus
        g = CycloElem(p, a, tuple(c * scale for c in acc))
        if v_pi(g) != i:
            raise InvariantViolation(f'eigen basis element {i} has valuation {v_pi(g)}')
        basis.append(g)
        powers = [power_j * conj for power_j, conj in zip(powers, conjugates)]
    return tuple(basis)


def eigen_space(p: int, u: int, mu: int, K: int, a: Optional[int] = None) -> EigenSpace:
    """
    Solutions of sigma(V) = mu V mod pi^K with v_pi(V) >= 1

    Parameters
    ----------
    p : int
        odd prime
    u : int
        primitive root
    mu : int
        eigenvalue in [1, p)
    K : int
        congruence depth, at most a(p-1)
    a : int
        coefficient precision, smallest sufficient one when omitted

    Returns
    -------
    EigenSpace
        every generator re-checked by substitution
    """
    if not 1 <= mu < p:
        raise InvalidArgument(f'mu={mu} outside [1, {p})')
    a = max(2, -(-K // (p - 1))) if a is None else a
    cap = a * (p - 1)
    if K > cap:
        raise InvalidArgument(f'K={K} beyond precision cap {cap}')
    modulus = p ** a
    omega = teichmuller(u, p, a)
    basis = eigen_basis(p, u, a)

    generators, indices, digits = [], [], []
    for i, g in enumerate(basis):
        gap = (pow(omega, i, modulus) - mu) % modulus
        t = a if gap == 0 else p_adic_order(gap, p)
        s = max(0, -(-(K - i) // (p - 1)) - t, 1 if i == 0 else 0)
        if i + (p - 1) * s >= cap:
            continue
        generator = g * p ** s
        if not congruent_mod_pi(sigma_pow(generator, 1, u), generator * mu, K):
            raise InvariantViolation(f'eigen generator fails substitution: p={p}, mu={mu}, i={i}')
        generators.append(generator)
        indices.append(i)
        digits.append(s)

    _logger.debug(f'p={p}, u={u}, mu={mu}, K={K}, a={a}, dimension={len(generators)}')
    return EigenSpace(p, u, mu, K, a, tuple(generators), tuple(indices), tuple(digits))


def _check_exponent(p: int, k: int, parity: int):
    if k % 2 != parity or not (p - 1) / 2 < k <= p - 2:
        raise InvalidArgument(f'exponent {k} outside ((p-1)/2, p-2] for p={p}')


def closed_form_element(p: int, u: int, k: int, gamma_p3: int, a: int = 2) -> CycloElem:
    """
    1 + gamma_{p-3} / (mu (mu - 1)) * sum_{j=0}^{p-2} mu^{-j} zeta^{u_j}, mu = u^k

    The resolvent W = sum mu^{-j} zeta^{u_j} satisfies sigma(W) = mu W mod p
    and v_pi(W) = k. The scalar is chosen so that gamma_{p-3} is the
    coefficient of zeta^{u_{p-3}} once zeta^{u_{p-2}} is eliminated.

    Parameters
    ----------
    p : int
        odd prime
    u : int
        primitive root
    k : int
        exponent, odd for singular numbers, even for units
    gamma_p3 : int
        free scalar in [0, p)
    a : int
        precision of the returned element

    Returns
    -------
    CycloElem
    """
    if not 0 <= gamma_p3 < p:
        raise InvalidArgument(f'gamma_p3={gamma_p3} outside [0, {p})')
    table = power_table(p, u)
    mu = table[k % (p - 1)]
    if mu == 1:
        raise InvalidArgument('mu = 1 has no closed form')
    scale = gamma_p3 * pow(mu * (mu - 1), -1, p) % p
    mu_inv = pow(mu, -1, p)
    zeta_coeffs = [0] * p
    zeta_coeffs[0] = 1
    weight = 1
    for u_j in table:
        zeta_coeffs[u_j] = scale * weight % p
        weight = weight * mu_inv % p
    return encode_zeta_poly(p, a, zeta_coeffs)


def verify_closed_form(p: int, u: int, k: int, element: CycloElem, gamma_p3: int):
    mu = pow(u, k, p)
    if not congruent_mod_pi(sigma_pow(element, 1, u), element ** mu, p - 1):
        raise InvariantViolation(f'closed form fails sigma(C) = C^mu mod pi^{p - 1}: p={p}, k={k}')
    nu = v_pi(element - 1)
    if gamma_p3 and nu != k:
        raise InvariantViolation(f'closed form has v_pi(C-1)={nu}, expected {k}: p={p}')


def synthesize_closed_form(p: int, u: int, m: int, gamma_p3: int, a: int = 2) -> SingularCandidate:
    """
    Closed-form singular candidate with eigenvalue mu = u^{2m+1}

    Parameters
    ----------
    p : int
        odd prime
    u : int
        primitive root
    m : int
        half index, (p-1)/2 < 2m+1 <= p-2
    gamma_p3 : int
        free scalar in [0, p)
    a : int
        coefficient precision

    Returns
    -------
    SingularCandidate
        provenance formula, verified mod pi^{p-1}

    Examples
    --------
    >>> c = synthesize_closed_form(11, 2, 3, 1)
    >>> v_pi(c.element - 1)
    7
    """
    k = 2 * m + 1
    _check_exponent(p, k, 1)
    element = closed_form_element(p, u, k, gamma_p3, a)
    verify_closed_form(p, u, k, element, gamma_p3)
    return SingularCandidate(p=p, u=u, mu=pow(u, k, p), m=k, element=element,
                             gamma_p3=gamma_p3, provenance='formula', verified=p - 1)


def gamma_recurrence(p: int, u: int, m: int, gamma_p3: int, a: int = 2) -> GammaRecord:
    """
    gamma = -gamma_{p-3}/(mu-1), gamma_j = -(mu^{-(j+1)} + ... + mu^{-1}) gamma_{p-3}

    Returns
    -------
    GammaRecord
        with the closing-equation check and the comparison against the
        closed form in the zeta basis mod p
    """
    k = 2 * m + 1
    _check_exponent(p, k, 1)
    if not 0 <= gamma_p3 < p:
        raise InvalidArgument(f'gamma_p3={gamma_p3} outside [0, {p})')
    table = power_table(p, u)
    mu = table[k]
    mu_inv = pow(mu, -1, p)
    gamma = -gamma_p3 * pow(mu - 1, -1, p) % p

    gammas = []
    partial, weight = 0, 1
    for _ in range(p - 2):
        weight = weight * mu_inv % p
        partial = (partial + weight) % p
        gammas.append(-partial * gamma_p3 % p)
    self_consistent = gammas[-1] == gamma_p3

    zeta_coeffs = [0] * p
    zeta_coeffs[0] = 1 + gamma
    for j, gamma_j in enumerate(gammas):
        zeta_coeffs[table[j]] = gamma_j
    element = encode_zeta_poly(p, a, zeta_coeffs)

    closed = closed_form_element(p, u, k, gamma_p3, a)
    agrees = decode_zeta_poly(element.with_precision(1)) == decode_zeta_poly(closed.with_precision(1))
    if not (self_consistent and agrees):
        _logger.error(f'gamma recurrence mismatch: p={p}, u={u}, mu={mu}, '
                      f'self_consistent={self_consistent}, agrees={agrees}')
    return GammaRecord(mu=mu, gamma=gamma, gammas=tuple(gammas[:-1]), gamma_p3=gamma_p3,
                       self_consistent=self_consistent, agrees_with_closed_form=agrees, element=element)


def recurrence_candidate(p: int, u: int, m: int, gamma_p3: int, a: int = 2) -> SingularCandidate:
    record = gamma_recurrence(p, u, m, gamma_p3, a)
    verify_closed_form(p, u, 2 * m + 1, record.element, gamma_p3)
    return SingularCandidate(p=p, u=u, mu=record.mu, m=2 * m + 1, element=record.element,
                             gamma_p3=gamma_p3, provenance='recurrence', verified=p - 1)


def eigen_candidate(p: int, u: int, m: int, rng: random.Random = None, a: int = 2) -> SingularCandidate:
    """
    Random candidate C = 1 + V with V from eigen_space at depth p+1

    The cross term of (1+V)^mu vanishes mod pi^{p+1} only when
    2 v_pi(V) >= p+1, hence the requirement m >= (p+1)/2.

    Parameters
    ----------
    p : int
        odd prime
    u : int
        primitive root
    m : int
        full exponent, (p+1)/2 <= m <= p-2; odd for minus-part, even for plus-part
    rng : random.Random
        source of the free coefficients
    a : int
        coefficient precision, at least 2

    Returns
    -------
    SingularCandidate
        provenance eigen-solver, verified mod pi^{p+1}
    """
    if not (p + 1) / 2 <= m <= p - 2:
        raise InvalidArgument(f'm={m} outside [(p+1)/2, p-2] for p={p}')
    rng = rng or random.Random(0)
    mu = pow(u, m, p)
    space = eigen_space(p, u, mu, p + 1, a)
    modulus = p ** space.a
    V = CycloElem.zero(p, space.a)
    for i, generator in zip(space.indices, space.generators):
        coefficient = rng.randrange(1, p) if i == m else rng.randrange(modulus)
        V = V + generator * coefficient
    element = 1 + V
    if not congruent_mod_pi(sigma_pow(element, 1, u), element ** mu, p + 1):
        raise InvariantViolation(f'eigen candidate fails sigma(C) = C^mu mod pi^{p + 1}: p={p}, m={m}')
    return SingularCandidate(p=p, u=u, mu=mu, m=m, element=element,
                             provenance='eigen-solver', verified=p + 1)


def _recheck(c: SingularCandidate):
    if c.verified < 1 or not congruent_mod_pi(sigma_pow(c.element, 1, c.u), c.element ** c.mu, c.verified):
        raise InvalidArgument(f'candidate fails its recorded congruence mod pi^{c.verified}')


def analyze_valuation(c: SingularCandidate) -> ValuationAnalysis:
    """
    nu = v_pi(C - 1) and the primary / not-primary classification

    Below p the law u^nu = mu mod p and the weak bound nu >= m must hold;
    a failure of either is recorded as a violation and logged.

    Returns
    -------
    ValuationAnalysis
    """
    _recheck(c)
    nu = v_pi(c.element - 1)
    if nu is None or nu >= c.p:
        return ValuationAnalysis(nu=nu, classification='primary', law_holds=None, weak_bound_holds=True)

    violations = []
    law_holds = None
    if nu < c.verified:
        law_holds = pow(c.u, nu, c.p) == c.mu
        if not law_holds:
            violations.append(f'u^{nu} != mu={c.mu} mod {c.p}')
    weak_bound_holds = nu >= c.m
    if not weak_bound_holds:
        violations.append(f'weak-bound: nu={nu} < m={c.m}')
    if violations:
        _logger.error(f'valuation law violated: p={c.p}, u={c.u}, mu={c.mu}, nu={nu}, violations={violations}')
    return ValuationAnalysis(nu=nu, classification='not-primary', law_holds=law_holds,
                             weak_bound_holds=weak_bound_holds, violations=violations)


def is_primary(x: CycloElem, threshold: int) -> bool:
    """
    v_pi(x - 1) >= threshold for a normalized x

    For x = 1 mod pi, a witness c = 1 mod p of x = c^p mod pi^threshold has
    c^p = 1 mod pi^{p+1}, so the p-th power test is the valuation test.

    Parameters
    ----------
    x : CycloElem
        element congruent to 1 mod pi
    threshold : int
        p for singular numbers, p+1 for units
    """
    if threshold not in (x.p, x.p + 1):
        raise InvalidArgument(f'threshold must be p or p+1, got {threshold}')
    if not congruent_mod_pi(x, CycloElem.one(x.p, x.a), 1):
        raise InvalidArgument('is_primary needs x = 1 mod pi')
    return congruent_mod_pi(x, CycloElem.one(x.p, x.a), threshold)


def product_classification(cands: Sequence[Tuple[SingularCandidate, int]]) -> ProductClassification:
    """
    Classify C = prod C_i^{alpha_i} for pairwise distinct eigenvalues

    Returns
    -------
    ProductClassification
        consistent is False when the measured outcome contradicts the factors
    """
    if not cands:
        raise InvalidArgument('empty product')
    mus = [c.mu for c, _ in cands]
    if len(set(mus)) != len(mus):
        raise InvalidArgument(f'eigenvalues must be pairwise different, got {mus}')
    p = cands[0][0].p
    factors = []
    for c, alpha in cands:
        if c.p != p:
            raise InvalidArgument('candidates over different primes')
        if not 1 <= alpha < p:
            raise InvalidArgument(f'exponent {alpha} outside [1, {p})')
        factors.append(c.element ** alpha)

    product = prod(factors[1:], start=factors[0])
    nu = v_pi(product - 1)
    factor_valuations = [v_pi(f - 1) for f in factors]
    non_primary = [v for v in factor_valuations if v is not None and v < p]
    expected_nu = min(non_primary) if non_primary else None
    classification = 'primary' if nu is None or nu >= p else 'not-primary'
    if non_primary:
        consistent = classification == 'not-primary' and nu == expected_nu
    else:
        consistent = classification == 'primary'
    if not consistent:
        _logger.error(f'product law violated: p={p}, nu={nu}, factors={factor_valuations}')
    return ProductClassification(nu=nu, classification=classification, factor_valuations=factor_valuations,
                                 expected_nu=expected_nu, consistent=consistent)


def normalize_leading_coefficient(x: CycloElem) -> Tuple[CycloElem, int]:
    """
    Raise x to n with n c_0 = 1 mod p, c_0 the leading lambda-coefficient of x - 1

    Returns
    -------
    tuple
        (x^n, n); n = 1 when v_pi(x - 1) >= p - 1
    """
    nu = v_pi(x - 1)
    if nu is None or nu >= x.p - 1:
        return x, 1
    n = pow(x.coeffs[nu] % x.p, -1, x.p)
    return x ** n, n


def quotient_primary_check(c1: SingularCandidate, c2: SingularCandidate) -> QuotientCheck:
    """
    v_pi(C_1 C_2^{-1} - 1) for two candidates sharing mu

    Parameters
    ----------
    c1, c2 : SingularCandidate
        same eigenvalue, both verified mod pi^{p+1}

    Returns
    -------
    QuotientCheck
    """
    if c1.p != c2.p or c1.mu != c2.mu:
        raise InvalidArgument(f'quotient needs a shared eigenvalue, got {c1.mu} and {c2.mu}')
    p = c1.p
    for c in (c1, c2):
        if c.verified < p + 1:
            raise InvalidArgument(f'candidate only verified mod pi^{c.verified}, need pi^{p + 1}')
        _recheck(c)
    x1, n1 = normalize_leading_coefficient(c1.element)
    x2, n2 = normalize_leading_coefficient(c2.element)
    nu = v_pi(x1 * invert(x2) - 1)
    holds = nu is None or nu >= p
    if not holds:
        _logger.error(f'quotient law violated: p={p}, mu={c1.mu}, nu={nu}')
    return QuotientCheck(nu=nu, holds=holds, exponents=(n1, n2))


def same_eigenvalue_reduction(cands: Sequence[SingularCandidate]) -> List[QuotientCheck]:
    """Quotients of every candidate by the first one; all must be primary."""
    if not cands:
        return []
    reference = cands[0]
    return [quotient_primary_check(c, reference) for c in cands[1:]]
