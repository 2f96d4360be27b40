import logging
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence, Tuple

from cyclolab.exceptions import InvalidArgument, InvariantViolation
from cyclolab.models.annihilators import primitive_root, require_primitive_root, structure_bounds_check
from cyclolab.models.bernoulli import irregular_indices
from cyclolab.models.cyclotomic import (
    CycloElem,
    encode_zeta_poly,
    v_pi,
    sigma_pow,
    conjugate,
    normalize,
    logarithm,
    teichmuller,
    )
from cyclolab.models.cyclotomic.element import pack_coeffs, unpack_coeffs
from cyclolab.models.singular import SingularCandidate, closed_form_element, verify_closed_form
from .attributes import UnitEigencomponent, SurveyReport

_logger = logging.getLogger(__name__)


def cyclotomic_unit(p: int, a_idx: int, a: int = 4) -> CycloElem:
    """
    delta_a = (1 - zeta^a)(1 - zeta^{-a}) / ((1 - zeta)(1 - zeta^{-1}))

    Each quotient is a geometric sum: (1 - zeta^a)/(1 - zeta) = 1 + zeta + ... + zeta^{a-1}.

    Parameters
    ----------
    p : int
        odd prime
    a_idx : int
        index, not divisible by p
    a : int
        precision

    Returns
    -------
    CycloElem
    """
    r = a_idx % p
    if r == 0:
        raise InvalidArgument(f'delta_{a_idx} is undefined for p={p}')
    forward = [0] * p
    backward = [0] * p
    for i in range(r):
        forward[i] = 1
        backward[(-i) % p] = 1
    return encode_zeta_poly(p, a, forward) * encode_zeta_poly(p, a, backward)


@lru_cache(maxsize=32)
def _conjugate_logs(p: int, u: int, a: int, base_index: int) -> Tuple[CycloElem, ...]:
    # sigma^j(log delta^{p-1}) for j = 0..p-2
    log_unit = logarithm(normalize(cyclotomic_unit(p, base_index, a)))
    return tuple(sigma_pow(log_unit, j, u) for j in range(p - 1))


def _combine(elements: Sequence[CycloElem], weights: Sequence[int], p: int, a: int) -> CycloElem:
    # sum_j weights[j] * elements[j], one packed big-int product per term
    modulus = p ** a
    width = ((p - 1) * modulus * modulus).bit_length() // 8 + 1
    total = 0
    for x, w in zip(elements, weights):
        if w:
            total += w * pack_coeffs(x.coeffs, width)
    return CycloElem(p, a, tuple(unpack_coeffs(total, p - 1, width)))


def _component_log(p: int, u: int, n: int, a: int, base_index: int) -> CycloElem:
    modulus = p ** a
    step = pow(teichmuller(u, p, a), -2 * n, modulus)
    weights, w = [], 1
    for _ in range(p - 1):
        weights.append(w)
        w = w * step % modulus
    return _combine(_conjugate_logs(p, u, a, base_index), weights, p, a)


def eigencomponent(p: int, u: Optional[int] = None, n: int = 1, a: int = 4,
                   base_index: Optional[int] = None) -> UnitEigencomponent:
    """
    The u^{2n} eigencomponent of the sigma-orbit of delta_u

    The component is computed through its logarithm,
    log eps' = sum_j omega(u)^{-2nj} sigma^j(log delta_u^{p-1}),
    whose Teichmuller weights reduce to w_j = u^{-2nj} mod p. This makes
    eps' an exact sigma-eigenvector at the working precision; it agrees with
    the normalized weighted product mod pi^{p+1}.

    Parameters
    ----------
    p : int
        prime, at least 5
    u : int
        primitive root, smallest one when omitted
    n : int
        half index, 1 <= n <= (p-3)/2
    a : int
        working precision
    base_index : int
        start the orbit at delta_b instead of delta_u

    Returns
    -------
    UnitEigencomponent
        classified, with the eigen-congruence re-checked
    """
    u = primitive_root(p) if u is None else require_primitive_root(p, u)
    if p < 5 or not 1 <= n <= (p - 3) // 2:
        raise InvalidArgument(f'n={n} outside [1, (p-3)/2] for p={p}')
    if a < 2:
        raise InvalidArgument('eigencomponents need precision a >= 2')
    base_index = u if base_index is None else base_index
    weights = tuple(pow(u, -2 * n * j, p) for j in range(p - 1))

    log = _component_log(p, u, n, a, base_index)
    if v_pi(log) is None:
        _logger.debug(f'sentinel valuation, retrying: p={p}, n={n}, a={a + 2}')
        a += 2
        log = _component_log(p, u, n, a, base_index)

    component = UnitEigencomponent(p=p, u=u, n=n, a=a, weights=weights, log=log, base_index=base_index)
    mu = component.mu
    # sigma(eps') = eps'^mu mod pi^{p+1}  <=>  sigma(log) = mu log mod pi^{p+1}
    drift = v_pi(sigma_pow(log, 1, u) - log * mu)
    if drift is not None and drift < p + 1:
        raise InvariantViolation(f'eigen-congruence fails: p={p}, n={n}')
    if conjugate(log) != log:
        raise InvariantViolation(f'eigencomponent is not real: p={p}, n={n}')
    if pow(mu, (p - 1) // 2, p) != 1:
        raise InvariantViolation(f'unit eigenvalue {mu} is not a square: p={p}')
    classify_eigencomponent(component)
    return component


def classify_eigencomponent(c: UnitEigencomponent) -> Tuple[Optional[int], Optional[int], bool]:
    """
    Measure v = v_pi(eps' - 1) and classify

    On 1 + pi^2 the logarithm preserves valuations, so v is read off the log.

    Returns
    -------
    tuple
        (v, a_level, primary)
    """
    v = v_pi(c.log)
    c.valuation = v
    c.locally_trivial = v is None
    c.primary = v is None or v >= c.p + 1
    c.a_level = None
    if v is not None:
        if (v - 2 * c.n) % (c.p - 1):
            message = f'residue law: v={v} != 2n={2 * c.n} mod {c.p - 1}'
            _logger.error(f'p={c.p}, n={c.n}, {message}')
            c.violations.append(message)
        else:
            c.a_level = (v - 2 * c.n) // (c.p - 1)
    _logger.debug(f'p={c.p}, u={c.u}, a={c.a}, 2n={2 * c.n}, v={v}, primary={c.primary}')
    return c.valuation, c.a_level, c.primary


def _leading_scale(c: UnitEigencomponent) -> int:
    v = c.valuation
    if v is None or v >= c.p - 1:
        return 1
    return pow(c.log.coeffs[v] % c.p, -1, c.p)


def unit_quotient_check(c1: UnitEigencomponent, c2: UnitEigencomponent) -> Tuple[Optional[int], bool]:
    """
    v_pi(eps_1 eps_2^{-1} - 1) after rescaling both leading coefficients to 1

    Parameters
    ----------
    c1, c2 : UnitEigencomponent
        same prime and eigenvalue

    Returns
    -------
    tuple
        (v, holds) with holds meaning v >= p + 1
    """
    if (c1.p, c1.mu) != (c2.p, c2.mu):
        raise InvalidArgument(f'quotient needs a shared eigenvalue, got {c1.mu} and {c2.mu}')
    difference = c1.log * _leading_scale(c1) - c2.log * _leading_scale(c2)
    v = v_pi(difference)
    holds = v is None or v >= c1.p + 1
    if not holds:
        _logger.error(f'unit quotient not primary: p={c1.p}, mu={c1.mu}, v={v}')
    return v, holds


def unit_closed_form(p: int, u: int, n: int, gamma_p3: int, a: int = 2) -> SingularCandidate:
    """
    Closed-form unit model with even exponent 2n, (p-1)/2 < 2n <= p-3

    Returns
    -------
    SingularCandidate
        provenance formula, verified mod pi^{p-1}
    """
    k = 2 * n
    if not (p - 1) / 2 < k <= p - 3:
        raise InvalidArgument(f'exponent {k} outside ((p-1)/2, p-3] for p={p}')
    element = closed_form_element(p, u, k, gamma_p3, a)
    verify_closed_form(p, u, k, element, gamma_p3)
    return SingularCandidate(p=p, u=u, mu=pow(u, k, p), m=k, element=element,
                             gamma_p3=gamma_p3, provenance='formula', verified=p - 1)


def unit_survey(p: int, u: Optional[int] = None, a: int = 4, r_p_plus: int = 0) -> SurveyReport:
    """
    Classify every eigencomponent of p and check the structure bounds

    Parameters
    ----------
    p : int
        prime, at least 5
    u : int
        primitive root, smallest one when omitted
    a : int
        survey precision
    r_p_plus : int
        assumed plus rank

    Returns
    -------
    SurveyReport
        anomalies are listed, never raised

    Examples
    --------
    >>> unit_survey(37).primary_index_set
    [32]
    """
    u = primitive_root(p) if u is None else require_primitive_root(p, u)
    if p < 5:
        raise InvalidArgument(f'unit survey needs p >= 5, got {p}')
    components = [eigencomponent(p, u, n, a) for n in range(1, (p - 3) // 2 + 1)]
    primary = sorted(2 * c.n for c in components if c.primary)
    rho1_local = sum(1 for c in components if c.primary and not c.locally_trivial)
    indices = irregular_indices(p)
    i_p = len(indices)
    bounds = structure_bounds_check(i_p, r_p_plus, i_p, i_p, rho1_local)

    violations = [f'2n={2 * c.n}: {message}' for c in components for message in c.violations]
    violations.extend(f'bound failed: {b.label} ({b.lhs} vs {b.rhs})' for b in bounds.failures())

    quotient_checks = []
    for c1, c2 in combinations(components, 2):
        if c1.mu == c2.mu:
            v, holds = unit_quotient_check(c1, c2)
            quotient_checks.append((2 * c1.n, 2 * c2.n, v, holds))
            if not holds:
                violations.append(f'quotient of 2n={2 * c1.n} and 2n={2 * c2.n} not primary')

    report = SurveyReport(p=p, u=u, a=a, components=components, primary_index_set=primary,
                          rho1_local=rho1_local, irregular_indices=indices, i_p=i_p, r_p_plus=r_p_plus,
                          matches_bernoulli=primary == indices, bounds=bounds,
                          quotient_checks=quotient_checks, violations=violations)
    _logger.debug(f'p={p}, u={u}, a={a}, primary={primary}, rho1_local={rho1_local}, i_p={i_p}')
    return report


def raw_normalized_check(c: UnitEigencomponent) -> Tuple[Optional[int], bool]:
    """
    Compare the weighted product of conjugates with the log-domain component

    normalize(eps) and eps' differ by sum (w_j - w~_j) sigma^j(log delta^{p-1})
    in the log domain, with every w_j - w~_j divisible by p.

    Returns
    -------
    tuple
        (v_pi(normalize(eps) - eps'), holds) with holds meaning v >= p + 1
    """
    v = v_pi(normalize(c.raw) - c.element)
    holds = v is None or v >= c.p + 1
    if not holds:
        _logger.error(f'raw and normalized components disagree: p={c.p}, 2n={2 * c.n}, v={v}')
    return v, holds
