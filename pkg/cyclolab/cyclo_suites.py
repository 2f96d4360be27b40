import logging
import random
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Callable, Dict, List, Optional

from sympy import divisors

from .exceptions import TheCycloLabException, TheoremViolation, InvariantViolation
from .cyclo_module import fixture_expression, read_fixture
from cyclolab.models.config import RunConfig
from cyclolab.models.annihilators import (
    EigenSet,
    primitive_root,
    poly_from_roots,
    poly_divrem,
    induced_min_poly,
    rank_inequality_report,
    stickelberger_element,
    groupring_eval_scalar,
    )
from cyclolab.models.bernoulli import irregularity_report
from cyclolab.models.cyclotomic import (
    CycloElem,
    v_pi,
    sigma_pow,
    congruent_mod_pi,
    invert,
    divide_by_lambda,
    frobenius_power_check,
    logarithm,
    exponential,
    )
from cyclolab.models.singular import (
    gamma_recurrence,
    synthesize_closed_form,
    eigen_candidate,
    analyze_valuation,
    product_classification,
    same_eigenvalue_reduction,
    )
from cyclolab.models.units import unit_survey, unit_closed_form, raw_normalized_check

_logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 13
SAMPLED_PAIRS = 10


@dataclass
class SuiteResult:
    """
    Outcome of one verification suite

    Attributes
    ----------
    name : str
        suite identifier
    checks : int
        number of checks run
    failures : int
        number of failed checks
    first_counterexample : dict
        record of the first failure, None when everything passed
    """
    name: str
    checks: int = 0
    failures: int = 0
    first_counterexample: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, counterexample: Callable[[], dict]):
        self.checks += 1
        if not ok:
            self.fail(counterexample())

    def fail(self, counterexample: dict):
        self.failures += 1
        if self.first_counterexample is None:
            self.first_counterexample = counterexample
            _logger.error(f'suite={self.name}, counterexample={counterexample}')

    def to_record(self) -> dict:
        return {'suite': self.name, 'checks': self.checks, 'failures': self.failures,
                'passed': self.passed, 'first_counterexample': self.first_counterexample}

    def merge(self, other: 'SuiteResult') -> 'SuiteResult':
        return SuiteResult(self.name, self.checks + other.checks, self.failures + other.failures,
                           self.first_counterexample or other.first_counterexample)


def _guarded(result: SuiteResult, p: int, body: Callable[[], None]):
    try:
        body()
    except (TheoremViolation, InvariantViolation) as e:
        result.checks += 1
        result.fail({'p': p, 'error': type(e).__name__, 'message': str(e),
                     'record': getattr(e, 'record', None)})


def annihilator_suite(p: int, config: RunConfig, rng: random.Random) -> SuiteResult:
    result = SuiteResult('annihilator')
    u = primitive_root(p)

    def body():
        collapse = groupring_eval_scalar(stickelberger_element(p, u), u)
        result.check(collapse == p - 1, lambda: {'p': p, 'u': u, 'stickelberger': collapse})

        n = p - 1
        splittings = [(d, n // d) for d in divisors(n) if gcd(d, n // d) == 1]
        if p <= EXHAUSTIVE_LIMIT:
            sets = [s for k in (1, 2, 3) for s in combinations(range(1, p), k)]
        else:
            sets = [tuple(rng.sample(range(1, p), rng.randint(1, 3))) for _ in range(config.sampled_sets)]

        for values in sets:
            M = EigenSet.from_values(p, u, values)
            for d, g in splittings:
                profile = rank_inequality_report(p, M, d, g)
                result.check(profile.passed, lambda: {'p': p, 'u': u, 'M': list(M), 'd': d, 'g': g,
                                                      'profile': profile})
            for d in divisors(n):
                _, remainder = poly_divrem(induced_min_poly(M, d), poly_from_roots(p, M))
                result.check(remainder.is_zero, lambda: {'p': p, 'M': list(M), 'd': d,
                                                         'remainder': list(remainder.coeffs)})

    _guarded(result, p, body)
    return result


def bernoulli_suite(p: int, config: RunConfig, rng: random.Random) -> SuiteResult:
    result = SuiteResult('bernoulli')

    def body():
        report = irregularity_report(p)
        result.check(report.consistent, lambda: {'p': p, 'report': report})
        result.check(all(m % 2 == 1 for m in report.minus_eigenvalues.exponents),
                     lambda: {'p': p, 'minus_eigenvalues': report.minus_eigenvalues})

    _guarded(result, p, body)
    return result


def _random_unit(p: int, a: int, rng: random.Random) -> CycloElem:
    modulus = p ** a
    coeffs = [rng.randrange(modulus) for _ in range(p - 1)]
    coeffs[0] = rng.randrange(1, p) + p * rng.randrange(p ** (a - 1))
    return CycloElem(p, a, tuple(coeffs))


def lambda_adic_suite(p: int, config: RunConfig, rng: random.Random) -> SuiteResult:
    result = SuiteResult('lambda-adic')
    a = config.precision
    u = primitive_root(p)

    def body():
        v = v_pi(CycloElem.from_int(p, a, p))
        result.check(v == p - 1, lambda: {'p': p, 'v_pi(p)': v})

        for nu in range(1, p - 1):
            x = CycloElem.lam(p, a, nu)
            ok = congruent_mod_pi(sigma_pow(x, 1, u), x * pow(u, nu, p), nu + 1)
            result.check(ok, lambda: {'p': p, 'u': u, 'nu': nu, 'law': 'sigma(lambda^nu) = u^nu lambda^nu'})

        pairs = config.frobenius_pairs if p <= EXHAUSTIVE_LIMIT else min(config.frobenius_pairs, SAMPLED_PAIRS)
        for _ in range(pairs):
            alpha = _random_unit(p, a, rng)
            beta = alpha + CycloElem.lam(p, a) * _random_unit(p, a, rng)
            witness = frobenius_power_check(alpha, beta)
            result.check(witness.holds, lambda: {'p': p, 'witness': witness})

        for _ in range(SAMPLED_PAIRS):
            alpha = _random_unit(p, a, rng)
            product = alpha * invert(alpha)
            result.check(product == CycloElem.one(p, a), lambda: {'p': p, 'alpha': alpha, 'product': product})

            k = rng.randrange(1, p)
            y = _random_unit(p, a, rng)
            quotient = divide_by_lambda(y * CycloElem.lam(p, a, k), k)
            result.check(quotient == y.with_precision(quotient.a),
                         lambda: {'p': p, 'k': k, 'y': y, 'quotient': quotient})

            x = 1 + CycloElem.lam(p, a, 2) * _random_unit(p, a, rng)
            round_trip = exponential(logarithm(x))
            result.check(round_trip == x, lambda: {'p': p, 'x': x, 'exp_log': round_trip})

    _guarded(result, p, body)
    return result


def singular_suite(p: int, config: RunConfig, rng: random.Random) -> SuiteResult:
    result = SuiteResult('singular')
    a = config.precision
    u = primitive_root(p)

    def body():
        synthesized = []
        for m in range(p):
            k = 2 * m + 1
            if not (p - 1) / 2 < k <= p - 2:
                continue
            for gamma_p3 in (1, 2):
                record = gamma_recurrence(p, u, m, gamma_p3, a)
                result.check(record.self_consistent and record.agrees_with_closed_form,
                             lambda: {'p': p, 'u': u, 'm': m, 'gamma_p3': gamma_p3, 'record': record})
                candidate = synthesize_closed_form(p, u, m, gamma_p3, a)
                analysis = analyze_valuation(candidate)
                result.check(analysis.nu == k and not analysis.violations,
                             lambda: {'p': p, 'candidate': candidate, 'analysis': analysis})
                if gamma_p3 == 1:
                    synthesized.append(candidate)

        for size in (2, 3):
            for group in combinations(synthesized, size):
                factors = [(c, rng.randrange(1, p)) for c in group]
                outcome = product_classification(factors)
                result.check(outcome.consistent, lambda: {'p': p, 'mus': [c.mu for c in group],
                                                          'exponents': [alpha for _, alpha in factors],
                                                          'outcome': outcome})

        # odd m covers the minus part, even m the plus part
        for m in range(-(-(p + 1) // 2), p - 1):
            cands = [eigen_candidate(p, u, m, rng, a) for _ in range(2)]
            for c in cands:
                analysis = analyze_valuation(c)
                result.check(analysis.weak_bound_holds and not analysis.violations,
                             lambda: {'p': p, 'candidate': c, 'analysis': analysis})
            for quotient in same_eigenvalue_reduction(cands):
                result.check(quotient.holds, lambda: {'p': p, 'm': m, 'quotient': quotient})

    _guarded(result, p, body)
    return result


def units_suite(p: int, config: RunConfig, rng: random.Random) -> SuiteResult:
    result = SuiteResult('units')
    if p < 5:
        return result

    def body():
        report = unit_survey(p, a=config.survey_precision, r_p_plus=config.r_p_plus)
        result.check(report.passed, lambda: {'p': p, 'report': report})
        result.check(report.matches_bernoulli, lambda: {'p': p, 'primary': report.primary_index_set,
                                                        'irregular': report.irregular_indices})
        if not report.irregular_indices:
            exact = all(c.valuation == 2 * c.n for c in report.components)
            result.check(exact, lambda: {'p': p, 'report': report})
        if report.components:
            v, holds = raw_normalized_check(report.components[0])
            result.check(holds, lambda: {'p': p, 'two_n': 2, 'v': v})

        u = report.u
        for n in range(1, (p - 3) // 2 + 1):
            if (p - 1) / 2 < 2 * n <= p - 3:
                eta = unit_closed_form(p, u, n, 1, config.precision)
                nu = v_pi(eta.element - 1)
                result.check(nu == 2 * n, lambda: {'p': p, 'two_n': 2 * n, 'nu': nu})

    _guarded(result, p, body)
    return result


SUITE_RUNNERS: Dict[str, Callable[[int, RunConfig, random.Random], SuiteResult]] = {
    'annihilator': annihilator_suite,
    'bernoulli': bernoulli_suite,
    'lambda-adic': lambda_adic_suite,
    'singular': singular_suite,
    'units': units_suite,
}


def check_fixtures(directory) -> SuiteResult:
    """
    Recompute every fixture under directory and compare

    Each fixture is a CycloElem text file with a "# expr=..." line naming
    lambda^k, zeta^k or delta_b.

    Parameters
    ----------
    directory : str or Path
        folder scanned for *.txt files, in name order

    Returns
    -------
    SuiteResult
        named "fixtures"
    """
    result = SuiteResult('fixtures')
    for path in sorted(Path(directory).glob('*.txt')):
        try:
            meta, element = read_fixture(path)
            expected = fixture_expression(meta['expr'], element.p, element.a)
        except KeyError:
            result.checks += 1
            result.fail({'fixture': path.name, 'error': 'missing "# expr=" line'})
            continue
        except TheCycloLabException as e:
            result.checks += 1
            result.fail({'fixture': path.name, 'error': str(e)})
            continue
        result.check(expected == element, lambda: {'fixture': path.name, 'expr': meta['expr'], 'p': element.p,
                                                   'a': element.a, 'expected': list(expected.coeffs),
                                                   'found': list(element.coeffs)})
    _logger.debug(f'directory={directory}, checks={result.checks}, failures={result.failures}')
    return result
