import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Iterable, List, Optional, Sequence, Tuple

from cyclolab.models.config import RunConfig
from cyclolab.models.annihilators import (
    ValidationOptions,
    require_odd_prime,
    require_primitive_root,
    primitive_root,
    validate_eigenvalue_set,
    rank_inequality_report,
    induced_eigenvalues,
    )
from cyclolab.models.bernoulli import IrregularityReport, irregularity_report
from cyclolab.models.singular import (
    SingularCandidate,
    synthesize_closed_form,
    gamma_recurrence,
    analyze_valuation,
    )
from cyclolab.models.units import SurveyReport, unit_survey

from .cyclo_dataadapter import CycloDataAdapter, CycloResult
from .cyclo_suites import SUITE_RUNNERS, SuiteResult, check_fixtures
from .exceptions import InvalidArgument
from . import cyclo_module


def _irregularity_row(p: int) -> IrregularityReport:
    return irregularity_report(p)


def _survey_row(p: int, config: RunConfig) -> SurveyReport:
    return unit_survey(p, a=config.survey_precision, r_p_plus=config.r_p_plus)


def _verify_prime(p: int, config: RunConfig) -> List[SuiteResult]:
    rng = cyclo_module.make_rng(config.seed, p)
    return [SUITE_RUNNERS[name](p, config, rng) for name in config.suites]


class Cyclo:
    """
    A class used to run the cyclotomic congruence checks

    ...

    Attributes
    ----------
    config : RunConfig
        run settings, RunConfig.from_env() when omitted
    logger : logging.Logger
        logger
    """
    def __init__(self, config: RunConfig = None, logger: logging.Logger = None):
        self.config = config or RunConfig.from_env()
        self.adapter = CycloDataAdapter(self.config.output_format, self.config.out, logger)
        self._logger = logger or logging.getLogger(__name__)
        self._logger.setLevel(logging.DEBUG)

    def _require_prime(self, p: int) -> int:
        if p > self.config.prime_cap:
            raise InvalidArgument(f'p={p} exceeds the prime cap {self.config.prime_cap}')
        return require_odd_prime(p)

    def _sweep(self, func, primes: Sequence[int]) -> list:
        # map keeps prime order whatever the completion order
        self._logger.debug(f'primes={len(primes)}, workers={self.config.workers}')
        if self.config.workers > 1 and len(primes) > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                return list(pool.map(func, primes))
        return list(map(func, primes))

    def get_primes(self, lo: Optional[int] = None, hi: Optional[int] = None) -> List[int]:
        """
        return the odd primes of [lo, hi], the configured range by default

        Raises
        ------
        InvalidArgument
            when hi exceeds the prime cap
        """
        lo = self.config.lo if lo is None else lo
        hi = self.config.hi if hi is None else hi
        return cyclo_module.primes_in_range(lo, hi, self.config.prime_cap)

    def get_irregularity(self, p: int) -> IrregularityReport:
        """
        return the irregularity report of p

        Parameters
        ----------
        p : int
            odd prime

        Returns
        -------
        IrregularityReport

        See Also
        --------
        Cyclo.get_irregularities : Reports for a range of primes.

        Examples
        --------
        >>> cyclo = Cyclo()
        >>> cyclo.get_irregularity(37).irregular_indices
        [32]
        """
        self._require_prime(p)
        return irregularity_report(p)

    def get_irregularities(self, lo: Optional[int] = None, hi: Optional[int] = None) -> List[IrregularityReport]:
        """
        return one irregularity report per prime of the range, ordered by prime

        Parameters
        ----------
        lo : int
            lower end, the configured one by default
        hi : int
            upper end, the configured one by default

        Returns
        -------
        list
            Returns a list of IrregularityReport

        See Also
        --------
        Cyclo.get_irregularity : Report for one prime.

        Examples
        --------
        >>> cyclo = Cyclo()
        >>> [r.i_p for r in cyclo.get_irregularities(5, 7)]
        [0, 0]
        """
        return self._sweep(_irregularity_row, self.get_primes(lo, hi))

    def get_annihilator_profile(self, p: int, mus: Iterable[int], splittings: Sequence[Tuple[int, int]] = (),
                                u: Optional[int] = None) -> dict:
        """
        return the rank profile of a validated eigenvalue set

        Parameters
        ----------
        p : int
            odd prime
        mus : iterable of int
            proposed eigenvalues
        splittings : sequence of (d, g)
            coprime splittings d * g = p - 1 to examine
        u : int
            primitive root, the smallest one by default

        Returns
        -------
        dict
            r_1, one RankProfile per splitting, and the overall verdict

        Raises
        ------
        EigenvalueRejected
            when the set fails a validation rule

        Examples
        --------
        >>> cyclo = Cyclo()
        >>> cyclo.get_annihilator_profile(13, [2, 6], [(3, 4)], u=7)['profiles'][0].r_g
        2
        """
        self._require_prime(p)
        u = primitive_root(p) if u is None else require_primitive_root(p, u)
        opts = ValidationOptions(vandiver=self.config.vandiver)
        M = validate_eigenvalue_set(p, u, mus, opts)
        profiles = [rank_inequality_report(p, M, d, g) for d, g in splittings]
        induced = {d: list(induced_eigenvalues(M, d)) for d, _ in splittings}
        passed = all(profile.passed for profile in profiles)
        self._logger.debug(f'p={p}, u={u}, M={list(M)}, splittings={list(splittings)}, passed={passed}')
        return {'p': p, 'u': u, 'M': M, 'r_1': len(M), 'profiles': profiles,
                'induced_eigenvalues': induced, 'passed': passed}

    def get_singular(self, p: int, m: int, gamma_p3: int, u: Optional[int] = None) -> dict:
        """
        return the closed-form singular candidate for (p, m, gamma_p3) and its classification

        Parameters
        ----------
        p : int
            odd prime
        m : int
            half index, 2m + 1 > (p - 1)/2
        gamma_p3 : int
            free scalar in [0, p)
        u : int
            primitive root, the smallest one by default

        Returns
        -------
        dict
            serialized candidate, nu, classification and the recurrence verdict

        Examples
        --------
        >>> cyclo = Cyclo()
        >>> cyclo.get_singular(11, 3, 1)['nu']
        7
        """
        self._require_prime(p)
        u = primitive_root(p) if u is None else require_primitive_root(p, u)
        if not 0 <= gamma_p3 < p:
            raise InvalidArgument(f'gamma={gamma_p3} outside [0, {p})')
        candidate: SingularCandidate = synthesize_closed_form(p, u, m, gamma_p3, self.config.precision)
        record = gamma_recurrence(p, u, m, gamma_p3, self.config.precision)
        analysis = analyze_valuation(candidate)
        agrees = record.self_consistent and record.agrees_with_closed_form
        self._logger.debug(f'p={p}, u={u}, m={m}, gamma_p3={gamma_p3}, nu={analysis.nu}, '
                           f'classification={analysis.classification}, agrees={agrees}')
        return {
            'p': p, 'u': u, 'm': m, 'exponent': candidate.m, 'mu': candidate.mu, 'gamma_p3': gamma_p3,
            'gamma': record.gamma, 'nu': analysis.nu, 'cap': candidate.element.cap,
            'classification': analysis.classification, 'law_holds': analysis.law_holds,
            'weak_bound_holds': analysis.weak_bound_holds, 'violations': analysis.violations,
            'recurrence_agrees': agrees, 'candidate': candidate.to_text(),
        }

    def get_unit_survey(self, p: int) -> SurveyReport:
        """
        return the unit survey of p

        Parameters
        ----------
        p : int
            prime, at least 5

        Returns
        -------
        SurveyReport

        See Also
        --------
        Cyclo.get_unit_surveys : Surveys for a range of primes.

        Examples
        --------
        >>> cyclo = Cyclo()
        >>> cyclo.get_unit_survey(37).primary_index_set
        [32]
        """
        self._require_prime(p)
        return _survey_row(p, self.config)

    def get_unit_surveys(self, lo: Optional[int] = None, hi: Optional[int] = None) -> List[SurveyReport]:
        primes = [p for p in self.get_primes(lo, hi) if p >= 5]
        return self._sweep(partial(_survey_row, config=self.config), primes)

    def verify(self, lo: Optional[int] = None, hi: Optional[int] = None, fixtures: Optional[str] = None) -> List[SuiteResult]:
        """
        run the selected suites over the range, plus the fixture check when a directory is given

        Parameters
        ----------
        lo : int
            lower end, the configured one by default
        hi : int
            upper end, the configured one by default
        fixtures : str
            directory of CycloElem fixture files

        Returns
        -------
        list
            one aggregated SuiteResult per suite, in the configured order

        Examples
        --------
        >>> cyclo = Cyclo()
        >>> all(s.passed for s in cyclo.verify(5, 13))
        True
        """
        primes = self.get_primes(lo, hi)
        per_prime = self._sweep(partial(_verify_prime, config=self.config), primes)
        totals = [SuiteResult(name) for name in self.config.suites]
        for results in per_prime:
            totals = [total.merge(result) for total, result in zip(totals, results)]
        if fixtures is not None:
            totals.append(check_fixtures(fixtures))
        for total in totals:
            self._logger.debug(f'suite={total.name}, checks={total.checks}, failures={total.failures}')
        return totals

    def report(self, command: str, records: list, status_code: int = 0, message: str = 'ok') -> CycloResult:
        """
        write records through the adapter and return the result

        Parameters
        ----------
        command : str
            subcommand name stamped in the header
        records : list
            report objects
        status_code : int
            exit code carried by the result
        message : str
            short verdict

        Returns
        -------
        CycloResult
        """
        result = self.adapter.build(self.config.header(command), records, status_code, message)
        self.adapter.write(result)
        return result
