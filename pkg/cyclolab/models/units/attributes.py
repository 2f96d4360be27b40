from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Tuple

from cyclolab.models.annihilators import BoundsReport
from cyclolab.models.cyclotomic import CycloElem, exponential, sigma_pow


@dataclass(repr=False)
class UnitEigencomponent:
    """
    The mu = u^{2n} eigencomponent of the real cyclotomic units

    Attributes
    ----------
    p : int
        prime
    u : int
        primitive root
    n : int
        half index, 1 <= n <= (p-3)/2
    a : int
        precision the component was computed at
    weights : tuple
        w_j = u^{-2nj} mod p
    log : CycloElem
        log of the normalized component eps'
    base_index : int
        index b of the cyclotomic unit delta_b the orbit starts from
    valuation : int
        v_pi(eps' - 1), None at the precision sentinel
    a_level : int
        (v - 2n) / (p - 1) for a finite valuation
    primary : bool
        v >= p + 1
    locally_trivial : bool
        v hit the sentinel even after the precision retry
    violations : list
        residue-law or congruence failures
    """
    p: int
    u: int
    n: int
    a: int
    weights: Tuple[int, ...]
    log: CycloElem
    base_index: int = 0
    valuation: Optional[int] = None
    a_level: Optional[int] = None
    primary: bool = False
    locally_trivial: bool = False
    violations: List[str] = field(default_factory=list)

    @property
    def mu(self) -> int:
        return pow(self.u, 2 * self.n, self.p)

    @cached_property
    def element(self) -> CycloElem:
        """eps' = exp(log)"""
        return exponential(self.log)

    @cached_property
    def raw(self) -> CycloElem:
        """eps = prod_j sigma^j(delta_b)^{w_j}, before normalization"""
        from .units import cyclotomic_unit

        delta = cyclotomic_unit(self.p, self.base_index or self.u, self.a)
        result = CycloElem.one(self.p, self.a)
        for j, w in enumerate(self.weights):
            result = result * sigma_pow(delta, j, self.u) ** w
        return result

    def to_record(self) -> dict:
        return {
            'p': self.p, 'u': self.u, 'a': self.a, 'cap': self.log.cap, 'two_n': 2 * self.n, 'mu': self.mu,
            'v': self.valuation, 'a_level': self.a_level, 'primary': self.primary,
            'locally_trivial': self.locally_trivial, 'violations': list(self.violations),
        }

    def __repr__(self) -> str:
        return (f'UnitEigencomponent(p={self.p}, 2n={2 * self.n}, v={self.valuation}, '
                f'primary={self.primary})')


@dataclass
class SurveyReport:
    """
    Attributes
    ----------
    p : int
        prime
    u : int
        primitive root
    a : int
        survey precision
    components : list
        one UnitEigencomponent per 2n in {2, ..., p-3}
    primary_index_set : list
        the 2n of the primary components
    rho1_local : int
        primary components that are not locally trivial
    irregular_indices : list
        Bernoulli cross-reference
    i_p : int
        irregularity index
    r_p_plus : int
        assumed plus rank fed to the bounds
    matches_bernoulli : bool
        primary_index_set equals irregular_indices
    bounds : BoundsReport
        structure bounds with r_p^- := i_p
    quotient_checks : list
        (2n_1, 2n_2, v, holds) for components sharing an eigenvalue
    violations : list
        every failed check
    """
    p: int
    u: int
    a: int
    components: List[UnitEigencomponent]
    primary_index_set: List[int]
    rho1_local: int
    irregular_indices: List[int]
    i_p: int
    r_p_plus: int
    matches_bernoulli: bool
    bounds: BoundsReport
    quotient_checks: List[Tuple[int, int, Optional[int], bool]] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.bounds.passed and not self.violations

    def to_record(self) -> dict:
        return {
            'p': self.p, 'u': self.u, 'a': self.a,
            'components': [c.to_record() for c in self.components],
            'primary_index_set': self.primary_index_set, 'rho1_local': self.rho1_local,
            'irregular_indices': self.irregular_indices, 'i_p': self.i_p, 'r_p_plus': self.r_p_plus,
            'matches_bernoulli': self.matches_bernoulli, 'bounds': self.bounds,
            'quotient_checks': self.quotient_checks, 'violations': self.violations,
            'passed': self.passed,
        }
