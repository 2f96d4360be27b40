from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from cyclolab.exceptions import InvalidArgument
from cyclolab.models.cyclotomic import CycloElem, v_pi

PROVENANCES = ('formula', 'recurrence', 'eigen-solver')


@dataclass(frozen=True, repr=False)
class SingularCandidate:
    """
    Synthetic carrier of the congruences a singular number satisfies

    Attributes
    ----------
    p : int
        prime
    u : int
        primitive root
    mu : int
        eigenvalue, mu = u^m mod p
    m : int
        full exponent of the eigenvalue
    element : CycloElem
        C = 1 mod pi
    gamma_p3 : int
        free scalar of the closed form, None for eigen-solver output
    provenance : str
        formula, recurrence or eigen-solver
    verified : int
        K such that sigma(C) = C^mu mod pi^K has been checked
    """
    p: int
    u: int
    mu: int
    m: int
    element: CycloElem
    gamma_p3: Optional[int] = None
    provenance: str = 'formula'
    verified: int = 0

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise InvalidArgument(f'unknown provenance {self.provenance!r}')
        if pow(self.u, self.m, self.p) != self.mu % self.p:
            raise InvalidArgument(f'mu={self.mu} is not {self.u}^{self.m} mod {self.p}')
        v = v_pi(self.element - 1)
        if v is not None and v < 1:
            raise InvalidArgument('candidate must be 1 mod pi')

    def to_text(self) -> str:
        header = [f'# {key}={getattr(self, key)}'
                  for key in ('u', 'mu', 'm', 'gamma_p3', 'provenance', 'verified')]
        return '\n'.join(header) + '\n' + self.element.to_text()

    @classmethod
    def from_text(cls, text: str) -> 'SingularCandidate':
        meta = {}
        for line in text.splitlines():
            line = line.strip()
            if line.startswith('#') and '=' in line:
                key, _, value = line[1:].strip().partition('=')
                meta[key.strip()] = value.strip()
        element = CycloElem.from_text(text)
        try:
            gamma = None if meta.get('gamma_p3', 'None') == 'None' else int(meta['gamma_p3'])
            return cls(p=element.p, u=int(meta['u']), mu=int(meta['mu']), m=int(meta['m']),
                       element=element, gamma_p3=gamma, provenance=meta.get('provenance', 'formula'),
                       verified=int(meta.get('verified', 0)))
        except (KeyError, ValueError) as e:
            raise InvalidArgument('malformed candidate header') from e

    def __repr__(self) -> str:
        return (f'SingularCandidate(p={self.p}, u={self.u}, mu={self.mu}, m={self.m}, '
                f'provenance={self.provenance}, verified={self.verified})')


@dataclass(frozen=True)
class EigenSpace:
    """
    Generators of {V : sigma(V) = mu V mod pi^K, v_pi(V) >= 1}

    Attributes
    ----------
    p, u, mu, K, a : int
        problem data and coefficient precision
    generators : tuple
        p^{s_i} g_i, g_i the omega^i eigenvector of valuation i
    indices : tuple
        eigen-index i of each generator
    digits : tuple
        the power s_i of p in front of each generator
    """
    p: int
    u: int
    mu: int
    K: int
    a: int
    generators: Tuple[CycloElem, ...] = ()
    indices: Tuple[int, ...] = ()
    digits: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


@dataclass
class GammaRecord:
    """
    Coefficients produced by the gamma recurrence

    Attributes
    ----------
    mu : int
        eigenvalue
    gamma : int
        constant coefficient shift, -gamma_{p-3} / (mu - 1)
    gammas : tuple
        gamma_0..gamma_{p-4}
    gamma_p3 : int
        the free scalar
    self_consistent : bool
        the closing equation reproduces gamma_{p-3}
    agrees_with_closed_form : bool
        1 + gamma + sum gamma_j zeta^{u_j} equals the closed form mod p
    element : CycloElem
        the assembled element
    """
    mu: int
    gamma: int
    gammas: Tuple[int, ...]
    gamma_p3: int
    self_consistent: bool
    agrees_with_closed_form: bool
    element: Optional[CycloElem] = None


@dataclass
class ValuationAnalysis:
    """
    Attributes
    ----------
    nu : int
        v_pi(C - 1), None at the precision sentinel
    classification : str
        primary or not-primary
    law_holds : bool
        u^nu = mu mod p; None when the law does not apply
    weak_bound_holds : bool
        nu >= m
    violations : list
        theorem violations found
    """
    nu: Optional[int]
    classification: str
    law_holds: Optional[bool]
    weak_bound_holds: bool
    violations: List[str] = field(default_factory=list)


@dataclass
class ProductClassification:
    nu: Optional[int]
    classification: str
    factor_valuations: List[Optional[int]]
    expected_nu: Optional[int]
    consistent: bool


@dataclass
class QuotientCheck:
    """
    Attributes
    ----------
    nu : int
        v_pi(C_1 C_2^{-1} - 1) after leading-coefficient normalization
    holds : bool
        nu >= p
    exponents : tuple
        the rescaling exponents n_1, n_2
    """
    nu: Optional[int]
    holds: bool
    exponents: Tuple[int, int]
