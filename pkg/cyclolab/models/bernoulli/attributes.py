from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from cyclolab.models.annihilators import EigenSet


@dataclass
class IrregularityReport:
    """
    Bernoulli residues and irregularity structure of one prime

    Attributes
    ----------
    p : int
        prime
    u : int
        primitive root used for the eigenvalues
    bernoulli_residues : dict
        2k -> B_{2k} mod p for 2 <= 2k <= p-3
    irregular_indices : list
        sorted 2k with B_{2k} = 0 mod p
    i_p : int
        irregularity index
    minus_eigenvalues : EigenSet
        mu = u^{2m+1} with p-1-2m irregular
    rejected_eigenvalues : list
        (mu, rule) pairs the validator refused; reported, never asserted
    oracle_agrees : bool
        power-sum oracle reproduces the residues
    """
    p: int
    u: int
    bernoulli_residues: Dict[int, int]
    irregular_indices: List[int]
    i_p: int
    minus_eigenvalues: EigenSet
    rejected_eigenvalues: List[Tuple[int, str]] = field(default_factory=list)
    oracle_agrees: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        return (self.i_p == len(self.irregular_indices) == len(self.minus_eigenvalues)
                and self.oracle_agrees is not False)

    def to_record(self) -> dict:
        return {
            'p': self.p, 'u': self.u, 'i_p': self.i_p, 'irregular_indices': self.irregular_indices,
            'minus_eigenvalues': list(self.minus_eigenvalues.values),
            'rejected_eigenvalues': [list(pair) for pair in self.rejected_eigenvalues],
            'oracle_agrees': self.oracle_agrees, 'consistent': self.consistent,
        }
