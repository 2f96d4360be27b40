from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional, Tuple

from cyclolab.exceptions import InvalidArgument


@dataclass(frozen=True, repr=False)
class EigenSet:
    """
    Validated set of eigenvalues mu = u^m in F_p^*

    Attributes
    ----------
    p : int
        odd prime
    u : int
        primitive root the discrete logs are taken in
    members : tuple
        pairs (mu, m), sorted by mu, with mu = u^m mod p
    multiplicity : tuple
        optional (mu, count) annotation for synthetic models
    """
    p: int
    u: int
    members: Tuple[Tuple[int, int], ...] = ()
    multiplicity: Optional[Tuple[Tuple[int, int], ...]] = None

    def __post_init__(self):
        members = tuple(sorted((int(mu), int(m)) for mu, m in self.members))
        seen = set()
        for mu, m in members:
            if not 1 <= mu < self.p:
                raise InvalidArgument(f'eigenvalue {mu} outside [1, {self.p})')
            if not 0 <= m <= self.p - 2 or pow(self.u, m, self.p) != mu:
                raise InvalidArgument(f'inconsistent discrete log: {self.u}^{m} != {mu} mod {self.p}')
            if mu in seen:
                raise InvalidArgument(f'repeated eigenvalue {mu}')
            seen.add(mu)
        object.__setattr__(self, 'members', members)

    @classmethod
    def from_values(cls, p: int, u: int, values: Iterable[int], keep_multiplicity: bool = False) -> 'EigenSet':
        """
        Build an EigenSet from residues, collapsing duplicates

        Parameters
        ----------
        p : int
            odd prime
        u : int
            primitive root mod p
        values : iterable of int
            eigenvalues, reduced mod p
        keep_multiplicity : bool
            record how often each residue occurred

        Returns
        -------
        EigenSet
        """
        from .annihilator import discrete_log

        counts: Dict[int, int] = {}
        for value in values:
            counts[value % p] = counts.get(value % p, 0) + 1
        if 0 in counts:
            raise InvalidArgument('0 is not an eigenvalue')
        members = tuple((mu, discrete_log(p, u, mu)) for mu in counts)
        multiplicity = tuple(sorted(counts.items())) if keep_multiplicity else None
        return cls(p, u, members, multiplicity)

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(mu for mu, _ in self.members)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(m for _, m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __contains__(self, mu) -> bool:
        return mu in self.values

    def __repr__(self) -> str:
        return f'EigenSet(p={self.p}, u={self.u}, {{{", ".join(str(mu) for mu in self.values)}}})'
