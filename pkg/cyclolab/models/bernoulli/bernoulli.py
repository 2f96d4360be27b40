import logging
from typing import Dict, List, Optional

from cyclolab.exceptions import InvalidArgument, EigenvalueRejected
from cyclolab.models.annihilators import (
    EigenSet,
    require_odd_prime,
    primitive_root,
    power_table,
    validate_eigenvalue_set,
    )
from .attributes import IrregularityReport

_logger = logging.getLogger(__name__)


def bernoulli_even_mod_p(p: int) -> Dict[int, int]:
    """
    B_2, B_4, ..., B_{p-3} modulo p

    The recurrence sum_{j<=n} C(n+1, j) B_j = 0 is run entirely in F_p with
    B_1 = -1/2. By von Staudt-Clausen the denominator of B_j is the product of
    the primes q with q-1 | j, so p stays out of it for j <= p-3, and the
    divisions by n+1 <= p-2 are by units.

    Parameters
    ----------
    p : int
        odd prime

    Returns
    -------
    dict
        2k -> residue in [0, p)

    Examples
    --------
    >>> bernoulli_even_mod_p(7)
    {2: 6, 4: 3}
    """
    require_odd_prime(p)
    if p < 5:
        return {}
    top = p - 3
    fact = [1] * (top + 2)
    for i in range(1, top + 2):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [pow(f, p - 2, p) for f in fact]

    def binom(n, k):
        return fact[n] * inv_fact[k] * inv_fact[n - k] % p

    known = {0: 1, 1: (p - 1) * pow(2, p - 2, p) % p}
    for n in range(2, top + 1, 2):
        total = sum(binom(n + 1, j) * b for j, b in known.items())
        known[n] = -total * pow(n + 1, p - 2, p) % p
    return {n: b for n, b in known.items() if n >= 2}


def bernoulli_oracle_mod_p(p: int) -> Dict[int, int]:
    """
    Independent residues via power sums at modulus p^2

    For even 2 <= 2k <= p-3, sum_{a<p} a^{2k} = p * B_{2k} mod p^2.
    """
    require_odd_prime(p)
    modulus = p * p
    residues = {}
    for k in range(2, p - 2, 2):
        power_sum = sum(pow(a, k, modulus) for a in range(1, p)) % modulus
        if power_sum % p:
            raise InvalidArgument(f'power sum not divisible by p: p={p}, k={k}')
        residues[k] = power_sum // p % p
    return residues


def irregular_indices(p: int) -> List[int]:
    return sorted(k for k, b in bernoulli_even_mod_p(p).items() if b == 0)


def irregularity_index(p: int) -> int:
    return len(irregular_indices(p))


def minus_eigenvalues_from_bernoulli(p: int, u: Optional[int] = None) -> EigenSet:
    """
    mu = u^{2m+1} for every irregular index 2k = p-1-2m

    Parameters
    ----------
    p : int
        odd prime
    u : int
        primitive root, smallest one when omitted

    Returns
    -------
    EigenSet
    """
    u = primitive_root(p) if u is None else u
    table = power_table(p, u)
    return EigenSet(p, u, tuple((table[p - k], p - k) for k in irregular_indices(p)))


def irregularity_report(p: int, u: Optional[int] = None, with_oracle: bool = True) -> IrregularityReport:
    """
    Everything the bernoulli module knows about p

    Parameters
    ----------
    p : int
        odd prime
    u : int
        primitive root, smallest one when omitted
    with_oracle : bool
        cross-check the residues against bernoulli_oracle_mod_p

    Returns
    -------
    IrregularityReport
    """
    u = primitive_root(p) if u is None else u
    residues = bernoulli_even_mod_p(p)
    indices = sorted(k for k, b in residues.items() if b == 0)
    minus = minus_eigenvalues_from_bernoulli(p, u)

    rejected = []
    for mu in minus:
        try:
            validate_eigenvalue_set(p, u, [mu])
        except EigenvalueRejected as e:
            rejected.append((mu, e.rule))

    oracle_agrees = None
    if with_oracle:
        oracle_agrees = bernoulli_oracle_mod_p(p) == residues
        if not oracle_agrees:
            _logger.error(f'bernoulli oracle disagrees: p={p}')

    _logger.debug(f'p={p}, u={u}, i_p={len(indices)}, indices={indices}, rejected={rejected}')
    return IrregularityReport(p=p, u=u, bernoulli_residues=residues, irregular_indices=indices,
                              i_p=len(indices), minus_eigenvalues=minus,
                              rejected_eigenvalues=rejected, oracle_agrees=oracle_agrees)
