from dataclasses import dataclass, field
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class ValidationOptions:
    """
    Per-rule toggles for validate_eigenvalue_set

    Attributes
    ----------
    reject_u : bool
        rule "mu-equals-u"
    reject_one : bool
        rule "mu-equals-one"
    reject_minus_one : bool
        rule "mu-equals-minus-one"
    vandiver : bool
        rule "vandiver-plus-part", rejects mu with mu^((p-1)/2) = 1
    """
    reject_u: bool = True
    reject_one: bool = True
    reject_minus_one: bool = True
    vandiver: bool = False


@dataclass
class RankProfile:
    """
    Ranks of an eigenvalue set along a splitting d*g = p-1

    Attributes
    ----------
    p : int
        prime
    d : int
        divisor of p-1
    g : int
        complementary divisor, None when only d is examined
    r_1 : int
        number of distinct eigenvalues
    r_d : int
        number of distinct d-th powers
    r_g : int
        number of distinct g-th powers, None without g
    lower_bound_ok : bool
        r_d <= r_1
    upper_bound_ok : bool
        r_1 <= d * r_d
    reverse_bounds_ok : bool
        r_g <= r_1 <= g * r_g, None without g
    product_ok : bool
        r_d * r_g >= r_1, None without g
    rank_one_ok : bool
        r_d = 1 implies r_g = r_1 and r_g = 1 implies r_d = r_1, None without g
    classes : list
        pairs (nu, mus): the eigenvalues whose d-th power is nu
    induced_poly : tuple
        coefficients of P_{r_d}(U^d), lowest degree first
    """
    p: int
    d: int
    g: Optional[int]
    r_1: int
    r_d: int
    r_g: Optional[int]
    lower_bound_ok: bool
    upper_bound_ok: bool
    reverse_bounds_ok: Optional[bool] = None
    product_ok: Optional[bool] = None
    rank_one_ok: Optional[bool] = None
    classes: List[Tuple[int, Tuple[int, ...]]] = field(default_factory=list)
    induced_poly: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        flags = (self.lower_bound_ok, self.upper_bound_ok, self.reverse_bounds_ok,
                 self.product_ok, self.rank_one_ok)
        return all(flag is not False for flag in flags)


@dataclass(frozen=True)
class BoundComparison:
    label: str
    lhs: int
    rhs: int
    ok: bool


@dataclass
class BoundsReport:
    """
    Outcome of the two structure-bound chains

    Attributes
    ----------
    comparisons : list
        one BoundComparison per inequality or equality of the chains
    """
    comparisons: List[BoundComparison] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.comparisons)

    def failures(self) -> List[BoundComparison]:
        return [c for c in self.comparisons if not c.ok]
