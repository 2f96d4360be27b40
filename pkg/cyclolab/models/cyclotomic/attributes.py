from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class FrobeniusWitness:
    """
    Measured outcome of alpha^p = beta^p mod pi^{p+1}

    Attributes
    ----------
    p : int
        prime
    valuation : int
        v_pi(alpha^p - beta^p), None when it reaches the precision cap
    cap : int
        precision cap of the comparison
    bound : int
        required valuation, p + 1
    """
    p: int
    valuation: Optional[int]
    cap: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.valuation is None or self.valuation >= self.bound
