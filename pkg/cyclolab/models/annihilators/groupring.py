from dataclasses import dataclass
from typing import Tuple

from cyclolab.exceptions import InvalidArgument
from .polynomial import FpPoly


@dataclass(frozen=True)
class GroupRingElem:
    """
    Element of F_p[G], G = Gal(Q(zeta)/Q) generated by sigma: zeta -> zeta^u

    Attributes
    ----------
    p : int
        odd prime
    u : int
        primitive root defining sigma
    coeffs : tuple
        p-1 residues, position j holding the coefficient of sigma^j
    """
    p: int
    u: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise InvalidArgument(f'group ring element needs {self.p - 1} coefficients, got {len(self.coeffs)}')
        object.__setattr__(self, 'coeffs', tuple(int(c) % self.p for c in self.coeffs))

    @classmethod
    def zero(cls, p: int, u: int) -> 'GroupRingElem':
        return cls(p, u, (0,) * (p - 1))

    @classmethod
    def sigma_power(cls, p: int, u: int, j: int, c: int = 1) -> 'GroupRingElem':
        coeffs = [0] * (p - 1)
        coeffs[j % (p - 1)] = c
        return cls(p, u, tuple(coeffs))

    @classmethod
    def sigma_minus(cls, p: int, u: int, mu: int) -> 'GroupRingElem':
        """sigma - mu"""
        return cls.sigma_power(p, u, 1) - cls.sigma_power(p, u, 0, mu)

    @classmethod
    def from_polynomial(cls, poly: FpPoly, u: int, d: int = 1) -> 'GroupRingElem':
        """P(sigma^d) for a polynomial P over F_p"""
        coeffs = [0] * (poly.p - 1)
        for i, c in enumerate(poly.coeffs):
            coeffs[(d * i) % (poly.p - 1)] += c
        return cls(poly.p, u, tuple(coeffs))

    def _check(self, other: 'GroupRingElem'):
        if (self.p, self.u) != (other.p, other.u):
            raise InvalidArgument(f'group ring mismatch: ({self.p}, {self.u}) != ({other.p}, {other.u})')

    def __add__(self, other: 'GroupRingElem') -> 'GroupRingElem':
        self._check(other)
        return GroupRingElem(self.p, self.u, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'GroupRingElem') -> 'GroupRingElem':
        self._check(other)
        return GroupRingElem(self.p, self.u, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: 'GroupRingElem') -> 'GroupRingElem':
        self._check(other)
        n = self.p - 1
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % n] += a * b
        return GroupRingElem(self.p, self.u, tuple(out))

    def eval_scalar(self, s: int) -> int:
        """Image under the ring morphism sigma -> s."""
        if s % self.p == 0:
            raise InvalidArgument('sigma cannot map to 0')
        total, power = 0, 1
        for c in self.coeffs:
            total += c * power
            power = power * s % self.p
        return total % self.p
