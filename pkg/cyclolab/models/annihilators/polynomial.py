from dataclasses import dataclass
from typing import Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_sub, gf_mul, gf_div, gf_eval

from cyclolab.exceptions import InvalidArgument, DivisionByZero


@dataclass(frozen=True, repr=False)
class FpPoly:
    """
    Dense polynomial over F_p

    Attributes
    ----------
    p : int
        odd prime modulus
    coeffs : tuple
        residues in [0, p), lowest degree first, () for the zero polynomial
    """
    p: int
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) % self.p for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def constant(cls, p: int, c: int) -> 'FpPoly':
        return cls(p, (c,))

    @classmethod
    def monomial(cls, p: int, degree: int, c: int = 1) -> 'FpPoly':
        return cls(p, (0,) * degree + (c,))

    @classmethod
    def _from_gf(cls, p: int, dense: Sequence) -> 'FpPoly':
        # galoistools keeps the leading coefficient first
        return cls(p, tuple(int(c) for c in reversed(dense)))

    def _to_gf(self) -> list:
        return [ZZ(c) for c in reversed(self.coeffs)]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: 'FpPoly'):
        if not isinstance(other, FpPoly):
            raise InvalidArgument(f'expected FpPoly, got {type(other).__name__}')
        if other.p != self.p:
            raise InvalidArgument(f'modulus mismatch: {self.p} != {other.p}')

    def __add__(self, other: 'FpPoly') -> 'FpPoly':
        self._check(other)
        return FpPoly._from_gf(self.p, gf_add(self._to_gf(), other._to_gf(), self.p, ZZ))

    def __sub__(self, other: 'FpPoly') -> 'FpPoly':
        self._check(other)
        return FpPoly._from_gf(self.p, gf_sub(self._to_gf(), other._to_gf(), self.p, ZZ))

    def __mul__(self, other: 'FpPoly') -> 'FpPoly':
        self._check(other)
        return FpPoly._from_gf(self.p, gf_mul(self._to_gf(), other._to_gf(), self.p, ZZ))

    def __divmod__(self, other: 'FpPoly') -> Tuple['FpPoly', 'FpPoly']:
        self._check(other)
        if other.is_zero:
            raise DivisionByZero('polynomial division by zero')
        try:
            q, r = gf_div(self._to_gf(), other._to_gf(), self.p, ZZ)
        except ZeroDivisionError as e:
            raise DivisionByZero('polynomial division by zero') from e
        return FpPoly._from_gf(self.p, q), FpPoly._from_gf(self.p, r)

    def __call__(self, x: int) -> int:
        return int(gf_eval(self._to_gf(), ZZ(x % self.p), self.p, ZZ))

    def __repr__(self) -> str:
        if self.is_zero:
            return f'FpPoly(p={self.p}, 0)'
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            mono = '' if k == 0 else ('X' if k == 1 else f'X^{k}')
            terms.append(str(c) if not mono else (mono if c == 1 else f'{c}*{mono}'))
        return f'FpPoly(p={self.p}, {" + ".join(terms)})'
