from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple, Union

from cyclolab.exceptions import InvalidArgument


def pack_coeffs(coeffs: Sequence[int], width: int) -> int:
    return int.from_bytes(b''.join(c.to_bytes(width, 'little') for c in coeffs), 'little')


def unpack_coeffs(value: int, count: int, width: int) -> List[int]:
    raw = value.to_bytes(width * count, 'little')
    return [int.from_bytes(raw[i:i + width], 'little') for i in range(0, width * count, width)]


def convolve(left: Sequence[int], right: Sequence[int]) -> List[int]:
    """
    Product of two non-negative coefficient lists by Kronecker substitution

    Parameters
    ----------
    left : sequence of int
        non-negative coefficients, lowest degree first
    right : sequence of int
        non-negative coefficients, lowest degree first

    Returns
    -------
    list
        len(left) + len(right) - 1 coefficients
    """
    if not left or not right:
        return []
    bound = max(left) * max(right) * min(len(left), len(right))
    width = bound.bit_length() // 8 + 1
    count = len(left) + len(right) - 1
    return unpack_coeffs(pack_coeffs(left, width) * pack_coeffs(right, width), count, width)


@lru_cache(maxsize=None)
def _slot_width(p: int, a: int) -> int:
    modulus = p ** a
    return (2 * p * modulus * modulus).bit_length() // 8 + 1


@lru_cache(maxsize=None)
def lambda_relation(p: int, a: int) -> Tuple[int, ...]:
    """
    Coefficients of lambda^{p-1} in the basis 1, lambda, ..., lambda^{p-2}

    From Phi_p(1 + lambda) = 0: lambda^{p-1} = -sum_{j=1}^{p-1} C(p, j) lambda^{j-1}.
    Every entry is divisible by p.
    """
    modulus = p ** a
    return tuple(-comb(p, j + 1) % modulus for j in range(p - 1))


@lru_cache(maxsize=None)
def _reduction_rows(p: int, a: int) -> Tuple[int, ...]:
    # packed lambda^{p-1+i} for i = 0..p-3
    modulus = p ** a
    width = _slot_width(p, a)
    relation = lambda_relation(p, a)
    row = list(relation)
    rows = []
    for _ in range(p - 2):
        rows.append(pack_coeffs(row, width))
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            row = [(r + top * s) % modulus for r, s in zip(row, relation)]
    return tuple(rows)


@lru_cache(maxsize=None)
def _shift_tables(p: int, a: int, c: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    modulus = p ** a
    fact = [1] * (p - 1)
    for i in range(1, p - 1):
        fact[i] = fact[i - 1] * i % modulus
    inv_fact = [pow(f, -1, modulus) for f in fact]
    kernel = [pow(c, t, modulus) * inv_fact[t] % modulus for t in range(p - 1)]
    return tuple(fact), tuple(inv_fact), tuple(kernel)


def taylor_shift(coeffs: Sequence[int], c: int, p: int, a: int) -> List[int]:
    """
    Coefficients of f(x + c) given those of f, modulo p^a

    Degrees stay below p - 1, so every factorial involved is a unit mod p^a.
    """
    modulus = p ** a
    n = len(coeffs)
    fact, inv_fact, kernel = _shift_tables(p, a, c)
    weighted = [coeffs[k] * fact[k] % modulus for k in reversed(range(n))]
    product = convolve(weighted, kernel[:n])
    return [inv_fact[i] * product[n - 1 - i] % modulus for i in range(n)]


Scalar = Union[int, 'CycloElem']


@dataclass(frozen=True, repr=False)
class CycloElem:
    """
    Element of Z[zeta]/pi^{a(p-1)} in the lambda = zeta - 1 power basis

    Attributes
    ----------
    p : int
        odd prime
    a : int
        coefficient precision, the element is known mod p^a
    coeffs : tuple
        b_0..b_{p-2} in [0, p^a), the element being sum b_k lambda^k
    """
    p: int
    a: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.a < 1:
            raise InvalidArgument(f'precision must be positive, got a={self.a}')
        if len(self.coeffs) != self.p - 1:
            raise InvalidArgument(f'expected {self.p - 1} coefficients, got {len(self.coeffs)}')
        modulus = self.p ** self.a
        object.__setattr__(self, 'coeffs', tuple(int(c) % modulus for c in self.coeffs))

    @property
    def modulus(self) -> int:
        return self.p ** self.a

    @property
    def cap(self) -> int:
        """pi-adic precision a(p-1)"""
        return self.a * (self.p - 1)

    @classmethod
    def from_int(cls, p: int, a: int, n: int) -> 'CycloElem':
        return cls(p, a, (n,) + (0,) * (p - 2))

    @classmethod
    def zero(cls, p: int, a: int) -> 'CycloElem':
        return cls.from_int(p, a, 0)

    @classmethod
    def one(cls, p: int, a: int) -> 'CycloElem':
        return cls.from_int(p, a, 1)

    @classmethod
    def lam(cls, p: int, a: int, k: int = 1) -> 'CycloElem':
        """lambda^k"""
        if k < p - 1:
            return cls(p, a, (0,) * k + (1,) + (0,) * (p - 2 - k))
        return cls.lam(p, a, p - 2) * cls.lam(p, a, k - p + 2)

    @classmethod
    def zeta(cls, p: int, a: int, k: int = 1) -> 'CycloElem':
        coeffs = [0] * p
        coeffs[k % p] = 1
        return encode_zeta_poly(p, a, coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def with_precision(self, a: int) -> 'CycloElem':
        """Reduce to precision a, or re-read the same residues at a higher one."""
        if a == self.a:
            return self
        return CycloElem(self.p, a, self.coeffs)

    def _align(self, other: Scalar) -> Tuple['CycloElem', 'CycloElem']:
        if isinstance(other, int):
            return self, CycloElem.from_int(self.p, self.a, other)
        if not isinstance(other, CycloElem):
            return NotImplemented, NotImplemented
        if other.p != self.p:
            raise InvalidArgument(f'modulus mismatch: p={self.p} vs p={other.p}')
        a = min(self.a, other.a)
        return self.with_precision(a), other.with_precision(a)

    def __add__(self, other: Scalar) -> 'CycloElem':
        x, y = self._align(other)
        if x is NotImplemented:
            return NotImplemented
        return CycloElem(x.p, x.a, tuple(s + t for s, t in zip(x.coeffs, y.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> 'CycloElem':
        return CycloElem(self.p, self.a, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Scalar) -> 'CycloElem':
        x, y = self._align(other)
        if x is NotImplemented:
            return NotImplemented
        return CycloElem(x.p, x.a, tuple(s - t for s, t in zip(x.coeffs, y.coeffs)))

    def __rsub__(self, other: Scalar) -> 'CycloElem':
        return (-self) + other

    def __mul__(self, other: Scalar) -> 'CycloElem':
        if isinstance(other, int):
            return CycloElem(self.p, self.a, tuple(c * other for c in self.coeffs))
        x, y = self._align(other)
        if x is NotImplemented:
            return NotImplemented
        return CycloElem(x.p, x.a, _ring_product(x.coeffs, y.coeffs, x.p, x.a))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> 'CycloElem':
        if e < 0:
            raise InvalidArgument('negative exponent, use invert()')
        result = CycloElem.one(self.p, self.a)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def to_text(self) -> str:
        return f'{self.p} {self.a}\n' + ' '.join(str(c) for c in self.coeffs) + '\n'

    @classmethod
    def from_text(cls, text: str) -> 'CycloElem':
        """
        Parse the textual form: header "p a", then p-1 base-10 coefficients

        Lines starting with '#' are ignored.
        """
        tokens = []
        for line in text.splitlines():
            if not line.strip().startswith('#'):
                tokens.extend(line.split())
        try:
            numbers = [int(t) for t in tokens]
        except ValueError as e:
            raise InvalidArgument('malformed CycloElem text') from e
        if len(numbers) < 2:
            raise InvalidArgument('CycloElem text needs a "p a" header')
        p, a, coeffs = numbers[0], numbers[1], numbers[2:]
        return cls(p, a, tuple(coeffs))

    def __repr__(self) -> str:
        terms = [f'{c}*lambda^{k}' if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return f'CycloElem(p={self.p}, a={self.a}, {" + ".join(terms) or "0"})'


def _ring_product(left: Sequence[int], right: Sequence[int], p: int, a: int) -> Tuple[int, ...]:
    n = p - 1
    modulus = p ** a
    width = _slot_width(p, a)
    product = pack_coeffs(left, width) * pack_coeffs(right, width)
    raw = product.to_bytes(width * (2 * n - 1), 'little')
    accumulator = int.from_bytes(raw[:width * n], 'little')
    rows = _reduction_rows(p, a)
    for i in range(n - 1):
        high = int.from_bytes(raw[width * (n + i):width * (n + i + 1)], 'little') % modulus
        if high:
            accumulator += high * rows[i]
    return tuple(c % modulus for c in unpack_coeffs(accumulator, n, width))


def encode_zeta_poly(p: int, a: int, c: Sequence[int]) -> CycloElem:
    """
    sum c_k zeta^k in the lambda basis

    Parameters
    ----------
    p : int
        odd prime
    a : int
        precision
    c : sequence of int
        zeta-coefficients; exponents are read mod p

    Returns
    -------
    CycloElem
    """
    modulus = p ** a
    folded = [0] * p
    for k, value in enumerate(c):
        folded[k % p] += value
    # zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    top = folded[p - 1]
    zeta_coeffs = [(value - top) % modulus for value in folded[:p - 1]]
    return CycloElem(p, a, tuple(taylor_shift(zeta_coeffs, 1, p, a)))


def decode_zeta_poly(x: CycloElem) -> Tuple[int, ...]:
    """Coefficients of zeta^0..zeta^{p-2} representing x."""
    return tuple(taylor_shift(x.coeffs, -1, x.p, x.a))
