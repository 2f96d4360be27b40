import unittest

from sympy import primerange
from hypothesis import given, settings, strategies as st

from cyclolab.models.cyclotomic import (
    CycloElem,
    convolve,
    lambda_relation,
    encode_zeta_poly,
    decode_zeta_poly,
    )
from cyclolab.exceptions import InvalidArgument


def elements(p: int, a: int):
    modulus = p ** a
    return st.lists(st.integers(0, modulus - 1), min_size=p - 1, max_size=p - 1).map(
        lambda coeffs: CycloElem(p, a, tuple(coeffs)))


def zeta_product(left, right, p, modulus):
    # product in Z[x]/(x^p - 1), exponents read mod p
    out = [0] * p
    for i, s in enumerate(left):
        for j, t in enumerate(right):
            out[(i + j) % p] = (out[(i + j) % p] + s * t) % modulus
    return out


class TestCycloElem(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.p = 7
        cls.a = 2
        cls.one = CycloElem.one(7, 2)
        cls.lam = CycloElem.lam(7, 2)

    @classmethod
    def tearDownClass(cls) -> None:
        pass

    def test_cycloelem_reduces_coefficients(self):
        """coefficients land in [0, p^a)"""
        x = CycloElem(3, 2, (-1, 10))
        self.assertEqual(x.coeffs, (8, 1))
        self.assertEqual(x.modulus, 9)
        self.assertEqual(x.cap, 4)

    def test_cycloelem_wrong_length(self):
        with self.assertRaises(InvalidArgument):
            CycloElem(7, 2, (1, 2, 3))
        with self.assertRaises(InvalidArgument):
            CycloElem(7, 0, (0,) * 6)

    def test_lambda_relation(self):
        """lambda^{p-1} = -sum C(p, j) lambda^{j-1}, every entry divisible by p"""
        self.assertEqual(lambda_relation(5, 2), (20, 15, 15, 20))
        self.assertTrue(all(c % 7 == 0 for c in lambda_relation(7, 3)))
        self.assertEqual(CycloElem.lam(5, 2, 4).coeffs, (20, 15, 15, 20))

    def test_encode_zeta_poly(self):
        """zeta^0 -> 1, zeta -> 1 + lambda"""
        self.assertEqual(encode_zeta_poly(7, 2, [1]), self.one)
        self.assertEqual(CycloElem.zeta(7, 2, 1).coeffs, (1, 1, 0, 0, 0, 0))

        # p = 3: zeta^2 = -1 - zeta = -2 - lambda
        self.assertEqual(encode_zeta_poly(3, 2, [0, 0, 1]).coeffs, (7, 8))

    def test_ring_products_p3(self):
        """lambda^2 = -3 - 3 lambda and (1 + lambda)^3 = 1 when p = 3"""
        lam = CycloElem.lam(3, 2)
        self.assertEqual((lam * lam).coeffs, (6, 6))
        self.assertEqual((1 + lam) ** 3, CycloElem.one(3, 2))

    def test_scalar_arithmetic(self):
        """ints act as constants"""
        x = CycloElem(7, 2, (1, 2, 3, 4, 5, 6))
        self.assertEqual(x * 1, x)
        self.assertEqual(x * self.one, x)
        self.assertEqual(2 * x, x + x)
        self.assertEqual(x - x, CycloElem.zero(7, 2))
        self.assertEqual((1 - x) + x, self.one)
        self.assertEqual(x ** 0, self.one)

    def test_zeta_to_the_p(self):
        """(1 + lambda)^p = zeta^p = 1"""
        for p in (5, 7, 11):
            zeta = CycloElem.zeta(p, 3)
            self.assertEqual(zeta ** p, CycloElem.one(p, 3))

    def test_mixed_precision_aligns_down(self):
        """the sum of a mod p^2 and a mod p^3 element lives mod p^2"""
        total = CycloElem.one(7, 2) + CycloElem.one(7, 3)
        self.assertEqual(total.a, 2)

        with self.assertRaises(InvalidArgument):
            CycloElem.one(7, 2) + CycloElem.one(5, 2)

    def test_negative_power(self):
        with self.assertRaises(InvalidArgument):
            self.lam ** -1

    def test_text_codec(self):
        """to_text / from_text keep the element, comment lines are skipped"""
        x = CycloElem(7, 2, (1, 2, 3, 4, 5, 48))
        self.assertEqual(CycloElem.from_text(x.to_text()), x)
        self.assertEqual(CycloElem.from_text('# expr=zeta^1\n5 1\n1 1 0 0\n'), CycloElem.zeta(5, 1))

        with self.assertRaises(InvalidArgument):
            CycloElem.from_text('7 2\n1 two 3\n')
        with self.assertRaises(InvalidArgument):
            CycloElem.from_text('# nothing here\n')

    def test_decode_zeta_poly(self):
        """decode inverts encode on p-1 zeta coefficients"""
        coeffs = (3, 0, 5, 1, 0, 2)
        self.assertEqual(decode_zeta_poly(encode_zeta_poly(7, 2, coeffs)), coeffs)

    def test_zeta_lambda_round_trip_small_primes(self):
        """both basis changes invert each other on every basis vector for p <= 31, a <= 3"""
        for p in primerange(3, 32):
            for a in (1, 2, 3):
                with self.subTest(p=p, a=a):
                    for k in range(p - 1):
                        unit_vector = tuple(1 if i == k else 0 for i in range(p - 1))
                        self.assertEqual(decode_zeta_poly(encode_zeta_poly(p, a, unit_vector)), unit_vector)

                        basis_element = CycloElem(p, a, unit_vector)
                        self.assertEqual(encode_zeta_poly(p, a, decode_zeta_poly(basis_element)), basis_element)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(list(primerange(3, 32))), st.integers(1, 3), st.data())
    def test_zeta_lambda_round_trip_random(self, p, a, data):
        x = data.draw(elements(p, a))
        self.assertEqual(encode_zeta_poly(p, a, decode_zeta_poly(x)), x)

        coeffs = tuple(data.draw(st.lists(st.integers(0, p ** a - 1), min_size=p - 1, max_size=p - 1)))
        self.assertEqual(decode_zeta_poly(encode_zeta_poly(p, a, coeffs)), coeffs)

    def test_convolve(self):
        """(1 + 2x)(3 + x) = 3 + 7x + 2x^2"""
        self.assertEqual(convolve([1, 2], [3, 1]), [3, 7, 2])
        self.assertEqual(convolve([], [1]), [])

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from([3, 5, 7, 11]), st.data())
    def test_product_matches_zeta_basis(self, p, data):
        """lambda-basis multiplication agrees with cyclic multiplication of zeta-coefficients"""
        a = 2
        modulus = p ** a
        left = data.draw(st.lists(st.integers(0, modulus - 1), min_size=p, max_size=p))
        right = data.draw(st.lists(st.integers(0, modulus - 1), min_size=p, max_size=p))
        expected = encode_zeta_poly(p, a, zeta_product(left, right, p, modulus))
        self.assertEqual(encode_zeta_poly(p, a, left) * encode_zeta_poly(p, a, right), expected)

    @settings(max_examples=30, deadline=None)
    @given(elements(7, 2), elements(7, 2), elements(7, 2))
    def test_ring_laws(self, x, y, z):
        """associativity, commutativity and distributivity"""
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * y, y * x)
        self.assertEqual(x * (y + z), x * y + x * z)
