import unittest

from hypothesis import given, settings, strategies as st

from cyclolab.models.cyclotomic import CycloElem, logarithm, exponential, v_pi
from cyclolab.exceptions import InvalidArgument


def principal_units(p: int, a: int, depth: int = 1):
    # 1 + lambda^depth * (random element)
    modulus = p ** a
    return st.lists(st.integers(0, modulus - 1), min_size=p - 1, max_size=p - 1).map(
        lambda coeffs: 1 + CycloElem.lam(p, a, depth) * CycloElem(p, a, tuple(coeffs)))


class TestLogarithm(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.p = 7
        cls.a = 3

    @classmethod
    def tearDownClass(cls) -> None:
        pass

    def test_log_of_one(self):
        self.assertEqual(logarithm(CycloElem.one(self.p, self.a)), CycloElem.zero(self.p, self.a))

    def test_log_of_root_of_unity(self):
        """log(zeta) = 0 since zeta has finite order"""
        for p in (5, 7, 11):
            self.assertTrue(logarithm(CycloElem.zeta(p, 3)).is_zero)

    def test_log_valuation(self):
        """log(1 + lambda^2) = lambda^2 + higher terms"""
        x = 1 + CycloElem.lam(self.p, self.a, 2)
        log = logarithm(x)
        self.assertEqual(log.a, self.a)
        self.assertEqual(v_pi(log), 2)

    def test_log_needs_principal_unit(self):
        with self.assertRaises(InvalidArgument):
            logarithm(CycloElem.from_int(self.p, self.a, 2))

    @settings(max_examples=25, deadline=None)
    @given(principal_units(7, 3), principal_units(7, 3))
    def test_log_is_additive(self, x, y):
        """log(xy) = log(x) + log(y)"""
        self.assertEqual(logarithm(x * y), logarithm(x) + logarithm(y))


class TestExponential(unittest.TestCase):
    def test_exp_of_zero(self):
        self.assertEqual(exponential(CycloElem.zero(7, 2)), CycloElem.one(7, 2))

    def test_exp_needs_valuation_two(self):
        """the series diverges on v_pi(z) = 1"""
        with self.assertRaises(InvalidArgument):
            exponential(CycloElem.lam(7, 2))

    def test_exp_of_p(self):
        """exp(p) = 1 + p mod p^2"""
        z = CycloElem.from_int(7, 2, 7)
        self.assertEqual(exponential(z).with_precision(2), CycloElem.from_int(7, 2, 8))

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from([5, 7, 11]), st.data())
    def test_exp_inverts_log(self, p, data):
        """exp(log(x)) = x for x = 1 mod pi^2"""
        x = data.draw(principal_units(p, 2, depth=2))
        self.assertEqual(exponential(logarithm(x)), x)
