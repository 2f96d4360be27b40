import unittest

from sympy import primerange
from hypothesis import given, settings, strategies as st

from cyclolab.models.annihilators import (
    EigenSet,
    ValidationOptions,
    HYPOTHESIS_DEPENDENT,
    primitive_root,
    power_table,
    u_index,
    poly_from_roots,
    poly_divrem,
    induced_eigenvalues,
    induced_min_poly,
    annihilator_cofactor,
    symmetric_coefficients,
    reassemble_from_symmetric,
    rank_inequality_report,
    stickelberger_element,
    groupring_eval_scalar,
    validate_eigenvalue_set,
    minus_plus_split,
    structure_bounds_check,
    FpPoly,
    )
from cyclolab.exceptions import InvalidArgument, EigenvalueRejected


class TestPrimitiveRoots(unittest.TestCase):
    def test_primitive_root_smallest(self):
        """primitive_root should return the smallest generator"""
        self.assertEqual(primitive_root(5), 2)
        self.assertEqual(primitive_root(7), 3)
        self.assertEqual(primitive_root(37), 2)

    def test_primitive_root_not_prime(self):
        """composites and 2 are refused"""
        for n in (1, 2, 9, 15):
            with self.assertRaises(InvalidArgument):
                primitive_root(n)

    def test_power_table(self):
        """power_table lists u^0..u^{p-2}"""
        self.assertEqual(power_table(5, 2), (1, 2, 4, 3))
        self.assertEqual(power_table(7, 3), (1, 3, 2, 6, 4, 5))

        # u_{-1} is the inverse of u
        self.assertEqual(u_index(7, 3, -1), 5)

    def test_power_table_rejects_non_generator(self):
        with self.assertRaises(InvalidArgument):
            power_table(7, 2)


class TestAnnihilatorPolynomials(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.M_13 = EigenSet.from_values(13, 2, [2, 6])
        cls.M_collide = EigenSet.from_values(13, 2, [2, 11])

    @classmethod
    def tearDownClass(cls) -> None:
        pass

    def test_poly_from_roots(self):
        """poly_from_roots should expand prod (X - r)"""
        self.assertEqual(poly_from_roots(5, {2, 3}).coeffs, (1, 0, 1))
        self.assertEqual(poly_from_roots(7, range(1, 7)).coeffs, (6, 0, 0, 0, 0, 0, 1))

        # empty product is 1
        self.assertEqual(poly_from_roots(5, []).coeffs, (1,))

    def test_poly_from_roots_full_group(self):
        """every nonzero residue as a root gives X^{p-1} - 1"""
        for p in primerange(3, 300):
            with self.subTest(p=p):
                expected = (p - 1,) + (0,) * (p - 2) + (1,)
                self.assertEqual(poly_from_roots(p, range(1, p)).coeffs, expected)

    def test_poly_from_roots_rejects_duplicates(self):
        with self.assertRaises(InvalidArgument):
            poly_from_roots(5, [2, 2])
        with self.assertRaises(InvalidArgument):
            poly_from_roots(5, [0])

    def test_poly_divrem(self):
        """(X^6 - 1) / (X^2 + X + 1) = X^4 - X^3 + X - 1 exactly"""
        quotient, remainder = poly_divrem(FpPoly(7, (6, 0, 0, 0, 0, 0, 1)), FpPoly(7, (1, 1, 1)))
        self.assertEqual(quotient.coeffs, (6, 1, 0, 6, 1))
        self.assertTrue(remainder.is_zero)

        # (X^2 + 1) / (X - 1) leaves 2 over F_5
        _, remainder = poly_divrem(FpPoly(5, (1, 0, 1)), FpPoly(5, (4, 1)))
        self.assertEqual(remainder.coeffs, (2,))

    def test_induced_eigenvalues(self):
        """squaring {2, 6} mod 13 gives {4, 10}; {2, 11} collapses to {4}"""
        self.assertEqual(induced_eigenvalues(self.M_13, 2).values, (4, 10))
        self.assertEqual(induced_eigenvalues(self.M_collide, 2).values, (4,))

        # d = p - 1 sends everything to 1
        self.assertEqual(induced_eigenvalues(self.M_13, 12).values, (1,))

    def test_induced_eigenvalues_needs_divisor(self):
        with self.assertRaises(InvalidArgument):
            induced_eigenvalues(self.M_13, 5)

    def test_induced_min_poly(self):
        """P_{r_d}(U^d) for the documented sets"""
        self.assertEqual(induced_min_poly(self.M_collide, 2).coeffs, (9, 0, 1))
        self.assertEqual(poly_from_roots(13, self.M_collide).coeffs, (9, 0, 1))

        # (U^2 - 4)(U^2 - 10) = U^4 - U^2 + 1 mod 13
        self.assertEqual(induced_min_poly(self.M_13, 2).coeffs, (1, 0, 12, 0, 1))

        # U^4 - 16 = U^4 - 1 mod 5
        self.assertEqual(induced_min_poly(EigenSet.from_values(5, 2, [2]), 4).coeffs, (4, 0, 0, 0, 1))

    def test_annihilator_cofactor(self):
        """P_{r_1} * Q_d = P_{r_d}(U^d)"""
        cofactor = annihilator_cofactor(self.M_13, 2)
        self.assertEqual(poly_from_roots(13, self.M_13) * cofactor, induced_min_poly(self.M_13, 2))

    def test_symmetric_coefficients(self):
        """S_0..S_r of the distinct mu^d"""
        self.assertEqual(symmetric_coefficients(EigenSet.from_values(5, 2, [2, 3]), 1), (1, 0, 1))
        self.assertEqual(symmetric_coefficients(self.M_13, 2), (1, 1, 1))

        # one eigenvalue: S_1 = mu^d
        self.assertEqual(symmetric_coefficients(EigenSet.from_values(13, 2, [6]), 3)[1], pow(6, 3, 13))

    def test_reassemble_from_symmetric(self):
        """the symmetric functions rebuild P_{r_d}(U^d)"""
        coefficients = symmetric_coefficients(self.M_13, 2)
        self.assertEqual(reassemble_from_symmetric(13, coefficients, 2), induced_min_poly(self.M_13, 2))

    def test_rank_inequality_report(self):
        """p=13, M={2,6}, (d,g)=(3,4) gives r_1=2, r_3=1, r_4=2 and passes"""
        profile = rank_inequality_report(13, self.M_13, 3, 4)
        self.assertEqual((profile.r_1, profile.r_d, profile.r_g), (2, 1, 2))
        self.assertTrue(profile.product_ok)
        self.assertTrue(profile.rank_one_ok)
        self.assertTrue(profile.reverse_bounds_ok)
        self.assertTrue(profile.passed)

        # 2^3 = 6^3 = 8 mod 13
        self.assertEqual(profile.classes, [(8, (2, 6))])

    def test_rank_inequality_report_trivial_set(self):
        """M = {1} has every rank equal to 1"""
        profile = rank_inequality_report(13, EigenSet.from_values(13, 2, [1]), 3, 4)
        self.assertEqual((profile.r_1, profile.r_d, profile.r_g), (1, 1, 1))
        self.assertTrue(profile.passed)

    def test_rank_inequality_report_bad_splitting(self):
        """(2, 6) is not coprime"""
        with self.assertRaises(InvalidArgument):
            rank_inequality_report(13, self.M_13, 2, 6)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([7, 13, 29, 61]), st.data())
    def test_rank_laws_hold_for_random_sets(self, p, data):
        """r_d <= r_1 <= d r_d and P_{r_1} | P_{r_d}(U^d) for every divisor d"""
        values = data.draw(st.sets(st.integers(1, p - 1), min_size=1, max_size=3))
        M = EigenSet.from_values(p, primitive_root(p), values)
        for d in (d for d in range(1, p) if (p - 1) % d == 0):
            profile = rank_inequality_report(p, M, d)
            self.assertTrue(profile.lower_bound_ok)
            self.assertTrue(profile.upper_bound_ok)
            _, remainder = poly_divrem(induced_min_poly(M, d), poly_from_roots(p, M))
            self.assertTrue(remainder.is_zero)


class TestStickelberger(unittest.TestCase):
    def test_stickelberger_element_coefficients(self):
        """p theta = sum u_m sigma^{-m}"""
        self.assertEqual(stickelberger_element(5, 2).coeffs, (1, 3, 4, 2))
        theta = stickelberger_element(7, 3)
        self.assertEqual(theta.coeffs[0], 1)
        self.assertEqual(theta.coeffs[5], 3)

        # coefficients are a permutation of 1..p-1
        self.assertEqual(sorted(theta.coeffs), list(range(1, 7)))

    def test_stickelberger_collapse(self):
        """p theta evaluated at sigma -> u is p - 1"""
        for p in primerange(3, 300):
            with self.subTest(p=p):
                u = primitive_root(p)
                self.assertEqual(groupring_eval_scalar(stickelberger_element(p, u), u), p - 1)


class TestEigenvalueValidation(unittest.TestCase):
    def test_validate_rejects_u(self):
        """p=7, u=3, M={3} is rejected by mu-equals-u"""
        with self.assertRaises(EigenvalueRejected) as context:
            validate_eigenvalue_set(7, 3, [3])
        self.assertEqual(context.exception.rule, 'mu-equals-u')
        self.assertEqual(context.exception.mu, 3)

    def test_validate_rejects_one_and_minus_one(self):
        with self.assertRaises(EigenvalueRejected) as context:
            validate_eigenvalue_set(13, 2, [1])
        self.assertEqual(context.exception.rule, 'mu-equals-one')

        with self.assertRaises(EigenvalueRejected) as context:
            validate_eigenvalue_set(7, 3, [6])
        self.assertEqual(context.exception.rule, 'mu-equals-minus-one')

        with self.assertRaises(EigenvalueRejected) as context:
            validate_eigenvalue_set(7, 3, [7])
        self.assertEqual(context.exception.rule, 'mu-out-of-range')

    def test_validate_rule_toggles(self):
        """rules can be switched off, the vandiver rule on"""
        M = validate_eigenvalue_set(7, 3, [3], ValidationOptions(reject_u=False))
        self.assertEqual(M.values, (3,))

        with self.assertRaises(EigenvalueRejected) as context:
            validate_eigenvalue_set(7, 3, [2], ValidationOptions(vandiver=True))
        self.assertEqual(context.exception.rule, 'vandiver-plus-part')

        # the vandiver rule is the one resting on an unproven hypothesis
        self.assertTrue(HYPOTHESIS_DEPENDENT['vandiver-plus-part'])
        self.assertFalse(HYPOTHESIS_DEPENDENT['mu-equals-u'])

    def test_validate_rejection_is_invalid_argument(self):
        with self.assertRaises(InvalidArgument):
            validate_eigenvalue_set(7, 3, [3])

    def test_minus_plus_split(self):
        """parity of the discrete log decides the part"""
        minus, plus = minus_plus_split(7, 3, EigenSet.from_values(7, 3, [2, 4]))
        self.assertEqual(minus.values, ())
        self.assertEqual(plus.values, (2, 4))

        minus, plus = minus_plus_split(7, 3, EigenSet.from_values(7, 3, [5]))
        self.assertEqual(minus.values, (5,))
        self.assertEqual(plus.values, ())

        minus, plus = minus_plus_split(7, 3, EigenSet(7, 3))
        self.assertEqual((len(minus), len(plus)), (0, 0))

    def test_minus_plus_split_root_mismatch(self):
        """the set must be indexed by the root it is split under"""
        with self.assertRaises(InvalidArgument):
            minus_plus_split(7, 5, EigenSet.from_values(7, 3, [2, 4]))
        with self.assertRaises(InvalidArgument):
            minus_plus_split(11, 3, EigenSet.from_values(7, 3, [2]))


class TestStructureBounds(unittest.TestCase):
    def test_structure_bounds_pass(self):
        self.assertTrue(structure_bounds_check(1, 0, 1, 1, 1).passed)
        self.assertTrue(structure_bounds_check(2, 1, 2, 2, 1).passed)

    def test_structure_bounds_fail(self):
        """i_p = 2 > r_p^- = 1 fails"""
        report = structure_bounds_check(1, 0, 2, 2, 0)
        self.assertFalse(report.passed)
        labels = [c.label for c in report.failures()]
        self.assertIn('r_1^- <= r_p^-', labels)
        self.assertIn('i_p <= r_p^-', labels)
        self.assertIn('r_p^- - r_p^+ <= rho_1', labels)

    def test_structure_bounds_negative(self):
        with self.assertRaises(InvalidArgument):
            structure_bounds_check(-1, 0, 0, 0, 0)
