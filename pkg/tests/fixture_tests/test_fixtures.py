import os
import tempfile
import unittest

from cyclolab import check_fixtures, fixture_expression, read_fixture
from cyclolab.models.cyclotomic import CycloElem
from cyclolab.exceptions import InvalidArgument

# fixture directories
path_to_current_file = os.path.realpath(__file__)
current_directory = os.path.dirname(path_to_current_file)
path_to_good = os.path.join(current_directory, "fixtures/good")
path_to_corrupt = os.path.join(current_directory, "fixtures/corrupt")


class TestFixtures(unittest.TestCase):
    def test_read_fixture(self):
        """metadata comes from the comment lines, the element from the rest"""
        meta, element = read_fixture(os.path.join(path_to_good, "lambda_p5.txt"))
        self.assertEqual(meta, {'expr': 'lambda^4'})
        self.assertEqual(element, CycloElem(5, 2, (20, 15, 15, 20)))

    def test_fixture_expression(self):
        self.assertEqual(fixture_expression('lambda^4', 5, 2), CycloElem.lam(5, 2, 4))
        self.assertEqual(fixture_expression('zeta^3', 7, 1).coeffs, (1, 3, 3, 1, 0, 0))
        self.assertEqual(fixture_expression('delta_2', 5, 1).coeffs, (4, 0, 1, 4))

        # zeta^{-1} = zeta^{p-1}
        self.assertEqual(fixture_expression('zeta^-1', 7, 2), CycloElem.zeta(7, 2, 6))

    def test_fixture_expression_unknown(self):
        with self.assertRaises(InvalidArgument):
            fixture_expression('eta_2', 5, 1)
        with self.assertRaises(InvalidArgument):
            fixture_expression('lambda^-1', 5, 1)

    def test_check_fixtures_good(self):
        """every good fixture is reproduced"""
        result = check_fixtures(path_to_good)
        self.assertEqual(result.name, 'fixtures')
        self.assertEqual(result.checks, 3)
        self.assertTrue(result.passed)

    def test_check_fixtures_corrupt(self):
        """the corrupted constant term is reported with both coefficient lists"""
        result = check_fixtures(path_to_corrupt)
        self.assertFalse(result.passed)
        self.assertEqual(result.failures, 1)

        counterexample = result.first_counterexample
        self.assertEqual(counterexample['fixture'], 'lambda_p5.txt')
        self.assertEqual(counterexample['expected'], [20, 15, 15, 20])
        self.assertEqual(counterexample['found'], [21, 15, 15, 20])

    def test_check_fixtures_malformed(self):
        """missing expr lines and unreadable elements count as failures"""
        with tempfile.TemporaryDirectory() as directory:
            with open(os.path.join(directory, 'a_no_expr.txt'), 'w') as handle:
                handle.write('5 1\n1 0 0 0\n')
            with open(os.path.join(directory, 'b_garbage.txt'), 'w') as handle:
                handle.write('# expr=zeta^1\n5 1\n1 x\n')

            result = check_fixtures(directory)
            self.assertEqual(result.checks, 2)
            self.assertEqual(result.failures, 2)
            self.assertEqual(result.first_counterexample['fixture'], 'a_no_expr.txt')

    def test_check_fixtures_empty_directory(self):
        with tempfile.TemporaryDirectory() as directory:
            result = check_fixtures(directory)
            self.assertEqual(result.checks, 0)
            self.assertTrue(result.passed)
