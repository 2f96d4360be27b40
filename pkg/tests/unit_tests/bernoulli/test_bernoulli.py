import unittest

from sympy import primerange

from cyclolab.models.annihilators import primitive_root
from cyclolab.models.bernoulli import (
    IrregularityReport,
    bernoulli_even_mod_p,
    bernoulli_oracle_mod_p,
    irregular_indices,
    irregularity_index,
    minus_eigenvalues_from_bernoulli,
    irregularity_report,
    )
from cyclolab.exceptions import InvalidArgument

# classical irregular pairs below 300 that the tables must reproduce
IRREGULAR_PAIRS = {
    37: [32], 59: [44], 67: [58], 101: [68], 103: [24], 131: [22], 149: [130], 157: [62, 110],
}


class TestBernoulliResidues(unittest.TestCase):
    def test_bernoulli_small_primes(self):
        """B_2 = 1/6 and B_4 = -1/30 reduced mod p"""
        self.assertEqual(bernoulli_even_mod_p(5), {2: 1})
        self.assertEqual(bernoulli_even_mod_p(7), {2: 6, 4: 3})

        # p = 3 has no index in [2, p-3]
        self.assertEqual(bernoulli_even_mod_p(3), {})

    def test_bernoulli_37(self):
        """B_32 vanishes mod 37"""
        residues = bernoulli_even_mod_p(37)
        self.assertEqual(residues[32], 0)
        self.assertEqual(sorted(residues), list(range(2, 35, 2)))

    def test_bernoulli_not_prime(self):
        with self.assertRaises(InvalidArgument):
            bernoulli_even_mod_p(35)

    def test_oracle_agrees_below_160(self):
        """power sums and the recurrence give the same residues"""
        for p in primerange(5, 160):
            self.assertEqual(bernoulli_oracle_mod_p(p), bernoulli_even_mod_p(p), msg=f'p={p}')


class TestIrregularity(unittest.TestCase):
    def test_irregular_indices_known_pairs(self):
        """the classical pairs are reproduced exactly"""
        for p, indices in IRREGULAR_PAIRS.items():
            self.assertEqual(irregular_indices(p), indices)
            self.assertEqual(irregularity_index(p), len(indices))

    def test_small_primes_are_regular(self):
        """every prime below 37 is regular"""
        for p in primerange(3, 37):
            self.assertEqual(irregular_indices(p), [])
            self.assertEqual(irregularity_index(p), 0)

    def test_minus_eigenvalues(self):
        """2k = 32 gives mu = 2^5 = 32 for p = 37"""
        self.assertEqual(minus_eigenvalues_from_bernoulli(37, 2).values, (32,))
        self.assertEqual(len(minus_eigenvalues_from_bernoulli(5)), 0)

        # p = 157: exponents 95 and 47
        u = primitive_root(157)
        minus = minus_eigenvalues_from_bernoulli(157, u)
        self.assertEqual(set(minus.values), {pow(u, 95, 157), pow(u, 47, 157)})
        self.assertEqual(sorted(minus.exponents), [47, 95])

    def test_minus_eigenvalues_count_matches_index(self):
        """|minus eigenvalues| = i_p and every exponent is odd"""
        for p in primerange(5, 300):
            minus = minus_eigenvalues_from_bernoulli(p)
            self.assertEqual(len(minus), irregularity_index(p))
            self.assertTrue(all(m % 2 == 1 for m in minus.exponents))

    def test_irregularity_report(self):
        """irregularity_report should bundle indices, eigenvalues and the oracle verdict"""
        report = irregularity_report(37)

        # report should not be None
        self.assertIsInstance(report, IrregularityReport)

        self.assertEqual(report.u, 2)
        self.assertEqual(report.i_p, 1)
        self.assertEqual(report.irregular_indices, [32])
        self.assertEqual(report.minus_eigenvalues.values, (32,))
        self.assertTrue(report.oracle_agrees)
        self.assertEqual(report.rejected_eigenvalues, [])
        self.assertTrue(report.consistent)

    def test_irregularity_report_record(self):
        record = irregularity_report(37).to_record()
        self.assertEqual(record['minus_eigenvalues'], [32])
        self.assertEqual(record['i_p'], 1)
