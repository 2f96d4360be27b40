import io
import json
import os
import tempfile
import unittest
from unittest.mock import patch

from cyclolab.cli import main, EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_REJECTED

path_to_current_file = os.path.realpath(__file__)
current_directory = os.path.dirname(path_to_current_file)
path_to_good = os.path.join(current_directory, "fixtures/good")
path_to_corrupt = os.path.join(current_directory, "fixtures/corrupt")


class TestCli(unittest.TestCase):
    def setUp(self) -> None:
        self.directory = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.directory.name, 'report.json')

    def tearDown(self) -> None:
        self.directory.cleanup()

    def run_cli(self, *argv):
        """run main with the report sent to a temp file; returns (code, report, stderr)"""
        with patch('sys.stderr', new_callable=io.StringIO) as stderr:
            code = main(list(argv) + ['--out', self.out])
        report = None
        if os.path.exists(self.out):
            with open(self.out) as handle:
                report = handle.read()
        return code, report, stderr.getvalue()

    def test_cli_irregular(self):
        """5:7 gives two regular rows"""
        code, report, _ = self.run_cli('irregular', '--range', '5:7')
        self.assertEqual(code, EXIT_OK)
        records = json.loads(report)['records']
        self.assertEqual([r['p'] for r in records], [5, 7])
        self.assertEqual([r['i_p'] for r in records], [0, 0])

    def test_cli_irregular_37(self):
        code, report, _ = self.run_cli('irregular', '--range', '37:37')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(report)['records'][0]['minus_eigenvalues'], [32])

    def test_cli_irregular_empty_range(self):
        """no odd prime in 4:4 is not an error"""
        code, report, _ = self.run_cli('irregular', '--range', '4:4')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(report)['records'], [])

    def test_cli_irregular_csv(self):
        code, report, _ = self.run_cli('irregular', '--range', '5:13', '--format', 'csv')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(report.splitlines()), 5)

    def test_cli_annihilator(self):
        """p=13, M={2,6}, split 3:4 under u=7 passes"""
        code, report, _ = self.run_cli('annihilator', '--prime', '13', '--mu', '2,6', '--split', '3:4', '--u', '7')
        self.assertEqual(code, EXIT_OK)
        record = json.loads(report)['records'][0]
        self.assertEqual(record['M'], [2, 6])
        self.assertTrue(record['passed'])

    def test_cli_annihilator_rejected(self):
        """mu = u and mu = 1 exit with 3"""
        code, _, stderr = self.run_cli('annihilator', '--prime', '7', '--mu', '3')
        self.assertEqual(code, EXIT_REJECTED)
        self.assertIn('mu-equals-u', stderr)

        code, _, _ = self.run_cli('annihilator', '--prime', '13', '--mu', '1')
        self.assertEqual(code, EXIT_REJECTED)

    def test_cli_annihilator_needs_prime(self):
        code, _, _ = self.run_cli('annihilator', '--mu', '2')
        self.assertEqual(code, EXIT_USAGE)

    def test_cli_singular(self):
        """p=11, m=3: nu = 7; gamma = 0 is primary"""
        code, report, _ = self.run_cli('singular', '--prime', '11', '--m', '3')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(report)['records'][0]['nu'], 7)

        code, report, _ = self.run_cli('singular', '--prime', '11', '--m', '3', '--gamma', '0')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(report)['records'][0]['classification'], 'primary')

    def test_cli_singular_text(self):
        """the candidate lands on the record line as key=value fields"""
        code, report, _ = self.run_cli('singular', '--prime', '11', '--m', '3', '--format', 'text')
        self.assertEqual(code, EXIT_OK)
        lines = report.splitlines()
        self.assertEqual(len(lines), 6)
        self.assertIn('candidate.provenance=formula', lines[4])
        self.assertIn('v=7 exact', lines[4])

    def test_cli_singular_bad_m(self):
        """2m+1 = 3 is outside the range"""
        code, _, _ = self.run_cli('singular', '--prime', '11', '--m', '1')
        self.assertEqual(code, EXIT_USAGE)

    def test_cli_units(self):
        code, report, _ = self.run_cli('units', '--prime', '7', '--format', 'text')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('v=2 exact', report)
        self.assertIn('bounds.comparisons.0.ok=True', report)
        self.assertNotIn("{'", report)
        self.assertTrue(report.rstrip().endswith('# status=0 ok'))

    def test_cli_units_not_prime(self):
        code, _, _ = self.run_cli('units', '--prime', '9')
        self.assertEqual(code, EXIT_USAGE)

    def test_cli_verify(self):
        """the suites pass on 5:7 together with the good fixtures"""
        code, report, _ = self.run_cli('verify', '--range', '5:7', '--fixtures', path_to_good)
        self.assertEqual(code, EXIT_OK)
        names = [r['suite'] for r in json.loads(report)['records']]
        self.assertEqual(names, ['annihilator', 'bernoulli', 'lambda-adic', 'singular', 'units', 'fixtures'])

    def test_cli_verify_corrupt_fixture(self):
        """one corrupted fixture fails the run with exit 1"""
        code, report, _ = self.run_cli('verify', '--range', '5:5', '--suites', 'bernoulli',
                                       '--fixtures', path_to_corrupt)
        self.assertEqual(code, EXIT_CHECK_FAILED)
        fixtures = json.loads(report)['records'][-1]
        self.assertEqual(fixtures['failures'], 1)
        self.assertEqual(fixtures['first_counterexample']['found'][0], 21)

    def test_cli_verify_empty_range(self):
        code, report, _ = self.run_cli('verify', '--range', '4:4')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(all(r['checks'] == 0 for r in json.loads(report)['records']))

    def test_cli_verify_beyond_cap(self):
        code, _, stderr = self.run_cli('verify', '--range', '5:20000')
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('prime cap', stderr)

    def test_cli_usage_errors(self):
        """argparse failures and bad settings exit with 2"""
        self.assertEqual(self.run_cli('bogus')[0], EXIT_USAGE)
        self.assertEqual(self.run_cli('verify', '--range', 'a:b')[0], EXIT_USAGE)
        self.assertEqual(self.run_cli('verify', '--suites', 'zeta')[0], EXIT_USAGE)
        self.assertEqual(self.run_cli('irregular', '--precision', '1')[0], EXIT_USAGE)
