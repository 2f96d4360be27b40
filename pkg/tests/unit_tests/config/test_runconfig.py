import unittest

from cyclolab.models.config import RunConfig, SUITES
from cyclolab.exceptions import InvalidArgument


class TestRunConfig(unittest.TestCase):
    def test_runconfig_defaults(self):
        """defaults: precision 2, survey precision 4, every suite"""
        config = RunConfig()
        self.assertEqual(config.precision, 2)
        self.assertEqual(config.survey_precision, 4)
        self.assertEqual(config.prime_cap, 2 ** 14)
        self.assertEqual(config.suites, SUITES)
        self.assertEqual(config.output_format, 'json')
        self.assertEqual(config.frobenius_pairs, 500)
        self.assertEqual(config.sampled_sets, 1000)

    def test_runconfig_validation(self):
        """out of range settings raise InvalidArgument"""
        with self.assertRaises(InvalidArgument):
            RunConfig(lo=11, hi=7)
        with self.assertRaises(InvalidArgument):
            RunConfig(precision=1)
        with self.assertRaises(InvalidArgument):
            RunConfig(survey_precision=9)
        with self.assertRaises(InvalidArgument):
            RunConfig(output_format='xml')
        with self.assertRaises(InvalidArgument):
            RunConfig(suites=('bernoulli', 'zeta'))
        with self.assertRaises(InvalidArgument):
            RunConfig(workers=0)
        with self.assertRaises(InvalidArgument):
            RunConfig(frobenius_pairs=0)
        with self.assertRaises(InvalidArgument):
            RunConfig(sampled_sets=-1)

    def test_runconfig_suites_become_tuple(self):
        self.assertEqual(RunConfig(suites=['units']).suites, ('units',))

    def test_runconfig_from_env(self):
        """the environment supplies precisions, explicit overrides win"""
        environ = {'CYCLOLAB_PRECISION': '3', 'CYCLOLAB_SURVEY_PRECISION': '6'}
        config = RunConfig.from_env(environ)
        self.assertEqual((config.precision, config.survey_precision), (3, 6))

        config = RunConfig.from_env(environ, precision=5, survey_precision=None)
        self.assertEqual((config.precision, config.survey_precision), (5, 6))

        # an empty environment keeps the defaults
        self.assertEqual(RunConfig.from_env({}).precision, 2)

    def test_runconfig_from_env_malformed(self):
        with self.assertRaises(InvalidArgument):
            RunConfig.from_env({'CYCLOLAB_PRECISION': 'high'})

    def test_runconfig_header(self):
        config = RunConfig(seed=7, precision=3)
        self.assertEqual(config.header('verify'), {'schema': 1, 'command': 'verify', 'seed': 7, 'precision': 3})
