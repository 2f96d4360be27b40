import os
from dataclasses import dataclass, field
from typing import Optional, Tuple

from cyclolab.exceptions import InvalidArgument

SUITES = ('annihilator', 'bernoulli', 'lambda-adic', 'singular', 'units')

PRECISION_ENV = 'CYCLOLAB_PRECISION'
SURVEY_PRECISION_ENV = 'CYCLOLAB_SURVEY_PRECISION'


@dataclass
class RunConfig:
    """
    Settings for one cyclolab run

    Attributes
    ----------
    lo : int
        lower end of the prime range (inclusive)
    hi : int
        upper end of the prime range (inclusive)
    precision : int
        coefficient precision a, elements are known mod p^a
    survey_precision : int
        precision used by the unit survey
    prime_cap : int
        largest prime a sweep may touch
    suites : tuple
        verification suites selected for cmd_verify
    output_format : str
        json, csv or text
    out : str
        output path, None for stdout
    seed : int
        seed for property sampling, recorded in every report
    workers : int
        processes used by range sweeps
    r_p_plus : int
        assumed plus-part rank fed to the structure bounds
    vandiver : bool
        reject plus-part eigenvalues during validation
    frobenius_pairs : int
        random unit pairs per prime for the Frobenius law at p <= 13
    sampled_sets : int
        random eigenvalue sets per prime once exhaustive enumeration stops
    """
    lo: int = 5
    hi: int = 5
    precision: int = 2
    survey_precision: int = 4
    prime_cap: int = 2 ** 14
    suites: Tuple[str, ...] = SUITES
    output_format: str = 'json'
    out: Optional[str] = None
    seed: int = 0
    workers: int = 1
    r_p_plus: int = 0
    vandiver: bool = False
    frobenius_pairs: int = 500
    sampled_sets: int = 1000

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidArgument(f'empty range: lo={self.lo} > hi={self.hi}')
        for name in ('precision', 'survey_precision'):
            value = getattr(self, name)
            if not 2 <= value <= 8:
                raise InvalidArgument(f'{name}={value} outside [2, 8]')
        if self.output_format not in ('json', 'csv', 'text'):
            raise InvalidArgument(f'unknown output format {self.output_format!r}')
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise InvalidArgument(f'unknown suites {unknown}')
        if self.workers < 1:
            raise InvalidArgument('workers must be positive')
        for name in ('frobenius_pairs', 'sampled_sets'):
            if getattr(self, name) < 1:
                raise InvalidArgument(f'{name} must be positive')
        self.suites = tuple(self.suites)

    @classmethod
    def from_env(cls, environ=None, **overrides) -> 'RunConfig':
        """
        Build a RunConfig, letting the environment supply default precisions

        Parameters
        ----------
        environ : dict
            mapping to read instead of os.environ
        **overrides
            explicit field values; these win over the environment

        Returns
        -------
        RunConfig
        """
        environ = os.environ if environ is None else environ
        values = {}
        for env_name, key in ((PRECISION_ENV, 'precision'), (SURVEY_PRECISION_ENV, 'survey_precision')):
            if env_name in environ:
                try:
                    values[key] = int(environ[env_name])
                except ValueError as e:
                    raise InvalidArgument(f'{env_name} must be an integer') from e
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def header(self, command: str) -> dict:
        return {'schema': 1, 'command': command, 'seed': self.seed, 'precision': self.precision}
