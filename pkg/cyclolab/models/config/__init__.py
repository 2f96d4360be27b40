from .runconfig import RunConfig, SUITES
