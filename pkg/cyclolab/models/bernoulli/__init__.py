from .bernoulli import (
    bernoulli_even_mod_p,
    bernoulli_oracle_mod_p,
    irregular_indices,
    irregularity_index,
    minus_eigenvalues_from_bernoulli,
    irregularity_report,
    )
from .attributes import IrregularityReport
