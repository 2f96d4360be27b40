from .element import (
    CycloElem,
    convolve,
    taylor_shift,
    lambda_relation,
    encode_zeta_poly,
    decode_zeta_poly,
    )
from .lambdaadic import (
    p_adic_order,
    v_pi,
    format_valuation,
    galois_action,
    sigma_pow,
    conjugate,
    power,
    invert,
    congruent_mod_pi,
    normalize,
    divide_by_lambda,
    frobenius_power_check,
    teichmuller,
    groupring_power,
    )
from .series import logarithm, exponential
from .attributes import FrobeniusWitness
