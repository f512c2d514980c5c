"""Decoding binary linear codes with Groebner bases of their binomial ideals."""

from .algebra import (
    GRLEX,
    LEX,
    GroebnerBasis,
    MonomialOrder,
    Polynomial,
    add,
    buchberger,
    compare,
    divide,
    lcm_monomial,
    leading_term,
    mul_monomial,
    normal_form,
    reduce_basis,
    s_polynomial,
)
from .code import (
    LinearCode,
    closed_form_basis,
    encode,
    from_monomial,
    ideal_generators,
    min_distance,
    standardize,
    to_monomial,
)
from .decoder import DecodeResult, binomial_weight, decode, decode_single_error, remainder_word
from .errors import DecodeFailure
from .oracle import NearestResult, nearest_codeword, verify_groebner
from .simulate import SimulationResult, simulate

__version__ = "0.1.0"
