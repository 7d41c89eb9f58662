"""Points of constancy of the periodic Airy equation u_t = u_xxx with step data."""
from .cyclo import CycloSum, from_exponents, is_real, is_zero, to_complex
from .kummer import KummerSpec, crt_split_check, crt_split_check_even, kummer_S, kummer_Se, kummer_So
from .numtheory import DomainError, complement, cyclotomic, factorize, legendre, reduce_fraction
from .oracle import VerifyReport, oracle_pcset, verify, verify_range
from .permpoly import CubicCoeffs, ResourceError, is_permutation_brute, is_permutation_table
from .predictor import CongruenceClause, PCSet, Prediction, clause_eval, predict
from .profile import (
    DiracComb,
    RationalTime,
    StepProfile,
    compute_comb,
    compute_jump,
    compute_profile,
    extremal_jumps,
    fourier_eval,
    superpose_step,
)

__version__ = "0.1.0"
