"""Exact Stirling numbers, Adelberg polynomials and lacunary binomial-sum congruences."""
from lacuna._kernels import BACKEND as KERNEL_BACKEND
from lacuna.adelberg import a_poly, a_value, b_poly, b_value
from lacuna.congruence import (
    ClassicalParams,
    CongruenceParams,
    CongruenceReport,
    classical_check,
    cong1_n_report,
    cong1_report,
    cong2_report,
    cong3_report,
    lacunary_rewrite_check,
)
from lacuna.exactnum import DomainError, VerificationError, binom_int, multinomial
from lacuna.stirling import stirling1, stirling1_mod_p, stirling2

__version__ = "0.1.0"
