"""Noether-Lefschetz divisors on moduli of quasi-polarized K3 surfaces of low genus."""
from .errors import (
    DomainError,
    GenusMismatch,
    InvalidDivisor,
    InvalidSource,
    K3NLError,
    NonIntegralRho,
    UnsupportedGenus,
)
from .lattice import (
    CanonicalDivisor,
    GenusContext,
    NLPair,
    canonicalize,
    discriminant,
    equivalent,
    is_valid_divisor,
    represent,
)
from .picard import RhoBreakdown, alpha, beta, betti2, frac_sum, kronecker, rho, square_count
from .nonbn import NonBNList, is_nonbn, nonbn_closed_form, nonbn_system
from .divisors import (
    GeneratorSet,
    SupportSet,
    check_peterson_relation,
    decompose,
    elliptic_divisors,
    generators,
)
from .mukai import MukaiModel, check_degrees, git_facts, model

__version__ = "0.1.0"
