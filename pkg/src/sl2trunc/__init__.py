"""Exact invariants of a semisimple Lie algebra with an sl(2)-subalgebra.

Root data, the t-grading fixed by a weighted Dynkin characteristic, the
truncation bound, adapted central characters for principal sl(2), truncated
block counts and formal t-characters.
"""

__version__ = "0.1.0"

from .blocks import BlockCount, count_truncated_simples, minimal_k_type
from .chars import (FormalTCharacter, GammaMults, e1_term, gamma1_character,
                    gamma_multiplicities, kostant_weights, truncation_certificates,
                    verma_t_character)
from .errors import (DomainError, InfeasibleCharacteristicError, PreconditionError,
                     ResourceError, Sl2TruncError, UnsupportedCaseError, ValidationError)
from .rootsys import (AlgebraSpec, RootSystem, build_root_system, is_antidominant_shifted,
                      linkage_class, reflect, stabilizer_root_set, weyl_orbit)
from .sigma import (Classification, SigmaReport, classify_sigma, enumerate_integral_sigma,
                    in_sigma, weakly_adapted_check)
from .sl2pair import (Characteristic, GradedDims, HElement, PairInvariants,
                      characteristic_feasibility, grading, k_decomposition, pair_invariants,
                      principal_characteristic, solve_h)
