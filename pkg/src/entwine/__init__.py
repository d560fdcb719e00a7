"""Exact structure-constant calculus for entwining structures.

Validators for algebra/coalgebra/entwining axioms, entwined modules, smash
products, integrals, Frobenius certificates, and averaged splittings, all
over the rationals or a prime field with exact arithmetic.
"""

__version__ = "0.1.0"

from .fields import Field, QQ
from .linalg import (AffineSolution, Mat, TensorIndex, is_bijective,
                     kernel_basis, solve_affine)
from .structures import (Entwining, FiniteAlgebra, FiniteBialgebra,
                         FiniteCoalgebra, ValidationReport, build_doi_hopf,
                         build_flip, convolution_algebra,
                         dual_opposite_algebra, left_hit, right_hit,
                         validate_algebra, validate_bialgebra,
                         validate_coalgebra, validate_entwining)
from .entmod import (AlgebraModule, CoalgebraComodule, EntwinedModule,
                     SmashModule, from_smash_module, induce_from_comodule,
                     induce_from_module, is_morphism, to_smash_module,
                     validate_entwined_module)
from .galois import (ComoduleAlgebra, GaloisData, GaloisOutcome,
                     build_quotient_AotimesBA, canonical_entwining,
                     coinvariants, galois_integral_check)
from .frobint import (FrobeniusCertificate, FrobeniusFailure, IntegralSpace,
                      PsiBar, SmashAlgebra, build_psi_bar, build_smash,
                      entwining_integrals, frobenius_element_search,
                      frobenius_form_check, frobenius_search,
                      frobenius_via_integral, smash_integrals)
from .maschke import (NormalizedCointegralMap, NormalizedIntegralMap,
                      SplitCertificate, find_cointegral_map,
                      find_integral_map, split_with_cointegral_map,
                      split_with_integral_map)
