"""crossmod: finite crossed modules, butterflies, and non-abelian H^1.

The toolkit validates crossed modules and butterfly diagrams over finite
groups, enumerates first non-abelian cohomology over classifying nerves,
lifts cocycles along butterflies, classifies extensions of a finite group
by a crossed module, and realizes the braided product on H^1 two
independent ways (explicit formula vs. butterfly lift).
"""

from .errors import CheckError, DomainMismatch, InternalDefect, SizeGuardExceeded
from .fgroup import (
    AutGroup,
    FiniteGroup,
    HomAnalysis,
    Homomorphism,
    RightAction,
    automorphism_group,
    cyclic,
    direct_product,
    find_isomorphism,
    hom_analyze,
    klein_four,
    make_hom,
    quotient_group,
    semidirect_product,
    subgroup_group,
    symmetric,
    trivial_group,
    validate_group,
)
from .xmod import (
    CrossedModule,
    HomotopyInvariants,
    StrictMorphism,
    discrete_xmod,
    homotopy_invariants,
    inclusion_xmod,
    inner_xmod,
    is_quasi_iso,
    product_xmod,
    shifted_xmod,
    standard_xmod,
    strict_validate,
    xmod_validate,
)
from .butterfly import (
    Butterfly,
    ButterflyAnalysis,
    ButterflyIso,
    analyze,
    butterfly_iso_search,
    butterfly_validate,
    compose,
    diagonal_xmod,
    from_strict,
    identity_butterfly,
    one_winged,
)
from .cocycle import (
    Cocycle1,
    Descent0,
    Homotopy1,
    are_equivalent,
    cocycle_validate,
    descent0_validate,
    enumerate_h1,
    homotopy_check,
    lift_along_butterfly,
    transport_cocycle,
    trivial_cocycle,
    wbar_check,
)
from .braiding import (
    BraidedCrossedModule,
    BraidingAnalysis,
    braiding_analyze,
    braiding_butterfly,
    braiding_from_fn,
    descent0_product,
    h0_product,
    h1_product,
    trivial_braiding,
)
from .extension import (
    DedeckerExtension,
    baer_sum,
    classify_ext,
    cocycle_to_ext,
    ext_equivalent,
    ext_to_cocycle,
    ext_validate,
    induced_butterfly,
    trivial_extension,
)

__version__ = "0.1.0"
