"""Exact root-system combinatorics for the minimal nilpotent orbit.

Builds finite root systems from Cartan data with ``Fraction`` arithmetic,
computes the highest root, the Weyl vector, the dual Coxeter number and the
special roots, and checks that the minimal orbit dimension equals
``2 h_dual - 2`` along with the supporting identities.
"""

from minorbit.cartan import (
    BilinearForm,
    CartanError,
    CartanMatrix,
    LieType,
    LieTypeError,
    bilinear_form,
    cartan_matrix,
    inner,
    normalize,
    parse_lie_type,
    unnormalized_form,
)
from minorbit.orbit import (
    CHECK_NAMES,
    SpecialRootSet,
    VerificationReport,
    check_eq1_eq2,
    check_lemma3,
    dim_min_orbit_lemma1,
    dim_min_orbit_theorem,
    dual_coxeter,
    dual_coxeter_oracle,
    special_roots,
    verify,
)
from minorbit.roots import Root, RootSystem, generate_roots, oracle_roots, root_count, root_system
from minorbit.weyl import Reflection, classify_positives, reflect, reflection_length

__version__ = "0.1.0"
