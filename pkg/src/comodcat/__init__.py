"""Exact computations with comonoids, comodules, and internal categories.

Two backends realize a regular symmetric monoidal category: exact
finite-dimensional linear algebra over Q or F_p, and finite sets.  On top
of them the package builds cotensor products as canonical equalizer
subobjects, internal categories and comonoidal internal categories,
prestacks with fully verified axioms, their smash products, coinvariants,
and the recovery isomorphism, together with two independent classical
oracles (the direct total-category construction for split prestacks and
the textbook smash multiplication for module algebras).
"""

from .coalgebra import (Comodule, Comonoid, bicomodule, check_comodule,
                        check_comonoid, check_comonoid_map,
                        check_coaction_is_comonoid_map,
                        check_coaction_over_cocomm, check_map_over,
                        check_map_over_bi, check_map_over_left,
                        coaction_from_comonoid_map, comonoid_as_bicomodule,
                        comonoid_map_from_coaction, corestrict,
                        corestrict_left, grouplike_comonoid, is_cocommutative,
                        left_comodule, right_comodule, tensor_comodules,
                        tensor_comonoid, unit_comonoid)
from .cotensor import (Cotensor, Iso, cotensor, cotensor_associator,
                       cotensor_comonoid, cotensor_of_maps,
                       induced_left_coaction, induced_right_coaction,
                       interchange_iso, subobject_iso, unitor_left,
                       unitor_right)
from .errors import (CheckFailed, EqualizingConditionFails, InducedMapMismatch,
                     InputError, NoFactorization, NotInvertible)
from .exact import GF, QQ, DenseMap, Field, compose as compose_matrix, \
    kernel_basis, kronecker, solve_factor, two_sided_inverse
from .internal import (Bimonoid, ComonoidalInternalCategory, InternalCategory,
                       InternalFunctor, Monoid, check_bimonoid,
                       check_internal_category, check_internal_functor,
                       check_monoid, discrete, identity_internal, one_object,
                       promote_comonoidal, tensor_internal)
from .monoidal import (Backend, Equalizer, FinSet, Mor, Obj, braiding,
                       compose, equalizer, factor_through, finvect, identity,
                       obj, regularity_witness, tensor_mor, tensor_obj,
                       unit_obj)
from .prestack import (ComoduleCategory, Prestack, bdc_coactions, build_phi2,
                       check_comodule_category, check_prestack,
                       lemma_BD_comod_suite, lemma_maps_over_p_suite)
from .reports import Failure, Report
from .smash import (CoinvariantResult, RecoveryIso, SmashResult, coinvariants,
                    recovery_iso, smash)

__version__ = "0.1.0"
