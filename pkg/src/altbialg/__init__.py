"""altbialg: exact-arithmetic toolkit for finite-dimensional alternative
algebras, coalgebras and bialgebras given by structure constants."""

from .errors import (AltBialgError, BudgetExceeded, DslError, DslSyntaxError,
                     KindMismatch, PrerequisiteFailed, ShapeError,
                     SignatureMismatch, UnboundSlot, UnknownSpace)
from .report import CheckReport, ConditionResult, Witness, merge_reports, \
    residual_result
from .tensorkit import Binding, Space, Tensor, add, compose, evaluate, \
    nonzero_entries, scale, tensor_product
from .structures import (AlgebraData, BialgebraData, CoalgebraData,
                         ModuleData, associator, check_alternative,
                         check_bialgebra, check_bicomodule, check_bimodule,
                         check_coalternative, check_comodule_coalgebra,
                         check_module_algebra, regular_bicomodule,
                         regular_bimodule)
from .braided import (BraidedBialgebraData, HopfBimoduleData, RMatrix,
                      biproduct, braided_self_from_r, check_aybe,
                      check_braided_bialgebra, check_hopf_bimodule,
                      check_r_identities, delta_r, hopf_bimodule_from_r,
                      quasitriangular_bialgebra, split_biproduct)
from .liefunctor import (LieBialgebraData, YetterDrinfeldData,
                         braided_commutator_lie, check_lie_bialgebra,
                         check_yetter_drinfeld, commutator_bracket,
                         commutator_cobracket, commutator_lie,
                         yetter_drinfeld_from_hopf)
from .products import (InteractionData, bicrossed_coproduct,
                       bicrossed_product, cocycle_bicrossproduct,
                       cocycle_cross_product, cycle_cross_coproduct,
                       double_cross_biproduct, from_braided)
from .extending import (ExtendingDatum, ExtensionClass, MorphismPair,
                        check_extending_datum, check_morphism_pair,
                        classify_extensions, enumerate_extensions,
                        extract_datum, is_equivalence, to_interaction,
                        unified_product)

__version__ = "0.1.0"
