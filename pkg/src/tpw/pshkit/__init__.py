"""Finite presheaves, Kan extensions, the quantifier chain, and the
semantic theorem checks."""

from .fincat import Arrow, FinCat, FunctorData, compose_functors, \
    identity_functor, truncate_base
from .presheaf import (FinPsh, NatTrans, elements, empty_psh, enumerate_nats,
                       flat, flat_on_nat, global_sections, identity_nat,
                       materialize, nats_equal, product_psh,
                       projection_functor, quotient, sample_presheaf,
                       terminal_psh, yoneda)
from .kan import (LanPsh, RanPsh, ResourceBudgetError, lan, lan_counit,
                  lan_on_nat, lan_unit, precompose, precompose_on_nat, ran,
                  ran_counit, ran_on_nat, ran_unit)
from .tensor import Subobject, TensorPsh, boundary_subobject, tensor_presheaf
from .chain import QuantifierChain, full_subcat, restrict_psh
from .checks import (check_adjunction_chain, check_boundary_iso, check_pole,
                     check_quantification, check_surd, sample_family)
from .strictglue import (PropSieve, glue, pushout_along_snd, strict_iso,
                         strictify, weld)

__all__ = [
    "Arrow", "FinCat", "FunctorData", "truncate_base", "identity_functor",
    "compose_functors",
    "FinPsh", "NatTrans", "yoneda", "elements", "terminal_psh", "empty_psh",
    "sample_presheaf", "enumerate_nats", "materialize", "nats_equal",
    "identity_nat", "product_psh", "projection_functor", "quotient",
    "global_sections", "flat", "flat_on_nat",
    "lan", "ran", "precompose", "LanPsh", "RanPsh", "ResourceBudgetError",
    "lan_unit", "lan_counit", "ran_unit", "ran_counit", "lan_on_nat",
    "ran_on_nat", "precompose_on_nat",
    "TensorPsh", "tensor_presheaf", "Subobject", "boundary_subobject",
    "QuantifierChain", "full_subcat", "restrict_psh",
    "check_adjunction_chain", "check_quantification", "check_pole",
    "check_boundary_iso", "check_surd", "sample_family",
    "PropSieve", "strictify", "strict_iso", "glue", "weld",
    "pushout_along_snd",
]
