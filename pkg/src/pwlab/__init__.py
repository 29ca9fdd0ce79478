"""Exact computations on the cohomology of rank-2 twisted Higgs moduli spaces."""

from .braid import Partition, build_rep, closed_form_invariants, exterior_invariants_dim
from .exterior import ExteriorElement, lambda0_basis, lambda0_dim
from .jacobian import SingularType, blowup_poset_sum, compactified_jacobian_betti
from .lefschetz import BiGradedModule, hard_lefschetz_verify
from .linalg import Subspace
from .pw import pw_check
from .ring import RingElement, RingPresentation, build_ring
from .sl2 import e_var, variant_dims

__all__ = [
    "BiGradedModule", "ExteriorElement", "Partition", "RingElement", "RingPresentation",
    "SingularType", "Subspace", "blowup_poset_sum", "build_rep", "build_ring",
    "closed_form_invariants", "compactified_jacobian_betti", "e_var", "exterior_invariants_dim",
    "hard_lefschetz_verify", "lambda0_basis", "lambda0_dim", "pw_check", "variant_dims",
]

__version__ = "0.1.0"
