"""Exact computation of modular data for non-semisimple Hopf algebras."""

__version__ = "0.1.0"

from .cyclo import Cyc, CyclotomicField, field
from .hopf import AlgElem, DualElem, HopfAlgebra, TensorElem, verify_hopf_axioms
from .ribbon import RibbonData, is_factorizable, verify_quasitriangular, verify_ribbon
from .center import center_basis, higman_ideal, normalize_pair
from .repnlib import CharacterTable, ModuleRep, cartan_matrix, decompose
from .modular import cw_modular_data, kerler_blocks, sl2z_equivalence, verlinde_check
from .weil import congruence_certify, even_odd_split, weil_rep

__all__ = [
    "Cyc", "CyclotomicField", "field",
    "AlgElem", "DualElem", "HopfAlgebra", "TensorElem", "verify_hopf_axioms",
    "RibbonData", "is_factorizable", "verify_quasitriangular", "verify_ribbon",
    "center_basis", "higman_ideal", "normalize_pair",
    "CharacterTable", "ModuleRep", "cartan_matrix", "decompose",
    "cw_modular_data", "kerler_blocks", "sl2z_equivalence", "verlinde_check",
    "congruence_certify", "even_odd_split", "weil_rep",
]
