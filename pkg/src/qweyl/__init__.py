"""Exact kernel for multiparameter quantized Weyl algebras at roots of unity."""
from .algebra import AlgebraElement, WeylAlgebra
from .center import CentralPoint, central_character, is_azumaya_point
from .cyclotomic import CycloNum, embed, make_root
from .modules import ModuleSpec, Representation, construct_module, verify_module
from .parameters import AlgebraKind, ParameterError, ParameterSet, preset, validate
from .pidegree import pi_degree, weyl_exponent_matrix

__all__ = [
    "AlgebraElement",
    "AlgebraKind",
    "CentralPoint",
    "CycloNum",
    "ModuleSpec",
    "ParameterError",
    "ParameterSet",
    "Representation",
    "WeylAlgebra",
    "central_character",
    "construct_module",
    "embed",
    "is_azumaya_point",
    "make_root",
    "pi_degree",
    "preset",
    "validate",
    "verify_module",
    "weyl_exponent_matrix",
]
