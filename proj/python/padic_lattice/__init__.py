"""Exact p-adic lattices over Q_p and F_p((T)).

Scalars are passed as strings ("5/4", "(1+T)/(T^2)"); norm values come back
as NormValue objects that compare exactly.
"""

from ._core import (
    Field,
    FieldKind,
    Lattice,
    LatticeFile,
    MathError,
    Norm,
    NormValue,
    ParseError,
    cvp,
    cvp_bruteforce,
    cyclotomic_example,
    determinant,
    dual,
    equiv_constants,
    is_orthogonal,
    load_lattice_file,
    lvp,
    orthogonalize,
    parse_lattice_file,
    same_lattice,
    successive_maxima,
    verify,
)

__all__ = [
    "Field",
    "FieldKind",
    "Lattice",
    "LatticeFile",
    "MathError",
    "Norm",
    "NormValue",
    "ParseError",
    "cvp",
    "cvp_bruteforce",
    "cyclotomic_example",
    "determinant",
    "dual",
    "equiv_constants",
    "is_orthogonal",
    "load_lattice_file",
    "lvp",
    "orthogonalize",
    "parse_lattice_file",
    "same_lattice",
    "successive_maxima",
    "verify",
]
