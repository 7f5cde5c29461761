"""Exact-arithmetic library for pfaffinants, symmetric Temperley-Lieb
diagram combinatorics, planar-network path semantics, TL immanants, and
Schur Q-functions, with machine checks for the identities relating them."""

from .diagrams import (Matching, SymTLDiagram, TLDiagram, enumerate_matchings, enumerate_sym_tl,
                       enumerate_sym_tl_even, enumerate_tl, matching, sym_diagram, tl_diagram)
from .pfaffian import GeneralMatrix, SkewArray, complementary_pfaffian, determinant, minor, pfaffian
from .pfaffinants import diagram_pfaffinant, tl_pfaffinant
from .poly import Poly, a, express_in_span, matrix_rank, x
from .schurq import schur_q
from .uncross import embed_nu_d, embed_nu_pi, f_coefficient, g_coefficient

__all__ = [
    "Matching", "SymTLDiagram", "TLDiagram", "enumerate_matchings", "enumerate_sym_tl",
    "enumerate_sym_tl_even", "enumerate_tl", "matching", "sym_diagram", "tl_diagram",
    "GeneralMatrix", "SkewArray", "complementary_pfaffian", "determinant", "minor", "pfaffian",
    "diagram_pfaffinant", "tl_pfaffinant", "Poly", "a", "express_in_span", "matrix_rank", "x",
    "schur_q", "embed_nu_d", "embed_nu_pi", "f_coefficient", "g_coefficient",
]
