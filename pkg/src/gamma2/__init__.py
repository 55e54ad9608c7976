"""Exact computations with the free product of order-2 cyclic groups.

Submodules: ``exactmath`` (Gaussian-rational scalars and matrices),
``words`` (reduced words), ``rep`` (involutory matrix representations),
``algebra`` (group-algebra identities), ``lucas`` (Lucas triangle and
the polynomials f_n) and ``cli``.
"""
from gamma2.errors import Gamma2Error
from gamma2.exactmath import ExactComplex, SquareMatrix, parse_scalar, to_exact
from gamma2.kernels import BACKEND
from gamma2.words import GroupWord, parse_word
from gamma2.rep import RepConfig, build_a2, build_an, represent
from gamma2.algebra import AlgebraElement, epsilon0
from gamma2.lucas import f_eval, g, lucas_triangle

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AlgebraElement",
    "ExactComplex",
    "Gamma2Error",
    "GroupWord",
    "RepConfig",
    "SquareMatrix",
    "build_a2",
    "build_an",
    "epsilon0",
    "f_eval",
    "g",
    "lucas_triangle",
    "parse_scalar",
    "parse_word",
    "represent",
    "to_exact",
]
