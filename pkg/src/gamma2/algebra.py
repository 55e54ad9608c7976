"""Identities in the group algebra of the two-generator group.

Everything here assumes a 2-dimensional representation with two generators
``X1 = A2(t1, s1)`` and ``X2 = A2(t2, s2)``. The scalar

    eps0 = 2 t1 t2 + s1 (1 - t2^2)/s2 + s2 (1 - t1^2)/s1

equals ``det X1 + det X2 - det(X1 + X2)`` and ``tr(X1 X2)``, and governs
``(X1 X2)^n + (X2 X1)^n = f_n(eps0) I`` and the powers of ``T = X1 + X2``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from gamma2 import lucas
from gamma2.errors import ConfigMismatch, GeneratorCountMismatch, IdentityViolation
from gamma2.exactmath import ExactComplex, SquareMatrix, det, power, to_exact, trace, format_scalar
from gamma2.rep import RepConfig, represent
from gamma2.words import FormTag, GroupWord, classify_n2, format_word, multiply


def _require_binary(cfg: RepConfig):
    if cfg.n_generators != 2 or cfg.dim != 2:
        raise ConfigMismatch(
            f"need N=2, dim=2; got N={cfg.n_generators}, dim={cfg.dim}")


# -- epsilon_0 -----------------------------------------------------------------

@dataclass(frozen=True)
class Epsilon0:
    value: ExactComplex

    @property
    def degenerate(self) -> bool:
        """``eps0 = +-2``: ``X1 X2`` is parabolic (or +-I)."""
        return self.value in (2, -2)

    def __str__(self):
        return format_scalar(self.value)


def epsilon0_parameter_formula(cfg: RepConfig) -> ExactComplex:
    _require_binary(cfg)
    (t1, s1), (t2, s2) = (t.entries for t in cfg.tuples)
    return 2 * t1 * t2 + s1 * (1 - t2 * t2) / s2 + s2 * (1 - t1 * t1) / s1


def epsilon0(cfg: RepConfig) -> Epsilon0:
    """eps0 from determinants, cross-checked against two other formulas."""
    _require_binary(cfg)
    x1, x2 = cfg.generators
    by_det = det(x1) + det(x2) - det(x1 + x2)
    by_params = epsilon0_parameter_formula(cfg)
    by_trace = trace(x1 @ x2)
    if not (by_det == by_params == by_trace):
        raise IdentityViolation(
            f"eps0 routes disagree: det {by_det}, params {by_params}, trace {by_trace}")
    return Epsilon0(by_det)


def _eps_value(eps) -> ExactComplex:
    return eps.value if isinstance(eps, Epsilon0) else to_exact(eps)


# -- (X1 X2)^n + (X2 X1)^n ---------------------------------------------------

def frak_x_direct(cfg: RepConfig, n: int) -> SquareMatrix:
    """``(X1 X2)^n + (X2 X1)^n`` by exact matrix powers."""
    _require_binary(cfg)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x1, x2 = cfg.generators
    return power(x1 @ x2, n) + power(x2 @ x1, n)


def frak_x_scalar(eps, n: int) -> ExactComplex:
    """``c_n`` with ``c_1 = eps``, ``c_2 = eps^2 - 2``, ``c_n = eps c_{n-1} - c_{n-2}``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    e = _eps_value(eps)
    prev, cur = e, e * e - 2
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, e * cur - prev
    return cur


# -- inverses ----------------------------------------------------------------------

def invert_even(cfg: RepConfig, k: int) -> SquareMatrix:
    """``((X1 X2)^k)^-1`` as ``f_k(eps0) I - (X1 X2)^k``."""
    _require_binary(cfg)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    x1, x2 = cfg.generators
    r = lucas.f_eval(k, epsilon0(cfg).value)
    return SquareMatrix.scalar(2, r) - power(x1 @ x2, k)


class RuleKind(enum.Enum):
    SELF_INVERSE = "SelfInverse"
    AFFINE = "AffineRule"


@dataclass(frozen=True)
class InverseRule:
    """``A^-1 = A`` or ``A^-1 = r I - A``."""

    kind: RuleKind
    r: ExactComplex | None = None

    def __str__(self):
        if self.kind is RuleKind.SELF_INVERSE:
            return self.kind.value
        return f"{self.kind.value}({format_scalar(self.r)})"


def invert_group_matrix(w: GroupWord, cfg: RepConfig) -> tuple[SquareMatrix, InverseRule]:
    """Inverse of ``represent(w)`` from the word's normal form alone."""
    if w.n_generators != cfg.n_generators:
        raise GeneratorCountMismatch(
            f"word has N={w.n_generators}, config has N={cfg.n_generators}")
    _require_binary(cfg)
    form = classify_n2(w)
    image = represent(w, cfg)
    if form.tag in (FormTag.ALT_POW_12, FormTag.ALT_POW_21):
        r = lucas.f_eval(form.k, epsilon0(cfg).value)
        return SquareMatrix.scalar(2, r) - image, InverseRule(RuleKind.AFFINE, r)
    return image, InverseRule(RuleKind.SELF_INVERSE)


# -- radial operator -----------------------------------------------------------------

def radial_operator(cfg: RepConfig) -> SquareMatrix:
    """``T = X1 + X2``."""
    _require_binary(cfg)
    x1, x2 = cfg.generators
    return x1 + x2


def radial_power_trace(eps, n: int) -> ExactComplex:
    """``tr(T^n)``: ``2 (eps0 + 2)^(n/2)`` for even ``n``, else 0."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2:
        return ExactComplex(0)
    return 2 * (_eps_value(eps) + 2) ** (n // 2)


# -- formal linear combinations ------------------------------------------------------

class AlgebraElement:
    """Finite linear combination of group words with exact coefficients.

    >>> x1 = AlgebraElement.word(GroupWord(2, [1]))
    >>> x2 = AlgebraElement.word(GroupWord(2, [2]))
    >>> print((x1 + x2) * (x1 + x2))
    2*e + 1*(x1 x2) + 1*(x2 x1)
    """

    __slots__ = ("n_generators", "terms")

    def __init__(self, n_generators: int, terms: Mapping[GroupWord, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[GroupWord, ExactComplex] = {}
        for w, c in items:
            if w.n_generators != n_generators:
                raise GeneratorCountMismatch(
                    f"term {w} has N={w.n_generators}, element has N={n_generators}")
            clean[w] = clean.get(w, ExactComplex(0)) + to_exact(c)
        object.__setattr__(self, "n_generators", n_generators)
        object.__setattr__(self, "terms", {w: c for w, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def word(cls, w: GroupWord, coeff=1) -> "AlgebraElement":
        return cls(w.n_generators, {w: coeff})

    @classmethod
    def zero(cls, n_generators: int) -> "AlgebraElement":
        return cls(n_generators)

    def _check(self, other: "AlgebraElement"):
        if self.n_generators != other.n_generators:
            raise GeneratorCountMismatch(
                f"elements over N={self.n_generators} and N={other.n_generators}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.n_generators,
                              list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = to_exact(c)
        return AlgebraElement(self.n_generators, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out = []
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.append((multiply(w1, w2), c1 * c2))
        return AlgebraElement(self.n_generators, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n_generators == other.n_generators and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_generators, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            name = format_word(w)
            parts.append(f"{format_scalar(self.terms[w])}*"
                         + (name if len(w) <= 1 else f"({name})"))
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElement({self.n_generators}, {str(self)!r})"


def represent_element(p: AlgebraElement, cfg: RepConfig) -> SquareMatrix:
    """Linear extension of the representation to the group algebra."""
    if p.n_generators != cfg.n_generators:
        raise GeneratorCountMismatch(
            f"element has N={p.n_generators}, config has N={cfg.n_generators}")
    out = SquareMatrix.zero(cfg.dim)
    for w, c in p.terms.items():
        out = out + represent(w, cfg).scale(c)
    return out
