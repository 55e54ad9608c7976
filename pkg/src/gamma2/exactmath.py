"""Exact Gaussian-rational scalars and dense square matrices over them.

Rationals are :class:`fractions.Fraction`, which already keeps numerator
and denominator reduced with a positive denominator. :class:`ExactComplex`
pairs two of them. :class:`SquareMatrix` stores real and imaginary parts as
separate flat tuples so the product kernel can skip the imaginary half
entirely for real matrices, which is the common case.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from gamma2 import kernels
from gamma2.errors import DimensionMismatch, DivisionByZero, ParseError

__all__ = [
    "ExactComplex",
    "SquareMatrix",
    "to_exact",
    "parse_scalar",
    "format_scalar",
    "identity",
    "zero_matrix",
    "matmul",
    "power",
    "trace",
    "det",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


class ExactComplex:
    """Gaussian rational ``re + im*i`` with exact field arithmetic.

    Instances are immutable and hash equal to the matching ``Fraction``
    when the imaginary part is zero, so real values mix freely with
    ``int`` and ``Fraction`` in dict keys and comparisons.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _rational(re))
        object.__setattr__(self, "im", _rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactComplex is immutable")

    def __reduce__(self):
        return (ExactComplex, (self.re, self.im))

    # -- coercion helpers -------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactComplex):
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return ExactComplex(other)
        return None

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return ExactComplex(self.re * o.re)
        return ExactComplex(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "ExactComplex":
        if not self:
            raise DivisionByZero("inverse of zero")
        if not self.im:
            return ExactComplex(1 / self.re)
        norm = self.re * self.re + self.im * self.im
        return ExactComplex(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero(f"division of {self} by zero")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ExactComplex(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ExactComplex({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def to_exact(x) -> ExactComplex:
    """Coerce ``int``, ``Fraction``, ``ExactComplex`` or scalar text."""
    if isinstance(x, ExactComplex):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return ExactComplex(_rational(x))


# -- textual format -------------------------------------------------------

_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _parse_rational(text: str, original: str) -> Fraction:
    if not _RAT_RE.match(text):
        raise ParseError(f"cannot parse scalar {original!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in scalar {original!r}")
    return Fraction(int(num), int(den) if den else 1)


def _parse_imag(coeff: str, original: str) -> Fraction:
    if coeff in ("", "+"):
        return _ONE
    if coeff == "-":
        return -_ONE
    return _parse_rational(coeff, original)


def parse_scalar(text: str) -> ExactComplex:
    """Parse ``p``, ``p/q``, ``r/si`` or ``p/q+r/si`` (whitespace ignored)."""
    s = "".join(text.split()).replace("\u2212", "-")
    if not s:
        raise ParseError("empty scalar")
    if not s.endswith("i"):
        return ExactComplex(_parse_rational(s, text))
    body = s[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split <= 0:
        return ExactComplex(0, _parse_imag(body, text))
    return ExactComplex(_parse_rational(body[:split], text),
                        _parse_imag(body[split:], text))


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Inverse of :func:`parse_scalar`; e.g. ``-3/2+1/4i``."""
    x = to_exact(x)
    if not x.im:
        return _fmt_rational(x.re)
    if x.im == 1:
        im = "i"
    elif x.im == -1:
        im = "-i"
    else:
        im = _fmt_rational(x.im) + "i"
    if not x.re:
        return im
    sign = "" if im.startswith("-") else "+"
    return f"{_fmt_rational(x.re)}{sign}{im}"


# -- matrices -------------------------------------------------------------

class SquareMatrix:
    """Immutable dense n x n matrix over Gaussian rationals.

    Build from nested rows of anything :func:`to_exact` accepts. ``@`` is
    the matrix product, ``*`` scales by a scalar, ``**`` is a power.
    """

    __slots__ = ("dim", "_re", "_im")

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0:
            raise DimensionMismatch("matrix must have at least one row")
        if any(len(r) != n for r in rows):
            raise DimensionMismatch(f"rows of a {n}x{n} matrix must have length {n}")
        entries = [to_exact(x) for r in rows for x in r]
        re = tuple(e.re for e in entries)
        im = tuple(e.im for e in entries)
        self._init(n, re, im if any(im) else None)

    def _init(self, dim, re, im):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_re", re)
        object.__setattr__(self, "_im", im)

    def __setattr__(self, name, value):
        raise AttributeError("SquareMatrix is immutable")

    def __reduce__(self):
        return (SquareMatrix, (self.to_rows(),))

    @classmethod
    def _from_parts(cls, dim, re, im) -> "SquareMatrix":
        m = cls.__new__(cls)
        m._init(dim, tuple(re), None if im is None or not any(im) else tuple(im))
        return m

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls.scalar(n, 1)

    @classmethod
    def zero(cls, n: int) -> "SquareMatrix":
        return cls._from_parts(n, (_ZERO,) * (n * n), None)

    @classmethod
    def scalar(cls, n: int, c) -> "SquareMatrix":
        """``c * I_n``."""
        if n < 1:
            raise DimensionMismatch(f"dimension must be positive, got {n}")
        c = to_exact(c)
        re = [_ZERO] * (n * n)
        im = [_ZERO] * (n * n)
        for i in range(n):
            re[i * n + i] = c.re
            im[i * n + i] = c.im
        return cls._from_parts(n, re, im)

    # -- access -----------------------------------------------------------
    def __getitem__(self, ij) -> ExactComplex:
        i, j = ij
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(ij)
        k = i * self.dim + j
        return ExactComplex(self._re[k], self._im[k] if self._im else _ZERO)

    def to_rows(self) -> tuple[tuple[ExactComplex, ...], ...]:
        n = self.dim
        return tuple(tuple(self[i, j] for j in range(n)) for i in range(n))

    def submatrix(self, rows: range, cols: range) -> tuple[tuple[ExactComplex, ...], ...]:
        """Rectangular block as nested tuples (blocks need not be square)."""
        return tuple(tuple(self[i, j] for j in cols) for i in rows)

    @property
    def is_real(self) -> bool:
        return self._im is None

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(x) for x in row] for row in self.to_rows()]

    def to_complex(self) -> list[list[complex]]:
        """Floating-point view, for display only."""
        return [[complex(x) for x in row] for row in self.to_rows()]

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "SquareMatrix"):
        if not isinstance(other, SquareMatrix):
            raise TypeError(f"expected SquareMatrix, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimensions differ: {self.dim} vs {other.dim}")

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        re, im = kernels.matmul(self.dim, self._re, self._im, other._re, other._im)
        return SquareMatrix._from_parts(self.dim, re, im)

    def _elementwise(self, other, op):
        self._check(other)
        re = tuple(op(a, b) for a, b in zip(self._re, other._re))
        if self._im is None and other._im is None:
            return SquareMatrix._from_parts(self.dim, re, None)
        zeros = (_ZERO,) * len(re)
        im = tuple(op(a, b) for a, b in zip(self._im or zeros, other._im or zeros))
        return SquareMatrix._from_parts(self.dim, re, im)

    def __add__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._elementwise(other, lambda a, b: a + b)

    def __sub__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._elementwise(other, lambda a, b: a - b)

    def __neg__(self):
        im = None if self._im is None else tuple(-x for x in self._im)
        return SquareMatrix._from_parts(self.dim, tuple(-x for x in self._re), im)

    def scale(self, c) -> "SquareMatrix":
        c = to_exact(c)
        if not c.im:
            im = None if self._im is None else tuple(c.re * x for x in self._im)
            return SquareMatrix._from_parts(self.dim, tuple(c.re * x for x in self._re), im)
        im_src = self._im or (_ZERO,) * len(self._re)
        re = tuple(c.re * a - c.im * b for a, b in zip(self._re, im_src))
        im = tuple(c.re * b + c.im * a for a, b in zip(self._re, im_src))
        return SquareMatrix._from_parts(self.dim, re, im)

    def __mul__(self, c):
        if isinstance(c, SquareMatrix):
            return NotImplemented
        try:
            return self.scale(c)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return power(self, k)

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.dim == other.dim and self._re == other._re and self._im == other._im

    def __hash__(self):
        return hash((self.dim, self._re, self._im))

    def is_identity(self) -> bool:
        return self == SquareMatrix.identity(self.dim)

    def trace(self) -> ExactComplex:
        return trace(self)

    def det(self) -> ExactComplex:
        return det(self)

    def __repr__(self):
        return f"SquareMatrix({self.to_strings()!r})"

    def __str__(self):
        cells = self.to_strings()
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def identity(n: int) -> SquareMatrix:
    return SquareMatrix.identity(n)


def zero_matrix(n: int) -> SquareMatrix:
    return SquareMatrix.zero(n)


def matmul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    return a @ b


def power(m: SquareMatrix, k: int) -> SquareMatrix:
    """``m**k`` for ``k >= 0`` by binary exponentiation."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    result = SquareMatrix.identity(m.dim)
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def trace(m: SquareMatrix) -> ExactComplex:
    n = m.dim
    re = sum((m._re[i * n + i] for i in range(n)), _ZERO)
    im = sum((m._im[i * n + i] for i in range(n)), _ZERO) if m._im else _ZERO
    return ExactComplex(re, im)


def det(m: SquareMatrix) -> ExactComplex:
    """Exact determinant. 2x2 directly, larger sizes by Bareiss elimination."""
    n = m.dim
    if n == 1:
        return m[0, 0]
    if n == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    a = [list(row) for row in m.to_rows()]
    sign = 1
    prev = ExactComplex(1)
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ExactComplex(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # division is exact: Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) / prev
            row_i[k] = ExactComplex(0)
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def matrix_from_strings(rows: Iterable[Iterable[str]]) -> SquareMatrix:
    return SquareMatrix([[parse_scalar(c) for c in row] for row in rows])
