"""The Lucas triangle and the polynomials whose coefficients it carries.

``g(n, k) = n/(n-k) * C(n-k, k)`` for ``0 <= k <= n//2`` and 0 otherwise.
Row sums are the Lucas numbers 1, 3, 4, 7, 11, ... and

    f_n(z) = sum_k (-1)^k g(n, k) z^(n - 2k)

satisfies ``f_1 = z``, ``f_2 = z^2 - 2``, ``f_{n+1} = z f_n - f_{n-1}``.
"""
from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from gamma2.exactmath import ExactComplex, to_exact

__all__ = [
    "g",
    "g_first_form",
    "lucas_triangle",
    "LucasCoeffTable",
    "FPoly",
    "f_coeffs",
    "Backend",
    "f_eval",
    "lucas_number",
    "format_triangle",
]


def g(n: int, k: int) -> int:
    """Lucas-triangle entry; exact integer, 0 outside ``0 <= k <= n//2``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 0 or k > n // 2:
        return 0
    num = n * comb(n - k, k)
    q, r = divmod(num, n - k)
    assert r == 0
    return q


def g_first_form(n: int, k: int) -> int:
    """``(n/k) * C(n-k-1, k-1)``; only defined for ``k >= 1``."""
    if k < 1:
        raise ValueError("the first form is undefined at k = 0")
    if k > n // 2:
        return 0
    q, r = divmod(n * comb(n - k - 1, k - 1), k)
    assert r == 0
    return q


@dataclass(frozen=True)
class LucasCoeffTable:
    """Rows ``n = 1..max_n`` of the Lucas triangle; ``rows[n-1][k] = g(n, k)``."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows)

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if not 1 <= n <= self.max_n:
            raise IndexError(f"row {n} not in table of {self.max_n} rows")
        row = self.rows[n - 1]
        return row[k] if 0 <= k < len(row) else 0

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]


def lucas_triangle(rows: int) -> LucasCoeffTable:
    """Build the triangle by ``g(n+1, k) = g(n, k) + g(n-1, k-1)``.

    Seeds are rows 1 and 2, ``[1]`` and ``[1, 2]``; the closed form
    :func:`g` is a separate route and the tests compare the two.
    """
    if rows < 1:
        raise ValueError(f"rows must be >= 1, got {rows}")
    table = [[1], [1, 2]][:rows]
    for n in range(2, rows):
        prev, prev2 = table[n - 1], table[n - 2]
        width = (n + 1) // 2 + 1
        row = []
        for k in range(width):
            left = prev[k] if k < len(prev) else 0
            right = prev2[k - 1] if 1 <= k <= len(prev2) else 0
            row.append(left + right)
        table.append(row)
    return LucasCoeffTable(tuple(tuple(r) for r in table))


@dataclass(frozen=True)
class FPoly:
    """``f_n`` as integer coefficients, ``coeffs[d]`` multiplying ``z**d``."""

    degree: int
    coeffs: tuple[int, ...]

    def __call__(self, z):
        # Horner
        z = to_exact(z)
        acc = ExactComplex(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def nonzero_terms(self) -> list[tuple[int, int]]:
        """``(degree, coefficient)`` pairs, highest degree first."""
        return [(d, c) for d, c in reversed(list(enumerate(self.coeffs))) if c]

    def __str__(self):
        parts = []
        for d, c in self.nonzero_terms():
            mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            mag = abs(c)
            body = (str(mag) if mag != 1 or d == 0 else "") + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


@lru_cache(maxsize=None)
def f_coeffs(n: int) -> FPoly:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = (-1) ** k * g(n, k)
    return FPoly(n, tuple(coeffs))


class Backend(enum.Enum):
    CLOSED_FORM = "closed"
    RECURRENCE = "recurrence"


def f_eval(n: int, z, backend: Backend | str = Backend.CLOSED_FORM) -> ExactComplex:
    """``f_n(z)`` exactly, by the closed-form coefficients or the recurrence."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    backend = Backend(backend)
    z = to_exact(z)
    if backend is Backend.CLOSED_FORM:
        return f_coeffs(n)(z)
    prev, cur = z, z * z - 2
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, z * cur - prev
    return cur


def lucas_number(n: int) -> int:
    """Sum of row ``n`` of the Lucas triangle."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(g(n, k) for k in range(n // 2 + 1))


def format_triangle(table: LucasCoeffTable, fmt: str = "text") -> str:
    """Render as left-justified ``text``, ``csv`` rows or a ``json`` array."""
    if fmt == "text":
        return "\n".join(" ".join(str(x) for x in row) for row in table.rows)
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(table.rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        return json.dumps([list(r) for r in table.rows])
    raise ValueError(f"unknown format {fmt!r}")
