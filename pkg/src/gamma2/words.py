"""Reduced words in the free product of N copies of Z/2.

A :class:`GroupWord` is a tuple of 1-based generator indices with no two
equal neighbours. Every generator is its own inverse, so exponents only
matter mod 2 and reduction is a single stack pass.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from gamma2 import kernels
from gamma2.errors import (
    BadGeneratorIndex,
    GeneratorCountMismatch,
    NotBinaryGroup,
    ParseError,
)

MAX_GENERATORS = 64


class GroupWord:
    """Element of the group with ``n_generators`` order-2 generators.

    The letters are reduced on construction, so two words are equal iff
    they are the same group element.

    >>> GroupWord(2, [1, 2, 2, 1])
    GroupWord(2, 'e')
    >>> GroupWord(2, [1, 2]) * GroupWord(2, [2])
    GroupWord(2, 'x1')
    """

    __slots__ = ("n_generators", "letters")

    def __init__(self, n_generators: int, letters: Iterable[int] = ()):
        if not 1 <= n_generators <= MAX_GENERATORS:
            raise BadGeneratorIndex(
                f"generator count must lie in 1..{MAX_GENERATORS}, got {n_generators}")
        letters = tuple(letters)
        for x in letters:
            if not isinstance(x, int) or not 1 <= x <= n_generators:
                raise BadGeneratorIndex(
                    f"generator index {x!r} outside 1..{n_generators}")
        object.__setattr__(self, "n_generators", n_generators)
        object.__setattr__(self, "letters", kernels.reduce_letters(letters))

    def __setattr__(self, name, value):
        raise AttributeError("GroupWord is immutable")

    def __reduce__(self):
        return (GroupWord, (self.n_generators, self.letters))

    @classmethod
    def identity(cls, n_generators: int) -> "GroupWord":
        return cls(n_generators)

    @classmethod
    def generator(cls, n_generators: int, j: int) -> "GroupWord":
        return cls(n_generators, (j,))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if not isinstance(other, GroupWord):
            return NotImplemented
        return multiply(self, other)

    def __pow__(self, k: int) -> "GroupWord":
        if k < 0:
            return invert(self) ** (-k)
        out = GroupWord(self.n_generators)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.n_generators == other.n_generators and self.letters == other.letters

    def __lt__(self, other: "GroupWord"):
        # shortlex
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __hash__(self):
        return hash((self.n_generators, self.letters))

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"GroupWord({self.n_generators}, {format_word(self)!r})"


def normalize(raw: Iterable[tuple[int, int]], n_generators: int) -> GroupWord:
    """Reduce ``[(generator, exponent), ...]`` to a :class:`GroupWord`.

    Exponents count mod 2; negative exponents behave like positive ones
    since each generator is self-inverse.
    """
    letters = []
    for j, k in raw:
        if not isinstance(j, int) or not 1 <= j <= n_generators:
            raise BadGeneratorIndex(f"generator index {j!r} outside 1..{n_generators}")
        if k % 2:
            letters.append(j)
    return GroupWord(n_generators, letters)


def _check_same_group(w1: GroupWord, w2: GroupWord):
    if w1.n_generators != w2.n_generators:
        raise GeneratorCountMismatch(
            f"words live in different groups: N={w1.n_generators} vs N={w2.n_generators}")


def multiply(w1: GroupWord, w2: GroupWord) -> GroupWord:
    _check_same_group(w1, w2)
    a, b = w1.letters, w2.letters
    # both halves are already reduced, so cancellation only happens at the seam
    i = 0
    while i < len(a) and i < len(b) and a[-1 - i] == b[i]:
        i += 1
    word = GroupWord.__new__(GroupWord)
    object.__setattr__(word, "n_generators", w1.n_generators)
    object.__setattr__(word, "letters", a[:len(a) - i] + b[i:])
    return word


def invert(w: GroupWord) -> GroupWord:
    word = GroupWord.__new__(GroupWord)
    object.__setattr__(word, "n_generators", w.n_generators)
    object.__setattr__(word, "letters", w.letters[::-1])
    return word


# -- normal forms for N = 2 -------------------------------------------------

class FormTag(enum.Enum):
    IDENTITY = "Identity"
    X1 = "X1"
    X2 = "X2"
    ALT_POW_12 = "AltPow12"        # (x1 x2)^k
    ALT_POW_12_X1 = "AltPow12X1"   # (x1 x2)^k x1
    ALT_POW_21 = "AltPow21"        # (x2 x1)^k
    ALT_POW_21_X2 = "AltPow21X2"   # (x2 x1)^k x2


@dataclass(frozen=True)
class WordFormN2:
    tag: FormTag
    k: int = 0

    @property
    def is_odd(self) -> bool:
        return self.tag in (FormTag.X1, FormTag.X2,
                            FormTag.ALT_POW_12_X1, FormTag.ALT_POW_21_X2)

    def word(self) -> GroupWord:
        """The reduced word this form denotes."""
        t, k = self.tag, self.k
        if t is FormTag.IDENTITY:
            letters = ()
        elif t is FormTag.X1:
            letters = (1,)
        elif t is FormTag.X2:
            letters = (2,)
        elif t is FormTag.ALT_POW_12:
            letters = (1, 2) * k
        elif t is FormTag.ALT_POW_12_X1:
            letters = (1, 2) * k + (1,)
        elif t is FormTag.ALT_POW_21:
            letters = (2, 1) * k
        else:
            letters = (2, 1) * k + (2,)
        return GroupWord(2, letters)

    def __str__(self):
        if self.tag in (FormTag.IDENTITY, FormTag.X1, FormTag.X2):
            return self.tag.value
        return f"{self.tag.value}({self.k})"


def classify_n2(w: GroupWord) -> WordFormN2:
    """Which of the seven normal forms of the two-generator group ``w`` is."""
    if w.n_generators != 2:
        raise NotBinaryGroup(f"classification needs N=2, got N={w.n_generators}")
    n = len(w.letters)
    if n == 0:
        return WordFormN2(FormTag.IDENTITY)
    if n == 1:
        return WordFormN2(FormTag.X1 if w.letters[0] == 1 else FormTag.X2)
    first = w.letters[0]
    k = n // 2
    if n % 2 == 0:
        return WordFormN2(FormTag.ALT_POW_12 if first == 1 else FormTag.ALT_POW_21, k)
    return WordFormN2(FormTag.ALT_POW_12_X1 if first == 1 else FormTag.ALT_POW_21_X2, k)


# -- enumeration ------------------------------------------------------------

def count_reduced_words(n_generators: int, max_len: int) -> int:
    """Number of reduced words of length ``<= max_len``."""
    total, layer = 1, n_generators
    for _ in range(max_len):
        total += layer
        layer *= n_generators - 1
        if layer == 0:
            break
    return total


def reduced_words(n_generators: int, max_len: int) -> Iterator[GroupWord]:
    """All reduced words up to ``max_len`` letters, in shortlex order."""
    layer = [()]
    yield GroupWord(n_generators)
    for _ in range(max_len):
        layer = [w + (j,) for w in layer for j in range(1, n_generators + 1)
                 if not w or w[-1] != j]
        if not layer:
            return
        for letters in layer:
            yield GroupWord(n_generators, letters)


def raw_words(n_generators: int, length: int) -> Iterator[tuple[int, ...]]:
    """Every unreduced letter sequence of exactly ``length`` letters."""
    return product(range(1, n_generators + 1), repeat=length)


# -- text syntax ------------------------------------------------------------

_TOKEN_RE = re.compile(r"^(?:x(?P<x>\d+)|(?P<bare>\d+))(?:\^(?P<exp>[+-]?\d+))?$")


def parse_raw(text: str) -> list[tuple[int, int]]:
    """Parse ``x1 x2^3 x1^-1`` (or bare ``1 2^3``) into generator/exponent pairs.

    ``e`` stands for the identity and contributes nothing.
    """
    out = []
    for token in text.replace("*", " ").split():
        if token == "e":
            continue
        m = _TOKEN_RE.match(token)
        if m is None:
            raise ParseError(f"bad word token {token!r}")
        j = int(m.group("x") or m.group("bare"))
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        out.append((j, exp))
    return out


def parse_word(text: str, n_generators: int | None = None) -> GroupWord:
    """Parse word syntax; ``n_generators`` defaults to the largest index seen."""
    raw = parse_raw(text)
    if n_generators is None:
        n_generators = max((j for j, _ in raw), default=1)
    return normalize(raw, n_generators)


def format_word(w: GroupWord) -> str:
    if not w.letters:
        return "e"
    return " ".join(f"x{j}" for j in w.letters)
