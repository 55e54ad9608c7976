"""Involutory generator matrices and the representation of reduced words.

For a tuple ``(a1, ..., an)`` with ``a1`` not in ``{0, 1}`` and the rest
nonzero, :func:`build_an` returns the block matrix::

    [ I_{n-2}   Q ]
    [ 0         A ]

where ``A = [[a1, a2], [(1 - a1**2)/a2, -a1]]`` and ``Q`` has one row
``[ai, -a2*ai/(1 - a1)]`` per ``i = n, ..., 3`` (top to bottom). Both
``A`` and the full matrix square to the identity.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from gamma2.errors import (
    GeneratorCountMismatch,
    InvalidConfig,
    InvalidParameter,
    ParseError,
    SamplingExhausted,
    ScanTooLarge,
)
from gamma2.exactmath import ExactComplex, SquareMatrix, parse_scalar, to_exact, format_scalar
from gamma2.words import GroupWord, count_reduced_words, invert

MAX_SCAN_WORDS = 10**6
MAX_SAMPLING_REJECTIONS = 10**4

_ZERO = Fraction(0)


# -- matrix builders --------------------------------------------------------

def build_a2(a, b) -> SquareMatrix:
    """``[[a, b], [(1 - a^2)/b, -a]]``; requires ``a`` not in {0, 1}, ``b != 0``."""
    a, b = to_exact(a), to_exact(b)
    if not a or a == 1:
        raise InvalidParameter(f"a must not be 0 or 1, got {a}")
    if not b:
        raise InvalidParameter("b must be nonzero")
    return SquareMatrix([[a, b], [(1 - a * a) / b, -a]])


def build_q_block(a1, a2, rest: Sequence) -> tuple[tuple[ExactComplex, ExactComplex], ...]:
    """The ``(n-2) x 2`` upper-right block, rows ordered ``a_n`` down to ``a_3``."""
    a1, a2 = to_exact(a1), to_exact(a2)
    if a1 == 1:
        raise InvalidParameter("a1 must not be 1")
    if not a2:
        raise InvalidParameter("a2 must be nonzero")
    factor = -a2 / (1 - a1)
    return tuple((ai, factor * ai) for ai in (to_exact(x) for x in reversed(rest)))


def build_an(params) -> SquareMatrix:
    """Involutory ``n x n`` generator matrix for one parameter tuple."""
    if not isinstance(params, ParamTuple):
        params = ParamTuple(params)
    a = params.entries
    n = len(a)
    lower = build_a2(a[0], a[1])
    if n == 2:
        return lower
    q = build_q_block(a[0], a[1], a[2:])
    m = n - 2
    zero = ExactComplex(0)
    rows = []
    for i in range(m):
        rows.append([ExactComplex(int(i == j)) for j in range(m)] + list(q[i]))
    for i in range(2):
        rows.append([zero] * m + [lower[i, 0], lower[i, 1]])
    return SquareMatrix(rows)


# -- parameter tuples and configs ---------------------------------------------

def _tuple_problems(entries: Sequence[ExactComplex]) -> list[str]:
    problems = []
    if len(entries) < 2:
        problems.append(f"tuple needs at least 2 entries, got {len(entries)}")
        return problems
    if not entries[0]:
        problems.append("a1 = 0")
    elif entries[0] == 1:
        problems.append("a1 = 1")
    for l, x in enumerate(entries[1:], start=2):
        if not x:
            problems.append(f"a{l} = 0")
    return problems


@dataclass(frozen=True)
class ParamTuple:
    """``(a1, ..., an)`` with ``a1`` not in {0, 1} and every ``aj`` nonzero."""

    entries: tuple[ExactComplex, ...]

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(to_exact(x) for x in entries))
        problems = _tuple_problems(self.entries)
        if problems:
            raise InvalidParameter(f"bad parameter tuple {self}: {', '.join(problems)}")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ", ".join(format_scalar(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class Violation:
    """One reason a config is not valid. Indices are 1-based."""

    kind: str  # "parameter", "dimension", "distinctness", "involution", "empty"
    message: str
    tuple_index: int | None = None
    other_index: int | None = None
    coordinate: int | None = None

    @property
    def fatal(self) -> bool:
        """Distinctness collisions still give well-defined involutions."""
        return self.kind != "distinctness"

    def as_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}

    def __str__(self):
        return self.message


def validate_config(config) -> list[Violation]:
    """Every way ``config`` falls short of a strict config; never raises.

    ``config`` may be a :class:`RepConfig` or a raw list of tuples.
    """
    raw = config.tuples if isinstance(config, RepConfig) else config
    try:
        tuples = [tuple(to_exact(x) for x in t) for t in raw]
    except (TypeError, ParseError) as exc:
        return [Violation("parameter", f"unreadable scalar: {exc}")]
    out: list[Violation] = []
    if not tuples:
        return [Violation("empty", "config has no generator tuples")]
    dims = {len(t) for t in tuples}
    if len(dims) > 1:
        out.append(Violation("dimension", f"tuples have differing lengths {sorted(dims)}"))
    good = []
    for i, t in enumerate(tuples, start=1):
        problems = _tuple_problems(t)
        for p in problems:
            out.append(Violation("parameter", f"tuple {i}: {p}", tuple_index=i))
        if not problems:
            good.append((i, t))
    for i in range(len(tuples)):
        for j in range(i + 1, len(tuples)):
            for l, (u, v) in enumerate(zip(tuples[i], tuples[j]), start=1):
                if u == v:
                    out.append(Violation(
                        "distinctness",
                        f"tuples {i + 1} and {j + 1} share coordinate {l} "
                        f"(value {format_scalar(u)})",
                        tuple_index=i + 1, other_index=j + 1, coordinate=l))
    for i, t in good:
        m = build_an(t)
        if not (m @ m).is_identity():
            out.append(Violation("involution", f"generator {i} does not square to I",
                                 tuple_index=i))
    return out


@dataclass(frozen=True)
class RepConfig:
    """Generator tuples for a representation of the N-generator group.

    By default the tuples only need to be individually valid and of equal
    length. ``strict=True`` also demands strong mutual distinctness (no
    coordinate shared between two tuples).
    """

    tuples: tuple[ParamTuple, ...]
    strict: bool = False
    generators: tuple[SquareMatrix, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, tuples: Iterable, strict: bool = False):
        tuples = tuple(t if isinstance(t, ParamTuple) else tuple(t) for t in tuples)
        violations = validate_config(tuples)
        blocking = [v for v in violations if strict or v.fatal]
        if blocking:
            raise InvalidConfig(blocking)
        tuples = tuple(t if isinstance(t, ParamTuple) else ParamTuple(t) for t in tuples)
        object.__setattr__(self, "tuples", tuples)
        object.__setattr__(self, "strict", strict)
        object.__setattr__(self, "generators", tuple(build_an(t) for t in tuples))

    @property
    def dim(self) -> int:
        return self.tuples[0].dim

    @property
    def n_generators(self) -> int:
        return len(self.tuples)

    def generator_matrix(self, j: int) -> SquareMatrix:
        """Image of ``x_j`` (1-based)."""
        if not 1 <= j <= self.n_generators:
            raise IndexError(f"generator index {j} outside 1..{self.n_generators}")
        return self.generators[j - 1]

    @property
    def is_strongly_distinct(self) -> bool:
        return not any(v.kind == "distinctness" for v in validate_config(self))

    def to_text(self) -> str:
        return "\n".join(", ".join(format_scalar(x) for x in t) for t in self.tuples) + "\n"


def parse_config_text(text: str) -> list[list[ExactComplex]]:
    """One comma-separated tuple per line; ``#`` starts a comment."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append([parse_scalar(cell) for cell in line.split(",")])
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return out


def load_config(path, strict: bool = False) -> RepConfig:
    return RepConfig(parse_config_text(Path(path).read_text()), strict=strict)


# -- the representation ----------------------------------------------------------

def represent(w: GroupWord, cfg: RepConfig) -> SquareMatrix:
    """Matrix image of a reduced word: the product of its generator images."""
    if w.n_generators != cfg.n_generators:
        raise GeneratorCountMismatch(
            f"word has N={w.n_generators}, config has N={cfg.n_generators}")
    out = SquareMatrix.identity(cfg.dim)
    for j in w.letters:
        out = out @ cfg.generators[j - 1]
    return out


def represent_inverse(w: GroupWord, cfg: RepConfig) -> SquareMatrix:
    """Inverse of ``represent(w, cfg)``, via the reversed word."""
    return represent(invert(w), cfg)


def relation_scan(cfg: RepConfig, max_len: int) -> list[tuple[GroupWord, GroupWord]]:
    """Pairs of distinct reduced words (length <= max_len) with equal images.

    Each word whose image was already hit is paired with the shortlex-first
    word having that image. The result is sorted; empty means the
    representation is injective on this ball.
    """
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    total = count_reduced_words(cfg.n_generators, max_len)
    if total > MAX_SCAN_WORDS:
        raise ScanTooLarge(f"{total} words up to length {max_len} exceeds {MAX_SCAN_WORDS}")
    n = cfg.n_generators
    seen: dict[SquareMatrix, GroupWord] = {}
    collisions = []
    layer = [((), SquareMatrix.identity(cfg.dim))]
    seen[layer[0][1]] = GroupWord(n)
    for _ in range(max_len):
        nxt = []
        for letters, image in layer:
            for j in range(1, n + 1):
                if letters and letters[-1] == j:
                    continue
                w = letters + (j,)
                m = image @ cfg.generators[j - 1]
                first = seen.get(m)
                if first is None:
                    seen[m] = GroupWord(n, w)
                else:
                    collisions.append((first, GroupWord(n, w)))
                nxt.append((w, m))
        layer = nxt
    collisions.sort()
    return collisions


# -- sampling -----------------------------------------------------------------

def _random_rational(rng: random.Random, bound: int) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def _random_scalar(rng: random.Random, bound: int, gaussian: bool) -> ExactComplex:
    re = _random_rational(rng, bound)
    if gaussian and rng.random() < 0.5:
        return ExactComplex(re, _random_rational(rng, bound))
    return ExactComplex(re)


def sample_param_tuple(rng: random.Random, dim: int, magnitude_bound: int,
                       gaussian: bool = False) -> ParamTuple:
    """One valid tuple; numerators and denominators bounded by ``magnitude_bound``."""
    while True:
        entries = [_random_scalar(rng, magnitude_bound, gaussian) for _ in range(dim)]
        if entries[0] != 1:
            return ParamTuple(entries)


def sample_tuples(seed: int, n_generators: int, dim: int, magnitude_bound: int,
                  gaussian: bool = False) -> RepConfig:
    """Deterministic strict config built by rejection sampling."""
    if n_generators < 1 or dim < 2 or magnitude_bound < 2:
        raise ValueError("need n_generators >= 1, dim >= 2, magnitude_bound >= 2")
    rng = random.Random(seed)
    chosen: list[list[ExactComplex]] = []
    rejections = 0
    while len(chosen) < n_generators:
        entries = [_random_scalar(rng, magnitude_bound, gaussian) for _ in range(dim)]
        ok = entries[0] != 1 and all(
            all(u != v for u, v in zip(entries, other)) for other in chosen)
        if ok:
            chosen.append(entries)
            continue
        rejections += 1
        if rejections >= MAX_SAMPLING_REJECTIONS:
            raise SamplingExhausted(
                f"{rejections} rejected draws for N={n_generators}, dim={dim}, "
                f"bound={magnitude_bound}")
    return RepConfig(chosen, strict=True)
