"""Seeded property sweeps behind ``gamma2 verify``.

Each suite returns ``(cases_run, failures)``. A failure is a plain dict
that carries everything needed to replay it: the config as scalar
strings, the word or index involved, and the expected and actual values.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from gamma2 import lucas
from gamma2.algebra import (
    RuleKind,
    epsilon0,
    frak_x_direct,
    frak_x_scalar,
    invert_group_matrix,
    radial_operator,
    radial_power_trace,
)
from gamma2.exactmath import SquareMatrix, format_scalar, trace
from gamma2.rep import RepConfig, build_an, relation_scan, represent, sample_param_tuple, sample_tuples
from gamma2.words import GroupWord, classify_n2, format_word, invert, multiply, reduced_words

SUITES = ("involution", "homomorphism", "frakx", "trace", "inversion", "scan")

DEFAULT_BOUND = 9


def case_seed(seed: int, case: int) -> int:
    """Independent per-case seed so cases can run in any order."""
    return seed * 1_000_003 + case


def config_strings(cfg: RepConfig) -> list[list[str]]:
    return [[format_scalar(x) for x in t] for t in cfg.tuples]


def random_word(rng: random.Random, n_generators: int, max_len: int) -> GroupWord:
    length = rng.randint(0, max_len)
    letters: list[int] = []
    while len(letters) < length:
        j = rng.randint(1, n_generators)
        if n_generators == 1 and letters:
            break
        if not letters or letters[-1] != j:
            letters.append(j)
    return GroupWord(n_generators, letters)


def _cfg_for(cfg: RepConfig | None, seed: int, case: int, n_generators: int, dim: int,
             bound: int) -> RepConfig:
    if cfg is not None:
        return cfg
    return sample_tuples(case_seed(seed, case), n_generators, dim, bound)


# -- individual cases -------------------------------------------------------------

def _case_involution(seed, case, dim, bound, **_):
    rng = random.Random(case_seed(seed, case))
    w = sample_param_tuple(rng, dim, bound)
    m = build_an(w)
    sq = m @ m
    if sq.is_identity():
        return []
    return [{"case": case, "config": [[format_scalar(x) for x in w]],
             "check": "A_n(W)^2 = I", "expected": SquareMatrix.identity(dim).to_strings(),
             "actual": sq.to_strings()}]


def _case_homomorphism(seed, case, dim, bound, max_len, n_generators, cfg=None, **_):
    cfg = _cfg_for(cfg, seed, case, n_generators, dim, bound)
    rng = random.Random(case_seed(seed, case) ^ 0x5EED)
    w1 = random_word(rng, cfg.n_generators, max_len)
    w2 = random_word(rng, cfg.n_generators, max_len)
    out = []
    lhs = represent(multiply(w1, w2), cfg)
    rhs = represent(w1, cfg) @ represent(w2, cfg)
    if lhs != rhs:
        out.append({"case": case, "config": config_strings(cfg),
                    "check": "rep(w1 w2) = rep(w1) rep(w2)",
                    "word": [format_word(w1), format_word(w2)],
                    "expected": rhs.to_strings(), "actual": lhs.to_strings()})
    prod = represent(invert(w1), cfg) @ represent(w1, cfg)
    if not prod.is_identity():
        out.append({"case": case, "config": config_strings(cfg),
                    "check": "rep(w^-1) rep(w) = I", "word": format_word(w1),
                    "expected": SquareMatrix.identity(cfg.dim).to_strings(),
                    "actual": prod.to_strings()})
    return out


def _case_frakx(seed, case, n, bound, cfg=None, **_):
    cfg = _cfg_for(cfg, seed, case, 2, 2, bound)
    eps = epsilon0(cfg)
    out = []
    for m in range(1, n + 1):
        direct = frak_x_direct(cfg, m)
        values = {
            "closed": lucas.f_eval(m, eps.value, lucas.Backend.CLOSED_FORM),
            "recurrence": lucas.f_eval(m, eps.value, lucas.Backend.RECURRENCE),
            "frak_x_scalar": frak_x_scalar(eps, m),
        }
        for name, v in values.items():
            if direct != SquareMatrix.scalar(2, v):
                out.append({"case": case, "config": config_strings(cfg), "index": m,
                            "check": f"(X1X2)^n + (X2X1)^n = f_n(eps0) I [{name}]",
                            "expected": SquareMatrix.scalar(2, v).to_strings(),
                            "actual": direct.to_strings()})
    return out


def _case_trace(seed, case, n, bound, cfg=None, **_):
    cfg = _cfg_for(cfg, seed, case, 2, 2, bound)
    eps = epsilon0(cfg)
    t = radial_operator(cfg)
    out = []
    tp = SquareMatrix.identity(2)
    for m in range(1, n + 1):
        tp = tp @ t
        brute = trace(tp)
        closed = radial_power_trace(eps, m)
        if brute != closed:
            out.append({"case": case, "config": config_strings(cfg), "index": m,
                        "check": "tr(T^n) closed form", "expected": format_scalar(closed),
                        "actual": format_scalar(brute)})
    return out


def _case_inversion(seed, case, max_len, bound, cfg=None, **_):
    cfg = _cfg_for(cfg, seed, case, 2, 2, bound)
    out = []
    for w in reduced_words(2, max_len):
        inv, rule = invert_group_matrix(w, cfg)
        prod = inv @ represent(w, cfg)
        form = classify_n2(w)
        expected_kind = RuleKind.SELF_INVERSE if (form.is_odd or w.is_identity) else RuleKind.AFFINE
        if not prod.is_identity() or rule.kind is not expected_kind:
            out.append({"case": case, "config": config_strings(cfg), "word": format_word(w),
                        "check": "inverse rule", "expected": expected_kind.value,
                        "actual": str(rule), "product": prod.to_strings()})
    return out


def _case_scan(seed, case, max_len, bound, dim, n_generators, cfg=None, **_):
    cfg = _cfg_for(cfg, seed, case, n_generators, dim, bound)
    return [{"case": case, "config": config_strings(cfg), "check": "injective on ball",
             "word": [format_word(a), format_word(b)],
             "expected": "distinct images", "actual": "equal images"}
            for a, b in relation_scan(cfg, max_len)]


_CASES: dict[str, Callable] = {
    "involution": _case_involution,
    "homomorphism": _case_homomorphism,
    "frakx": _case_frakx,
    "trace": _case_trace,
    "inversion": _case_inversion,
    "scan": _case_scan,
}


def run_suite(suite: str, *, cases: int = 10, seed: int = 0, dim: int = 2, n: int = 10,
              max_len: int = 8, n_generators: int = 2, bound: int = DEFAULT_BOUND,
              cfg: RepConfig | None = None, workers: int = 1) -> tuple[int, list[dict]]:
    """Run ``cases`` independent cases of a suite; failures come back in case order.

    With an explicit ``cfg`` every case uses it, so a single case is run.
    """
    if suite not in _CASES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    fn = _CASES[suite]
    if cfg is not None:
        cases = 1
    kwargs = dict(seed=seed, dim=dim, n=n, max_len=max_len, n_generators=n_generators,
                  bound=bound, cfg=cfg)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: fn(case=c, **kwargs), range(cases)))
    else:
        results = [fn(case=c, **kwargs) for c in range(cases)]
    return cases, [f for r in results for f in r]
