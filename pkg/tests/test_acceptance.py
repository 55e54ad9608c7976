"""Acceptance criteria. Each test prints one PASS/FAIL line in the summary.

Every check is exact equality over Gaussian rationals; the only numeric
thresholds are the wall-clock budgets.

Run alone with ``pytest tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import product

import pytest

from gamma2 import lucas
from gamma2.algebra import (
    RuleKind,
    epsilon0,
    epsilon0_parameter_formula,
    frak_x_direct,
    invert_group_matrix,
    radial_operator,
    radial_power_trace,
)
from gamma2.exactmath import SquareMatrix, det, identity, power, trace
from gamma2.lucas import Backend
from gamma2.rep import RepConfig, build_an, relation_scan, represent, sample_param_tuple, sample_tuples
from gamma2.verify import random_word
from gamma2.words import FormTag, GroupWord, WordFormN2, classify_n2, multiply, normalize, reduced_words
from oracles import cancel_randomly, classical_lucas

RESULTS: list[str] = []

SEED = 20240611


@contextmanager
def criterion(number: int, title: str, budget: float | None = None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"FAIL  AC{number:<2} {title} ({elapsed:.2f}s): {exc}")
        raise
    limit = f" / {budget:g}s" if budget is not None else ""
    RESULTS.append(f"PASS  AC{number:<2} {title} ({elapsed:.2f}s{limit})")


def sampled_configs(count: int, offset: int):
    """Strict 2x2 configs; every other one has Gaussian-rational entries."""
    return [sample_tuples(SEED + offset + s, 2, 2, 9, gaussian=s % 2 == 1) for s in range(count)]


def test_ac01_involution():
    with criterion(1, "A_n(W)^2 = I_n, n = 2..12, 100 tuples each", 10.0):
        for n in range(2, 13):
            rng = random.Random(SEED + n)
            for case in range(100):
                m = build_an(sample_param_tuple(rng, n, 9, gaussian=case % 2 == 1))
                assert m @ m == identity(n), (n, case)


def test_ac02_anticommutator():
    with criterion(2, "X1X2 + X2X1 = eps0 I, three eps0 routes agree, 100 configs", 2.0):
        for cfg in sampled_configs(100, 1000):
            x1, x2 = cfg.generators
            by_det = det(x1) + det(x2) - det(x1 + x2)
            assert by_det == epsilon0_parameter_formula(cfg) == trace(x1 @ x2)
            assert epsilon0(cfg).value == by_det
            assert x1 @ x2 + x2 @ x1 == SquareMatrix.scalar(2, by_det)


def test_ac03_main_identity():
    with criterion(3, "(X1X2)^n + (X2X1)^n = f_n(eps0) I, n = 1..30, 20 configs, both backends", 10.0):
        for cfg in sampled_configs(20, 2000):
            eps = epsilon0(cfg).value
            for n in range(1, 31):
                direct = frak_x_direct(cfg, n)
                closed = lucas.f_eval(n, eps, Backend.CLOSED_FORM)
                rec = lucas.f_eval(n, eps, Backend.RECURRENCE)
                assert direct == SquareMatrix.scalar(2, closed), n
                assert direct == SquareMatrix.scalar(2, rec), n


def test_ac04_named_polynomials():
    with criterion(4, "f_1..f_4 coefficient lists"):
        # coefficients listed from z^0 upward
        assert lucas.f_coeffs(1).coeffs == (0, 1)
        assert lucas.f_coeffs(2).coeffs == (-2, 0, 1)
        assert lucas.f_coeffs(3).coeffs == (0, -3, 0, 1)
        assert lucas.f_coeffs(4).coeffs == (2, 0, -4, 0, 1)


def test_ac05_lucas_triangle():
    with criterion(5, "Lucas triangle rows 1-10 verbatim; recurrence for n <= 64"):
        expected = [[1], [1, 2], [1, 3], [1, 4, 2], [1, 5, 5], [1, 6, 9, 2], [1, 7, 14, 7],
                    [1, 8, 20, 16, 2], [1, 9, 27, 30, 9], [1, 10, 35, 50, 25, 2]]
        assert [list(r) for r in lucas.lucas_triangle(10).rows] == expected
        table = lucas.lucas_triangle(65)
        for n in range(1, 66):
            assert table.row(n) == tuple(lucas.g(n, k) for k in range(n // 2 + 1))
        for n in range(2, 65):
            for k in range(1, (n + 1) // 2 + 1):
                assert lucas.g(n + 1, k) == lucas.g(n, k) + lucas.g(n - 1, k - 1)


def test_ac06_trace_formula():
    with criterion(6, "tr(T^n) closed form = brute force, n = 1..30, 20 configs", 5.0):
        for cfg in sampled_configs(20, 3000):
            eps = epsilon0(cfg)
            t = radial_operator(cfg)
            tp = identity(2)
            for n in range(1, 31):
                tp = tp @ t
                assert radial_power_trace(eps, n) == trace(tp) == trace(power(t, n))
                if n % 2:
                    assert trace(tp) == 0


def test_ac07_inversion():
    with criterion(7, "inverse rule on every reduced word of length <= 12", 30.0):
        configs = [RepConfig([(2, 1), (-1, 1)]), RepConfig([(2, 1), (3, 1)])]
        configs += sampled_configs(3, 4000)
        words = list(reduced_words(2, 12))
        assert len(words) == 25
        for cfg in configs:
            for w in words:
                m, rule = invert_group_matrix(w, cfg)
                assert m @ represent(w, cfg) == identity(2), w
                tag = classify_n2(w).tag
                if tag in (FormTag.ALT_POW_12, FormTag.ALT_POW_21):
                    assert rule.kind is RuleKind.AFFINE
                else:
                    assert rule.kind is RuleKind.SELF_INVERSE


def test_ac08_normal_forms():
    with criterion(8, "raw words up to length 10 land in exactly one normal form"):
        rng = random.Random(SEED)
        ks = range(0, 7)
        candidates = [WordFormN2(t, k) for t in FormTag for k in ks
                      if (t in (FormTag.IDENTITY, FormTag.X1, FormTag.X2)) == (k == 0)]
        for length in range(11):
            for raw in product((1, 2), repeat=length):
                w = normalize([(j, 1) for j in raw], 2)
                hits = [c for c in candidates if c.word() == w]
                assert len(hits) == 1 and hits[0] == classify_n2(w)
                assert normalize([(j, 1) for j in w.letters], 2) == w
                if length in (8, 10) and rng.random() < 0.1:
                    for _ in range(3):
                        assert cancel_randomly(raw, rng) == w.letters


def test_ac09_homomorphism():
    with criterion(9, "rep(w1 w2) = rep(w1) rep(w2), 200 pairs each for n = 2, 3, 5, 8", 10.0):
        for n in (2, 3, 5, 8):
            cfg = sample_tuples(SEED + n, 2, n, 9, gaussian=n % 2 == 1)
            rng = random.Random(SEED * n)
            for _ in range(200):
                w1, w2 = random_word(rng, 2, 12), random_word(rng, 2, 12)
                lhs = represent(multiply(w1, w2), cfg)
                assert lhs == represent(w1, cfg) @ represent(w2, cfg), (n, w1, w2)


def test_ac10_faithfulness_caveat():
    with criterion(10, "scan: none for eps0 = -7; (x1x2)^6 = e for eps0 = 1", 60.0):
        cfg_a = RepConfig([(2, 1), (-1, 1)])
        cfg_b = RepConfig([(2, 1), (3, 1)])
        assert epsilon0(cfg_a).value == -7 and epsilon0(cfg_b).value == 1
        assert relation_scan(cfg_a, 12) == []
        found = relation_scan(cfg_b, 12)
        assert (GroupWord(2), GroupWord(2, (1, 2) * 6)) in found


def test_ac11_closed_form_agreement():
    with criterion(11, "both closed forms agree for k >= 1, n <= 64; k = 0 gives 1"):
        for n in range(1, 65):
            assert lucas.g(n, 0) == 1
            assert lucas.f_coeffs(n).coeffs[n] == 1
            for k in range(1, n // 2 + 1):
                first = Fraction(n, k) * Fraction(lucas.comb(n - k - 1, k - 1))
                second = Fraction(n, n - k) * Fraction(lucas.comb(n - k, k))
                assert first == second == lucas.g(n, k) == lucas.g_first_form(n, k)


def test_ac12_lucas_numbers():
    with criterion(12, "row sums 1..10 are 1, 3, 4, 7, 11, 18, 29, 47, 76, 123"):
        sums = [lucas.lucas_number(n) for n in range(1, 11)]
        assert sums == [1, 3, 4, 7, 11, 18, 29, 47, 76, 123]
        assert sums == [classical_lucas(n) for n in range(1, 11)]
        assert sums == lucas.lucas_triangle(10).row_sums()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
