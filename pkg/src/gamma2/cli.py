"""``gamma2`` command line.

Exit codes: 0 ok, 2 usage or parse error, 3 invalid config, 4 a checked
identity failed (or a relation was found by ``verify scan``).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any

from gamma2 import lucas
from gamma2.algebra import epsilon0, radial_operator, radial_power_trace
from gamma2.errors import ConfigMismatch, Gamma2Error, InvalidConfig, ParseError, ScanTooLarge
from gamma2.exactmath import format_scalar, power, trace
from gamma2.rep import RepConfig, load_config, represent, validate_config
from gamma2.verify import SUITES, config_strings, run_suite
from gamma2.words import classify_n2, format_word, invert, parse_raw, normalize

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_VIOLATION = 4

MAX_DIM = 12
MAX_WORD_LEN = 12
MAX_CASES = 1000
MAX_N = 200
MAX_ROWS = 64


@dataclass
class CliReport:
    command: str
    status: str = "ok"  # ok | violation | error
    payload: dict[str, Any] = field(default_factory=dict)
    cases_run: int = 0
    failures: list[dict] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def as_dict(self) -> dict:
        return {"command": self.command, "status": self.status, "payload": self.payload,
                "cases_run": self.cases_run, "failures": self.failures}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _error(command: str, message: str, code: int, **payload) -> CliReport:
    return CliReport(command, "error", {"error": message, **payload},
                     failures=[{"error": message}], exit_code=code)


def _check_range(name: str, value: int, lo: int, hi: int):
    if not lo <= value <= hi:
        raise UsageError(f"--{name} must lie in {lo}..{hi}, got {value}")


def _load(path: str, strict: bool) -> tuple[RepConfig, list[dict]]:
    cfg = load_config(path, strict=strict)
    warnings = [v.as_dict() for v in validate_config(cfg) if not v.fatal]
    return cfg, warnings


# -- commands ------------------------------------------------------------------------

def cmd_repr(args) -> tuple[CliReport, str]:
    cfg, warnings = _load(args.config, args.strict)
    w = normalize(parse_raw(args.word), cfg.n_generators)
    m = represent(w, cfg)
    payload = {"config": config_strings(cfg), "word": format_word(w), "dim": cfg.dim,
               "matrix": m.to_strings(), "warnings": warnings}
    text = str(m)
    if args.float:
        payload["matrix_float"] = [[repr(z) for z in row] for row in m.to_complex()]
        text = "\n".join(" ".join(f"{z:.10g}" for z in row) for row in m.to_complex())
    return CliReport("repr", payload=payload, cases_run=1), text


def cmd_verify(args) -> tuple[CliReport, str]:
    _check_range("dim", args.dim, 2, MAX_DIM)
    _check_range("max-len", args.max_len, 1, MAX_WORD_LEN)
    _check_range("cases", args.cases, 1, MAX_CASES)
    _check_range("n", args.n, 1, MAX_N)
    _check_range("generators", args.generators, 1, 64)
    cfg = None
    if args.config:
        cfg, _ = _load(args.config, args.strict)
    if args.suite in ("frakx", "trace", "inversion"):
        if cfg is not None and (cfg.n_generators != 2 or cfg.dim != 2):
            raise ConfigMismatch(f"suite {args.suite} needs N=2, dim=2")
    cases_run, failures = run_suite(
        args.suite, cases=args.cases, seed=args.seed, dim=args.dim, n=args.n,
        max_len=args.max_len, n_generators=args.generators, cfg=cfg, workers=args.workers)
    payload = {"suite": args.suite, "seed": args.seed, "dim": args.dim, "n": args.n,
               "max_len": args.max_len, "generators": args.generators}
    if cfg is not None:
        payload["config"] = config_strings(cfg)
    report = CliReport("verify", "violation" if failures else "ok", payload, cases_run,
                       failures, EXIT_VIOLATION if failures else EXIT_OK)
    lines = [f"{args.suite}: {cases_run} case(s), {len(failures)} failure(s)"]
    for f in failures[:20]:
        lines.append(f"  case {f['case']}: {f['check']}"
                     + (f" word={f['word']}" if "word" in f else "")
                     + (f" n={f['index']}" if "index" in f else ""))
    return report, "\n".join(lines)


def cmd_lucas(args) -> tuple[CliReport, str]:
    _check_range("rows", args.rows, 1, MAX_ROWS)
    table = lucas.lucas_triangle(args.rows)
    numbers = [lucas.lucas_number(n) for n in range(1, args.rows + 1)]
    payload: dict[str, Any] = {"rows": args.rows, "triangle": [list(r) for r in table.rows]}
    if args.numbers:
        payload["lucas_numbers"] = numbers
    if args.format == "json" and args.numbers:
        text = json.dumps({"triangle": payload["triangle"], "lucas_numbers": numbers})
    else:
        text = lucas.format_triangle(table, args.format)
        if args.numbers:
            sep = "," if args.format == "csv" else " "
            text += "\n" + sep.join(str(x) for x in numbers)
    return CliReport("lucas", payload=payload, cases_run=args.rows), text


def cmd_word(args) -> tuple[CliReport, str]:
    raw = parse_raw(args.word)
    n = args.generators or max((j for j, _ in raw), default=1)
    if args.action == "classify":
        n = max(n, 2)
    w = normalize(raw, n)
    if args.action == "normalize":
        result = format_word(w)
    elif args.action == "invert":
        result = format_word(invert(w))
    else:
        result = str(classify_n2(w))
    payload = {"action": args.action, "input": args.word, "n_generators": n,
               "word": format_word(w), "result": result}
    return CliReport("word", payload=payload, cases_run=1), result


def cmd_trace(args) -> tuple[CliReport, str]:
    _check_range("n", args.n, 1, MAX_N)
    cfg, warnings = _load(args.config, args.strict)
    eps = epsilon0(cfg)
    closed = radial_power_trace(eps, args.n)
    brute = trace(power(radial_operator(cfg), args.n))
    payload = {"config": config_strings(cfg), "n": args.n, "epsilon0": format_scalar(eps.value),
               "degenerate": eps.degenerate, "closed_form": format_scalar(closed),
               "brute_force": format_scalar(brute), "agree": closed == brute,
               "warnings": warnings}
    failures = []
    if closed != brute:
        failures.append({"case": 0, "config": config_strings(cfg), "index": args.n,
                         "check": "tr(T^n) closed form", "expected": format_scalar(closed),
                         "actual": format_scalar(brute)})
    text = (f"eps0 = {format_scalar(eps.value)}"
            + (" (degenerate)" if eps.degenerate else "")
            + f"\ntr(T^{args.n}) closed form = {format_scalar(closed)}"
            + f"\ntr(T^{args.n}) brute force = {format_scalar(brute)}"
            + ("\nagree" if not failures else "\nMISMATCH"))
    report = CliReport("trace", "violation" if failures else "ok", payload, 1, failures,
                       EXIT_VIOLATION if failures else EXIT_OK)
    return report, text


# -- parser ---------------------------------------------------------------------------

def _default_seed() -> int:
    env = os.environ.get("GAMMA2_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"GAMMA2_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    p = _Parser(prog="gamma2", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("repr", parents=[common], help="matrix image of a word")
    r.add_argument("config", help="config file: one comma-separated tuple per line")
    r.add_argument("word", help="word such as 'x1 x2^3 x1^-1' or 'e'")
    r.add_argument("--strict", action="store_true", help="reject shared coordinates")
    r.add_argument("--float", action="store_true", help="also show a floating view")
    r.set_defaults(func=cmd_repr)

    v = sub.add_parser("verify", parents=[common], help="run a seeded property sweep")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=int, default=10, help="largest power / index")
    v.add_argument("--dim", type=int, default=2)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--cases", type=int, default=10)
    v.add_argument("--max-len", type=int, default=8)
    v.add_argument("--generators", type=int, default=2)
    v.add_argument("--config", help="use this config instead of sampling")
    v.add_argument("--strict", action="store_true")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    lu = sub.add_parser("lucas", parents=[common], help="emit the Lucas triangle")
    lu.add_argument("--rows", type=int, default=10)
    lu.add_argument("--format", choices=("text", "csv", "json"), default="text")
    lu.add_argument("--numbers", action="store_true", help="append the row sums")
    lu.set_defaults(func=cmd_lucas)

    w = sub.add_parser("word", parents=[common], help="reduce, invert or classify a word")
    w.add_argument("action", choices=("normalize", "invert", "classify"))
    w.add_argument("word")
    w.add_argument("--generators", type=int, default=None)
    w.set_defaults(func=cmd_word)

    t = sub.add_parser("trace", parents=[common], help="tr(T^n) two ways")
    t.add_argument("config")
    t.add_argument("--n", type=int, default=2)
    t.add_argument("--strict", action="store_true")
    t.set_defaults(func=cmd_trace)
    return p


def run(argv: list[str] | None = None) -> tuple[CliReport, str]:
    """Parse and execute; returns the report and its plain-text rendering."""
    argv = list(sys.argv[1:] if argv is None else argv)
    command = next((a for a in argv if not a.startswith("-")), "gamma2")
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return args.func(args)
    except UsageError as exc:
        return _error(command, str(exc), EXIT_USAGE), f"usage error: {exc}"
    except ParseError as exc:
        return _error(command, str(exc), EXIT_USAGE), f"parse error: {exc}"
    except InvalidConfig as exc:
        report = _error(command, "invalid config", EXIT_CONFIG,
                        violations=[v.as_dict() for v in exc.violations])
        return report, "invalid config:\n" + "\n".join(f"  {v}" for v in exc.violations)
    except ConfigMismatch as exc:
        return _error(command, str(exc), EXIT_CONFIG), f"invalid config: {exc}"
    except ScanTooLarge as exc:
        return _error(command, str(exc), EXIT_USAGE), f"usage error: {exc}"
    except OSError as exc:
        return _error(command, str(exc), EXIT_USAGE), f"error: {exc}"
    except Gamma2Error as exc:
        return _error(command, str(exc), EXIT_USAGE), f"error: {exc}"


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    report, text = run(argv)
    if "--json" in argv:
        print(report.to_json())
    else:
        stream = sys.stderr if report.status == "error" else sys.stdout
        print(text, file=stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
