"""Command-line entry point: ``lexopt {solve,verify,gen,sweep}``.

Exit codes: 0 success, 1 a theorem check failed, 2 bad input or
parameters, 3 solver error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import harness
from .core import INFINITE, format_rational, lex_signature, parse_rational
from .errors import GenerationError, InvalidParameter, LexoptError
from .fileformat import (
    InstanceFormatError,
    dumps,
    instance_to_dict,
    load_instance,
    load_json,
    save_instance,
)

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_SOLVER = 0, 1, 2, 3


def _emit(payload: dict, output) -> None:
    text = dumps(payload)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _alpha_range(args) -> harness.AlphaRange:
    if args.alpha:
        return harness.AlphaRange.parse(args.alpha)
    if args.alpha_min is None and args.alpha_max is None:
        return harness.AlphaRange.parse("(1, 4]")
    lo = parse_rational(args.alpha_min) if args.alpha_min else 1
    hi = parse_rational(args.alpha_max) if args.alpha_max else INFINITE
    return harness.AlphaRange(lo, hi, low_open=args.alpha_min is None, high_open=hi == INFINITE)


def cmd_solve(args) -> int:
    inst = load_instance(args.input)
    if args.objective == "lex-max":
        X, sig, w = inst.solve_lex_max()
    else:
        X, w = inst.solve_max_weight()
        sig = lex_signature(X, inst.classes) if inst.weights else ()
    _emit({"objective": args.objective, "solution": sorted(X),
           "weight": format_rational(w), "signature": list(sig)}, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.input:
        inst = load_instance(args.input)
    elif args.tightness:
        inst = harness.tightness_example(parse_rational(args.tightness))
    else:
        inst = harness.generate_instance(kind=args.kind, seed=args.seed, k=args.k,
                                         alpha_range=_alpha_range(args), family=args.family)
    rep = harness.verify_bound(inst, vice_versa=args.vice_versa)
    payload = {"instance": instance_to_dict(inst), "report": rep.to_dict()}
    ok = rep.passed
    if args.chain:
        chain = harness.eligible_chain(inst)
        payload["chain"] = chain.to_dict()
        ok = ok and chain.passed
    payload["passed"] = ok
    _emit(payload, args.output)
    for note in rep.notes:
        print(note, file=sys.stderr)
    if not ok:
        print(f"check failed: {rep.counterexample}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.count < 0:
        raise InvalidParameter("--count must be nonnegative")
    out = Path(args.out_dir)
    rng_range = _alpha_range(args)
    out.mkdir(parents=True, exist_ok=True)
    for j in range(args.count):
        seed = harness.derive_seed(args.seed, args.kind, j)
        inst = harness.generate_instance(kind=args.kind, seed=seed, k=args.k,
                                         alpha_range=rng_range, family=args.family)
        save_instance(inst, out / f"{args.kind}_{j:04d}.json")
    return EXIT_OK


def default_sweep_config() -> dict:
    text = resources.files("lexopt").joinpath("data/default_sweep.json").read_text()
    return json.loads(text)


def cmd_sweep(args) -> int:
    config = load_json(args.config) if args.config else default_sweep_config()
    report = harness.sweep(config)
    _emit(report, args.output)
    if not report["passed"]:
        print(f"{len(report['failures'])} instance(s) failed", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _add_gen_flags(p):
    p.add_argument("--kind", choices=("matching", "intersection"), default="matching")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=None, help="number of distinct weight levels")
    p.add_argument("--alpha", help="dispersion interval, e.g. '(1, 2]' or '(2, inf)'")
    p.add_argument("--alpha-min", help="inclusive lower bound on dispersion")
    p.add_argument("--alpha-max", help="inclusive upper bound on dispersion")
    p.add_argument("--family", choices=harness.INTERSECTION_FAMILIES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexopt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance file")
    p.add_argument("input")
    p.add_argument("--objective", choices=("max-weight", "lex-max"), default="max-weight")
    p.add_argument("--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check the dispersion bound on one instance")
    p.add_argument("input", nargs="?")
    p.add_argument("--tightness", metavar="X", help="use the 3-edge path with middle weight X")
    p.add_argument("--chain", action="store_true", help="also trace the eligible chain")
    p.add_argument("--vice-versa", action="store_true",
                   help="enumerate every optimum and test lex-maximality")
    p.add_argument("--output")
    _add_gen_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write random instance files")
    _add_gen_flags(p)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="run a seeded verification sweep")
    p.add_argument("config", nargs="?", help="JSON config (default: bundled config)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InstanceFormatError, GenerationError, InvalidParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LexoptError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
