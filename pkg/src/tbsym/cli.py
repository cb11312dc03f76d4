"""Command-line interface: ``tbsym <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 parse error, 3 timeout,
4 domain error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import List, Optional, Sequence

from .boardman import MINOR_MODES, REDUCTIONS, DepthError, IdealPresentation, default_depth
from .germs import (
    DomainError,
    cartesian_product,
    euclid_run,
    euclid_symbol,
    mu,
    realization_factors,
    realize,
    zero_germ,
)
from .ideal_io import ParseError, SymbolReport, parse_ideal_file, parse_symbol_spec, symbol_report_json
from .verify import (
    FAIL,
    PASS,
    SKIPPED,
    Cell,
    CellTimeout,
    RunConfig,
    deadline,
    deterministic_additivity_pairs,
    enumerate_specs,
    symbol_of,
    verify_additivity,
    verify_realize,
    verify_remark22,
    verify_varley,
    varley_pairs,
)

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_TIMEOUT, EXIT_DOMAIN = 0, 1, 2, 3, 4
DEFAULT_CELL_TIMEOUT = 300
DEFAULT_SEED = 20261018

log = logging.getLogger("tbsym")


def _config(args, default_timeout: Optional[int] = None) -> RunConfig:
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("TBSYM_THREADS", "1"))
    timeout = args.timeout if args.timeout is not None else default_timeout
    reduction = "none" if args.no_interreduce else args.reduction
    return RunConfig(depth=args.depth, threads=threads, timeout_seconds=timeout,
                     json=args.json, reduction=reduction, minors=args.minors, seed=args.seed)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _report(ideal: IdealPresentation, config: RunConfig, out, header: Sequence[str] = ()) -> int:
    depth = config.depth or default_depth(ideal)
    with deadline(config.timeout_seconds):
        sym, chain = symbol_of(ideal, config, depth)
    if config.json:
        print(symbol_report_json(SymbolReport.from_run(ideal, depth, sym, chain)), file=out)
        return EXIT_OK
    for line in header:
        print(line, file=out)
    print(sym, file=out)
    for p, step in enumerate(chain, start=1):
        order = "-" if step.minor_order is None else step.minor_order
        print(f"  step {p}: corank={step.corank} minor_order={order} "
              f"generators {step.generators_before} -> {step.generators_after}", file=out)
    return EXIT_OK


def cmd_compute(args, out) -> int:
    ideal = parse_ideal_file(_read(args.file))
    return _report(ideal, _config(args), out)


def cmd_mu(args, out) -> int:
    return _report(mu(args.n, args.r), _config(args), out)


def cmd_zero(args, out) -> int:
    return _report(zero_germ(args.a, args.b), _config(args), out)


def cmd_product(args, out) -> int:
    left = parse_ideal_file(_read(args.file1))
    right = parse_ideal_file(_read(args.file2))
    return _report(cartesian_product(left, right), _config(args), out)


def cmd_realize(args, out) -> int:
    spec = parse_symbol_spec(args.spec)
    factors = realization_factors(spec)
    text = " x ".join(str(f) for f in factors) or "zero_germ(0,1)"
    return _report(realize(spec), _config(args), out, header=[f"factorization: {text}"])


def cmd_euclid(args, out) -> int:
    run = euclid_run(args.n, args.r)
    sym = euclid_symbol(args.n, args.r)
    body = ",".join(str(v) for v in sym.prefix)
    if args.json:
        print(json.dumps({"n": run.n, "r": run.r, "quotients": list(run.quotients),
                          "remainders": list(run.remainders), "prefix": list(sym.prefix),
                          "tail_value": 0}, separators=(",", ":")), file=out)
        return EXIT_OK
    print(f"({body},0*)", file=out)
    a, b = run.n, run.r
    for q in run.quotients:
        rem = a - q * b
        print(f"  {a} = {q}*{b} + {rem}", file=out)
        a, b = b, rem
    return EXIT_OK


def _table(cells: List[Cell], config: RunConfig, out) -> int:
    if config.json:
        print(json.dumps([c.to_dict() for c in cells], separators=(",", ":")), file=out)
    else:
        width = max([len(c.label) for c in cells] + [5])
        print(f"{'case':<{width}}  {'status':<7}  expected -> got", file=out)
        for c in cells:
            print(f"{c.label:<{width}}  {c.status:<7}  {c.expected} -> {c.got}", file=out)
            if c.status == FAIL and c.detail:
                print("    replay:", file=out)
                for line in c.detail.splitlines():
                    print("      " + line, file=out)
            elif c.status == SKIPPED:
                print(f"    {c.detail}", file=out)
        counts = {s: sum(c.status == s for c in cells) for s in (PASS, FAIL, SKIPPED)}
        print(f"{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIPPED]} skipped", file=out)
    for c in cells:
        log.info("%s %s %.2fs", c.label, c.status, c.seconds)
    if any(c.status == FAIL for c in cells):
        return EXIT_MISMATCH
    if any(c.status == SKIPPED for c in cells):
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_verify_varley(args, out) -> int:
    if not varley_pairs(args.max_sum):
        raise DomainError(f"no pairs n >= r >= 1 with n + r <= {args.max_sum}")
    config = _config(args, DEFAULT_CELL_TIMEOUT)
    return _table(verify_varley(args.max_sum, config), config, out)


def cmd_verify_additivity(args, out) -> int:
    if args.cases < 1:
        raise DomainError("cases must be at least 1")
    config = _config(args, DEFAULT_CELL_TIMEOUT)
    seed = DEFAULT_SEED if args.seed is None else args.seed
    extra = deterministic_additivity_pairs() if args.with_fixed else ()
    return _table(verify_additivity(args.cases, seed, config, extra=extra), config, out)


def cmd_verify_realize(args, out) -> int:
    if args.spec:
        specs = [parse_symbol_spec(s) for s in args.spec]
    else:
        if args.max_value is None or args.max_value < 1:
            raise DomainError("max_value must be at least 1")
        specs = enumerate_specs(args.max_value, args.max_len)
    config = _config(args, DEFAULT_CELL_TIMEOUT)
    return _table(verify_realize(specs, config), config, out)


def _pair(text: str):
    try:
        k, r = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K,R but got {text!r}")
    return k, r


def cmd_verify_remark22(args, out) -> int:
    config = _config(args, DEFAULT_CELL_TIMEOUT)
    return _table(verify_remark22(args.pairs, config), config, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=int, help="number of symbol entries to compute (default m+2)")
    common.add_argument("--threads", type=int, help="worker processes for verification cells")
    common.add_argument("--timeout", type=int, help="seconds per computation / verification cell")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--reduction", choices=REDUCTIONS, default="ideal",
                        help="generator tidying after each extension step")
    common.add_argument("--no-interreduce", action="store_true",
                        help="only drop zero and duplicate generators (same as --reduction none)")
    common.add_argument("--minors", choices=MINOR_MODES, default="schur",
                        help="adjoin residual entries (schur) or every minor (all)")
    common.add_argument("--seed", type=int, help="seed for randomized harnesses")
    common.add_argument("--log-level", choices=("error", "info", "debug"),
                        default=os.environ.get("TBSYM_LOG", "error"))

    parser = argparse.ArgumentParser(prog="tbsym", description="Thom-Boardman symbols of polynomial germs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="symbol of the ideal in an ideal file")
    p.add_argument("file")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("mu", parents=[common], help="symbol of the multiplication germ mu_{n,r}")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("zero", parents=[common], help="symbol of the zero germ C^a -> C^b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_zero)

    p = sub.add_parser("product", parents=[common], help="symbol of the product of two ideal files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("realize", parents=[common], help="germ realizing a symbol spec like 2^1,1^2,0*")
    p.add_argument("spec")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("euclid", parents=[common], help="Euclid symbol I(n,r) with its trace")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_euclid)

    p = sub.add_parser("verify-varley", parents=[common], help="mu(n,r) vs I(n,r) for n+r <= MAX_SUM")
    p.add_argument("max_sum", type=int)
    p.set_defaults(func=cmd_verify_varley)

    p = sub.add_parser("verify-additivity", parents=[common], help="symbols add under products")
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--with-fixed", action="store_true", help="also run the fixed germ pairs")
    p.set_defaults(func=cmd_verify_additivity)

    p = sub.add_parser("verify-realize", parents=[common], help="realization round trips")
    p.add_argument("max_value", type=int, nargs="?")
    p.add_argument("max_len", type=int, nargs="?", default=4)
    p.add_argument("--spec", action="append", help="check this spec instead of enumerating")
    p.set_defaults(func=cmd_verify_realize)

    p = sub.add_parser("verify-remark22", parents=[common], help="mu(k*r,r) vs r copies of mu(k,1)")
    p.add_argument("pairs", type=_pair, nargs="+", metavar="K,R")
    p.set_defaults(func=cmd_verify_remark22)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CellTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (DomainError, DepthError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
