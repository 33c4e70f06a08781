"""Command-line front end.

Exit codes: 0 = success / all claims verified, 1 = a verification failed
or a budget ran out, 2 = usage error (bad arguments, unreadable file,
malformed or rank-deficient matrix).

Every reported distance carries an exactness marker; a distance computed
under an exhausted budget is printed as ``d<=N exact=false`` and never as
a bare number.  Identical invocations (including --seed) produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bounds as bounds_mod
from . import corpus as corpus_mod
from .codes import (
    BROUWER_ZIMMERMANN,
    EXHAUSTIVE,
    BudgetExceeded,
    CodeError,
    format_vector,
    is_even_like,
    is_lcd,
    hull,
    min_weight,
    parse_vector,
    read_code_file,
    weight_distribution,
    write_code_file,
)
from .construct import (
    M1,
    M2,
    ConstructError,
    extend_m1,
    extend_m2,
    parse_record,
    apply_record,
    puncture_to_lcd,
    search_extend,
    shorten_to_lcd,
)
from .eaqecc import ParamError, family, from_hermitian_lcd
from .gf import FieldError
from .linalg import LinalgError

USAGE_ERRORS = (CodeError, ConstructError, FieldError, LinalgError, ParamError, OSError)


def _coords_1based(coords) -> str:
    return ",".join(str(c + 1) for c in coords) if coords else "-"


def _wd_text(wd) -> str:
    return " ".join(f"{w}:{c}" for w, c in wd.nonzero())


def cmd_verify(args) -> int:
    code = read_code_file(args.file)
    parts = [f"file={args.file}", f"field={code.field.name}", f"n={code.n}", f"k={code.k}"]
    parts.append(f"lcd={str(is_lcd(code)).lower()}")
    try:
        wd = weight_distribution(code, cap=args.cap, threads=args.threads)
    except BudgetExceeded:
        try:
            min_weight(code, cap=args.cap, threads=args.threads)
            raise  # distribution budget differs from the min-weight one
        except BudgetExceeded as exc:
            bound = f"d<={exc.best_upper}" if exc.best_upper is not None else "d=unknown"
            parts.append(f"{bound} exact=false")
            print(" ".join(parts))
            print(f"error: weight enumeration budget exhausted after {exc.steps} codewords", file=sys.stderr)
            return 1
    parts.append(f"d={wd.min_weight} exact=true")
    if code.field.order == 2:
        parts.append(f"odd-like={str(wd.odd_like).lower()}")
        parts.append(f"even-like={str(is_even_like(code)).lower()}")
    parts.append(f"wd=[{_wd_text(wd)}]")
    print(" ".join(parts))
    return 0


def cmd_hull(args) -> int:
    code = read_code_file(args.file)
    h = hull(code)
    print(f"file={args.file} field={code.field.name} n={code.n} k={code.k} hull-dim={h.dim} T={_coords_1based(h.pivot_set)}")
    for row in h.basis:
        print(format_vector(code.field, row))
    return 0


def _print_result_code(args, code, label, t) -> int:
    d_part = ""
    try:
        d = min_weight(code, cap=args.cap, threads=args.threads)
        d_part = f" d={d} exact=true"
    except BudgetExceeded as exc:
        if exc.best_upper is not None:
            d_part = f" d<={exc.best_upper} exact=false"
    print(f"{label} n={code.n} k={code.k} lcd={str(is_lcd(code)).lower()}{d_part} T={_coords_1based(t)}")
    if args.output:
        write_code_file(args.output, code)
        print(f"wrote {args.output}")
    return 0


def cmd_shorten_lcd(args) -> int:
    code = read_code_file(args.file)
    out, t = shorten_to_lcd(code)
    return _print_result_code(args, out, "shortened", t)


def cmd_puncture_lcd(args) -> int:
    code = read_code_file(args.file)
    out, t = puncture_to_lcd(code, cap=args.cap, threads=args.threads)
    return _print_result_code(args, out, "punctured", t)


def cmd_extend(args) -> int:
    code = read_code_file(args.file)
    method = M1 if args.method == 1 else M2
    if args.vector is not None:
        vec = parse_vector(code.field, args.vector)
        out = extend_m1(code, vec) if method == M1 else extend_m2(code, vec)
        return _print_result_code(args, out, f"extended method={args.method}", ())
    res = search_extend(
        code, method, target=args.target, budget=args.budget, seed=args.seed, cap=args.cap, threads=args.threads
    )
    d_text = f"d={res.min_weight} exact=true" if res.exact else f"d<={res.min_weight} exact=false"
    print(
        f"search method={args.method} vector={format_vector(code.field, res.vector)} "
        f"{d_text} exhaustive={str(res.exhaustive).lower()} candidates={res.candidates}"
    )
    if args.target is not None:
        met = res.target_met
        print(f"target={args.target} met={str(bool(met)).lower()}")
    if args.output:
        write_code_file(args.output, res.code)
        print(f"wrote {args.output}")
    if args.target is not None and not res.target_met:
        return 1
    return 0


def cmd_minweight(args) -> int:
    code = read_code_file(args.file)
    strategy = EXHAUSTIVE if args.strategy == "exhaustive" else BROUWER_ZIMMERMANN
    try:
        d = min_weight(code, strategy=strategy, cap=args.cap, threads=args.threads)
    except BudgetExceeded as exc:
        bound = f"d<={exc.best_upper}" if exc.best_upper is not None else "d=unknown"
        print(f"file={args.file} strategy={args.strategy} {bound} exact=false")
        print(f"error: budget exhausted after {exc.steps} steps", file=sys.stderr)
        return 1
    print(f"file={args.file} strategy={args.strategy} d={d} exact=true")
    return 0


def cmd_replay(args) -> int:
    with open(args.record, encoding="ascii") as fh:
        rec = parse_record(fh.read())
    try:
        base = corpus_mod.resolve_code(rec.base)
    except corpus_mod.MissingBase as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"base {rec.base} n={base.n} k={base.k}")
    current = base
    for step, code in zip(rec.steps, apply_record(rec, base)):
        current = code
        arg = f" {step.arg}" if step.arg else ""
        print(f"step {step.op}{arg} -> n={code.n} k={code.k} lcd={str(is_lcd(code)).lower()}")
    try:
        d = min_weight(current, cap=args.cap, threads=args.threads)
        print(f"final n={current.n} k={current.k} d={d} exact=true")
    except BudgetExceeded as exc:
        print(f"final n={current.n} k={current.k} d<={exc.best_upper} exact=false")
    if args.output:
        write_code_file(args.output, current)
        print(f"wrote {args.output}")
    return 0


def _parse_range(text: str):
    try:
        n_part, k_part = text.split(",")
        n1, n2 = (int(v) for v in n_part.split(".."))
        k1, k2 = (int(v) for v in k_part.split(".."))
    except ValueError:
        raise CodeError(f"malformed range {text!r}; expected n1..n2,k1..k2") from None
    return range(n1, n2 + 1), range(k1, k2 + 1)


def cmd_bounds(args) -> int:
    table = bounds_mod.BoundsTable(args.field)
    if args.seeds:
        bounds_mod.seed_from_csv(table, args.seeds)
    else:
        grid = bounds_mod.load_grid(bounds_mod.grid_path(args.field))
        bounds_mod.seed_from_grid(table, grid, "published grid")
        if args.field == "gf3":
            bounds_mod.seed_ternary_exact(table, range(20, 26))
    if not table.cells:
        print("error: no seeds for this field", file=sys.stderr)
        return 1
    if args.range:
        n_range, k_range = _parse_range(args.range)
    else:
        n_lo, n_hi, k_lo, k_hi = table.bounding_box()
        n_range, k_range = range(n_lo, n_hi + 1), range(k_lo, k_hi + 1)
    box = (n_range.start, n_range.stop - 1, k_range.start, k_range.stop - 1)
    try:
        bounds_mod.propagate(table, box=box)
    except bounds_mod.ConflictError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(bounds_mod.render(table, n_range, k_range, fmt={"md": "markdown", "csv": "csv"}[args.format]))
    return 0


def cmd_eaqecc(args) -> int:
    params = family(args.n, args.k, args.d, args.s) if args.s else from_hermitian_lcd(args.n, args.k, args.d)
    print(str(params))
    return 0


def cmd_corpus_check(args) -> int:
    reports = corpus_mod.check_all(include_optional=args.include_optional, threads=args.threads)
    failures = 0
    for rep in reports:
        if rep.skipped:
            status = "skip"
        elif rep.ok:
            status = "ok"
        else:
            status = "FAIL"
            failures += 1
        note = "" if rep.ok and not rep.skipped else f" ({'; '.join(rep.messages)})"
        print(f"{status} {rep.entry_id}{note}")
    verified = sum(1 for r in reports if r.ok and not r.skipped)
    skipped = sum(1 for r in reports if r.skipped)
    print(f"summary verified={verified} skipped={skipped} failed={failures}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcdkit", description="LCD code construction and verification toolkit")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes for enumeration")
    p.add_argument("--cap", type=int, default=None, help="enumeration work budget (codewords)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="rank, LCD, minimum weight, distribution, even/odd-like")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("hull", help="hull dimension, basis and pivot set")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_hull)

    sp = sub.add_parser("shorten-lcd", help="shorten on the hull pivot set")
    sp.add_argument("file")
    sp.add_argument("--output", "-o")
    sp.set_defaults(fn=cmd_shorten_lcd)

    sp = sub.add_parser("puncture-lcd", help="puncture on the hull pivot set")
    sp.add_argument("file")
    sp.add_argument("--output", "-o")
    sp.set_defaults(fn=cmd_puncture_lcd)

    sp = sub.add_parser("extend", help="extension methods 1 and 2")
    sp.add_argument("file")
    sp.add_argument("--method", type=int, choices=(1, 2), required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--vector", help="extension vector symbols")
    group.add_argument("--search", action="store_true", help="search for the best vector")
    sp.add_argument("--target", type=int, default=None, help="target minimum distance for --search")
    sp.add_argument("--budget", type=int, default=100_000, help="candidate budget for --search")
    sp.add_argument("--seed", type=int, default=0, help="sampling seed for --search")
    sp.add_argument("--output", "-o")
    sp.set_defaults(fn=cmd_extend)

    sp = sub.add_parser("minweight", help="exact minimum weight")
    sp.add_argument("file")
    sp.add_argument("--strategy", choices=("exhaustive", "bz"), default="exhaustive")
    sp.set_defaults(fn=cmd_minweight)

    sp = sub.add_parser("replay", help="replay a construction record")
    sp.add_argument("record")
    sp.add_argument("--output", "-o")
    sp.set_defaults(fn=cmd_replay)

    sp = sub.add_parser("bounds", help="propagate and render a bounds table")
    sp.add_argument("--field", choices=("gf2", "gf3", "gf4h"), required=True)
    sp.add_argument("--seeds", help="seed CSV (field,n,k,lower,upper,kind,provenance); default: built-in grid")
    sp.add_argument("--range", help="n1..n2,k1..k2")
    sp.add_argument("--format", choices=("md", "csv"), default="md")
    sp.set_defaults(fn=cmd_bounds)

    sp = sub.add_parser("eaqecc", help="entanglement-assisted quantum code parameters")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--s", type=int, default=0)
    sp.set_defaults(fn=cmd_eaqecc)

    sp = sub.add_parser("corpus-check", help="verify every bundled reference entry")
    sp.add_argument("--include-optional", action="store_true")
    sp.set_defaults(fn=cmd_corpus_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except corpus_mod.CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
