"""Command-line front end.

Subcommands: classify, atlas, cubic, tuples, maxgenus, audit.

Exit codes: 0 ok, 2 usage, 3 I/O failure, 4 grid cap exceeded,
5 audit regression (an unflagged transcript row disagrees with its
printed value).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

from . import __version__
from .audit import AuditCase, audit_case
from .classifier import PICARD_ASSUMPTION, Case, classify
from .cubic import SevenTuple, enumerate_tuples, range_verdict
from .errors import InvariantError
from .maxgenus import max_genus

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CAP = 4
EXIT_AUDIT = 5

DEFAULT_CAP = 10**7
JSON_SAFE_MAX = 2**53 - 1

CUBIC_ASSUMPTION = "curves on a smooth cubic surface; linear normality is assumed, not checked"


def json_safe(obj):
    """Replace integers outside +-(2^53 - 1) by their decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) <= JSON_SAFE_MAX else str(obj)
    if isinstance(obj, dict):
        return {k: json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_safe(v) for v in obj]
    return obj


def provenance(*assumptions: str) -> dict:
    return {"artifact_version": __version__, "assumptions": list(assumptions)}


def atlas_record(record: dict, *assumptions: str) -> dict:
    return {"record": record, "provenance": provenance(*assumptions)}


def dumps(obj) -> str:
    return json.dumps(json_safe(obj), sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def _render_table(pairs: Iterable[tuple[str, object]]) -> str:
    pairs = list(pairs)
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def iter_atlas(s_min: int, s_max: int, a_max: int, b_max: int) -> Iterator[dict]:
    """Gate-passing records in canonical (s, a, b) order."""
    for s in range(s_min, s_max + 1):
        for a in range(a_max + 1):
            for b in range(b_max + 1):
                rep = classify(s, a, b)
                if rep.case is Case.HYPOTHESIS_FAILED:
                    continue
                yield atlas_record(rep.to_json(), *rep.assumptions)


# ------------------------------------------------------------- commands

def cmd_classify(args) -> int:
    if args.s < 4:
        raise _Usage(f"--s must be >= 4, got {args.s}")
    rep = classify(args.s, args.a, args.b)
    if args.json:
        print(dumps(atlas_record(rep.to_json(), *rep.assumptions)))
        return EXIT_OK
    crit = "-" if rep.critical_family is None else f"{rep.critical_family.value} (n={rep.critical_n})"
    print(_render_table([
        ("(s,a,b)", f"({rep.s},{rep.a},{rep.b})"),
        ("d", rep.d),
        ("g", rep.g),
        ("t", rep.t),
        ("dim W", rep.dim_w),
        ("h1(I_C(s))", rep.h1_ideal_s),
        ("case", rep.case_label),
        ("status", rep.status.value),
        ("critical family", crit),
        *[("note", n) for n in rep.notes],
        ("assumption", PICARD_ASSUMPTION),
    ]))
    return EXIT_OK


def cmd_atlas(args) -> int:
    if args.a_max < 0 or args.b_max < 0:
        raise _Usage("--a-max and --b-max must be non-negative")
    s_min, s_max = args.s_range
    if s_min <= s_max and s_min < 4:
        raise _Usage("surface degrees start at 4")
    cells = max(0, s_max - s_min + 1) * (args.a_max + 1) * (args.b_max + 1)
    if cells > args.cap:
        print(f"grid of {cells} cells exceeds cap {args.cap}", file=sys.stderr)
        return EXIT_CAP
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            for rec in iter_atlas(s_min, s_max, args.a_max, args.b_max):
                fh.write(dumps(rec) + "\n")
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_cubic(args) -> int:
    tup = None
    if args.tuple is not None:
        tup = SevenTuple(args.tuple[0], tuple(args.tuple[1:]))
    verdict = range_verdict(args.d, args.g, tup)
    if args.json:
        print(dumps(atlas_record(verdict.to_json(), CUBIC_ASSUMPTION)))
        return EXIT_OK
    print(_render_table([
        ("(d,g)", f"({verdict.d},{verdict.g})"),
        ("in_conjecture_range", str(verdict.in_conjecture_range).lower()),
        ("proven_by", ", ".join(sorted(c.value for c in verdict.proven_by)) or "-"),
        ("existence_48", verdict.existence_48.value),
        ("dim W", verdict.dim_w3),
        *[("note", n) for n in verdict.notes],
    ]))
    return EXIT_OK


def cmd_tuples(args) -> int:
    tuples = enumerate_tuples(args.d, args.g, args.m6)
    if args.json:
        print(dumps({"d": args.d, "g": args.g, "tuples": [t.as_list() for t in tuples]}))
    else:
        for t in tuples:
            print(t)
        print(f"{len(tuples)} tuple(s)", file=sys.stderr)
    return EXIT_OK


def cmd_maxgenus(args) -> int:
    ans = max_genus(args.d, args.s)
    if args.json:
        print(dumps({"d": args.d, "s": args.s, **ans.to_json()}))
    else:
        print(ans)
    return EXIT_OK


def cmd_audit(args) -> int:
    cases = list(AuditCase) if args.case == "all" else [AuditCase(args.case)]
    status = EXIT_OK
    for case in cases:
        tr = audit_case(case)
        if args.json:
            print(dumps(tr.to_json()))
        else:
            print(f"== {case.value}")
            for r in tr.rows:
                mark = "FLAG" if r.flagged else ("ok" if r.match else "MISMATCH")
                extra = f"  [{r.note}]" if r.note else ""
                print(f"  {mark:8} {r.claim}: computed {r.computed}, printed {r.printed}{extra}")
            print(f"  {tr.conclusion}")
        if not tr.ok:
            status = EXIT_AUDIT
    return status


# --------------------------------------------------------------- parsing

class _Usage(Exception):
    pass


def _s_range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi or lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _int_set(text: str) -> frozenset:
    try:
        return frozenset(int(x) for x in text.split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_format(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--table", action="store_true", help="emit a human-readable table (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spacecurves", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the family of C = a f1 + b f2 on a degree-s surface")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("atlas", help="write NDJSON records for a grid of (s, a, b)")
    p.add_argument("--s", dest="s_range", type=_s_range, required=True, metavar="LO..HI")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("cubic", help="range verdict for (d, g) on a cubic surface")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--tuple", type=int, nargs=7, metavar="N", help="delta m1 .. m6")
    _add_format(p)
    p.set_defaults(func=cmd_cubic)

    p = sub.add_parser("tuples", help="enumerate 7-tuples with given degree and genus")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m6", type=_int_set, default=None, help="allowed m6 values, e.g. 1,2")
    _add_format(p)
    p.set_defaults(func=cmd_tuples)

    p = sub.add_parser("maxgenus", help="maximum genus G(d, s)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_maxgenus)

    p = sub.add_parser("audit", help="replay the arithmetic of a non-existence argument")
    p.add_argument("case", choices=[c.value for c in AuditCase] + ["all"])
    _add_format(p)
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (_Usage, InvariantError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
