"""Command-line front end: single-e analysis, range scans, raw Pell queries,
and orbit dumps, with table/CSV/JSON output.

Exit codes: 0 success, 2 invalid input, 3 internal cross-check failure.
Rationals are always emitted as exact numerator/denominator pairs.
"""

import argparse
import json
import sys
from concurrent import futures
from typing import Optional

from .errors import ConsistencyError
from .pell import (
    MAX_ABS_M,
    PellProblem,
    generate_solutions,
    is_square,
    minimal_solution,
)
from .verdicts import Verdict, analyze, orbit_analysis

MAX_E = 10**9

COLUMNS = (
    "e", "p_e", "fm_count", "U", "V", "neg_x", "neg_y", "p45_x", "p45_y",
    "nu_num", "nu_den", "mu_num", "mu_den",
    "strongly_ambiguous", "aut_order", "hodge_classes",
)


def verdict_record(v: Verdict) -> dict:
    """Flatten a Verdict into the fixed column set (ints, bools, None)."""

    def pair(sol):
        return (sol.x, sol.y) if sol is not None else (None, None)

    u, vv = pair(v.pell1)
    nx, ny = pair(v.pell_neg)
    px, py = pair(v.pell45)
    return {
        "e": v.e,
        "p_e": v.p_e,
        "fm_count": v.fm_count,
        "U": u,
        "V": vv,
        "neg_x": nx,
        "neg_y": ny,
        "p45_x": px,
        "p45_y": py,
        "nu_num": v.slopes.nu.numerator,
        "nu_den": v.slopes.nu.denominator,
        "mu_num": v.slopes.mu.numerator,
        "mu_den": v.slopes.mu.denominator,
        "strongly_ambiguous": v.strongly_ambiguous,
        "aut_order": v.aut_order,
        "hodge_classes": v.hodge_classes,
    }


def record_to_json(record: dict) -> str:
    return json.dumps({k: record[k] for k in COLUMNS})


def record_from_json(text: str) -> dict:
    data = json.loads(text)
    return {k: data[k] for k in COLUMNS}


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _csv_lines(records: list[dict]) -> list[str]:
    lines = [",".join(COLUMNS)]
    for rec in records:
        lines.append(",".join(_cell(rec[k]) for k in COLUMNS))
    return lines


def _scan_table(records: list[dict]) -> list[str]:
    widths = {k: max(len(k), *(len(_cell(r[k])) for r in records)) if records else len(k) for k in COLUMNS}
    header = "  ".join(k.rjust(widths[k]) for k in COLUMNS)
    lines = [header]
    for rec in records:
        lines.append("  ".join(_cell(rec[k]).rjust(widths[k]) for k in COLUMNS))
    return lines


def _pell_line(d: int, m: int, sol) -> str:
    eq = f"x^2 - {d}*y^2 = {m}"
    if sol is None:
        return f"{eq}: unsolvable"
    return f"{eq}: minimal ({sol.x}, {sol.y})"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _analyze_table(v: Verdict) -> list[str]:
    e = v.e
    mod = 2 * e
    lines = [
        f"e = {e}  (polarization degree h^2 = {2 * e})",
        f"  distinct primes p(e):      {v.p_e}",
        f"  partner classes 2^(p-1):   {v.fm_count}   orbits {v.fm_orbits}",
        "  " + _pell_line(e, 1, v.pell1) + ("   [no positive solution: e is a square]" if v.pell1 is None else ""),
        "  " + _pell_line(e, -1, v.pell_neg),
        "  " + _pell_line(4 * e, 5, v.pell45),
        f"  nef wall slope nu:         {v.slopes.nu}",
        f"  movable wall slope mu:     {v.slopes.mu}",
    ]
    if v.pell1 is not None:
        u, vv = v.pell1
        lines.append(
            f"  ambiguity evidence:        V even: {_yesno(vv % 2 == 0)};"
            f" U = -1 mod {mod}: {_yesno(u % mod == mod - 1)};"
            f" walls coincide: {_yesno(v.pell45 is None)}"
        )
    else:
        lines.append("  ambiguity evidence:        square e admits no extra isometries")
    amb = f"  strongly ambiguous:        {_yesno(v.strongly_ambiguous)}"
    if v.ambiguity_witness is not None:
        a, b = v.ambiguity_witness
        amb += f"   [witness: subgroups a={a} and a={b} glue to isomorphic squares]"
    lines.append(amb)
    lines.append(
        f"  Hilbert-square classes:    {v.hodge_classes} of {v.fm_count} partner classes"
        f"   (Hodge-level classes: {v.hodge_orbit_count})"
    )
    lines.append(
        f"  automorphism group order:  {v.aut_order}"
        f"   [x^2 - {e}*y^2 = -1 {'solvable' if v.pell_neg else 'unsolvable'};"
        f" walls coincide: {_yesno(v.pell45 is None)}]"
    )
    return lines


def _record_for_e(e: int) -> dict:
    return verdict_record(analyze(e))


def scan_records(lo: int, hi: int, jobs: int) -> list[dict]:
    """Records for every e in [lo, hi], ascending, independent of jobs."""
    es = list(range(lo, hi + 1))
    if jobs <= 1 or len(es) <= 1:
        return [_record_for_e(e) for e in es]
    chunk = max(1, len(es) // (jobs * 4))
    try:
        with futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_record_for_e, es, chunksize=chunk))
    except OSError:
        return [_record_for_e(e) for e in es]


def _orbit_label(a: int, z: int) -> str:
    return f"J_{a}" if z == 0 else f"J_{a}[z=1]"


def _orbits_report(e: int) -> list[str]:
    oa = orbit_analysis(e)
    v = analyze(e)
    mod = 2 * e
    lines = [f"e = {e}: isotropic subgroups generated by (t/{mod}, a*h/{mod}, z*xi/2)"]
    lines.append("  z=0: a in {" + ", ".join(str(a) for a in oa.z0) + "}")
    if oa.z1:
        lines.append("  z=1: a in {" + ", ".join(str(a) for a in oa.z1) + "}")
    else:
        lines.append("  z=1: none")
    for name, rows in oa.arrows.items():
        if name == "theta_bar":
            u = v.pell1.x % mod
            note = f"a -> {u}*a"
            if u == mod - 1:
                note += " = -a"
            header = f"  theta_bar ({note} on z=0):"
        else:
            header = "  negation (a -> -a):"
        arrows = "  ".join(
            f"{_orbit_label(*src)} -> {_orbit_label(*dst)}" for src, dst in rows
        )
        lines.append(f"{header} {arrows}")
    lines.append(f"  cone-preserving involution available: {_yesno(oa.beta_effective)}")
    for rec in v.orbit_table:
        members = "{" + ", ".join(str(a) for a in rec.members) + "}"
        lines.append(f"  class {members}: merged effectively: {_yesno(rec.effective)}")
    lines.append(
        f"  {v.hodge_classes} Hilbert-square class(es) among {v.fm_count} partner class(es)"
    )
    return lines


def _add_format_flags(sub):
    sub.add_argument("--format", "-f", choices=("table", "csv", "json"), default="table")
    sub.add_argument("--json", dest="format", action="store_const", const="json",
                     help="shorthand for --format json")
    sub.add_argument("--csv", dest="format", action="store_const", const="csv",
                     help="shorthand for --format csv")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3hilb",
        description="Exact ambiguity and automorphism analysis for Hilbert squares "
        "of degree-2e K3 surfaces of Picard rank one.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_an = subs.add_parser("analyze", help="full verdict for one e")
    p_an.add_argument("e", type=int)
    _add_format_flags(p_an)

    p_scan = subs.add_parser("scan", help="verdicts for a range of e")
    p_scan.add_argument("lo", type=int)
    p_scan.add_argument("hi", type=int)
    p_scan.add_argument("--only-ambiguous", action="store_true")
    p_scan.add_argument("--only-aut", action="store_true")
    p_scan.add_argument("--jobs", type=int, default=1)
    _add_format_flags(p_scan)

    p_pell = subs.add_parser("pell", help="minimal solution of x^2 - d*y^2 = m")
    p_pell.add_argument("d", type=int)
    p_pell.add_argument("m", type=int)
    p_pell.add_argument("--count", type=int, default=1)

    p_orb = subs.add_parser("orbits", help="isotropic subgroup orbits for one e")
    p_orb.add_argument("e", type=int)
    return parser


def _fail(message: str) -> int:
    print(f"k3hilb: error: {message}", file=sys.stderr)
    return 2


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        if args.command == "analyze":
            if not 1 <= args.e <= MAX_E:
                return _fail(f"e must lie in [1, {MAX_E}]")
            v = analyze(args.e)
            if args.format == "json":
                print(record_to_json(verdict_record(v)))
            elif args.format == "csv":
                print("\n".join(_csv_lines([verdict_record(v)])))
            else:
                print("\n".join(_analyze_table(v)))
            return 0

        if args.command == "scan":
            if not 1 <= args.lo <= args.hi <= MAX_E:
                return _fail(f"need 1 <= lo <= hi <= {MAX_E}")
            if args.jobs < 1:
                return _fail("--jobs must be >= 1")
            records = scan_records(args.lo, args.hi, args.jobs)
            if args.only_ambiguous:
                records = [r for r in records if r["strongly_ambiguous"]]
            if args.only_aut:
                records = [r for r in records if r["aut_order"] == 2]
            if args.format == "json":
                print(json.dumps([{k: r[k] for k in COLUMNS} for r in records]))
            elif args.format == "csv":
                print("\n".join(_csv_lines(records)))
            else:
                print("\n".join(_scan_table(records)))
            return 0

        if args.command == "pell":
            if args.d < 2 or is_square(args.d):
                return _fail(f"d = {args.d} must be a non-square integer >= 2")
            if args.m == 0 or abs(args.m) > MAX_ABS_M:
                return _fail(f"m must be nonzero with |m| <= {MAX_ABS_M}")
            if args.count < 1:
                return _fail("--count must be >= 1")
            problem = PellProblem(args.d, args.m)
            sol = minimal_solution(problem)
            print(_pell_line(args.d, args.m, sol))
            if sol is not None and args.count > 1:
                sols = generate_solutions(problem, sol, args.count)
                print("solutions: " + "  ".join(f"({s.x}, {s.y})" for s in sols))
            return 0

        if args.command == "orbits":
            if not 1 <= args.e <= MAX_E:
                return _fail(f"e must lie in [1, {MAX_E}]")
            print("\n".join(_orbits_report(args.e)))
            return 0
    except ConsistencyError as exc:
        print(f"k3hilb: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        return _fail(str(exc))
    raise AssertionError("unreachable")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
