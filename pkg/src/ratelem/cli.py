"""Command-line front end: ``ratelem lemmas | spectrum | classify``.

Exit status is 0 when everything checked holds, 1 on a mismatch and 2 on
invalid options or unparseable input.  Reports go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import DEFAULT_MAX_ORDER, REPORT_VERSION, TheoremId, default_jobs, verify
from .elements import ElementError, parse_element, singular_count
from .lambdas import identity_suite
from .spectra import (
    UnsupportedShape,
    WeightSyntaxError,
    delta_nu,
    parse_weight,
    sp2_eig1_absent,
    spectrum,
)

GRAMMAR = """\
element:  <family>:<dim>:<term>+<term>+...
          family a (SL_dim), c (Sp_dim), b (Spin_dim); term phi(m)[*count] or 1[*count]
          e.g. a:8:phi(5)+phi(3)*2   b:11:phi(5)+phi(9)+1   c:10:phi(5)+phi(9)
weight:   fund:<i> | spin | sum:<i>,<j> | <weight>*<weight>
          i, j are integers or the symbols n, n-1 (n = rank parameter)
"""


class UsageError(Exception):
    pass


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _odd_bound(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if m < 3 or m % 2 == 0:
        raise argparse.ArgumentTypeError(f"bound must be odd and at least 3, got {m}")
    return m


def _rank_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        lo, hi = (int(parts[0]), int(parts[-1])) if len(parts) in (1, 2) else (None, None)
    except ValueError:
        lo = hi = None
    if lo is None or lo < 1 or lo > hi:
        raise argparse.ArgumentTypeError(f"ranks must look like 2..14, got {text!r}")
    return lo, hi


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _non_negative(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


# --- lemmas --------------------------------------------------------------------


def run_lemmas(args: argparse.Namespace, out) -> int:
    results = identity_suite(args.max_m)
    record = {"report_version": REPORT_VERSION, "max_m": args.max_m, "identities": {}}
    ok = True
    for name, per_m in results.items():
        failures = [m for m, v in per_m.items() if v is False]
        ok = ok and not failures
        record["identities"][name] = {
            "holds": not failures,
            "checked": [m for m, v in per_m.items() if v is not None],
            "failures": failures,
            "not_applicable": [m for m, v in per_m.items() if v is None],
        }
    record["ok"] = ok
    if args.format == "json":
        out.write(_dump(record))
    else:
        out.write(f"identity suite, odd m in 3..{args.max_m}\n")
        for name, row in record["identities"].items():
            status = "ok" if row["holds"] else "FAIL at m=" + ",".join(map(str, row["failures"]))
            out.write(f"  {name:<20} {status}  ({len(row['checked'])} moduli checked)\n")
        out.write("all identities hold\n" if ok else "identity failures found\n")
    return 0 if ok else 1


# --- spectrum ------------------------------------------------------------------


def run_spectrum(args: argparse.Namespace, out) -> int:
    g = parse_element(args.element)
    n = g.group.n
    if args.criterion == "si-delta":
        if g.group.family != "C" or args.p != 2:
            raise UsageError("--criterion si-delta needs a symplectic element and -p 2")
        coeffs = _coeffs(args.coeffs, n) if args.coeffs else _coeffs_from_weight(args.weight, n)
        absent = sp2_eig1_absent(g, coeffs)
        record = {
            "report_version": REPORT_VERSION,
            "element": g.syntax,
            "coeffs": list(coeffs),
            "p": 2,
            "delta_nu": delta_nu(coeffs[:-1]),
            "si": singular_count(g),
            "has_one": not absent,
        }
        if args.format == "json":
            out.write(_dump(record))
        else:
            out.write(
                f"{g.syntax} coeffs={','.join(map(str, coeffs))}: delta={record['delta_nu']}, "
                f"Si={record['si']}, has_one={str(not absent).lower()}\n"
            )
        return 0

    if args.weight is None:
        raise UsageError("-w/--weight is required")
    weight = parse_weight(args.weight, n)
    s = spectrum(g, weight, args.p)
    record = {
        "report_version": REPORT_VERSION,
        "element": g.syntax,
        "weight": str(weight),
        "p": args.p,
        "modulus": s.modulus,
        "residues": sorted(s.values),
        "has_one": s.has_one,
        "is_full": s.is_full,
        "exact": s.exact,
        "label": s.label,
    }
    if args.format == "json":
        out.write(_dump(record))
    else:
        line = f"{s}, has_one={str(s.has_one).lower()}, is_full={str(s.is_full).lower()}"
        if s.label:
            line += f", case={s.label}"
        if not s.exact:
            line += ", exact=false (lower bound)"
        out.write(line + "\n")
    return 0


def _coeffs(text: str, n: int) -> tuple[int, ...]:
    try:
        coeffs = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise UsageError(f"--coeffs must be comma-separated integers, got {text!r}")
    if len(coeffs) != n:
        raise UsageError(f"--coeffs needs {n} values a_1..a_{n}, got {len(coeffs)}")
    return coeffs


def _coeffs_from_weight(text: str | None, n: int) -> tuple[int, ...]:
    if text is None:
        raise UsageError("si-delta needs --coeffs or -w")
    w = parse_weight(text, n)
    parts = w.parts if hasattr(w, "parts") else (w,)
    coeffs = [0] * n
    for part in parts:
        for i in (part.i,) if not hasattr(part, "j") else (part.i, part.j):
            coeffs[i - 1] += 1
    return tuple(coeffs)


# --- classify ------------------------------------------------------------------


def run_classify(args: argparse.Namespace, out) -> int:
    theorem = TheoremId(args.theorem)
    start = time.perf_counter()
    report = verify(theorem, args.ranks, args.max_order, args.p, args.jobs)
    record = report.to_record()
    if args.timing:
        record["wall_time"] = round(time.perf_counter() - start, 3)
    if args.format == "json":
        out.write(_dump(record))
    else:
        _classify_text(record, out)
    return 0 if report.ok else 1


def _classify_text(rec: dict, out) -> None:
    b = rec["bounds"]
    out.write(
        f"theorem {rec['theorem']}: ranks {b['ranks'][0]}..{b['ranks'][1]}, "
        f"max_order {b['max_order']}, p {b['p']}\n"
    )
    out.write(f"  elements {rec['elements_checked']}, cases {rec['cases_checked']}\n")
    out.write(f"  mismatches {len(rec['mismatches'])}\n")
    for m in rec["mismatches"]:
        out.write(f"    MISMATCH {json.dumps(m, sort_keys=True)}\n")
    out.write(f"  eigenvalue-1-free cases {len(rec['exceptions'])}\n")
    for row in rec["table"]:
        flag = "" if row["in_window"] else "  (outside window)"
        out.write(f"    {row['hits']:>6}  {row['anchor']}{flag}\n")
    if "regenerated" in rec:
        regen = rec["regenerated"]
        out.write(
            f"  regenerated tables D1={regen['D1']} D2={regen['D2']} E={regen['E']} "
            f"match={str(regen['match']).lower()}\n"
        )
    if rec["findings"]:
        out.write(f"  findings {len(rec['findings'])}\n")
        for f in rec["findings"]:
            out.write(f"    {f}\n")
    if "wall_time" in rec:
        out.write(f"  wall_time {rec['wall_time']}s\n")
    out.write("  " + rec["window_note"] + "\n")
    out.write("OK\n" if rec["ok"] else "FAILED\n")


# --- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratelem",
        description="Eigenvalue 1 of rational odd-order semisimple elements in classical groups.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lem = sub.add_parser("lemmas", help="check the root-of-unity identities")
    p_lem.add_argument("--max-m", type=_odd_bound, default=DEFAULT_MAX_ORDER)
    p_lem.add_argument("--format", choices=("text", "json"), default="text")

    p_spec = sub.add_parser(
        "spectrum",
        help="eigenvalues of one element in one representation",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_spec.add_argument("-e", "--element", required=True)
    p_spec.add_argument("-w", "--weight")
    p_spec.add_argument("-p", type=_non_negative, default=0, help="characteristic (default 0)")
    p_spec.add_argument("--criterion", choices=("si-delta",))
    p_spec.add_argument("--coeffs", help="a_1,...,a_n for --criterion si-delta")
    p_spec.add_argument("--format", choices=("text", "json"), default="text")

    p_cls = sub.add_parser("classify", help="verify a classification table exhaustively")
    p_cls.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    p_cls.add_argument("--ranks", type=_rank_range, help="n range, e.g. 2..14 (default per theorem)")
    p_cls.add_argument("--max-order", type=_odd_bound, default=DEFAULT_MAX_ORDER)
    p_cls.add_argument("-p", type=_non_negative, default=None, help="characteristic (default 0, or 2 for char2 tables)")
    p_cls.add_argument("--jobs", type=_positive, default=None, help="worker processes (default $RATELEM_JOBS or 1)")
    p_cls.add_argument("--format", choices=("text", "json"), default="text")
    p_cls.add_argument("--timing", action="store_true", help="add wall_time to the report")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) is None:
        args.jobs = default_jobs()
    runner = {"lemmas": run_lemmas, "spectrum": run_spectrum, "classify": run_classify}[args.command]
    try:
        return runner(args, sys.stdout)
    except (UsageError, ElementError, UnsupportedShape, WeightSyntaxError, ValueError) as exc:
        print(f"ratelem {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
