"""kummergaps command line: gaps, puregaps, codes, verify."""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Sequence

import numpy as np

from . import closedform
from .closedform import PureGapBox
from .codes import (
    CONSTRUCTIONS,
    TABLES,
    CodeDesign,
    catalog,
    code_from_box,
    custom_family,
    reproduce_table,
)
from .curve import INF, KummerCurve, new_curve, parse_place, place_label, selection
from .errors import KummerGapsError, ParameterError, PlaceError, VerificationError
from .gaps import gap_set
from .puregaps import (
    bottom_pure_gaps,
    box_points,
    full_pure_gap_set,
    is_pure_gap_oracle,
    pure_gap_mask,
    pure_gap_mask_oracle,
    scan_pure_gap_set,
)

THREADS_ENV = "KUMMERGAPS_THREADS"


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _place_list(text: str) -> list[int]:
    places = [parse_place(x) for x in text.split(",") if x.strip()]
    if len(set(places)) != len(places):
        raise PlaceError(f"repeated place in {text!r}")
    return places


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------- output


def _csv_text(rows: Sequence[Sequence[object]], header: Sequence[str] | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _aligned(rows: Sequence[Sequence[object]], header: Sequence[str]) -> str:
    cells = [[str(x) for x in header]] + [["" if x is None else str(x) for x in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = [" ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _json_text(obj: object) -> str:
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def _place_token(place: int) -> int | str:
    return "inf" if place == INF else place


# ---------------------------------------------------------------- gaps / puregaps


def _curve(args) -> KummerCurve:
    return new_curve(args.m, args.lambdas)


def cmd_gaps(args) -> str:
    c = _curve(args)
    (place,) = _place_list(args.place)
    c.check_place(place)
    members = list(gap_set(c, place, self_check=args.verify == "oracle"))
    if args.format == "json":
        return _json_text(members)
    if args.format == "csv":
        return _csv_text([members])
    return " ".join(map(str, members)) + "\n"


def _verify_pure(c: KummerCurve, sel: tuple[int, ...], tuples: list[tuple[int, ...]], bottom_only: bool) -> None:
    for a in tuples:
        if not is_pure_gap_oracle(c, sel, a):
            raise VerificationError(f"{a} at {sel} on {c} fails the oracle")
    if bottom_only:
        grid = box_points([1] * len(sel), [c.m - 1] * len(sel))
        scanned = [tuple(int(x) for x in row) for row in grid[pure_gap_mask_oracle(c, sel, grid)]]
    else:
        scanned = scan_pure_gap_set(c, sel)
    missing = sorted(set(scanned) - set(tuples))
    if missing:
        raise VerificationError(f"{missing[0]} at {sel} on {c} is a pure gap but was not produced")


def cmd_puregaps(args) -> str:
    c = _curve(args)
    sel = selection(c, _place_list(args.places))
    if args.bottom_only:
        tuples = list(bottom_pure_gaps(c, sel).tuples)
    else:
        tuples = full_pure_gap_set(c, sel)
    if args.verify == "oracle":
        _verify_pure(c, sel, tuples, args.bottom_only)
    labels = [f"Q{place_label(p)}" for p in sel]
    if args.format == "json":
        return _json_text({
            "curve": {"m": c.m, "lambdas": list(c.lambdas)},
            "places": [_place_token(p) for p in sel],
            "tuples": [list(a) for a in tuples],
        })
    if args.format == "csv":
        return _csv_text(tuples, labels if args.header else None)
    return _aligned(tuples, labels)


# ---------------------------------------------------------------- codes

DESIGN_COLUMNS = ("q", "t", "m", "s", "k_or_c", "n", "k_dim", "d_lower")


def _design_row(d: CodeDesign, s: int | None, k: int | None) -> list[object]:
    p = d.family.params
    return [p.get("q"), p.get("t"), d.family.curve.m, s, k, d.n, d.k_dim, d.d_lower]


def _emit_designs(args, rows: list[list[object]], header: Sequence[str], designs: list[CodeDesign]) -> str:
    if args.format == "json":
        return _json_text([
            {
                **dict(zip(header, row)),
                "family": d.family.label,
                "places": [_place_token(p) for p in d.selection],
                "g_coeffs": list(d.g_coeffs),
            }
            for row, d in zip(rows, designs)
        ])
    if args.format == "csv":
        return _csv_text([["" if x is None else x for x in row] for row in rows], header if args.header else None)
    return _aligned(rows, header)


def _warn(msg: str) -> None:
    print(f"kummergaps: warning: {msg}", file=sys.stderr)


def cmd_codes(args) -> str:
    if args.table is not None:
        rows, designs = [], []
        header = DESIGN_COLUMNS + ("reported_improvement",)

        def skipped(values, exc):
            _warn(f"table {args.table} row {values} skipped: {exc}")

        for row in reproduce_table(args.table, on_error=skipped):
            rows.append(_design_row(row.design, row.s, row.k) + [row.reported_improvement])
            designs.append(row.design)
        return _emit_designs(args, rows, header, designs)

    if args.family is None:
        return _custom_code(args)

    params = {"q": args.q, "t": args.t, "m": args.m}
    fam = catalog(args.family, **{k: v for k, v in params.items() if v is not None})
    for note in fam.notes:
        _warn(note)
    if args.construction is None or args.s is None:
        raise ParameterError("codes --family needs --construction and --s")
    shape = args.c if args.construction == 3 else args.k
    if shape is None:
        raise ParameterError("construction 3 needs --c; constructions 1 and 2 need --k")
    design = CONSTRUCTIONS[args.construction](fam, args.s, shape, n=args.n)
    return _emit_designs(args, [_design_row(design, args.s, shape)], DESIGN_COLUMNS, [design])


def _custom_code(args) -> str:
    missing = [f"--{x}" for x in ("m", "lambdas", "N", "places", "lower", "upper") if getattr(args, x) is None]
    if missing:
        raise ParameterError(f"custom code design needs {', '.join(missing)} (or use --family / --table)")
    fam = custom_family(new_curve(args.m, args.lambdas), args.N)
    box = PureGapBox(tuple(_place_list(args.places)), tuple(args.lower), tuple(args.upper))
    design = code_from_box(fam, box, n=args.n)
    header = ("m", "places", "g_coeffs", "n", "k_dim", "d_lower")
    row = [
        fam.curve.m,
        " ".join(place_label(p) for p in design.selection),
        " ".join(map(str, design.g_coeffs)),
        design.n,
        design.k_dim,
        design.d_lower,
    ]
    return _emit_designs(args, [row], header, [design])


# ---------------------------------------------------------------- verify

MaskFn = Callable[[KummerCurve, Sequence[int], np.ndarray], np.ndarray]


@dataclass
class VerifyReport:
    curves: int = 0
    criterion_checks: int = 0
    closedform_checks: int = 0
    gap_count_checks: int = 0
    failures: list[str] = field(default_factory=list)

    def merge(self, other: "VerifyReport") -> None:
        self.curves += other.curves
        self.criterion_checks += other.criterion_checks
        self.closedform_checks += other.closedform_checks
        self.gap_count_checks += other.gap_count_checks
        self.failures.extend(other.failures)

    def lines(self) -> list[str]:
        return [
            f"curves {self.curves}",
            f"criterion-vs-oracle {self.criterion_checks}",
            f"closedform-vs-engine {self.closedform_checks}",
            f"gap-count-vs-genus {self.gap_count_checks}",
            f"failures {len(self.failures)}",
        ]


def sample_curves(m: int, r: int, max_lambda: int, count: int, rng: random.Random) -> list[KummerCurve]:
    """Up to ``count`` distinct curves with r multiplicities drawn from [-max_lambda, max_lambda] minus 0."""
    pool = [x for x in range(-max_lambda, max_lambda + 1) if x]
    seen: dict[tuple[int, ...], KummerCurve] = {}
    for _ in range(count * 4):
        if len(seen) >= count:
            break
        lams = tuple(rng.choice(pool) for _ in range(r))
        if lams not in seen:
            seen[lams] = new_curve(m, lams)
    return list(seen.values())


def equal_lambdas(m: int, r: int, max_lambda: int) -> list[int]:
    return [lam for lam in range(1, max_lambda + 1) if gcd(r * lam, m) == 1]


def _check_criterion(c: KummerCurve, max_s: int, criterion: MaskFn, rep: VerifyReport) -> None:
    places = c.totally_ramified_places()
    for size in range(1, min(max_s + 1, len(places)) + 1):
        grid = box_points([0] * size, [2 * c.m] * size)
        for sel in itertools.combinations(places, size):
            fast = criterion(c, sel, grid)
            slow = pure_gap_mask_oracle(c, sel, grid)
            rep.criterion_checks += len(grid)
            bad = np.flatnonzero(fast != slow)
            if bad.size:
                a = tuple(int(x) for x in grid[bad[0]])
                rep.failures.append(
                    f"criterion-vs-oracle: curve m={c.m} lambdas={list(c.lambdas)} places={list(sel)} tuple={a} "
                    f"criterion={bool(fast[bad[0]])} oracle={bool(slow[bad[0]])}"
                )
                return


def _check_gap_count(c: KummerCurve, rep: VerifyReport) -> None:
    for p in c.totally_ramified_places():
        rep.gap_count_checks += 1
        got = len(gap_set(c, p))
        if got != c.genus:
            rep.failures.append(
                f"gap-count-vs-genus: curve m={c.m} lambdas={list(c.lambdas)} place={place_label(p)} "
                f"|G|={got} genus={c.genus}"
            )


def closedform_cases(m: int, r: int, max_s: int):
    """(name, selection, closed-form callable) for every closed form that applies to (m, r)."""
    for s in range(1, min(max_s, r) + 1):
        if s >= 2:
            yield "finite", tuple(range(1, s + 1)), lambda s=s: closedform.pure_gaps_finite(m, r, s)
        yield "infinity", (INF,) + tuple(range(1, s + 1)), lambda s=s: closedform.pure_gaps_with_infinity_general(m, r, s)
        if (r + 1) % m == 0:
            yield "infinity-v", (INF,) + tuple(range(1, s + 1)), lambda s=s: closedform.pure_gaps_with_infinity_v(m, r, s)


def _check_closedform(c: KummerCurve, max_s: int, rep: VerifyReport) -> None:
    m, r = c.m, c.r
    for name, sel, build in closedform_cases(m, r, max_s):
        if len(sel) > max_s + 1:
            continue
        rep.closedform_checks += 1
        expected = build()
        got = full_pure_gap_set(c, sel)
        if expected != got:
            diff = sorted(set(expected) ^ set(got))
            rep.failures.append(
                f"closedform-vs-engine ({name}): curve m={m} lambdas={list(c.lambdas)} places={list(sel)} "
                f"first difference {diff[0]}"
            )


def _verify_mr(m: int, r: int, args, criterion: MaskFn) -> VerifyReport:
    rep = VerifyReport()
    rng = random.Random(f"{args.seed}:{m}:{r}")
    for c in sample_curves(m, r, args.max_lambda, args.samples, rng):
        rep.curves += 1
        _check_gap_count(c, rep)
        _check_criterion(c, args.max_s, criterion, rep)
    if gcd(m, r) == 1:
        for lam in equal_lambdas(m, r, args.max_lambda)[:2]:
            c = new_curve(m, [lam] * r)
            rep.curves += 1
            _check_closedform(c, args.max_s, rep)
    return rep


def run_verify(args, criterion: MaskFn | None = None) -> VerifyReport:
    criterion = criterion or pure_gap_mask
    grid = [(m, r) for m in range(2, args.max_m + 1) for r in range(1, args.max_r + 1)]
    report = VerifyReport()
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        for rep in pool.map(lambda mr: _verify_mr(*mr, args, criterion), grid):
            report.merge(rep)
    return report


def cmd_verify(args) -> str:
    report = run_verify(args)
    if report.failures:
        for line in report.lines():
            print(line, file=sys.stderr)
        raise VerificationError(report.failures[0])
    return "\n".join(report.lines()) + "\n"


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kummergaps", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def curve_args(p, required=True):
        p.add_argument("--m", type=int, required=required, help="Kummer exponent")
        p.add_argument("--lambdas", type=_int_list, required=required, help="finite multiplicities, e.g. 3,7,7")

    def fmt_args(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="csv")
        p.add_argument("--header", action="store_true", help="add a CSV header row")

    p = sub.add_parser("gaps", help="Weierstrass gaps at one totally ramified place")
    curve_args(p)
    p.add_argument("--place", required=True, help="'inf' or a 1-based finite index")
    p.add_argument("--verify", choices=("none", "oracle"), default="none")
    fmt_args(p)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("puregaps", help="pure gaps at several totally ramified places")
    curve_args(p)
    p.add_argument("--places", required=True, help="comma-separated, e.g. inf,1,2")
    p.add_argument("--bottom-only", action="store_true", help="only tuples in [1, m-1]^(s+1)")
    p.add_argument("--verify", choices=("none", "oracle"), default="none")
    fmt_args(p)
    p.set_defaults(func=cmd_puregaps)

    p = sub.add_parser("codes", help="multi-point AG code parameters")
    p.add_argument("--table", type=int, choices=sorted(TABLES))
    p.add_argument("--family", help="f1, hq (alias f2), f3 or record")
    p.add_argument("--q", type=int)
    p.add_argument("--t", type=int)
    curve_args(p, required=False)
    p.add_argument("--construction", type=int, choices=sorted(CONSTRUCTIONS))
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--n", type=int, help="code length (default: largest allowed)")
    p.add_argument("--N", type=int, help="rational places of a custom curve")
    p.add_argument("--places", help="box places for a custom design")
    p.add_argument("--lower", type=_int_list, help="box lower corner")
    p.add_argument("--upper", type=_int_list, help="box upper corner")
    fmt_args(p)
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("verify", help="cross-check fast paths against oracles")
    p.add_argument("--max-m", type=int, default=7)
    p.add_argument("--max-r", type=int, default=5)
    p.add_argument("--max-s", type=int, default=2, help="selections of up to s+1 places")
    p.add_argument("--max-lambda", type=int, default=9)
    p.add_argument("--samples", type=int, default=3, help="random curves per (m, r)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except KummerGapsError as exc:
        print(f"kummergaps: error [{exc.code}]: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
