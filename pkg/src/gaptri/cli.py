"""Command-line front door: enumerate, stats, verify, obstruct, search, ingest.

Exit codes: 0 = requested check passed, 1 = a verified mismatch, 2 = usage,
IO, or parse error. Identical invocations produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Callable

from .errors import GaptriError
from .model import (
    Affine,
    Constant,
    HalfFloor,
    ModelSpec,
    ParityFlip,
    format_model,
    is_valid,
    parse_model,
    resolve_threshold,
    type_for_gap,
)
from .search import default_family, result_record, run_search, witness
from .sequences import MAX_N, count_by_gap, enumerate_all, gap_statistics
from .triangle import (
    CoefficientTriangle,
    embedded_half_triangle,
    format_triangle,
    half_row_rule,
    ingest_bfile,
    parse_triangle,
)
from .verify import obstruction_record, obstruction_report, verdict_record, verify_row


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaptri",
        description="Gap-constrained binary sequence models vs integer coefficient triangles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list sequences with gap/type columns")
    p.add_argument("-n", type=int, required=True, help="sequence length")
    p.add_argument("--model", help="model text or 'canonical'")
    p.add_argument("--valid-only", action="store_true", help="list only valid sequences")
    _add_common(p)

    p = sub.add_parser("stats", help="gap distribution over all length-n sequences")
    p.add_argument("-n", type=int, required=True, help="sequence length")
    _add_common(p)

    p = sub.add_parser("verify", help="check model histograms against triangle rows")
    p.add_argument("--model", default="canonical", help="model text or 'canonical'")
    _add_triangle_source(p)
    p.add_argument("--rows", help="row range a..b (default: every triangle row)")
    p.add_argument("--out", help="write one machine-readable record per row to this file")
    _add_common(p)

    p = sub.add_parser("obstruct", help="type-count obstruction reports per row")
    p.add_argument("--model", default="canonical", help="model text or 'canonical'")
    _add_triangle_source(p)
    p.add_argument("--rows", help="row range a..b (default: every triangle row)")
    p.add_argument("--out", help="write one machine-readable record per row to this file")
    _add_common(p)

    p = sub.add_parser("search", help="evaluate the candidate family against a triangle")
    p.add_argument("--family", default="default", help="candidate family name")
    _add_triangle_source(p)
    p.add_argument("--rows", help="row range a..b (default: every triangle row)")
    p.add_argument("--top", type=int, default=20, help="how many ranked candidates to print")
    p.add_argument("--out", help="write every candidate's record to this file")
    _add_common(p)

    p = sub.add_parser("ingest", help="read a triangle or b-file, print canonical form")
    _add_triangle_source(p)
    p.add_argument("--out", help="write the canonical triangle text to this file")
    _add_common(p)

    return parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "tsv"), default="table")
    p.add_argument("--cap", type=int, default=MAX_N, help=f"enumeration cap, at most {MAX_N}")


def _add_triangle_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--triangle", default="embedded", help="triangle file path or 'embedded'")
    p.add_argument("--bfile", help="OEIS b-file path (requires --row-rule)")
    p.add_argument("--row-rule", help="'floor(n/2)+1' or 'explicit:l1,l2,...'")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if not 1 <= args.cap <= MAX_N:
            raise ValueError(f"--cap must be within 1..{MAX_N}")
        text, code = _COMMANDS[args.command](args)
    except (GaptriError, ValueError, OSError) as exc:
        print(f"gaptri: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


def run() -> None:
    raise SystemExit(main())


def _render(headers: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "tsv":
        return "".join("\t".join(cells) + "\n" for cells in [headers] + rows)
    widths = [len(h) for h in headers]
    for cells in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, cells)]
    lines = []
    for cells in [headers] + rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _threshold_text(model: ModelSpec, n: int) -> str:
    if isinstance(model.gap_threshold, Constant):
        return str(model.gap_threshold.c)
    if isinstance(model.gap_threshold, HalfFloor):
        return str(n // 2)
    return "inf"


def _k_header(model: ModelSpec, n: int) -> str:
    tm = model.type_map
    if isinstance(tm, ParityFlip):
        return "k=2-gap" if n % 2 == 0 else "k=gap+1"
    if isinstance(tm, Affine):
        a, b = tm.a, tm.b
    else:
        a, b = tm.even if n % 2 == 0 else tm.odd
    return f"k={a}*gap{b:+d}"


def _cmd_enumerate(args: argparse.Namespace) -> tuple[str, int]:
    model = parse_model(args.model) if args.model else None
    if args.valid_only and model is None:
        raise ValueError("--valid-only requires --model")
    n = args.n
    headers = ["sequence", "has_B"]
    show_bcount = model is not None and model.b_count is not None
    if show_bcount:
        headers.append("#B")
    headers += ["first_B", "last_B", "gap"]
    if model is not None:
        headers += [f"gap<={_threshold_text(model, n)}?", _k_header(model, n), "valid?"]
        limit = resolve_threshold(model.gap_threshold, n)
    body = []
    for seq in enumerate_all(n, cap=args.cap):
        stats = gap_statistics(seq)
        valid = model is not None and is_valid(model, seq)
        if args.valid_only and not valid:
            continue
        cells = [str(seq), "Yes" if stats else "No"]
        if show_bcount:
            cells.append(str(seq.b_count))
        if stats is None:
            cells += ["--", "--", "--"]
        else:
            cells += [str(stats.first_b), str(stats.last_b), str(stats.gap)]
        if model is not None:
            if stats is None:
                cells += ["--", "--", "No"]
            else:
                cells += [
                    "Yes" if stats.gap <= limit else "No",
                    str(type_for_gap(model, n, stats.gap)),
                    "Yes" if valid else "No",
                ]
        body.append(cells)
    return _render(headers, body, args.format), 0


def _cmd_stats(args: argparse.Namespace) -> tuple[str, int]:
    counts = count_by_gap(args.n, cap=args.cap)
    body = [[str(gap), str(count)] for gap, count in counts.items()]
    return _render(["gap", "count"], body, args.format), 0


def _cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    model = parse_model(args.model)
    triangle = _load_triangle(args)
    lo, hi = _rows_range(args.rows, triangle)
    verdicts = [verify_row(model, triangle, n, cap=args.cap) for n in range(lo, hi + 1)]
    _write_out(args.out, "".join(verdict_record(v) + "\n" for v in verdicts))
    body = []
    for v in verdicts:
        predicted = ",".join(f"{k}:{c}" for k, c in v.predicted.counts.items()) or "-"
        target = ",".join(str(e) for e in v.target)
        detail = "; ".join(
            f"k={k}: {_cell(p)} vs {_cell(t)}" for k, p, t in v.mismatch_detail
        ) or "-"
        body.append([str(v.n), "yes" if v.matches else "no", predicted, target, detail])
    text = _render(["row", "match", "predicted", "target", "detail"], body, args.format)
    return text, 0 if all(v.matches for v in verdicts) else 1


def _cmd_obstruct(args: argparse.Namespace) -> tuple[str, int]:
    model = parse_model(args.model)
    triangle = _load_triangle(args)
    lo, hi = _rows_range(args.rows, triangle)
    reports = [obstruction_report(model, triangle, n, cap=args.cap) for n in range(lo, hi + 1)]
    _write_out(args.out, "".join(obstruction_record(r) + "\n" for r in reports))
    body = [
        [str(r.n), str(r.provided_types), str(r.required_types), "yes" if r.obstructed else "no"]
        for r in reports
    ]
    return _render(["row", "provided", "required", "obstructed"], body, args.format), 0


def _cmd_search(args: argparse.Namespace) -> tuple[str, int]:
    if args.family != "default":
        raise ValueError(f"unknown family {args.family!r}")
    triangle = _load_triangle(args)
    lo, hi = _rows_range(args.rows, triangle)
    rows = range(lo, hi + 1)
    results = run_search(default_family(), triangle, rows, cap=args.cap)
    _write_out(args.out, "".join(result_record(r) + "\n" for r in results))
    body = []
    for rank, result in enumerate(results[: max(args.top, 0)], start=1):
        matched = ",".join(str(n) for n in sorted(result.matched_rows)) or "-"
        failure = "-"
        unmatched = [n for n in rows if n not in result.matched_rows]
        if unmatched:
            failure = f"row {unmatched[0]}: " + witness(
                result.model, triangle, unmatched[0], cap=args.cap
            )
        body.append(
            [str(rank), format_model(result.model), str(result.score), matched, failure]
        )
    text = _render(["rank", "model", "score", "matched", "first_failure"], body, args.format)
    return text, 0


def _cmd_ingest(args: argparse.Namespace) -> tuple[str, int]:
    triangle = _load_triangle(args)
    text = format_triangle(triangle)
    if args.out:
        _write_out(args.out, text)
        return "", 0
    return text, 0


def _cell(value: int | None) -> str:
    return "absent" if value is None else str(value)


def _write_out(path: str | None, content: str) -> None:
    if path:
        Path(path).write_text(content, encoding="utf-8")


def _load_triangle(args: argparse.Namespace) -> CoefficientTriangle:
    if args.bfile is not None:
        if args.row_rule is None:
            raise ValueError("--bfile requires --row-rule")
        rule = _parse_row_rule(args.row_rule)
        with open(args.bfile, encoding="utf-8") as handle:
            return ingest_bfile(handle, rule)
    if args.triangle == "embedded":
        return embedded_half_triangle()
    with open(args.triangle, encoding="utf-8") as handle:
        return parse_triangle(handle)


def _parse_row_rule(text: str) -> Callable[[int], int]:
    if text == "floor(n/2)+1":
        return half_row_rule
    if text.startswith("explicit:"):
        try:
            lengths = tuple(int(tok) for tok in text[len("explicit:") :].split(","))
        except ValueError:
            raise ValueError(f"bad explicit row rule {text!r}") from None
        if not lengths:
            raise ValueError("explicit row rule needs at least one length")

        def rule(n: int) -> int:
            if n > len(lengths):
                raise ValueError(f"explicit row rule covers only {len(lengths)} rows")
            return lengths[n - 1]

        return rule
    raise ValueError(f"unknown row rule {text!r}")


def _rows_range(text: str | None, triangle: CoefficientTriangle) -> tuple[int, int]:
    if text is None:
        if triangle.height == 0:
            raise ValueError("triangle has no rows")
        return 1, triangle.height
    match = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if match is None:
        raise ValueError(f"cannot parse row range {text!r}; expected a..b")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) else lo
    if lo < 1 or hi < lo:
        raise ValueError("row range needs 1 <= a <= b")
    return lo, hi


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "stats": _cmd_stats,
    "verify": _cmd_verify,
    "obstruct": _cmd_obstruct,
    "search": _cmd_search,
    "ingest": _cmd_ingest,
}
