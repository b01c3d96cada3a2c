"""Exhaustive evaluation of a closed, finite family of candidate models.

The family is a fixed Cartesian product rather than an open-ended DSL so that
a negative outcome is a certificate: "no member matches" quantifies over a
known candidate set. Candidate evaluations are independent pure computations
and may run in parallel; the deterministic contract is the sorted output
order (score descending, then serialized model text ascending), never the
execution order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterable, Iterator, Sequence

from .errors import NotAFailureError
from .model import (
    Affine,
    Constant,
    EvenOddAffine,
    HalfFloor,
    ModelSpec,
    ParityFlip,
    Threshold,
    TypeMap,
    Unbounded,
    format_model,
)
from .sequences import MAX_N
from .triangle import CoefficientTriangle
from .verify import RowVerdict, obstruction_report, verify_row


@dataclass(frozen=True)
class SearchFamily:
    """Finite candidate set: the product of thresholds x type maps x b-count options."""

    thresholds: tuple[Threshold, ...]
    type_maps: tuple[TypeMap, ...]
    b_count_options: tuple[tuple[int, int] | None, ...]

    @property
    def size(self) -> int:
        return len(self.thresholds) * len(self.type_maps) * len(self.b_count_options)

    def candidates(self) -> Iterator[ModelSpec]:
        for threshold in self.thresholds:
            for type_map in self.type_maps:
                for b_count in self.b_count_options:
                    yield ModelSpec(threshold, type_map, b_count)


@dataclass(frozen=True)
class SearchResult:
    """One candidate's verdicts over the requested rows.

    ``ill_typed_rows`` flags rows where the candidate produced a type index
    k < 1; such a key can never appear in a target row, so those rows are
    automatically unmatched.
    """

    model: ModelSpec
    verdicts: tuple[RowVerdict, ...]
    matched_rows: frozenset[int]
    score: int
    ill_typed_rows: frozenset[int]


def default_family() -> SearchFamily:
    """Thresholds {0,1,2,3,floor(n/2),inf} x type maps {parity flip, two fixed
    affines, all even/odd affine pairs over a in {-1,0,1,2}, b in {0,1,2,3}}
    x b-count options {unconstrained, (1,1), (1,2), (2,2)}: 6216 candidates."""
    pairs = [(a, b) for a in (-1, 0, 1, 2) for b in (0, 1, 2, 3)]
    type_maps: list[TypeMap] = [ParityFlip(), Affine(1, 1), Affine(-1, 2)]
    type_maps.extend(EvenOddAffine(even, odd) for even in pairs for odd in pairs)
    return SearchFamily(
        thresholds=(Constant(0), Constant(1), Constant(2), Constant(3), HalfFloor(), Unbounded()),
        type_maps=tuple(type_maps),
        b_count_options=(None, (1, 1), (1, 2), (2, 2)),
    )


def evaluate_candidate(
    model: ModelSpec,
    triangle: CoefficientTriangle,
    rows: Sequence[int],
    cap: int = MAX_N,
) -> SearchResult:
    """Verdicts for one candidate over the requested rows; pure and picklable."""
    verdicts = tuple(verify_row(model, triangle, n, cap=cap) for n in rows)
    matched = frozenset(v.n for v in verdicts if v.matches)
    ill_typed = frozenset(
        v.n for v in verdicts if any(k < 1 for k in v.predicted.counts)
    )
    return SearchResult(
        model=model,
        verdicts=verdicts,
        matched_rows=matched,
        score=len(matched),
        ill_typed_rows=ill_typed,
    )


def run_search(
    family: SearchFamily,
    triangle: CoefficientTriangle,
    rows: Iterable[int],
    *,
    cap: int = MAX_N,
    workers: int = 1,
) -> list[SearchResult]:
    """Evaluate every candidate and sort by score descending, then by
    serialized model text ascending. ``workers`` > 1 spreads candidate
    evaluation over processes; the merged output is identical either way."""
    row_list = tuple(rows)
    if workers > 1:
        evaluate = partial(evaluate_candidate, triangle=triangle, rows=row_list, cap=cap)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate, family.candidates(), chunksize=256))
    else:
        results = [
            evaluate_candidate(model, triangle, row_list, cap) for model in family.candidates()
        ]
    results.sort(key=lambda r: (-r.score, format_model(r.model)))
    return results


def witness(
    model: ModelSpec, triangle: CoefficientTriangle, n: int, *, cap: int = MAX_N
) -> str:
    """Human-readable reason row n fails under the model.

    Names the type-count deficit when the model cannot realize enough distinct
    types for the row, otherwise the smallest disagreeing entry. Raises
    NotAFailureError when the row actually matches.
    """
    verdict = verify_row(model, triangle, n, cap=cap)
    if verdict.matches:
        raise NotAFailureError(n)
    report = obstruction_report(model, triangle, n, cap=cap)
    if report.obstructed:
        return (
            f"type-count deficit: provided {report.provided_types} "
            f"< required {report.required_types}"
        )
    k, predicted, target = verdict.mismatch_detail[0]
    left = "absent" if predicted is None else str(predicted)
    right = "absent" if target is None else str(target)
    prefix = "ill-typed; " if k < 1 else ""
    return f"{prefix}entry mismatch at k={k}: predicted {left}, target {right}"


def result_record(result: SearchResult) -> str:
    """Stable one-line record: model text, score, matched rows (tab-separated)."""
    matched = ",".join(str(n) for n in sorted(result.matched_rows)) or "-"
    return f"{format_model(result.model)}\t{result.score}\t{matched}"
