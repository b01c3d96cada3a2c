"""Candidate interpretation models and their per-length type histograms.

A model has three independent knobs: a gap threshold deciding which sequences
count as valid, a type map sending (length parity, gap) to a column index k,
and an optional bound on how many B symbols a valid sequence may carry.

Models serialize to a single line, grammar::

    gap<=<c|n/2|inf>; type=<parity-paper|affine(a,b)|even(a,b)/odd(a,b)>; bcount=<min..max|*>

e.g. ``gap<=1; type=parity-paper; bcount=*`` for the canonical model.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidSequenceError, ModelParseError
from .sequences import (
    MAX_N,
    BinarySequence,
    check_enumerable,
    gap_statistics,
)


@dataclass(frozen=True)
class Constant:
    """Fixed ceiling: valid sequences satisfy gap <= c."""

    c: int

    def __post_init__(self) -> None:
        if self.c < 0:
            raise ValueError("gap threshold must be >= 0")


@dataclass(frozen=True)
class HalfFloor:
    """Length-relative ceiling gap <= floor(n/2)."""


@dataclass(frozen=True)
class Unbounded:
    """No gap restriction beyond requiring at least one B."""


Threshold = Constant | HalfFloor | Unbounded


@dataclass(frozen=True)
class ParityFlip:
    """k = 2 - gap for even n, gap + 1 for odd n (wire name ``parity-paper``)."""


@dataclass(frozen=True)
class Affine:
    """k = a*gap + b for every length."""

    a: int
    b: int


@dataclass(frozen=True)
class EvenOddAffine:
    """Separate affine pairs (a, b) for even and odd lengths."""

    even: tuple[int, int]
    odd: tuple[int, int]


TypeMap = ParityFlip | Affine | EvenOddAffine


@dataclass(frozen=True)
class ModelSpec:
    gap_threshold: Threshold
    type_map: TypeMap
    b_count: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.b_count is not None:
            lo, hi = self.b_count
            if lo < 1 or lo > hi:
                raise ValueError("b-count bounds need 1 <= min <= max")


@dataclass(frozen=True)
class TypeHistogram:
    """Per-type counts of the valid sequences at one length.

    Only realized types are stored (every count >= 1); keys ascend. The total
    of the counts equals the size of the model's valid set at this length.
    """

    counts: dict[int, int]
    n: int

    def __post_init__(self) -> None:
        if any(c < 1 for c in self.counts.values()):
            raise ValueError("histogram stores only nonzero counts")

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def canonical_model() -> ModelSpec:
    """Gap <= 1, parity-dependent type map, no bound on the number of B's."""
    return ModelSpec(Constant(1), ParityFlip())


def resolve_threshold(threshold: Threshold, n: int) -> int:
    """Concrete gap ceiling at length n. Unbounded resolves to n - 1, the
    largest gap any length-n sequence can realize, so Constant(c) with
    c >= n - 1 behaves identically to Unbounded."""
    if isinstance(threshold, Constant):
        return threshold.c
    if isinstance(threshold, HalfFloor):
        return n // 2
    return n - 1


def type_for_gap(model: ModelSpec, n: int, gap: int) -> int:
    """Type index the model assigns to any length-n sequence with this gap.

    Total over all gaps; validity is not consulted, so callers can tabulate
    the would-be type of excluded sequences as well.
    """
    tm = model.type_map
    if isinstance(tm, ParityFlip):
        return 2 - gap if n % 2 == 0 else gap + 1
    if isinstance(tm, Affine):
        a, b = tm.a, tm.b
    else:
        a, b = tm.even if n % 2 == 0 else tm.odd
    return a * gap + b


def is_valid(model: ModelSpec, seq: BinarySequence) -> bool:
    """True iff seq has >= 1 B, its gap is within the resolved threshold, and
    its B-count satisfies the model's bound (when one is set)."""
    stats = gap_statistics(seq)
    if stats is None:
        return False
    if stats.gap > resolve_threshold(model.gap_threshold, seq.n):
        return False
    if model.b_count is not None:
        lo, hi = model.b_count
        if not lo <= seq.b_count <= hi:
            return False
    return True


def type_of(model: ModelSpec, seq: BinarySequence) -> int:
    """Type index of a valid sequence; raises InvalidSequenceError otherwise."""
    if not is_valid(model, seq):
        raise InvalidSequenceError(f"{seq} is not valid under {format_model(model)}")
    stats = gap_statistics(seq)
    assert stats is not None
    return type_for_gap(model, seq.n, stats.gap)


def valid_set(model: ModelSpec, n: int, *, cap: int = MAX_N) -> list[BinarySequence]:
    """All valid length-n sequences in lexicographic order, found by scanning
    the full 2**n space."""
    check_enumerable(n, cap)
    limit = resolve_threshold(model.gap_threshold, n)
    if model.b_count is None:
        codes = [
            code
            for code in range(1, 1 << n)
            if code.bit_length() - (code & -code).bit_length() <= limit
        ]
    else:
        lo, hi = model.b_count
        codes = [
            code
            for code in range(1, 1 << n)
            if code.bit_length() - (code & -code).bit_length() <= limit
            and lo <= code.bit_count() <= hi
        ]
    return [BinarySequence(n, code) for code in codes]


@lru_cache(maxsize=64)
def _gap_bcount_table(n: int) -> tuple[tuple[tuple[int, int], int], ...]:
    # Joint ((gap, b_count) -> count) census of every length-n sequence with
    # >= 1 B; one exhaustive scan shared by all models at this length.
    counts: dict[tuple[int, int], int] = {}
    for code in range(1, 1 << n):
        key = (code.bit_length() - (code & -code).bit_length(), code.bit_count())
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


def type_histogram(model: ModelSpec, n: int, *, cap: int = MAX_N) -> TypeHistogram:
    """Counts of valid length-n sequences per assigned type, zero counts omitted."""
    check_enumerable(n, cap)
    limit = resolve_threshold(model.gap_threshold, n)
    bounds = model.b_count
    counts: dict[int, int] = {}
    for (gap, b_count), weight in _gap_bcount_table(n):
        if gap > limit:
            continue
        if bounds is not None and not bounds[0] <= b_count <= bounds[1]:
            continue
        k = type_for_gap(model, n, gap)
        counts[k] = counts.get(k, 0) + weight
    return TypeHistogram(dict(sorted(counts.items())), n)


def max_type_count(model: ModelSpec, n: int, *, cap: int = MAX_N) -> int:
    """Number of distinct type values the model realizes at length n."""
    return len(type_histogram(model, n, cap=cap).counts)


def format_model(model: ModelSpec) -> str:
    """Single-line text form of a model, per the grammar in the module docstring."""
    threshold = model.gap_threshold
    if isinstance(threshold, Constant):
        gap = str(threshold.c)
    elif isinstance(threshold, HalfFloor):
        gap = "n/2"
    else:
        gap = "inf"
    tm = model.type_map
    if isinstance(tm, ParityFlip):
        kind = "parity-paper"
    elif isinstance(tm, Affine):
        kind = f"affine({tm.a},{tm.b})"
    else:
        kind = f"even({tm.even[0]},{tm.even[1]})/odd({tm.odd[0]},{tm.odd[1]})"
    bcount = "*" if model.b_count is None else f"{model.b_count[0]}..{model.b_count[1]}"
    return f"gap<={gap}; type={kind}; bcount={bcount}"


_MODEL_RE = re.compile(
    r"^gap<=(?P<gap>\d+|n/2|inf); "
    r"type=(?P<type>parity-paper"
    r"|affine\((?P<aa>-?\d+),(?P<ab>-?\d+)\)"
    r"|even\((?P<ea>-?\d+),(?P<eb>-?\d+)\)/odd\((?P<oa>-?\d+),(?P<ob>-?\d+)\)); "
    r"bcount=(?P<bcount>\*|(?P<blo>\d+)\.\.(?P<bhi>\d+))$"
)


def parse_model(text: str) -> ModelSpec:
    """Parse the single-line model grammar; ``canonical`` is accepted as an alias."""
    if text == "canonical":
        return canonical_model()
    m = _MODEL_RE.match(text)
    if m is None:
        raise ModelParseError(f"cannot parse model text {text!r}")
    gap = m.group("gap")
    threshold: Threshold
    if gap == "n/2":
        threshold = HalfFloor()
    elif gap == "inf":
        threshold = Unbounded()
    else:
        threshold = Constant(int(gap))
    type_map: TypeMap
    if m.group("type") == "parity-paper":
        type_map = ParityFlip()
    elif m.group("aa") is not None:
        type_map = Affine(int(m.group("aa")), int(m.group("ab")))
    else:
        type_map = EvenOddAffine(
            (int(m.group("ea")), int(m.group("eb"))),
            (int(m.group("oa")), int(m.group("ob"))),
        )
    b_count = None
    if m.group("bcount") != "*":
        b_count = (int(m.group("blo")), int(m.group("bhi")))
    try:
        return ModelSpec(threshold, type_map, b_count)
    except ValueError as exc:
        raise ModelParseError(str(exc)) from exc
