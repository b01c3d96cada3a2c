"""Binary sequences over the two-symbol alphabet {R, B}.

A length-n sequence is packed into an integer code in [0, 2**n): position i
(1-based, reading left to right) lives at bit (n - i), with B = 1 and R = 0.
Sweeping codes upward therefore walks the sequences in lexicographic order
with R < B, which is the ordering every stream in this package guarantees.
All reported positions (first_b, last_b, parse error positions) are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import EmptySequenceError, InvalidLengthError, InvalidSymbolError

#: Hard ceiling for exhaustive enumeration: at most 2**30 cheap iterations.
MAX_N = 30


@dataclass(frozen=True)
class BinarySequence:
    """One sequence; ``code`` packs the symbols as described in the module docstring."""

    n: int
    code: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("sequence length must be >= 1")
        if not 0 <= self.code < (1 << self.n):
            raise ValueError(f"code {self.code} out of range for length {self.n}")

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(
            "B" if (self.code >> (self.n - i)) & 1 else "R" for i in range(1, self.n + 1)
        )

    @property
    def has_b(self) -> bool:
        return self.code != 0

    @property
    def b_count(self) -> int:
        return self.code.bit_count()

    def __str__(self) -> str:
        return "".join(self.symbols)

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class GapStatistics:
    """First and last B positions of a sequence that contains at least one B."""

    first_b: int
    last_b: int
    gap: int

    def __post_init__(self) -> None:
        if not 1 <= self.first_b <= self.last_b:
            raise ValueError("need 1 <= first_b <= last_b")
        if self.gap != self.last_b - self.first_b:
            raise ValueError("gap must equal last_b - first_b")


def parse_sequence(text: str) -> BinarySequence:
    """Decode the one-character-per-symbol text form, e.g. ``"BBR"``."""
    if text == "":
        raise EmptySequenceError()
    code = 0
    for position, ch in enumerate(text, start=1):
        if ch == "B":
            code = (code << 1) | 1
        elif ch == "R":
            code <<= 1
        else:
            raise InvalidSymbolError(position, ch)
    return BinarySequence(len(text), code)


def gap_statistics(seq: BinarySequence) -> GapStatistics | None:
    """Positions of the first/last B and their distance; None when there is no B."""
    if seq.code == 0:
        return None
    # Highest set bit -> first (leftmost) B; lowest set bit -> last B.
    first_b = seq.n - seq.code.bit_length() + 1
    last_b = seq.n - ((seq.code & -seq.code).bit_length() - 1)
    return GapStatistics(first_b, last_b, last_b - first_b)


def check_enumerable(n: int, cap: int = MAX_N) -> None:
    """Reject lengths outside 1..min(cap, MAX_N) before any 2**n work starts."""
    effective = min(cap, MAX_N)
    if not 1 <= n <= effective:
        raise InvalidLengthError(n, effective)


def enumerate_all(
    n: int, *, cap: int = MAX_N, start: int = 0, stop: int | None = None
) -> Iterator[BinarySequence]:
    """Yield all 2**n distinct length-n sequences in lexicographic order (R < B).

    ``start``/``stop`` bound the underlying code counter, so disjoint code
    ranges partition the stream exactly; the defaults cover the whole space.
    """
    check_enumerable(n, cap)
    space = 1 << n
    if stop is None:
        stop = space
    if not 0 <= start <= stop <= space:
        raise ValueError("code range outside the sequence space")
    for code in range(start, stop):
        yield BinarySequence(n, code)


def count_by_gap(n: int, *, cap: int = MAX_N) -> dict[int, int]:
    """Histogram {gap: count} over every length-n sequence with at least one B.

    Computed by scanning all 2**n codes, never by formula: this function is
    the ground-truth side of any closed-form cross-check. Keys are exactly
    the realized gap values, in ascending order; values sum to 2**n - 1.
    """
    check_enumerable(n, cap)
    counts = [0] * n
    for code in range(1, 1 << n):
        counts[code.bit_length() - (code & -code).bit_length()] += 1
    return {gap: c for gap, c in enumerate(counts) if c}
