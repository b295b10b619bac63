"""Extremal balanced independent sets of Q_n, built by residue of n mod 4."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _bitset
from .cube_core import (
    DENSE_MAX_N,
    OutOfRangeError,
    binomial,
    check_vertex,
    format_vertex,
)
from .families import (
    Family,
    SegmentSpec,
    co_neighborhood,
    family_items,
    is_balanced,
    parity_class,
    segment,
)
from .report import Check, VerificationReport

COUNT_MAX_N = 63


def extremal_size(n: int) -> int:
    """Size of the largest balanced independent set in Q_n."""
    if not 1 <= n <= COUNT_MAX_N:
        raise OutOfRangeError(f"extremal_size needs 1 <= n <= {COUNT_MAX_N}, got {n}")
    if n % 2 == 0:
        return (1 << (n - 1)) - 2 * binomial(n - 2, (n - 2) // 2)
    return (1 << (n - 1)) - binomial(n - 1, (n - 1) // 2)


class Term(NamedTuple):
    """``{prefix | x : x an r-subset of {start..n}}``; r < 0 or too large means empty."""

    prefix: int
    start: int
    r: int


def _layers(lo: int, hi: int) -> list[Term]:
    return [Term(0, 1, r) for r in range(lo, hi + 1, 2)]


def case_terms(n: int) -> tuple[list[Term], list[Term]]:
    """Terms making up A (even) and B (odd) for ground size n."""
    k, case = divmod(n, 4)
    if case == 0:
        A = _layers(0, 2 * k - 2) + [Term(0b11, 3, 2 * k - 2)]
        B = [Term(0b1, 3, 2 * k), Term(0, 2, 2 * k + 1)] + _layers(2 * k + 3, n - 1)
    elif case == 1:
        A = _layers(0, 2 * k - 2) + [Term(0b1, 2, 2 * k - 1)]
        B = [Term(0, 2, 2 * k + 1)] + _layers(2 * k + 3, n)
    elif case == 2:
        A = _layers(0, 2 * k - 2) + [Term(0b1, 2, 2 * k - 1), Term(0b10, 3, 2 * k - 1)]
        B = [Term(0, 3, 2 * k + 1)] + _layers(2 * k + 3, n - 1)
    else:
        A = _layers(0, 2 * k)
        B = _layers(2 * k + 3, n)
    return A, B


def term_count(n: int, t: Term) -> int:
    if t.r < 0:
        return 0
    return binomial(n - t.start + 1, t.r)


def pair_counts(n: int) -> tuple[int, int]:
    """|A| and |B| from binomial sums alone, valid for 1 <= n <= 63."""
    if not 1 <= n <= COUNT_MAX_N:
        raise OutOfRangeError(f"pair_counts needs 1 <= n <= {COUNT_MAX_N}, got {n}")
    A, B = case_terms(n)
    return sum(term_count(n, t) for t in A), sum(term_count(n, t) for t in B)


def prefix_layer(prefix: int, start: int, n: int, r: int) -> Family:
    """All sets ``prefix | x`` with ``x`` an r-subset of ``{start, ..., n}``.

    A negative ``r`` gives the empty family.
    """
    check_vertex(prefix, n)
    if start < 1 or start > n + 1:
        raise ValueError(f"start={start} must lie in 1..{n + 1}")
    if prefix >> (start - 1):
        raise ValueError(f"prefix {format_vertex(prefix)} must lie below start={start}")
    if r > n - start + 1:
        raise ValueError(f"r={r} exceeds the {n - start + 1} available elements")
    return Family._from_words(n, _bitset.prefix_layer(n, prefix, start, r))


def _materialize(n: int, terms: list[Term]) -> Family:
    words = _bitset.empty(n)
    for t in terms:
        words |= _bitset.prefix_layer(n, t.prefix, t.start, t.r)
    return Family._from_words(n, words)


@dataclass(frozen=True, eq=False)
class ExtremalPair:
    n: int
    case: int
    k: int
    A: Family
    B: Family

    @property
    def size(self) -> int:
        return len(self.A) + len(self.B)

    def to_record(self, form: str = "sets") -> dict:
        return {
            "n": self.n,
            "case": self.case,
            "A": family_items(self.A, form),
            "B": family_items(self.B, form),
            "size": self.size,
        }


def construct_pair(n: int) -> ExtremalPair:
    if not 1 <= n <= DENSE_MAX_N:
        raise OutOfRangeError(f"construct_pair needs 1 <= n <= {DENSE_MAX_N}, got {n}")
    k, case = divmod(n, 4)
    A_terms, B_terms = case_terms(n)
    return ExtremalPair(n, case, k, _materialize(n, A_terms), _materialize(n, B_terms))


def _witness(words: np.ndarray, n: int) -> int | None:
    if not words.any():
        return None
    return Family._from_words(n, words).first()


def verify_pair(n: int, pair: ExtremalPair | None = None) -> VerificationReport:
    """Run the seven checks on the constructed pair; failures are report entries.

    Every check is recomputed from the materialized families.  Intermediate
    bitmaps are dropped as soon as their check is recorded (at n = 30 each
    one is 128 MiB).
    """
    if pair is None:
        pair = construct_pair(n)
    A, B = pair.A, pair.B
    a, b = len(A), len(B)
    target = extremal_size(n)
    report = VerificationReport(f"verify_pair n={n}", n)

    report.add(Check("sizes_equal", a == b, measured=a, bound=b))
    report.add(Check("extremal_size", a + b == target, measured=a + b, bound=target))

    S = A | B
    covered = _bitset.neighborhood(S.words, n)
    clash = covered & S.words
    independent = not clash.any()
    report.add(Check("independent", independent, measured=len(S), witness=_witness(clash, n)))
    del clash

    even = parity_class(n, 0)
    in_classes = A <= even and B <= parity_class(n, 1)
    n_even = len(S & even)
    del even
    report.add(Check("balanced", is_balanced(S) and in_classes,
                     measured=n_even, bound=len(S) - n_even))

    half = 1 << (n - 1)
    diff = A.words ^ segment(SegmentSpec(n, 0, "initial", min(a, half))).words
    diff |= B.words ^ segment(SegmentSpec(n, 1, "terminal", min(b, half))).words
    report.add(Check("segments", not diff.any(), measured=a, witness=_witness(diff, n)))
    del diff

    co = co_neighborhood(A, parity=0) if in_classes else Family.empty(n)
    diff = co.words ^ B.words
    report.add(Check("co_neighborhood", not diff.any(), measured=len(co), bound=b,
                     witness=_witness(diff, n)))
    del diff, co

    covered |= S.words
    missing = _bitset.full(n) & ~covered
    report.add(Check("maximal", independent and not missing.any(),
                     witness=_witness(missing, n)))
    return report
