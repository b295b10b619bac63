"""Independent searches and computational checks of the isoperimetric theorem.

Two search routes for the largest balanced independent set:

* :func:`max_balanced_exhaustive` enumerates every subset of X_0 (n <= 5) and
  assumes nothing.
* :func:`max_balanced_segment` only scans initial segments of the simplicial
  order on X_0.  That restriction is justified by the Bezrukov / Korner-Wei
  isoperimetric theorem, and is cross-checked against the exhaustive route.

Both reduce to ``2 * max_A min(|A|, |X_1 - N(A)|)``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .cube_core import OutOfRangeError, parity_class_size, parity_order
from .families import Family, is_balanced, is_independent
from .report import Check, VerificationReport

EXHAUSTIVE_MAX_N = 5
SEGMENT_MAX_N = 24
SAMPLED_MIN_N, SAMPLED_MAX_N = 6, 16
TERMINAL_MAX_N = 16

SEGMENT_NOTE = ("restricts the search to initial segments of X_0, which relies on the "
                "Bezrukov / Korner-Wei isoperimetric theorem")


@dataclass
class SearchResult:
    n: int
    optimum: int
    witness: Family
    method: str
    notes: list[str] = field(default_factory=list)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "optimum": self.optimum,
            "witness": self.witness.to_record()["sets"],
            "notes": list(self.notes),
        }


def _check_range(name: str, n: int, lo: int, hi: int) -> None:
    if not lo <= n <= hi:
        raise OutOfRangeError(f"{name} supports {lo} <= n <= {hi}, got n={n}")


# -- exhaustive engine --------------------------------------------------------

@lru_cache(maxsize=None)
def _subset_covers(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For every subset mask of X_0 the mask of X_1 it covers.

    Bit t of a subset mask is the X_0 vertex of parity rank t; bit t of a
    cover mask is the X_1 vertex of parity rank t.
    """
    x0 = parity_order(n, 0).tolist()
    x1 = parity_order(n, 1).tolist()
    pos1 = {y: t for t, y in enumerate(x1)}
    nb = [sum(1 << pos1[x ^ (1 << i)] for i in range(n)) for x in x0]
    cover = np.zeros(1 << len(x0), dtype=np.int64)
    for t, mask in enumerate(nb):
        # masks with top bit t are the lower half with vertex t added
        half = 1 << t
        cover[half:2 * half] = cover[:half] | mask
    sizes = np.bitwise_count(np.arange(len(cover), dtype=np.uint64)).astype(np.int64)
    return cover, sizes, np.bitwise_count(cover.astype(np.uint64)).astype(np.int64)


def _mask_family(n: int, mask: int, parity: int) -> list[int]:
    order = parity_order(n, parity).tolist()
    return [order[t] for t in range(len(order)) if (mask >> t) & 1]


def max_balanced_exhaustive(n: int) -> SearchResult:
    """Largest balanced independent set by enumerating every A within X_0."""
    _check_range("max_balanced_exhaustive", n, 1, EXHAUSTIVE_MAX_N)
    half = parity_class_size(n)
    cover, sizes, covered = _subset_covers(n)
    value = np.minimum(sizes, half - covered)
    # argmax returns the first optimum in mask order
    best = int(np.argmax(value))
    m = int(value[best])
    A = _mask_family(n, best, 0)[:m]
    free = _mask_family(n, (~int(cover[best])) & ((1 << half) - 1), 1)[:m]
    return SearchResult(n, 2 * m, Family(n, A + free), "exhaustive")


def check_isoperimetry_exhaustive(n: int, m: int) -> VerificationReport:
    """|N(initial segment)| <= |N(A)| for every m-subset A of X_0."""
    _check_range("check_isoperimetry_exhaustive", n, 1, EXHAUSTIVE_MAX_N)
    half = parity_class_size(n)
    if not 0 <= m <= half:
        raise OutOfRangeError(f"m={m} outside 0..{half}")
    cover, sizes, covered = _subset_covers(n)
    bound = int(covered[(1 << m) - 1])
    idx = np.flatnonzero(sizes == m)
    best = int(idx[np.argmin(covered[idx])])
    least = int(covered[best])
    report = VerificationReport(f"isoperimetry exhaustive n={n} m={m}", n)
    report.notes.append(f"checked all {comb(half, m)} subsets of X_0 of size {m}")
    report.add(Check("segment_minimizes_boundary", bound <= least, m=m,
                     measured=least, bound=bound, witness=_mask_family(n, best, 0)))
    return report


# -- segment sweep ------------------------------------------------------------

def _cover_times(n: int) -> np.ndarray:
    """For each X_1 vertex (by parity rank) the number of initial X_0 vertices
    needed before it becomes a neighbor of the segment."""
    x0 = parity_order(n, 0)
    x1 = parity_order(n, 1)
    big = np.iinfo(np.int64).max
    rank0 = np.full(1 << n, big, dtype=np.int64)
    rank0[x0] = np.arange(len(x0))
    best = np.full(1 << n, big, dtype=np.int64)
    for i in range(n):
        # flipping coordinate i swaps adjacent blocks of length 2**i
        b3 = best.reshape(-1, 2, 1 << i)
        np.minimum(b3, rank0.reshape(-1, 2, 1 << i)[:, ::-1, :], out=b3)
    ct = best[x1]
    # vertex at rank t is covered once t + 1 vertices are in
    return ct + 1


def _uncovered_counts(n: int, ct: np.ndarray) -> np.ndarray:
    """f[m] = |X_1 - N(first m vertices of X_0)| for m = 0..2^(n-1)."""
    half = parity_class_size(n)
    newly = np.bincount(ct, minlength=half + 1)
    f = half - np.cumsum(newly)
    assert np.all(np.diff(f) <= 0), "coverage count increased during the sweep"
    return f


def max_balanced_segment(n: int) -> SearchResult:
    """Largest m with |X_1 - N(segment_m)| >= m, found in one sweep."""
    _check_range("max_balanced_segment", n, 1, SEGMENT_MAX_N)
    half = parity_class_size(n)
    f = _uncovered_counts(n, _cover_times(n))
    ok = np.flatnonzero(f >= np.arange(half + 1))
    m = int(ok[-1])
    x0, x1 = parity_order(n, 0), parity_order(n, 1)
    witness = Family(n, np.concatenate([x0[:m], x1[half - m:]]))
    return SearchResult(n, 2 * m, witness, "segment", [SEGMENT_NOTE])


def check_terminal_property(n: int) -> VerificationReport:
    """X_1 - N(initial segment of X_0) is a terminal segment of X_1, for every m.

    That holds for all m exactly when the cover times are non-decreasing
    along the simplicial order of X_1.
    """
    _check_range("check_terminal_property", n, 1, TERMINAL_MAX_N)
    half = parity_class_size(n)
    ct = _cover_times(n)
    f = _uncovered_counts(n, ct)
    bad = np.flatnonzero(np.diff(ct) < 0)
    report = VerificationReport(f"terminal property n={n}", n)
    report.notes.append(f"swept m = 0..{half}")
    if bad.size:
        # at m = ct[t+1] vertex t+1 is covered while the earlier vertex t is not
        t = int(bad[0])
        m = int(ct[t + 1])
        x1 = parity_order(n, 1)
        report.add(Check("terminal_segment", False, m=m, measured=int(f[m]),
                         witness=int(x1[t + 1])))
    else:
        report.add(Check("terminal_segment", True, m=half, measured=half + 1))
    return report


def terminal_checks_literal(n: int) -> VerificationReport:
    """The same property, checked one m at a time on materialized families."""
    from .families import SegmentSpec, co_neighborhood, is_terminal_segment, segment

    report = VerificationReport(f"terminal property (literal) n={n}", n)
    for m in range(parity_class_size(n) + 1):
        free = co_neighborhood(segment(SegmentSpec(n, 0, "initial", m)), parity=0)
        report.add(Check("terminal_segment", is_terminal_segment(free, parity=1), m=m,
                         measured=len(free)))
    return report


# -- sampling -----------------------------------------------------------------

def _boundary_size(n: int, words: np.ndarray, scratch: np.ndarray) -> int:
    scratch[:] = False
    for i in range(n):
        scratch[words ^ np.uint64(1 << i)] = True
    return int(np.count_nonzero(scratch))


def _sample_chunk(n: int, m: int, seeds, start: int) -> list[tuple[int, int]]:
    x0 = parity_order(n, 0)
    half = len(x0)
    scratch = np.zeros(1 << n, dtype=bool)
    out = []
    for offset, seq in enumerate(seeds):
        rng = np.random.Generator(np.random.PCG64(seq))
        ranks = rng.choice(half, size=m, replace=False)
        out.append((_boundary_size(n, x0[ranks], scratch), start + offset))
    return out


def sample_ranks(n: int, m: int, seed: int, index: int) -> np.ndarray:
    """Parity ranks of the ``index``-th sampled m-subset of X_0 for ``seed``."""
    seq = np.random.SeedSequence(seed).spawn(index + 1)[index]
    rng = np.random.Generator(np.random.PCG64(seq))
    return rng.choice(parity_class_size(n), size=m, replace=False)


def check_isoperimetry_sampled(n: int, m: int, samples: int, seed: int,
                               workers: int = 1) -> VerificationReport:
    """The isoperimetric bound on ``samples`` uniform m-subsets of X_0.

    Sample ``i`` uses PCG64 seeded by child ``i`` of ``SeedSequence(seed)``,
    so results do not depend on how samples are split across ``workers``.
    """
    _check_range("check_isoperimetry_sampled", n, SAMPLED_MIN_N, SAMPLED_MAX_N)
    half = parity_class_size(n)
    if not 0 <= m <= half:
        raise OutOfRangeError(f"m={m} outside 0..{half}")
    if samples < 1:
        raise ValueError("samples must be positive")
    if not 0 <= seed < 1 << 64:
        raise OutOfRangeError("seed must be an unsigned 64-bit value")

    x0 = parity_order(n, 0)
    bound = _boundary_size(n, x0[:m], np.zeros(1 << n, dtype=bool))
    children = np.random.SeedSequence(seed).spawn(samples)
    workers = max(1, min(workers, samples))
    step = -(-samples // workers)
    chunks = [(children[i:i + step], i) for i in range(0, samples, step)]
    if workers == 1:
        results = [r for c, s in chunks for r in _sample_chunk(n, m, c, s)]
    else:
        with ThreadPoolExecutor(workers) as pool:
            parts = pool.map(lambda cs: _sample_chunk(n, m, *cs), chunks)
            results = [r for part in parts for r in part]
    # deterministic reduction: least boundary, then least sample index
    least, at = min(results)
    violations = sum(1 for size, _ in results if size < bound)
    report = VerificationReport(f"isoperimetry sampled n={n} m={m}", n)
    report.notes.append(f"{samples} samples, seed={seed}, {samples - violations}/{samples} "
                        "satisfy the bound")
    witness = None
    if violations:
        witness = np.sort(x0[sample_ranks(n, m, seed, at)]).tolist()
    report.add(Check("segment_minimizes_boundary", violations == 0, m=m,
                     measured=least, bound=bound, witness=witness))
    return report


def witness_ok(result: SearchResult) -> bool:
    W = result.witness
    return is_independent(W) and is_balanced(W) and len(W) == result.optimum
