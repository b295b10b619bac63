"""Vertex encoding, exact binomials, the simplicial order and rank/unrank.

A vertex of Q_n is a subset of ``{1, ..., n}`` stored as a Python ``int``
whose bit ``i - 1`` is set exactly when ``i`` belongs to the subset.  All
counts are exact integers bounded by ``2**64``; ground sizes are capped at 64
so that bound is never exceeded.
"""
from __future__ import annotations

import enum
import math
from functools import cmp_to_key, lru_cache
from typing import Iterable

import numpy as np

MAX_N = 64
_U64_LIMIT = 1 << 64


class OutOfRangeError(ValueError):
    """An argument lies outside the range where results stay exact or tractable."""


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _check_n(n: int, lo: int = 0, hi: int = MAX_N) -> None:
    if not lo <= n <= hi:
        raise OutOfRangeError(f"ground size n={n} outside {lo}..{hi}")


def _count(value: int) -> int:
    # every Count must fit an unsigned 64-bit word
    if not 0 <= value < _U64_LIMIT:
        raise OverflowError(f"count {value} does not fit in 64 bits")
    return value


# -- vertices -----------------------------------------------------------------

def vertex(elements: Iterable[int]) -> int:
    """Encode a collection of elements of [n] (1-based) as a word."""
    x = 0
    for e in elements:
        if not 1 <= e <= MAX_N:
            raise OutOfRangeError(f"element {e} outside 1..{MAX_N}")
        x |= 1 << (e - 1)
    return x


def elements(x: int) -> tuple[int, ...]:
    """Sorted 1-based elements of the vertex ``x``."""
    out = []
    i = 1
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return tuple(out)


def check_vertex(x: int, n: int) -> None:
    _check_n(n)
    if x < 0 or x >> n:
        raise OutOfRangeError(f"word {x:#x} is not a subset of [{n}]")


def size(x: int) -> int:
    return x.bit_count()


def parity(x: int) -> int:
    return x.bit_count() & 1


def format_vertex(x: int) -> str:
    """Canonical text form, e.g. ``{1,3,4}``."""
    return "{" + ",".join(map(str, elements(x))) + "}"


def format_hex(x: int) -> str:
    """Canonical hex form, e.g. ``0xD``."""
    return f"0x{x:X}"


def parse_hex(text: str) -> int:
    return int(text, 16)


# -- counting -----------------------------------------------------------------

def binomial(m: int, r: int) -> int:
    """Exact C(m, r) for ``0 <= m <= 64``; zero when ``r > m``."""
    if m < 0 or r < 0:
        raise OutOfRangeError(f"binomial({m}, {r}) needs nonnegative arguments")
    if m > MAX_N:
        raise OutOfRangeError(f"binomial({m}, {r}): m must be at most {MAX_N}")
    return _count(math.comb(m, r))


def parity_class_size(n: int) -> int:
    """Size of X_0 (equivalently X_1) in Q_n, which is 2**(n-1)."""
    _check_n(n, 1)
    return 1 << (n - 1)


# -- simplicial order ---------------------------------------------------------

def simplicial_cmp(x: int, y: int) -> Ordering:
    """Compare by size, then lexicographically with small elements first.

    Within a layer ``x`` precedes ``y`` when the least element of the
    symmetric difference belongs to ``x``.  This is *not* numeric order of
    the words.
    """
    sx, sy = x.bit_count(), y.bit_count()
    if sx != sy:
        return Ordering.LESS if sx < sy else Ordering.GREATER
    d = x ^ y
    if not d:
        return Ordering.EQUAL
    return Ordering.LESS if x & d & -d else Ordering.GREATER


def layer_rank(x: int, n: int) -> int:
    """0-based position of ``x`` among the ``|x|``-subsets of [n] in lex order."""
    check_vertex(x, n)
    r = x.bit_count()
    rank = 0
    prev = 0
    for j, e in enumerate(elements(x), start=1):
        # sets agreeing so far but taking v < e at position j come first
        for v in range(prev + 1, e):
            rank += binomial(n - v, r - j)
        prev = e
    return rank


def layer_unrank(n: int, r: int, k: int) -> int:
    """Inverse of :func:`layer_rank` on layer ``r``."""
    _check_n(n)
    total = binomial(n, r)
    if not 0 <= k < total:
        raise OutOfRangeError(f"rank {k} outside 0..{total - 1} for layer {r} of Q_{n}")
    x = 0
    v = 1
    for j in range(1, r + 1):
        while True:
            block = binomial(n - v, r - j)
            if k < block:
                break
            k -= block
            v += 1
        x |= 1 << (v - 1)
        v += 1
    return x


def parity_rank(x: int, n: int) -> int:
    """0-based position of ``x`` within its parity class under the simplicial order."""
    check_vertex(x, n)
    r = x.bit_count()
    below = sum(binomial(n, j) for j in range(r & 1, r, 2))
    return _count(below + layer_rank(x, n))


def parity_unrank(n: int, parity: int, k: int) -> int:
    """Vertex of the given parity whose :func:`parity_rank` is ``k``."""
    half = parity_class_size(n)
    if parity not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {parity}")
    if not 0 <= k < half:
        raise OutOfRangeError(f"rank {k} outside 0..{half - 1} for X_{parity} of Q_{n}")
    r = parity
    while k >= binomial(n, r):
        k -= binomial(n, r)
        r += 2
    return layer_unrank(n, r, k)


# -- vectorized helpers for the dense engines ---------------------------------

DENSE_MAX_N = 30
ORDER_MAX_N = 24

_REV8 = np.array([int(f"{b:08b}"[::-1], 2) for b in range(256)], dtype=np.uint64)


def _bit_reverse(words: np.ndarray, n: int) -> np.ndarray:
    w = words.astype(np.uint64, copy=False)
    out = np.zeros_like(w)
    for byte in range(4):
        chunk = (w >> np.uint64(8 * byte)) & np.uint64(0xFF)
        out |= _REV8[chunk] << np.uint64(8 * (3 - byte))
    return out >> np.uint64(32 - n)


def simplicial_argsort(words: np.ndarray, n: int) -> np.ndarray:
    """Indices that sort ``words`` (distinct, valid for ``n``) in simplicial order."""
    _check_n(n, 0, 32)
    w = np.asarray(words, dtype=np.uint64)
    if n == 0:
        return np.arange(len(w))
    # lex order on a layer is descending order of the bit-reversed word
    lex_key = np.uint64((1 << n) - 1) ^ _bit_reverse(w, n)
    return np.lexsort((lex_key, np.bitwise_count(w)))


def simplicial_sorted(vertices: Iterable[int]) -> list[int]:
    return sorted(vertices, key=cmp_to_key(simplicial_cmp))


@lru_cache(maxsize=4)
def _parity_order_cached(n: int, parity: int) -> np.ndarray:
    all_words = np.arange(1 << n, dtype=np.uint64)
    words = all_words[(np.bitwise_count(all_words) & 1) == parity]
    del all_words
    out = words[simplicial_argsort(words, n)]
    out.flags.writeable = False
    return out


def parity_order(n: int, parity: int) -> np.ndarray:
    """All vertices of X_parity as a read-only array, position = parity rank."""
    _check_n(n, 1, ORDER_MAX_N)
    if parity not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {parity}")
    return _parity_order_cached(n, parity)
