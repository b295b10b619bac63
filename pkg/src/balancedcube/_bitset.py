"""Packed indicator arrays over all 2**n vertices of Q_n.

Vertex ``w`` lives at bit ``w & 63`` of word ``w >> 6``.  For n < 6 there is
a single word and only its low ``2**n`` bits are meaningful.  Flipping
coordinate ``i`` is an in-word shuffle for ``i < 6`` and a swap of word
blocks for ``i >= 6``, so a neighborhood costs ``n`` linear passes.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

U64 = np.uint64


def n_words(n: int) -> int:
    return max(1, (1 << n) >> 6)


def low_bits(n: int) -> int:
    """Number of coordinates resolved inside a single word."""
    return min(n, 6)


def _valid_mask(n: int) -> int:
    return (1 << (1 << n)) - 1 if n < 6 else (1 << 64) - 1


def empty(n: int) -> np.ndarray:
    return np.zeros(n_words(n), dtype=U64)


def full(n: int) -> np.ndarray:
    return np.full(n_words(n), _valid_mask(n), dtype=U64)


def from_vertices(n: int, vertices) -> np.ndarray:
    words = empty(n)
    v = np.asarray(vertices, dtype=U64).ravel()
    if v.size:
        np.bitwise_or.at(words, (v >> U64(6)).astype(np.intp), U64(1) << (v & U64(63)))
    return words


def to_vertices(words: np.ndarray) -> np.ndarray:
    """Members in increasing numeric order."""
    bits = np.unpackbits(words.astype("<u8", copy=False).view(np.uint8), bitorder="little")
    return np.flatnonzero(bits).astype(U64)


def popcount(words: np.ndarray) -> int:
    return int(np.bitwise_count(words).sum(dtype=np.int64))


def first_member(words: np.ndarray) -> int | None:
    nz = np.flatnonzero(words)
    if not nz.size:
        return None
    j = int(nz[0])
    w = int(words[j])
    return (j << 6) | ((w & -w).bit_length() - 1)


@lru_cache(maxsize=None)
def _in_word_mask(i: int) -> int:
    # bit positions b in a word whose coordinate i is clear
    return sum(1 << b for b in range(64) if not (b >> i) & 1)


def or_flip_into(acc: np.ndarray, words: np.ndarray, i: int) -> None:
    """``acc |= words`` with coordinate ``i`` flipped on every member."""
    if i < 6:
        d = U64(1 << i)
        m = U64(_in_word_mask(i))
        t = words & m
        t <<= d
        acc |= t
        np.right_shift(words, d, out=t)
        t &= m
        acc |= t
    else:
        d = 1 << (i - 6)
        a3 = acc.reshape(-1, 2, d)
        np.bitwise_or(a3, words.reshape(-1, 2, d)[:, ::-1, :], out=a3)


def flip(words: np.ndarray, i: int) -> np.ndarray:
    out = np.zeros_like(words)
    or_flip_into(out, words, i)
    return out


def neighborhood(words: np.ndarray, n: int) -> np.ndarray:
    acc = np.zeros_like(words)
    for i in range(n):
        or_flip_into(acc, words, i)
    return acc


@lru_cache(maxsize=None)
def _popcounts(size: int) -> np.ndarray:
    out = np.bitwise_count(np.arange(size, dtype=U64)).astype(np.int16)
    out.flags.writeable = False
    return out


def _high_popcounts(n: int, shift: int) -> np.ndarray:
    """popcount(j >> shift) for every word index j, as int16."""
    total = n_words(n)
    if n < 6:
        return np.zeros(1, dtype=np.int16)
    return np.repeat(_popcounts(total >> shift), 1 << shift)


def parity_class(n: int, parity: int) -> np.ndarray:
    lb = low_bits(n)
    pats = [0, 0]
    for b in range(1 << lb):
        pats[b.bit_count() & 1] |= 1 << b
    table = np.array(pats, dtype=U64)
    hp = _high_popcounts(n, 0)
    return table[(parity - hp) & 1]


def prefix_layer(n: int, prefix: int, start: int, r: int) -> np.ndarray:
    """Indicator of ``{prefix | x : x an r-subset of {start..n}}``.

    Preconditions (``prefix`` only uses elements below ``start``) are the
    caller's job; out-of-range ``r`` simply gives the empty family.
    """
    s = start - 1
    if r < 0 or r > n - s:
        return empty(n)
    lb = low_bits(n)
    lo_s = min(s, lb)
    hi_s = s - lo_s
    lo_fix = prefix & ((1 << lo_s) - 1)
    pats = [0] * (lb + 1)
    for b in range(1 << lb):
        if b & ((1 << lo_s) - 1) == lo_fix:
            pats[(b >> lo_s).bit_count()] |= 1 << b
    # pad with zeros so out-of-range counts index a zero pattern
    table = np.array(pats + [0], dtype=U64)
    hp = _high_popcounts(n, hi_s)
    need = r - hp
    need[(need < 0) | (need > lb)] = lb + 1
    words = table[need]
    if hi_s:
        # word indices repeat their low hi_s bits with period 2**hi_s
        keep = np.zeros(1 << hi_s, dtype=bool)
        keep[prefix >> lo_s] = True
        words &= np.where(np.tile(keep, n_words(n) >> hi_s), ~U64(0), U64(0))
    return words


def layer(n: int, r: int) -> np.ndarray:
    return prefix_layer(n, 0, 1, r)
