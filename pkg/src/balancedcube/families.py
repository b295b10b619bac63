"""Families of vertices of Q_n and the predicates used to reason about them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

import numpy as np

from . import _bitset
from .cube_core import (
    DENSE_MAX_N,
    OutOfRangeError,
    binomial,
    elements,
    format_hex,
    format_vertex,
    layer_unrank,
    parity_class_size,
    parse_hex,
    simplicial_argsort,
    vertex,
)


class MixedParityError(ValueError):
    """The operation needs a family lying inside one parity class."""


class NotIndependentError(ValueError):
    pass


class Family:
    """An immutable set of vertices of Q_n.

    Stored as a packed indicator over all ``2**n`` words; iteration yields
    members in simplicial order.  Duplicates passed to the constructor are
    dropped silently.
    """

    __slots__ = ("n", "_words", "_len")

    def __init__(self, n: int, vertices: Iterable[int] = ()):
        if not 0 <= n <= DENSE_MAX_N:
            raise OutOfRangeError(f"families are supported for 0 <= n <= {DENSE_MAX_N}, got {n}")
        try:
            vs = np.asarray(vertices if isinstance(vertices, np.ndarray) else list(vertices),
                            dtype=np.uint64)
        except OverflowError:
            raise OutOfRangeError(f"vertex words must be subsets of [{n}]") from None
        if vs.size and int(vs.max()) >> n:
            raise OutOfRangeError(f"word {int(vs.max()):#x} is not a subset of [{n}]")
        self.n = n
        self._words = _bitset.from_vertices(n, vs)
        self._words.flags.writeable = False
        self._len = None

    @classmethod
    def _from_words(cls, n: int, words: np.ndarray) -> "Family":
        fam = cls.__new__(cls)
        fam.n = n
        fam._words = words
        fam._words.flags.writeable = False
        fam._len = None
        return fam

    @classmethod
    def empty(cls, n: int) -> "Family":
        return cls._from_words(n, _bitset.empty(n))

    @classmethod
    def cube(cls, n: int) -> "Family":
        return cls._from_words(n, _bitset.full(n))

    @property
    def words(self) -> np.ndarray:
        """Packed indicator (read-only)."""
        return self._words

    def __len__(self) -> int:
        if self._len is None:
            self._len = _bitset.popcount(self._words)
        return self._len

    def __bool__(self) -> bool:
        return bool(self._words.any())

    def __contains__(self, x: int) -> bool:
        if x < 0 or x >> self.n:
            return False
        return bool((int(self._words[x >> 6]) >> (x & 63)) & 1)

    def array(self) -> np.ndarray:
        """Members as a uint64 array in simplicial order."""
        v = _bitset.to_vertices(self._words)
        return v[simplicial_argsort(v, self.n)]

    def iter_layers(self) -> Iterator[np.ndarray]:
        """Members layer by layer, each chunk already in simplicial order."""
        for r in range(self.n + 1):
            part = self._words & _bitset.layer(self.n, r)
            if part.any():
                v = _bitset.to_vertices(part)
                yield v[simplicial_argsort(v, self.n)]

    def __iter__(self) -> Iterator[int]:
        for chunk in self.iter_layers():
            yield from chunk.tolist()

    def members(self) -> list[int]:
        return self.array().tolist()

    def first(self) -> int | None:
        """Simplicially least member."""
        if not self:
            return None
        return int(self.array()[0])

    def _check_same(self, other: "Family") -> None:
        if not isinstance(other, Family):
            raise TypeError(f"expected Family, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"ground sizes differ: {self.n} vs {other.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._words, other._words)

    __hash__ = None

    def __or__(self, other: "Family") -> "Family":
        self._check_same(other)
        return Family._from_words(self.n, self._words | other._words)

    def __and__(self, other: "Family") -> "Family":
        self._check_same(other)
        return Family._from_words(self.n, self._words & other._words)

    def __sub__(self, other: "Family") -> "Family":
        self._check_same(other)
        return Family._from_words(self.n, self._words & ~other._words)

    def __le__(self, other: "Family") -> bool:
        self._check_same(other)
        return not (self._words & ~other._words).any()

    def parity_of(self) -> int | None:
        """0 or 1 if every member shares that parity, None if mixed or empty."""
        if not self:
            return None
        for p in (0, 1):
            if self <= parity_class(self.n, p):
                return p
        return None

    def __repr__(self) -> str:
        if len(self) <= 8:
            body = ", ".join(format_vertex(x) for x in self)
        else:
            body = f"{len(self)} sets"
        return f"Family(n={self.n}, [{body}])"

    # serialization

    def to_record(self, form: Literal["sets", "hex"] = "sets") -> dict:
        return {"n": self.n, form: family_items(self, form)}

    @classmethod
    def from_record(cls, record: dict) -> "Family":
        n = record["n"]
        if "sets" in record:
            return cls(n, (vertex(s) for s in record["sets"]))
        if "hex" in record:
            return cls(n, (parse_hex(h) for h in record["hex"]))
        raise ValueError("record needs a 'sets' or 'hex' field")


def family_items(fam: Family, form: str = "sets") -> list:
    if form == "sets":
        return [list(elements(x)) for x in fam]
    if form == "hex":
        return [format_hex(x) for x in fam]
    raise ValueError(f"unknown family form {form!r}")


def parity_class(n: int, parity: int) -> Family:
    """X_0 (even sets) or X_1 (odd sets) of Q_n."""
    if parity not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {parity}")
    return Family._from_words(n, _bitset.parity_class(n, parity))


def _single_parity(fam: Family) -> int | None:
    p = fam.parity_of()
    if fam and p is None:
        raise MixedParityError("family meets both parity classes")
    return p


def neighborhood(A: Family) -> Family:
    """All vertices adjacent to some member of ``A``."""
    return Family._from_words(A.n, _bitset.neighborhood(A.words, A.n))


def co_neighborhood(A: Family, parity: int | None = None) -> Family:
    """The opposite parity class minus N(A).

    ``parity`` names the class of ``A``; it is inferred from the members and
    only needed when ``A`` is empty (default 0).
    """
    p = _single_parity(A)
    if p is None:
        p = 0 if parity is None else parity
    elif parity is not None and parity != p:
        raise MixedParityError(f"family lies in X_{p}, not X_{parity}")
    other = _bitset.parity_class(A.n, 1 - p)
    return Family._from_words(A.n, other & ~_bitset.neighborhood(A.words, A.n))


@dataclass(frozen=True)
class SegmentSpec:
    n: int
    parity: int
    kind: Literal["initial", "terminal"]
    length: int

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {self.parity}")
        if self.kind not in ("initial", "terminal"):
            raise ValueError(f"kind must be 'initial' or 'terminal', got {self.kind!r}")
        half = parity_class_size(self.n)
        if not 0 <= self.length <= half:
            raise OutOfRangeError(f"segment length {self.length} outside 0..{half}")


def _initial_words(n: int, parity: int, m: int) -> np.ndarray:
    words = _bitset.empty(n)
    r = parity
    while m and m >= binomial(n, r):
        words |= _bitset.layer(n, r)
        m -= binomial(n, r)
        r += 2
    if not m:
        return words
    # the first m sets of layer r are those lex-below the m-th one, y:
    # agree with y below e, contain e, miss e in y
    y = layer_unrank(n, r, m)
    below = 0
    for e in range(1, n + 1):
        bit = 1 << (e - 1)
        if y & bit:
            below |= bit
            continue
        rest = r - below.bit_count() - 1
        if rest < 0:
            break
        words |= _bitset.prefix_layer(n, below | bit, e + 1, rest)
    return words


def segment(spec: SegmentSpec) -> Family:
    """Initial or terminal segment of the simplicial order on one parity class."""
    n = spec.n
    if n > DENSE_MAX_N:
        raise OutOfRangeError(f"families are supported for n <= {DENSE_MAX_N}, got {n}")
    if spec.kind == "initial":
        return Family._from_words(n, _initial_words(n, spec.parity, spec.length))
    head = _initial_words(n, spec.parity, parity_class_size(n) - spec.length)
    return Family._from_words(n, _bitset.parity_class(n, spec.parity) & ~head)


def is_independent(S: Family) -> bool:
    return not (_bitset.neighborhood(S.words, S.n) & S.words).any()


def is_balanced(S: Family) -> bool:
    even = _bitset.popcount(S.words & _bitset.parity_class(S.n, 0))
    return 2 * even == len(S)


def is_maximal_independent(S: Family) -> bool:
    nb = _bitset.neighborhood(S.words, S.n)
    if (nb & S.words).any():
        raise NotIndependentError("family is not independent")
    return bool(np.array_equal(nb | S.words, _bitset.full(S.n)))


def is_terminal_segment(F: Family, parity: int | None = None) -> bool:
    """Whether ``F`` is a terminal segment of the simplicial order on its class."""
    p = _single_parity(F)
    if p is None:
        return True
    if parity is not None and parity != p:
        raise MixedParityError(f"family lies in X_{p}, not X_{parity}")
    return F == segment(SegmentSpec(F.n, p, "terminal", len(F)))
