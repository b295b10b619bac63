"""Naive reference implementations on frozensets.

Nothing here imports the package; these are the independent oracles the
tests compare against.
"""
from itertools import combinations


def layer_lex(n, r):
    """r-subsets of [n] in lexicographic order of their sorted tuples."""
    return [frozenset(c) for c in combinations(range(1, n + 1), r)]


def simplicial(n, parity=None):
    out = []
    for r in range(n + 1):
        if parity is None or r % 2 == parity:
            out += layer_lex(n, r)
    return out


def to_word(s):
    return sum(1 << (e - 1) for e in s)


def from_word(x):
    return frozenset(i + 1 for i in range(x.bit_length()) if (x >> i) & 1)


def neighbors(s, n):
    return {s ^ {i} for i in range(1, n + 1)}


def N(family, n):
    out = set()
    for s in family:
        out |= neighbors(s, n)
    return out


def pascal(m_max):
    rows = [[1]]
    for m in range(1, m_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[r - 1] + prev[r] for r in range(1, m)] + [1])
    return rows


def independent(family, n):
    fam = set(family)
    return all(not (neighbors(s, n) & fam) for s in fam)


def max_balanced_bruteforce(n):
    """Largest balanced independent set by scanning every subset of Q_n."""
    verts = simplicial(n)
    idx = {s: i for i, s in enumerate(verts)}
    adj = [sum(1 << idx[t] for t in neighbors(s, n)) for s in verts]
    odd = sum(1 << i for i, s in enumerate(verts) if len(s) % 2)
    best = 0
    for mask in range(1 << len(verts)):
        ones = mask.bit_count()
        o = (mask & odd).bit_count()
        if 2 * o != ones or ones <= best:
            continue
        if all(not (adj[i] & mask) for i in range(len(verts)) if (mask >> i) & 1):
            best = ones
    return best
