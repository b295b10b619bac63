r"""
The simplicial order on a parity class
======================================

Vertices of Q_n are ints: element ``i`` of a subset is bit ``i - 1``.  Sets
are ordered by size first, then lexicographically with small elements first,
which is *not* the numeric order of the words.
"""
from balancedcube import (
    format_vertex,
    layer_rank,
    parity_rank,
    parity_unrank,
    simplicial_cmp,
    vertex,
)

n = 4

# %%
# Walk the even class X_0 and the odd class X_1 by rank.
for parity in (0, 1):
    walk = [parity_unrank(n, parity, k) for k in range(2 ** (n - 1))]
    print(f"X_{parity}:", " ".join(format_vertex(x) for x in walk))

# %%
# {1,4} comes before {2,3} although 0b1001 > 0b0110 numerically.
x, y = vertex([1, 4]), vertex([2, 3])
print(simplicial_cmp(x, y).name, x > y)

# %%
# Ranks are computed from binomial sums, so they work at n = 64 without
# enumerating anything.
big = vertex([1, 17, 40, 64])
print("layer rank:", layer_rank(big, 64))
print("parity rank:", parity_rank(big, 64))
assert parity_unrank(64, 0, parity_rank(big, 64)) == big
