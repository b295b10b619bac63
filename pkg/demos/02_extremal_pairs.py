r"""
Extremal balanced independent sets
==================================

For each n the pair (A, B) is an initial segment of X_0 and a terminal
segment of X_1 whose union is independent and balanced.  Its shape depends on
n mod 4.
"""
from balancedcube import construct_pair, extremal_size, format_vertex, verify_pair

# %%
# Small cases in full.
for n in range(3, 8):
    pair = construct_pair(n)
    print(f"n={n} (n mod 4 = {pair.case}, k={pair.k}), size {pair.size}")
    print("  A:", " ".join(format_vertex(x) for x in pair.A))
    print("  B:", " ".join(format_vertex(x) for x in pair.B))

# %%
# Every check is recomputed from the materialized families.
print(verify_pair(12).to_text())

# %%
# Larger n: sizes only.  The bitmaps are packed, so n = 24 takes 2 MiB each.
for n in (16, 20, 24):
    report = verify_pair(n)
    print(n, extremal_size(n), "PASS" if report.passed else "FAIL")
