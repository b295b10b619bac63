r"""
Checking the isoperimetric theorem
==================================

Among all m-subsets of X_0 an initial segment has the smallest neighborhood,
and what it leaves uncovered in X_1 is a terminal segment.  Exhaustively for
n <= 5, by seeded sampling beyond that.
"""
from balancedcube import (
    check_isoperimetry_exhaustive,
    check_isoperimetry_sampled,
    check_terminal_property,
)

# %%
# Every m for n = 5: 65536 subsets of X_0 in total.
for m in range(17):
    chk = check_isoperimetry_exhaustive(5, m).checks[0]
    print(f"m={m:>2}  segment boundary {chk.bound:>2}  least over all A {chk.measured:>2}")

# %%
# Random families never beat the segment.
for n, m in [(8, 10), (10, 100), (12, 1024)]:
    print(check_isoperimetry_sampled(n, m, samples=500, seed=2024).to_text())

# %%
print(check_terminal_property(14).to_text())
