r"""
Two independent searches
========================

``max_balanced_exhaustive`` tries every subset A of X_0 (n <= 5).
``max_balanced_segment`` only looks at initial segments of the simplicial
order, which is valid because of the isoperimetric theorem, and reaches
n = 24.  Both are compared with the closed form.
"""
import time

from balancedcube import extremal_size, max_balanced_exhaustive, max_balanced_segment

print(f"{'n':>3} {'exhaustive':>11} {'segment':>10} {'formula':>10}")
for n in range(1, 21):
    ex = max_balanced_exhaustive(n).optimum if n <= 5 else None
    seg = max_balanced_segment(n).optimum
    print(f"{n:>3} {'' if ex is None else ex:>11} {seg:>10} {extremal_size(n):>10}")

# %%
# The sweep at n = 24 covers 2^23 vertices of X_0.
t0 = time.perf_counter()
res = max_balanced_segment(24)
print(f"n=24: {res.optimum} (formula {extremal_size(24)}), {time.perf_counter() - t0:.1f}s")
