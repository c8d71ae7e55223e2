# %% [markdown]
# # Checking the formulas by brute force
#
# For small N we can simply play every lineup. The shift lineup
# (T_N, T_1, ..., T_{N-1}) is the only one that wins N-1 races.

# %%
import time

from tianji import (
    count_outcomes,
    enumerate_outcomes,
    match_result,
    shift_permutation,
    wins_histogram,
)

for n in range(2, 7):
    p = shift_permutation(n)
    r = match_result(p)
    print(p, r.t_wins, r.t_losses, r.match_class.value)

# %%
print("N=5 histogram of race wins:", wins_histogram(5))

# %%
for n in range(1, 10):
    start = time.perf_counter()
    same = enumerate_outcomes(n) == count_outcomes(n)
    print(f"N={n}  agree={same}  {time.perf_counter() - start:.3f}s")
