# %% [markdown]
# # Eulerian numbers, two ways
#
# The number of lineups giving Tian Ji exactly M race wins is the Eulerian
# number E(N, M). We build it once by the insertion recurrence and once by
# the alternating-sum closed form, then check they agree.

# %%
from tianji import eulerian_closed_form, eulerian_row_recurrence, worpitzky_lhs_rhs

for n in range(1, 9):
    print(n, list(eulerian_row_recurrence(n)))

# %%
mismatches = [
    (n, m)
    for n in range(1, 41)
    for m in range(n)
    if eulerian_row_recurrence(n)[m] != eulerian_closed_form(n, m)
]
print("mismatches up to n=40:", mismatches)

# %% [markdown]
# Worpitzky's identity writes x^N as an Eulerian-weighted sum of binomials.

# %%
for x, N in [(2, 3), (7, 4), (10, 12)]:
    print(x, N, worpitzky_lhs_rhs(x, N))
