# %% [markdown]
# # Who wins a random lineup?
#
# Tian Ji and the King each own N horses, one per speed class. The King
# always fields his horses fastest first. Tian Ji picks any order. How many
# of the N! orders win, draw or lose the match?

# %%
from tianji import count_outcomes, render_table

print(render_table(10))

# %% [markdown]
# The counts are exact. Odd N never draws, and even N always loses exactly
# half of the lineups:

# %%
for n in range(1, 13):
    s = count_outcomes(n)
    print(f"N={n:2d}  p_win={s.p_win}  p_draw={s.p_draw}  p_loss={s.p_loss}")

# %% [markdown]
# The same table as CSV, ready for a spreadsheet:

# %%
print(render_table(6, "csv"))
