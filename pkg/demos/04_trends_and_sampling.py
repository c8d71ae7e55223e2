# %% [markdown]
# # Trends in N and Monte Carlo beyond enumeration
#
# Winning chances grow with N for odd N, and the draw share shrinks for
# even N. Past N = 10 enumeration is too slow, but the exact formulas still
# work and random sampling gives an independent estimate.

# %%
from tianji import count_outcomes, figure_series, monte_carlo_outcomes
from tianji.exactmath import decimal_string
from tianji.report import render_series

print(render_series(figure_series("odd", 21, 4), "text"))
print(render_series(figure_series("even", 20, 4), "text"))

# %%
for n in (12, 20, 30):
    mc = monte_carlo_outcomes(n, 200_000, seed=2024)
    exact = count_outcomes(n)
    print(
        f"N={n}  estimate p_win={decimal_string(mc.p_win, 4)}"
        f"  exact p_win={decimal_string(exact.p_win, 4)}"
    )
