# %% [markdown]
# # Generating functions as exact power series
#
# With g(z) = sum b_n z^n and G(z) = sum b_n z^n / n!, both satisfy linear
# ODEs.  Plugging the true counts into each ODE must leave a residual whose
# every retained coefficient is exactly zero.

# %%
from aqc.series import ogf_series, egf_series, verify_ogf_ode, verify_egf_ode, ogf_ode_residual

print(ogf_series(5, 8))
print(egf_series(1, 6))  # prefix of e^{-z} / (1 - z)

# %%
for q in range(1, 7):
    print(q, verify_ogf_ode(q, 30).is_zero(), verify_egf_ode(q, 30).is_zero())

# %% [markdown]
# Perturb one count and the residual lights up.

# %%
from aqc.series import RatSeries

g = ogf_series(3, 12)
bad = RatSeries(c + (i == 4) for i, c in enumerate(g.coeffs))
print(ogf_ode_residual(bad, 3).nonzero_terms())
