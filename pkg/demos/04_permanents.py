# %% [markdown]
# # Generating polynomials from permanents
#
# Give every adjacent q-cycle its own variable and put it on the matrix
# positions the cycle uses.  The permanent of that matrix, after sending each
# variable's q-th power to `x` and lower powers to 1, is the generating
# polynomial of a(n, k).

# %%
from aqc.permanent import build_marked_matrix, permanent, collapse, generating_polynomial

m = build_marked_matrix(6, 3)
print(m)
p = permanent(m)
print(len(p.terms), "terms before collapsing")
print(collapse(p, m.families))
print(generating_polynomial(6, 3))

# %% [markdown]
# With x on the diagonal and 1 elsewhere the permanent counts fixed points.

# %%
from aqc.permanent import rencontres_polynomial

for n in range(1, 7):
    print(n, rencontres_polynomial(n))

# %% [markdown]
# Several lengths at once: S_5 with families x, y, z, u, v for lengths 1..5.

# %%
from aqc.permanent import multi_generating_polynomial

f = multi_generating_polynomial(5, (1, 2, 3, 4, 5))
print(f.to_str("xyzuv"))
print(f.evaluate(dict.fromkeys("xyzuv", 1)))
