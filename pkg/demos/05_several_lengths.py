# %% [markdown]
# # Several cycle lengths at once
#
# `count_multi(n, lengths, ks)` counts permutations with exactly `ks[j]`
# adjacent cycles of length `lengths[j]`.

# %%
from aqc import count_multi, multi_distribution, restricted_derangements
from aqc.oracle import oracle_multi

print(count_multi(5, (1, 2, 3, 4, 5), (1, 2, 0, 0, 0)))
dist = multi_distribution(6, (2, 3))
print(dist == oracle_multi(6, (2, 3)), sum(dist.values()))

# %% [markdown]
# Avoiding adjacent cycles of every length 1..m gives a family of restricted
# derangement numbers.

# %%
for m in (1, 2, 3):
    print(m, [restricted_derangements(n, m) for n in range(12)])
