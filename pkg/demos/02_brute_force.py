# %% [markdown]
# # Brute-force enumeration
#
# The oracle walks all of S_n, writes each permutation in standard cycle form
# and counts adjacent cycles directly.  It is the ground truth for every
# formula in the package.

# %%
from aqc.oracle import (cycle_decomposition, format_cycles, parse_one_line,
                        count_adjacent_cycles, oracle_distribution, oracle_multi)

p = parse_one_line("432157869")
print(format_cycles(cycle_decomposition(p)))
print([count_adjacent_cycles(p, q) for q in (1, 2, 3)])

# %%
from aqc import aqc_row

for q in (1, 2, 3):
    print(q, oracle_distribution(9, q), aqc_row(9, q))

# %% [markdown]
# The joint tally for several lengths at once; here S_5 with every length.

# %%
for ks, count in sorted(oracle_multi(5, (1, 2, 3, 4, 5)).items()):
    print(ks, count)
