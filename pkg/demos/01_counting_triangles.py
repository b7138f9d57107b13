# %% [markdown]
# # Counting permutations by adjacent q-cycles
#
# An adjacent q-cycle is a cycle `(a, a+1, ..., a+q-1)`.  `count_aqc(n, k, q)`
# gives the number of permutations of {1..n} with exactly k of them.

# %%
from aqc import count_aqc, count_table, count_free

table = count_table(13, 5)
for n, row in enumerate(table.rows):
    print(f"{n:>2}", *(f"{v:>11}" for v in row))

# %% [markdown]
# Every row sums to n!, since each permutation has exactly one count.

# %%
import math

assert all(sum(row) == math.factorial(n) for n, row in enumerate(table.rows))

# %% [markdown]
# q = 1 gives fixed points; column 0 is then the derangement numbers.

# %%
print([count_free(n, 1) for n in range(11)])
print([count_aqc(6, k, 1) for k in range(7)])

# %% [markdown]
# ## Other routes to the same numbers
#
# The column relation gets a(n+q-1, k) from a(n, k-1); the first-order
# recurrence builds b_n = a(n, 0); the homogeneous recurrence builds whole rows.

# %%
from aqc import column_step, free_sequence, recurrence_table, aqc_row

print(column_step(5, 1, 5), table[9, 1])
print(free_sequence(13, 5) == [row[0] for row in table.rows])
print(recurrence_table(13, 5)[13], aqc_row(13, 5))

# %% [markdown]
# For q >= 2 almost every permutation avoids adjacent q-cycles: b_n / n!
# is squeezed between 1 - (n+1-q)!/n! and 1.

# %%
from fractions import Fraction
from aqc import free_bounds

for n in (5, 10, 20, 40):
    lo, hi = free_bounds(n, 2)
    print(n, float(Fraction(count_free(n, 2), math.factorial(n))), float(Fraction(lo, hi)))
