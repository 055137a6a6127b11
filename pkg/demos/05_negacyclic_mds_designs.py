# %% [markdown]
# # Negacyclic MDS codes and complete 5-designs
#
# In an MDS code every w-set with d <= w <= q carries the same number of
# words, so the weight-d supports are all d-subsets.

# %%
from math import comb

from codedesigns import codes
from codedesigns.families import mds

C = mds.build_mds(23, 5)
enum = codes.enumerate_weights(C)
print(C, enum.minimum_distance, enum[7], comb(11, 7) * codes.mds_exact_support_count(23, 7, 7))

# %%
chk = mds.saturation_check(C, 7)
print(len(chk.observed), "supports; lambda at t=5:", mds.design_lambda(chk, 5))

# %% Larger q: rank test plus sampled shortened-code counts
for q in (25, 27):
    n, k, d = mds.op41_params(q)
    C = mds.build_mds(q, k)
    chk = mds.saturation_check(C, d)
    print(q, (n, k, d), chk.mode, chk.saturated, mds.design_lambda(chk, 5))
