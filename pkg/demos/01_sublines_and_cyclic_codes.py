# %% [markdown]
# # Sublines of PG(1, 9) and the cyclic code C_1
#
# The minimum words of the length-10 code over F_9 vanish on exactly the
# F_3-sublines of the projective line, once the coordinates are pulled back
# from the unit circle through a Cayley map.

# %%
import numpy as np

from codedesigns import codes, designs, projline as pl
from codedesigns.families import op18

st = op18.setup(3, 2, 1)
ctx = st.ctx
print(ctx, "q =", st.q, "q0 =", st.q0)

# %% Sublines: 30 of them, each with 4 points, one through every 3 points
subs = sorted(pl.enumerate_sublines(ctx, 9, 3), key=lambda S: S.points)
print(len(subs), "sublines, e.g.", subs[0].points)

# %% The code and its weight enumerator
C = op18.build_op18(3, 2, 1)
enum = codes.enumerate_weights(C)
print(enum)

# %% Minimum words vanish on sublines
rep = op18.op18_classify(C, 3, 2, 1)
print(len(rep.zero_sets), "zero sets; pulled back to sublines:", rep.sublines_match)

# weight profile of a single minimum word
idx = codes.scan(C, "min").indices[0]
word = np.array(codes.encode(C, codes.message_from_index(C, int(idx))))
print("a minimum word:", word, "zeros at", np.flatnonzero(word == 0))

# %% The supports form the complement of the Steiner system S(3, 4, 10)
res = designs.t_design_lambda(rep.design, 3)
print(f"support design: 3-(10, 6, {res.lam})")
