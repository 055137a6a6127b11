# %% [markdown]
# # Which multipliers admit a constacyclic ovoid code?
#
# Exactly the nonsquares of F_q.  For each nonsquare lambda a suitable theta
# in F_{q^4} walks a single orbit around the quadric, and its powers give the
# generator columns.

# %%
from codedesigns import codes
from codedesigns.families import op28

for q in (3, 5, 7, 9, 11):
    ctx = op28.tower(q)
    units = ctx.subfield(q).elements[1:]
    print(q, [lam for lam in units if op28.op28_exists(q, lam, ctx)])

# %% A witness for q = 3, lambda = -1
w = op28.op28_construct(3, 2)
print("b =", w.b, "c =", w.c, "theta =", w.theta)
print(w.generator)
print(codes.enumerate_weights(w.code))

# %% Nothing else can work: every admissible theta has a nonsquare norm
print(op28.op28_exhaustive_necessity(3), op28.op28_exhaustive_necessity(5))
print({q: op28.gcd_battery(q) for q in (3, 5, 7, 9, 11, 23)})
