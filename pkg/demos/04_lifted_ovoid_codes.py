# %% [markdown]
# # Lifting the ovoid code to F_{q^e}
#
# The weight of a G_O depends only on the flat cut out by the F_q-span of the
# components of a, so the enumerator is the same for every ovoid.

# %%
from codedesigns import codes
from codedesigns.families import lift

for q in (3, 5):
    f = lift.lift_formula(q, 2)
    ctx = lift.lift_tower(q, 2)
    C = lift.lift_code(ctx, lift.default_ovoid(ctx, q), 2)
    print(q, f.coefficients)
    print(q, dict(codes.enumerate_weights(C)))

# %% Ranks and flats
q, e = 3, 2
ctx = lift.lift_tower(q, e)
O = lift.default_ovoid(ctx, q)
F = ctx.subfield(q**e).elements
for a in [(1, 0, 0, 0), (1, 2, 1, 0), (1, F[4], 0, 0), (F[4], 1, F[7], F[8])]:
    print(a, lift.rank_kernel(ctx, a, O, e))

# %% Formula values far beyond enumeration
print(lift.lift_formula(101, 3).coefficients)
