# %% [markdown]
# # N+ over F_25: Baer sublines and plane sections of an elliptic quadric
#
# Three collections of 130 six-point sets turn out to be the same: the
# minimum zero sets of the code, the Baer sublines of PG(1, 25), and the
# non-tangent plane sections of the quadric X0 X3 = X1^2 - mu X2^2.

# %%
from collections import Counter

from codedesigns import designs, pg3
from codedesigns.families import op27

q = 5
C = op27.build_op27(q)
rep = op27.op27_classify(C, q)
print(C, "min weight", rep.min_weight, "A_min", rep.a_min)

# %% The three families
print(len(rep.zero_sets), len(rep.baer_sublines), len(rep.quadric_sections))
print("all equal:", rep.triple_equality)

# %% Plane sections of the quadric have size 1 or 6 and nothing else
ctx, zeta = rep.setup.ctx, rep.setup.zeta
O = pg3.iota_quadric(ctx, q, zeta)
print(Counter(len(pg3.plane_section(ctx, P, O)) for P in pg3.planes(ctx, q)))

# %% Incidence inventory matches the closed formulas
print(pg3.inventory(ctx, O))
print(pg3.inventory_formulas(q))

# %% Support design
res = designs.t_design_lambda(rep.design, 3)
print(f"3-(26, 20, {res.lam})")
