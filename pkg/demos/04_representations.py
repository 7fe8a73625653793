"""
Representations: partial permutation matrices, S(G), C_p*(G), and back again.
"""
import numpy as np

from exel_sgpd import (AxiomViolation, GroupoidPartialAction, PartialRep, arrow_groupoid,
                       build_cp_star_algebra, cyclic_group, find_unit, regular_partial_rep,
                       rep_g_to_sg, rep_sg_to_cstar, triangle_report)
from exel_sgpd.cstar import a_t, check_a_relations

np.set_printoptions(precision=2, suppress=True)

Z2 = cyclic_group(2)
a = GroupoidPartialAction(Z2, [1, 2], {"e": [1, 2], "a": [1]},
                          {"e": {1: 1, 2: 2}, "a": {1: 1}})
p = regular_partial_rep(a)
print("pi(a) =\n", p["a"].real)
print(triangle_report(p).summary())

G1 = arrow_groupoid()
cp = build_cp_star_algebra(G1)
print(f"dim C_p*(G1) = {cp.dimension}, unit = {find_unit(cp)}")
print("a_g =", a_t(cp, "g"), "  a_g* =", a_t(cp, "g").star())
print(check_a_relations(cp).summary())

b = GroupoidPartialAction(G1, [1, 2], {"e": [1], "f": [2], "g": [2], "g^-1": [1]},
                          {"e": {1: 1}, "f": {2: 2}, "g": {1: 2}, "g^-1": {2: 1}})
print(triangle_report(regular_partial_rep(b)).summary())

# pi(e) and pi(f) overlap here, while P_{e} P_{f} = 0 in C_p*(G1)
flat = PartialRep(G1, 1, {g: [[1]] for g in G1})
try:
    rep_sg_to_cstar(rep_g_to_sg(flat))
except AxiomViolation as exc:
    print("constant representation:", exc)
