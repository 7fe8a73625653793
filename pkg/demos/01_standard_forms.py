"""
S(G) for a few small groupoids: standard forms, products, and the word-problem oracle.
"""
from exel_sgpd import (arrow_groupoid, cyclic_group, disjoint_union, enumerate_sg, generator,
                       normalize_word, star)
from exel_sgpd.oracle import compare_with_normal_forms, oracle_congruence_enumerate

G = arrow_groupoid()   # g : e -> f and its inverse
S = enumerate_sg(G)
print(f"|S(G1)| = {len(S)}")
for s in S:
    print(f"  {str(s):12s} star = {star(s)}")

# [g][g^-1] is the idempotent eps(g), and eps(g)[g] collapses back to [g]
g, gi = generator(G, "g"), generator(G, "g^-1")
print("[g][g^-1]      =", g * gi)
print("[g][g^-1][g]   =", normalize_word(G, ["g", "g^-1", "g"]))

Z3 = cyclic_group(3)
print("[a]^3 in Z3    =", normalize_word(Z3, ["a", "a", "a"]))

# brute-force congruence closure over all words of length <= 6
res = oracle_congruence_enumerate(Z3, 6)
print(f"oracle: {len(res.classes)} classes, counts {res.counts}, "
      f"disagreements {compare_with_normal_forms(res, lambda w: normalize_word(Z3, w))}")

for parts in ([cyclic_group(2), cyclic_group(2)], [cyclic_group(2), cyclic_group(3)]):
    U = disjoint_union(parts)
    print(f"|S(union)| = {len(enumerate_sg(U))} = "
          + " + ".join(str(len(enumerate_sg(P))) for P in parts))
