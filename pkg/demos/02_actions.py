"""
Partial actions of G and actions of S(G) on a two-point set.
"""
from exel_sgpd import (GroupoidPartialAction, arrow_groupoid, cyclic_group, lemma1_characterize,
                       partial_to_sg, sg_to_partial, validate_partial_action, validate_sg_action)
from exel_sgpd.actions import PartialBijection, all_partial_actions, all_sg_actions

Z2 = cyclic_group(2)
a = GroupoidPartialAction(Z2, [1, 2], {"e": [1, 2], "a": [1]},
                          {"e": {1: 1, 2: 2}, "a": {1: 1}})
print(validate_partial_action(a).summary())

b = partial_to_sg(a)
print(validate_sg_action(b).summary())
for s in b.elements:
    print(f"  beta[{s}] = {b.beta[s]!r}  on E = {sorted(b.E[s])}")
print("back to G:", sg_to_partial(b) == a)

G1 = arrow_groupoid()
partial = all_partial_actions(G1, [1, 2])
sg = all_sg_actions(G1, [1, 2])
print(f"G1 on 2 points: {len(partial)} partial actions, {len(sg)} S(G1)-actions, "
      f"bijective: {set(map(partial_to_sg, partial)) == set(sg)}")

# the map-level criterion accepts this, though D_a = {2} is not inside D_e = {1}
maps = {"a": PartialBijection({1: 2}), "e": PartialBijection({1: 1})}
res = lemma1_characterize(Z2, maps, {1, 2})
print("criterion:", res.verdict, "| derived family:", validate_partial_action(res.action).summary())
print("with regularity:", lemma1_characterize(Z2, maps, {1, 2}, require_regular=True).verdict)
