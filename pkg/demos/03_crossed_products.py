"""
Crossed products by G and by S(G), and the isomorphism between R x G and L/N.
"""
from exel_sgpd import (CrossedProduct, GroupoidPartialAction, SkewSemigroupoidAlgebra,
                       arrow_groupoid, check_associativity, function_algebra_context,
                       generator, iso_roundtrip, quotient_normalize)

G = arrow_groupoid()
a = GroupoidPartialAction(G, [1, 2, 3], {"e": [1, 2], "f": [3], "g": [3], "g^-1": [2]},
                          {"e": {1: 1, 2: 2}, "f": {3: 3}, "g": {2: 3}, "g^-1": {3: 2}})
ctx = function_algebra_context(a)
cp = CrossedProduct(ctx)
L = SkewSemigroupoidAlgebra(ctx)
print(f"dim R x G = {cp.dimension}, dim L = {L.dimension}")

x = cp.monomial("g", 3)
y = cp.monomial("g^-1", 2)
print("x =", x, "  y =", y)
print("xy =", x * y, "  yx =", y * x, "  xx =", x * x)
print("x* =", x.star())

print(check_associativity(cp).summary())
print(check_associativity(L).summary())

u = L.monomial(generator(G, "g"), 3) * L.monomial(generator(G, "g^-1"), 2)
print("in L:", u, "-> mod N:", quotient_normalize(u))

rep = iso_roundtrip(ctx)
print(rep.summary())
print(rep.info)
