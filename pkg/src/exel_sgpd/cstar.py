"""The projection algebra generated by the P_E and the algebraic C_p*(G).

Basis symbols are P_E with E empty or E a nonempty subset of a single range
class X_g.  P_E P_F = P_{E u F} when E u F sits in one class and 0 otherwise,
so P_empty is the unit and every basis element is a projection.  G acts
partially by translation, alpha_t(P_E) = P_{tE} on
D_t = span{P_E : t, r(t) in E, E a subset of X_t}.
"""
from fractions import Fraction
from itertools import combinations

import sympy

from .actions import GroupoidPartialAction, PartialBijection
from .crossed import AlgPartialAction, CPElement, CrossedProduct
from .groupoid import Undefined
from .report import Report


class ProjectionAlgebra:
    def __init__(self, groupoid):
        G = groupoid
        self.groupoid = G
        basis = {frozenset()}
        for X in G.x_classes().values():
            pool = sorted(X, key=G.order)
            for k in range(1, len(pool) + 1):
                basis.update(frozenset(c) for c in combinations(pool, k))
        self.basis = tuple(sorted(basis, key=self._key))
        self._order = {b: i for i, b in enumerate(self.basis)}

    def _key(self, E):
        return (len(E), sorted(self.groupoid.order(x) for x in E))

    def order(self, E):
        return self._order[E]

    def class_of(self, E):
        """The unit e with E inside X_e, or None (E empty or spread over classes)."""
        ranges = {self.groupoid.r(x) for x in E}
        return ranges.pop() if len(ranges) == 1 else None

    def basis_product(self, E, F):
        U = E | F
        if not U or self.class_of(U) is not None:
            return U
        return None

    def label(self, E):
        o = self.groupoid.order
        return "P{" + ",".join(str(x) for x in sorted(E, key=o)) + "}"

    def unit(self):
        return ProjElement(self, {frozenset(): Fraction(1)})

    def P(self, *members):
        E = frozenset(members)
        if E not in self._order:
            return ProjElement(self, {})
        return ProjElement(self, {E: Fraction(1)})

    def __repr__(self):
        return f"ProjectionAlgebra(dim={len(self.basis)})"


class ProjElement:
    """A linear combination of the P_E, stored as {frozenset: scalar}."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ProjElement(self.algebra, out)

    def __sub__(self, other):
        return self + ProjElement(self.algebra, {k: -v for k, v in other.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ProjElement):
            return proj_multiply(self, other)
        return ProjElement(self.algebra, {k: v * other for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ProjElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def star(self):
        return ProjElement(self.algebra, {k: v.conjugate() for k, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        A = self.algebra
        return " + ".join(f"{v}·{A.label(k)}" for k, v in sorted(self.terms.items(),
                                                                 key=lambda kv: A.order(kv[0])))


def proj_multiply(p, q):
    A = p.algebra
    out = {}
    for E, a in p.terms.items():
        for F, b in q.terms.items():
            U = A.basis_product(E, F)
            if U is not None:
                out[U] = out.get(U, 0) + a * b
    return ProjElement(A, out)


def proj_action(t, p):
    """alpha_t(P_E) = P_{tE} when E lies in X_{t^-1}, else 0, extended linearly.

    On P_empty the rule gives P_empty; that case lies outside D_{t^-1} and is
    never reached through the partial action itself.
    """
    A = p.algebra
    G = A.groupoid
    ti = G.inv(t)
    out = {}
    for E, v in p.terms.items():
        if any(G.r(x) != G.r(ti) for x in E):
            continue
        tE = G.translate(t, E)
        if tE is Undefined:
            continue
        out[tE] = out.get(tE, 0) + v
    return ProjElement(A, out)


def D_basis(algebra, t):
    G = algebra.groupoid
    X = G.x_class(t)
    need = {t, G.r(t)}
    return frozenset(E for E in algebra.basis if need <= E and E <= X)


def translation_action(algebra):
    """The translation partial action on the basis symbols."""
    G = algebra.groupoid
    D = {t: D_basis(algebra, t) for t in G}
    maps = {t: PartialBijection({E: G.translate(t, E) for E in D[G.inv(t)]}) for t in G}
    return GroupoidPartialAction(G, algebra.basis, D, maps)


def cp_star_context(G):
    A = ProjectionAlgebra(G)
    return AlgPartialAction(A, translation_action(A))


def build_cp_star_algebra(G):
    """C_p*(G) at the algebraic level: the projection algebra crossed by translation."""
    return CrossedProduct(cp_star_context(G))


def a_t(cp, t):
    """a_t = P_{r(t), t} delta_t."""
    G = cp.G
    return cp.monomial(t, frozenset({G.r(t), t}))


def check_projection_algebra(A):
    """Commutativity, associativity, idempotent basis, unit law, star fixes basis."""
    rep = Report("projection algebra")
    one = A.unit()
    elems = [ProjElement(A, {E: Fraction(1)}) for E in A.basis]
    for p in elems:
        rep.check("idempotent", p * p == p, p)
        rep.check("self-adjoint", p.star() == p, p)
        rep.check("unit", one * p == p == p * one, p)
    for p in elems:
        for q in elems:
            rep.check("commutative", p * q == q * p, (p, q))
            for r in elems:
                rep.check("associative", (p * q) * r == p * (q * r), (p, q, r))
    return rep


def check_a_relations(cp):
    """a_s a_t a_{t^-1} = a_st a_{t^-1} on G^2 and a_t* = a_{t^-1}, exactly."""
    rep = Report("a_t relations")
    G = cp.G
    a = {t: a_t(cp, t) for t in G}
    for s, t in G.pairs:
        ti = G.inv(t)
        rep.check("a_s a_t a_t^-1 = a_st a_t^-1",
                  a[s] * a[t] * a[ti] == a[G.compose(s, t)] * a[ti], (s, t))
    for t in G:
        rep.check("a_t* = a_t^-1", a[t].star() == a[G.inv(t)], t)
    return rep


def find_unit(cp):
    """A two-sided unit of the algebra, or None when there is none."""
    basis = cp.basis
    n = len(basis)
    index = {k: i for i, k in enumerate(basis)}
    xs = sympy.symbols(f"x0:{n}")
    eqs = []
    for j, b in enumerate(basis):
        for side in (0, 1):
            coeff = [0] * n
            for i, u in enumerate(basis):
                k = cp.basis_product(u, b) if side == 0 else cp.basis_product(b, u)
                if k is not None:
                    coeff[index[k]] += xs[i]
            target = [1 if m == j else 0 for m in range(n)]
            eqs.extend(c - t for c, t in zip(coeff, target))
    sol = sympy.linsolve(eqs, xs)
    if not sol:
        return None
    vals = next(iter(sol))
    # a unit is unique when it exists; free parameters would contradict that
    vals = [v.subs({x: 0 for x in xs}) for v in vals]
    return CPElement(cp, {basis[i]: Fraction(int(v.p), int(v.q)) for i, v in enumerate(vals)})
