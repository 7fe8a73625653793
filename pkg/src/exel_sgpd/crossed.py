"""Algebraic crossed products by partial actions of G and by actions of S(G).

The coefficient algebras handled here have a basis closed under products up
to zero (indicator functions, projections P_E), the ideals D_g are spanned by
basis subsets and each alpha_g permutes basis elements.  A partial action on
such an algebra is therefore a set-level partial action on its basis, and the
crossed products inherit 0/1 structure constants: the product of two basis
monomials is a basis monomial or zero.

Scalars are exact (Fraction) unless complex coefficients are passed in.
"""
import random
from fractions import Fraction
from itertools import product

import sympy

from .actions import GroupoidPartialAction, partial_to_sg, validate_partial_action
from .errors import ContextMismatch, InconsistentResult, InvalidInput
from .groupoid import Undefined, label_key
from .report import Report
from .semigroupoid import generator, leq, multiply as sg_multiply, star as sg_star


class FunctionAlgebra:
    """Scalar functions on a finite set Y, spanned by the point indicators 1_y."""

    def __init__(self, points):
        self.basis = tuple(sorted(points, key=label_key))
        self._order = {b: i for i, b in enumerate(self.basis)}

    def basis_product(self, p, q):
        return p if p == q else None

    def order(self, b):
        return self._order[b]

    def unit(self):
        return {b: Fraction(1) for b in self.basis}

    def label(self, b):
        return f"1[{b}]"

    def __repr__(self):
        return f"FunctionAlgebra({list(self.basis)!r})"


def algebra_multiply(algebra, x, y):
    """Product of two coefficient-algebra elements given as {basis: scalar}."""
    out = {}
    for p, a in x.items():
        for q, b in y.items():
            m = algebra.basis_product(p, q)
            if m is not None:
                out[m] = out.get(m, 0) + a * b
    return {k: v for k, v in out.items() if v != 0}


class AlgPartialAction:
    """A partial action of G on a basis algebra, given at the level of the basis."""

    def __init__(self, algebra, action):
        self.algebra = algebra
        self.action = action
        self.groupoid = action.groupoid

    def D(self, g):
        return self.action.D[g]

    def alpha(self, g, b):
        return self.action.alpha[g](b)

    def validate(self):
        """Partial action axioms plus the algebra conditions: each D_g an
        idempotent ideal, each alpha_g multiplicative."""
        A, G = self.algebra, self.groupoid
        rep = Report("algebra partial action")
        rep.check("points-are-basis", self.action.points <= set(A.basis), None)
        rep.extend(validate_partial_action(self.action))
        for g in G:
            Dg = self.D(g)
            for b in sorted(Dg, key=A.order):
                rep.check("ideal-idempotent", A.basis_product(b, b) == b, (g, b))
                for c in A.basis:
                    for m in (A.basis_product(b, c), A.basis_product(c, b)):
                        rep.check("D_g-ideal", m is None or m in Dg, (g, b, c))
            al = self.action.alpha[g]
            dom = sorted(self.D(G.inv(g)), key=A.order)
            for b in dom:
                for c in dom:
                    m = A.basis_product(b, c)
                    lhs = None if m is None else al.get(m)
                    rhs = A.basis_product(al.get(b), al.get(c)) if b in al.domain and c in al.domain else None
                    rep.check("alpha-multiplicative", lhs == rhs, (g, b, c))
        return rep


def function_algebra_context(action):
    """Pull a set-level partial action back to functions: alpha_g(1_x) = 1_{alpha_g(x)}."""
    return AlgPartialAction(FunctionAlgebra(action.points), action)


# -- skew algebras ---------------------------------------------------------------

class SkewElement:
    """A finite sum of monomials a delta_i, stored as {(i, basis): scalar}."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent, terms):
        self.parent = parent
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def _coerce(self, other):
        if not isinstance(other, SkewElement):
            return None
        if other.parent is not self.parent:
            raise ContextMismatch("elements of different crossed products")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return type(self)(self.parent, out)

    def __neg__(self):
        return type(self)(self.parent, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SkewElement):
            self._coerce(other)
            return self.parent.multiply(self, other)
        return type(self)(self.parent, {k: v * other for k, v in self.terms.items()})

    def __rmul__(self, scalar):
        return type(self)(self.parent, {k: scalar * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SkewElement):
            return NotImplemented
        return self.parent is other.parent and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def star(self):
        return self.parent.star(self)

    def support(self):
        return {i for i, _ in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{v}·{self.parent.label(k)}" for k, v in
                 sorted(self.terms.items(), key=lambda kv: self.parent.key_order(kv[0]))]
        return " + ".join(parts)

    def to_json(self):
        from .report import jsonable
        return [[str(i), self.parent.algebra_label(b), jsonable(v)]
                for (i, b), v in sorted(self.terms.items(),
                                        key=lambda kv: self.parent.key_order(kv[0]))]


class CPElement(SkewElement):
    __slots__ = ()


class LElement(SkewElement):
    __slots__ = ()


class _SkewAlgebra:
    element_class = SkewElement

    def __init__(self, ctx):
        self.ctx = ctx
        self.A = ctx.algebra
        self.G = ctx.groupoid
        self._basis = None
        self._products = {}

    # subclasses define: index_basis(), _index_order, coefficient_space(i),
    # _index_product(i, j), _pre(i, b), _post(i, b), _star_key(key)

    @property
    def basis(self):
        if self._basis is None:
            self._basis = tuple((i, b) for i in self.indices()
                                for b in sorted(self.coefficient_space(i), key=self.A.order))
        return self._basis

    @property
    def dimension(self):
        return len(self.basis)

    def key_order(self, key):
        i, b = key
        return (self._index_order(i), self.A.order(b))

    def algebra_label(self, b):
        return self.A.label(b) if hasattr(self.A, "label") else str(b)

    def label(self, key):
        i, b = key
        return f"{self.algebra_label(b)}δ[{i}]"

    def zero(self):
        return self.element_class(self, {})

    def monomial(self, i, b, coeff=1):
        if b not in self.coefficient_space(i):
            raise InvalidInput(f"{b!r} is not in the coefficient ideal at {i}")
        if isinstance(coeff, int):
            coeff = Fraction(coeff)
        return self.element_class(self, {(i, b): coeff})

    def element(self, terms):
        """Build an element from {(index, basis): scalar}, checking membership."""
        for (i, b) in terms:
            if b not in self.coefficient_space(i):
                raise InvalidInput(f"{b!r} is not in the coefficient ideal at {i}")
        return self.element_class(self, dict(terms))

    def basis_elements(self):
        return [self.element_class(self, {k: Fraction(1)}) for k in self.basis]

    def basis_product(self, k1, k2):
        """Product of two basis monomials: a basis key or None (zero)."""
        try:
            return self._products[k1, k2]
        except KeyError:
            pass
        (i, p), (j, q) = k1, k2
        ij = self._index_product(i, j)
        out = None
        if ij is not Undefined:
            m = self.A.basis_product(self._pre(i, p), q)
            if m is not None:
                out = (ij, self._post(i, m))
        self._products[k1, k2] = out
        return out

    def multiply(self, x, y):
        if x.parent is not self or y.parent is not self:
            raise ContextMismatch("operands belong to a different crossed product")
        out = {}
        for k1, a in x.terms.items():
            for k2, b in y.terms.items():
                k = self.basis_product(k1, k2)
                if k is not None:
                    out[k] = out.get(k, 0) + a * b
        return self.element_class(self, out)

    def star(self, x):
        out = {}
        for k, v in x.terms.items():
            kk = self._star_key(k)
            out[kk] = out.get(kk, 0) + v.conjugate()
        return self.element_class(self, out)

    def structure_constants(self):
        """{(k1, k2): k} over basis pairs with nonzero product."""
        table = {}
        for k1 in self.basis:
            for k2 in self.basis:
                k = self.basis_product(k1, k2)
                if k is not None:
                    table[k1, k2] = k
        return table


class CrossedProduct(_SkewAlgebra):
    """R x_alpha G = sum of D_g delta_g with
    (a delta_g)(b delta_h) = alpha_g(alpha_{g^-1}(a) b) delta_gh when gh exists."""

    element_class = CPElement

    def indices(self):
        return self.G.elements

    def _index_order(self, g):
        return self.G.order(g)

    def coefficient_space(self, g):
        return self.ctx.D(g)

    def _index_product(self, g, h):
        return self.G.compose(g, h)

    def _pre(self, g, p):
        return self.ctx.alpha(self.G.inv(g), p)

    def _post(self, g, m):
        return self.ctx.alpha(g, m)

    def _star_key(self, key):
        g, p = key
        gi = self.G.inv(g)
        return (gi, self.ctx.alpha(gi, p))

    def __repr__(self):
        return f"CrossedProduct(dim={self.dimension})"


class SkewSemigroupoidAlgebra(_SkewAlgebra):
    """L = sum of E_s delta_s over S(G), for the S(G)-action induced by the context.

    (a delta_s)(b delta_t) = beta_s(beta_{s*}(a) b) delta_st when st exists.
    """

    element_class = LElement

    def __init__(self, ctx):
        super().__init__(ctx)
        self.sg_action = partial_to_sg(ctx.action)
        self.elements = self.sg_action.elements
        self._eorder = {s: i for i, s in enumerate(self.elements)}

    def indices(self):
        return self.elements

    def _index_order(self, s):
        return self._eorder[s]

    def coefficient_space(self, s):
        return self.sg_action.E[s]

    def _index_product(self, s, t):
        return sg_multiply(s, t)

    def _pre(self, s, p):
        return self.sg_action.beta[sg_star(s)](p)

    def _post(self, s, m):
        return self.sg_action.beta[s](m)

    def _star_key(self, key):
        s, p = key
        ss = sg_star(s)
        return (ss, self.sg_action.beta[ss](p))

    def generator_index(self, g):
        return generator(self.G, g)

    def n_generators(self):
        """The spanning set a delta_r - a delta_t of N (r <= t, a a basis element of E_r)."""
        out = []
        for r in self.elements:
            for t in self.elements:
                if r == t or not leq(r, t):
                    continue
                for b in sorted(self.coefficient_space(r), key=self.A.order):
                    if b not in self.coefficient_space(t):
                        raise InconsistentResult(f"E_{r} is not inside E_{t} although {r} <= {t}")
                    out.append((r, t, b))
        return out

    def __repr__(self):
        return f"SkewSemigroupoidAlgebra(dim={self.dimension})"


def quotient_normalize(x):
    """Canonical representative of x + N: every a delta_s becomes a delta_[d(s)]."""
    L = x.parent
    out = {}
    for (s, b), v in x.terms.items():
        g = generator(L.G, s.anchor)
        if b not in L.coefficient_space(g):
            raise InconsistentResult(f"{b!r} in E_{s} but not in E_{g}")
        out[g, b] = out.get((g, b), 0) + v
    return LElement(L, out)


def phi_map(x, L):
    """R x G -> L/N on representatives: a delta_g -> a delta_[g]."""
    return LElement(L, {(generator(L.G, g), b): v for (g, b), v in x.terms.items()})


def psi_map(y, cp):
    """L -> R x G: a delta_s -> a delta_{d(s)}, where d is the degree map."""
    out = {}
    for (s, b), v in y.terms.items():
        k = (s.anchor, b)
        out[k] = out.get(k, 0) + v
    return CPElement(cp, out)


def exact_rank(rows, ncols):
    if not rows:
        return 0
    return sympy.Matrix(len(rows), ncols, lambda i, j: rows[i][j]).rank()


def quotient_dimension(L):
    """dim L - rank N, computed by exact linear algebra from N's spanning set."""
    index = {k: i for i, k in enumerate(L.basis)}
    rows = []
    for r, t, b in L.n_generators():
        row = [0] * L.dimension
        row[index[r, b]] += 1
        row[index[t, b]] -= 1
        rows.append(row)
    return L.dimension - exact_rank(rows, L.dimension)


def _triples(basis, trials, seed):
    if trials is None:
        return product(basis, repeat=3)
    rng = random.Random(seed)
    return [tuple(rng.choice(basis) for _ in range(3)) for _ in range(trials)]


def check_associativity(algebra, trials=None, seed=0):
    """(xy)z = x(yz) on basis triples: all of them by default, else `trials` random ones."""
    rep = Report(f"associativity of {algebra!r}")
    for k1, k2, k3 in _triples(algebra.basis, trials, seed):
        a = algebra.basis_product(k1, k2)
        left = None if a is None else algebra.basis_product(a, k3)
        b = algebra.basis_product(k2, k3)
        right = None if b is None else algebra.basis_product(k1, b)
        rep.check("associativity", left == right, (k1, k2, k3))
    return rep


def check_star(algebra, trials=None, seed=0):
    """x** = x and (xy)* = y* x* on basis monomials."""
    rep = Report(f"involution of {algebra!r}")
    elems = algebra.basis_elements()
    for x in elems:
        rep.check("star-involutive", x.star().star() == x, x.to_json())
    pairs = product(elems, repeat=2) if trials is None else [
        (random.Random(seed + i).choice(elems), random.Random(seed - i - 1).choice(elems))
        for i in range(trials)]
    for x, y in pairs:
        rep.check("star-antimultiplicative", (x * y).star() == y.star() * x.star(),
                  (x.to_json(), y.to_json()))
    return rep


def iso_roundtrip(ctx):
    """Check that a delta_g -> a delta_[g] is an isomorphism R x G -> L/N.

    Evaluated on basis monomials: multiplicativity of phi and of psi (on all
    of L), N inside ker psi, psi o phi = id, phi o psi = id on quotient
    representatives, star compatibility, and the dimension count
    dim(R x G) = sum dim D_g = dim L - rank N.
    """
    rep = Report("crossed product isomorphism")
    cp = CrossedProduct(ctx)
    L = SkewSemigroupoidAlgebra(ctx)
    for x in cp.basis_elements():
        for y in cp.basis_elements():
            rep.check("phi-multiplicative",
                      phi_map(x * y, L) == quotient_normalize(phi_map(x, L) * phi_map(y, L)),
                      (x.to_json(), y.to_json()))
        rep.check("psi-phi-identity", psi_map(phi_map(x, L), cp) == x, x.to_json())
        rep.check("phi-star",
                  phi_map(x.star(), L) == quotient_normalize(phi_map(x, L).star()), x.to_json())
    for u in L.basis_elements():
        for v in L.basis_elements():
            rep.check("psi-multiplicative", psi_map(u * v, cp) == psi_map(u, cp) * psi_map(v, cp),
                      (u.to_json(), v.to_json()))
        q = quotient_normalize(u)
        rep.check("phi-psi-identity", phi_map(psi_map(q, cp), L) == q, u.to_json())
    for r, t, b in L.n_generators():
        gen = L.monomial(r, b) - L.monomial(t, b)
        rep.check("N-in-kernel", psi_map(gen, cp).is_zero(), (r, t, b))
        rep.check("N-normalizes-to-zero", quotient_normalize(gen).is_zero(), (r, t, b))
    sum_d = sum(len(ctx.D(g)) for g in ctx.groupoid)
    q_reps = {quotient_normalize(u).support().pop() for u in L.basis_elements()}
    quotient_basis = sum(len(L.coefficient_space(g)) for g in q_reps)
    dim_q = quotient_dimension(L)
    rep.info.update({"dim_crossed_product": cp.dimension, "sum_dim_D": sum_d,
                     "dim_L": L.dimension, "dim_L_mod_N": dim_q,
                     "quotient_representatives": quotient_basis})
    rep.check("dimension", cp.dimension == sum_d == dim_q == quotient_basis, None,
              f"{cp.dimension}, {sum_d}, {dim_q}, {quotient_basis}")
    return rep


def crossed_product_report(ctx, seed=0):
    """Validation, associativity of R x G and of L, involution, isomorphism."""
    rep = Report("crossed products")
    v = ctx.validate()
    rep.extend(v, "context/")
    if not v.ok:
        return rep
    cp = CrossedProduct(ctx)
    L = SkewSemigroupoidAlgebra(ctx)
    rep.extend(check_associativity(cp), "RxG/")
    rep.extend(check_associativity(L), "L/")
    rep.extend(check_star(cp), "RxG/")
    rep.extend(iso_roundtrip(ctx), "iso/")
    rep.info["seed"] = seed
    return rep


__all__ = [
    "FunctionAlgebra", "AlgPartialAction", "function_algebra_context", "algebra_multiply",
    "CrossedProduct", "SkewSemigroupoidAlgebra", "CPElement", "LElement",
    "quotient_normalize", "phi_map", "psi_map", "quotient_dimension",
    "check_associativity", "check_star", "iso_roundtrip", "crossed_product_report",
    "GroupoidPartialAction",
]
