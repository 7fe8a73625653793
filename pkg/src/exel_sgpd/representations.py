"""Finite-dimensional representations: partial representations of G, representations
of S(G), covariant pairs for the translation action and *-representations of C_p*(G).

Operators are complex numpy matrices compared entrywise within ``TAU``.
"""
import json

import numpy as np

from .actions import validate_partial_action
from .cstar import a_t, cp_star_context, proj_action, ProjElement
from .crossed import CrossedProduct
from .errors import AxiomViolation, InvalidInput, MalformedSpec
from .groupoid import Undefined, label_key
from .report import Report
from .semigroupoid import enumerate_sg, epsilon, generator, multiply, star

TAU = 1e-9


def close(A, B, tau=TAU):
    return A.shape == B.shape and (A.size == 0 or float(np.max(np.abs(A - B))) <= tau)


def is_projection(P, tau=TAU):
    return close(P @ P, P, tau) and close(P.conj().T, P, tau)


def is_partial_isometry(U, tau=TAU):
    return close(U @ U.conj().T @ U, U, tau)


def _matrix(m, n):
    M = np.asarray(m, dtype=complex)
    if M.shape != (n, n):
        raise MalformedSpec(f"expected a {n}x{n} matrix, got shape {M.shape}")
    return M


class PartialRep:
    """t -> pi(t) for t in G."""

    def __init__(self, groupoid, dim, pi):
        self.groupoid = groupoid
        self.dim = dim
        self.pi = {g: _matrix(pi[g], dim) for g in groupoid}

    def __getitem__(self, g):
        return self.pi[g]

    def equals(self, other, tau=TAU):
        return self.dim == other.dim and all(close(self.pi[g], other.pi[g], tau)
                                             for g in self.groupoid)

    def to_spec(self):
        return {"dim": self.dim,
                "pi": {str(g): [[[z.real, z.imag] for z in row] for row in self.pi[g]]
                       for g in self.groupoid}}


class SGRep:
    """alpha -> pi(alpha) for alpha in S(G)."""

    def __init__(self, groupoid, dim, pi, elements=None):
        self.groupoid = groupoid
        self.dim = dim
        self.elements = tuple(elements) if elements is not None else enumerate_sg(groupoid)
        self.pi = {s: _matrix(pi[s], dim) for s in self.elements}

    def __getitem__(self, s):
        return self.pi[s]

    def equals(self, other, tau=TAU):
        return self.dim == other.dim and all(close(self.pi[s], other.pi[s], tau)
                                             for s in self.elements)


class CovariantRep:
    """A representation rho of the projection algebra on its basis symbols,
    with partial isometries u_g."""

    def __init__(self, ctx, dim, rho, u):
        self.ctx = ctx
        self.groupoid = ctx.groupoid
        self.dim = dim
        self.rho = {E: _matrix(rho[E], dim) for E in ctx.algebra.basis}
        self.u = {g: _matrix(u[g], dim) for g in self.groupoid}

    def rho_of(self, p):
        """rho extended linearly to a ProjElement."""
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for E, v in p.terms.items():
            out += complex(v) * self.rho[E]
        return out


class CStarRep:
    """A linear map C_p*(G) -> M_n, given on the basis monomials P_E delta_t."""

    def __init__(self, cp, dim, images):
        self.cp = cp
        self.groupoid = cp.G
        self.dim = dim
        self.images = {k: _matrix(images[k], dim) for k in cp.basis}

    def __call__(self, x):
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for k, v in x.terms.items():
            out += complex(v) * self.images[k]
        return out

    def equals(self, other, tau=TAU):
        return self.dim == other.dim and all(close(self.images[k], other.images[k], tau)
                                             for k in self.cp.basis)


# -- checkers --------------------------------------------------------------------

def check_partial_rep(p, tau=TAU):
    G, pi = p.groupoid, p.pi
    rep = Report("partial representation")
    for s, t in G.pairs:
        ti, st = G.inv(t), G.compose(s, t)
        rep.check("PR1", close(pi[s] @ pi[t] @ pi[ti], pi[st] @ pi[ti], tau), (s, t))
        si = G.inv(s)
        rep.check("PR1-left", close(pi[si] @ pi[s] @ pi[t], pi[si] @ pi[st], tau), (s, t))
    for s in G:
        rep.check("PR2", close(pi[G.inv(s)], pi[s].conj().T, tau), s)
    for e in G.units:
        rep.check("PR3", is_projection(pi[e], tau), e)
    return rep


def check_sg_rep(r, tau=TAU):
    pi = r.pi
    rep = Report("S(G) representation")
    for a in r.elements:
        for b in r.elements:
            ab = multiply(a, b)
            if ab is not Undefined:
                rep.check("R1", close(pi[ab], pi[a] @ pi[b], tau), (a, b))
        rep.check("R2", close(pi[star(a)], pi[a].conj().T, tau), a)
        if a.is_idempotent():
            rep.check("R3", is_projection(pi[a], tau), a)
    return rep


def check_covariant(c, tau=TAU):
    """*-representation of the projection algebra, (CR1)-(CR3), partial isometries,
    and the consequences rho(x) u_g u_g^-1 = rho(x) = u_g u_g^-1 rho(x) on D_g."""
    ctx, G, A = c.ctx, c.groupoid, c.ctx.algebra
    rho, u = c.rho, c.u
    zero = np.zeros((c.dim, c.dim), dtype=complex)
    rep = Report("covariant representation")
    rep.check("rho-unital", close(rho[frozenset()], np.eye(c.dim), tau), None)
    for E in A.basis:
        rep.check("rho-self-adjoint", close(rho[E].conj().T, rho[E], tau), E)
        for F in A.basis:
            U = A.basis_product(E, F)
            rep.check("rho-multiplicative",
                      close(rho[E] @ rho[F], zero if U is None else rho[U], tau), (E, F))
    for g in G:
        gi = G.inv(g)
        rep.check("CR3", close(u[g].conj().T, u[gi], tau), g)
        rep.check("partial-isometry", is_partial_isometry(u[g], tau), g)
        for E in ctx.D(gi):
            x = ProjElement(A, {E: 1})
            rep.check("CR1", close(u[g] @ rho[E] @ u[gi], c.rho_of(proj_action(g, x)), tau),
                      (g, E))
        for E in ctx.D(g):
            rep.check("absorb-right", close(rho[E] @ u[g] @ u[gi], rho[E], tau), (g, E))
            rep.check("absorb-left", close(u[g] @ u[gi] @ rho[E], rho[E], tau), (g, E))
    for g in G:
        for h in G:
            gh = G.compose(g, h)
            for E in ctx.D(g):
                if gh is Undefined:
                    rep.check("CR2-zero", close(rho[E] @ u[g] @ u[h], zero, tau), (g, h, E))
                elif E in ctx.D(gh):
                    rep.check("CR2", close(rho[E] @ u[g] @ u[h], rho[E] @ u[gh], tau), (g, h, E))
    return rep


def check_cstar_rep(phi, tau=TAU):
    """Multiplicativity and the star law on all basis pairs of C_p*(G)."""
    cp, im = phi.cp, phi.images
    zero = np.zeros((phi.dim, phi.dim), dtype=complex)
    rep = Report("C_p*(G) representation")
    for k1 in cp.basis:
        for k2 in cp.basis:
            k = cp.basis_product(k1, k2)
            rep.check("multiplicative", close(im[k1] @ im[k2], zero if k is None else im[k], tau),
                      (k1, k2))
        x = cp.element({k1: 1})
        rep.check("star", close(phi(x.star()), im[k1].conj().T, tau), k1)
    return rep


# -- constructions ---------------------------------------------------------------

def regular_partial_rep(a):
    """Partial permutation matrices of the alpha_g on the free span of X."""
    rep = validate_partial_action(a)
    if not rep.ok:
        raise InvalidInput("partial action fails validation: " + ", ".join(rep.failed_axioms()),
                           rep)
    pts = sorted(a.points, key=label_key)
    idx = {x: i for i, x in enumerate(pts)}
    n = len(pts)
    pi = {}
    for g in a.groupoid:
        M = np.zeros((n, n), dtype=complex)
        for x, y in a.alpha[g].items():
            M[idx[y], idx[x]] = 1
        pi[g] = M
    return PartialRep(a.groupoid, n, pi)


def _require(report, what):
    if not report.ok:
        raise InvalidInput(f"{what} fails its axioms: " + ", ".join(report.failed_axioms()), report)


def rep_g_to_sg(p, tau=TAU):
    """pi-bar on a standard form is the product of pi along its word."""
    _require(check_partial_rep(p, tau), "partial representation")
    G = p.groupoid
    out = {}
    for s in enumerate_sg(G):
        M = np.eye(p.dim, dtype=complex)
        for x in s.word():
            M = M @ p.pi[x]
        out[s] = M
    return SGRep(G, p.dim, out)


def rep_sg_to_g(r, tau=TAU):
    _require(check_sg_rep(r, tau), "S(G) representation")
    G = r.groupoid
    return PartialRep(G, r.dim, {g: r.pi[generator(G, g)] for g in G})


def q_element(G, E):
    """The idempotent eps(x_1)...eps(x_n) of S(G) for E = {x_1, ..., x_n} in one class."""
    acc = None
    for x in sorted(E, key=G.order):
        e = epsilon(G, x)
        acc = e if acc is None else multiply(acc, e)
    return acc


def covariant_from_sg_rep(r, ctx=None):
    """rho(P_E) = Q_E = pi(eps_E), Q_empty = I, and u_g = pi([g])."""
    G = r.groupoid
    ctx = ctx or cp_star_context(G)
    rho = {}
    for E in ctx.algebra.basis:
        rho[E] = np.eye(r.dim, dtype=complex) if not E else r.pi[q_element(G, E)]
    u = {g: r.pi[generator(G, g)] for g in G}
    return CovariantRep(ctx, r.dim, rho, u)


def pi_times_u(c):
    """(rho x u)(a delta_g) = rho(a) u_g on basis monomials."""
    cp = CrossedProduct(c.ctx)
    return CStarRep(cp, c.dim, {(g, E): c.rho[E] @ c.u[g] for g, E in cp.basis})


def rep_sg_to_cstar(r, tau=TAU):
    """Representation of S(G) -> *-representation rho x u of C_p*(G).

    Raises InvalidInput when r fails its axioms and AxiomViolation (carrying
    the report) when rho x u is not a *-homomorphism.
    """
    _require(check_sg_rep(r, tau), "S(G) representation")
    c = covariant_from_sg_rep(r)
    phi = pi_times_u(c)
    rep = check_cstar_rep(phi, tau)
    if not rep.ok:
        v = rep.violations[0]
        raise AxiomViolation(f"rho x u is not a *-homomorphism: {v.axiom} at {v.witness!r}", rep)
    return phi


def rep_cstar_to_g(phi, tau=TAU):
    """pi(t) = phi(a_t)."""
    _require(check_cstar_rep(phi, tau), "C_p*(G) representation")
    G = phi.groupoid
    return PartialRep(G, phi.dim, {t: phi(a_t(phi.cp, t)) for t in G})


def triangle_report(p, tau=TAU):
    """Go round G -> S(G) -> C_p*(G) -> G starting from each corner."""
    rep = Report("representation triangle")
    rep.extend(check_partial_rep(p, tau), "a/")
    r = rep_g_to_sg(p, tau)
    rep.extend(check_sg_rep(r, tau), "b/")
    phi = rep_sg_to_cstar(r, tau)
    rep.extend(check_cstar_rep(phi, tau), "c/")
    rep.extend(check_covariant(covariant_from_sg_rep(r), tau), "cov/")
    rep.check("a->b->c->a", rep_cstar_to_g(phi, tau).equals(p, tau))
    rep.check("b->c->a->b", rep_g_to_sg(rep_cstar_to_g(phi, tau), tau).equals(r, tau))
    rep.check("c->a->b->c",
              rep_sg_to_cstar(rep_g_to_sg(rep_cstar_to_g(phi, tau), tau), tau).equals(phi, tau))
    rep.check("a->b->a", rep_sg_to_g(r, tau).equals(p, tau))
    return rep


# -- serialization ---------------------------------------------------------------

def rep_from_spec(G, spec):
    """Read {"dim": n, "pi": {element: [[[re, im], ...], ...]}}."""
    try:
        n = int(spec["dim"])
        by_name = {str(g): g for g in G}
        pi = {}
        for name, rows in spec["pi"].items():
            if name not in by_name:
                raise MalformedSpec(f"unknown element {name!r}")
            pi[by_name[name]] = [[complex(re, im) for re, im in row] for row in rows]
        missing = [g for g in G if g not in pi]
        if missing:
            raise MalformedSpec(f"no matrix for {missing!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedSpec(f"bad representation spec: {exc}") from exc
    return PartialRep(G, n, pi)


def load_rep(G, path):
    with open(path) as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"{path}: {exc}") from exc
    return rep_from_spec(G, spec)
