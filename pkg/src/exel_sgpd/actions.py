"""Partial actions of G and actions of S(G) on finite sets, and the bijection
between them.
"""
import json
from itertools import combinations, permutations, product
from typing import NamedTuple

from .errors import InvalidInput, MalformedSpec
from .groupoid import Undefined, label_key
from .report import Report
from .semigroupoid import enumerate_sg, generator, multiply, star


def _sorted(xs):
    return sorted(xs, key=label_key)


class PartialBijection:
    """An injective map from a finite domain, i.e. an element of I(X).

    Composition uses the largest possible domain:
    dom(f * g) = g^-1(dom f & im g).
    """

    __slots__ = ("_map", "_hash")

    def __init__(self, mapping=()):
        m = dict(mapping)
        if len(set(m.values())) != len(m):
            raise ValueError("map is not injective")
        self._map = m
        self._hash = hash(frozenset(m.items()))

    @classmethod
    def identity(cls, subset):
        return cls({x: x for x in subset})

    @property
    def domain(self):
        return frozenset(self._map)

    @property
    def image(self):
        return frozenset(self._map.values())

    def __call__(self, x):
        return self._map[x]

    def get(self, x, default=None):
        return self._map.get(x, default)

    def items(self):
        return self._map.items()

    def __len__(self):
        return len(self._map)

    def __eq__(self, other):
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{x!r}: {self._map[x]!r}" for x in _sorted(self._map))
        return f"PartialBijection({{{body}}})"

    def __mul__(self, other):
        """self * other = self after other."""
        return self.compose(other)

    def compose(self, other):
        return PartialBijection({x: self._map[y] for x, y in other._map.items()
                                 if y in self._map})

    def inverse(self):
        return PartialBijection({y: x for x, y in self._map.items()})

    def apply_set(self, subset):
        """f(S) = {f(x) : x in S & dom f}."""
        return frozenset(self._map[x] for x in subset if x in self._map)

    def preimage(self, subset):
        return frozenset(x for x, y in self._map.items() if y in subset)

    def restrict(self, subset):
        return PartialBijection({x: y for x, y in self._map.items() if x in subset})

    def is_identity(self):
        return all(x == y for x, y in self._map.items())

    def to_json(self):
        return {str(x): self._map[x] for x in _sorted(self._map)}


def compose_all(maps):
    """maps[0] * maps[1] * ... * maps[-1]."""
    maps = list(maps)
    out = maps[-1]
    for f in reversed(maps[:-1]):
        out = f * out
    return out


class GroupoidPartialAction:
    """A family (D_g, alpha_g : D_{g^-1} -> D_g) indexed by a groupoid.

    Nothing is checked on construction; see :func:`validate_partial_action`.
    """

    def __init__(self, groupoid, points, domains, maps):
        self.groupoid = groupoid
        self.points = frozenset(points)
        self.D = {g: frozenset(domains[g]) for g in groupoid}
        self.alpha = {g: maps[g] if isinstance(maps[g], PartialBijection)
                      else PartialBijection(maps[g]) for g in groupoid}

    @classmethod
    def from_maps(cls, groupoid, points, maps):
        """Take D_g to be the image of alpha_g."""
        maps = {g: m if isinstance(m, PartialBijection) else PartialBijection(m)
                for g, m in maps.items()}
        return cls(groupoid, points, {g: maps[g].image for g in groupoid}, maps)

    def __eq__(self, other):
        if not isinstance(other, GroupoidPartialAction):
            return NotImplemented
        return (self.groupoid == other.groupoid and self.points == other.points
                and self.D == other.D and self.alpha == other.alpha)

    def __hash__(self):
        return hash((frozenset(self.D.items()), frozenset(self.alpha.items())))

    def __repr__(self):
        return f"GroupoidPartialAction(D={ {g: _sorted(v) for g, v in self.D.items()} })"

    def to_spec(self):
        return {
            "set": _sorted(self.points),
            "D": {g: _sorted(self.D[g]) for g in self.groupoid},
            "alpha": {g: self.alpha[g].to_json() for g in self.groupoid},
        }


def action_from_spec(groupoid, spec):
    """Read {"set": [...], "D": {g: [...]}, "alpha": {g: {point: point}}}.

    JSON object keys are strings, so map keys are matched back to points by
    their string form.
    """
    try:
        points = list(spec["set"])
        by_name = {str(x): x for x in points}
        if len(by_name) != len(points):
            raise MalformedSpec("points must have distinct string forms")
        D, alpha = {}, {}
        for g in groupoid:
            D[g] = [by_name[str(x)] for x in spec["D"][g]]
            alpha[g] = PartialBijection({by_name[str(k)]: by_name[str(v)]
                                         for k, v in spec["alpha"][g].items()})
    except KeyError as exc:
        raise MalformedSpec(f"action spec refers to unknown key {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise MalformedSpec(f"bad action spec: {exc}") from exc
    return GroupoidPartialAction(groupoid, points, D, alpha)


def load_action(groupoid, path):
    with open(path) as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"{path}: {exc}") from exc
    return action_from_spec(groupoid, spec)


def _check_family(rep, items, points, dom_of, img_of):
    """Shared structural checks: subsets of X, dom/im of each map."""
    for key, f in items:
        rep.check("subset-of-X", img_of(key) <= points and dom_of(key) <= points, key)
        rep.check("domain", f.domain == dom_of(key), key,
                  f"dom = {_sorted(f.domain)}, expected {_sorted(dom_of(key))}")
        rep.check("image", f.image == img_of(key), key,
                  f"im = {_sorted(f.image)}, expected {_sorted(img_of(key))}")


def validate_partial_action(a):
    """Evaluate (PA1)-(PA3) and the primed forms (PA2'), (PA3') on every instance.

    info["primed_equivalent"] records whether both axiom systems give the
    same verdict, which they must.
    """
    G, D, al = a.groupoid, a.D, a.alpha
    rep = Report("partial action")
    _check_family(rep, al.items(), a.points, lambda g: D[G.inv(g)], lambda g: D[g])
    for g in G:
        rep.check("D_g-in-D_r(g)", D[g] <= D[G.r(g)], g)

    plain = Report("plain")
    primed = Report("primed")
    for e in G.units:
        ok = al[e] == PartialBijection.identity(D[e])
        plain.check("PA1", ok, e)
        primed.check("PA1", ok, e)
    for g, h in G.pairs:
        gh = G.compose(g, h)
        gi, hi, ghi = G.inv(g), G.inv(h), G.inv(gh)
        # alpha_h^-1(D_{g^-1} & D_h)
        pulled = al[h].preimage(D[gi] & D[h])
        plain.check("PA2", pulled <= D[ghi], (g, h))
        for x in _sorted(pulled):
            y = al[h].get(x)
            lhs = al[g].get(y) if y is not None else None
            plain.check("PA3", lhs is not None and lhs == al[gh].get(x), (g, h, x))
        primed.check("PA2'", al[g].apply_set(D[gi] & D[h]) == D[g] & D[gh], (g, h))
        for x in _sorted(D[hi] & D[ghi]):
            y = al[h].get(x)
            lhs = al[g].get(y) if y is not None else None
            primed.check("PA3'", lhs is not None and lhs == al[gh].get(x), (g, h, x))
    rep.extend(plain)
    rep.extend(primed)
    # the two systems are only comparable on structurally sound input
    if all(v.axiom not in ("domain", "image", "subset-of-X", "D_g-in-D_r(g)")
           for v in rep.violations):
        same = plain.ok == primed.ok
        rep.info["primed_equivalent"] = same
        rep.check("primed-equivalence", same, None,
                  f"(PA1-3) {'holds' if plain.ok else 'fails'} but "
                  f"(PA1,2',3') {'holds' if primed.ok else 'fails'}")
    return rep


class SGAction:
    """An action (E_s, beta_s : E_{s*} -> E_s) of S(G), indexed by standard forms."""

    def __init__(self, groupoid, points, domains, maps, elements=None):
        self.groupoid = groupoid
        self.elements = tuple(elements) if elements is not None else enumerate_sg(groupoid)
        self.points = frozenset(points)
        self.E = {s: frozenset(domains[s]) for s in self.elements}
        self.beta = {s: maps[s] for s in self.elements}

    def __eq__(self, other):
        if not isinstance(other, SGAction):
            return NotImplemented
        return (self.groupoid == other.groupoid and self.points == other.points
                and self.E == other.E and self.beta == other.beta)

    def __hash__(self):
        return hash((frozenset(self.E.items()), frozenset(self.beta.items())))

    def to_json(self):
        return {
            "set": _sorted(self.points),
            "E": {str(s): _sorted(self.E[s]) for s in self.elements},
            "beta": {str(s): self.beta[s].to_json() for s in self.elements},
        }


def validate_sg_action(b):
    """(A1), (A2) and structural conditions, plus the consequences
    beta_{s*} = beta_s^-1, beta_s(E_t) = E_st and E_st within E_s when st exists.
    """
    E, be = b.E, b.beta
    rep = Report("S(G) action")
    for s in b.elements:
        rep.check("E_s=E_ss*", E[s] == E[multiply(s, star(s))], s)
    _check_family(rep, be.items(), b.points, lambda s: E[star(s)], lambda s: E[s])
    for s in b.elements:
        if s.is_idempotent():
            rep.check("A1", be[s] == PartialBijection.identity(E[s]), s)
    for s in b.elements:
        for t in b.elements:
            st = multiply(s, t)
            if st is Undefined:
                continue
            rep.check("A2", be[s] * be[t] == be[st], (s, t))
            rep.check("image-of-E_t", be[s].apply_set(E[t]) == E[st], (s, t))
            rep.check("E_st-in-E_s", E[st] <= E[s], (s, t))
    for s in b.elements:
        rep.check("star-is-inverse", be[star(s)] == be[s].inverse(), s)
    return rep


def partial_to_sg(a):
    """The S(G)-action induced by a partial action of G.

    beta on eps(r_1)...eps(r_n)[s] is alpha_{r_1} alpha_{r_1^-1} ... alpha_s and
    E_s is the image of beta_s.
    """
    rep = validate_partial_action(a)
    if not rep.ok:
        raise InvalidInput("partial action fails validation: " + ", ".join(rep.failed_axioms()),
                           rep)
    return extend_to_sg(a.groupoid, a.points, a.alpha)


def extend_to_sg(G, points, maps, elements=None):
    """Evaluate g -> maps[g] along standard-form words; no validation."""
    elements = tuple(elements) if elements is not None else enumerate_sg(G)
    beta = {s: compose_all(maps[x] for x in s.word()) for s in elements}
    return SGAction(G, points, {s: beta[s].image for s in elements}, beta, elements)


def sg_to_partial(b):
    """Restrict an S(G)-action to the generators: alpha_g = beta_[g], D_g = E_[g]."""
    rep = validate_sg_action(b)
    if not rep.ok:
        raise InvalidInput("S(G) action fails validation: " + ", ".join(rep.failed_axioms()), rep)
    G = b.groupoid
    gens = {g: generator(G, g) for g in G}
    return GroupoidPartialAction(G, b.points, {g: b.E[gens[g]] for g in G},
                                 {g: b.beta[gens[g]] for g in G})


class Lemma1Result(NamedTuple):
    verdict: bool
    action: object
    report: Report


def lemma1_characterize(groupoid, maps, points=None, *, require_regular=False):
    """Test the I(X)-valued characterization of partial actions.

    The verdict is: a_s a_t a_{t^-1} = a_{st} a_{t^-1} on G^2 and a_e the
    identity of its own domain for every unit e.  When it holds, the action
    with D_t = im(a_t) is returned and the conclusions are recorded in the
    report: the law a_{s^-1} a_s a_t = a_{s^-1} a_{st} and validity of that
    action.

    The criterion alone is not sufficient: Z_2 on {1, 2} with a_a = {1: 2},
    a_e = id_{1} meets it but D_a is not inside D_e.  `require_regular` adds
    a_t a_{t^-1} a_t = a_t to the verdict, which closes the gap.
    """
    G = groupoid
    al = {g: m if isinstance(m, PartialBijection) else PartialBijection(m)
          for g, m in maps.items()}
    rep = Report("I(X)-valued map")
    verdict = True
    for s, t in G.pairs:
        st, ti = G.compose(s, t), G.inv(t)
        verdict &= rep.check("triple-law", al[s] * al[t] * al[ti] == al[st] * al[ti], (s, t))
    for e in G.units:
        verdict &= rep.check("unit-identity", al[e].is_identity(), e)
    if require_regular:
        for t in G:
            verdict &= rep.check("regular", al[t] * al[G.inv(t)] * al[t] == al[t], t)
    if not verdict:
        return Lemma1Result(False, None, rep)
    for s, t in G.pairs:
        st, si = G.compose(s, t), G.inv(s)
        rep.check("left-triple-law", al[si] * al[s] * al[t] == al[si] * al[st], (s, t))
    if points is None:
        points = set()
        for m in al.values():
            points |= m.domain | m.image
    action = GroupoidPartialAction.from_maps(G, points, al)
    derived = validate_partial_action(action)
    rep.check("derived-partial-action", derived.ok, None, ", ".join(derived.failed_axioms()))
    return Lemma1Result(True, action, rep)


# -- exhaustive families for small X -------------------------------------------

def all_partial_bijections(points):
    """Every element of I(X)."""
    points = _sorted(points)
    out = []
    for k in range(len(points) + 1):
        for dom in combinations(points, k):
            for img in permutations(points, k):
                out.append(PartialBijection(zip(dom, img)))
    return out


def all_partial_identities(points):
    points = _sorted(points)
    return [PartialBijection.identity(c) for k in range(len(points) + 1)
            for c in combinations(points, k)]


def all_maps_to_ix(G, points):
    """Every map G -> I(X), as dicts."""
    pbs = all_partial_bijections(points)
    for choice in product(pbs, repeat=len(G)):
        yield dict(zip(G.elements, choice))


def all_partial_actions(G, points):
    """Every partial action of G on X, by exhaustive validation."""
    out = []
    for m in all_maps_to_ix(G, points):
        a = GroupoidPartialAction.from_maps(G, points, m)
        if validate_partial_action(a).ok:
            out.append(a)
    return out


def all_sg_actions(G, points):
    """Every S(G)-action on X, by exhaustive validation.

    Only candidates meeting the necessary shape conditions are validated:
    idempotents go to partial identities (A1), and a non-idempotent s goes to
    a bijection from E_{s*s} onto E_{ss*}.  Anything else already fails the
    domain, image or E_s = E_{ss*} checks.
    """
    S = enumerate_sg(G)
    idem = [s for s in S if s.is_idempotent()]
    rest = [s for s in S if not s.is_idempotent()]
    left = {s: multiply(s, star(s)) for s in rest}
    right = {s: multiply(star(s), s) for s in rest}
    out = []
    for ichoice in product(all_partial_identities(points), repeat=len(idem)):
        base = dict(zip(idem, ichoice))
        options = []
        for s in rest:
            dom, img = _sorted(base[right[s]].domain), _sorted(base[left[s]].domain)
            if len(dom) != len(img):
                break
            options.append([PartialBijection(zip(dom, p)) for p in permutations(img)])
        else:
            for rchoice in product(*options):
                beta = dict(base)
                beta.update(zip(rest, rchoice))
                b = SGAction(G, points, {s: beta[s].image for s in S}, beta, S)
                if validate_sg_action(b).ok:
                    out.append(b)
    return out
