"""Finite groupoids given by composition and inverse tables."""
import json
from itertools import product

from .errors import AxiomViolation, MalformedSpec, UnknownElement
from .report import Report


class _UndefinedType:
    """The value of a product that does not exist.

    Not an element of any structure, and not a zero: callers decide what a
    missing product means (S(G) propagates it, crossed products drop the term).
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undefined"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (_UndefinedType, ())


Undefined = _UndefinedType()


def label_key(x):
    return (type(x).__name__, x)


def check_groupoid_tables(elements, comp, inv):
    """Check raw tables against the groupoid axioms without raising.

    `comp` maps pairs (s, t) to st, `inv` maps each element to its inverse.
    Referential problems (unknown labels, duplicates) raise MalformedSpec since
    no axiom can even be stated for them.
    """
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise MalformedSpec("element listed more than once")
    if not elements:
        raise MalformedSpec("a groupoid needs at least one element")
    elset = set(elements)
    for (s, t), st in comp.items():
        for x in (s, t, st):
            if x not in elset:
                raise MalformedSpec(f"composition table mentions unknown element {x!r}")
    for g, h in inv.items():
        if g not in elset or h not in elset:
            raise MalformedSpec(f"inverse table mentions unknown element {g!r} or {h!r}")

    rep = Report("groupoid")
    for g in elements:
        rep.check("inverse-total", g in inv, g)
    if not rep.ok:
        return rep
    for g in elements:
        rep.check("inverse-involution", inv[inv[g]] == g, g)
        rep.check("inverse-composable", (g, inv[g]) in comp and (inv[g], g) in comp, g)
    if not rep.ok:
        return rep

    r = {g: comp[g, inv[g]] for g in elements}
    d = {g: comp[inv[g], g] for g in elements}
    units = set(r.values()) | set(d.values())
    for e in sorted(units, key=label_key):
        rep.check("unit-idempotent", comp.get((e, e)) == e, e)
        rep.check("unit-self-inverse", inv[e] == e, e)
        rep.check("unit-source-range", r[e] == e and d[e] == e, e)
    for g in elements:
        rep.check("left-unit", comp.get((r[g], g)) == g, g, f"r({g}) = {r[g]}")
        rep.check("right-unit", comp.get((g, d[g])) == g, g, f"d({g}) = {d[g]}")
    for s, t in product(elements, repeat=2):
        defined = (s, t) in comp
        rep.check("composable-iff-d-equals-r", defined == (d[s] == r[t]), (s, t))
        if defined:
            st = comp[s, t]
            rep.check("source-range-of-product", r[st] == r[s] and d[st] == d[t], (s, t))
    if not rep.ok:
        return rep
    for s, t, u in product(elements, repeat=3):
        if (s, t) in comp and (t, u) in comp:
            lhs = comp.get((comp[s, t], u))
            rhs = comp.get((s, comp[t, u]))
            rep.check("associativity", lhs is not None and lhs == rhs, (s, t, u))
    return rep


class FiniteGroupoid:
    """A finite groupoid; immutable once built.

    Elements are hashable labels (strings when read from JSON) and are kept
    in label order so every iteration over the groupoid is deterministic.
    Source and range are derived: d(g) = g^-1 g, r(g) = g g^-1.
    """

    def __init__(self, elements, comp, inv, *, validate=True):
        comp = {tuple(k): v for k, v in comp.items()}
        inv = dict(inv)
        if validate:
            rep = check_groupoid_tables(elements, comp, inv)
            if not rep.ok:
                v = rep.violations[0]
                raise AxiomViolation(f"{v.axiom} fails at {v.witness!r}", rep)
        self._elements = tuple(sorted(elements, key=label_key))
        self._index = {g: i for i, g in enumerate(self._elements)}
        self._comp = comp
        self._inv = inv
        self._r = {g: comp[g, inv[g]] for g in self._elements}
        self._d = {g: comp[inv[g], g] for g in self._elements}
        self._units = tuple(g for g in self._elements if self._r[g] == g)
        self._pairs = tuple((s, t) for s, t in product(self._elements, repeat=2)
                            if (s, t) in comp)
        self._x = {}
        for g in self._elements:
            self._x.setdefault(self._r[g], []).append(g)
        self._x = {e: frozenset(v) for e, v in self._x.items()}
        self._hash = hash((self._elements, frozenset(comp.items())))

    # -- container protocol -------------------------------------------------
    @property
    def elements(self):
        return self._elements

    def __iter__(self):
        return iter(self._elements)

    def __len__(self):
        return len(self._elements)

    def __contains__(self, g):
        return g in self._index

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (self._hash == other._hash and self._elements == other._elements
                and self._comp == other._comp and self._inv == other._inv)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroupoid({list(self._elements)!r})"

    def _check(self, *gs):
        for g in gs:
            if g not in self._index:
                raise UnknownElement(f"{g!r} is not an element of {self!r}")

    def order(self, g):
        """Position of g in label order."""
        return self._index[g]

    # -- structure maps -----------------------------------------------------
    def compose(self, s, t):
        """Return st, or Undefined when d(s) != r(t)."""
        self._check(s, t)
        return self._comp.get((s, t), Undefined)

    def composable(self, s, t):
        self._check(s, t)
        return (s, t) in self._comp

    def inv(self, g):
        self._check(g)
        return self._inv[g]

    def d(self, g):
        self._check(g)
        return self._d[g]

    def r(self, g):
        self._check(g)
        return self._r[g]

    @property
    def units(self):
        """G0, the identities."""
        return self._units

    def is_unit(self, g):
        self._check(g)
        return self._r[g] == g

    @property
    def pairs(self):
        """G^2, the composable pairs, in label order."""
        return self._pairs

    def x_class(self, g):
        """X_g = {h : r(h) = r(g)}."""
        self._check(g)
        return self._x[self._r[g]]

    def x_classes(self):
        return {e: self._x[e] for e in self._units}

    def translate(self, g, subset):
        """gE = {gh : h in E}; Undefined if some gh does not exist."""
        out = set()
        for h in subset:
            gh = self.compose(g, h)
            if gh is Undefined:
                return Undefined
            out.add(gh)
        return frozenset(out)

    # -- serialization ------------------------------------------------------
    def to_spec(self):
        return {
            "elements": list(self._elements),
            "inv": {g: self._inv[g] for g in self._elements},
            "comp": [[s, t, self._comp[s, t]] for s, t in self._pairs],
        }

    @classmethod
    def from_spec(cls, spec):
        return build_groupoid(spec)


def build_groupoid(spec):
    """Build a groupoid from a spec dict.

    The spec has keys "elements" (labels), "inv" ({label: label}) and "comp"
    (list of [a, b, ab] triples; missing pairs are undefined products).
    """
    try:
        elements = list(spec["elements"])
        inv = dict(spec["inv"])
        comp = {}
        for row in spec["comp"]:
            a, b, ab = row
            if (a, b) in comp and comp[a, b] != ab:
                raise MalformedSpec(f"conflicting products for ({a!r}, {b!r})")
            comp[a, b] = ab
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedSpec(f"bad groupoid spec: {exc}") from exc
    return FiniteGroupoid(elements, comp, inv)


def load_groupoid(path):
    with open(path) as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"{path}: {exc}") from exc
    return build_groupoid(spec)


def from_group(table):
    """One-object groupoid from a group table {a: {b: ab}}."""
    elements = list(table)
    comp = {}
    try:
        for a in elements:
            for b in elements:
                comp[a, b] = table[a][b]
    except KeyError as exc:
        raise AxiomViolation(f"group table is not total: missing {exc}") from None
    ids = [e for e in elements if all(comp[e, x] == x == comp[x, e] for x in elements)]
    if len(ids) != 1:
        raise AxiomViolation("group table has no two-sided identity")
    e = ids[0]
    inv = {}
    for a in elements:
        cands = [b for b in elements if comp[a, b] == e == comp[b, a]]
        if not cands:
            raise AxiomViolation(f"{a!r} has no inverse")
        inv[a] = cands[0]
    return FiniteGroupoid(elements, comp, inv)


def cyclic_group(n):
    """Z_n as a one-object groupoid, elements "e", "a", "a2", ..."""
    if n < 1:
        raise ValueError("n must be positive")
    names = ["e", "a"] + [f"a{k}" for k in range(2, n)]
    names = names[:n]
    return from_group({names[i]: {names[j]: names[(i + j) % n] for j in range(n)}
                       for i in range(n)})


def trivial_groupoid():
    return cyclic_group(1)


def arrow_groupoid():
    """G = {g, g^-1, e, f}: a single arrow g from e = d(g) to f = r(g) and its inverse."""
    comp = {
        ("g", "e"): "g", ("f", "g"): "g",
        ("g^-1", "f"): "g^-1", ("e", "g^-1"): "g^-1",
        ("g", "g^-1"): "f", ("g^-1", "g"): "e",
        ("e", "e"): "e", ("f", "f"): "f",
    }
    inv = {"g": "g^-1", "g^-1": "g", "e": "e", "f": "f"}
    return FiniteGroupoid(["g", "g^-1", "e", "f"], comp, inv)


def pair_groupoid(objects):
    """Pair groupoid on `objects`: one arrow "y<x" from x to y for every pair."""
    objects = list(objects)
    name = {(y, x): (str(x) if x == y else f"{y}<{x}") for x in objects for y in objects}
    comp = {}
    for (z, y1), a in name.items():
        for (y2, x), b in name.items():
            if y1 == y2:
                comp[a, b] = name[z, x]
    inv = {name[y, x]: name[x, y] for (y, x) in name}
    return FiniteGroupoid(list(name.values()), comp, inv)


def disjoint_union(parts):
    """Disjoint union; element g of part i is relabelled "i:g"."""
    parts = list(parts)
    if not parts:
        raise ValueError("disjoint_union needs at least one part")
    elements, comp, inv = [], {}, {}
    for i, part in enumerate(parts):
        tag = {g: f"{i}:{g}" for g in part}
        elements.extend(tag.values())
        for s, t in part.pairs:
            comp[tag[s], tag[t]] = tag[part.compose(s, t)]
        for g in part:
            inv[tag[g]] = tag[part.inv(g)]
    return FiniteGroupoid(elements, comp, inv)
