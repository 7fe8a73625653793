"""The inverse semigroupoid S(G) of a finite groupoid G, in standard form.

Every element of S(G) has exactly one standard form

    eps(r_1) ... eps(r_n) [s]

with eps(t) = [t][t^-1], the r_i distinct members of the range class X_s,
none of them an identity and none equal to s.  An :class:`SGElement` stores
that form as the pair (eps, anchor) with eps sorted, so equality in S(G) is
structural equality.
"""
from collections import deque
from itertools import combinations

from .errors import InconsistentResult, MixedGroupoids, NonComposableWord, NotRClosed, UnknownElement
from .groupoid import Undefined


class SGElement:
    __slots__ = ("groupoid", "eps", "anchor", "_hash")

    def __init__(self, groupoid, eps, anchor, *, check=True):
        if check:
            if anchor not in groupoid:
                raise UnknownElement(f"{anchor!r} is not an element of {groupoid!r}")
            eps = set(eps)
            for r in eps:
                if r not in groupoid:
                    raise UnknownElement(f"{r!r} is not an element of {groupoid!r}")
                if groupoid.r(r) != groupoid.r(anchor):
                    raise ValueError(f"{r!r} is not in the range class of {anchor!r}")
                if groupoid.is_unit(r) or r == anchor:
                    raise ValueError(f"{r!r} may not appear in the eps-set of a standard form "
                                     f"anchored at {anchor!r}")
            eps = tuple(sorted(eps, key=groupoid.order))
        self.groupoid = groupoid
        self.eps = eps
        self.anchor = anchor
        self._hash = hash((eps, anchor))

    def __eq__(self, other):
        if not isinstance(other, SGElement):
            return NotImplemented
        return (self.anchor == other.anchor and self.eps == other.eps
                and self.groupoid == other.groupoid)

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, SGElement):
            return NotImplemented
        return multiply(self, other)

    def __repr__(self):
        return f"SGElement({list(self.eps)!r}, {self.anchor!r})"

    def __str__(self):
        return "".join(f"ε({r})" for r in self.eps) + f"[{self.anchor}]"

    def sort_key(self):
        o = self.groupoid.order
        return (o(self.anchor), len(self.eps), tuple(o(r) for r in self.eps))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def star(self):
        return star(self)

    @property
    def degree(self):
        return self.anchor

    def is_idempotent(self):
        return is_idempotent(self)

    def word(self):
        """The letters of eps(r_1)...eps(r_n)[s] as a tuple of generators."""
        G = self.groupoid
        out = []
        for r in self.eps:
            out += [r, G.inv(r)]
        out.append(self.anchor)
        return tuple(out)

    def to_json(self):
        return {"eps": list(self.eps), "anchor": self.anchor}

    @classmethod
    def from_json(cls, groupoid, data):
        return cls(groupoid, data["eps"], data["anchor"])


def _normalized(G, raw, anchor):
    eps = tuple(sorted({r for r in raw if r != anchor and not G.is_unit(r)}, key=G.order))
    return SGElement(G, eps, anchor, check=False)


def _same_groupoid(a, b):
    if a.groupoid is not b.groupoid and a.groupoid != b.groupoid:
        raise MixedGroupoids(f"{a!r} and {b!r} live over different groupoids")
    return a.groupoid


def generator(G, g):
    """The generator [g]."""
    if g not in G:
        raise UnknownElement(f"{g!r} is not an element of {G!r}")
    return SGElement(G, (), g, check=False)


def epsilon(G, t):
    """eps(t) = [t][t^-1]; equals [t] when t is an identity."""
    if t not in G:
        raise UnknownElement(f"{t!r} is not an element of {G!r}")
    if G.is_unit(t):
        return SGElement(G, (), t, check=False)
    return SGElement(G, (t,), G.r(t), check=False)


def multiply(a, b):
    """Product in S(G), or Undefined when d(anchor a) != r(anchor b).

    Uses [s] eps(F) = eps(sF) [s] and [s][t] = eps(s)[st]:
    (E, s)(F, t) = (E + sF + {s}, st), then identities and st are dropped.
    """
    G = _same_groupoid(a, b)
    s, t = a.anchor, b.anchor
    st = G.compose(s, t)
    if st is Undefined:
        return Undefined
    raw = set(a.eps)
    raw.update(G.compose(s, f) for f in b.eps)
    raw.add(s)
    return _normalized(G, raw, st)


def star(a):
    """The involution: (eps(E)[s])* = [s^-1] eps(E) = eps(s^-1 E)[s^-1]."""
    G = a.groupoid
    si = G.inv(a.anchor)
    return _normalized(G, (G.compose(si, r) for r in a.eps), si)


def normalize_word(G, word):
    """Standard form of a word of composable generators."""
    word = list(word)
    if not word:
        raise NonComposableWord("empty word")
    for x in word:
        if x not in G:
            raise UnknownElement(f"{x!r} is not an element of {G!r}")
    acc = generator(G, word[0])
    for i, x in enumerate(word[1:], start=1):
        nxt = multiply(acc, generator(G, x))
        if nxt is Undefined:
            raise NonComposableWord(f"letters {word[i - 1]!r}, {x!r} at position {i} "
                                    "are not composable")
        acc = nxt
    return acc


def partial_degree(a):
    """The homomorphism S(G) -> G sending [g] to g."""
    return a.anchor


def is_idempotent(a):
    return a.groupoid.is_unit(a.anchor)


def leq(a, b):
    """Natural partial order: a <= b iff same anchor and eps(b) within eps(a)."""
    _same_groupoid(a, b)
    return a.anchor == b.anchor and set(b.eps) <= set(a.eps)


def order_witness(a, b):
    """An idempotent c with b c = a when a <= b, else None."""
    if not leq(a, b):
        return None
    G = a.groupoid
    si = G.inv(a.anchor)
    extra = set(a.eps) - set(b.eps)
    return _normalized(G, (G.compose(si, r) for r in extra), G.d(a.anchor))


# -- the representation Lambda: S(G) -> functions on r-closed finite subsets --

def is_r_closed(G, subset):
    return all(G.r(h) in subset for h in subset)


def phi(G, g, subset):
    """phi_g(E) = gE + {g, r(g)} when gh exists for every h in E; None otherwise.

    None is the failure value and is absorbing under further phi's.
    """
    if subset is None:
        return None
    image = G.translate(g, subset)
    if image is Undefined:
        return None
    return image | {g, G.r(g)}


def lambda_word(G, word, subset):
    """Apply phi along a word, rightmost letter first."""
    subset = frozenset(subset)
    if not is_r_closed(G, subset):
        raise NotRClosed(f"{sorted(subset, key=G.order)!r} is not closed under r")
    for g in reversed(tuple(word)):
        subset = phi(G, g, subset)
    return subset


def lambda_apply(a, subset):
    """Lambda(a)(E), evaluated along the standard-form word of a.

    Returns a frozenset, or None where some phi along the way is undefined.
    """
    return lambda_word(a.groupoid, a.word(), subset)


# -- enumeration ---------------------------------------------------------------

def enumerate_standard_forms(G):
    """All valid (eps, anchor) pairs: eps ranges over subsets of X_s minus G0 and s."""
    out = []
    for s in G:
        pool = sorted((r for r in G.x_class(s) if r != s and not G.is_unit(r)), key=G.order)
        for k in range(len(pool) + 1):
            for eps in combinations(pool, k):
                out.append(SGElement(G, eps, s, check=False))
    return out


def closure_enumerate(G):
    """Close the generators under multiply and star."""
    seen = {generator(G, g) for g in G}
    queue = deque(sorted(seen))
    while queue:
        a = queue.popleft()
        new = [star(a)]
        for b in list(seen):
            new.append(multiply(a, b))
            new.append(multiply(b, a))
        for c in new:
            if c is not Undefined and c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def enumerate_sg(G):
    """All elements of S(G) in canonical order.

    Computed twice, combinatorially and by closure of the generators, and
    the two must agree.
    """
    forms = enumerate_standard_forms(G)
    closed = closure_enumerate(G)
    if set(forms) != closed:
        raise InconsistentResult(
            f"standard forms ({len(forms)}) and generator closure ({len(closed)}) disagree")
    return tuple(sorted(forms))


def multiplication_table(elements):
    """{(a, b): ab} over the composable pairs of `elements`."""
    table = {}
    for a in elements:
        for b in elements:
            c = multiply(a, b)
            if c is not Undefined:
                table[a, b] = c
    return table
