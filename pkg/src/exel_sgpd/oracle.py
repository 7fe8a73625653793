"""Brute-force word problem for S(G), independent of the standard-form code.

All composable words up to a length bound are generated and merged under the
defining relations of S(G), applied inside any context and in both
directions, for as long as the result stays within the bound:

    (i)   [s^-1][s][t] = [s^-1][st]
    (ii)  [s][t][t^-1] = [st][t^-1]
    (iii) [r(s)][s] = [s] = [s][d(s)]
"""
from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from .errors import BudgetExceeded


def composable_words(G, max_len):
    words = [(g,) for g in G]
    level = list(words)
    for _ in range(max_len - 1):
        level = [w + (g,) for w in level for g in G if G.composable(w[-1], g)]
        words.extend(level)
    return words


def _neighbours(G, w, max_len):
    """Words one relation step away from w (either direction), within max_len."""
    n = len(w)
    inv, comp = G.inv, G.compose
    # (iii) delete a unit letter that has a neighbour
    if n > 1:
        for i, x in enumerate(w):
            if G.is_unit(x):
                yield w[:i] + w[i + 1:]
    # (i), (ii) forward: shorten
    for i in range(n - 2):
        a, b, c = w[i:i + 3]
        if a == inv(b):
            yield w[:i + 1] + (comp(b, c),) + w[i + 3:]
        if c == inv(b):
            yield w[:i] + (comp(a, b),) + w[i + 2:]
    if n + 1 > max_len:
        return
    # (iii) insert units
    for i, x in enumerate(w):
        yield w[:i] + (G.r(x),) + w[i:]
        yield w[:i + 1] + (G.d(x),) + w[i + 1:]
    # (i) backward: [x][u] -> [x][x^-1][x u];  (ii) backward: [v][y] -> [v y][y^-1][y]
    for i in range(n - 1):
        x, u = w[i], w[i + 1]
        yield w[:i + 1] + (inv(x), comp(x, u)) + w[i + 2:]
        yield w[:i] + (comp(x, u), inv(u), u) + w[i + 2:]


@dataclass
class OracleResult:
    max_len: int
    classes: list           # list of frozensets of words
    counts: dict            # bound -> number of classes over words up to that bound

    def class_of(self, word):
        word = tuple(word)
        for c in self.classes:
            if word in c:
                return c
        raise KeyError(word)

    @property
    def stable(self):
        return self.counts[self.max_len] == self.counts.get(self.max_len - 1)


def _closure(G, word_len, work_len):
    """Classes of words up to word_len, merging through words up to work_len."""
    words = composable_words(G, work_len)
    ds = DisjointSet(words)
    for w in words:
        for v in _neighbours(G, w, work_len):
            assert all(G.composable(p, q) for p, q in zip(v, v[1:])), (w, v)
            ds.merge(w, v)
    classes = (frozenset(w for w in c if len(w) <= word_len) for c in ds.subsets())
    return [c for c in classes if c]


def oracle_congruence_enumerate(G, max_len, *, slack=1, require_stable=True):
    """Partition composable words of length <= max_len into congruence classes.

    Rewrites may pass through words up to max_len + slack letters long: a
    word of maximal length is often irreducible and only joins its class via
    a longer word (a^6 in Z_3 needs one extra letter).  The class count is
    computed at max_len - 1 and at max_len; when the two differ the bound has
    not saturated and BudgetExceeded is raised.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    counts = {}
    if max_len > 1:
        counts[max_len - 1] = len(_closure(G, max_len - 1, max_len - 1 + slack))
    classes = _closure(G, max_len, max_len + slack)
    counts[max_len] = len(classes)
    result = OracleResult(max_len, classes, counts)
    if require_stable and max_len > 1 and not result.stable:
        raise BudgetExceeded(f"class count still changing at length {max_len}: {counts}")
    return result


def compare_with_normal_forms(result, normalize):
    """Check that `normalize` induces exactly the oracle's partition.

    Returns a list of disagreements: (kind, word_a, word_b).
    """
    problems = []
    seen = {}
    for cls in result.classes:
        forms = {}
        for w in cls:
            forms.setdefault(normalize(w), w)
        if len(forms) > 1:
            a, b = list(forms.values())[:2]
            problems.append(("split", a, b))
        for f, w in forms.items():
            if f in seen and seen[f] is not cls:
                problems.append(("merged", w, next(iter(seen[f]))))
            seen[f] = cls
    return problems

