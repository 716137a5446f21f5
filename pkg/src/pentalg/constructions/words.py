"""Free and bounded-free semigroup carriers over words of generator indices."""
from __future__ import annotations

import itertools
from functools import lru_cache

from ..core import CayleyTable, is_associative
from ..errors import InternalInconsistency, ProductOverflow, SizeCap, TooManyGenerators

DEFAULT_CAP = 4096
FREE_BAND_MAX_GENERATORS = 3


def generator_names(m: int) -> list:
    if m == 1:
        return ["x"]
    if m <= 3:
        return ["x", "y", "z"][:m]
    return [f"x{i + 1}" for i in range(m)]


def word_label(word, names, sep=".") -> str:
    return sep.join(names[g] for g in word)


def _split_prefix(word):
    """Longest prefix missing one letter of the content, and the letter after it."""
    need = len(set(word))
    seen = set()
    for i, g in enumerate(word):
        seen.add(g)
        if len(seen) == need:
            return word[:i], g
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def band_key(word: tuple):
    """Complete invariant for equality in the free band.

    Two words are equal in the free band iff they have the same content, equal
    (recursively) longest prefixes and suffixes on one fewer letter, and the
    same letters bordering those.
    """
    content = frozenset(word)
    if len(content) == 1:
        return (content,)
    prefix, a = _split_prefix(word)
    rsuffix, b = _split_prefix(word[::-1])
    return (content, band_key(prefix), a, b, band_key(rsuffix[::-1]))


class FreeBand:
    """Free band on ``m`` generators; elements are named by their shortlex-least words."""

    def __init__(self, m: int, names=None):
        if not 1 <= m <= FREE_BAND_MAX_GENERATORS:
            raise TooManyGenerators(f"free band enumeration supports 1..{FREE_BAND_MAX_GENERATORS} generators, got {m}")
        self.m = m
        self.names = list(names) if names is not None else generator_names(m)
        words = []
        index = {}
        frontier = [(g,) for g in range(m)]
        # Breadth-first by right multiplication yields shortlex-least representatives.
        while frontier:
            nxt = []
            for w in frontier:
                k = band_key(w)
                if k in index:
                    continue
                index[k] = len(words)
                words.append(w)
                nxt.extend(w + (g,) for g in range(m))
            frontier = sorted(set(nxt), key=lambda w: (len(w), w))
        self.elements = tuple(words)
        self._index = index
        n = len(words)
        table = [[self.canonical(words[i] + words[j]) for j in range(n)] for i in range(n)]
        self.table = CayleyTable(table, [word_label(w, self.names) for w in words])

    @property
    def n(self):
        return len(self.elements)

    def canonical(self, word) -> int:
        """Index of the element represented by ``word``."""
        return self._index[band_key(tuple(word))]

    def word(self, i: int) -> tuple:
        return self.elements[i]

    def find(self, label: str) -> int:
        return self.table.labels.index(label)


def free_band(m: int, names=None) -> FreeBand:
    return FreeBand(m, names)


class BoundedFreeSemigroup:
    """All words of length at most ``L``; products longer than ``L`` are errors."""

    def __init__(self, m: int, L: int, names=None, cap: int = DEFAULT_CAP):
        size = sum(m ** i for i in range(1, L + 1))
        if size > cap:
            raise SizeCap(f"{size} words exceed the cap {cap}")
        self.m = m
        self.L = L
        self.names = list(names) if names is not None else generator_names(m)
        self.elements = tuple(w for length in range(1, L + 1)
                              for w in itertools.product(range(m), repeat=length))
        self._index = {w: i for i, w in enumerate(self.elements)}
        self.labels = tuple(word_label(w, self.names) for w in self.elements)

    @property
    def n(self):
        return len(self.elements)

    def canonical(self, word) -> int:
        word = tuple(word)
        if len(word) > self.L:
            raise ProductOverflow(f"word of length {len(word)} exceeds the bound {self.L}")
        return self._index[word]

    def word(self, i: int) -> tuple:
        return self.elements[i]

    def multiply(self, i: int, j: int) -> int:
        return self.canonical(self.elements[i] + self.elements[j])

    def partial_table(self):
        """Dot table with ``-1`` where the product overflows."""
        n = self.n
        return [[self._index.get(self.elements[i] + self.elements[j], -1) for j in range(n)] for i in range(n)]


def free_semigroup_bounded(m: int, L: int, names=None, cap: int = DEFAULT_CAP) -> BoundedFreeSemigroup:
    return BoundedFreeSemigroup(m, L, names, cap)


def free_211_semigroup(m: int, cap: int = DEFAULT_CAP) -> CayleyTable:
    """Free semigroup on ``m`` generators subject to ``x.y.z = y.z``.

    Carrier: generators, then formal products ``x.y`` in lexicographic order.
    """
    from ..pentagon import make_apa

    if m + m * m > cap:
        raise SizeCap(f"{m + m * m} elements exceed the cap {cap}")
    names = generator_names(m)
    gens = [(g,) for g in range(m)]
    pairs = [(a, b) for a in range(m) for b in range(m)]
    els = gens + pairs
    pos = {e: i for i, e in enumerate(els)}

    def mul(u, v):
        if len(v) == 2:
            return pos[v]
        return pos[(u[-1], v[0])]

    t = CayleyTable([[mul(u, v) for v in els] for u in els], [word_label(e, names) for e in els])
    if not is_associative(t):
        raise InternalInconsistency("x.y.z = y.z table is not associative")
    if not make_apa(t, t).valid:
        raise InternalInconsistency("(S, ., .) is not an APA")
    idem = {x for x in range(t.n) if t(x, x) == x}
    if idem != set(range(m, t.n)):
        raise InternalInconsistency(f"idempotents {sorted(idem)} are not the formal products")
    return t
