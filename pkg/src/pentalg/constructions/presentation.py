"""Finitely presented semigroups by string rewriting.

Text format, one item per line (``#`` starts a comment)::

    generators a b
    aaaa -> aa
    prefix-delete aa minlen 2

``prefix-delete w minlen k`` deletes an occurrence of ``w`` that is followed by
at least ``k`` further letters.  Reduction always rewrites the leftmost
applicable position (rules tried in file order there), so normal forms are
deterministic.  Confluence is not assumed: the product table is checked for
closure and associativity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..core import CayleyTable, is_associative
from ..errors import NonTerminating, NotAssociative, NotClosed

MAX_STEPS = 10_000


@dataclass(frozen=True)
class Presentation:
    generators: tuple            # single-letter generator names
    rules: tuple                 # (lhs, rhs) strings
    deletions: tuple = ()        # (word, minlen)

    def reduce(self, word: str, max_steps: int = MAX_STEPS) -> str:
        for _ in range(max_steps):
            step = self._step(word)
            if step is None:
                return word
            word = step
        raise NonTerminating(f"no normal form within {max_steps} rewrites")

    def _step(self, word: str):
        best = None
        for lhs, rhs in self.rules:
            i = word.find(lhs)
            if i >= 0 and (best is None or i < best[0]):
                best = (i, len(lhs), rhs)
        for w, k in self.deletions:
            i = word.find(w)
            while i >= 0 and len(word) - i - len(w) < k:
                i = word.find(w, i + 1)
            if i >= 0 and (best is None or i < best[0]):
                best = (i, len(w), "")
        if best is None:
            return None
        i, length, rhs = best
        return word[:i] + rhs + word[i + length:]


def parse_presentation(text: str) -> Presentation:
    gens = None
    rules, deletions = [], []
    seen = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "generators":
            gens = tuple(parts[1:])
        elif parts[0] == "prefix-delete":
            if len(parts) != 4 or parts[2] != "minlen" or not parts[3].isdigit():
                raise ValueError(f"line {lineno}: expected 'prefix-delete <word> minlen <k>'")
            deletions.append((parts[1], int(parts[3])))
            seen.extend(parts[1])
        elif len(parts) == 3 and parts[1] == "->":
            rules.append((parts[0], parts[2]))
            seen.extend(parts[0] + parts[2])
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    if gens is None:
        gens = tuple(dict.fromkeys(seen))
    for g in gens:
        if len(g) != 1:
            raise ValueError(f"generator names must be single letters, got {g!r}")
    extra = set(seen) - set(gens)
    if extra:
        raise ValueError(f"letters {sorted(extra)} are not generators")
    return Presentation(tuple(gens), tuple(rules), tuple(deletions))


def word_label(word: str) -> str:
    """``aab`` -> ``a^2b``."""
    out = []
    for letter, run in itertools.groupby(word):
        k = len(list(run))
        out.append(letter if k == 1 else f"{letter}^{k}")
    return "".join(out)


def normal_forms(p: Presentation, length_bound: int = 6) -> list:
    forms = set()
    for length in range(1, length_bound + 1):
        for w in itertools.product(p.generators, repeat=length):
            forms.add(p.reduce("".join(w)))
    order = {g: i for i, g in enumerate(p.generators)}
    return sorted(forms, key=lambda w: (len(w), [order[c] for c in w]))


def presented_semigroup(p: Presentation, length_bound: int = 6) -> CayleyTable:
    forms = normal_forms(p, length_bound)
    index = {w: i for i, w in enumerate(forms)}
    table = []
    for u in forms:
        row = []
        for v in forms:
            r = p.reduce(u + v)
            if r not in index:
                raise NotClosed(f"{u} * {v} reduces to {r}, which is not a listed normal form")
            row.append(index[r])
        table.append(row)
    t = CayleyTable(table, [word_label(w) for w in forms])
    r = is_associative(t)
    if not r:
        raise NotAssociative(f"presented product is not associative at {r.witness}")
    return t


SEC7_TEXT = """\
generators a b
aaaa -> aa
bb -> b
aab -> b
baa -> aa
prefix-delete aa minlen 2
prefix-delete b minlen 2
"""

SEC7 = parse_presentation(SEC7_TEXT)
