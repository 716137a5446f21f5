"""Exhaustive enumeration of small semigroups and pentagon algebras.

Tables are filled row-major with values in increasing order, so every stream is
in lexicographic order of the flattened table.  After each assignment the
search re-checks the constraint instances that are still *pending*: an
instance is dropped from the pending list once all its lookups are defined
and it holds, and the branch is cut as soon as one defined instance fails.
"""
from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import laws
from .core import DOT, CayleyTable, Var, canonical_form, is_associative
from .errors import DotNotAssociative, InternalInconsistency, SizeCap
from .pentagon import PentagonAlgebra, classify, make_apa, theorem_crosscheck

MAX_STAR_ORDER = 6
MAX_SEMIGROUP_ORDER = 4
MAX_SEMIGROUP_ORDER_ISO = 5
MAX_ALL_DOTS_ORDER = 5
UNDEF = -1


def _compile(term):
    """Closure evaluating ``term`` on partial tables; ``-1`` means undefined."""
    if isinstance(term, Var):
        i = term.index
        return lambda D, S, env: env[i]
    left, right = _compile(term.left), _compile(term.right)
    use_dot = term.op == DOT

    def ev(D, S, env):
        a = left(D, S, env)
        if a < 0:
            return UNDEF
        b = right(D, S, env)
        if b < 0:
            return UNDEF
        return (D if use_dot else S)[a][b]

    return ev


def _instances(identities, n):
    out = []
    for ident in identities:
        lhs, rhs = _compile(ident.lhs), _compile(ident.rhs)
        for env in itertools.product(range(n), repeat=ident.nvars):
            out.append((lhs, rhs, env))
    return out


def _filter(pending, D, S):
    """Pending instances still undecided, or None when one is violated."""
    keep = []
    for inst in pending:
        lhs, rhs, env = inst
        a = lhs(D, S, env)
        if a < 0:
            keep.append(inst)
            continue
        b = rhs(D, S, env)
        if b < 0:
            keep.append(inst)
        elif a != b:
            return None
    return keep


def _search(n, D, S, target, pending, cell, stop, prune=None):
    """Depth-first fill of ``target`` (which is ``S``; ``D`` may alias it) from ``cell`` to ``stop``.

    ``prune(target)`` may cut a branch after each assignment.
    """
    if cell == stop:
        yield [row[:] for row in target]
        return
    r, c = divmod(cell, n)
    for v in range(n):
        target[r][c] = v
        nxt = _filter(pending, D, S)
        if nxt is not None and not (prune and prune(target)):
            yield from _search(n, D, S, target, nxt, cell + 1, stop, prune)
    target[r][c] = UNDEF


def _relabel_pairs(n):
    """``(p, p^-1)`` for every non-identity relabeling of ``range(n)``."""
    out = []
    for p in itertools.permutations(range(n)):
        if list(p) != list(range(n)):
            q = [0] * n
            for i, v in enumerate(p):
                q[v] = i
            out.append((p, q))
    return out


def _beaten_by_relabeling(T, n, pairs):
    """True when some relabeling of the partial table ``T`` is already lexicographically smaller.

    Cells are compared in row-major order until one side is undefined; since
    completions never change defined cells, a decided comparison is final.
    """
    for p, q in pairs:
        for i in range(n):
            qi = q[i]
            row = T[i]
            for j in range(n):
                orig = row[j]
                src = T[qi][q[j]]
                if orig < 0 or src < 0:
                    break
                rel = p[src]
                if rel != orig:
                    if rel < orig:
                        return True
                    break
            else:
                continue
            break
    return False


def _from_prefix(n, prefix):
    t = [[UNDEF] * n for _ in range(n)]
    for cell, v in enumerate(prefix):
        t[cell // n][cell % n] = v
    return t


# ---------------------------------------------------------------------------
# Stars completing a fixed dot
# ---------------------------------------------------------------------------

STAR_CONSTRAINTS = (laws.STAR_ASSOC, laws.EQ_I, laws.EQ_II)


def _dot_rows(dot: CayleyTable):
    return [list(map(int, row)) for row in dot.table]


def _star_prefixes(D, n, depth):
    S = [[UNDEF] * n for _ in range(n)]
    pending = _instances(STAR_CONSTRAINTS, n)
    return [tuple(v for row in t for v in row)[:depth]
            for t in _search(n, D, S, S, pending, 0, depth)] if depth else [()]


def _stars_under(D, n, prefix):
    S = _from_prefix(n, prefix)
    pending = _filter(_instances(STAR_CONSTRAINTS, n), D, S)
    if pending is None:
        return []
    return [tuple(tuple(row) for row in t) for t in _search(n, D, S, S, pending, len(prefix), n * n)]


def _check_dot(dot: CayleyTable):
    if dot.n > MAX_STAR_ORDER:
        raise SizeCap(f"star enumeration supports orders up to {MAX_STAR_ORDER}, got {dot.n}")
    r = is_associative(dot)
    if not r:
        raise DotNotAssociative(f"dot is not associative at {r.witness}")


def enumerate_stars(dot: CayleyTable, jobs: int = 1) -> Iterator[PentagonAlgebra]:
    """Every star making ``(S, dot, star)`` an APA, in lexicographic table order."""
    _check_dot(dot)
    n = dot.n
    D = _dot_rows(dot)
    if jobs <= 1:
        S = [[UNDEF] * n for _ in range(n)]
        tables = _search(n, D, S, S, _instances(STAR_CONSTRAINTS, n), 0, n * n)
    else:
        depth = min(n * n, 2)
        prefixes = _star_prefixes(D, n, depth)
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_stars_under, [D] * len(prefixes), [n] * len(prefixes), prefixes))
        tables = (t for chunk in chunks for t in chunk)
    for t in tables:
        yield make_apa(dot, CayleyTable(t, dot.labels))


def naive_stars(dot: CayleyTable) -> list:
    """Filter all ``n^(n^2)`` star tables; an oracle for tiny orders."""
    n = dot.n
    out = []
    for flat in itertools.product(range(n), repeat=n * n):
        star = CayleyTable([flat[i * n:(i + 1) * n] for i in range(n)])
        if make_apa(dot, star).valid:
            out.append(star)
    return out


# ---------------------------------------------------------------------------
# Dot semigroups
# ---------------------------------------------------------------------------

def enumerate_semigroups(n: int, up_to_iso: bool = False) -> Iterator[CayleyTable]:
    """Associative tables on ``n`` elements, lexicographically.

    With ``up_to_iso`` only the first table of each isomorphism class is kept.
    """
    cap = MAX_SEMIGROUP_ORDER_ISO if up_to_iso else MAX_SEMIGROUP_ORDER
    if not 1 <= n <= cap:
        raise SizeCap(f"semigroup enumeration supports orders 1..{cap}{' up to isomorphism' if up_to_iso else ''}, got {n}")
    T = [[UNDEF] * n for _ in range(n)]
    pending = _instances((laws.DOT_ASSOC,), n)
    seen = set()
    prune = None
    if up_to_iso:
        pairs = _relabel_pairs(n)
        prune = lambda t: _beaten_by_relabeling(t, n, pairs)
    for t in _search(n, T, T, T, pending, 0, n * n, prune):
        table = CayleyTable(t)
        if up_to_iso:
            # Pruning leaves only the lexicographically least table of each class.
            key = canonical_form(table)
            if key in seen or list(key[2:]) != table.table.reshape(-1).tolist():
                raise InternalInconsistency("isomorphism pruning yielded a non-minimal table")
            seen.add(key)
        yield table


# ---------------------------------------------------------------------------
# Census reports
# ---------------------------------------------------------------------------

CELLS = ("ltd-only", "rtd-only", "both", "neither")


@dataclass(frozen=True)
class CensusQuery:
    order: int
    dot: Optional[CayleyTable] = None   # None: all dot semigroups of the order
    up_to_iso: bool = False
    crosscheck: bool = True
    ltd: Optional[bool] = None          # filters on the classification
    rtd: Optional[bool] = None
    star_flags: tuple = ()              # required star-variety flags, e.g. ("V_P2",)

    def __post_init__(self):
        if self.dot is None and self.order > MAX_ALL_DOTS_ORDER:
            raise SizeCap(f"all-dots census supports orders up to {MAX_ALL_DOTS_ORDER}")
        if self.dot is not None and self.dot.n != self.order:
            raise ValueError("order does not match the dot table")
        if self.order > MAX_STAR_ORDER:
            raise SizeCap(f"star enumeration supports orders up to {MAX_STAR_ORDER}")


@dataclass
class CensusReport:
    order: int
    dots: int = 0
    total: int = 0
    cells: dict = field(default_factory=lambda: {c: 0 for c in CELLS})
    exemplars: list = field(default_factory=list)   # hex canonical forms, first-seen order
    violations: list = field(default_factory=list)
    lines: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"order": self.order, "dots": self.dots, "total": self.total, "cells": dict(self.cells),
                "classes": len(self.exemplars), "violations": list(self.violations)}

    def text(self) -> str:
        out = [f"order {self.order}", f"dots {self.dots}", f"total {self.total}"]
        out += [f"cell {c} {self.cells[c]}" for c in CELLS]
        out.append(f"classes {len(self.exemplars)}")
        out.append(f"violations {len(self.violations)}")
        out += [f"violation {v}" for v in self.violations]
        return "\n".join(out) + "\n"


def _flags(cls) -> str:
    return ",".join(k for k, v in sorted(cls.star_varieties.items()) if v) or "-"


def _census_dot(args):
    """Worker: classify (and crosscheck) every APA over one dot."""
    dot_rows, query = args
    dot = CayleyTable(dot_rows)
    out = []
    n = dot.n
    D = _dot_rows(dot)
    S = [[UNDEF] * n for _ in range(n)]
    for t in _search(n, D, S, S, _instances(STAR_CONSTRAINTS, n), 0, n * n):
        p = make_apa(dot, CayleyTable(t))
        cls = classify(p)
        if query.ltd is not None and cls.is_ltd != query.ltd:
            continue
        if query.rtd is not None and cls.is_rtd != query.rtd:
            continue
        if any(not cls.star_varieties.get(f, False) for f in query.star_flags):
            continue
        violations = []
        if not p.valid:
            violations.append("enumerated star is not a valid APA")
        elif query.crosscheck:
            violations = theorem_crosscheck(p)
        key = canonical_form(p.dot, p.star).hex()
        out.append((key, cls.cell, _flags(cls), tuple(violations),
                    tuple(map(tuple, D)), tuple(map(tuple, t))))
    return out


def run_census(q: CensusQuery, jobs: int = 1) -> CensusReport:
    """Classify every APA in scope; results are merged in a fixed order, independent of ``jobs``."""
    if q.dot is not None:
        _check_dot(q.dot)
        dots = [q.dot]
    else:
        dots = list(enumerate_semigroups(q.order, up_to_iso=q.up_to_iso))
    tasks = [(d.tolist(), q) for d in dots]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_census_dot, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_census_dot(t) for t in tasks]
    report = CensusReport(order=q.order, dots=len(dots))
    seen = set()
    for per_dot in results:
        for key, cell, flags, violations, dot_rows, star_rows in per_dot:
            if q.up_to_iso and key in seen:
                continue
            report.total += 1
            report.cells[cell] += 1
            if key not in seen:
                seen.add(key)
                report.exemplars.append(key)
            flat = lambda rows: "".join(str(v) for row in rows for v in row)
            report.lines.append(f"{flat(dot_rows)} {flat(star_rows)} {cell} {flags} {key}")
            report.violations.extend(f"dot={flat(dot_rows)} star={flat(star_rows)}: {v}" for v in violations)
    return report


def cell_counts(report: CensusReport) -> Counter:
    return Counter(report.cells)
