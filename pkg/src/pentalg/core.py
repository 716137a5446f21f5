"""Finite operation tables, a two-operation identity checker and semigroup classifiers.

Elements are always the integers ``0..n-1``; labels only affect printing.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import MismatchedCarrier, TooLarge

DOT = "dot"
STAR = "star"

# Largest number of assignments evaluated in one numpy batch.
_BATCH = 1 << 22
CANONICAL_MAX_N = 8


class CayleyTable:
    """An immutable ``n x n`` table of element indices."""

    __slots__ = ("n", "table", "labels", "_key")

    def __init__(self, table, labels: Optional[Sequence[str]] = None):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"table must be a non-empty square matrix, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = np.argwhere((arr < 0) | (arr >= n))[0]
            raise ValueError(f"entry at {tuple(int(v) for v in bad)} is not an index below {n}")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        arr.setflags(write=False)
        self.n = n
        self.table = arr
        self.labels = labels
        self._key = None

    @classmethod
    def from_function(cls, n: int, op: Callable[[int, int], int], labels=None) -> "CayleyTable":
        return cls([[op(x, y) for y in range(n)] for x in range(n)], labels)

    def __call__(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table) and self.labels == other.labels

    def __hash__(self):
        if self._key is None:
            self._key = hash((self.n, self.table.tobytes(), self.labels))
        return self._key

    def __repr__(self):
        return f"CayleyTable(n={self.n}, table={self.table.tolist()})"

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def tolist(self) -> list[list[int]]:
        return self.table.tolist()

    def with_labels(self, labels) -> "CayleyTable":
        return CayleyTable(self.table, labels)

    def power(self, x: int, k: int) -> int:
        r = x
        for _ in range(k - 1):
            r = int(self.table[r, x])
        return r

    def product(self, xs: Sequence[int]) -> int:
        r = xs[0]
        for x in xs[1:]:
            r = int(self.table[r, x])
        return r


def relabel(t: CayleyTable, perm: Sequence[int]) -> CayleyTable:
    """Table of the isomorphic copy in which element ``i`` is renamed ``perm[i]``."""
    p = np.asarray(perm)
    inv = np.argsort(p)
    new = p[t.table[np.ix_(inv, inv)]]
    labels = None
    if t.labels is not None:
        labels = [t.labels[i] for i in inv]
    return CayleyTable(new, labels)


# ---------------------------------------------------------------------------
# Terms and identities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return _VAR_NAMES[self.index] if self.index < len(_VAR_NAMES) else f"v{self.index}"


@dataclass(frozen=True)
class App:
    op: str
    left: "Term"
    right: "Term"

    def __str__(self):
        sym = "." if self.op == DOT else "*"
        return f"({self.left}{sym}{self.right})"


Term = "Var | App"
_VAR_NAMES = "xyzwuvst"


def _max_var(t) -> int:
    if isinstance(t, Var):
        return t.index
    return max(_max_var(t.left), _max_var(t.right))


def _uses(t, op) -> bool:
    if isinstance(t, Var):
        return False
    return t.op == op or _uses(t.left, op) or _uses(t.right, op)


@dataclass(frozen=True)
class Identity:
    lhs: object
    rhs: object
    nvars: int
    name: str = ""
    variables: tuple = ()

    def __post_init__(self):
        need = max(_max_var(self.lhs), _max_var(self.rhs)) + 1
        if self.nvars < need:
            raise ValueError(f"identity uses {need} variables but nvars={self.nvars}")

    def uses(self, op: str) -> bool:
        return _uses(self.lhs, op) or _uses(self.rhs, op)

    def __str__(self):
        return self.name or f"{self.lhs} = {self.rhs}"


_TOKEN = re.compile(r"\s*(?:([a-z][0-9]*)|(\^)\s*([0-9]+)|([().*=]))")


def parse_identity(text: str, name: str = "") -> Identity:
    """Parse ``"x*y^2*z = x*z"``.

    ``.`` is the dot operation and ``*`` the star operation; both bind left to
    right with equal precedence.  ``t^k`` is the k-th power of ``t`` under star.
    Variables are numbered in order of first appearance.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse identity at {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            tokens.append(("var", m.group(1)))
        elif m.group(2):
            tokens.append(("pow", int(m.group(3))))
        else:
            tokens.append(("sym", m.group(4)))
    names: dict[str, int] = {}
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def atom():
        nonlocal i
        kind, val = peek()
        if kind == "var":
            i += 1
            t = Var(names.setdefault(val, len(names)))
        elif (kind, val) == ("sym", "("):
            i += 1
            t = expr()
            if peek() != ("sym", ")"):
                raise ValueError(f"missing ')' in {text!r}")
            i += 1
        else:
            raise ValueError(f"unexpected token {val!r} in {text!r}")
        kind, val = peek()
        if kind == "pow":
            i += 1
            if val < 1:
                raise ValueError("powers must be positive")
            base = t
            for _ in range(val - 1):
                t = App(STAR, t, base)
        return t

    def expr():
        nonlocal i
        t = atom()
        while peek() in (("sym", "."), ("sym", "*")):
            op = DOT if peek()[1] == "." else STAR
            i += 1
            t = App(op, t, atom())
        return t

    lhs = expr()
    if peek() != ("sym", "="):
        raise ValueError(f"identity needs '=' in {text!r}")
    i += 1
    rhs = expr()
    if i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    order = tuple(sorted(names, key=names.get))
    return Identity(lhs, rhs, len(names), name or text, order)


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present exactly when the check fails")

    def __bool__(self):
        return self.holds


OK = CheckResult(True)


def _eval(term, dot, star, env):
    if isinstance(term, Var):
        return env[term.index]
    left = _eval(term.left, dot, star, env)
    right = _eval(term.right, dot, star, env)
    table = dot if term.op == DOT else star
    return table[left, right]


def evaluate(term, dot: Optional[CayleyTable], star: Optional[CayleyTable], assignment) -> int:
    """Value of ``term`` at one assignment of its variables."""
    d = dot.table if dot is not None else None
    s = star.table if star is not None else None
    return int(_eval(term, d, s, tuple(int(a) for a in assignment)))


def _carrier(dot, star, identity):
    tables = []
    if identity.uses(DOT):
        if dot is None:
            raise ValueError(f"identity {identity} needs the dot operation")
        tables.append(dot)
    if identity.uses(STAR):
        if star is None:
            raise ValueError(f"identity {identity} needs the star operation")
        tables.append(star)
    if dot is not None and star is not None and dot.n != star.n:
        raise MismatchedCarrier(f"dot has {dot.n} elements but star has {star.n}")
    if not tables:
        tables = [t for t in (dot, star) if t is not None]
    return tables[0].n


def scan(n: int, nvars: int, predicate) -> Optional[tuple]:
    """First assignment in lexicographic order where ``predicate`` is False.

    ``predicate`` receives a tuple of index arrays (one per variable) and returns
    a boolean array of the same shape.  Large scans are split on leading
    variables so memory stays bounded.
    """
    fixed = 0
    while fixed < nvars and n ** (nvars - fixed) > _BATCH:
        fixed += 1
    free = nvars - fixed
    grids = tuple(g.astype(np.int64) for g in np.indices((n,) * free)) if free else ()
    for prefix in itertools.product(range(n), repeat=fixed):
        consts = tuple(np.full((n,) * free, p, dtype=np.int64) for p in prefix)
        ok = np.asarray(predicate(consts + grids))
        if not ok.all():
            bad = np.unravel_index(int(np.argmin(ok.reshape(-1))), ok.shape) if free else ()
            return tuple(prefix) + tuple(int(v) for v in bad)
    return None


def check_identity(dot: Optional[CayleyTable], star: Optional[CayleyTable], identity: Identity) -> CheckResult:
    """Exhaustively test ``identity``; the witness is the first failing assignment."""
    n = _carrier(dot, star, identity)
    d = dot.table if dot is not None else None
    s = star.table if star is not None else None
    if identity.nvars == 0:
        ok = _eval(identity.lhs, d, s, ()) == _eval(identity.rhs, d, s, ())
        return OK if ok else CheckResult(False, ())
    witness = scan(n, identity.nvars,
                   lambda env: _eval(identity.lhs, d, s, env) == _eval(identity.rhs, d, s, env))
    if witness is None:
        return OK
    return CheckResult(False, witness, str(identity))


def is_associative(t: CayleyTable) -> CheckResult:
    T = t.table
    witness = scan(t.n, 3, lambda g: T[T[g[0], g[1]], g[2]] == T[g[0], T[g[1], g[2]]])
    return OK if witness is None else CheckResult(False, witness, "associativity")


# ---------------------------------------------------------------------------
# Structural profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructuralProfile:
    associative: bool
    commutative: bool
    band: bool
    semilattice: bool
    left_zero: bool
    right_zero: bool
    rectangular_band: bool
    right_normal: bool
    left_normal: bool
    left_group: bool
    group: bool
    clifford: bool
    idempotents: frozenset
    left_identities: frozenset
    right_identities: frozenset
    left_annihilators: frozenset
    right_annihilators: frozenset
    identity: Optional[int] = None
    zero: Optional[int] = None

    def flags(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if isinstance(v, bool)}


def idempotent_power(t: CayleyTable, x: int) -> int:
    """The unique idempotent among the powers of ``x`` (finite associative tables)."""
    seen = []
    p = x
    while p not in seen:
        seen.append(p)
        if t(p, p) == p:
            return p
        p = t(p, x)
    # periodic part reached without a fixed point; search the cycle
    for q in seen:
        if t(q, q) == q:
            return q
    raise ValueError(f"no idempotent power of {x}; table is not associative")


def structural_profile(t: CayleyTable) -> StructuralProfile:
    T = t.table
    n = t.n
    r = np.arange(n)
    assoc = bool(is_associative(t))
    comm = bool(np.array_equal(T, T.T))
    idem = frozenset(int(x) for x in r[T[r, r] == r])
    band = len(idem) == n
    left_zero = bool((T == r[:, None]).all())
    right_zero = bool((T == r[None, :]).all())
    # x.y.x = x
    rect = band and bool((T[T, r[:, None]] == r[:, None]).all()) if assoc else False
    X, Y, Z = np.indices((n, n, n))
    right_normal = bool((T[T[X, Y], Z] == T[T[Y, X], Z]).all())
    left_normal = bool((T[T[X, Y], Z] == T[T[X, Z], Y]).all())
    left_ids = frozenset(int(e) for e in r if (T[e] == r).all())
    right_ids = frozenset(int(e) for e in r if (T[:, e] == r).all())
    left_ann = frozenset(int(e) for e in r if (T[e] == e).all())
    right_ann = frozenset(int(e) for e in r if (T[:, e] == e).all())
    identity = next(iter(left_ids & right_ids), None)
    zero = next(iter(left_ann & right_ann), None)

    left_group = group = clifford = False
    if assoc:
        # right cancellative: every row map x -> x.a injective, i.e. columns are permutations
        cols_perm = all(len(set(T[:, a].tolist())) == n for a in range(n))
        left_group = cols_perm  # column a a permutation also makes x.a = b solvable
        group = identity is not None and all(len(set(T[x].tolist())) == n for x in range(n))
        central = all((T[e] == T[:, e]).all() for e in idem)
        regular = all(t(x, idempotent_power(t, x)) == x for x in range(n))
        clifford = central and regular
    return StructuralProfile(
        associative=assoc, commutative=comm, band=band, semilattice=band and comm,
        left_zero=left_zero, right_zero=right_zero, rectangular_band=rect,
        right_normal=right_normal, left_normal=left_normal, left_group=left_group,
        group=group, clifford=clifford, idempotents=idem,
        left_identities=left_ids, right_identities=right_ids,
        left_annihilators=left_ann, right_annihilators=right_ann,
        identity=None if identity is None else int(identity),
        zero=None if zero is None else int(zero),
    )


# ---------------------------------------------------------------------------
# Products and small standard tables
# ---------------------------------------------------------------------------

def direct_product(t1: CayleyTable, t2: CayleyTable) -> CayleyTable:
    """Componentwise product; pair ``(i, j)`` has index ``i * t2.n + j``."""
    n1, n2 = t1.n, t2.n
    a = t1.table[:, None, :, None]
    b = t2.table[None, :, None, :]
    table = (a * n2 + b).reshape(n1 * n2, n1 * n2)
    labels = [f"({t1.label(i)},{t2.label(j)})" for i in range(n1) for j in range(n2)]
    return CayleyTable(table, labels)


def rectangular_band(base, labels=None) -> CayleyTable:
    """``(x1, x2).(y1, y2) = (x1, y2)`` on pairs over a carrier of ``base`` elements."""
    if isinstance(base, CayleyTable):
        labels = labels or base.labels
        base = base.n
    n = base
    names = labels or [str(i) for i in range(n)]
    idx = np.arange(n * n)
    table = (idx[:, None] // n) * n + (idx[None, :] % n)
    return CayleyTable(table, [f"({names[i]},{names[j]})" for i in range(n) for j in range(n)])


def left_zero(n: int) -> CayleyTable:
    return CayleyTable(np.repeat(np.arange(n)[:, None], n, axis=1))


def right_zero(n: int) -> CayleyTable:
    return CayleyTable(np.repeat(np.arange(n)[None, :], n, axis=0))


def zero_semigroup(n: int, c: int = 0) -> CayleyTable:
    return CayleyTable(np.full((n, n), c))


def cyclic_group(n: int) -> CayleyTable:
    r = np.arange(n)
    return CayleyTable((r[:, None] + r[None, :]) % n)


def semilattice_chain(n: int) -> CayleyTable:
    """``x.y = min(x, y)``."""
    r = np.arange(n)
    return CayleyTable(np.minimum(r[:, None], r[None, :]))


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

def canonical_form(dot: CayleyTable, star: Optional[CayleyTable] = None) -> bytes:
    """Lexicographically least serialization over all relabelings of the carrier.

    Two algebras are isomorphic exactly when their canonical forms agree.
    """
    n = dot.n
    if star is not None and star.n != n:
        raise MismatchedCarrier(f"dot has {n} elements but star has {star.n}")
    if n > CANONICAL_MAX_N:
        raise TooLarge(f"canonical_form scans n! relabelings; n={n} exceeds {CANONICAL_MAX_N}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    inv = np.argsort(perms, axis=1)
    rows = np.arange(len(perms))[:, None, None]
    a = inv[:, :, None]
    b = inv[:, None, :]
    parts = [perms[rows, dot.table[a, b]].reshape(len(perms), -1)]
    if star is not None:
        parts.append(perms[rows, star.table[a, b]].reshape(len(perms), -1))
    flat = np.concatenate(parts, axis=1)
    cand = np.arange(len(perms))
    for col in range(flat.shape[1]):
        vals = flat[cand, col]
        cand = cand[vals == vals.min()]
        if len(cand) == 1:
            break
    best = flat[cand[0]]
    header = [n, 2 if star is not None else 1]
    return bytes(header + best.tolist())


def automorphism_count(dot: CayleyTable, star: Optional[CayleyTable] = None) -> int:
    n = dot.n
    count = 0
    for p in itertools.permutations(range(n)):
        if relabel(dot, p).table.tobytes() == dot.table.tobytes() and (
            star is None or relabel(star, p).table.tobytes() == star.table.tobytes()
        ):
            count += 1
    return count


def orbit_size(dot: CayleyTable, star: Optional[CayleyTable] = None) -> int:
    return math.factorial(dot.n) // automorphism_count(dot, star)
