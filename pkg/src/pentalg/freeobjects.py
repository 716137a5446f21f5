"""Finite free objects: A_k(n) for right-normal P_k-semigroups, C_n for (R), B(X_n) for Q_1.

Element orders are fixed so tables are byte-reproducible:

* ``A_k(n)``: plain elements in lexicographic ``(coords, pointer)`` order,
  then the special elements ``(0,..,k,..,0, m)`` by pointer.
* ``C_n``: lexicographic ``(coords, pointer)``.
* ``B(X_n)``: lexicographic ``(first, second)``.

Pointers are stored 0-based and printed 1-based, as ``(a1,...,an,l)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import laws
from .core import OK, CayleyTable, CheckResult, check_identity, is_associative
from .errors import InternalInconsistency, SizeCap, TargetNotInVariety

DEFAULT_CAP = 4096


@dataclass(frozen=True, order=True)
class AkElement:
    coords: tuple
    pointer: int

    def is_special(self, k: int) -> bool:
        return k in self.coords

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + f",{self.pointer + 1})"


@dataclass(frozen=True, order=True)
class CnElement:
    coords: tuple
    pointer: int

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + f",{self.pointer + 1})"


@dataclass(frozen=True, order=True)
class BxElement:
    first: int
    second: int

    def __str__(self):
        return f"({self.first},{self.second})"


@dataclass(frozen=True)
class FreeObject:
    table: CayleyTable
    elements: tuple
    generators: tuple  # element indices of the free generators

    @property
    def n(self):
        return self.table.n

    def index(self, element) -> int:
        return self.elements.index(element)

    def find(self, label: str) -> int:
        return self.table.labels.index(label)


def _check_cap(size, cap, what):
    if size > cap:
        raise SizeCap(f"{what} has {size} elements, above the cap {cap}")


def ak_elements(k: int, n: int) -> list:
    plain = [AkElement(c, l) for c in itertools.product(range(k), repeat=n) for l in range(n)]
    special = [AkElement(tuple(k if i == m else 0 for i in range(n)), m) for m in range(n)]
    return plain + special


def ak_multiply(u: AkElement, v: AkElement, k: int) -> AkElement:
    """``(a, l) * (b, m)``; the special coordinate ``k`` counts as 0 mod k."""
    n = len(u.coords)
    s = [(a % k + b % k) % k for a, b in zip(u.coords, v.coords)]
    s[u.pointer] = (s[u.pointer] + 1) % k
    if any(s):
        return AkElement(tuple(s), v.pointer)
    return AkElement(tuple(k if i == v.pointer else 0 for i in range(n)), v.pointer)


def build_ak(k: int, n: int, cap: int = DEFAULT_CAP, verify: bool = True) -> FreeObject:
    """The right-normal P_k-semigroup A_k(n) with ``n k^n + n`` elements."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    _check_cap(n * k ** n + n, cap, f"A_{k}({n})")
    els = ak_elements(k, n)
    pos = {e: i for i, e in enumerate(els)}
    table = [[pos[ak_multiply(u, v, k)] for v in els] for u in els]
    t = CayleyTable(table, [str(e) for e in els])
    gens = tuple(pos[AkElement((0,) * n, m)] for m in range(n))
    if verify:
        for law, r in (("associativity", is_associative(t)),
                       ("right-normal", check_identity(None, t, laws.STAR_RIGHT_NORMAL)),
                       (f"P_{k}", check_identity(None, t, laws.p_law(k)))):
            if not r:
                raise InternalInconsistency(f"A_{k}({n}) fails {law} at {r.witness}")
    return FreeObject(t, tuple(els), gens)


def ak_idempotents(k: int, n: int, cap: int = DEFAULT_CAP) -> frozenset:
    """Idempotents found by scanning the table, cross-checked against generator powers.

    ``g^(2k)`` is idempotent in any P_k-semigroup and equals ``g^k`` once
    ``k >= 2``.  For ``k = 1`` the generator itself is not idempotent: every
    product lands on the special element, which is the only idempotent.
    """
    fo = build_ak(k, n, cap)
    t = fo.table
    scanned = frozenset(fo.elements[x] for x in range(t.n) if t(x, x) == x)
    powers = frozenset(fo.elements[t.power(g, 2 * k)] for g in fo.generators)
    if scanned != powers or len(scanned) != n:
        raise InternalInconsistency(f"idempotent scan {sorted(map(str, scanned))} "
                                    f"!= generator powers {sorted(map(str, powers))}")
    return scanned


def build_cn(n: int, cap: int = DEFAULT_CAP, verify: bool = True) -> FreeObject:
    """``C_n = Z_2^n x [n]``, free in the variety defined by ``x^2 * z = z``."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap(n * 2 ** n, cap, f"C_{n}")
    els = [CnElement(c, l) for c in itertools.product(range(2), repeat=n) for l in range(n)]
    pos = {e: i for i, e in enumerate(els)}

    def mul(u, v):
        c = [(a + b) % 2 for a, b in zip(u.coords, v.coords)]
        c[u.pointer] ^= 1
        return pos[CnElement(tuple(c), v.pointer)]

    t = CayleyTable([[mul(u, v) for v in els] for u in els], [str(e) for e in els])
    if verify:
        for law, r in (("associativity", is_associative(t)),
                       ("right-normal", check_identity(None, t, laws.STAR_RIGHT_NORMAL)),
                       ("(R)", check_identity(None, t, laws.R_LAW))):
            if not r:
                raise InternalInconsistency(f"C_{n} fails {law} at {r.witness}")
    gens = tuple(pos[CnElement((0,) * n, m)] for m in range(n))
    return FreeObject(t, tuple(els), gens)


def build_bx(n: int, cap: int = DEFAULT_CAP, verify: bool = True) -> FreeObject:
    """``B(X) = ({0} u X) x X`` with ``(a,b)*(c,d) = (c,d)`` if ``c != 0`` else ``(b,d)``."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap((n + 1) * n, cap, f"B(X_{n})")
    els = [BxElement(a, b) for a in range(n + 1) for b in range(1, n + 1)]
    pos = {e: i for i, e in enumerate(els)}

    def mul(u, v):
        if v.first != 0:
            return pos[v]
        return pos[BxElement(u.second, v.second)]

    t = CayleyTable([[mul(u, v) for v in els] for u in els], [str(e) for e in els])
    if verify:
        for law, r in (("associativity", is_associative(t)),
                       ("Q_1", check_identity(None, t, laws.q_law(1)))):
            if not r:
                raise InternalInconsistency(f"B(X_{n}) fails {law} at {r.witness}")
    gens = tuple(pos[BxElement(0, b)] for b in range(1, n + 1))
    return FreeObject(t, tuple(els), gens)


@dataclass(frozen=True)
class HomExtension:
    mapping: tuple  # mapping[i] = image of source element i
    check: CheckResult

    def __bool__(self):
        return bool(self.check)


def _hom_check(source: CayleyTable, target: CayleyTable, mapping) -> CheckResult:
    h = np.asarray(mapping)
    S, T = source.table, target.table
    bad = np.argwhere(h[S] != T[h[:, None], h[None, :]])
    if len(bad):
        return CheckResult(False, tuple(int(v) for v in bad[0]), "h(u*v) != h(u)*h(v)")
    return OK


def _star_power(target: CayleyTable, s: int, e: int):
    """``s^e``, or None for ``e == 0``."""
    return None if e == 0 else target.power(s, e)


def hom_extension_pk(k: int, n: int, target: CayleyTable, images, cap: int = DEFAULT_CAP) -> HomExtension:
    """Extend generator images ``(0,..,0,m) -> images[m]`` to all of A_k(n)."""
    if len(images) != n:
        raise ValueError(f"need {n} generator images")
    for law in (laws.STAR_RIGHT_NORMAL, laws.p_law(k)):
        r = check_identity(None, target, law)
        if not r:
            raise TargetNotInVariety(f"target fails {law} at {r.witness}")
    if not is_associative(target):
        raise TargetNotInVariety("target is not associative")
    fo = build_ak(k, n, cap)
    mapping = []
    for el in fo.elements:
        y = el.pointer
        if el.is_special(k):
            mapping.append(target.power(images[y], k + 1))
            continue
        acc = None
        for x, e in enumerate(el.coords):
            pw = _star_power(target, images[x], e)
            if pw is not None:
                acc = pw if acc is None else target(acc, pw)
        mapping.append(images[y] if acc is None else target(acc, images[y]))
    return HomExtension(tuple(mapping), _hom_check(fo.table, target, mapping))


def hom_extension_q1(n: int, target: CayleyTable, images, cap: int = DEFAULT_CAP) -> HomExtension:
    """Extend ``(0,b) -> images[b-1]`` to B(X_n)."""
    if len(images) != n:
        raise ValueError(f"need {n} generator images")
    if not is_associative(target):
        raise TargetNotInVariety("target is not associative")
    r = check_identity(None, target, laws.q_law(1))
    if not r:
        raise TargetNotInVariety(f"target fails Q_1 at {r.witness}")
    fo = build_bx(n, cap)
    mapping = []
    for el in fo.elements:
        sb = images[el.second - 1]
        mapping.append(sb if el.first == 0 else target(images[el.first - 1], sb))
    return HomExtension(tuple(mapping), _hom_check(fo.table, target, mapping))


def find_pj_witness(t: CayleyTable, j: int):
    """First assignment falsifying P_j, or None when P_j holds."""
    return check_identity(None, t, laws.p_law(j)).witness
