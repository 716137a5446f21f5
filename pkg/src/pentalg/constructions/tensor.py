"""Tensor operations producing LTD and RTD pentagon algebras on word carriers.

For ``x = x_1...x_n`` and ``y = y_1...y_m`` (letters are elements of a star semigroup):

* LTD: ``x (x) y = prod_j (x_1 * y_j)``
* RTD: ``x (x) y = (x_n * y_1) . prod_{j>=2} (y_{j-1} * y_j)``

The letters are read off the carrier's canonical word for each element, and
representative independence is audited on short words instead of assumed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .. import laws
from ..core import OK, CayleyTable, CheckResult, check_identity, is_associative, scan
from ..errors import ConstructionInconsistent, ProductOverflow, StarNotInVariety
from ..pentagon import PentagonAlgebra, make_apa
from .words import BoundedFreeSemigroup, FreeBand

AUDIT_MAX_LENGTH = 4


def ltd_letters(star: CayleyTable, u, v) -> list:
    x1 = u[0]
    return [star(x1, y) for y in v]


def rtd_letters(star: CayleyTable, u, v) -> list:
    out = [star(u[-1], v[0])]
    out.extend(star(v[j - 1], v[j]) for j in range(1, len(v)))
    return out


_MODES = {"ltd": ltd_letters, "rtd": rtd_letters}


def _require_star(star: CayleyTable, mode: str):
    if not is_associative(star):
        raise StarNotInVariety("star table is not associative")
    if mode == "ltd":
        for law in (laws.STAR_RIGHT_NORMAL, laws.p_law(2)):
            r = check_identity(None, star, law)
            if not r:
                raise StarNotInVariety(f"star is not in V_P2: {law} fails at {r.witness}")
    else:
        r = check_identity(None, star, laws.q_law(1))
        if not r:
            raise StarNotInVariety(f"star is not in V_Q1: Q_1 fails at {r.witness}")


def _resolve_carrier(carrier, star: CayleyTable, names):
    if isinstance(carrier, (FreeBand, BoundedFreeSemigroup)):
        if carrier.m != star.n:
            raise ValueError(f"carrier has {carrier.m} generators, star has {star.n} elements")
        return carrier
    names = names or (list(star.labels) if star.labels else None)
    if carrier == "freeband":
        return FreeBand(star.n, names)
    raise ValueError(f"unknown carrier {carrier!r}")


def tensor_table(star: CayleyTable, carrier, mode: str) -> CayleyTable:
    letters = _MODES[mode]
    n = carrier.n
    words = [carrier.word(i) for i in range(n)]
    table = [[carrier.canonical(letters(star, words[i], words[j])) for j in range(n)] for i in range(n)]
    return CayleyTable(table, carrier.table.labels if hasattr(carrier, "table") else carrier.labels)


def audit_well_defined(star: CayleyTable, carrier, mode: str, max_length: int = AUDIT_MAX_LENGTH) -> CheckResult:
    """Equal words must give equal tensor products on both sides."""
    letters = _MODES[mode]
    classes: dict = {}
    for length in range(1, max_length + 1):
        for w in itertools.product(range(carrier.m), repeat=length):
            classes.setdefault(carrier.canonical(w), []).append(w)
    reps = [carrier.word(i) for i in range(carrier.n)]
    for cls in classes.values():
        for u, v in zip(cls, cls[1:]):
            for w in reps:
                if carrier.canonical(letters(star, u, w)) != carrier.canonical(letters(star, v, w)):
                    return CheckResult(False, (u, v, w), "left argument representative")
                if carrier.canonical(letters(star, w, u)) != carrier.canonical(letters(star, w, v)):
                    return CheckResult(False, (u, v, w), "right argument representative")
    return OK


def _build(star: CayleyTable, carrier, mode: str, names=None):
    _require_star(star, mode)
    carrier = _resolve_carrier(carrier, star, names)
    if isinstance(carrier, BoundedFreeSemigroup):
        return bounded_tensor(star, carrier.L, mode, carrier.names)
    audit = audit_well_defined(star, carrier, mode)
    if not audit:
        raise ConstructionInconsistent(f"tensor depends on representatives: {audit.detail} at {audit.witness}")
    otimes = tensor_table(star, carrier, mode)
    p = make_apa(carrier.table, otimes)
    if not p.valid:
        failed = [(name, r.witness) for name, r in p.status.items() if not r]
        raise ConstructionInconsistent(f"{mode} tensor algebra is not an APA: {failed}")
    if mode == "ltd":
        required = (laws.LTD, laws.LEFT_DISTRI, laws.STAR_RIGHT_NORMAL, laws.p_law(2))
    else:
        required = (laws.RTD, laws.FALSE_DISTRI, laws.q_law(1))
    for law in required:
        r = check_identity(p.dot, p.star, law)
        if not r:
            raise ConstructionInconsistent(f"{mode} tensor algebra fails {law} at {r.witness}")
    return p


def ltd_tensor(star: CayleyTable, carrier="freeband", names=None):
    """LTD APA on the free band generated by the elements of a right-normal P_2 star.

    A :class:`BoundedFreeSemigroup` carrier yields a :class:`BoundedTensor` instead,
    since its dot is only partial.
    """
    return _build(star, carrier, "ltd", names)


def rtd_tensor(star: CayleyTable, carrier="freeband", names=None):
    """RTD APA on the free band generated by the elements of a Q_1 star."""
    return _build(star, carrier, "rtd", names)


# ---------------------------------------------------------------------------
# Bounded word windows
# ---------------------------------------------------------------------------

def _eval_partial(term, D, S, env):
    """Evaluate with ``-1`` marking undefined values."""
    if not hasattr(term, "op"):
        return env[term.index]
    left = _eval_partial(term.left, D, S, env)
    right = _eval_partial(term.right, D, S, env)
    table = D if term.op == "dot" else S
    ok = (left >= 0) & (right >= 0)
    out = table[np.where(ok, left, 0), np.where(ok, right, 0)]
    return np.where(ok, out, -1)


def check_identity_partial(D: np.ndarray, S: np.ndarray, identity) -> CheckResult:
    """Check on the assignments where both sides are defined."""
    n = D.shape[0]

    def pred(env):
        lhs = _eval_partial(identity.lhs, D, S, env)
        rhs = _eval_partial(identity.rhs, D, S, env)
        return (lhs < 0) | (rhs < 0) | (lhs == rhs)

    w = scan(n, identity.nvars, pred)
    return OK if w is None else CheckResult(False, w, str(identity))


@dataclass(frozen=True)
class BoundedTensor:
    carrier: BoundedFreeSemigroup
    star: CayleyTable
    dot_partial: np.ndarray
    checks: dict

    @property
    def valid(self) -> bool:
        return all(self.checks.values())


def bounded_tensor(star: CayleyTable, L: int, mode: str, names=None) -> BoundedTensor:
    """Tensor operation on words of length at most ``L``, verified on in-bounds instances.

    The tensor never lengthens its right argument, so it is total on the window;
    only dot products may overflow.
    """
    _require_star(star, mode)
    names = names or (list(star.labels) if star.labels else None)
    carrier = BoundedFreeSemigroup(star.n, L, names)
    letters = _MODES[mode]
    n = carrier.n
    words = carrier.elements
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            try:
                row.append(carrier.canonical(letters(star, words[i], words[j])))
            except ProductOverflow as exc:  # pragma: no cover - tensor preserves length
                raise ConstructionInconsistent(str(exc)) from exc
        table.append(row)
    otimes = CayleyTable(table, carrier.labels)
    D = np.array(carrier.partial_table(), dtype=np.int64)
    S = otimes.table
    checks = {
        "dot-assoc": check_identity_partial(D, S, laws.DOT_ASSOC),
        "star-assoc": check_identity_partial(D, S, laws.STAR_ASSOC),
        "eq-I": check_identity_partial(D, S, laws.EQ_I),
        "eq-II": check_identity_partial(D, S, laws.EQ_II),
    }
    if mode == "ltd":
        checks["LTD"] = check_identity_partial(D, S, laws.LTD)
        checks["left-distributive"] = check_identity_partial(D, S, laws.LEFT_DISTRI)
    else:
        checks["RTD"] = check_identity_partial(D, S, laws.RTD)
        checks["false-distri"] = check_identity_partial(D, S, laws.FALSE_DISTRI)
        checks["Q_1"] = check_identity_partial(D, S, laws.q_law(1))
    return BoundedTensor(carrier, otimes, D, checks)
