"""Named example algebras, each validated on construction."""
from __future__ import annotations

from ..core import CayleyTable, rectangular_band
from ..errors import GammaNotIdempotentEndomorphism, InternalInconsistency, ValidationFailed
from ..pentagon import PentagonAlgebra, classify, is_idempotent_endomorphism, make_apa
from .presentation import SEC7, presented_semigroup

EX_LEFT_LABELS = ("a", "b", "c")
EX_LEFT_DOT = ((0, 0, 0), (1, 1, 1), (0, 0, 0))
EX_LEFT_STAR = ((0, 1, 0), (1, 0, 1), (0, 1, 0))
EX_LEFT_STARPRIME = ((1, 0, 1), (0, 1, 0), (1, 0, 1))


def _validated(dot: CayleyTable, star: CayleyTable, what: str) -> PentagonAlgebra:
    p = make_apa(dot, star)
    if not p.valid:
        failed = [name for name, r in p.status.items() if not r]
        raise ValidationFailed(f"{what} is not an APA: {failed} fail")
    return p


def ex_left(prime: bool = False) -> PentagonAlgebra:
    """Three-element APA whose dot has ``a.x = c.x = a`` and ``b.x = b``."""
    dot = CayleyTable(EX_LEFT_DOT, EX_LEFT_LABELS)
    star = CayleyTable(EX_LEFT_STARPRIME if prime else EX_LEFT_STAR, EX_LEFT_LABELS)
    return _validated(dot, star, "ex_left_starprime" if prime else "ex_left_star")


def gamma_apa(dot: CayleyTable, gamma) -> PentagonAlgebra:
    """Star determined by ``gamma``: ``x * y = gamma(y)`` for every ``x``."""
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != dot.n or not all(0 <= g < dot.n for g in gamma):
        raise GammaNotIdempotentEndomorphism(f"gamma must map {dot.n} elements into themselves")
    if not is_idempotent_endomorphism(gamma, dot):
        raise GammaNotIdempotentEndomorphism(f"gamma {list(gamma)} is not an idempotent endomorphism of the dot")
    star = CayleyTable([list(gamma)] * dot.n, dot.labels)
    return _validated(dot, star, "gamma algebra")


def prop_both(n: int) -> PentagonAlgebra:
    """``S = {0..n-1}``; the star ignores its left argument and keeps only ``n-1``."""
    if n < 1:
        raise ValueError("n must be at least 1")

    def dot(x, y):
        if y == n - 2:
            return n - 2
        return x if x == y else 0

    def star(x, y):
        return n - 1 if y == n - 1 else 0

    p = _validated(CayleyTable.from_function(n, dot), CayleyTable.from_function(n, star), f"prop_both({n})")
    c = classify(p)
    if not (c.is_ltd and c.is_rtd and c.determined_by is not None):
        raise ValidationFailed(f"prop_both({n}) is not determined by a single map")
    return p


def left_triv(n: int) -> PentagonAlgebra:
    """``S = {0..n}``: a left-zero band on ``{0..n-1}`` with ``n.y = 0`` for ``y != n``."""
    if n < 1:
        raise ValueError("n must be at least 1")

    def dot(x, y):
        return x if x != n or y == n else 0

    def star(x, y):
        return 1 if (x == 1) != (y == 1) else 0

    p = _validated(CayleyTable.from_function(n + 1, dot), CayleyTable.from_function(n + 1, star), f"left_triv({n})")
    if not classify(p).is_ltd:
        raise ValidationFailed(f"left_triv({n}) is not left-trivially distributive")
    return p


def sec7_semigroup() -> CayleyTable:
    """The 7-element semigroup presented on ``{a, b}``."""
    return presented_semigroup(SEC7)


def sec7_star(literal: bool = False) -> CayleyTable:
    """Star on ``S x S`` for the 7-element ``S``.

    The second case as printed, ``(x1*y1, x1*y1^2*a)``, does not satisfy (I);
    by default ``y2`` replaces ``y1`` in its second coordinate, which does.
    """
    s = sec7_semigroup()
    n = s.n
    a = s.index("a")

    def m(*xs):
        return s.product(xs)

    def star(x, y):
        x1, x2 = divmod(x, n)
        y1, y2 = divmod(y, n)
        if y1 == a and y2 == a:
            r = (m(x1, x2, x2, a), m(x1, a, a, a))
        elif y2 == a:
            r = (m(x1, y1), m(x1, y1 if literal else y2, y1 if literal else y2, a))
        elif y1 == a:
            r = (m(x1, x2, x2, a), m(x1, y2))
        else:
            r = (m(x1, y1), m(x1, y2))
        return r[0] * n + r[1]

    return CayleyTable.from_function(n * n, star, rectangular_band(s).labels)


def build_sec7_counterexample(literal: bool = False) -> PentagonAlgebra:
    """49-element APA on a rectangular band that is neither LTD nor RTD."""
    s = sec7_semigroup()
    dot = rectangular_band(s)
    p = make_apa(dot, sec7_star(literal))
    if not p.valid:
        failed = [(name, r.witness) for name, r in p.status.items() if not r]
        raise InternalInconsistency(f"S x S with the pair star is not an APA: {failed}")
    return p


NAMED = ("ex_left_star", "ex_left_starprime", "gamma", "prop_both", "left_triv", "sec7")


def build_named_example(name: str, n: int | None = None, dot: CayleyTable | None = None,
                        gamma=None) -> PentagonAlgebra:
    if name == "ex_left_star":
        return ex_left(False)
    if name == "ex_left_starprime":
        return ex_left(True)
    if name == "gamma":
        if dot is None or gamma is None:
            raise ValueError("gamma needs a dot table and a map")
        return gamma_apa(dot, gamma)
    if name == "prop_both":
        return prop_both(5 if n is None else n)
    if name == "left_triv":
        return left_triv(3 if n is None else n)
    if name == "sec7":
        return build_sec7_counterexample()
    raise ValueError(f"unknown example {name!r}; choose from {', '.join(NAMED)}")
