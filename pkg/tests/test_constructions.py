import itertools

import pytest

from pentalg import laws
from pentalg.census import enumerate_semigroups
from pentalg.constructions import (BoundedFreeSemigroup, audit_well_defined, band_key, free_211_semigroup,
                                   free_band, ltd_tensor, rtd_tensor)
from pentalg.constructions.examples import (EX_LEFT_STAR, build_named_example, build_sec7_counterexample,
                                            ex_left, left_triv, prop_both, sec7_semigroup, sec7_star)
from pentalg.constructions.presentation import (SEC7, SEC7_TEXT, normal_forms, parse_presentation,
                                                presented_semigroup, word_label)
from pentalg.constructions.tensor import BoundedTensor
from pentalg.core import CayleyTable, check_identity, cyclic_group, is_associative, structural_profile
from pentalg.errors import (InternalInconsistency, NonTerminating, NotClosed, ProductOverflow,
                            StarNotInVariety, TooManyGenerators, ValidationFailed)
from pentalg.freeobjects import build_ak, build_bx, build_cn
from pentalg.pentagon import classify


def labelled(t):
    return [[t.labels[v] for v in row] for row in t.tolist()]


# --- free bands ----------------------------------------------------------

def test_free_band_sizes():
    assert [free_band(m).n for m in (1, 2, 3)] == [1, 6, 159]


def test_free_band_two_generators():
    fb = free_band(2)
    assert list(fb.table.labels) == ["x", "y", "x.y", "y.x", "x.y.x", "y.x.y"]
    assert is_associative(fb.table)
    assert all(fb.table(i, i) == i for i in range(fb.n))


def test_free_band_content_is_a_homomorphism():
    fb = free_band(3)
    for i, j in itertools.product(range(fb.n), repeat=2):
        assert set(fb.word(fb.table(i, j))) == set(fb.word(i)) | set(fb.word(j))


def test_canonicalisation_is_idempotent():
    fb = free_band(3)
    for i in range(fb.n):
        assert fb.canonical(fb.word(i)) == i


def test_too_many_generators():
    with pytest.raises(TooManyGenerators):
        free_band(4)


def evaluate_word(t, images, word):
    return t.product([images[g] for g in word])


def test_band_key_is_sound_in_every_small_band():
    # Words with equal keys must evaluate equally in every band under every assignment.
    words = [w for length in range(1, 6) for w in itertools.product(range(2), repeat=length)]
    classes = {}
    for w in words:
        classes.setdefault(band_key(w), []).append(w)
    assert len(classes) == 6
    for n in (2, 3):
        for t in enumerate_semigroups(n):
            if not all(t(x, x) == x for x in range(n)):
                continue
            for images in itertools.product(range(n), repeat=2):
                for ws in classes.values():
                    assert len({evaluate_word(t, images, w) for w in ws}) == 1


# --- bounded words and free_211 -----------------------------------------

def test_bounded_sizes():
    assert BoundedFreeSemigroup(2, 2).n == 6
    assert BoundedFreeSemigroup(1, 3).n == 3
    assert BoundedFreeSemigroup(2, 3).n == 14


def test_bounded_overflow():
    b = BoundedFreeSemigroup(2, 2)
    assert b.multiply(0, 1) == b.canonical((0, 1))
    with pytest.raises(ProductOverflow):
        b.multiply(b.canonical((0, 1)), 0)
    assert b.partial_table()[2][0] == -1


def test_free_211():
    f1 = free_211_semigroup(1)
    assert f1.n == 2 and structural_profile(f1).idempotents == frozenset({1})
    f2 = free_211_semigroup(2)
    assert f2.n == 6
    assert check_identity(f2, None, laws.CDOT_211)
    assert structural_profile(f2).idempotents == frozenset(range(2, 6))


# --- tensors -------------------------------------------------------------

C1_TENSOR = [
    ["x^2", "x", "x^2.x", "x.x^2", "x^2.x.x^2", "x.x^2.x"],
    ["x", "x^2", "x.x^2", "x^2.x", "x.x^2.x", "x^2.x.x^2"],
] * 3


def test_ltd_tensor_over_c1():
    p = ltd_tensor(build_cn(1).table.with_labels(["x", "x^2"]))
    assert labelled(p.star) == C1_TENSOR
    ident = tuple(range(6))
    assert [p.dot.labels[i] for i in range(6) if p.theta(i) == ident] == ["x^2", "x^2.x", "x^2.x.x^2"]
    assert p.valid and classify(p).is_ltd


def test_rtd_tensor_over_b1_is_constant():
    q = rtd_tensor(build_bx(1).table.with_labels(["x", "x^2"]))
    x2 = q.dot.labels.index("x^2")
    assert (q.star.table == x2).all()
    assert q.valid and classify(q).is_rtd
    assert len({q.theta(i) for i in range(q.n)}) == 1


def test_ltd_tensor_over_three_generators():
    p = ltd_tensor(build_ak(2, 1).table)
    assert p.n == 159 and p.valid and classify(p).is_ltd


def test_bounded_rtd_tensor():
    bt = rtd_tensor(build_bx(2).table, BoundedFreeSemigroup(6, 2))
    assert isinstance(bt, BoundedTensor)
    assert bt.valid


def test_tensor_rejects_star_outside_variety():
    with pytest.raises(StarNotInVariety):
        ltd_tensor(sec7_semigroup())       # not right-normal
    with pytest.raises(StarNotInVariety):
        rtd_tensor(CayleyTable(EX_LEFT_STAR))   # fails Q_1


def test_audit():
    assert audit_well_defined(CayleyTable(EX_LEFT_STAR), free_band(3), "ltd")
    assert audit_well_defined(build_bx(1).table, free_band(2), "rtd")


def test_z2_star_gives_ltd_tensor():
    # Z_2 is commutative and y*y is the identity, so it lies in the LTD variety.
    p = ltd_tensor(cyclic_group(2))
    assert p.n == 6 and p.valid and classify(p).is_ltd


# --- presentations -------------------------------------------------------

def test_sec7_normal_forms():
    forms = normal_forms(SEC7)
    assert [word_label(w) for w in forms] == ["a", "b", "a^2", "ab", "ba", "a^3", "aba"]


def test_sec7_relations():
    s = sec7_semigroup()
    a, b, a2 = s.index("a"), s.index("b"), s.index("a^2")
    assert s(b, a2) == a2 and s(a2, b) == b
    assert s.product([a, b, a]) != s.product([b, a, a]) == a2
    assert not check_identity(None, s, laws.STAR_RIGHT_NORMAL)
    assert s(a, s(a, a)) != s(b, s(b, a))


def test_parse_round_trip():
    assert parse_presentation(SEC7_TEXT) == SEC7


@pytest.mark.parametrize("text", ["a ->", "prefix-delete aa 2", "generators ab\nab -> a", "generators a\nb -> a"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_presentation(text)


def test_non_terminating():
    p = parse_presentation("generators a b\nab -> ba\nba -> ab")
    with pytest.raises(NonTerminating):
        p.reduce("ab")


def test_not_closed():
    p = parse_presentation("generators a\naaaa -> a")
    with pytest.raises(NotClosed):
        presented_semigroup(p, length_bound=2)


def test_cyclic_presentation():
    t = presented_semigroup(parse_presentation("generators a\naaaa -> a"))
    assert t.n == 3 and is_associative(t)


# --- the 49-element example ----------------------------------------------

def test_sec7_counterexample():
    p = build_sec7_counterexample()
    assert p.n == 49 and p.valid
    c = classify(p)
    assert not c.is_ltd and not c.is_rtd
    pid = p.dot.labels.index
    aa, bb = pid("(a,a)"), pid("(b,b)")
    assert p.star(p.dot(aa, bb), aa) == pid("(aba,a^2)")
    assert p.star(aa, aa) == pid("(a^2,a^2)")


def test_sec7_literal_star_fails():
    with pytest.raises(InternalInconsistency):
        build_sec7_counterexample(literal=True)
    assert sec7_star(True) != sec7_star(False)


# --- named examples ------------------------------------------------------

def test_named_examples():
    assert build_named_example("ex_left_star").valid
    assert build_named_example("ex_left_starprime").star == ex_left(True).star
    assert build_named_example("prop_both", n=4).valid
    assert build_named_example("sec7").n == 49


@pytest.mark.parametrize("n", [2, 3, 4])
def test_left_triv(n):
    p = left_triv(n)
    assert p.n == n + 1 and classify(p).is_ltd


def test_left_triv_degenerate():
    with pytest.raises(ValidationFailed):
        left_triv(1)


def test_prop_both_matches_classification():
    for n in (1, 2, 4):
        c = classify(prop_both(n))
        assert c.cell == "both"
