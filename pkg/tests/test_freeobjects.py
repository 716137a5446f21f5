import itertools

import pytest

from pentalg import laws
from pentalg.constructions.examples import ex_left
from pentalg.core import CayleyTable, check_identity, is_associative, right_zero, zero_semigroup
from pentalg.errors import SizeCap, TargetNotInVariety
from pentalg.freeobjects import (AkElement, ak_idempotents, ak_multiply, build_ak, build_bx, build_cn,
                                 find_pj_witness, hom_extension_pk, hom_extension_q1)


def labelled(t):
    return [[t.labels[v] for v in row] for row in t.tolist()]


# --- A_k(n) --------------------------------------------------------------

def test_a21_table():
    t = build_ak(2, 1).table
    assert list(t.labels) == ["(0,1)", "(1,1)", "(2,1)"]
    row = ["(1,1)", "(2,1)", "(1,1)"]
    assert labelled(t) == [row, ["(2,1)", "(1,1)", "(2,1)"], row]


@pytest.mark.parametrize("k,n", [(1, 1), (1, 3), (2, 1), (2, 2), (3, 2), (2, 3), (5, 1)])
def test_ak_size_and_laws(k, n):
    fo = build_ak(k, n)
    assert fo.n == n * k ** n + n
    assert is_associative(fo.table)
    assert check_identity(None, fo.table, laws.STAR_RIGHT_NORMAL)
    assert check_identity(None, fo.table, laws.p_law(k))


def test_a22_products():
    t = build_ak(2, 2).table
    assert t.label(t(t.index("(0,0,1)"), t.index("(0,1,2)"))) == "(1,1,2)"
    # (0,1,2)*(0,0,1): coordinates (0,1)+(0,0), then bump coordinate 2 -> (0,2) = (0,0) mod 2,
    # which is the special element of pointer 1.
    assert t.label(t(t.index("(0,1,2)"), t.index("(0,0,1)"))) == "(2,0,1)"
    assert "(0,2,1)" not in t.labels


def test_ak_idempotents():
    assert sorted(map(str, ak_idempotents(2, 2))) == ["(0,1,2)", "(1,0,1)"]
    # k = 1: (0,1)*(0,1) is the special element, so the generator is not idempotent.
    assert sorted(map(str, ak_idempotents(1, 1))) == ["(1,1)"]
    t = build_ak(1, 1).table
    assert t(0, 0) == 1 and t(1, 1) == 1
    assert sorted(map(str, ak_idempotents(2, 1))) == ["(1,1)"]
    assert len(ak_idempotents(3, 2)) == 2
    for k, n in ((2, 2), (3, 2), (2, 3)):
        fo = build_ak(k, n)
        assert {fo.elements[fo.table.power(g, k)] for g in fo.generators} == ak_idempotents(k, n)


def test_special_coordinate_counts_as_zero():
    u = AkElement((2, 0), 0)            # special element for k = 2
    v = AkElement((0, 1), 1)
    assert ak_multiply(u, v, 2) == AkElement((1, 1), 1)


def test_ak_cap():
    with pytest.raises(SizeCap):
        build_ak(4, 6)


@pytest.mark.parametrize("k", [2, 3, 5])
@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_pj_holds_exactly_for_multiples_of_k(k, j):
    t = build_ak(k, 1).table
    w = find_pj_witness(t, j)
    if j % k == 0:
        assert w is None
    else:
        assert w is not None


@pytest.mark.parametrize("k,n", [(2, 2), (3, 1), (3, 2)])
def test_power_collapse(k, n):
    # x^k * z = z^(k+1) in A_k(n): P_k plus right-normality.
    t = build_ak(k, n).table
    for x, z in itertools.product(range(t.n), repeat=2):
        assert t(t.power(x, k), z) == t.power(z, k + 1)


def test_all_kth_powers_with_same_pointer_agree():
    k, n = 2, 2
    fo = build_ak(k, n)
    t = fo.table
    for u in range(t.n):
        for v in range(t.n):
            if fo.elements[u].pointer == fo.elements[v].pointer:
                assert t.power(u, k) == t.power(v, k)


# --- C_n and B(X) --------------------------------------------------------

def test_c1_table():
    t = build_cn(1).table
    assert t.tolist() == [[1, 0], [0, 1]]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cn_laws(n):
    t = build_cn(n).table
    assert t.n == n * 2 ** n
    assert check_identity(None, t, laws.R_LAW)
    assert check_identity(None, t, laws.STAR_RIGHT_NORMAL)


def test_b1_is_constant():
    assert build_bx(1).table.tolist() == [[1, 1], [1, 1]]


def test_b2_idempotents_and_q1():
    fo = build_bx(2)
    idem = sorted(str(fo.elements[x]) for x in range(fo.n) if fo.table(x, x) == x)
    assert idem == ["(1,1)", "(1,2)", "(2,1)", "(2,2)"]
    assert check_identity(None, fo.table, laws.q_law(1))


# --- homomorphism extensions ---------------------------------------------

def targets_pk(k):
    cands = {"a21": build_ak(2, 1).table, "ex_left": ex_left().star, "rz3": right_zero(3),
             "zero3": zero_semigroup(3), "b1": build_bx(1).table}
    for name, t in cands.items():
        if (is_associative(t) and check_identity(None, t, laws.STAR_RIGHT_NORMAL)
                and check_identity(None, t, laws.p_law(k))):
            yield name, t


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("n", [1, 2])
def test_pk_extension_is_a_homomorphism(k, n):
    found = 0
    for _, t in targets_pk(k):
        for images in itertools.product(range(t.n), repeat=n):
            ext = hom_extension_pk(k, n, t, images)
            assert ext, ext.check.witness
            fo = build_ak(k, n)
            for m, g in enumerate(fo.generators):
                assert ext.mapping[g] == images[m]
            found += 1
    assert found


def test_pk_extension_rejects_bad_target():
    with pytest.raises(TargetNotInVariety):
        hom_extension_pk(1, 1, ex_left().star, [0])   # P_1 fails on ex_left's star


@pytest.mark.parametrize("n", [1, 2])
def test_q1_extension(n):
    for t in (build_bx(1).table, build_bx(2).table, zero_semigroup(3), right_zero(3)):
        for images in itertools.product(range(t.n), repeat=n):
            assert hom_extension_q1(n, t, images)


def test_q1_swap_extension_is_automorphism():
    fo = build_bx(2)
    ext = hom_extension_q1(2, fo.table, [fo.generators[1], fo.generators[0]])
    assert ext and sorted(ext.mapping) == list(range(fo.n))


def test_q1_rejects_bad_target():
    with pytest.raises(TargetNotInVariety):
        hom_extension_q1(1, CayleyTable([[0, 1], [1, 0]]), [0])
