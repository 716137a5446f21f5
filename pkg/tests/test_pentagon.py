import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentalg import laws
from pentalg.constructions.examples import (build_sec7_counterexample, ex_left, gamma_apa, left_triv,
                                            prop_both)
from pentalg.core import (CayleyTable, check_identity, cyclic_group, left_zero, right_zero,
                          semilattice_chain, zero_semigroup)
from pentalg.errors import InternalInconsistency, MismatchedCarrier, NotAnApa, NotAssociative
from pentalg.pentagon import (classify, derived_relations, lm_eq_equivalence, make_apa,
                              pentagon_map_check, require_apa, solution_is_bijective, solution_symmetries,
                              theorem_crosscheck, translations, triple_map_check)


def naive_pentagon(dot, star):
    """s23 s13 s12 = s12 s23 on every triple, written out by hand."""
    n = dot.n

    def s(x, y):
        return dot(x, y), star(x, y)

    for x, y, z in itertools.product(range(n), repeat=3):
        a, b = s(x, y)          # s12
        a, c = s(a, z)          # s13
        b, c = s(b, c)          # s23
        lhs = (a, b, c)
        y2, z2 = s(y, z)        # s23
        x3, y3 = s(x, y2)       # s12
        if lhs != (x3, y3, z2):
            return False
    return True


def all_tables(n):
    for flat in itertools.product(range(n), repeat=n * n):
        yield CayleyTable([flat[i * n:(i + 1) * n] for i in range(n)])


# --- make_apa ------------------------------------------------------------

@pytest.mark.parametrize("dot", [left_zero(3), right_zero(3), cyclic_group(3), semilattice_chain(3)])
def test_right_zero_star_is_always_an_apa(dot):
    p = make_apa(dot, right_zero(dot.n))
    assert p.valid
    c = classify(p)
    assert c.determined_by == tuple(range(dot.n))
    assert c.is_ltd and c.is_rtd


def test_ex_left_is_an_apa():
    for prime in (False, True):
        p = ex_left(prime)
        assert p.valid
        assert triple_map_check(p)


def test_pentagon_algebra_with_non_associative_star():
    # Left-zero dot on Z_3 with x * y = y - x: a pentagon algebra, star not associative.
    dot = left_zero(3)
    star = CayleyTable.from_function(3, lambda x, y: (y - x) % 3)
    p = make_apa(dot, star)
    assert p.status.pentagon
    assert not p.status.star_assoc
    assert p.status.star_assoc.witness is not None
    assert not p.valid
    assert pentagon_map_check(dot, star)


def test_inverse_star_over_z2_is_associative():
    # Over Z_2 every element is its own inverse, so x^-1 y = x y stays associative.
    star = CayleyTable.from_function(2, lambda x, y: (x + y) % 2)
    assert make_apa(left_zero(2), star).valid


def test_mismatched_sizes():
    with pytest.raises(MismatchedCarrier):
        make_apa(left_zero(2), right_zero(3))


def test_require_apa():
    p = make_apa(left_zero(3), CayleyTable.from_function(3, lambda x, y: (y - x) % 3))
    with pytest.raises(NotAnApa):
        require_apa(p)
    with pytest.raises(NotAnApa):
        classify(p)


# --- pentagon map oracle -------------------------------------------------

def test_pentagon_map_oracle_on_all_lz2_stars():
    dot = left_zero(2)
    for star in all_tables(2):
        eq = bool(check_identity(dot, star, laws.EQ_I) and check_identity(dot, star, laws.EQ_II))
        assert bool(pentagon_map_check(dot, star)) == eq == naive_pentagon(dot, star)


def test_swap_constant_star_over_lz2():
    dot, star = left_zero(2), CayleyTable([[1, 1], [0, 0]])
    eq = bool(check_identity(dot, star, laws.EQ_I) and check_identity(dot, star, laws.EQ_II))
    assert bool(pentagon_map_check(dot, star)) == eq


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=18, max_size=18))
def test_pentagon_map_matches_equations_on_three_elements(flat):
    dot = CayleyTable([flat[0:3], flat[3:6], flat[6:9]])
    star = CayleyTable([flat[9:12], flat[12:15], flat[15:18]])
    eq = bool(check_identity(dot, dot.__class__(dot.table), laws.DOT_ASSOC)
              and check_identity(dot, star, laws.EQ_I) and check_identity(dot, star, laws.EQ_II))
    assert bool(pentagon_map_check(dot, star)) == eq
    assert naive_pentagon(dot, star) == bool(pentagon_map_check(dot, star))


# --- solution symmetries -------------------------------------------------

def test_left_zero_right_zero_solution_is_commutative():
    p = make_apa(left_zero(2), right_zero(2))
    assert solution_symmetries(p).commutative_solution


def test_singleton_has_all_symmetries():
    p = make_apa(CayleyTable([[0]]), CayleyTable([[0]]))
    sym = solution_symmetries(p)
    assert sym.commutative_solution and sym.cocommutative_solution and sym.qybe


def naive_cocommutative(p):
    n = p.n

    def s(x, y):
        return p.dot(x, y), p.star(x, y)

    for x, y, z in itertools.product(range(n), repeat=3):
        # s23 then s13 versus s13 then s23 (applied left to right)
        a, b, c = x, y, z
        b, c = s(b, c)
        a, c = s(a, c)
        left = (a, b, c)
        a, b, c = x, y, z
        a, c = s(a, c)
        b, c = s(b, c)
        if left != (a, b, c):
            return False
    return True


@pytest.mark.parametrize("c", [0, 1, 2])
def test_zero_star_cocommutativity_matches_scan(c):
    dot = semilattice_chain(3)  # every element idempotent, so c.c = c
    p = make_apa(dot, zero_semigroup(3, c))
    assert p.valid
    assert bool(solution_symmetries(p).cocommutative_solution) == naive_cocommutative(p)


def test_bijective_solution():
    p = make_apa(left_zero(2), cyclic_group(2))
    assert solution_is_bijective(p)
    assert not solution_is_bijective(make_apa(left_zero(2), right_zero(2).__class__([[0, 0], [0, 0]])))


# --- translations and classification ------------------------------------

def test_ex_left_translations():
    p = ex_left()
    tf = translations(p)
    assert p.theta(0) == p.theta(2)
    assert len(tf) == 2
    assert tf.profile.commutative and tf.profile.in_end_dot


def test_right_zero_translations():
    tf = translations(make_apa(cyclic_group(3), right_zero(3)))
    assert tf.closure == ((0, 1, 2),)
    assert tf.profile.contains_identity and tf.profile.right_zero


def test_translations_need_associative_star():
    p = make_apa(left_zero(3), CayleyTable.from_function(3, lambda x, y: (y - x) % 3))
    with pytest.raises(NotAssociative):
        translations(p)


def test_ex_left_classification():
    c = classify(ex_left())
    assert c.is_ltd and not c.is_rtd
    assert c.star_varieties["right-normal"] and c.star_varieties["P_2"] and c.star_varieties["V_P2"]


def test_sec7_is_neither():
    c = classify(build_sec7_counterexample())
    assert not c.is_ltd and not c.is_rtd
    assert c.cell == "neither"


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6])
def test_prop_both(n):
    p = prop_both(n)
    c = classify(p)
    assert c.is_ltd and c.is_rtd and c.determined_by is not None
    assert derived_relations(p)["false_distri"]


def test_gamma_apa_requires_idempotent_endomorphism():
    from pentalg.errors import GammaNotIdempotentEndomorphism
    dot = semilattice_chain(3)
    assert gamma_apa(dot, [0, 0, 2]).valid
    with pytest.raises(GammaNotIdempotentEndomorphism):
        gamma_apa(dot, [1, 2, 2])  # not idempotent


def test_gamma_brute_force_characterisation():
    # A star determined by gamma gives an APA exactly when gamma is an idempotent endomorphism.
    dot = semilattice_chain(3)
    D = dot.table
    for gamma in itertools.product(range(3), repeat=3):
        g = np.array(gamma)
        endo = bool((g[D] == D[g[:, None], g[None, :]]).all())
        idem = bool((g[g] == g).all())
        star = CayleyTable([list(gamma)] * 3)
        assert make_apa(dot, star).valid == (endo and idem)


# --- derived relations ---------------------------------------------------

def test_sec7_derived_flags():
    rep = derived_relations(build_sec7_counterexample())
    assert rep["rel"] and rep["rel_4"]
    assert rep["theta_x=theta_xyx"]
    assert not rep["theta_x^2=theta_y^2"]
    assert not rep["theta_xx=theta_yx"]


def test_derived_relations_flag_bugs():
    # A forged status claiming validity must trip the hard relations.
    from pentalg.core import OK
    from pentalg.pentagon import ApaStatus, PentagonAlgebra
    dot = left_zero(3)
    star = CayleyTable([[1, 1, 1], [2, 2, 2], [0, 0, 0]])
    forged = PentagonAlgebra(dot, star, ApaStatus(OK, OK, OK, OK))
    with pytest.raises(InternalInconsistency):
        derived_relations(forged)


def test_lm_eq_examples():
    assert lm_eq_equivalence(make_apa(cyclic_group(2), right_zero(2)))
    p = make_apa(semilattice_chain(3), zero_semigroup(3, 0))
    assert p.valid and lm_eq_equivalence(p)


# --- theorem crosscheck --------------------------------------------------

@pytest.mark.parametrize("build", [lambda: ex_left(False), lambda: ex_left(True), lambda: prop_both(5),
                                   lambda: left_triv(3), build_sec7_counterexample])
def test_examples_have_no_violations(build):
    assert theorem_crosscheck(build()) == []


def test_monoid_dot_rows_equal():
    # Z_3 is a monoid: every compatible star has all rows equal.
    from pentalg.census import enumerate_stars
    for p in enumerate_stars(cyclic_group(3)):
        assert classify(p).determined_by is not None


def test_crosscheck_detects_forged_algebra():
    from pentalg.core import OK
    from pentalg.pentagon import ApaStatus, PentagonAlgebra
    # Right-zero dot has left identities, so RTD is forced; this star is not RTD.
    dot = right_zero(2)
    star = CayleyTable([[0, 1], [1, 0]])
    forged = PentagonAlgebra(dot, star, ApaStatus(OK, OK, OK, OK))
    assert theorem_crosscheck(forged) != []
