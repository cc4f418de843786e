import pytest

from knotcube.gradings import (Bigrading, NotAdmissible, TripleGrading, bigrading_shift, decomposition,
                               disc_counts, euler_alexander_check, euler_homfly_check,
                               triple_from_bigrading, triple_shift)
from knotcube.labelings import enumerate_cycles, turn_stats
from knotcube.laurent import LaurentPoly
from conftest import closure


def test_trefoil_bigradings():
    D = closure("1 1 1")
    got = {tuple(sorted(Z)): bigrading_shift(D, Z) for Z in enumerate_cycles(D)}
    assert got == {(): Bigrading(-8, -4), (1, 2, 5): Bigrading(-1, -1), (1, 3, 4): Bigrading(-1, -1),
                   (1, 3, 5): Bigrading(-3, -1)}
    assert str(got[(1, 3, 5)]) == "{-3/2, -1/2}"


def test_trefoil_total_dimension():
    D = closure("1 1 1")
    assert sum(s.dimension for s in decomposition(D)) == 13


def test_closed_form_equals_pre_form(knots5):
    for D in knots5:
        for Z in enumerate_cycles(D):
            assert bigrading_shift(D, Z, "closed") == bigrading_shift(D, Z, "pre")


def test_triple_relations(knots5):
    for D in knots5:
        for Z in enumerate_cycles(D):
            b = bigrading_shift(D, Z)
            t = triple_shift(D, Z)
            assert triple_from_bigrading(b, t.v) == t


def test_rejects_non_admissible():
    D = closure("1 1 1")
    bad = [Z for Z in enumerate_cycles(D, admissible_only=False) if Z not in enumerate_cycles(D)]
    with pytest.raises(NotAdmissible):
        bigrading_shift(D, bad[0])
    with pytest.raises(NotAdmissible):
        triple_shift(D, {0})


def test_disc_counts_empty():
    assert disc_counts(closure("1 1 1"), ()) == (0, 0)


def test_dimension_is_two_to_the_T():
    D = closure("1 -2 1 -2")
    for s in decomposition(D):
        assert s.dimension == 2 ** turn_stats(D, s.labeling).T


def test_euler_alexander(ev, knots5):
    for D in knots5:
        assert euler_alexander_check(D, ev).passed
        assert euler_alexander_check(D, ev, form="pre").passed
    rep = euler_alexander_check(closure("1 1 1"), ev)
    assert rep.value == LaurentPoly.monomial(1, q=2) - LaurentPoly.constant(1) + LaurentPoly.monomial(1, q=-2)


def test_euler_alexander_blind_to_overall_sign(ev, knots5):
    # the two overall conventions differ by 2 r(D) in the Maslov grading
    for D in knots5[:40]:
        assert euler_alexander_check(D, ev, overall="minus_w_minus_r", form="pre").passed


def test_euler_homfly(ev, knots5):
    for D in knots5:
        assert euler_homfly_check(D, ev).passed


def test_literal_display_only_fits_unknot(ev):
    assert euler_homfly_check(closure(""), ev, "literal").passed
    assert not euler_homfly_check(closure("1 1 1"), ev, "literal").passed


def test_triple_decomposition_shape():
    D = closure("1 1 1")
    summands = decomposition(D, "triple_reduced")
    assert all(isinstance(g, TripleGrading) for s in summands for g in s.poincare)
    assert [s.dimension for s in summands] == [1, 2, 2, 8]


def test_minus_mode_tower():
    D = closure("1 1 1")
    empty = decomposition(D, "bigraded_minus", u_cutoff=2)[0]
    assert empty.dimension == 3
