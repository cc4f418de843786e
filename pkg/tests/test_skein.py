from hypothesis import given, settings, strategies as st

from knotcube.diagram import BraidWord, link_components, mirror
from knotcube.laurent import LaurentFraction, LaurentPoly, one, q_minus_qinv
from knotcube.skein import HomflyEvaluator, first_bad_crossing, mirror_poly, specialize
from conftest import closure

A = LaurentPoly.var("a")
AINV = LaurentPoly.monomial(1, a=-1)
Z = q_minus_qinv()



def test_known_values(ev):
    assert ev.homfly(closure("")) == LaurentFraction(one())
    tref = LaurentPoly.monomial(1, a=-2, q=2) + LaurentPoly.monomial(1, a=-2, q=-2) - LaurentPoly.monomial(1, a=-4)
    assert ev.homfly(closure("1 1 1")) == LaurentFraction(tref)
    fig8 = (LaurentPoly.monomial(1, a=2) - LaurentPoly.monomial(1, q=2) + one()
            - LaurentPoly.monomial(1, q=-2) + LaurentPoly.monomial(1, a=-2))
    assert ev.homfly(closure("1 -2 1 -2")) == LaurentFraction(fig8)


def test_hopf_link(ev):
    num = (LaurentPoly.monomial(1, a=-1, q=2) - AINV + LaurentPoly.monomial(1, a=-1, q=-2)
           - LaurentPoly.monomial(1, a=-3))
    assert ev.homfly(closure("1 1")) == LaurentFraction(num, Z)


def test_unlink(ev):
    assert ev.homfly(closure("", 2)) == LaurentFraction(A - AINV, Z)


def test_mirror(ev, corpus4):
    for D in corpus4:
        assert ev.homfly(mirror(D)) == mirror_poly(ev.homfly(D))


def test_specialisations(ev, corpus4):
    for D in corpus4:
        P = ev.homfly(D)
        assert specialize(P, 1) == LaurentFraction(one())
        n = len(link_components(D))
        assert specialize(P, -1) == LaurentFraction(LaurentPoly.constant((-1) ** (n + 1)))


def test_descending_diagram_has_no_bad_crossing():
    # second pass along the strand meets crossing 1 from below
    assert first_bad_crossing(2, (1, 1, 1)) == 1
    assert first_bad_crossing(3, (1, 2)) is None


def test_homfly_prime_empty_and_unknot(ev):
    assert ev.homfly_prime(None) == LaurentFraction(one())
    # delta * a^w * P on the one-strand unknot is delta
    assert ev.homfly_prime(closure("")) == LaurentFraction(A - AINV, Z)


def test_cache_keyed_by_rotation(ev):
    assert ev.homfly(closure("1 -2 1 -2")) == ev.homfly(closure("-2 1 -2 1"))


def skein_holds(ev, w: BraidWord, t: int) -> bool:
    x = w.letters[t]
    if x < 0:
        x = -x
    plus = BraidWord(w.strands, w.letters[:t] + (x,) + w.letters[t + 1:])
    minus = BraidWord(w.strands, w.letters[:t] + (-x,) + w.letters[t + 1:])
    zero = BraidWord(w.strands, w.letters[:t] + w.letters[t + 1:])
    lhs = LaurentFraction(A) * ev.homfly(plus) - LaurentFraction(AINV) * ev.homfly(minus)
    return lhs == LaurentFraction(Z) * ev.homfly(zero)


words = st.integers(2, 4).flatmap(
    lambda b: st.lists(st.integers(1, b - 1).flatmap(lambda g: st.sampled_from((g, -g))),
                       min_size=1, max_size=7).map(lambda L: BraidWord(b, tuple(L))))


_EV = HomflyEvaluator()


@given(words, st.integers(0, 100))
@settings(max_examples=200, deadline=None)
def test_skein_relation_random(w, r):
    assert skein_holds(_EV, w, r % len(w.letters))
