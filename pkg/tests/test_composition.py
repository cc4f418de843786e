from knotcube.composition import (alexander_composition, alexander_target, composition_destabilized,
                                  composition_jaeger, composition_terms, destabilized_target,
                                  jaeger_target, p_minus_one)
from knotcube.laurent import LaurentFraction, LaurentPoly, q_minus_qinv
from knotcube.skein import specialize
from conftest import closure

Z = q_minus_qinv()


def mono(c=1, **e):
    return LaurentPoly.monomial(c, **e)


def test_trefoil_table(ev):
    D = closure("1 1 1")
    terms = composition_terms(D, ev)
    assert [sorted(t.labeling) for t in terms] == [[], [1, 2, 5], [1, 3, 4], [1, 3, 5]]
    tref = mono(a=-2, q=2) + mono(a=-2, q=-2) - mono(a=-4)
    expected = [mono(q=-4) * tref, Z * mono(q=-3, a=-2), Z * mono(q=-3, a=-2), Z ** 3 * mono(q=-3, a=-2)]
    for t, e in zip(terms, expected):
        assert t.value == LaurentFraction(e)
    total = mono(a=-2) + mono(a=-2, q=-4) - mono(a=-4, q=-4)
    assert composition_destabilized(D, ev) == LaurentFraction(total)
    assert destabilized_target(D, ev) == LaurentFraction(total)


def test_destabilized_small_corpus(ev, corpus4):
    for D in corpus4:
        assert composition_destabilized(D, ev) == destabilized_target(D, ev)


def test_unsigned_variant_fails_somewhere(ev, corpus4):
    assert any(composition_destabilized(D, ev, signed=False) != destabilized_target(D, ev)
               for D in corpus4)


def test_jaeger_small_corpus(ev, corpus4):
    for D in corpus4:
        assert composition_jaeger(D, ev) == jaeger_target(D, ev)
        assert composition_jaeger(D, ev, rotation_sign=-1) == jaeger_target(D, ev)


def test_jaeger_unknot_term_by_term(ev):
    from knotcube.composition import jaeger_terms
    D = closure("")
    terms = jaeger_terms(D, ev)
    assert [sorted(Zs) for Zs, _ in terms] == [[], [0]]


def test_alexander(ev, corpus4):
    for D in corpus4:
        assert LaurentFraction(alexander_composition(D)) == alexander_target(D, ev)
    assert alexander_composition(closure("1 1 1")) == mono(q=2) - mono() + mono(q=-2)


def test_p_minus_one(ev, corpus4):
    D = closure("1 1")
    assert p_minus_one(D, D.edges) == -1
    assert p_minus_one(closure("1 1 1"), range(6)) == 1
    for D in corpus4:
        assert LaurentFraction(LaurentPoly.constant(p_minus_one(D, D.edges))) == specialize(ev.homfly(D), -1)
