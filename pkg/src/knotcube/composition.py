"""Composition-product expansions of HOMFLY-PT over two-labelings.

Three sums are provided, each checked against the skein evaluator:

* the marked (destabilised) product, summing to ``P(aq, q, D)``;
* the unmarked two-label product, summing to ``P'(a1 a2, q, D)``;
* its ``a = q^-1`` specialisation, summing to the Alexander-Conway value ``P(1, q, D)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional

from .diagram import Diagram, link_components, marked_rotation_number, rotation_number, seifert_circles
from .labelings import (enumerate_cycles, label_edges, s_value, subdiagram, turn_stats)
from .laurent import LaurentFraction, LaurentPoly, fsum, one, q_minus_qinv
from .skein import HomflyEvaluator, rename_a, shift_a_by_q, specialize

_Z = q_minus_qinv("q")

# Whether each labelled term carries (-1)^{T_-}.  Over Z only the signed form
# reproduces the skein values; the unsigned form agrees modulo 2.
SIGNED_DEFAULT = True


def marked_r(D: Diagram, edges) -> int:
    """Marked rotation number of the sub-diagram on ``edges`` (0 if empty)."""
    edges = frozenset(edges)
    if not edges:
        return 0
    return marked_rotation_number(D, seifert_circles(D, edges))


def unmarked_r(D: Diagram, edges) -> int:
    edges = frozenset(edges)
    if not edges:
        return 0
    return rotation_number(D, edges)


@dataclass(frozen=True)
class CompositionTerm:
    labeling: FrozenSet[int]
    sign: int
    T: int
    q_exp: int
    a_exp: int
    left_factor: LaurentFraction
    right_factor: LaurentFraction

    @property
    def prefactor(self) -> LaurentPoly:
        return self.sign * _Z ** self.T * LaurentPoly.monomial(1, a=self.a_exp, q=self.q_exp)

    @property
    def value(self) -> LaurentFraction:
        return (LaurentFraction(self.prefactor) * self.left_factor * self.right_factor).reduced()


def term_for_labeling(D: Diagram, Z, evaluator: Optional[HomflyEvaluator] = None,
                      signed: bool = SIGNED_DEFAULT) -> CompositionTerm:
    ev = evaluator or HomflyEvaluator()
    Z = frozenset(Z)
    ts = turn_stats(D, Z)
    r1 = marked_r(D, label_edges(D, Z, 1))
    r2 = marked_r(D, label_edges(D, Z, 2))
    s1, s2 = s_value(D, Z, 1), s_value(D, Z, 2)
    # P at a = q is identically 1, so the left factor is 1 whether or not D_{f,1} is empty
    left = LaurentFraction(one())
    right = ev.homfly(subdiagram(D, Z, 2))
    sign = (-1) ** ts.T_minus if signed else 1
    return CompositionTerm(Z, sign, ts.T, r2 - s2, -r1 - s1, left, right)


def composition_terms(D: Diagram, evaluator=None, signed: bool = SIGNED_DEFAULT) -> List[CompositionTerm]:
    ev = evaluator or HomflyEvaluator()
    return [term_for_labeling(D, Z, ev, signed) for Z in enumerate_cycles(D)]


def composition_destabilized(D: Diagram, evaluator=None, signed: bool = SIGNED_DEFAULT) -> LaurentFraction:
    return fsum(t.value for t in composition_terms(D, evaluator, signed))


def destabilized_target(D: Diagram, evaluator=None) -> LaurentFraction:
    ev = evaluator or HomflyEvaluator()
    return shift_a_by_q(ev.homfly(D)).reduced()


# ---------------------------------------------------------------------------

# Orientation convention for the unmarked product.  +1 counts each braid
# circle as +1, which reproduces the unknot expansion term by term; on braid
# closures -1 gives the same total.
JAEGER_ROTATION_SIGN = 1


def _prime(ev: HomflyEvaluator, word, var: str) -> LaurentFraction:
    if word is None:
        return LaurentFraction(one())
    return rename_a(ev.homfly_prime(word), var)


def jaeger_terms(D: Diagram, evaluator=None, rotation_sign: int = JAEGER_ROTATION_SIGN,
                 signed: bool = SIGNED_DEFAULT):
    ev = evaluator or HomflyEvaluator()
    out = []
    for Z in enumerate_cycles(D, admissible_only=True, avoid_marked=False):
        ts = turn_stats(D, Z)
        r1 = -rotation_sign * unmarked_r(D, label_edges(D, Z, 1))
        r2 = -rotation_sign * unmarked_r(D, label_edges(D, Z, 2))
        sign = (-1) ** ts.T_minus if signed else 1
        mono = LaurentPoly.monomial(sign, a1=r2, a2=-r1)
        val = (LaurentFraction(_Z ** ts.T * mono)
               * _prime(ev, subdiagram(D, Z, 1), "a1")
               * _prime(ev, subdiagram(D, Z, 2), "a2"))
        out.append((Z, val))
    return out


def composition_jaeger(D: Diagram, evaluator=None, rotation_sign: int = JAEGER_ROTATION_SIGN,
                       signed: bool = SIGNED_DEFAULT) -> LaurentFraction:
    return fsum(v for _, v in jaeger_terms(D, evaluator, rotation_sign, signed))


def jaeger_target(D: Diagram, evaluator=None) -> LaurentFraction:
    ev = evaluator or HomflyEvaluator()
    return ev.homfly_prime(D).substitute({"a": {"a1": 1, "a2": 1}}).reduced()


# ---------------------------------------------------------------------------

def p_minus_one(D: Diagram, edges) -> int:
    """HOMFLY-PT at ``a = q^-1``: ``(-1)^(components + 1)``."""
    return (-1) ** (len(link_components(D, edges)) + 1)


def alexander_terms(D: Diagram, signed: bool = True):
    rD = marked_rotation_number(D)
    out = []
    for Z in enumerate_cycles(D):
        ts = turn_stats(D, Z)
        s1, s2 = s_value(D, Z, 1), s_value(D, Z, 2)
        sign = (-1) ** ts.T_minus if signed else 1
        sign *= p_minus_one(D, label_edges(D, Z, 2))
        out.append((Z, sign * _Z ** ts.T * LaurentPoly.monomial(1, q=rD + s1 - s2)))
    return out


def alexander_composition(D: Diagram, signed: bool = True) -> LaurentPoly:
    total = LaurentPoly.constant(0, ("q",))
    for _, v in alexander_terms(D, signed):
        total = total + v
    return total


def alexander_target(D: Diagram, evaluator=None) -> LaurentFraction:
    ev = evaluator or HomflyEvaluator()
    return specialize(ev.homfly(D), 0).reduced()
