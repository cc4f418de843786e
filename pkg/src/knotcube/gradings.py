"""Grading shifts of the labelled summands and their Euler characteristics.

Maslov/Alexander gradings are half-integers; they are stored doubled.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import FrozenSet, List, Optional, Tuple

from .composition import alexander_composition, marked_r
from .diagram import Diagram, close_braid, marked_rotation_number, mirror, seifert_circles, writhe
from .labelings import (enumerate_cycles, is_admissible, label_edges, s_value, subdiagram,
                        turn_stats, w_value)
from .laurent import LaurentFraction, LaurentPoly, fsum, q_minus_qinv
from .skein import HomflyEvaluator, mirror_poly, shift_a_by_q, specialize

_Z = q_minus_qinv("q")


class NotAdmissible(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Bigrading:
    M2: int  # twice the Maslov grading
    A2: int  # twice the Alexander grading

    @property
    def M(self) -> Fraction:
        return Fraction(self.M2, 2)

    @property
    def A(self) -> Fraction:
        return Fraction(self.A2, 2)

    def __add__(self, o: "Bigrading") -> "Bigrading":
        return Bigrading(self.M2 + o.M2, self.A2 + o.A2)

    def __str__(self):
        return f"{{{_half(self.M2)}, {_half(self.A2)}}}"


@dataclass(frozen=True, order=True)
class TripleGrading:
    q: int
    h: int
    v: int

    def __add__(self, o: "TripleGrading") -> "TripleGrading":
        return TripleGrading(self.q + o.q, self.h + o.h, self.v + o.v)

    def __str__(self):
        return f"{{{self.q}, {self.h}, {self.v}}}"


def _half(n2: int) -> str:
    return str(n2 // 2) if n2 % 2 == 0 else f"{n2}/2"


def triple_from_bigrading(b: Bigrading, v: int) -> TripleGrading:
    """``gr_q = 2A - 2M - v`` and ``gr_h = 4A - 2M - v``."""
    return TripleGrading(b.A2 - b.M2 - v, 2 * b.A2 - b.M2 - v, v)


# V = Z2{-1/2,-1/2} + Z2{1/2,1/2}
V_BASIS = (Bigrading(-1, -1), Bigrading(1, 1))


def _check(D: Diagram, Z) -> FrozenSet[int]:
    Z = frozenset(Z)
    if D.marked_edge in Z or not is_admissible(D, Z):
        raise NotAdmissible(f"labeling {sorted(Z)} is not admissible")
    return Z


def disc_counts(D: Diagram, Z) -> Tuple[int, int]:
    """``(k+, k-)``: circles of ``Z`` whose clockwise-bounded disc avoids /
    contains the marked edge."""
    Z = frozenset(Z)
    if not Z:
        return (0, 0)
    S = seifert_circles(D, Z)
    kp = km = 0
    for o, inside in zip(S.orientation, S.contains_marked):
        contains = inside if o < 0 else not inside
        if contains:
            km += 1
        else:
            kp += 1
    return kp, km


OVERALL_SHIFTS = ("minus_w_plus_r", "minus_w_minus_r")


def bigrading_shift(D: Diagram, Z, form: str = "closed", overall: str = "minus_w_plus_r") -> Bigrading:
    """Absolute (Maslov, Alexander) shift of the summand for cycle ``Z``.

    ``form="closed"`` uses ``{-w(D2) + r(D2) - (T+ - T-)/2, (w(D1) - w(D2) + r(D))/2}``.
    ``form="pre"`` builds the relative grading from turn, diagonal, smoothing
    and disc counts and then applies the overall shift named by ``overall``.
    """
    Z = _check(D, Z)
    ts = turn_stats(D, Z)
    rD = marked_rotation_number(D)
    if form == "closed":
        r2 = marked_r(D, label_edges(D, Z, 2))
        w1, w2 = w_value(D, Z, 1), w_value(D, Z, 2)
        return Bigrading(2 * (-w2 + r2) - (ts.T_plus - ts.T_minus), w1 - w2 + rD)
    if form != "pre":
        raise ValueError(f"unknown form {form!r}")
    kp, km = disc_counts(D, Z)
    M2 = 2 * (ts.D_plus - ts.D_minus + ts.X_plus - ts.X_minus + kp - km) + ts.T_plus - ts.T_minus
    A2 = ts.D_plus - ts.D_minus + ts.T_plus - ts.T_minus + 2 * (ts.X_plus - ts.X_minus)
    w = writhe(D)
    if overall == "minus_w_plus_r":
        M2 += 2 * (-w + rD)
    elif overall == "minus_w_minus_r":
        M2 += 2 * (-w - rD)
    else:
        raise ValueError(f"unknown overall shift {overall!r}")
    A2 += -(w - rD)
    return Bigrading(M2, A2)


def triple_shift(D: Diagram, Z, euler: bool = False) -> TripleGrading:
    """``(q(f), h(f), v(f))``; with ``euler`` the vertical shift drops by ``T(f)``."""
    Z = _check(D, Z)
    ts = turn_stats(D, Z)
    r1 = marked_r(D, label_edges(D, Z, 1))
    r2 = marked_r(D, label_edges(D, Z, 2))
    s1, s2 = s_value(D, Z, 1), s_value(D, Z, 2)
    v = writhe(D) + r1 - s2 - ts.D_plus + ts.D_minus
    if euler:
        v -= ts.T
    return TripleGrading(-r2 + s2, r1 + s1, v)


@dataclass
class Summand:
    labeling: FrozenSet[int]
    T: int
    shift: object
    poincare: Counter

    @property
    def dimension(self) -> int:
        return sum(self.poincare.values())


def _v_power(T: int, shift: Bigrading) -> Counter:
    out: Counter = Counter()
    for k in range(T + 1):
        g = Bigrading(shift.M2 + 2 * k - T, shift.A2 + 2 * k - T)
        out[g] += comb(T, k)
    return out


U_GRADING = Bigrading(-4, -2)  # U has (M, A) = (-2, -1)


def decomposition(D: Diagram, mode: str = "bigraded_reduced", u_cutoff: int = 3,
                  overall: str = "minus_w_plus_r", form: str = "closed") -> List[Summand]:
    """Summands of the labelled decomposition with their Poincaré data.

    ``bigraded_reduced``: ``V^{T}`` at the bigrading shift.
    ``bigraded_minus``: ``V^{T-1}`` for nonempty cycles; the empty cycle gives a
    ``Z2[U]`` tower, truncated after ``u_cutoff`` powers of ``U``.
    ``triple_reduced``: reducing complexes only, as ``(q, h, v)`` gradings of the
    ``2^T`` generators; the HOMFLY-PT factor enters the Euler characteristic.
    """
    out = []
    for Z in enumerate_cycles(D):
        ts = turn_stats(D, Z)
        if mode == "bigraded_reduced":
            sh = bigrading_shift(D, Z, form, overall)
            out.append(Summand(Z, ts.T, sh, _v_power(ts.T, sh)))
        elif mode == "bigraded_minus":
            sh = bigrading_shift(D, Z, form, overall)
            if Z:
                out.append(Summand(Z, ts.T, sh, _v_power(ts.T - 1, sh)))
            else:
                tower = Counter({Bigrading(sh.M2 + k * U_GRADING.M2, sh.A2 + k * U_GRADING.A2): 1
                                 for k in range(u_cutoff + 1)})
                out.append(Summand(Z, 0, sh, tower))
        elif mode == "triple_reduced":
            sh = triple_shift(D, Z)
            pc: Counter = Counter()
            for k in range(ts.T + 1):
                pc[TripleGrading(sh.q + ts.T - 2 * k, sh.h, sh.v - ts.T + 2 * k)] += comb(ts.T, k)
            out.append(Summand(Z, ts.T, sh, pc))
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return out


def bigraded_euler(summands: List[Summand]) -> LaurentPoly:
    """``sum (-1)^M q^{2A} dim`` over all generators."""
    total = LaurentPoly.constant(0, ("q",))
    for s in summands:
        for g, d in s.poincare.items():
            if g.M2 % 2:
                raise ValueError(f"half-integral Maslov grading {g}")
            total = total + LaurentPoly.monomial((-1) ** (g.M2 // 2) * d, q=g.A2)
    return total


@dataclass
class CheckReport:
    name: str
    value: object
    target: object
    passed: bool
    rows: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)


def euler_alexander_check(D: Diagram, evaluator: Optional[HomflyEvaluator] = None,
                          overall: str = "minus_w_plus_r", form: str = "closed") -> CheckReport:
    ev = evaluator or HomflyEvaluator()
    target = specialize(ev.homfly(D), 0).reduced()
    formula = alexander_composition(D)
    summands = decomposition(D, "bigraded_reduced", overall=overall, form=form)
    try:
        graded = bigraded_euler(summands)
    except ValueError:
        graded = None
    rows = [(sorted(s.labeling), s.T, str(s.shift), s.dimension) for s in summands]
    ok = formula == target and graded is not None and graded == target
    return CheckReport("alexander", formula, target, ok, rows, {"graded": graded})


EULER_VARIANTS = ("principled", "literal")


def euler_homfly_check(D: Diagram, evaluator: Optional[HomflyEvaluator] = None,
                       variant: str = "principled") -> CheckReport:
    """Triply graded Euler characteristic against ``P(aq, q, m(D))``.

    ``principled`` reads every exponent off :func:`triple_shift` in Euler mode,
    with sign ``(-1)^{(v-h)/2}``; ``literal`` evaluates the simplified display
    ``(-1)^{T+} z^T q^{r(D2)+s(D2)} a^{-r(D1)+s(D1)} P(a, q, m(D2))``.
    """
    ev = evaluator or HomflyEvaluator()
    target = shift_a_by_q(mirror_poly(ev.homfly(D))).reduced()
    # independent route: evaluate the mirrored braid directly
    target_direct = shift_a_by_q(ev.homfly(mirror(D))).reduced()
    terms, rows = [], []
    for Z in enumerate_cycles(D):
        ts = turn_stats(D, Z)
        D2 = subdiagram(D, Z, 2)
        right = ev.homfly(close_braid(type(D2)(D2.strands, tuple(-x for x in D2.letters))))
        if variant == "principled":
            sh = triple_shift(D, Z, euler=True)
            if (sh.v - sh.h) % 2:
                raise ValueError("odd vertical minus horizontal shift")
            sign = (-1) ** ((sh.v - sh.h) // 2)
            mono = LaurentPoly.monomial(sign, q=sh.q, a=sh.h)
        elif variant == "literal":
            r1 = marked_r(D, label_edges(D, Z, 1))
            r2 = marked_r(D, label_edges(D, Z, 2))
            s1, s2 = s_value(D, Z, 1), s_value(D, Z, 2)
            mono = LaurentPoly.monomial((-1) ** ts.T_plus, q=r2 + s2, a=-r1 + s1)
        else:
            raise ValueError(f"unknown variant {variant!r}")
        term = LaurentFraction(_Z ** ts.T * mono) * right
        terms.append(term)
        rows.append((sorted(Z), ts.T, str(mono)))
    value = fsum(terms)
    ok = value == target and target == target_direct
    return CheckReport("homfly", value, target, ok, rows)
