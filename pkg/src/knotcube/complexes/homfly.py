"""HOMFLY-PT cube complexes of braid closures and their resolutions.

Gradings are ``(q, h, v)``; each edge variable ``X_e`` has grading ``(2, 0, 0)``.
``d+`` (part ``"h"``) has degree ``(2, 2, 0)`` and ``d_v`` (part ``"v"``)
degree ``(0, 0, 2)``.

Per crossing the complex is a square indexed by ``(h, v)``::

    positive                         negative
    (0,1){0,-2,0}  -> (1,1){0,0,0}   (0,1){0,-2,2} -> (1,1){-2,0,2}
        ^                ^               ^                ^
    (0,0){2,-2,-2} -> (1,0){0,0,-2}  (0,0){0,-2,0} -> (1,0){0,0,0}

with horizontal maps ``X_k + X_i`` (linear) and ``X_i X_j + X_k X_l``
(quadratic), and vertical maps ``X_j + X_k`` and ``1``.  The singular
resolution is the row carrying the quadratic map; the oriented smoothing is
the row carrying the linear one.
"""
from __future__ import annotations

import itertools
import warnings
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..diagram import Crossing, Diagram, link_components, writhe
from ..labelings import LocalType, _PATTERNS
from .free import FreeComplex, GradedDims, graded_homology, two_step_homology, unit_cancel
from .ring import PolyRingZ2, monomials, padd, pmul

XDEG = (2, 0, 0)
LAM = (1, 0, 0)
DEG_H = (2, 2, 0)
DEG_V = (0, 0, 2)

CROSSING, SINGULAR, SMOOTH = "crossing", "singular", "smooth"
STATES = (CROSSING, SINGULAR, SMOOTH)

_POS = {(0, 1): (0, -2, 0), (1, 1): (0, 0, 0), (0, 0): (2, -2, -2), (1, 0): (0, 0, -2)}
_NEG = {(0, 1): (0, -2, 2), (1, 1): (-2, 0, 2), (0, 0): (0, -2, 0), (1, 0): (0, 0, 0)}
_REDUCE = {0: (2, 0, -2), 1: (0, 0, 0)}


def _x(e: int) -> str:
    return f"X{e}"


def _lin(R: PolyRingZ2, a: int, b: int):
    return padd(R.var(_x(a)), R.var(_x(b)))


def _quad(R: PolyRingZ2, c: Crossing):
    return padd(pmul(R.var(_x(c.i)), R.var(_x(c.j))), pmul(R.var(_x(c.k)), R.var(_x(c.l))))


class _Factor:
    def __init__(self):
        self.gens: List[Tuple[str, Tuple[int, int, int]]] = []
        self.arrows: List[Tuple[str, str, str, object]] = []


def _crossing_factor(R, c: Crossing, state: str) -> _Factor:
    f = _Factor()
    table = _POS if c.sign > 0 else _NEG
    lin, quad, one = _lin(R, c.k, c.i), _quad(R, c), R.one()
    if state == CROSSING:
        for hv, g in table.items():
            f.gens.append((f"{hv[0]}{hv[1]}", g))
        top, bottom = (lin, quad) if c.sign > 0 else (quad, lin)
        f.arrows += [("h", "01", "11", top), ("h", "00", "10", bottom)]
        left, right = (_lin(R, c.j, c.k), one) if c.sign > 0 else (one, _lin(R, c.j, c.k))
        f.arrows += [("v", "00", "01", left), ("v", "10", "11", right)]
        return f
    # a single row of the square
    quad_row = 0 if c.sign > 0 else 1
    row = quad_row if state == SINGULAR else 1 - quad_row
    f.gens = [("0", table[(0, row)]), ("1", table[(1, row)])]
    f.arrows = [("h", "0", "1", quad if state == SINGULAR else lin)]
    return f


def _tensor(gens: Dict[str, tuple], arrows: List[tuple], f: _Factor):
    new_gens = {}
    for (a, ga), (b, gb) in itertools.product(gens.items(), f.gens):
        new_gens[a + b] = tuple(x + y for x, y in zip(ga, gb))
    new_arrows = []
    for part, s, t, p in arrows:
        for b, _ in f.gens:
            new_arrows.append((part, s + b, t + b, p))
    for part, s, t, p in f.arrows:
        for a in gens:
            new_arrows.append((part, a + s, a + t, p))
    return new_gens, new_arrows


def resolution_ring(D: Diagram, states: Sequence[str], deleted: FrozenSet[int] = frozenset()):
    """Ring on the surviving edges with the vertex relations.

    Returns the ring together with the crossings that still carry a factor.
    A vertex touched by ``deleted`` becomes bivalent: its surviving edges are
    identified and no factor remains.
    """
    names = [_x(e) for e in D.edges if e not in deleted]
    relations, live = [], []
    for c, st in zip(D.crossings, states):
        key = tuple(e in deleted for e in (c.i, c.j, c.k, c.l))
        local = _PATTERNS.get(key)
        if local is None:
            raise ValueError(f"deleted edges do not form a cycle at crossing {c.index}")
        if local == LocalType.Z0:
            # at a smoothing the factor X_k + X_i together with this relation
            # identifies both strands
            relations.append([_x(c.i), _x(c.j), _x(c.k), _x(c.l)])
            live.append(c)
            continue
        if st == CROSSING:
            raise ValueError("edges can only be deleted from resolved crossings")
        if st == SINGULAR and local == LocalType.Z5:
            raise ValueError("no Z5 local cycle at a singular vertex")
        if st == SMOOTH and local in (LocalType.Z3, LocalType.Z4):
            raise ValueError("no diagonal local cycle at a smoothed vertex")
        rest = [_x(e) for e in (c.i, c.j, c.k, c.l) if e not in deleted]
        if rest:
            relations.append(rest)
    prefer = [_x(D.marked_edge)] if D.marked_edge not in deleted else []
    return PolyRingZ2(names, relations, prefer_free=prefer), live


def homfly_cube(D: Diagram, reduced_at: Iterable[int] = (), states: Optional[Sequence[str]] = None,
                deleted: Iterable[int] = ()) -> FreeComplex:
    """The (unshifted) HOMFLY-PT complex over ``Z2[X_e]/I``.

    ``states`` gives each crossing as a full square (default), a singular
    vertex or an oriented smoothing.  ``deleted`` removes a cycle of edges from
    a complete resolution.  Each edge in ``reduced_at`` adds a reducing factor
    ``R{2,0,-2} -X_e-> R{0,0,0}`` to ``d_v``.
    """
    states = list(states) if states is not None else [CROSSING] * len(D.crossings)
    if len(states) != len(D.crossings) or any(s not in STATES for s in states):
        raise ValueError("one state per crossing required")
    deleted = frozenset(deleted)
    reduced_at = list(reduced_at)
    if any(e in deleted for e in reduced_at):
        raise ValueError("cannot reduce at a deleted edge")
    if len(set(reduced_at)) != len(reduced_at):
        raise ValueError("each edge can be reduced at most once")
    R, live = resolution_ring(D, states, deleted)
    st = {c.index: s for c, s in zip(D.crossings, states)}
    gens: Dict[str, tuple] = {"": (0, 0, 0)}
    arrows: List[tuple] = []
    for c in live:
        gens, arrows = _tensor(gens, arrows, _crossing_factor(R, c, st[c.index]))
    for e in reduced_at:
        f = _Factor()
        f.gens = [("0", _REDUCE[0]), ("1", _REDUCE[1])]
        f.arrows = [("v", "0", "1", R.var(_x(e)))]
        gens, arrows = _tensor(gens, arrows, f)
    C = FreeComplex.empty(R, XDEG, LAM, {"h": DEG_H, "v": DEG_V})
    for name, g in gens.items():
        C.add_gen(name or "1", g)
    for part, s, t, p in arrows:
        C.add_arrow(part, s or "1", t or "1", p)
    C.check_homogeneous()
    return C


def middle_shift(D: Diagram) -> Tuple[int, int, int]:
    w, b = writhe(D), D.strands
    return (-w + b - 1, w + b - 1, w - b + 1)


def reduction_edges(D: Diagram, k: int) -> List[int]:
    """``k`` edges, covering each component once before repeating a component."""
    comps = link_components(D)
    comps = sorted(comps, key=lambda c: (D.marked_edge not in c, min(c)))
    first = [D.marked_edge if D.marked_edge in c else min(c) for c in comps]
    rest = [e for e in D.edges if e not in first]
    chosen = (first + rest)[:k]
    if len(chosen) < k:
        raise ValueError(f"diagram has only {D.n_edges} edges")
    return chosen


def middle_homfly_homology(D: Diagram, k_reductions: int = 0, cutoff: int = 12,
                           edges: Optional[Sequence[int]] = None) -> GradedDims:
    """``H(H(C, d+), d_v*)`` reduced at ``k_reductions`` edges, with the middle shift."""
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    red = list(edges) if edges is not None else reduction_edges(D, k_reductions)
    C = homfly_cube(D, red)
    H = two_step_homology(C, "h", "v", cutoff).shifted(middle_shift(D))
    H.meta.update({"reduced_at": red, "grading": ("q", "h", "v")})
    if not H.dims:
        warnings.warn("no homology within the cutoff window", RuntimeWarning)
    return H


def homfly_euler(H: GradedDims):
    """``sum (-1)^((v-h)/2) q^gr_q a^gr_h dim`` over a triply graded result."""
    from ..laurent import LaurentPoly
    total = LaurentPoly.constant(0, ("a", "q"))
    for (q, h, v), d in H.dims.items():
        if (v - h) % 2:
            raise ValueError("odd v - h")
        total = total + LaurentPoly.monomial((-1) ** ((v - h) // 2) * d, a=h, q=q)
    return total


# ---------------------------------------------------------------------------
# sl(-1)

def _to_bigrading(w: int):
    def fn(g):
        q, h, v = g
        return ((h - v - 2 * q) // 2 + w, (h - q) // 2 + w)
    return fn


def sl_minus1_complex(D: Diagram) -> FreeComplex:
    C = homfly_cube(D)
    B = C.regrade(_to_bigrading(writhe(D)), (-2, -1), (0, -1), {"h": (-1, 0), "v": (-1, 0)})
    return B.total()


def sl_minus1_homology(D: Diagram, cutoff: int = 12) -> GradedDims:
    """Homology of ``(C, d+ + d_v)`` in ``(gr_M, gr_A)``; cutoff measured in ``-A`` from 0."""
    C = unit_cancel(sl_minus1_complex(D))
    H = graded_homology(C, "d", cutoff, base=0)
    H.meta["grading"] = ("M", "A")
    return H


def sl_minus1_expected(n_components: int, cutoff: int = 12) -> GradedDims:
    """``Z2[X_1..X_n] (x) V_-^(n-1)`` with ``X`` at ``{-2,-1}`` and ``V_- = {0,0} + {-1,-1}``."""
    from math import comb
    n = n_components
    dims: Dict[Tuple[int, int], int] = {}
    for j in range(n):
        for k in range(cutoff + 1):
            g = (-j - 2 * k, -j - k)
            if -g[1] > cutoff:
                break
            dims[g] = dims.get(g, 0) + comb(n - 1, j) * len(monomials(n, k))
    return GradedDims(dims, cutoff)


# ---------------------------------------------------------------------------
# complete resolutions

def resolution_cycles(D: Diagram, states: Sequence[str]) -> List[FrozenSet[int]]:
    """Cycles avoiding the marked edge, without Z5 at singular vertices or
    diagonals at smoothed ones."""
    from ..labelings import _is_cycle, classify_local
    edges = [e for e in D.edges if e != D.marked_edge]
    out = []
    for bits in itertools.product((False, True), repeat=len(edges)):
        Z = frozenset(e for e, b in zip(edges, bits) if b)
        if not _is_cycle(D, Z):
            continue
        ok = True
        for c, st in zip(D.crossings, states):
            t = classify_local(Z, c)
            if st == SINGULAR and t == LocalType.Z5:
                ok = False
            if st == SMOOTH and t in (LocalType.Z3, LocalType.Z4):
                ok = False
            if st == CROSSING:
                raise ValueError("resolution must resolve every crossing")
        if ok:
            out.append(Z)
    return sorted(out, key=lambda z: (len(z), sorted(z)))


def resolution_homology(D: Diagram, states: Sequence[str], cutoff: int = 12) -> Dict[FrozenSet[int], GradedDims]:
    """``H_H(S - Z)`` for every cycle ``Z`` of the complete resolution ``S``."""
    out = {}
    for Z in resolution_cycles(D, states):
        C = homfly_cube(D, states=states, deleted=Z)
        out[Z] = graded_homology(C, "h", cutoff)
    return out


def hilbert_by_q(H: GradedDims, relative: bool = True) -> Dict[int, int]:
    """Collapse to ``q``-degree (relative to the lowest nonzero one)."""
    acc: Dict[int, int] = {}
    for g, d in H.dims.items():
        acc[g[0]] = acc.get(g[0], 0) + d
    if relative and acc:
        base = min(acc)
        acc = {q - base: d for q, d in acc.items()}
    return dict(sorted(acc.items()))
