"""Cycles (two-labelings) of a decorated braid closure and their local data.

A cycle ``Z`` is a set of edges avoiding the marked edge such that every
crossing has as many incoming as outgoing edges in ``Z``.  It defines the
labeling ``f(e) = 1`` for ``e`` in ``Z`` and ``f(e) = 2`` otherwise.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .diagram import BraidWord, Crossing, Diagram, link_components


class LocalType(enum.IntEnum):
    Z0 = 0  # empty
    Z1 = 1  # right turn: l -> j
    Z2 = 2  # left turn: k -> i
    Z3 = 3  # diagonal k -> j
    Z4 = 4  # diagonal l -> i
    Z5 = 5  # all four edges


_PATTERNS = {
    (False, False, False, False): LocalType.Z0,
    (False, True, False, True): LocalType.Z1,
    (True, False, True, False): LocalType.Z2,
    (False, True, True, False): LocalType.Z3,
    (True, False, False, True): LocalType.Z4,
    (True, True, True, True): LocalType.Z5,
}


class CorruptCycle(ValueError):
    pass


def classify_local(Z: Iterable[int], c: Crossing) -> LocalType:
    Z = Z if isinstance(Z, (set, frozenset)) else set(Z)
    key = tuple(e in Z for e in (c.i, c.j, c.k, c.l))
    try:
        return _PATTERNS[key]
    except KeyError:
        raise CorruptCycle(f"edge set violates the flow condition at crossing {c.index}") from None


def is_admissible(D: Diagram, Z: Iterable[int]) -> bool:
    Z = frozenset(Z)
    for c in D.crossings:
        t = classify_local(Z, c)
        if (c.sign > 0 and t == LocalType.Z2) or (c.sign < 0 and t == LocalType.Z1):
            return False
    return True


def _is_cycle(D: Diagram, Z: FrozenSet[int]) -> bool:
    if D.marked_edge in Z:
        return False
    return all(sum(e in Z for e in c.incoming) == sum(e in Z for e in c.outgoing)
               for c in D.crossings)


def enumerate_cycles(D: Diagram, admissible_only: bool = True,
                     avoid_marked: bool = True) -> List[FrozenSet[int]]:
    """All cycles avoiding the marked edge, depth first over crossings.

    With ``avoid_marked=False`` cycles through the marked edge are included
    (the unmarked setting).

    The top (closure) edges are chosen first; each crossing then picks an
    outgoing subset of the same size as its incoming one, which must agree
    with any outgoing edge that is a top edge.
    """
    free_top = [e for e in D.top_edges if not (avoid_marked and e == D.marked_edge)]
    top_set = set(D.top_edges)
    out: List[FrozenSet[int]] = []
    crossings = D.crossings

    def rec(t: int, Z: set):
        if t == len(crossings):
            out.append(frozenset(Z))
            return
        c = crossings[t]
        n_in = (c.k in Z) + (c.l in Z)
        options = {0: [()], 1: [(c.i,), (c.j,)], 2: [(c.i, c.j)]}[n_in]
        for chosen in options:
            ok = True
            for e in (c.i, c.j):
                if e in top_set and ((e in chosen) != (e in Z)):
                    ok = False
            if not ok:
                continue
            if admissible_only:
                if n_in == 1:
                    turn_left = c.k in Z and c.i in chosen
                    turn_right = c.l in Z and c.j in chosen
                    if (c.sign > 0 and turn_left) or (c.sign < 0 and turn_right):
                        continue
            added = [e for e in chosen if e not in Z]
            Z.update(added)
            rec(t + 1, Z)
            Z.difference_update(added)

    for bits in itertools.product((False, True), repeat=len(free_top)):
        rec(0, {e for e, b in zip(free_top, bits) if b})
    return sorted(out, key=lambda z: (len(z), sorted(z)))


def enumerate_cycles_bruteforce(D: Diagram, admissible_only: bool = True) -> List[FrozenSet[int]]:
    """Exhaustive check of every edge subset; a test oracle."""
    edges = [e for e in D.edges if e != D.marked_edge]
    out = []
    for bits in itertools.product((False, True), repeat=len(edges)):
        Z = frozenset(e for e, b in zip(edges, bits) if b)
        if _is_cycle(D, Z) and (not admissible_only or is_admissible(D, Z)):
            out.append(Z)
    return sorted(out, key=lambda z: (len(z), sorted(z)))


@dataclass(frozen=True)
class TurnStats:
    T_plus: int = 0
    T_minus: int = 0
    D_plus: int = 0
    D_minus: int = 0
    X_plus: int = 0
    X_minus: int = 0

    @property
    def T(self) -> int:
        return self.T_plus + self.T_minus

    @property
    def D(self) -> int:
        return self.D_plus + self.D_minus

    @property
    def X(self) -> int:
        return self.X_plus + self.X_minus


def local_types(D: Diagram, Z: Iterable[int]) -> Tuple[LocalType, ...]:
    Z = frozenset(Z)
    return tuple(classify_local(Z, c) for c in D.crossings)


def turn_stats(D: Diagram, Z: Iterable[int]) -> TurnStats:
    counts = {"T": [0, 0], "D": [0, 0], "X": [0, 0]}
    for c, t in zip(D.crossings, local_types(D, Z)):
        side = 0 if c.sign > 0 else 1
        if t in (LocalType.Z1, LocalType.Z2):
            counts["T"][side] += 1
        elif t in (LocalType.Z3, LocalType.Z4):
            counts["D"][side] += 1
        elif t == LocalType.Z5:
            counts["X"][side] += 1
    return TurnStats(*counts["T"], *counts["D"], *counts["X"])


# ---------------------------------------------------------------------------
# subdiagrams

def label_edges(D: Diagram, Z: Iterable[int], i: int) -> FrozenSet[int]:
    Z = frozenset(Z)
    if i == 1:
        return Z
    if i == 2:
        return frozenset(D.edges) - Z
    raise ValueError("label must be 1 or 2")


def retained_crossings(D: Diagram, Z: Iterable[int], i: int) -> List[Crossing]:
    E = label_edges(D, Z, i)
    return [c for c in D.crossings if all(e in E for e in c.slots)]


def subdiagram(D: Diagram, Z: Iterable[int], i: int) -> Optional[BraidWord]:
    """The braid whose closure is ``D_{f,i}``; ``None`` when it is empty.

    Forgotten crossings are erased; a retained crossing becomes a generator
    indexed by how many label-``i`` strands lie at or left of its left strand.
    """
    E = label_edges(D, Z, i)
    current = {p: D.top_edges[p - 1] for p in range(1, D.strands + 1)}
    m = sum(1 for e in D.top_edges if e in E)
    letters = []
    for c in D.crossings:
        p = c.position
        if all(e in E for e in c.slots):
            rank = sum(1 for r in range(1, p + 1) if current[r] in E)
            letters.append(c.sign * rank)
        current[p], current[p + 1] = c.i, c.j
    if m == 0:
        return None
    return BraidWord(m, tuple(letters))


def strand_count(D: Diagram, Z: Iterable[int], i: int) -> int:
    E = label_edges(D, Z, i)
    return sum(1 for e in D.top_edges if e in E)


def s_value(D: Diagram, Z: Iterable[int], i: int) -> int:
    E = label_edges(D, Z, i)
    return sum(c.sign for c in D.crossings if any(e in E for e in c.slots))


def w_value(D: Diagram, Z: Iterable[int], i: int) -> int:
    return sum(c.sign for c in retained_crossings(D, Z, i))


def reducing_edges(D: Diagram, Z: Iterable[int]) -> List[int]:
    """Label-2 edges used to cancel turns: ``i(c)`` at positive right turns,
    ``l(c)`` at negative left turns."""
    Z = frozenset(Z)
    out = []
    for c in D.crossings:
        t = classify_local(Z, c)
        if c.sign > 0 and t == LocalType.Z1:
            out.append(c.i)
        elif c.sign < 0 and t == LocalType.Z2:
            out.append(c.l)
    return out


def components_label2(D: Diagram, Z: Iterable[int]) -> List[Tuple[int, ...]]:
    return link_components(D, label_edges(D, Z, 2))


def every_component_reduced(D: Diagram, Z: Iterable[int]) -> bool:
    """Each component of ``D_{f,2}`` carries a reducing edge.

    Guaranteed for knot diagrams and nonempty ``Z``; links can fail it.
    """
    red = set(reducing_edges(D, Z))
    return all(red.intersection(comp) for comp in components_label2(D, Z))
