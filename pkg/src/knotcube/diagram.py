"""Braid words, their decorated closures, and Seifert-circle data.

Conventions
-----------
Letters are read in order; strand positions are numbered ``1..b`` from the
left and closure arcs are routed to the right, nested so that the leftmost
strand's arc is outermost.  Edges are numbered as follows: first the ``b``
edges that pass through the closure arcs, left to right (so ``e0`` is on the
leftmost strand, and is the marked edge), then the new outgoing edges of each
crossing in order, left before right.

At a crossing between positions ``p`` and ``p+1`` the four slots are::

    k = incoming left     l = incoming right
    i = outgoing left     j = outgoing right

so ``(j, k)`` and ``(i, l)`` are the two strands through the crossing.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} out of range for {self.strands} strands")

    def __str__(self):
        return " ".join(str(x) for x in self.letters)


def parse_braid(text: str, strands: Optional[int] = None) -> BraidWord:
    """Parse whitespace (or comma) separated signed generator indices.

    >>> parse_braid("1 -2")
    BraidWord(strands=3, letters=(1, -2))
    """
    tokens = text.replace(",", " ").split()
    letters = []
    for tok in tokens:
        try:
            x = int(tok)
        except ValueError:
            raise BraidParseError(f"not an integer: {tok!r}") from None
        if x == 0:
            raise BraidParseError("generator index 0 is not allowed")
        letters.append(x)
    natural = 1 + max((abs(x) for x in letters), default=0)
    if strands is None:
        strands = natural
    elif strands < natural:
        raise BraidParseError(f"{strands} strands is too few for this word")
    return BraidWord(strands, tuple(letters))


@dataclass(frozen=True)
class Crossing:
    index: int
    position: int  # left position, 1-based
    sign: int
    i: int
    j: int
    k: int
    l: int

    @property
    def incoming(self) -> Tuple[int, int]:
        return (self.k, self.l)

    @property
    def outgoing(self) -> Tuple[int, int]:
        return (self.i, self.j)

    @property
    def slots(self) -> Tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)


@dataclass(frozen=True)
class Diagram:
    """Decorated closure of a braid word."""

    word: BraidWord
    n_edges: int
    crossings: Tuple[Crossing, ...]
    edge_position: Tuple[int, ...]
    top_edges: Tuple[int, ...]
    marked_edge: int = 0
    # head/tail crossing per edge; None for a strand with no crossings
    edge_head: Tuple[Optional[int], ...] = field(default=(), repr=False)
    edge_tail: Tuple[Optional[int], ...] = field(default=(), repr=False)

    @property
    def strands(self) -> int:
        return self.word.strands

    @property
    def edges(self) -> range:
        return range(self.n_edges)

    @property
    def closure_arcs(self) -> Dict[int, int]:
        """Top position -> bottom position (the identity for a closure)."""
        return {p: p for p in range(1, self.strands + 1)}

    def to_json(self) -> dict:
        return {
            "edges": list(self.edges),
            "crossings": [{"sign": c.sign, "i": c.i, "j": c.j, "k": c.k, "l": c.l}
                          for c in self.crossings],
            "marked_edge": self.marked_edge,
            "braid": {"strands": self.strands, "letters": list(self.word.letters)},
        }

    def json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "Diagram":
        if isinstance(data, str):
            data = json.loads(data)
        b = data["braid"]
        return close_braid(BraidWord(b["strands"], tuple(b["letters"])))


def close_braid(w: BraidWord) -> Diagram:
    b = w.strands
    last_touch: Dict[int, int] = {}
    for t, x in enumerate(w.letters):
        p = abs(x)
        last_touch[p] = t
        last_touch[p + 1] = t
    top = list(range(b))
    position = [p for p in range(1, b + 1)]
    head: List[Optional[int]] = [None] * b
    tail: List[Optional[int]] = [None] * b
    current = {p: top[p - 1] for p in range(1, b + 1)}
    crossings = []
    n = b
    for t, x in enumerate(w.letters):
        p = abs(x)
        k, l = current[p], current[p + 1]
        head[k] = t
        head[l] = t
        outs = []
        for pos in (p, p + 1):
            if last_touch[pos] == t:
                e = top[pos - 1]
            else:
                e = n
                n += 1
                position.append(pos)
                head.append(None)
                tail.append(None)
            tail[e] = t
            outs.append(e)
        i, j = outs
        crossings.append(Crossing(t, p, 1 if x > 0 else -1, i, j, k, l))
        current[p], current[p + 1] = i, j
    return Diagram(w, n, tuple(crossings), tuple(position), tuple(top), 0,
                   tuple(head), tuple(tail))


def writhe(D: Diagram) -> int:
    return sum(c.sign for c in D.crossings)


def mirror(D: Diagram) -> Diagram:
    w = BraidWord(D.strands, tuple(-x for x in D.word.letters))
    return close_braid(w)


# ---------------------------------------------------------------------------
# edge-level traversal

def successor_map(D: Diagram, edges: Optional[Iterable[int]] = None,
                  smooth: bool = True) -> Dict[int, int]:
    """Next edge along the sub-diagram spanned by ``edges``.

    Crossings with all four slots in ``edges`` are kept: with ``smooth`` they
    get the oriented smoothing (Seifert circles), otherwise strands pass
    straight through (link components).  Every other crossing contributes
    one edge in and one edge out of the set, which are joined.
    """
    E = set(D.edges if edges is None else edges)
    nxt: Dict[int, int] = {}
    for c in D.crossings:
        ins = [e for e in c.incoming if e in E]
        outs = [e for e in c.outgoing if e in E]
        if len(ins) != len(outs):
            raise ValueError(f"edge set is not balanced at crossing {c.index}")
        if len(ins) == 2:
            if smooth:
                nxt[c.k], nxt[c.l] = c.i, c.j
            else:
                nxt[c.k], nxt[c.l] = c.j, c.i
        elif len(ins) == 1:
            nxt[ins[0]] = outs[0]
    for e in E:
        if D.edge_head[e] is None:
            nxt[e] = e
    return nxt


def cycles_of(nxt: Dict[int, int]) -> List[Tuple[int, ...]]:
    seen = set()
    out = []
    for start in sorted(nxt):
        if start in seen:
            continue
        cyc = []
        e = start
        while e not in seen:
            seen.add(e)
            cyc.append(e)
            e = nxt[e]
        out.append(tuple(cyc))
    return out


def link_components(D: Diagram, edges: Optional[Iterable[int]] = None) -> List[Tuple[int, ...]]:
    return cycles_of(successor_map(D, edges, smooth=False))


# ---------------------------------------------------------------------------
# planar embedding and Seifert data

def _entry(D: Diagram, e: int) -> Tuple[float, float]:
    t = D.edge_head[e]
    return (float(D.edge_position[e]), t + 1 - 0.3)


def _exit(D: Diagram, e: int) -> Tuple[float, float]:
    t = D.edge_tail[e]
    return (float(D.edge_position[e]), t + 1 + 0.3)


def _edge_path(D: Diagram, e: int) -> List[Tuple[float, float]]:
    """Polyline of edge ``e`` from its tail to its head.

    Crossing ``t`` sits at height ``t + 1``; heights grow along the braid.
    In this embedding every closure circle runs clockwise.
    """
    b = D.strands
    n = len(D.crossings)
    p = D.edge_position[e]
    if e not in D.top_edges:
        return [_exit(D, e), _entry(D, e)]
    d = b - p + 1
    arc = [(float(p), n + 1.0 + d), (float(b + d), n + 1.0 + d),
           (float(b + d), -float(d)), (float(p), -float(d))]
    if D.edge_head[e] is None:
        return arc
    return [_exit(D, e)] + arc + [_entry(D, e)]


def marked_point(D: Diagram) -> Tuple[float, float]:
    """A point on the marked edge, on the outer face of the embedding."""
    b = D.strands
    d = b  # leftmost strand
    return ((1.0 + b + d) / 2.0, -float(d))


def _polygon(D: Diagram, cycle: Sequence[int]) -> List[Tuple[float, float]]:
    pts: List[Tuple[float, float]] = []
    for e in cycle:
        pts.extend(_edge_path(D, e))
    return pts


def _signed_area(pts: Sequence[Tuple[float, float]]) -> float:
    s = 0.0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        s += x1 * y2 - x2 * y1
    return s / 2.0


def _inside(pt: Tuple[float, float], pts: Sequence[Tuple[float, float]]) -> bool:
    x, y = pt
    inside = False
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside


@dataclass(frozen=True)
class SeifertData:
    circles: Tuple[Tuple[int, ...], ...]
    orientation: Tuple[int, ...]  # +1 counterclockwise, -1 clockwise
    contains_marked: Tuple[bool, ...]
    special_circle: Optional[int]
    signs: Tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.circles)


def seifert_circles(D: Diagram, edges: Optional[Iterable[int]] = None) -> SeifertData:
    """Seifert circles of ``D`` (or of the sub-diagram on ``edges``).

    Signs use the marked-edge rule: a circle is read as the boundary of the
    disc avoiding the marked edge; counterclockwise counts +1, clockwise -1,
    and the circle through the marked edge counts 0.
    """
    circles = cycles_of(successor_map(D, edges, smooth=True))
    mp = marked_point(D)
    orient, contains, signs = [], [], []
    special = None
    for idx, cyc in enumerate(circles):
        pts = _polygon(D, cyc)
        area = _signed_area(pts)
        o = 1 if area > 0 else -1
        orient.append(o)
        if D.marked_edge in cyc:
            special = idx
            contains.append(False)
            signs.append(0)
            continue
        inside = _inside(mp, pts)
        contains.append(inside)
        signs.append(-o if inside else o)
    return SeifertData(tuple(circles), tuple(orient), tuple(contains), special, tuple(signs))


def rotation_number(D: Diagram, edges: Optional[Iterable[int]] = None) -> int:
    """Unmarked rotation number: counterclockwise circles minus clockwise ones."""
    if edges is None:
        return -D.strands
    return sum(seifert_circles(D, edges).orientation)


def marked_rotation_number(D: Diagram, S: Optional[SeifertData] = None) -> int:
    if S is None:
        S = seifert_circles(D)
    return sum(S.signs)


# ---------------------------------------------------------------------------
# corpus

def canonical_rotation(letters: Sequence[int]) -> Tuple[int, ...]:
    if not letters:
        return ()
    n = len(letters)
    return min(tuple(letters[i:]) + tuple(letters[:i]) for i in range(n))


def braid_corpus(max_length: int, max_strands: int = 3, unique_rotations: bool = True
                 ) -> List[BraidWord]:
    """All braid words up to ``max_length`` letters on at most ``max_strands``.

    Each word is used on its natural strand count.  With ``unique_rotations``
    only one representative per cyclic rotation class is kept.
    """
    gens = [s * g for g in range(1, max_strands) for s in (1, -1)]
    seen = set()
    out = [BraidWord(1, ())]
    for length in range(1, max_length + 1):
        for letters in itertools.product(gens, repeat=length):
            key = canonical_rotation(letters) if unique_rotations else letters
            if key in seen:
                continue
            seen.add(key)
            strands = 1 + max(abs(x) for x in key)
            out.append(BraidWord(strands, key))
    return out
