"""Graded free complexes over ``Z2[x_1..x_n]`` and their homology.

Every variable carries the same grading vector ``xdeg``.  A complex has one or
more named differential parts, each homogeneous of a fixed degree.  Homology
is computed piece by piece: the piece of grading ``g`` is the Z2-span of
``m * gen`` with ``grading(gen) + deg(m) * xdeg == g``, and pieces are kept
while their internal degree (``lam . g``) lies within ``cutoff`` of ``base``
(by default the lowest generator).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .ring import ZERO, Poly, PolyRingZ2, is_unit, monomials, padd, pdeg, pmul, rank_f2

Grading = Tuple[int, ...]


def _vadd(a, b, k=1):
    return tuple(x + k * y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class GradingError(ValueError):
    pass


@dataclass
class FreeComplex:
    ring: PolyRingZ2
    gens: List[str]
    grading: Dict[str, Grading]
    xdeg: Grading
    lam: Grading
    parts: Dict[str, Dict[Tuple[str, str], Poly]]
    degrees: Dict[str, Grading]

    # -- construction -------------------------------------------------
    @classmethod
    def empty(cls, ring, xdeg, lam, degrees: Mapping[str, Grading]) -> "FreeComplex":
        if _dot(lam, xdeg) <= 0:
            raise GradingError("variables must raise the internal degree")
        return cls(ring, [], {}, tuple(xdeg), tuple(lam), {p: {} for p in degrees},
                   {p: tuple(d) for p, d in degrees.items()})

    def add_gen(self, name: str, grading: Grading):
        if name in self.grading:
            raise ValueError(f"duplicate generator {name!r}")
        self.gens.append(name)
        self.grading[name] = tuple(grading)

    def set_arrow(self, part: str, src: str, dst: str, p: Poly):
        key = (src, dst)
        if p:
            self.parts[part][key] = p
        else:
            self.parts[part].pop(key, None)

    def add_arrow(self, part: str, src: str, dst: str, p: Poly):
        self.set_arrow(part, src, dst, padd(self.parts[part].get((src, dst), ZERO), p))

    def copy(self) -> "FreeComplex":
        return FreeComplex(self.ring, list(self.gens), dict(self.grading), self.xdeg, self.lam,
                           {k: dict(v) for k, v in self.parts.items()}, dict(self.degrees))

    def total(self) -> "FreeComplex":
        """Single-part complex ``d = sum of parts`` (parts must share a degree)."""
        degs = set(self.degrees.values())
        if len(degs) != 1:
            raise GradingError("parts have different degrees; regrade first")
        C = FreeComplex.empty(self.ring, self.xdeg, self.lam, {"d": degs.pop()})
        for g in self.gens:
            C.add_gen(g, self.grading[g])
        for part in self.parts.values():
            for (s, t), p in part.items():
                C.add_arrow("d", s, t, p)
        return C

    def regrade(self, fn, xdeg: Grading, lam: Grading, degrees: Mapping[str, Grading]) -> "FreeComplex":
        C = FreeComplex.empty(self.ring, xdeg, lam, degrees)
        for g in self.gens:
            C.add_gen(g, fn(self.grading[g]))
        C.parts = {k: dict(self.parts[k]) for k in degrees}
        C.check_homogeneous()
        return C

    # -- checks -------------------------------------------------------
    def arrow_degree(self, src: str, dst: str, p: Poly) -> Grading:
        k = pdeg(p)
        return _vadd(_vadd(self.grading[dst], self.xdeg, k), self.grading[src], -1)

    def check_homogeneous(self):
        for name, part in self.parts.items():
            for (s, t), p in part.items():
                if self.arrow_degree(s, t, p) != self.degrees[name]:
                    raise GradingError(f"arrow {s}->{t} in {name} has degree "
                                       f"{self.arrow_degree(s, t, p)}, expected {self.degrees[name]}")

    def _out(self, part: Optional[str] = None) -> Dict[str, List[Tuple[str, Poly]]]:
        out: Dict[str, List[Tuple[str, Poly]]] = {g: [] for g in self.gens}
        for name, arrows in self.parts.items():
            if part is not None and name != part:
                continue
            for (s, t), p in arrows.items():
                out[s].append((t, p))
        return out

    def d_squared_zero(self, part: Optional[str] = None) -> bool:
        """``d o d == 0`` for one part, or for the sum of all parts."""
        out = self._out(part)
        for g in self.gens:
            acc: Dict[str, Poly] = {}
            for t, p in out[g]:
                for u, r in out[t]:
                    acc[u] = padd(acc.get(u, ZERO), pmul(p, r))
            if any(acc.values()):
                return False
        return True

    # -- pieces -------------------------------------------------------
    def internal(self, g: Grading) -> int:
        return _dot(self.lam, g)

    def _base(self) -> int:
        return min(self.internal(self.grading[g]) for g in self.gens)

    def pieces(self, cutoff: int, base: Optional[int] = None) -> List[Grading]:
        if not self.gens:
            return []
        base = self._base() if base is None else base
        step = _dot(self.lam, self.xdeg)
        out = set()
        for g in self.gens:
            gr = self.grading[g]
            k = 0
            while self.internal(gr) - base + k * step <= cutoff:
                out.add(_vadd(gr, self.xdeg, k))
                k += 1
        return sorted(out)

    def _power(self, gen_grading: Grading, g: Grading) -> Optional[int]:
        diff = _vadd(g, gen_grading, -1)
        step = _dot(self.lam, self.xdeg)
        k, r = divmod(_dot(self.lam, diff), step)
        if r or k < 0 or _vadd(gen_grading, self.xdeg, k) != g:
            return None
        return k

    def piece_basis(self, g: Grading) -> Dict[Tuple[str, Tuple[int, ...]], int]:
        cache = self.__dict__.setdefault("_basis_cache", {})
        hit = cache.get(g)
        if hit is not None:
            return hit
        basis = {}
        for gen in self.gens:
            k = self._power(self.grading[gen], g)
            if k is None:
                continue
            for m in monomials(self.ring.n, k):
                basis[(gen, m)] = len(basis)
        cache[g] = basis
        return basis

    def matrix(self, part: str, g: Grading) -> List[int]:
        """Images (as bitsets in the target piece) of the basis of piece ``g``."""
        src = self.piece_basis(g)
        dst = self.piece_basis(_vadd(g, self.degrees[part]))
        out_arrows = self.__dict__.setdefault("_out_cache", {})
        if part not in out_arrows:
            out_arrows[part] = self._out(part)
        arrows = out_arrows[part]
        rows = []
        for (gen, m) in src:
            v = 0
            for t, p in arrows[gen]:
                for e in p:
                    v ^= 1 << dst[(t, tuple(x + y for x, y in zip(m, e)))]
            rows.append(v)
        return rows

    def invalidate(self):
        self.__dict__.pop("_basis_cache", None)
        self.__dict__.pop("_out_cache", None)


@dataclass
class GradedDims:
    dims: Dict[Grading, int]
    cutoff: int
    complete_below: Optional[int] = None
    meta: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def nonzero(self) -> Dict[Grading, int]:
        return {g: d for g, d in sorted(self.dims.items()) if d}

    def __eq__(self, other):
        if isinstance(other, GradedDims):
            return self.nonzero() == other.nonzero()
        return NotImplemented

    def shifted(self, s: Grading) -> "GradedDims":
        return GradedDims({_vadd(g, s): d for g, d in self.dims.items()}, self.cutoff,
                          self.complete_below, dict(self.meta))

    def scaled(self, k: int) -> "GradedDims":
        return GradedDims({g: d * k for g, d in self.dims.items()}, self.cutoff,
                          self.complete_below, dict(self.meta))


def _reduce(v: int, pivots: Dict[int, int]) -> int:
    while v:
        h = v.bit_length() - 1
        p = pivots.get(h)
        if p is None:
            return v
        v ^= p
    return 0


def _echelon(vectors: Iterable[int]) -> Dict[int, int]:
    pivots: Dict[int, int] = {}
    for v in vectors:
        v = _reduce(v, pivots)
        if v:
            pivots[v.bit_length() - 1] = v
    return pivots


def kernel_basis(rows: List[int]) -> List[int]:
    """Basis (as bitsets over source indices) of the kernel of a row list."""
    pivots: Dict[int, Tuple[int, int]] = {}
    ker = []
    for i, v in enumerate(rows):
        comb = 1 << i
        while v:
            h = v.bit_length() - 1
            hit = pivots.get(h)
            if hit is None:
                pivots[h] = (v, comb)
                break
            v ^= hit[0]
            comb ^= hit[1]
        if not v:
            ker.append(comb)
    return ker


def _apply(rows: List[int], comb: int) -> int:
    out, i = 0, 0
    while comb:
        if comb & 1:
            out ^= rows[i]
        comb >>= 1
        i += 1
    return out


def graded_homology(C: FreeComplex, part: str = "d", cutoff: int = 8,
                    base: Optional[int] = None) -> GradedDims:
    """Homology of one differential part, piece by piece."""
    deg = C.degrees[part]
    back = tuple(-x for x in deg)
    ranks: Dict[Grading, int] = {}

    def rank_from(g):
        if g not in ranks:
            ranks[g] = rank_f2(C.matrix(part, g)) if C.piece_basis(g) else 0
        return ranks[g]

    dims = {}
    for g in C.pieces(cutoff, base):
        n = len(C.piece_basis(g))
        prev = _vadd(g, back)
        d = n - rank_from(g) - rank_from(prev)
        if d:
            dims[g] = d
    C.invalidate()
    return GradedDims(dims, cutoff)


def two_step_homology(C: FreeComplex, first: str = "h", second: str = "v", cutoff: int = 8,
                      base: Optional[int] = None) -> GradedDims:
    """``H(H(C, d_first), d_second*)`` piece by piece.

    For a piece ``g`` with cycles ``Z_g`` and boundaries ``B_g`` of ``d_first``,
    the rank of the induced map out of ``H_g`` is
    ``rank(d_second Z_g + B_{g'}) - rank(B_{g'})``.
    """
    d1, d2 = C.degrees[first], C.degrees[second]
    cache: Dict[Grading, dict] = {}

    def info(g):
        hit = cache.get(g)
        if hit is not None:
            return hit
        if not C.piece_basis(g):
            hit = {"Z": [], "B": {}, "hdim": 0}
        else:
            rows = C.matrix(first, g)
            Z = kernel_basis(rows)
            prev = _vadd(g, d1, -1)
            B = _echelon(C.matrix(first, prev)) if C.piece_basis(prev) else {}
            hit = {"Z": Z, "B": B, "hdim": len(Z) - len(B)}
        cache[g] = hit
        return hit

    out_rank: Dict[Grading, int] = {}

    def rank_out(g):
        if g in out_rank:
            return out_rank[g]
        a = info(g)
        r = 0
        if a["hdim"]:
            tgt = _vadd(g, d2)
            b = info(tgt)
            if C.piece_basis(tgt):
                rows2 = C.matrix(second, g)
                piv = dict(b["B"])
                for z in a["Z"]:
                    v = _reduce(_apply(rows2, z), piv)
                    if v:
                        piv[v.bit_length() - 1] = v
                        r += 1
        out_rank[g] = r
        return r

    dims = {}
    for g in C.pieces(cutoff, base):
        a = info(g)
        if not a["hdim"]:
            continue
        d = a["hdim"] - rank_out(g) - rank_out(_vadd(g, d2, -1))
        if d:
            dims[g] = d
    C.invalidate()
    return GradedDims(dims, cutoff)


# ---------------------------------------------------------------------------
# simplifications

def unit_cancel(C: FreeComplex, part: str = "d", only: Optional[Sequence[Tuple[str, str]]] = None,
                max_steps: Optional[int] = None) -> FreeComplex:
    """Gaussian elimination of unit arrows ``x -> y``.

    Each step drops ``x`` and ``y`` and adds ``d(z, x) * d(y', ...)`` zig-zags:
    for ``z -> y`` with coefficient ``c`` and ``x -> w`` with ``b`` the new
    arrow ``z -> w`` gains ``c * b``.  With ``only`` the listed pairs are
    cancelled in order; otherwise any unit is taken until none remain.
    Only single-part complexes are supported.
    """
    if len(C.parts) != 1:
        raise ValueError("unit_cancel needs a single differential part")
    C = C.copy()
    arrows = C.parts[part]
    todo = list(only) if only is not None else None
    steps = 0
    while True:
        if todo is not None:
            if not todo:
                break
            x, y = todo.pop(0)
            if not is_unit(arrows.get((x, y), ZERO)):
                raise ValueError(f"arrow {x}->{y} is not a unit")
        else:
            pick = next(((s, t) for (s, t), p in sorted(arrows.items()) if is_unit(p)), None)
            if pick is None:
                break
            x, y = pick
        into_y = [(z, p) for (z, t), p in arrows.items() if t == y and z != x]
        out_x = [(w, p) for (s, w), p in arrows.items() if s == x and w != y]
        for z, c in into_y:
            for w, b in out_x:
                key = (z, w)
                v = padd(arrows.get(key, ZERO), pmul(c, b))
                if v:
                    arrows[key] = v
                else:
                    arrows.pop(key, None)
        for key in [k for k in arrows if x in k or y in k]:
            del arrows[key]
        C.gens = [g for g in C.gens if g not in (x, y)]
        del C.grading[x], C.grading[y]
        steps += 1
        if max_steps is not None and steps >= max_steps:
            break
    C.invalidate()
    return C


def change_basis(C: FreeComplex, g: str, h: str, p: Optional[Poly] = None) -> FreeComplex:
    """Replace generator ``g`` by ``g + p h`` (``p`` defaults to 1)."""
    C = C.copy()
    p = C.ring.one() if p is None else p
    if p and C.grading[g] != _vadd(C.grading[h], C.xdeg, pdeg(p)):
        raise GradingError("basis change is not homogeneous")
    for name, arrows in C.parts.items():
        # d(g') = d(g) + p d(h)
        for (s, t), r in list(arrows.items()):
            if s == h:
                C.set_arrow(name, g, t, padd(arrows.get((g, t), ZERO), pmul(p, r)))
        # a g + b h = a g' + (b + a p) h
        for (s, t), r in list(arrows.items()):
            if t == g:
                C.set_arrow(name, s, h, padd(arrows.get((s, h), ZERO), pmul(r, p)))
    C.invalidate()
    return C


def koszul(ring: PolyRingZ2, elements: Sequence[Poly], names: Optional[Sequence[str]] = None,
           shift: Grading = (0, 0)) -> FreeComplex:
    """Koszul complex of homogeneous elements, graded (homological, internal).

    ``e_S`` sits at ``(|S|, 2 * sum deg f_i)``; variables have grading ``(0, 2)``.
    """
    names = list(names) if names is not None else [f"f{i + 1}" for i in range(len(elements))]
    degs = [pdeg(f) for f in elements]
    if any(d is None for d in degs):
        raise ValueError("Koszul element is zero")
    C = FreeComplex.empty(ring, (0, 2), (0, 1), {"d": (-1, 0)})
    n = len(elements)

    def label(S):
        return "e{" + ",".join(names[i] for i in S) + "}"

    for r in range(n + 1):
        for S in itertools.combinations(range(n), r):
            C.add_gen(label(S), (shift[0] + r, shift[1] + 2 * sum(degs[i] for i in S)))
    for r in range(1, n + 1):
        for S in itertools.combinations(range(n), r):
            for i in S:
                T = tuple(j for j in S if j != i)
                C.add_arrow("d", label(S), label(T), elements[i])
    C.check_homogeneous()
    return C


# ---------------------------------------------------------------------------
# random test complexes

def random_homogeneous(ring: PolyRingZ2, k: int, rng: random.Random, density: float = 0.5) -> Poly:
    ms = monomials(ring.n, k)
    p = frozenset(m for m in ms if rng.random() < density)
    return p or frozenset({rng.choice(ms)})


def random_complex(rng: random.Random, nvars: int = 2, n_elements: int = 2, n_units: int = 2,
                   n_changes: int = 6, max_deg: int = 2) -> FreeComplex:
    """A Koszul complex with planted unit pairs, disguised by basis changes."""
    ring = PolyRingZ2([f"x{i}" for i in range(nvars)])
    els = [random_homogeneous(ring, rng.randint(1, max_deg), rng) for _ in range(n_elements)]
    C = koszul(ring, els)
    for u in range(n_units):
        lvl = rng.randint(0, n_elements)
        wt = 2 * rng.randint(0, max_deg * n_elements)
        C.add_gen(f"u{u}", (lvl + 1, wt))
        C.add_gen(f"t{u}", (lvl, wt))
        C.add_arrow("d", f"u{u}", f"t{u}", ring.one())
    for _ in range(n_changes):
        g, h = rng.sample(C.gens, 2)
        dg = _vadd(C.grading[g], C.grading[h], -1)
        if dg[0] != 0 or dg[1] < 0 or dg[1] % 2:
            continue
        C = change_basis(C, g, h, random_homogeneous(ring, dg[1] // 2, rng))
    C.check_homogeneous()
    return C
