"""Polynomials over the two-element field.

A polynomial is a ``frozenset`` of exponent tuples (coefficients are all 1).
:class:`PolyRingZ2` names the variables and can quotient by linear
relations, which it does by eliminating one variable per independent relation.
"""
from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

Mono = Tuple[int, ...]
Poly = FrozenSet[Mono]

ZERO: Poly = frozenset()


def padd(*ps: Poly) -> Poly:
    out = set()
    for p in ps:
        out ^= p
    return frozenset(out)


def pmul(p: Poly, r: Poly) -> Poly:
    out = set()
    for a in p:
        for b in r:
            m = tuple(x + y for x, y in zip(a, b))
            if m in out:
                out.remove(m)
            else:
                out.add(m)
    return frozenset(out)


def pconst(n: int, one: int = 1) -> Poly:
    return frozenset({(0,) * n}) if one % 2 else ZERO


def is_unit(p: Poly) -> bool:
    return len(p) == 1 and not any(next(iter(p)))


def degree_set(p: Poly) -> set:
    return {sum(m) for m in p}


def is_homogeneous(p: Poly) -> bool:
    return len(degree_set(p)) <= 1


def pdeg(p: Poly) -> Optional[int]:
    """Total degree of a homogeneous polynomial (``None`` for zero)."""
    ds = degree_set(p)
    if not ds:
        return None
    if len(ds) > 1:
        raise ValueError("polynomial is not homogeneous")
    return ds.pop()


@lru_cache(maxsize=None)
def monomials(n: int, k: int) -> Tuple[Mono, ...]:
    """All exponent tuples of total degree ``k`` in ``n`` variables."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


class PolyRingZ2:
    """``Z2[x_1..x_n] / (linear relations)`` presented as a polynomial ring.

    ``names`` are the ambient variables.  Each relation is an iterable of
    names whose sum vanishes.  Pivot variables are solved for in terms of the
    remaining free ones; ``prefer_free`` lists names to keep free if possible.
    """

    def __init__(self, names: Sequence[str], relations: Iterable[Iterable[str]] = (),
                 prefer_free: Sequence[str] = ()):
        self.names = tuple(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise ValueError("duplicate variable names")
        N = len(self.names)
        # order in which pivots are chosen: variables we want free go last
        keep = [self.index[n] for n in prefer_free if n in self.index]
        order = [i for i in reversed(range(N)) if i not in keep] + list(reversed(keep))
        rows = []
        for rel in relations:
            m = 0
            for name in rel:
                m ^= 1 << self.index[name]
            if m:
                rows.append(m)
        pivots: Dict[int, int] = {}
        for m in rows:
            for p, r in pivots.items():
                if m >> p & 1:
                    m ^= r
            if not m:
                continue
            p = next(i for i in order if m >> i & 1)
            for q in list(pivots):
                if pivots[q] >> p & 1:
                    pivots[q] ^= m
            pivots[p] = m
        self.pivots = pivots
        self.free = tuple(i for i in range(N) if i not in pivots)
        self.free_names = tuple(self.names[i] for i in self.free)
        self.n = len(self.free)
        pos = {v: k for k, v in enumerate(self.free)}
        self._image: Dict[int, Poly] = {}
        for i in range(N):
            if i in pivots:
                others = pivots[i] & ~(1 << i)
                terms = set()
                for j in range(N):
                    if others >> j & 1:
                        e = [0] * self.n
                        e[pos[j]] = 1
                        terms.add(tuple(e))
                self._image[i] = frozenset(terms)
            else:
                e = [0] * self.n
                e[pos[i]] = 1
                self._image[i] = frozenset({tuple(e)})

    @property
    def relation_rank(self) -> int:
        return len(self.pivots)

    def one(self) -> Poly:
        return pconst(self.n)

    def zero(self) -> Poly:
        return ZERO

    def var(self, name: str) -> Poly:
        return self._image[self.index[name]]

    def linear(self, names: Iterable[str]) -> Poly:
        return padd(*(self.var(n) for n in names))

    def monomial(self, names: Iterable[str]) -> Poly:
        p = self.one()
        for n in names:
            p = pmul(p, self.var(n))
        return p

    def parse(self, text: str) -> Poly:
        """Parse ``"U1*U2 + U3 U4 + 1"`` style sums of products (``0`` allowed)."""
        text = text.strip()
        if text in ("", "0"):
            return ZERO
        total = ZERO
        for term in text.split("+"):
            term = term.strip()
            factors = [f for f in re.split(r"[*\s]+", term) if f]
            p = self.one()
            for f in factors:
                if f == "1":
                    continue
                m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*?)(?:\^(\d+))?", f)
                if not m or m.group(1) not in self.index:
                    raise ValueError(f"unknown factor {f!r}")
                for _ in range(int(m.group(2) or 1)):
                    p = pmul(p, self.var(m.group(1)))
            total = padd(total, p)
        return total

    def format(self, p: Poly) -> str:
        if not p:
            return "0"
        terms = []
        for m in sorted(p, key=lambda e: (-sum(e), tuple(-x for x in e))):
            parts = []
            for i, x in enumerate(m):
                if x:
                    parts.append(self.free_names[i] + (f"^{x}" if x > 1 else ""))
            terms.append("*".join(parts) or "1")
        return " + ".join(terms)


def quotient_hilbert(ring: PolyRingZ2, gens: Sequence[Poly], max_degree: int) -> Dict[int, int]:
    """``dim_k (R/(gens))_d`` for ``d <= max_degree`` by linear algebra per degree.

    Degrees are polynomial degrees (each variable has degree 1).
    """
    out = {}
    n = ring.n
    for d in range(max_degree + 1):
        basis = {m: i for i, m in enumerate(monomials(n, d))}
        vecs = []
        for g in gens:
            gd = pdeg(g)
            if gd is None or gd > d:
                continue
            for m in monomials(n, d - gd):
                v = 0
                for t in pmul(frozenset({m}), g):
                    v ^= 1 << basis[t]
                vecs.append(v)
        out[d] = len(basis) - rank_f2(vecs)
    return out


def rank_f2(vectors: Iterable[int]) -> int:
    """Rank over Z2 of bitset vectors."""
    pivots: Dict[int, int] = {}
    r = 0
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = v
                r += 1
                break
            v ^= p
    return r
