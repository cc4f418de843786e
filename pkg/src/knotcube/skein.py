"""HOMFLY-PT polynomial of braid closures via descending diagrams.

Normalisation: ``a P(L+) - a^-1 P(L-) = z P(L0)`` with ``z = q - q^-1`` and
``P(unknot) = 1``.  The positive trefoil has ``P = a^-2 q^2 + a^-2 q^-2 - a^-4``.

In the braid picture a positive letter has its left-entering strand over,
a negative letter its right-entering strand.  The evaluator walks the
components in order of their leftmost position, from the top, and switches
the first crossing that is met as an under-crossing.
"""
from __future__ import annotations

from typing import Dict, Optional, Tuple, Union

from .diagram import BraidWord, Diagram, canonical_rotation
from .laurent import LaurentFraction, LaurentPoly, one, q_minus_qinv

_Z = q_minus_qinv("q")
_A = LaurentPoly.var("a")
_AINV = LaurentPoly.monomial(1, a=-1)
_DELTA_NUM = _A - _AINV  # delta = (a - a^-1) / z


class _ZFrac:
    """``num / z^k``; keeps a single power of ``z`` as the denominator."""

    __slots__ = ("num", "k")

    def __init__(self, num: LaurentPoly, k: int = 0):
        self.num, self.k = num, k

    def scale(self, c: LaurentPoly, dk: int = 0) -> "_ZFrac":
        return _ZFrac(self.num * c, self.k + dk)

    def __add__(self, other: "_ZFrac") -> "_ZFrac":
        k = max(self.k, other.k)
        return _ZFrac(self.num * _Z ** (k - self.k) + other.num * _Z ** (k - other.k), k)

    def fraction(self) -> LaurentFraction:
        return LaurentFraction(self.num, _Z ** self.k).reduced()


def _components(b: int, letters: Tuple[int, ...]) -> int:
    perm = list(range(b + 1))
    for x in letters:
        p = abs(x)
        perm[p], perm[p + 1] = perm[p + 1], perm[p]
    seen, count = set(), 0
    for p in range(1, b + 1):
        if p in seen:
            continue
        count += 1
        while p not in seen:
            seen.add(p)
            p = perm.index(p)
    return count


def first_bad_crossing(b: int, letters: Tuple[int, ...]) -> Optional[int]:
    """Index of the first crossing met as an under-crossing, or ``None``."""
    n = len(letters)
    visited = [False] * n
    done = set()
    for p0 in range(1, b + 1):
        if p0 in done:
            continue
        pos, t = p0, 0
        while True:
            done.add(pos)
            while t < n:
                x = letters[t]
                p = abs(x)
                if pos == p or pos == p + 1:
                    left = pos == p
                    over = (x > 0) == left
                    if not visited[t]:
                        visited[t] = True
                        if not over:
                            return t
                    pos = p + 1 if left else p
                t += 1
            t = 0
            if pos == p0:
                break
    return None


class HomflyEvaluator:
    """Memoised HOMFLY-PT evaluation; the cache is keyed by cyclic word class."""

    def __init__(self):
        self._cache: Dict[Tuple[int, Tuple[int, ...]], _ZFrac] = {}

    def _eval(self, b: int, letters: Tuple[int, ...]) -> _ZFrac:
        key = (b, canonical_rotation(letters))
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        t = first_bad_crossing(b, letters)
        if t is None:
            c = _components(b, letters)
            val = _ZFrac(_DELTA_NUM ** (c - 1), c - 1)
        else:
            x = letters[t]
            switched = letters[:t] + (-x,) + letters[t + 1:]
            smoothed = letters[:t] + letters[t + 1:]
            if x > 0:
                val = (self._eval(b, switched).scale(LaurentPoly.monomial(1, a=-2))
                       + self._eval(b, smoothed).scale(_AINV * _Z))
            else:
                val = (self._eval(b, switched).scale(LaurentPoly.monomial(1, a=2))
                       + self._eval(b, smoothed).scale(-(_A * _Z)))
        self._cache[key] = val
        return val

    def homfly(self, obj: Union[BraidWord, Diagram]) -> LaurentFraction:
        w = obj.word if isinstance(obj, Diagram) else obj
        return self._eval(w.strands, tuple(w.letters)).fraction()

    def homfly_poly(self, obj) -> LaurentPoly:
        """HOMFLY-PT as a Laurent polynomial (fails for non-polynomial values)."""
        return self.homfly(obj).to_poly()

    def homfly_prime(self, obj) -> LaurentFraction:
        """Diagram normalisation ``delta * a^w * P``; equals 1 on the empty diagram."""
        w = obj.word if isinstance(obj, Diagram) else obj
        if w is None or w.strands == 0:
            return LaurentFraction(one())
        wr = sum(1 if x > 0 else -1 for x in w.letters)
        return (self.homfly(w) * LaurentFraction(_DELTA_NUM * LaurentPoly.monomial(1, a=wr), _Z)).reduced()


_default = HomflyEvaluator()


def homfly(obj) -> LaurentFraction:
    return _default.homfly(obj)


def homfly_prime(obj) -> LaurentFraction:
    return _default.homfly_prime(obj)


def rename_a(P, name: str):
    """Rename the framing variable ``a`` (e.g. to ``a1``)."""
    return P.substitute({"a": {name: 1}})


def specialize(P, N: int):
    """Substitute ``a = q^N``."""
    return P.substitute({"a": {"q": N}})


def shift_a_by_q(P):
    """Substitute ``a -> a q``."""
    return P.substitute({"a": {"a": 1, "q": 1}})


def mirror_poly(P):
    """HOMFLY-PT of the mirror image: ``a -> a^-1, q -> q^-1``."""
    return P.substitute({"a": {"a": -1}, "q": {"q": -1}})
