"""Per-cycle complexes of a negative crossing, stored as data files.

File format, one entry per line (``#`` starts a comment)::

    VARS U1 U2 U3 U4
    GEN <name> <level> <M> <W>
    DIF <src> <dst> <polynomial>

Gradings are ``(level, M, W)``; each ``U`` has grading ``(0, -2, 2)`` and the
differential has degree ``(-1, -1, 0)``.  Generator names spell the usual
coordinates with ``a``/``b``/``g`` suffixes for the alpha/beta/gamma copies of
``e1`` (``exa_f2`` is ``e_x^alpha f_2``).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Sequence, Tuple

from .free import FreeComplex, change_basis, graded_homology, unit_cancel
from .ring import PolyRingZ2, pdeg

FIXTURE_NAMES = ("z0", "z1", "z2", "z3", "z4", "z5")
XDEG = (0, -2, 2)
DEG = (-1, -1, 0)
LAM = (0, 0, 1)


class FixtureError(ValueError):
    pass


def parse_fixture(text: str, name: str = "<fixture>") -> FreeComplex:
    ring = None
    gens: List[Tuple[str, Tuple[int, ...]]] = []
    difs: List[Tuple[str, str, str]] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split(None, 3)
        kind = tok[0]
        if kind == "VARS":
            ring = PolyRingZ2(line.split()[1:])
        elif kind == "GEN" and len(line.split()) == 5:
            parts = line.split()
            gens.append((parts[1], tuple(int(x) for x in parts[2:])))
        elif kind == "DIF" and len(tok) == 4:
            difs.append((tok[1], tok[2], tok[3]))
        else:
            raise FixtureError(f"{name}:{no}: cannot parse {raw!r}")
    if ring is None:
        raise FixtureError(f"{name}: missing VARS line")
    C = FreeComplex.empty(ring, XDEG, LAM, {"d": DEG})
    for g, gr in gens:
        C.add_gen(g, gr)
    for s, t, p in difs:
        for x in (s, t):
            if x not in C.grading:
                raise FixtureError(f"{name}: unknown generator {x!r}")
        C.add_arrow("d", s, t, ring.parse(p))
    try:
        C.check_homogeneous()
    except ValueError as exc:
        raise FixtureError(f"{name}: {exc}") from None
    return C


def format_fixture(C: FreeComplex, header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.append("VARS " + " ".join(C.ring.names))
    for g in C.gens:
        lines.append("GEN " + " ".join([g] + [str(x) for x in C.grading[g]]))
    for (s, t), p in C.parts["d"].items():
        lines.append(f"DIF {s} {t} {C.ring.format(p)}")
    return "\n".join(lines) + "\n"


def bfs_gradings(ring: PolyRingZ2, arrows: Sequence[Tuple[str, str, str]]) -> Dict[str, Tuple[int, int, int]]:
    """Gradings making every arrow homogeneous; one root per connected piece
    is placed at level 0, ``M = W = 0``."""
    adj: Dict[str, list] = {}
    for s, t, p in arrows:
        k = pdeg(ring.parse(p))
        # grading(t) = grading(s) + DEG - k * XDEG
        off = tuple(d - k * x for d, x in zip(DEG, XDEG))
        adj.setdefault(s, []).append((t, off))
        adj.setdefault(t, []).append((s, tuple(-o for o in off)))
    out: Dict[str, Tuple[int, int, int]] = {}
    for root in adj:
        if root in out:
            continue
        out[root] = (0, 0, 0)
        todo = deque([root])
        while todo:
            x = todo.popleft()
            for y, off in adj[x]:
                g = tuple(a + b for a, b in zip(out[x], off))
                if y in out:
                    if out[y] != g:
                        raise FixtureError(f"inconsistent grading at {y}")
                    continue
                out[y] = g
                todo.append(y)
    return out


def load_fixture(name: str) -> FreeComplex:
    text = resources.files("knotcube.complexes").joinpath("data", f"{name}.txt").read_text()
    return parse_fixture(text, name)


def same_arrows(A: FreeComplex, B: FreeComplex) -> List[str]:
    """Differences between two single-part complexes (empty when equal)."""
    diffs = []
    if set(A.gens) != set(B.gens):
        diffs.append(f"generators differ: {sorted(set(A.gens) ^ set(B.gens))}")
    a, b = A.parts["d"], B.parts["d"]
    for key in sorted(set(a) | set(b)):
        pa, pb = a.get(key, frozenset()), b.get(key, frozenset())
        if pa != pb:
            diffs.append(f"{key[0]} -> {key[1]}: {A.ring.format(pa)} vs {B.ring.format(pb)}")
    return diffs


def _divisible(p, var) -> bool:
    i = next(iter(var))
    j = i.index(1)
    return all(m[j] >= 1 for m in p)


@dataclass
class FixtureResult:
    name: str
    passed: bool
    details: List[str] = field(default_factory=list)


def _check(res: FixtureResult, cond: bool, msg: str):
    if not cond:
        res.passed = False
        res.details.append(msg)


def _block(C: FreeComplex, names: Sequence[str]) -> Dict[Tuple[str, str], object]:
    s = set(names)
    return {k: p for k, p in C.parts["d"].items() if k[0] in s and k[1] in s}


def check_z0(cutoff: int = 8) -> FixtureResult:
    res = FixtureResult("z0", True)
    C = load_fixture("z0")
    R = C.ring
    _check(res, C.d_squared_zero(), "d^2 != 0 before cancellation")
    D = unit_cancel(C, only=[("exa_f2", "ey_f2"), ("exa_f1", "ey_f1")])
    _check(res, D.d_squared_zero(), "d^2 != 0 after cancellation")
    for d in same_arrows(D, load_fixture("z0_cancelled")):
        _check(res, False, "cancelled complex: " + d)
    _check(res, graded_homology(C, cutoff=cutoff, base=0) == graded_homology(D, cutoff=cutoff, base=0),
           "cancellation changed homology")
    E = change_basis(D, "d1_g2", "d2_g1")
    sigma = R.parse("U1 + U2 + U3 + U4")
    quad = R.parse("U1*U2 + U3*U4")
    dg = {("d2_g2", "d1_g2"): R.parse("U2 + U4"), ("d2_g2", "d2_g1"): sigma,
          ("d1_g2", "d1_g1"): sigma, ("d2_g1", "d1_g1"): R.parse("U2 + U4")}
    ex = {("exb_f2", "exb_f1"): quad, ("exb_f2", "exg_f2"): sigma,
          ("exb_f1", "exg_f1"): sigma, ("exg_f2", "exg_f1"): quad}
    _check(res, _block(E, ["d1_g1", "d1_g2", "d2_g1", "d2_g2"]) == dg,
           "(d, g) block is not the resolution Koszul square")
    _check(res, _block(E, ["exb_f1", "exb_f2", "exg_f1", "exg_f2"]) == ex,
           "e_x block is not the singularization Koszul square")
    top = E.parts["d"].get(("d2_g2", "exb_f2"), frozenset())
    _check(res, top == R.one(), "top edge map is not 1")
    _check(res, E.d_squared_zero(), "d^2 != 0 after basis change")
    res.details.append(f"homology dims {graded_homology(E, cutoff=cutoff, base=0).total} up to W={cutoff}")
    return res


def check_z1(cutoff: int = 8) -> FixtureResult:
    res = FixtureResult("z1", True)
    C = load_fixture("z1")
    _check(res, C.d_squared_zero(), "d^2 != 0 before cancellation")
    pairs = [(f"a{i}_e1a_j{k}", f"a{i}_e2_j{k}") for i in (2, 1) for k in (2, 1)]
    D = unit_cancel(C, only=pairs)
    for d in same_arrows(D, load_fixture("z1_cancelled")):
        _check(res, False, "cancelled complex: " + d)
    H = graded_homology(D, cutoff=cutoff, base=0)
    _check(res, H.total == 0, f"not acyclic: {H.nonzero()}")
    _check(res, graded_homology(C, cutoff=cutoff, base=0).total == 0, "original complex not acyclic")
    return res


def check_z2(cutoff: int = 8) -> FixtureResult:
    res = FixtureResult("z2", True)
    C = load_fixture("z2")
    _check(res, C.d_squared_zero(), "d^2 != 0 before cancellation")
    pairs = [(f"c{j}_e1a_i{k}", f"c{j}_e2_i{k}") for j in (2, 1) for k in (2, 1)]
    D = unit_cancel(C, only=pairs)
    for d in same_arrows(D, load_fixture("z2_cancelled")):
        _check(res, False, "cancelled complex: " + d)
    U4 = C.ring.var("U4")
    edge = {k: p for k, p in D.parts["d"].items() if "_d" in k[0] and "_e1" in k[1]}
    _check(res, bool(edge), "no edge map found")
    for (s, t), p in edge.items():
        _check(res, _divisible(p, U4), f"edge entry {s} -> {t} not divisible by U4")
    _check(res, D.d_squared_zero(), "d^2 != 0 after cancellation")
    return res


def _koszul_like(res: FixtureResult, C: FreeComplex, expected: Dict[int, int], cutoff: int):
    H = graded_homology(C, cutoff=cutoff, base=0)
    by_w: Dict[int, int] = {}
    for g, d in H.dims.items():
        by_w[g[2]] = by_w.get(g[2], 0) + d
    lo = min(by_w) if by_w else 0
    rel = {w - lo: d for w, d in sorted(by_w.items())}
    exp = {w: d for w, d in expected.items() if w <= cutoff - lo}
    _check(res, rel == exp, f"homology {rel} != expected {exp}")


def check_z3(cutoff: int = 8) -> FixtureResult:
    res = FixtureResult("z3", True)
    C = load_fixture("z3")
    _check(res, C.d_squared_zero(), "d^2 != 0")
    # Koszul on U2, U3, sum: homology Z2[U1, U4]/(U1 + U4)
    _koszul_like(res, C, {w: 1 for w in range(0, cutoff + 1, 2)}, cutoff)
    return res


def check_z4(cutoff: int = 8) -> FixtureResult:
    res = FixtureResult("z4", True)
    C = load_fixture("z4")
    _check(res, C.d_squared_zero(), "d^2 != 0")
    _koszul_like(res, C, {w: 1 for w in range(0, cutoff + 1, 2)}, cutoff)
    return res


def check_z5(cutoff: int = 8) -> FixtureResult:
    res = FixtureResult("z5", True)
    C = load_fixture("z5")
    _check(res, C.d_squared_zero(), "d^2 != 0")
    _koszul_like(res, C, {0: 1}, cutoff)
    return res


CHECKS = {"z0": check_z0, "z1": check_z1, "z2": check_z2, "z3": check_z3, "z4": check_z4, "z5": check_z5}


def cycle_fixtures(cutoff: int = 8) -> List[FixtureResult]:
    return [CHECKS[n](cutoff) for n in FIXTURE_NAMES]
