"""Exact multivariate Laurent polynomials with integer coefficients.

Variables come from a small fixed alphabet (``a``, ``a1``, ``a2``, ``q``) and
are always kept in that order, so two polynomials over different variable
sets can be combined by padding exponent vectors with zeros.
"""
from __future__ import annotations

import json
from typing import Dict, Iterable, Mapping, Tuple

VARIABLE_ORDER = ("a", "a1", "a2", "q")
_RANK = {name: i for i, name in enumerate(VARIABLE_ORDER)}

Exps = Tuple[int, ...]


def _ordered(names: Iterable[str]) -> Tuple[str, ...]:
    names = set(names)
    unknown = names - set(_RANK)
    if unknown:
        raise ValueError(f"unknown variable(s): {sorted(unknown)}")
    return tuple(sorted(names, key=_RANK.__getitem__))


class LaurentPoly:
    """Immutable Laurent polynomial.

    ``terms`` maps exponent tuples (aligned with ``variables``) to nonzero
    integer coefficients.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[Exps, int] | None = None):
        self.variables = _ordered(variables)
        clean = {}
        n = len(self.variables)
        for exps, c in (terms or {}).items():
            if len(exps) != n:
                raise ValueError("exponent vector does not match variables")
            if c:
                clean[tuple(exps)] = int(c)
        self.terms: Dict[Exps, int] = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: int, variables: Iterable[str] = ()) -> "LaurentPoly":
        v = _ordered(variables)
        return cls(v, {(0,) * len(v): c})

    @classmethod
    def monomial(cls, coeff: int = 1, **exps: int) -> "LaurentPoly":
        v = _ordered(exps)
        return cls(v, {tuple(exps[x] for x in v): coeff})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        return cls.monomial(1, **{name: 1})

    # -- basic structure ----------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def promote(self, variables: Iterable[str]) -> "LaurentPoly":
        target = _ordered(set(variables) | set(self.variables))
        if target == self.variables:
            return self
        idx = [target.index(v) for v in self.variables]
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(target)
            for i, e in zip(idx, exps):
                new[i] = e
            out[tuple(new)] = c
        return LaurentPoly(target, out)

    def _align(self, other) -> Tuple["LaurentPoly", "LaurentPoly"]:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(int(other))
        if other.variables == self.variables:
            return self, other
        union = set(self.variables) | set(other.variables)
        return self.promote(union), other.promote(union)

    def drop_unused(self) -> "LaurentPoly":
        used = [i for i in range(len(self.variables))
                if any(e[i] for e in self.terms)]
        if len(used) == len(self.variables):
            return self
        names = [self.variables[i] for i in used]
        return LaurentPoly(names, {tuple(e[i] for i in used): c
                                   for e, c in self.terms.items()})

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        p, r = self._align(other)
        out = dict(p.terms)
        for e, c in r.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(p.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        p, r = self._align(other)
        return p + (-r)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p, r = self._align(other)
        out: Dict[Exps, int] = {}
        for e1, c1 in p.terms.items():
            for e2, c2 in r.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(p.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly(self.variables, {tuple(-x * -n for x in e): c ** -n})
        result = LaurentPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        p, r = self._align(other)
        return p.terms == r.terms

    def __hash__(self):
        if self._hash is None:
            q = self.drop_unused()
            self._hash = hash((q.variables, frozenset(q.terms.items())))
        return self._hash

    # -- division -----------------------------------------------------
    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / divisor``; ``ValueError`` if it does not divide."""
        p, d = self._align(divisor)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if p.is_zero():
            return p
        d_lead = max(d.terms)
        d_low = min(d.terms)
        c_lead = d.terms[d_lead]
        floor = tuple(x - y for x, y in zip(min(p.terms), d_low))
        # quotient exponents lie in a coordinatewise box (Newton polytope bound)
        n = len(p.variables)
        lo = [min(e[i] for e in p.terms) - max(e[i] for e in d.terms) for i in range(n)]
        hi = [max(e[i] for e in p.terms) - min(e[i] for e in d.terms) for i in range(n)]
        quot: Dict[Exps, int] = {}
        rem = p
        while not rem.is_zero():
            r_lead = max(rem.terms)
            e = tuple(x - y for x, y in zip(r_lead, d_lead))
            c, m = divmod(rem.terms[r_lead], c_lead)
            if m or e < floor or any(not l <= x <= h for l, x, h in zip(lo, e, hi)):
                raise ValueError("polynomial division is not exact")
            quot[e] = c
            rem = rem - LaurentPoly(p.variables, {e: c}) * d
        return LaurentPoly(p.variables, quot)

    # -- substitution -------------------------------------------------
    def substitute(self, rule: Mapping[str, Mapping[str, int]]) -> "LaurentPoly":
        """Replace each variable named in ``rule`` by a monomial.

        ``rule`` maps a variable name to the exponent dict of its image, e.g.
        ``{"a": {"a": 1, "q": 1}}`` is a -> a*q and ``{"a": {}}`` is a -> 1.
        Substitutions are simultaneous.
        """
        names = set(self.variables)
        for name, image in rule.items():
            names |= set(image)
        target = _ordered(names)
        images = []
        for i, v in enumerate(self.variables):
            img = rule.get(v, {v: 1})
            images.append(tuple(img.get(t, 0) for t in target))
        out: Dict[Exps, int] = {}
        for exps, c in self.terms.items():
            new = [0] * len(target)
            for e, img in zip(exps, images):
                if e:
                    for j, x in enumerate(img):
                        new[j] += e * x
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return LaurentPoly(target, out)

    # -- rendering ----------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self):
        return [{"exps": {v: e for v, e in zip(self.variables, exps) if e}, "c": c}
                for exps, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        result = cls()
        for term in data:
            result = result + cls.monomial(term["c"], **term["exps"])
        return result

    def json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def zero() -> LaurentPoly:
    return LaurentPoly()


def one() -> LaurentPoly:
    return LaurentPoly.constant(1)


def q_minus_qinv(var: str = "q") -> LaurentPoly:
    """The skein factor ``q - q^-1`` (or the same in another variable)."""
    return LaurentPoly.monomial(1, **{var: 1}) - LaurentPoly.monomial(1, **{var: -1})


class LaurentFraction:
    """Exact quotient ``num / den`` of Laurent polynomials.

    Used for link invariants that carry powers of ``(a - a^-1)/(q - q^-1)``.
    Equality is by cross-multiplication, so no normal form is needed for
    correctness; :meth:`reduced` strips common factors of ``q - q^-1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = one()
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(int(num))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def lift(cls, x) -> "LaurentFraction":
        if isinstance(x, LaurentFraction):
            return x
        return cls(x if isinstance(x, LaurentPoly) else LaurentPoly.constant(int(x)))

    def __add__(self, other):
        o = LaurentFraction.lift(other)
        if self.den == o.den:
            return LaurentFraction(self.num + o.num, self.den)
        return LaurentFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-LaurentFraction.lift(other))

    def __rsub__(self, other):
        return LaurentFraction.lift(other) - self

    def __mul__(self, other):
        o = LaurentFraction.lift(other)
        return LaurentFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = LaurentFraction.lift(other)
        return LaurentFraction(self.num * o.den, self.den * o.num)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = LaurentFraction.lift(other)
        if not isinstance(other, LaurentFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def substitute(self, rule) -> "LaurentFraction":
        return LaurentFraction(self.num.substitute(rule), self.den.substitute(rule))

    def reduced(self) -> "LaurentFraction":
        num, den = self.num, self.den
        if num.is_zero():
            return LaurentFraction(zero(), one())
        # a unit monomial denominator can always be absorbed
        if len(den.terms) == 1:
            (e, c), = den.terms.items()
            if c in (1, -1):
                return LaurentFraction(num * den ** -1, one())
        for var in ("q", "a", "a1", "a2"):
            if var not in den.variables:
                continue
            factor = q_minus_qinv(var)
            while True:
                try:
                    d2 = den.divide_exact(factor)
                    n2 = num.divide_exact(factor)
                except ValueError:
                    break
                num, den = n2, d2
        if len(den.terms) == 1:
            (e, c), = den.terms.items()
            if c in (1, -1):
                num, den = num * den ** -1, one()
        return LaurentFraction(num, den)

    def is_polynomial(self) -> bool:
        try:
            self.to_poly()
        except ValueError:
            return False
        return True

    def to_poly(self) -> LaurentPoly:
        """The quotient as a Laurent polynomial; ``ValueError`` if not exact."""
        return self.num.divide_exact(self.den)

    def __str__(self):
        r = self.reduced()
        if r.den == one():
            return str(r.num)
        return f"({r.num}) / ({r.den})"

    def __repr__(self):
        return f"LaurentFraction({str(self)!r})"

    def to_json(self):
        r = self.reduced()
        return {"num": r.num.to_json(), "den": r.den.to_json()}


def fsum(values) -> LaurentFraction:
    """Sum of fractions, grouping equal denominators before cross-multiplying."""
    groups: Dict[LaurentPoly, LaurentPoly] = {}
    for v in values:
        v = LaurentFraction.lift(v)
        groups[v.den] = groups.get(v.den, zero()) + v.num
    total = LaurentFraction(zero())
    for den, num in groups.items():
        total = total + LaurentFraction(num, den)
    return total.reduced()
