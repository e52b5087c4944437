"""Sparse bivariate polynomials over F_p and the Cartier pipeline primitives."""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import TYPE_CHECKING, Iterable, Mapping

from .errors import ModulusMismatch, NonDivisibleExponent

if TYPE_CHECKING:
    from .curve import CurveParams

Monomial = tuple[int, int]


def binomial_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    result = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        num = den = 1
        for t in range(ki):
            num = num * (ni - t) % p
            den = den * (t + 1) % p
        result = result * num * pow(den, p - 2, p) % p
        n //= p
        k //= p
    return result


class BiPoly:
    """Immutable sparse polynomial in x, y over F_p, keyed by (x-exp, y-exp)."""

    __slots__ = ("p", "_terms", "_hash")

    def __init__(self, p: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for (ex, ey), c in items:
            if ex < 0 or ey < 0:
                raise ValueError(f"negative exponent in x^{ex}*y^{ey}")
            acc[(ex, ey)] = (acc.get((ex, ey), 0) + c) % p
        self.p = p
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, p: int, terms: dict[Monomial, int]) -> BiPoly:
        # terms already reduced and free of zeros
        obj = cls.__new__(cls)
        obj.p = p
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, p: int) -> BiPoly:
        return cls._raw(p, {})

    @classmethod
    def monomial(cls, p: int, ex: int, ey: int, coeff: int = 1) -> BiPoly:
        return cls(p, {(ex, ey): coeff})

    @classmethod
    def constant(cls, p: int, c: int) -> BiPoly:
        return cls(p, {(0, 0): c})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, ex: int, ey: int) -> int:
        return self._terms.get((ex, ey), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.p == other.p and self._terms == other._terms
        if isinstance(other, int):
            return self == BiPoly.constant(self.p, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: BiPoly) -> None:
        if other.p != self.p:
            raise ModulusMismatch(f"F_{self.p} vs F_{other.p}")

    def _lift(self, other) -> BiPoly:
        if isinstance(other, int):
            return BiPoly.constant(self.p, other)
        if isinstance(other, BiPoly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = (out.get(k, 0) + c) % p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly._raw(p, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return BiPoly._raw(p, {k: p - c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = BiPoly.constant(self.p, 1)
        base = self
        while k:
            if k & 1:
                result = poly_mul(result, base)
            k >>= 1
            if k:
                base = poly_mul(base, base)
        return result

    def scale(self, c: int) -> BiPoly:
        return BiPoly(self.p, {k: v * c for k, v in self._terms.items()})

    def shift(self, i: int, j: int) -> BiPoly:
        """Multiply by the monomial x^i y^j."""
        return BiPoly._raw(self.p, {(ex + i, ey + j): c for (ex, ey), c in self._terms.items()})

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded-lex order: total degree descending, then x-degree descending."""
        return sorted(self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (ex, ey), c in self.sorted_terms():
            s = str(c)
            if ex:
                s += "*x" if ex == 1 else f"*x^{ex}"
            if ey:
                s += "*y" if ey == 1 else f"*y^{ey}"
            parts.append(s)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly(p={self.p}, {self.to_text()})"


_TERM = re.compile(r"^(\d+)((?:\*[xy](?:\^\d+)?)*)$")
_FACTOR = re.compile(r"\*([xy])(?:\^(\d+))?")


def parse_bipoly(text: str, p: int) -> BiPoly:
    """Inverse of :meth:`BiPoly.to_text`."""
    text = text.strip()
    if text == "0":
        return BiPoly.zero(p)
    terms = []
    for chunk in text.split(" + "):
        match = _TERM.match(chunk.strip())
        if not match:
            raise ValueError(f"cannot parse term {chunk!r}")
        ex = ey = 0
        for var, exp in _FACTOR.findall(match.group(2)):
            e = int(exp) if exp else 1
            if var == "x":
                ex += e
            else:
                ey += e
        terms.append(((ex, ey), int(match.group(1))))
    return BiPoly(p, terms)


def poly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    if a.p != b.p:
        raise ModulusMismatch(f"F_{a.p} vs F_{b.p}")
    p = a.p
    out: dict[Monomial, int] = {}
    for (ax, ay), ac in a._terms.items():
        for (bx, by), bc in b._terms.items():
            k = (ax + bx, ay + by)
            out[k] = (out.get(k, 0) + ac * bc) % p
    return BiPoly._raw(p, {k: v for k, v in out.items() if v})


def curve_polynomial(params: CurveParams) -> BiPoly:
    """F = y^n - x - x^m."""
    p = params.p
    return BiPoly(p, [((0, params.n), 1), ((1, 0), -1), ((params.m, 0), -1)])


def trinomial_power_shift(params: CurveParams, i: int, j: int) -> BiPoly:
    """(y^n - x - x^m)^(p-1) * x^i * y^j from the closed double binomial sum.

    The (h, k) term is C(p-1, h) C(h, k) (-1)^h x^(mk + h - k + i) y^(n(p-1-h) + j):
    choose h factors from (-x - x^m) and, among them, k copies of x^m.
    """
    if i < 0 or j < 0:
        raise ValueError("shift exponents must be non-negative")
    p, n, m = params.p, params.n, params.m
    out: dict[Monomial, int] = {}
    for h in range(p):
        ch = binomial_mod(p - 1, h, p)
        sign = -1 if h % 2 else 1
        ey = n * (p - 1 - h) + j
        for k in range(h + 1):
            key = (m * k + h - k + i, ey)
            out[key] = (out.get(key, 0) + sign * ch * binomial_mod(h, k, p)) % p
    return BiPoly._raw(p, {k: v for k, v in out.items() if v})


def nabla(a: BiPoly, p: int | None = None) -> BiPoly:
    """Keep the coefficients at (I*p + p - 1, J*p + p - 1), moved to (I*p, J*p).

    Equal to d^(p-1)/dx^(p-1) d^(p-1)/dy^(p-1): the falling factorial of length
    p - 1 vanishes mod p unless the exponent is -1 mod p, and is then
    (p-1)! = -1 by Wilson, once per variable.
    """
    p = a.p if p is None else p
    out = {}
    for (ex, ey), c in a._terms.items():
        if ex % p == p - 1 and ey % p == p - 1:
            out[(ex - (p - 1), ey - (p - 1))] = c
    return BiPoly._raw(a.p, out)


def root_exponents(a: BiPoly, p: int | None = None) -> BiPoly:
    """Divide every exponent by p; coefficients in F_p are fixed by Frobenius."""
    p = a.p if p is None else p
    out = {}
    for (ex, ey), c in a._terms.items():
        if ex % p or ey % p:
            raise NonDivisibleExponent(f"x^{ex}*y^{ey} is not a p-th power monomial (p={p})")
        out[(ex // p, ey // p)] = c
    return BiPoly._raw(a.p, out)


def curve_reduce(a: BiPoly, params: CurveParams) -> BiPoly:
    """Rewrite y^n -> x^m + x until every y-exponent is below n."""
    p, n, m = params.p, params.n, params.m
    out: dict[Monomial, int] = {}
    for (ex, ey), c in a._terms.items():
        t, r = divmod(ey, n)
        if t == 0:
            out[(ex, ey)] = (out.get((ex, ey), 0) + c) % p
            continue
        # x^ex y^r (x^m + x)^t
        for u in range(t + 1):
            b = binomial_mod(t, u, p)
            if b:
                key = (ex + m * u + (t - u), r)
                out[key] = (out.get(key, 0) + c * b) % p
    return BiPoly._raw(p, {k: v for k, v in out.items() if v})
