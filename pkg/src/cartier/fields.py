"""Exact arithmetic in F_p and in extension fields F_{p^e}.

Prime-field values are plain Python ints in ``[0, p)`` inside the hot loops;
:class:`FpElement` and :class:`ExtElement` are the typed wrappers used at the
API boundary. Extension fields are built as ``F_p[x] / (f)`` for the
lexicographically smallest monic irreducible ``f`` of the requested degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DivisionByZero, InvalidPrime, ModulusMismatch, UndefinedPower


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse modulo {p}")
    r0, r1 = p, a
    t0, t1 = 0, 1
    while r1:
        quot = r0 // r1
        r0, r1 = r1, r0 - quot * r1
        t0, t1 = t1, t0 - quot * t1
    if r0 != 1:
        raise DivisionByZero(f"{a} is not invertible modulo {p}")
    return t0 % p


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InvalidPrime(f"{self.p!r} is not prime")

    def __int__(self) -> int:
        return self.p

    def __call__(self, value: int) -> FpElement:
        return FpElement(value % self.p, self)


@dataclass(frozen=True)
class FpElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            object.__setattr__(self, "value", self.value % self.modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def _new(self, v: int) -> FpElement:
        return FpElement(v % self.p, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * inv_mod(o, self.p))

    def __pow__(self, k: int):
        if k == 0 and self.value == 0:
            raise UndefinedPower("0^0 is undefined")
        if k < 0:
            return fp_inv(self) ** (-k)
        return self._new(pow(self.value, k, self.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


def fp_inv(a: FpElement) -> FpElement:
    return FpElement(inv_mod(a.value, a.p), a.modulus)


# Univariate polynomials over F_p: tuples of ints, constant term first, no
# trailing zeros (the zero polynomial is the empty tuple).

def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def upoly_mod(a: Sequence[int], f: Sequence[int], p: int) -> tuple[int, ...]:
    a = [c % p for c in a]
    df = len(f) - 1
    lead_inv = inv_mod(f[-1], p)
    for top in range(len(a) - 1, df - 1, -1):
        c = a[top] * lead_inv % p
        if c:
            shift = top - df
            for k, fk in enumerate(f):
                a[shift + k] = (a[shift + k] - c * fk) % p
    return _trim(a[:df] if len(a) > df else a)


def upoly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return upoly_mod(prod, f, p)


def upoly_powmod(a: Sequence[int], k: int, f: Sequence[int], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = upoly_mod(a, f, p)
    while k:
        if k & 1:
            result = upoly_mulmod(result, base, f, p)
        base = upoly_mulmod(base, base, f, p)
        k >>= 1
    return result


def upoly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, upoly_mod(a, b, p)
    if not a:
        return a
    lead_inv = inv_mod(a[-1], p)
    return tuple(c * lead_inv % p for c in a)


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic ``f`` of degree ``e`` over F_p."""
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    # cheap rejection: a root in F_p
    for r in range(p):
        if sum(c * pow(r, k, p) for k, c in enumerate(f)) % p == 0:
            return False
    x = (0, 1)
    if upoly_powmod(x, p**e, f, p) != x:
        return False
    for r in prime_factors(e):
        xq = list(upoly_powmod(x, p ** (e // r), f, p)) + [0, 0]
        xq[1] -= 1
        if upoly_gcd(_trim(xq), f, p) != (1,):
            return False
    return True


def irreducibles(p: int, e: int) -> Iterator[tuple[int, ...]]:
    """Monic irreducibles of degree ``e`` in lexicographic order.

    Polynomials are compared by their coefficient vectors read from the
    x^(e-1) coefficient down to the constant term, so the scan is the base-p
    count ``k = 0, 1, 2, ...`` with the constant term as the least significant
    digit.
    """
    for k in range(p**e):
        coeffs = []
        for _ in range(e):
            k, c = divmod(k, p)
            coeffs.append(c)
        f = tuple(coeffs) + (1,)
        if is_irreducible(f, p):
            yield f


def find_irreducible(p: int | PrimeModulus, e: int, index: int = 0) -> ExtFieldCtx:
    """Field context for the ``index``-th smallest monic irreducible of degree ``e``."""
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    mod = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
    for k, f in enumerate(irreducibles(mod.p, e)):
        if k == index:
            return ExtFieldCtx(mod, e, f)
    raise ValueError(f"fewer than {index + 1} irreducibles of degree {e} over F_{mod.p}")


@dataclass(frozen=True)
class ExtFieldCtx:
    """F_{p^e} as F_p[x] / (modulus_poly).

    ``modulus_poly`` holds ``e + 1`` coefficients, constant term first, monic.
    Raw elements are tuples of exactly ``e`` ints.
    """

    modulus: PrimeModulus
    e: int
    modulus_poly: tuple[int, ...]

    def __post_init__(self):
        if len(self.modulus_poly) != self.e + 1 or self.modulus_poly[-1] != 1:
            raise ValueError("modulus polynomial must be monic of degree e")
        if not is_irreducible(self.modulus_poly, self.p):
            raise ValueError(f"{self.modulus_poly} is reducible over F_{self.p}")

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def order(self) -> int:
        return self.p**self.e

    def _pad(self, c: Sequence[int]) -> tuple[int, ...]:
        return tuple(c) + (0,) * (self.e - len(c))

    # raw tuple arithmetic, used by the point counter
    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return self._pad(upoly_mulmod(_trim(list(a)), _trim(list(b)), self.modulus_poly, self.p))

    def pow(self, a: tuple[int, ...], k: int) -> tuple[int, ...]:
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0 and not any(a):
            raise UndefinedPower("0^0 is undefined")
        result = self._pad((1,))
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def raw_elements(self) -> Iterator[tuple[int, ...]]:
        p, e = self.p, self.e
        for k in range(p**e):
            c = []
            for _ in range(e):
                k, r = divmod(k, p)
                c.append(r)
            yield tuple(c)

    def __call__(self, coeffs: Sequence[int] | int) -> ExtElement:
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        if len(coeffs) > self.e:
            coeffs = upoly_mod(coeffs, self.modulus_poly, self.p)
        return ExtElement(self._pad([c % self.p for c in coeffs]), self)

    def zero(self) -> ExtElement:
        return self(0)

    def one(self) -> ExtElement:
        return self(1)

    def gen(self) -> ExtElement:
        """The class of x (equals the constant root when e = 1)."""
        return self((0, 1))

    def elements(self) -> Iterator[ExtElement]:
        for c in self.raw_elements():
            yield ExtElement(c, self)


@dataclass(frozen=True)
class ExtElement:
    coeffs: tuple[int, ...]
    ctx: ExtFieldCtx

    def _other(self, other) -> tuple[int, ...]:
        if isinstance(other, ExtElement):
            if other.ctx != self.ctx:
                raise ModulusMismatch("elements of different extension fields")
            return other.coeffs
        if isinstance(other, int):
            return self.ctx(other).coeffs
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ExtElement(self.ctx.add(self.coeffs, o), self.ctx)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return ExtElement(tuple(-c % p for c in self.coeffs), self.ctx)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-ExtElement(o, self.ctx))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ExtElement(self.ctx.mul(self.coeffs, o), self.ctx)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return ext_pow(self, k)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"ExtElement({list(self.coeffs)} mod {list(self.ctx.modulus_poly)}, p={self.ctx.p})"


def ext_pow(a: ExtElement, k: int) -> ExtElement:
    """``a ** k`` by square-and-multiply; ``0 ** 0`` raises :class:`UndefinedPower`."""
    return ExtElement(a.ctx.pow(a.coeffs, k), a.ctx)
