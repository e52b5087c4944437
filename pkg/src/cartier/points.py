"""Brute-force rational point counts and the maximality check."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .curve import CurveParams, genus
from .errors import FieldTooLarge
from .fields import ExtFieldCtx, find_irreducible

MAX_FIELD_ORDER = 10**7


@dataclass(frozen=True)
class PointCount:
    e: int
    affine: int
    at_infinity: int
    total: int
    hasse_weil_interval: tuple[int, int] | None

    @property
    def within_hasse_weil(self) -> bool | None:
        if self.hasse_weil_interval is None:
            return None
        lo, hi = self.hasse_weil_interval
        return lo <= self.total <= hi


def count_points(params: CurveParams, e: int, ctx: ExtFieldCtx | None = None) -> PointCount:
    """#X(F_(p^e)) on the smooth model.

    For each x the fibre y^n = z has 1 point if z = 0, d = gcd(n, p^e - 1)
    points if z^((p^e - 1)/d) = 1 and none otherwise. Since gcd(n, m) = 1 the
    pole orders of x and y at infinity are coprime, so exactly one place lies
    over x = oo and it is rational.
    """
    p, n, m = params.p, params.n, params.m
    order = p**e
    if order > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"F_{p}^{e} has {order} elements (limit {MAX_FIELD_ORDER})")
    g = genus(params)
    if ctx is None:
        ctx = find_irreducible(p, e)
    elif ctx.p != p or ctx.e != e:
        raise ValueError("field context does not match (p, e)")
    d = gcd(n, order - 1)
    test_exp = (order - 1) // d
    one = ctx.one().coeffs
    affine = 0
    for x in ctx.raw_elements():
        z = ctx.add(ctx.pow(x, m), x)
        if not any(z):
            affine += 1
        elif ctx.pow(z, test_exp) == one:
            affine += d
    total = affine + 1
    interval = None
    if e % 2 == 0:
        root = p ** (e // 2)
        interval = (order + 1 - 2 * g * root, order + 1 + 2 * g * root)
    return PointCount(e, affine, 1, total, interval)


def is_maximal(params: CurveParams) -> bool:
    q = params.q
    pc = count_points(params, 2 * params.s)
    return pc.total == q * q + 1 + 2 * genus(params) * q
