"""Curve parameters, genus and holomorphic-differential bases.

The curve is the smooth model of ``y^n = x^m + x`` with ``n = (q + 1)/2`` and
``q = p^s``. Holomorphic differentials are written ``x^(a-1) dx / y^b``; as
``F_y = n*y^(n-1)`` this is ``h dx / F_y`` with ``h = x^(a-1) * y^(n-1-b)``
up to the constant ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from .errors import (
    BasisCountMismatch,
    EvenCharacteristicUnsupported,
    HypothesisFailure,
    InvalidPrime,
    ParameterError,
    ZeroGenus,
)
from .fields import is_prime


@dataclass(frozen=True)
class HypothesisFlags:
    gcd_n_m: bool
    gcd_q_n: bool
    gcd_q_m_minus_1: bool
    m_form: bool
    gcd_p_m_minus_1: bool

    @property
    def all_hold(self) -> bool:
        return all(self.as_dict().values())

    def as_dict(self) -> dict[str, bool]:
        return {
            "gcd_n_m": self.gcd_n_m,
            "gcd_q_n": self.gcd_q_n,
            "gcd_q_m_minus_1": self.gcd_q_m_minus_1,
            "m_form": self.m_form,
            "gcd_p_m_minus_1": self.gcd_p_m_minus_1,
        }

    def failed(self) -> list[str]:
        return [k for k, v in self.as_dict().items() if not v]


def _m_form(p: int, s: int, m: int) -> bool:
    if m in (2, 3):
        return True
    b, r = 0, m
    while r % p == 0:
        r //= p
        b += 1
    return r == 1 and b >= 1 and s % b == 0


@dataclass(frozen=True)
class CurveParams:
    p: int
    s: int
    m: int
    hypotheses: HypothesisFlags = field(compare=False)

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def n(self) -> int:
        return (self.q + 1) // 2

    @property
    def coprime(self) -> bool:
        return self.hypotheses.gcd_n_m

    @property
    def g(self) -> int | None:
        """(n-1)(m-1)/2, or None when gcd(n, m) > 1 and the formula does not apply."""
        if not self.coprime:
            return None
        return (self.n - 1) * (self.m - 1) // 2

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.p, self.s, self.m)

    def __str__(self) -> str:
        return f"(p={self.p}, s={self.s}, m={self.m})"


def validate_params(p: int, s: int, m: int, strict: bool = False) -> CurveParams:
    """Build :class:`CurveParams`, recording which curve hypotheses hold.

    Structural problems (non-prime p, p <= 3, s < 1, m < 2) always raise.
    Hypothesis failures only raise with ``strict=True``.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidPrime(f"p = {p!r} is not prime")
    if p == 2:
        raise EvenCharacteristicUnsupported("characteristic 2 is not supported")
    if p == 3:
        raise ParameterError("characteristic 3 is not supported (need p > 3)")
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    q = p**s
    n = (q + 1) // 2
    flags = HypothesisFlags(
        gcd_n_m=gcd(n, m) == 1,
        gcd_q_n=gcd(q, n) == 1,
        gcd_q_m_minus_1=gcd(q, m - 1) == 1,
        m_form=_m_form(p, s, m),
        gcd_p_m_minus_1=gcd(p, m - 1) == 1,
    )
    params = CurveParams(p, s, m, flags)
    if params.g == 0:
        raise ZeroGenus(f"{params} has genus 0")
    if strict and not flags.all_hold:
        raise HypothesisFailure(f"{params}: failed hypotheses {', '.join(flags.failed())}")
    return params


def genus(params: CurveParams) -> int:
    if not params.coprime:
        raise ParameterError(f"{params}: genus formula needs gcd(n, m) = 1")
    g = (params.n - 1) * (params.m - 1) // 2
    assert g == (params.q - 1) * (params.m - 1) // 4
    return g


@dataclass(frozen=True)
class DifferentialBasis:
    """Entries ``(a, b)`` standing for ``x^(a-1) dx / y^b``, sorted by ``(b, a)``."""

    params: CurveParams
    entries: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def monomial(self, entry: tuple[int, int]) -> tuple[int, int]:
        """Exponents (i, j) of h = x^i y^j with the differential equal to h dx/F_y."""
        a, b = entry
        return a - 1, self.params.n - 1 - b

    @cached_property
    def index_of_monomial(self) -> dict[tuple[int, int], int]:
        return {self.monomial(e): k for k, e in enumerate(self.entries)}


def enumerate_basis(params: CurveParams) -> DifferentialBasis:
    """All (a, b) with 1 <= b <= n-1 and 1 <= a <= floor((m*b - 1)/n).

    At the single place over x = oo we have v(x) = -n, v(y) = -m and
    v(dx) = -n - 1, so x^(a-1) dx / y^b is regular there iff n*a <= m*b - 1.
    At the branch places y = 0 the valuation is n - 1 - b (plus n(a-1) over
    x = 0), which needs b <= n - 1.
    """
    g = genus(params)
    n, m = params.n, params.m
    entries = tuple((a, b) for b in range(1, n) for a in range(1, (m * b - 1) // n + 1))
    if len(entries) != g:
        raise BasisCountMismatch(f"{params}: {len(entries)} basis differentials, genus is {g}")
    return DifferentialBasis(params, entries)


def enumerate_paper_index_set(params: CurveParams) -> list[tuple[int, int]]:
    """Pairs (i, j) >= 0 with 1 <= n*i + m*j <= g, taken literally."""
    n, m = params.n, params.m
    g = params.g if params.g is not None else (n - 1) * (m - 1) // 2
    out = []
    for i in range(g // n + 1):
        for j in range((g - n * i) // m + 1):
            if 1 <= n * i + m * j <= g:
                out.append((i, j))
    return out


def holomorphy_valuations(params: CurveParams, a: int, b: int) -> dict[str, int]:
    """Valuations of x^(a-1) dx / y^b at every kind of place of the curve.

    Computed from local parameters rather than the closed-form bounds used in
    :func:`enumerate_basis`:

    * ``infinity``: one place, v(x) = -n, v(y) = -m, v(dx) = -n - 1;
    * ``branch_x0``: over x = 0, uniformiser y, v(x) = n, v(dx) = n - 1;
    * ``branch_other``: over the other roots of x^m + x, v(x) = 0, v(y) = 1,
      v(dx) = n - 1;
    * ``ordinary``: finite places with y != 0, where x - x0 is a uniformiser.
    """
    n, m = params.n, params.m
    return {
        "infinity": -n * (a - 1) + m * b + (-n - 1),
        "branch_x0": n * (a - 1) - b + (n - 1),
        "branch_other": -b + (n - 1),
        "ordinary": 0,
    }
