"""Short Weierstrass curves y^2 = x^3 + ax + b over F_p, p > 3.

Point counts are naive (one Legendre lookup per x), which is fine up to
p = 10^6.  Derived equivalence of elliptic curves over an algebraically
closed field is isomorphism, so it is tested by comparing j-invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Sequence

import numpy as np

from .errors import (
    EmptyList,
    FieldTooLarge,
    MixedCharacteristic,
    NotPrime,
    SingularCurve,
    SmallCharacteristic,
)

MAX_P = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CurveSpec:
    p: int
    a: int
    b: int

    @property
    def discriminant(self) -> int:
        """``4a^3 + 27b^2`` mod p (the usual -16 factor dropped)."""
        return (4 * self.a**3 + 27 * self.b**2) % self.p

    def __str__(self):
        return f"y^2 = x^3 + {self.a}x + {self.b} over F_{self.p}"


@dataclass(frozen=True)
class CurveAnalysis:
    curve: CurveSpec
    point_count: int
    trace: int
    p_rank: int
    ordinary: bool
    j: int
    aut_order_geometric: int
    # automorphisms defined over F_p itself
    aut_order_rational: int
    notes: list[str] = field(default_factory=list, compare=False)


def parse_curve(p: int, a: int, b: int) -> CurveSpec:
    p, a, b = int(p), int(a), int(b)
    if p in (2, 3):
        raise SmallCharacteristic(f"characteristic {p} is excluded; need p > 3")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    curve = CurveSpec(p, a % p, b % p)
    if curve.discriminant == 0:
        raise SingularCurve(f"4a^3 + 27b^2 = 0 mod {p} for a={a}, b={b}")
    return curve


def _check_size(curve: CurveSpec) -> None:
    if curve.p > MAX_P:
        raise FieldTooLarge(f"p = {curve.p} exceeds the naive counting cap {MAX_P}")


def count_points(curve: CurveSpec) -> int:
    """#E(F_p), point at infinity included."""
    _check_size(curve)
    p, a, b = curve.p, curve.a, curve.b
    xs = np.arange(p, dtype=np.int64)
    # sqrt_count[v] = #{y : y^2 = v} = 1 + legendre(v)
    sqrt_count = np.bincount(xs * xs % p, minlength=p)
    fx = ((xs * xs % p) * xs + a * xs + b) % p
    return 1 + int(sqrt_count[fx].sum())


def j_invariant(curve: CurveSpec) -> int:
    p = curve.p
    num = 1728 * 4 * pow(curve.a, 3, p)
    return num * pow(curve.discriminant, -1, p) % p


def aut_order_geometric(curve: CurveSpec) -> int:
    j = j_invariant(curve)
    if j == 0:
        return 6
    if j == 1728 % curve.p:
        return 4
    return 2


def analyze(curve: CurveSpec) -> CurveAnalysis:
    n = count_points(curve)
    t = curve.p + 1 - n
    ordinary = t % curve.p != 0
    geo = aut_order_geometric(curve)
    return CurveAnalysis(
        curve=curve,
        point_count=n,
        trace=t,
        p_rank=1 if ordinary else 0,
        ordinary=ordinary,
        j=j_invariant(curve),
        aut_order_geometric=geo,
        aut_order_rational=gcd(geo, curve.p - 1),
    )


def hasse_ok(analysis: CurveAnalysis) -> bool:
    # |t| <= 2 sqrt(p)  <=>  t^2 <= 4p
    return analysis.trace**2 <= 4 * analysis.curve.p


def hasse_interval(p: int) -> tuple[int, int]:
    """Integer range of point counts allowed by the Hasse bound."""
    r = isqrt(4 * p)
    return p + 1 - r, p + 1 + r


def derived_equivalent(e: CurveSpec, f: CurveSpec) -> bool:
    """Isomorphic over the algebraic closure of F_p (equal j-invariants).

    Quadratic twists are identified, even when they are not isomorphic
    over F_p itself.
    """
    if e.p != f.p:
        raise MixedCharacteristic(f"curves live over F_{e.p} and F_{f.p}")
    return j_invariant(e) == j_invariant(f)


def derived_equivalence_notes(e: CurveSpec, f: CurveSpec) -> list[str]:
    if not derived_equivalent(e, f):
        return []
    notes = ["equivalence is geometric: j-invariants agree over the algebraic closure"]
    te, tf = analyze(e).trace, analyze(f).trace
    if te != tf:
        notes.append(
            f"traces differ ({te} vs {tf}): the curves are twists, not isomorphic over F_{e.p}"
        )
    return notes


def product_p_rank(curves: Sequence[CurveSpec]) -> int:
    if not curves:
        raise EmptyList("need at least one curve")
    p = curves[0].p
    for c in curves[1:]:
        if c.p != p:
            raise MixedCharacteristic(f"curves live over F_{p} and F_{c.p}")
    return sum(analyze(c).p_rank for c in curves)


def quadratic_twist(curve: CurveSpec, c: int) -> CurveSpec:
    """(a c^2, b c^3); a genuine twist when c is a non-square mod p."""
    p = curve.p
    c %= p
    if c == 0:
        raise ValueError("twisting parameter must be a unit")
    return CurveSpec(p, curve.a * c * c % p, curve.b * c**3 % p)


def legendre(v: int, p: int) -> int:
    v %= p
    if v == 0:
        return 0
    return 1 if pow(v, (p - 1) // 2, p) == 1 else -1


def nonsingular_curves(p: int):
    """Every nonsingular short Weierstrass curve over F_p, in (a, b) order."""
    for a in range(p):
        for b in range(p):
            if (4 * a**3 + 27 * b * b) % p:
                yield CurveSpec(p, a, b)
