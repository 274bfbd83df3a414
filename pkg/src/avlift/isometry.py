"""2x2 matrices over End(A), modelled by Z or an imaginary quadratic order.

An endomorphism of A x A^ is a block matrix ``(a b; c d)``.  With a principal
polarization identifying A^ with A, the dual of an endomorphism is its image
under the Rosati involution, which on a quadratic order ``Z[w]`` is complex
conjugation ``w -> -b - w``.  From f one builds

    hat(f)   = ( d^   b^ ;  c^  a^ )
    tilde(f) = ( d^  -b^ ; -c^  a^ )

and f is isometric when tilde(f) is its inverse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ec_arith import CurveSpec, count_points
from .errors import BadInput, RingMismatch, SearchSpaceTooLarge

ENUMERATION_LIMIT = 10**8


@dataclass(frozen=True)
class EndRing:
    """``Z`` (kind "Z") or ``Z[w]`` with ``w^2 + b w + c = 0`` (kind "order")."""

    kind: str = "Z"
    b: int = 0
    c: int = 0

    def __post_init__(self):
        if self.kind == "Z":
            if self.b or self.c:
                raise BadInput("Z takes no parameters", field="ring")
        elif self.kind == "order":
            if self.discriminant >= 0:
                raise BadInput(
                    f"w^2 + {self.b}w + {self.c} has discriminant {self.discriminant} >= 0; "
                    "need an imaginary quadratic order",
                    field="ring",
                )
        else:
            raise BadInput(f"unknown ring kind {self.kind!r}", field="ring")

    @classmethod
    def integers(cls) -> EndRing:
        return cls("Z")

    @classmethod
    def order(cls, b: int, c: int) -> EndRing:
        return cls("order", b, c)

    @classmethod
    def parse(cls, text: str) -> EndRing:
        """``Z``, ``Z[i]``, ``Z[w]`` (w^2+w+1=0) or ``Q(b,c)``."""
        t = text.strip().replace(" ", "")
        if t in ("Z", "ZZ"):
            return cls.integers()
        if t == "Z[i]":
            return cls.order(0, 1)
        if t in ("Z[w]", "Z[omega]"):
            return cls.order(1, 1)
        if t.startswith("Q(") and t.endswith(")"):
            try:
                b, c = (int(x) for x in t[2:-1].split(","))
            except ValueError:
                raise BadInput(f"cannot parse ring {text!r}", field="ring") from None
            return cls.order(b, c)
        raise BadInput(f"cannot parse ring {text!r}; use Z, Z[i], Z[w] or Q(b,c)", field="ring")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.c

    @property
    def coords(self) -> int:
        return 1 if self.kind == "Z" else 2

    def __str__(self):
        return "Z" if self.kind == "Z" else f"Q({self.b},{self.c})"

    def __call__(self, u: int, v: int = 0) -> OrderElement:
        return OrderElement(u, v, self)


@dataclass(frozen=True)
class OrderElement:
    """``u + v w`` in ``ring``."""

    u: int
    v: int = 0
    ring: EndRing = EndRing()

    def __post_init__(self):
        if self.ring.kind == "Z" and self.v:
            raise BadInput("elements of Z have no w-coordinate", field="v")

    def _same(self, other: OrderElement) -> None:
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: OrderElement) -> OrderElement:
        self._same(other)
        return OrderElement(self.u + other.u, self.v + other.v, self.ring)

    def __neg__(self) -> OrderElement:
        return OrderElement(-self.u, -self.v, self.ring)

    def __sub__(self, other: OrderElement) -> OrderElement:
        return self + (-other)

    def __mul__(self, other: OrderElement) -> OrderElement:
        self._same(other)
        b, c = self.ring.b, self.ring.c
        vv = self.v * other.v
        # w^2 = -b w - c
        return OrderElement(
            self.u * other.u - c * vv,
            self.u * other.v + self.v * other.u - b * vv,
            self.ring,
        )

    def conj(self) -> OrderElement:
        # conj(w) = -b - w
        return OrderElement(self.u - self.ring.b * self.v, -self.v, self.ring)

    def norm(self) -> int:
        return self.u * self.u - self.ring.b * self.u * self.v + self.ring.c * self.v * self.v

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def coordinates(self) -> tuple[int, ...]:
        return (self.u,) if self.ring.kind == "Z" else (self.u, self.v)

    def __str__(self):
        if self.ring.kind == "Z" or self.v == 0:
            return str(self.u)
        if self.u == 0:
            return f"{self.v}w"
        return f"{self.u}{self.v:+d}w"


@dataclass(frozen=True)
class EndMatrix:
    a: OrderElement
    b: OrderElement
    c: OrderElement
    d: OrderElement

    def __post_init__(self):
        rings = {x.ring for x in self.entries}
        if len(rings) != 1:
            raise RingMismatch("matrix entries live in different rings")

    @property
    def entries(self) -> tuple[OrderElement, ...]:
        return (self.a, self.b, self.c, self.d)

    @property
    def ring(self) -> EndRing:
        return self.a.ring

    @classmethod
    def from_ints(cls, ring: EndRing, values) -> EndMatrix:
        """4 integers (u per entry) for Z, 8 integers (u, v per entry) for an order."""
        values = [int(x) for x in values]
        k = ring.coords
        if len(values) != 4 * k:
            raise BadInput(
                f"ring {ring} needs {4 * k} integers, got {len(values)}", field="matrix"
            )
        return cls(*(ring(*values[i : i + k]) for i in range(0, 4 * k, k)))

    @classmethod
    def identity(cls, ring: EndRing) -> EndMatrix:
        return cls(ring(1), ring(0), ring(0), ring(1))

    def coordinates(self) -> tuple[int, ...]:
        return tuple(x for e in self.entries for x in e.coordinates())

    def __matmul__(self, other: EndMatrix) -> EndMatrix:
        return multiply(self, other)

    def __str__(self):
        return f"({self.a} {self.b}; {self.c} {self.d})"


def hat(f: EndMatrix) -> EndMatrix:
    return EndMatrix(f.d.conj(), f.b.conj(), f.c.conj(), f.a.conj())


def tilde(f: EndMatrix) -> EndMatrix:
    return EndMatrix(f.d.conj(), -f.b.conj(), -f.c.conj(), f.a.conj())


def multiply(f: EndMatrix, g: EndMatrix) -> EndMatrix:
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    return EndMatrix(
        f.a * g.a + f.b * g.c,
        f.a * g.b + f.b * g.d,
        f.c * g.a + f.d * g.c,
        f.c * g.b + f.d * g.d,
    )


def is_isometric(f: EndMatrix) -> bool:
    one = EndMatrix.identity(f.ring)
    t = tilde(f)
    return multiply(t, f) == one and multiply(f, t) == one


def determinant(f: EndMatrix) -> OrderElement:
    return f.a * f.d - f.b * f.c


def enumerate_isometric(ring: EndRing, height: int) -> list[EndMatrix]:
    """Isometric matrices with every integer coordinate in [-height, height].

    Returned in lexicographic order of the coordinate tuple
    (a.u, a.v, b.u, ..., d.v).
    """
    if height < 0:
        raise BadInput(f"height must be nonnegative, got {height}", field="height")
    size = (2 * height + 1) ** (4 * ring.coords)
    if size > ENUMERATION_LIMIT:
        raise SearchSpaceTooLarge(
            f"{size} candidate matrices exceeds the cap of {ENUMERATION_LIMIT}",
            field="height",
        )
    span = range(-height, height + 1)
    out = []
    for coords in itertools.product(span, repeat=4 * ring.coords):
        f = EndMatrix.from_ints(ring, coords)
        if is_isometric(f):
            out.append(f)
    return out


@dataclass(frozen=True)
class AutoequivKernelReport:
    """Counting data for ``0 -> Z + (A x A^) -> Aut D(A) -> U(A x A^) -> 0``.

    The free part is the shift; the finite part counts translations by
    E(F_q) and twists by Pic^0 = E^(F_q), and E^ = E for an elliptic curve.
    """

    free_rank: int
    point_count: int
    dual_point_count: int

    @property
    def finite_order(self) -> int:
        return self.point_count * self.dual_point_count


def kernel_report(curve: CurveSpec) -> AutoequivKernelReport:
    n = count_points(curve)
    return AutoequivKernelReport(free_rank=1, point_count=n, dual_point_count=n)
