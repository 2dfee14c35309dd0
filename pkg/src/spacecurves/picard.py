"""Divisor arithmetic on a smooth degree-s surface S containing a line.

The Picard lattice is taken to be Z f1 + Z f2 where f1 is the line and
f2 = H - f1 is the residual plane curve of degree s-1.  Intersection numbers

    f1.f1 = 2 - s,   f1.f2 = s - 1,   f2.f2 = 0

so that H.H = s and the canonical class is K = (s - 4) H.

Cohomology of O_S(C) is only known on the regions covered by two vanishing
lemmas; outside them :func:`h1_surface` answers ``Unknown`` instead of
guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._intarith import binom, check_inputs, checked, exact_div
from .errors import HalfIntegerChi, HalfIntegerGenus

UNKNOWN_OUTSIDE_LEMMAS = "outside-vanishing-lemmas"


@dataclass(frozen=True)
class SurfaceContext:
    s: int

    def __post_init__(self):
        check_inputs(s=self.s)
        if self.s < 4:
            raise ValueError(f"surface degree must be >= 4, got {self.s}")

    @property
    def hyperplane(self) -> DivisorClass:
        return DivisorClass(1, 1)

    @property
    def canonical(self) -> DivisorClass:
        return DivisorClass(self.s - 4, self.s - 4)

    @property
    def chi_structure_sheaf(self) -> int:
        # q = 0 and p_g = binom(s-1, 3) for a smooth surface in P^3
        return 1 + binom(self.s - 1, 3)


@dataclass(frozen=True)
class DivisorClass:
    """The class a*f1 + b*f2.  Negative coefficients are allowed."""

    a: int
    b: int

    def __post_init__(self):
        check_inputs(a=self.a, b=self.b)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __rmul__(self, n: int) -> DivisorClass:
        return DivisorClass(n * self.a, n * self.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def t(self, ctx: SurfaceContext) -> int:
        """C.f1 = (s-1)b - (s-2)a; recomputed on every call."""
        return (ctx.s - 1) * self.b - (ctx.s - 2) * self.a


LINE = DivisorClass(1, 0)
RESIDUAL = DivisorClass(0, 1)


def intersect(d1: DivisorClass, d2: DivisorClass, ctx: SurfaceContext) -> int:
    s = ctx.s
    return checked(d1.a * d2.a * (2 - s) + (d1.a * d2.b + d2.a * d1.b) * (s - 1))


def degree(c: DivisorClass, ctx: SurfaceContext) -> int:
    return checked(c.a + (ctx.s - 1) * c.b)


def genus(c: DivisorClass, ctx: SurfaceContext) -> int:
    """Arithmetic genus from the closed formula in (s, a, b).

    The value is cross-checked against adjunction 1 + (C^2 + C.K)/2; the two
    must agree and both must be integers.
    """
    s, a, b = ctx.s, c.a, c.b
    twice = (s - 4) * a + (s - 4) * (s - 1) * b - (s - 2) * a * a
    closed = 1 + (s - 1) * a * b + exact_div(twice, 2, HalfIntegerGenus, "genus")
    adjunction = 1 + exact_div(
        intersect(c, c, ctx) + intersect(c, ctx.canonical, ctx), 2, HalfIntegerGenus, "adjunction"
    )
    if closed != adjunction:
        raise HalfIntegerGenus(f"closed form {closed} != adjunction {adjunction} for {c}")
    return checked(closed)


def chi_surface(c: DivisorClass, ctx: SurfaceContext) -> int:
    """Euler characteristic of O_S(C) by Riemann-Roch on S."""
    num = intersect(c, c, ctx) - intersect(c, ctx.canonical, ctx)
    return checked(ctx.chi_structure_sheaf + exact_div(num, 2, HalfIntegerChi, "chi"))


# Cone predicates.  On this lattice C.f1 = t and C.f2 = (s-1)a.

def is_effective(c: DivisorClass, ctx: SurfaceContext) -> bool:
    return c.a >= 0 and c.b >= 0


def is_nef(c: DivisorClass, ctx: SurfaceContext) -> bool:
    return (ctx.s - 1) * c.b >= (ctx.s - 2) * c.a >= 0


def is_base_point_free(c: DivisorClass, ctx: SurfaceContext) -> bool:
    return intersect(c, LINE, ctx) >= 0 and intersect(c, RESIDUAL, ctx) >= 0


def has_smooth_irreducible_member(c: DivisorClass, ctx: SurfaceContext) -> bool:
    return intersect(c, LINE, ctx) >= 0 and intersect(c, RESIDUAL, ctx) > 0


@dataclass(frozen=True)
class CohomologyAnswer:
    """A cohomology dimension, or the reason it is not determined.

    Exactly one of ``value`` and ``reason`` is set.  Build instances with
    :meth:`known` / :meth:`unknown`.
    """

    value: int | None = None
    reason: str | None = None

    def __post_init__(self):
        if (self.value is None) == (self.reason is None):
            raise ValueError("exactly one of value and reason must be given")
        if self.value is not None and self.value < 0:
            raise ValueError(f"dimension must be non-negative, got {self.value}")

    @classmethod
    def known(cls, value: int) -> CohomologyAnswer:
        return cls(value=value)

    @classmethod
    def unknown(cls, reason: str) -> CohomologyAnswer:
        return cls(reason=reason)

    @property
    def is_known(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        if self.is_known:
            return {"known": True, "value": self.value}
        return {"known": False, "reason": self.reason}

    def __str__(self):
        return f"Known({self.value})" if self.is_known else f"Unknown({self.reason})"


def _h1_vanishing_lemma(a: int, t: int, s: int) -> int | None:
    # region t >= -2, a > s-4
    if a <= s - 4:
        return None
    if t > -2 or (t == -2 and a == s - 3):
        return 0
    if t == -2:
        return 1
    return None


def _h1_negative_t_lemma(a: int, t: int, s: int) -> int | None:
    # region -4 <= t <= -1, a > s-2
    if a <= s - 2 or not -4 <= t <= -1:
        return None
    if (t, s) == (-4, 4):
        return 4
    return -t - 1


def h1_surface(c: DivisorClass, ctx: SurfaceContext) -> CohomologyAnswer:
    """dim H^1(S, O_S(C)) where one of the two case tables applies."""
    s, a, t = ctx.s, c.a, c.t(ctx)
    first = _h1_vanishing_lemma(a, t, s)
    second = _h1_negative_t_lemma(a, t, s)
    if first is not None and second is not None and first != second:
        raise AssertionError(f"case tables disagree on {c} at s={s}: {first} vs {second}")
    value = first if first is not None else second
    if value is None:
        return CohomologyAnswer.unknown(UNKNOWN_OUTSIDE_LEMMAS)
    return CohomologyAnswer.known(value)


def h1_ideal(c: DivisorClass, n: int, ctx: SurfaceContext) -> CohomologyAnswer:
    """dim H^1(P^3, I_C(n)) for a curve C on S.

    H^1(I_C(n)) = H^1(O_S(nH - C)), which is Serre dual to
    H^1(O_S(C + (s - 4 - n)H)).
    """
    return h1_surface(c + (ctx.s - 4 - n) * ctx.hyperplane, ctx)
