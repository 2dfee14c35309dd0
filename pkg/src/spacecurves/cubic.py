"""Curves on a smooth cubic surface (s = 3).

A curve class on the cubic is a 7-tuple (delta, m1, ..., m6) coming from the
blow-up of P^2 in six points.  This module holds the degree/genus formulas,
the conjectured non-reducedness range, the proven sub-ranges and the
existence ranges, together with a brute-force tuple enumerator that serves
as a constructive oracle for the existence claims.

Square-root inequalities are decided exactly, by squaring after clearing
denominators; no floating point is used anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from ._intarith import check_inputs, surd_sign, two_surd_sign
from .errors import InvalidTuple
from .maxgenus import max_genus


def _pairs(x: int) -> int:
    return x * (x - 1) // 2


@dataclass(frozen=True, order=True)
class SevenTuple:
    delta: int
    m: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.m) != 6:
            raise InvalidTuple(f"expected six multiplicities, got {len(self.m)}")
        object.__setattr__(self, "m", tuple(self.m))

    @classmethod
    def of(cls, delta: int, *m: int) -> SevenTuple:
        return cls(delta, tuple(m))

    @property
    def is_valid(self) -> bool:
        m = self.m
        return (
            self.delta >= m[0]
            and all(m[i] >= m[i + 1] for i in range(5))
            and m[5] >= 0
            and self.delta >= m[0] + m[1] + m[2]
        )

    def as_list(self) -> list[int]:
        return [self.delta, *self.m]

    def __str__(self):
        return "(" + ",".join(map(str, self.as_list())) + ")"


def tuple_invariants(tup: SevenTuple) -> tuple[int, int]:
    if not tup.is_valid:
        raise InvalidTuple(f"{tup} violates delta >= m1 >= ... >= m6 >= 0, delta >= m1+m2+m3")
    d = 3 * tup.delta - sum(tup.m)
    g = _pairs(tup.delta - 1) - sum(_pairs(x) for x in tup.m)
    return d, g


@dataclass(frozen=True)
class Lemma43Flags:
    unobstructed_forced: bool
    # None when d < 14 or g < 3d - 18
    h1_3_nonzero_and_lin_normal: bool | None


def lemma43_flags(tup: SevenTuple) -> Lemma43Flags:
    d, g = tuple_invariants(tup)
    flag = None
    if d >= 14 and g >= 3 * d - 18:
        flag = 1 <= tup.m[5] <= 2
    return Lemma43Flags(8 * g > d * d - 4, flag)


def is_hyperplane_multiple_shift(tup: SevenTuple, lam_min: int = 2) -> bool:
    """True for (lambda + 3k, lambda + k, k, ..., k) with lambda >= lam_min.

    These are the classes excluded from the existence statements.
    """
    k = tup.m[5]
    lam = tup.m[0] - k
    return (
        lam >= lam_min
        and tup.delta == lam + 3 * k
        and all(x == k for x in tup.m[1:])
    )


# ---------------------------------------------------------------- ranges

def conjecture_range(d: int, g: int) -> bool:
    return d >= 14 and 3 * d - 18 <= g and 8 * g <= d * d - 4


class Certificate(str, enum.Enum):
    KLEPPE_EQ42 = "KlegenEq42"
    ELLIA_GD5 = "ElliaGd5"
    THM46_T6 = "Thm46(6)"
    THM46_T7 = "Thm46(7)"
    THM46_T8 = "Thm46(8)"
    RANGE48 = "Range48"
    MAIN_C = "MainC"


_THM46 = {6: Certificate.THM46_T6, 7: Certificate.THM46_T7, 8: Certificate.THM46_T8}


def _above_quadratic_floor(d: int, g: int) -> bool:
    # g > d^2/10 - d/2 + 18
    return 10 * g > d * d - 5 * d + 180


def proven_range(d: int, g: int) -> tuple[set[Certificate], list[str]]:
    """Certificates whose numerical hypotheses hold at (d, g), plus notes.

    Linear normality of the general curve, needed by the degree-t criteria,
    is a property of the curve and is recorded as a note rather than checked.
    """
    certs: set[Certificate] = set()
    notes: list[str] = []
    if d >= 18 and 8 * g > 56 + (d - 2) ** 2:
        certs.add(Certificate.KLEPPE_EQ42)
    if d >= 21:
        g5 = max_genus(d, 5)
        if g5.is_exact and g > g5.value:
            certs.add(Certificate.ELLIA_GD5)
    for t, cert in _THM46.items():
        if d < t * t - 2 * t + 2:
            continue
        gt = max_genus(d, t)
        if not gt.is_exact:
            notes.append(f"t={t} skipped: G({d},{t}) is {gt}")
            continue
        if _above_quadratic_floor(d, g) and g > gt.value:
            certs.add(cert)
    if d >= 54 and _above_quadratic_floor(d, g):
        certs.add(Certificate.RANGE48)
    if certs & set(_THM46.values()) or Certificate.RANGE48 in certs:
        notes.append("assumes the general curve is linearly normal")
    return certs, notes


def mainC_check(tup: SevenTuple) -> bool:
    if not tup.is_valid:
        raise InvalidTuple(str(tup))
    d, _ = tuple_invariants(tup)
    m1, m2, m3, m4, m5, m6 = tup.m
    if m6 != 1 or d < 35:
        return False
    lam = m1 - 6
    if m5 >= 6:
        excluded = lam >= 2 and tup.delta == lam + 18 and (m2, m3, m4, m5) == (6, 6, 6, 6)
        return not excluded
    if m5 == 5 and m4 >= 7:
        lam = m1 - 7
        excluded = lam >= 2 and tup.delta == lam + 21 and (m2, m3, m4) == (7, 7, 7)
        return not excluded
    return False


class Existence(str, enum.Enum):
    YES = "Yes"
    EXCLUDED_PAIR = "ExcludedPair"
    NO = "No"


def shifted_lower_bound_holds(d: int, g: int, n: int) -> bool:
    """g >= (d+12-3n) sqrt(d+9-3n) + d(n - 11/2) - 35 + 3(10n - n^2)/2.

    Doubled:  2g - (2n-11)d + 70 - 30n + 3n^2 >= 2(d+12-3n) sqrt(d+9-3n).
    """
    radicand = d + 9 - 3 * n
    coeff = d + 12 - 3 * n
    if radicand < 0 or coeff < 0:
        raise ValueError(f"d={d} too small for n={n}")
    lhs = 2 * g - (2 * n - 11) * d + 70 - 30 * n + 3 * n * n
    return surd_sign(lhs, -2 * coeff, radicand) >= 0


def shifted_upper_bound_holds(d: int, g: int, n: int) -> bool:
    # g <= 1 + (d^2 + (2n-4)d - 3n^2)/8
    return 8 * g <= 8 + d * d + (2 * n - 4) * d - 3 * n * n


def existence_aux(d: int, g: int, n: int) -> bool:
    """Existence range of curves in |C + nH| with m6 = n (n = 0 is the del Pezzo range)."""
    if d <= 3 * n + 4:
        raise ValueError(f"need d > 3n + 4, got d={d}, n={n}")
    return shifted_lower_bound_holds(d, g, n) and shifted_upper_bound_holds(d, g, n)


def existence_48(d: int, g: int) -> Existence:
    if d < 14:
        raise ValueError(f"need d >= 14, got {d}")
    if (d, g) == (14, 22):
        return Existence.EXCLUDED_PAIR
    # (d+9) sqrt(d+6) - 9d/2 - 43/2 <= g <= (d^2-4)/8
    lower = surd_sign(2 * g + 9 * d + 43, -2 * (d + 9), d + 6) >= 0
    if lower and 8 * g <= d * d - 4:
        return Existence.YES
    return Existence.NO


def _twice_lower_bound(d: int, n: int) -> tuple[int, int, int]:
    """(p, q, r) with 2 * (lower end of the n-shifted range) = p + q sqrt(r), n in {1, 2}."""
    if n == 1:
        return -9 * d - 43, 2 * (d + 9), d + 6
    if n == 2:
        return -7 * d - 22, 2 * (d + 6), d + 3
    raise ValueError(f"n must be 1 or 2, got {n}")


def bound_ordering(d: int) -> dict[str, bool]:
    """Exact comparisons between the ends of the n = 1 and n = 2 ranges.

    With g1, g2 the lower ends and G1 = (d^2-2d+5)/8, G2 = (d^2-4)/8 the
    upper ends, report g1 <= g2, g2 <= G2, g2 < G1 and G1 < G2.
    """
    p1, q1, r1 = _twice_lower_bound(d, 1)
    p2, q2, r2 = _twice_lower_bound(d, 2)
    return {
        "g1<=g2": two_surd_sign(p1 - p2, q1, r1, -q2, r2) <= 0,
        # 8 g2 = 4 (p2 + q2 sqrt r2)
        "g2<=G2": surd_sign(4 * p2 - (d * d - 4), 4 * q2, r2) <= 0,
        "g2<G1": surd_sign(4 * p2 - (d * d - 2 * d + 5), 4 * q2, r2) < 0,
        "G1<G2": d * d - 2 * d + 5 < d * d - 4,
    }


def gap_integers(d: int) -> list[int]:
    """Integers k with G1 < k < g2, i.e. genera covered by neither shifted range."""
    p2, q2, r2 = _twice_lower_bound(d, 2)
    k = (d * d - 2 * d + 5) // 8 + 1
    out = []
    while surd_sign(2 * k - p2, -q2, r2) < 0:
        out.append(k)
        k += 1
    return out


UNOBSTRUCTED_EXCLUDED = frozenset({(30, 91), (33, 103), (34, 109)})


def existence_unobstructed(d: int, g: int) -> bool:
    """Range 3d - 17 + (d-9)(d-18)/18 <= g <= 1 + d(d-3)/6, d > 9, minus three pairs."""
    if d <= 9 or (d, g) in UNOBSTRUCTED_EXCLUDED:
        return False
    return 18 * g >= 18 * (3 * d - 17) + (d - 9) * (d - 18) and 6 * g <= 6 + d * (d - 3)


# ------------------------------------------------------------ enumeration

def _parts(total: int, pairs: int, k: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing k-tuples <= cap with given sum and sum of binom(x, 2), largest first."""
    if k == 0:
        if total == 0 and pairs == 0:
            yield ()
        return
    if total < 0 or pairs < 0 or total > k * cap:
        return
    # the first part is at least ceil(total / k)
    lo = -(-total // k)
    for x in range(min(cap, total), lo - 1, -1):
        px = _pairs(x)
        if px > pairs:
            continue
        for rest in _parts(total - x, pairs - px, k - 1, x):
            yield (x, *rest)


def iter_tuples(d: int, g: int, m6_filter: Iterable[int] | None = None) -> Iterator[SevenTuple]:
    """Yield every valid 7-tuple with invariants (d, g).

    Since m4+m5+m6 <= m1+m2+m3 <= delta, d = 3 delta - sum(m) >= delta, so
    delta ranges over 0..d.  Order: delta ascending, then m descending
    lexicographically.
    """
    check_inputs(d=d, g=g)
    allowed = None if m6_filter is None else frozenset(m6_filter)
    for delta in range(0, d + 1):
        total = 3 * delta - d
        pairs = _pairs(delta - 1) - g
        if total < 0 or pairs < 0:
            continue
        for m in _parts(total, pairs, 6, delta):
            if m[0] + m[1] + m[2] > delta:
                continue
            if allowed is not None and m[5] not in allowed:
                continue
            yield SevenTuple(delta, m)


@lru_cache(maxsize=4096)
def _enumerate_cached(d: int, g: int, m6_filter: frozenset | None) -> tuple[SevenTuple, ...]:
    return tuple(iter_tuples(d, g, m6_filter))


def enumerate_tuples(d: int, g: int, m6_filter: Iterable[int] | None = None) -> list[SevenTuple]:
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    key = None if m6_filter is None else frozenset(m6_filter)
    return list(_enumerate_cached(d, g, key))


def existence_witness(d: int, g: int, m6_values: Iterable[int] = (1, 2)) -> SevenTuple | None:
    """First tuple for (d, g) with m6 in ``m6_values`` that is not a shifted hyperplane multiple."""
    for tup in iter_tuples(d, g, m6_values):
        if not is_hyperplane_multiple_shift(tup):
            return tup
    return None


# ----------------------------------------------------------------- verdict

@dataclass(frozen=True)
class RangeVerdict:
    d: int
    g: int
    in_conjecture_range: bool
    proven_by: frozenset
    existence_48: Existence
    dim_w3: int
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": "RangeVerdict",
            "d": self.d,
            "g": self.g,
            "inConjectureRange": self.in_conjecture_range,
            "provenBy": sorted(c.value for c in self.proven_by),
            "existence48": self.existence_48.value,
            "dimW3": self.dim_w3,
            "notes": list(self.notes),
        }


def range_verdict(d: int, g: int, tup: SevenTuple | None = None) -> RangeVerdict:
    """Collect every s = 3 range statement that applies at (d, g).

    If a 7-tuple is supplied and passes :func:`mainC_check`, the tuple-level
    criterion is added to the certificates.
    """
    check_inputs(d=d, g=g)
    certs, notes = proven_range(d, g)
    if tup is not None:
        if tuple_invariants(tup) != (d, g):
            raise InvalidTuple(f"{tup} does not have invariants ({d}, {g})")
        if mainC_check(tup):
            certs.add(Certificate.MAIN_C)
    exist = existence_48(d, g) if d >= 14 else Existence.NO
    return RangeVerdict(
        d=d, g=g,
        in_conjecture_range=conjecture_range(d, g),
        proven_by=frozenset(certs),
        existence_48=exist,
        dim_w3=d + g + 18,
        notes=tuple(notes),
    )
