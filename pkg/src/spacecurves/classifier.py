"""Classification of s-maximal families of curves C = a f1 + b f2, s >= 4.

Every rational window comparison is done by cross-multiplying with s - 2 > 0,
so the strict/non-strict boundaries are decided exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ._intarith import binom, check_inputs, checked
from .picard import (
    CohomologyAnswer,
    DivisorClass,
    SurfaceContext,
    degree,
    genus,
    h1_ideal,
    has_smooth_irreducible_member,
)

EXCEPTIONAL_TRIPLES = frozenset({(4, 6, 4), (4, 9, 6)})

PICARD_ASSUMPTION = "Pic(S) = Z f1 + Z f2 (S very general among surfaces containing a line)"


class Case(enum.Enum):
    HYPOTHESIS_FAILED = "HypothesisFailed"
    EXCEPTIONAL_TRIPLE = "ExceptionalTriple"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"
    CASE_I_ONLY = "CaseIOnly"


class ComponentStatus(enum.Enum):
    """What is known about W inside H(d,g)_sc, ordered by strength."""

    UNDETERMINED = "Undetermined"
    UNIQUE_MAXIMAL_FAMILY = "UniqueMaximalFamily"
    IRREDUCIBLE_COMPONENT = "IrreducibleComponent"
    CONJECTURED_NON_REDUCED = "ConjecturedNonReduced"
    GENERICALLY_SMOOTH_COMPONENT = "GenericallySmoothComponent"
    NON_REDUCED_COMPONENT = "NonReducedComponent"

    @property
    def strength(self) -> int:
        return _STRENGTH[self]

    @property
    def is_component(self) -> bool:
        return self.strength >= ComponentStatus.IRREDUCIBLE_COMPONENT.strength


_STRENGTH = {
    ComponentStatus.UNDETERMINED: 0,
    ComponentStatus.UNIQUE_MAXIMAL_FAMILY: 1,
    ComponentStatus.IRREDUCIBLE_COMPONENT: 2,
    ComponentStatus.CONJECTURED_NON_REDUCED: 2,
    ComponentStatus.GENERICALLY_SMOOTH_COMPONENT: 3,
    ComponentStatus.NON_REDUCED_COMPONENT: 3,
}


class CriticalFamily(enum.Enum):
    # (a,b) = ((s-1)n - mu, (s-2)n - mu + 1), n >= 3
    A = "FamilyA"  # mu = s-3
    B = "FamilyB"  # mu = s-2
    C = "FamilyC"  # mu = s-1, on the border of the nef cone

    def mu(self, s: int) -> int:
        return s - {"FamilyA": 3, "FamilyB": 2, "FamilyC": 1}[self.value]

    def member(self, s: int, n: int) -> tuple[int, int]:
        mu = self.mu(s)
        return (s - 1) * n - mu, (s - 2) * n - mu + 1


@dataclass(frozen=True)
class FamilyReport:
    s: int
    a: int
    b: int
    d: int
    g: int
    t: int
    dim_w: int
    h1_ideal_s: CohomologyAnswer
    case: Case
    status: ComponentStatus
    failed_hypothesis: str | None = None
    critical_family: CriticalFamily | None = None
    critical_n: int | None = None
    notes: tuple[str, ...] = ()
    assumptions: tuple[str, ...] = field(default=(PICARD_ASSUMPTION,))

    @property
    def case_label(self) -> str:
        if self.case is Case.HYPOTHESIS_FAILED:
            return f"HypothesisFailed({self.failed_hypothesis})"
        return self.case.value

    def to_json(self) -> dict:
        return {
            "kind": "FamilyReport",
            "s": self.s,
            "a": self.a,
            "b": self.b,
            "d": self.d,
            "g": self.g,
            "t": self.t,
            "dimW": self.dim_w,
            "h1IdealS": self.h1_ideal_s.to_json(),
            "case": self.case.value,
            "failedHypothesis": self.failed_hypothesis,
            "status": self.status.value,
            "criticalFamily": None if self.critical_family is None else {
                "family": self.critical_family.value, "n": self.critical_n,
            },
            "notes": list(self.notes),
        }


def dim_w(s: int, d: int, g: int) -> int:
    """Dimension of the s-maximal family W."""
    return checked((4 - s) * d + g + binom(s + 3, 3) + binom(s - 1, 3) - s + 1)


def dim_a1_minus_a2(s: int, d: int, g: int) -> int:
    """dim A^1 - dim A^2 for the Hilbert-flag scheme at (C, S)."""
    return checked((4 - s) * d + g + binom(s + 3, 3) - 2)


def critical_family(s: int, a: int, b: int) -> tuple[CriticalFamily, int] | None:
    """Return (family, n) if (a, b) lies on one of the three critical families."""
    n = a - b + 1
    if n < 3:
        return None
    for fam in CriticalFamily:
        if fam.member(s, n) == (a, b):
            return fam, n
    return None


def _failed_hypothesis(s: int, c: DivisorClass, d: int, ctx: SurfaceContext) -> str | None:
    if d <= s * s:
        return "d ≤ s²"
    if c.a == c.b:
        return "a = b"
    if c.a <= s - 4:
        return "a ≤ s-4"
    if not has_smooth_irreducible_member(c, ctx):
        return "no smooth irreducible member"
    return None


def classify(s: int, a: int, b: int) -> FamilyReport:
    check_inputs(s=s, a=a, b=b)
    ctx = SurfaceContext(s)
    c = DivisorClass(a, b)
    d = degree(c, ctx)
    g = genus(c, ctx)
    t = c.t(ctx)
    crit = critical_family(s, a, b)
    common = dict(
        s=s, a=a, b=b, d=d, g=g, t=t,
        dim_w=dim_w(s, d, g),
        h1_ideal_s=h1_ideal(c, s, ctx),
        critical_family=crit[0] if crit else None,
        critical_n=crit[1] if crit else None,
    )

    failed = _failed_hypothesis(s, c, d, ctx)
    if failed is not None:
        return FamilyReport(
            **common, case=Case.HYPOTHESIS_FAILED,
            status=ComponentStatus.UNDETERMINED, failed_hypothesis=failed,
        )

    if (s, a, b) in EXCEPTIONAL_TRIPLES:
        return FamilyReport(
            **common, case=Case.EXCEPTIONAL_TRIPLE,
            status=ComponentStatus.UNIQUE_MAXIMAL_FAMILY,
            notes=("W is the unique s-maximal family; being a component is left open",),
        )

    lhs = (s - 2) * a
    top = (s - 1) * b
    if (s < a and lhs < top - 2) or (a, b) == (s + 1, s):
        return FamilyReport(
            **common, case=Case.CASE_II,
            status=ComponentStatus.GENERICALLY_SMOOTH_COMPONENT,
        )

    if top - 2 <= lhs <= top:
        if s == 4 or (s == 5 and a % 4 == 0 and 3 * a == 4 * b and a >= 8):
            status = ComponentStatus.NON_REDUCED_COMPONENT
            notes = ()
        else:
            status = ComponentStatus.CONJECTURED_NON_REDUCED
            notes = ("non-reduced iff H^0(N_C) -> H^1(I_C(s)) is non-zero; not decided here",)
        return FamilyReport(**common, case=Case.CASE_III, status=status, notes=notes)

    return FamilyReport(
        **common, case=Case.CASE_I_ONLY, status=ComponentStatus.IRREDUCIBLE_COMPONENT,
    )
