"""Maximum genus G(d, s) of smooth connected curves on no surface of degree s-1.

Closed formulas are known in the C-range d > s(s-1) and in the extended
C-range s^2-2s+2 <= d <= s(s-1).  Below that only a handful of values are
carried, as read-only fixtures tagged conjectural.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType

from ._intarith import check_inputs, checked, exact_div
from .errors import NonIntegerG, UnknownFixture


class Regime(enum.Enum):
    C_RANGE = "CRange"
    EXTENDED_C_RANGE = "ExtendedCRange"
    CONJECTURAL = "Conjectural"
    OUT_OF_RANGE = "OutOfRange"


@dataclass(frozen=True)
class MaxGenusAnswer:
    regime: Regime
    value: int | None = None
    source: str | None = None

    @property
    def is_exact(self) -> bool:
        return self.regime in (Regime.C_RANGE, Regime.EXTENDED_C_RANGE)

    def to_json(self) -> dict:
        return {"regime": self.regime.value, "value": self.value, "source": self.source}

    def __str__(self):
        if self.is_exact:
            return f"Exact({self.value}, {self.regime.value})"
        if self.regime is Regime.CONJECTURAL:
            return f"Conjectural({self.value})"
        return f"OutOfRange({self.source})"


# B-range values that cannot be computed here; (d, s) -> (G, citation)
_CONJECTURAL_G = MappingProxyType({
    (22, 6): (55, "B-range value G(22,6)=55, Hartshorne's conjecture, known in this case"),
    (32, 7): (111, "B-range value G(32,7)=111 from A(7,7)=33, A(7,6)=28, B(7,6)=31"),
})

_AB_FIXTURES = MappingProxyType({
    "A(7,7)": 33,
    "A(7,6)": 28,
    "B(7,6)": 31,
    "A(6,5)": 23,
})


def fixture_AB(key: str) -> int:
    """Look up a printed value of the Halphen-gap functions A(k,f), B(k,f)."""
    try:
        return _AB_FIXTURES[key.replace(" ", "")]
    except KeyError:
        raise UnknownFixture(key) from None


def c_range_residue(d: int, s: int) -> int:
    """The r in 0 <= r < s with d + r = 0 mod s."""
    return -d % s


def max_genus(d: int, s: int) -> MaxGenusAnswer:
    check_inputs(d=d, s=s)
    if d < 1 or s < 2:
        raise ValueError(f"need d >= 1 and s >= 2, got d={d}, s={s}")
    if d > s * (s - 1):
        r = c_range_residue(d, s)
        num = d * d + d * s * (s - 4) - r * (s - r) * (s - 1)
        g = 1 + exact_div(num, 2 * s, NonIntegerG, f"G({d},{s})")
        return MaxGenusAnswer(Regime.C_RANGE, checked(g))
    if d >= s * s - 2 * s + 2:
        mu = d - (s * s - 2 * s + 3)
        if mu == -1:
            g = 1 + d * (s - 3)
        else:
            g = s**3 - 5 * s * s + 9 * s - 6 + exact_div(
                mu * (mu + 2 * s - 3), 2, NonIntegerG, f"G({d},{s})"
            )
        return MaxGenusAnswer(Regime.EXTENDED_C_RANGE, checked(g))
    if (d, s) in _CONJECTURAL_G:
        g, cite = _CONJECTURAL_G[d, s]
        return MaxGenusAnswer(Regime.CONJECTURAL, g, cite)
    return MaxGenusAnswer(
        Regime.OUT_OF_RANGE, source=f"d={d} below the extended C-range for s={s}"
    )
