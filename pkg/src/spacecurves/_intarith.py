"""Checked integer helpers.

Python integers never wrap, so the 128-bit contract is enforced by explicit
bound checks instead: inputs are limited to |x| <= 10**6 and every result
that passes through :func:`checked` must fit in a signed 128-bit word.
"""

from __future__ import annotations

from .errors import IntegerRangeError

INT128_MIN = -(1 << 127)
INT128_MAX = (1 << 127) - 1
INPUT_BOUND = 10**6


def checked(value: int) -> int:
    if not INT128_MIN <= value <= INT128_MAX:
        raise IntegerRangeError(f"{value} does not fit in a signed 128-bit integer")
    return value


def check_inputs(**values: int) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{name} must be an int, got {type(value).__name__}")
        if abs(value) > INPUT_BOUND:
            raise IntegerRangeError(f"|{name}| = {abs(value)} exceeds {INPUT_BOUND}")


def exact_div(num: int, den: int, exc: type[Exception], what: str) -> int:
    """Divide, raising ``exc`` unless ``den`` divides ``num``."""
    q, r = divmod(num, den)
    if r:
        raise exc(f"{what}: {num}/{den} is not an integer")
    return q


def binom(n: int, k: int) -> int:
    """Binomial coefficient as a polynomial in ``n`` (valid for negative ``n``).

    ``math.comb`` rejects negative arguments, but Euler characteristics of
    negative twists need the polynomial extension n(n-1)...(n-k+1)/k!.
    """
    if k < 0:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= n - i
        den *= i + 1
    return num // den


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def surd_sign(a: int, b: int, m: int) -> int:
    """Exact sign of ``a + b*sqrt(m)`` for integers with ``m >= 0``."""
    if m < 0:
        raise ValueError("negative radicand")
    sa, sb = sign(a), sign(b) if m else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 m
    return sa * sign(a * a - b * b * m)


def two_surd_sign(a: int, b: int, m: int, c: int, n: int) -> int:
    """Exact sign of ``a + b*sqrt(m) + c*sqrt(n)``.

    Reduces to :func:`surd_sign` by comparing squares when the two sides
    ``a + b*sqrt(m)`` and ``-c*sqrt(n)`` disagree in sign.
    """
    su = surd_sign(a, b, m)
    sc = sign(c) if n else 0
    if sc == 0:
        return su
    if su == 0 or su == sc:
        return sc
    # (a + b sqrt m)^2 - c^2 n = a^2 + b^2 m - c^2 n + 2ab sqrt m
    return su * surd_sign(a * a + b * b * m - c * c * n, 2 * a * b, m)
