"""Integer combinatorics shared by every other module.

Rationals are plain :class:`fractions.Fraction` values; ``str(Fraction)``
already gives the ``p/q`` text form (``q`` dropped when it is 1).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterator, Sequence, Union

RationalLike = Union[int, Fraction, str]

_fact_lock = threading.Lock()
_factorials: list[int] = [1]


def factorial(n: int) -> int:
    """n!, memoized up to the largest index seen so far."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n >= len(_factorials):
        with _fact_lock:
            while len(_factorials) <= n:
                _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[n]


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    if not parts:
        raise ValueError("multinomial needs at least one part")
    out = factorial(sum(parts))
    for v in parts:
        out //= factorial(v)
    return out


def falling_factorial(n: int, s: int) -> int:
    """n (n-1) ... (n-s+1); the empty product for s == 0."""
    if s < 0:
        raise ValueError(f"falling factorial needs s >= 0, got {s}")
    out = 1
    for i in range(s):
        out *= n - i
    return out


def compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Yield every m-tuple of nonnegative integers summing to n.

    Order is lexicographically descending, so ``(n, 0, ..., 0)`` comes first
    and ``(0, ..., 0, n)`` last. There are ``binomial(n + m - 1, m - 1)`` of
    them.
    """
    if m < 1:
        raise ValueError(f"compositions needs m >= 1, got {m}")
    if n < 0:
        raise ValueError(f"compositions needs n >= 0, got {n}")

    def walk(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for head in range(remaining, -1, -1):
            for tail in walk(remaining - head, slots - 1):
                yield (head,) + tail

    yield from walk(n, m)


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))
