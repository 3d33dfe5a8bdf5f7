"""Fibonacci functions of regular tunnels and bridge-number bounds.

All values are Python ints, so nothing overflows however long the word.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSeedError, NotRegularError, OutOfRangeError
from .words import WordLike, as_word, semisimple_count


@dataclass(frozen=True)
class SeedPair:
    """Bridge numbers of the last two semisimple tunnels ``tau_{m-2}, tau_{m-1}``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvalidSeedError(f"seeds must be positive, got ({self.a}, {self.b})")

    def __iter__(self):
        return iter((self.a, self.b))


def _regular_tail(w):
    bits = as_word(w).bits.lstrip("0")
    if not bits:
        raise NotRegularError(
            f"word {as_word(w).bits!r} has no 1; use semisimple_range for simple/semisimple tunnels")
    return bits


def _trace(tail, a, b):
    # (u, v) are the two older members of the principal vertex; a 1 drops u.
    u, v = a, b
    out = [a, b, a + b]
    for ch in tail[1:]:
        if ch == "1":
            u, v = v, out[-1]
        else:
            v = out[-1]
        out.append(u + v)
    return out


def fibonacci_trace(w: WordLike, a, b=None) -> list[int]:
    """Iteration sequence ``b_{m-2}, b_{m-1}, ..., b_{n-1}`` of ``F_w(a, b)``.

    ``a`` may also be a :class:`SeedPair` (then ``b`` is omitted).  Leading
    zeros are skipped: they only lengthen the semisimple prefix.

    >>> fibonacci_trace("0011100011100", 2, 2)[-3:]
    [102, 142, 182]
    """
    if b is None:
        a, b = a
    seed = SeedPair(a, b)
    return _trace(_regular_tail(w), seed.a, seed.b)


def fibonacci_value(w: WordLike, a, b=None) -> int:
    return fibonacci_trace(w, a, b)[-1]


def fibonacci_coefficients(w: WordLike) -> tuple[int, int]:
    """``(alpha, beta)`` with ``F_w(a, b) = alpha*a + beta*b``."""
    tail = _regular_tail(w)
    return _trace(tail, 1, 0)[-1], _trace(tail, 0, 1)[-1]


def bridge_set_pairs(w: WordLike) -> list[tuple[SeedPair, int]]:
    """The ``2m - 2`` admissible seeds with their values, ascending by value."""
    tail = _regular_tail(w)
    m = semisimple_count(w)
    pairs = []
    for a in range(2, m + 1):
        for b in (a, a + 1):
            pairs.append((SeedPair(a, b), _trace(tail, a, b)[-1]))
    pairs.sort(key=lambda item: item[1])
    return pairs


def bridge_set(w: WordLike) -> list[int]:
    """Candidate bridge numbers ``F_w(a, b)``, ``2 <= a <= b <= a+1 <= m+1``.

    >>> bridge_set("0011100011100")
    [182, 232, 273, 323, 364, 414]
    """
    return [value for _, value in bridge_set_pairs(w)]


def semisimple_range(n: int) -> tuple[int, int]:
    """Closed interval of possible bridge numbers after ``n`` semisimple cablings."""
    if n < 1:
        raise OutOfRangeError(f"cabling count must be >= 1, got {n}")
    if n == 1:
        return (2, 2)
    return (2, n + 1)


def _two_term(first, second, k):
    x, y = first, second
    for _ in range(k - 1):
        x, y = y, 2 * y + x
    return x


def min_bridge(d: int) -> int:
    """Least bridge number of a knot with a depth-``d`` tunnel (2, 4, 10, 24, ...)."""
    if d < 1:
        raise OutOfRangeError(f"depth must be >= 1, got {d}")
    return _two_term(2, 4, d)


def torus_min_bridge(d: int) -> int:
    """Least bridge number of a torus knot with a depth-``d`` tunnel (2, 5, 12, 29, ...)."""
    if d < 1:
        raise OutOfRangeError(f"depth must be >= 1, got {d}")
    return _two_term(2, 5, d)


def fibonacci_number(k: int) -> int:
    if k < 1:
        raise OutOfRangeError(f"Fibonacci index must be >= 1, got {k}")
    x, y = 1, 1
    for _ in range(k - 1):
        x, y = y, x + y
    return x


def max_bridge(n: int, m: int) -> int:
    """Largest bridge number after ``n`` cablings whose first ``m`` are semisimple."""
    if not 1 <= m <= n:
        raise OutOfRangeError(f"need 1 <= m <= n, got n={n}, m={m}")
    return m * fibonacci_number(n - m + 2) + fibonacci_number(n - m + 1)


def max_bridge_overall(n: int) -> int:
    if n < 1:
        raise OutOfRangeError(f"cabling count must be >= 1, got {n}")
    return fibonacci_number(n + 2)
