"""Exhaustive searches and exact closed-form checks.

These certify the extremal bridge-number formulas on every word up to a
length horizon.  They only call the trace evaluator, never the formulas
they are meant to check.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .bridge import fibonacci_value, min_bridge, semisimple_range
from .errors import CapExceededError, InfeasibleError, OutOfRangeError
from .words import BinaryWord, depth_of_word, semisimple_count

CAP_ENV_VAR = "TUNNEL_ATLAS_MAX_BITS"
DEFAULT_CAP = 20


def enumeration_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else DEFAULT_CAP


@dataclass(frozen=True)
class QuadraticInteger:
    """Exact ``x + y*sqrt(2)`` with integer ``x``, ``y``."""

    x: int
    y: int

    def __mul__(self, other):
        return QuadraticInteger(self.x * other.x + 2 * self.y * other.y,
                                self.x * other.y + self.y * other.x)

    def __add__(self, other):
        return QuadraticInteger(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return QuadraticInteger(self.x - other.x, self.y - other.y)

    def conjugate(self):
        return QuadraticInteger(self.x, -self.y)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers leave the ring")
        result, base = QuadraticInteger(1, 0), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


SILVER = QuadraticInteger(1, 1)  # 1 + sqrt(2)


def closed_form_check(d_max: int) -> bool:
    """Check ``min_bridge(d) == ((1+r)^d - (1-r)^d) / r`` for ``r = sqrt(2)``, ``d <= d_max``.

    ``(1+r)^d - (1-r)^d = 2 y_d r`` exactly, so the right side is ``2 y_d``.
    """
    for d in range(1, d_max + 1):
        diff = SILVER ** d - SILVER.conjugate() ** d
        if diff.x != 0 or min_bridge(d) != diff.y:
            return False
    return True


def enumerate_words(length: int, cap: Optional[int] = None) -> Iterator[BinaryWord]:
    """All ``2**length`` words in lexicographic order."""
    cap = enumeration_cap() if cap is None else cap
    if length < 0:
        raise OutOfRangeError(f"length must be >= 0, got {length}")
    if length > cap:
        raise CapExceededError(f"length {length} exceeds enumeration cap {cap}")
    for i in range(1 << length):
        yield BinaryWord(format(i, f"0{length}b") if length else "")


@dataclass
class SearchReport:
    kind: str
    parameters: dict
    value: int
    witnesses: list = field(default_factory=list)
    examined: int = 0
    horizon: str = ""


# Workers receive plain (length, start, stop) ranges of word indices and
# return (best, witnesses, examined); merging uses min/max so results do
# not depend on how the ranges were cut.

def _min_chunk(args):
    length, start, stop, d = args
    best, witnesses, examined = None, [], 0
    for i in range(start, stop):
        bits = format(i, f"0{length}b")
        examined += 1
        if "1" not in bits or depth_of_word(bits) != d:
            continue
        value = fibonacci_value(bits, 2, 2)
        if best is None or value < best:
            best, witnesses = value, [bits]
        elif value == best:
            witnesses.append(bits)
    return best, witnesses, examined


def _max_chunk(args):
    length, start, stop, m, seeds = args
    best, witnesses, examined = None, [], 0
    for i in range(start, stop):
        bits = format(i, f"0{length}b") if length else ""
        examined += 1
        if semisimple_count(bits) != m:
            continue
        for a, b in seeds:
            value = fibonacci_value(bits, a, b)
            if best is None or value > best:
                best, witnesses = value, [(bits, (a, b))]
            elif value == best:
                witnesses.append((bits, (a, b)))
    return best, witnesses, examined


def _run(chunk_fn, tasks, workers):
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(chunk_fn, tasks))
    return [chunk_fn(t) for t in tasks]


def _split(length, workers):
    total = 1 << length
    parts = max(1, min(workers, total))
    bounds = [total * k // parts for k in range(parts + 1)]
    return [(bounds[k], bounds[k + 1]) for k in range(parts)]


def _merge(results, better):
    best, witnesses, examined = None, [], 0
    for value, wits, count in results:
        examined += count
        if value is None:
            continue
        if best is None or better(value, best):
            best, witnesses = value, list(wits)
        elif value == best:
            witnesses.extend(wits)
    return best, sorted(witnesses, key=_witness_key), examined


def _witness_key(witness):
    bits = witness[0] if isinstance(witness, tuple) else witness
    return len(bits), witness


def min_bridge_search(max_length: int, d: int, workers: int = 1,
                      cap: Optional[int] = None) -> SearchReport:
    """Minimum of ``F_w(2, 2)`` over regular words of depth ``d`` and length ``<= max_length``."""
    cap = enumeration_cap() if cap is None else cap
    if d < 2:
        raise OutOfRangeError(f"regular tunnels have depth >= 2, got {d}")
    if max_length > cap:
        raise CapExceededError(f"length {max_length} exceeds enumeration cap {cap}")
    tasks = [(length, lo, hi, d)
             for length in range(1, max_length + 1)
             for lo, hi in _split(length, workers)]
    best, witnesses, examined = _merge(_run(_min_chunk, tasks, workers), lambda x, y: x < y)
    if best is None:
        raise InfeasibleError(f"no regular word of depth {d} with length <= {max_length}")
    return SearchReport("min_by_depth", {"d": d, "max_length": max_length, "seed": (2, 2)},
                        best, witnesses, examined,
                        f"all words of length <= {max_length}")


def max_bridge_search(n: int, m: int, workers: int = 1,
                      cap: Optional[int] = None) -> SearchReport:
    """Maximum of ``F_w(a, b)`` over words with ``n`` cablings, ``m`` of them semisimple.

    Seeds range over all admissible pairs ``2 <= a <= b <= a+1 <= m+1``.
    When ``m == n`` only the all-zero word qualifies and the value is the top
    of :func:`semisimple_range`.
    """
    cap = enumeration_cap() if cap is None else cap
    if not 2 <= m <= n:
        raise InfeasibleError(f"need 2 <= m <= n, got n={n}, m={m}")
    length = n - 2
    if length > cap:
        raise CapExceededError(f"length {length} exceeds enumeration cap {cap}")
    params = {"n": n, "m": m}
    if m == n:
        return SearchReport("max_by_cablings", params, semisimple_range(n)[1],
                            [("0" * length, None)], 1, "semisimple: no regular words")
    seeds = [(a, b) for a in range(2, m + 1) for b in (a, a + 1)]
    tasks = [(length, lo, hi, m, seeds) for lo, hi in _split(length, workers)]
    best, witnesses, examined = _merge(_run(_max_chunk, tasks, workers), lambda x, y: x > y)
    return SearchReport("max_by_cablings", params, best, witnesses, examined,
                        f"all words of length {length}")
