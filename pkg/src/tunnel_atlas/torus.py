"""Invariants of the middle tunnel of a (p, q) torus knot.

The cabling sequence is read off the continued fraction of ``p/q`` by
multiplying the unimodular matrices ``U = [[1,1],[0,1]]`` and
``L = [[1,0],[1,1]]`` one letter at a time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import NotCoprimeError, OutOfRangeError, TrivialKnotError
from .words import BinaryWord, depth_of_word, semisimple_count

Matrix = tuple[int, int, int, int]  # (a, b, c, d) for [[a, b], [c, d]]

U: Matrix = (1, 1, 0, 1)
L: Matrix = (1, 0, 1, 1)
_LETTERS = {"U": U, "L": L}


def matmul(x: Matrix, y: Matrix) -> Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def det(x: Matrix) -> int:
    a, b, c, d = x
    return a * d - b * c


def normalize_cf(terms: Sequence[int]) -> tuple[int, ...]:
    """Rewrite a trailing ``..., n, 1`` as ``..., n+1``."""
    terms = tuple(terms)
    if not terms or any(t < 1 for t in terms):
        raise OutOfRangeError(f"continued fraction terms must be positive: {terms}")
    if len(terms) >= 2 and terms[-1] == 1:
        terms = terms[:-2] + (terms[-2] + 1,)
    return terms


def cf_expand(p: int, q: int) -> tuple[int, ...]:
    """Positive continued fraction ``[n_1, ..., n_k]`` of ``p/q`` with ``n_k >= 2``.

    >>> cf_expand(41, 29)
    (1, 2, 2, 2, 2)
    """
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"gcd({p}, {q}) = {gcd(p, q)}")
    if q < 2 or p <= q:
        raise OutOfRangeError(f"need p > q >= 2, got ({p}, {q})")
    terms = []
    while q:
        n, r = divmod(p, q)
        terms.append(n)
        p, q = q, r
    return normalize_cf(terms)


def cf_eval(terms: Sequence[int]) -> tuple[int, int]:
    """Evaluate ``[n_1, ..., n_k]`` to ``(p, q)`` in lowest terms."""
    terms = list(terms)
    if not terms:
        raise OutOfRangeError("empty continued fraction")
    p, q = terms[-1], 1
    for n in reversed(terms[:-1]):
        p, q = n * p + q, p
    return p, q


def normalize_torus_params(p: int, q: int) -> tuple[int, int, bool]:
    """Return ``(p', q', mirrored)`` with ``p' > q' >= 2``.

    ``K_{p,q}`` and ``K_{q,p}`` are isotopic; ``K_{p,-q}`` is the mirror
    image, whose middle tunnel has negated slopes and the same binary word.
    """
    if min(abs(p), abs(q)) <= 1:
        raise TrivialKnotError(f"({p}, {q}) torus knot is trivial")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"gcd({p}, {q}) = {gcd(p, q)}")
    mirrored = (p < 0) != (q < 0)
    p, q = sorted((abs(p), abs(q)), reverse=True)
    return p, q, mirrored


def letter_sequence(terms: Sequence[int]) -> list[str]:
    """Letters ``A_i`` for ``i = -n_1, ..., n_2 + ... + n_k - 1``.

    ``n_1`` copies of ``L``, then blocks of sizes ``n_2, n_3, ...``
    alternating ``U, L, U, ...``.  Position ``j`` of the returned list is
    index ``i = j - n_1``.
    """
    terms = list(terms)
    if len(terms) < 2:
        raise OutOfRangeError("p/q is an integer; no middle-tunnel letters")
    letters = ["L"] * terms[0]
    for j, n in enumerate(terms[1:]):
        letters.extend(("U" if j % 2 == 0 else "L") * n)
    return letters


@dataclass(frozen=True)
class TorusRow:
    t: int
    matrix: Matrix
    slope: Fraction | int
    knot: tuple[int, int]

    @property
    def bridge_number(self) -> int:
        return min(self.knot)


@dataclass(frozen=True)
class TorusTunnelTable:
    p: int
    q: int
    mirrored: bool
    cf: tuple[int, ...]
    letters: tuple[str, ...]
    N: int
    rows: tuple[TorusRow, ...] = field(repr=False)
    word: BinaryWord
    depth: int

    @property
    def cabling_count(self) -> int:
        return self.N + 1

    def letter(self, i: int) -> str:
        """``A_i`` by its (possibly negative) index."""
        return self.letters[i + self.cf[0]]


def invariant_table(p: int, q: int) -> TorusTunnelTable:
    """Full cabling data of the middle tunnel of the ``(p, q)`` torus knot.

    Row ``t`` holds ``P_t = A_t A_{t-1} ... A_{-n_1}``, the slope
    ``a_t d_t + b_t c_t`` (``1/(2 n_1 + 1)`` for ``t = 0``) and the torus
    knot ``(a_t + c_t, b_t + d_t)`` produced by that cabling.  Parameters
    are normalized first; a mirrored pair negates the slopes.
    """
    p, q, mirrored = normalize_torus_params(p, q)
    cf = cf_expand(p, q)
    letters = letter_sequence(cf)
    n1 = cf[0]
    N = sum(cf[1:]) - 2
    sign = -1 if mirrored else 1

    prod: Matrix = (1, 0, 0, 1)
    for i in range(-n1, 0):
        prod = matmul(_LETTERS[letters[i + n1]], prod)
    rows = []
    for t in range(N + 1):
        prod = matmul(_LETTERS[letters[t + n1]], prod)
        a, b, c, d = prod
        slope = Fraction(sign, 2 * n1 + 1) if t == 0 else sign * (a * d + b * c)
        rows.append(TorusRow(t, prod, slope, (a + c, b + d)))

    bits = "".join(
        "1" if letters[t + n1] != letters[t - 1 + n1] else "0" for t in range(2, N + 1))
    word = BinaryWord(bits)
    return TorusTunnelTable(p, q, mirrored, cf, tuple(letters), N, tuple(rows),
                            word, depth_of_word(word))


def torus_depth(p: int, q: int) -> int:
    return invariant_table(p, q).depth


SHORTCUT_CONVENTIONS = ("literal", "offset")


def torus_depth_shortcut(terms: Sequence[int], convention: str = "offset") -> int:
    """Block-count depth estimate from the continued fraction alone.

    The suffix (``n_2 ... n_k`` for ``"literal"``, ``n_3 ... n_k`` for
    ``"offset"``) is cut into blocks, each either a ``1`` together with
    its successor or a single term other than 1; the estimate is
    ``1 + number of blocks``.  Diagnostic only: neither convention agrees
    with :func:`torus_depth` on every input.
    """
    terms = list(terms)
    if len(terms) < 2:
        raise OutOfRangeError("shortcut needs at least two terms")
    if convention == "literal":
        rest = terms[1:]
    elif convention == "offset":
        rest = terms[2:]
    else:
        raise ValueError(f"unknown shortcut convention {convention!r}")
    blocks = 0
    i = 0
    while i < len(rest):
        i += 2 if rest[i] == 1 else 1
        blocks += 1
    return 1 + blocks


def bridge_seeds(table: TorusTunnelTable) -> tuple[int, int]:
    """Bridge numbers of the knots at rows ``m-2`` and ``m-1``."""
    m = semisimple_count(table.word)
    return table.rows[m - 2].bridge_number, table.rows[m - 1].bridge_number
