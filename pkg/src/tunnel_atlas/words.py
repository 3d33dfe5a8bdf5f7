"""Binary words and step sequences describing principal paths.

A tunnel produced by ``n`` cablings carries binary invariants
``s_2 ... s_n``; the word is stored as that bit string, so
``n = len(word) + 2``.  The step sequence over ``D``/``L``/``R`` is two
symbols longer and always begins ``DR``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParseError

#: Depth of the trivial (primitive) tunnel, which has no binary word.
PRIMITIVE_DEPTH = 0

_FORBIDDEN_BIGRAMS = ("DD", "LR", "RL")


@dataclass(frozen=True)
class BinaryWord:
    bits: str = ""

    def __post_init__(self):
        for i, ch in enumerate(self.bits, 1):
            if ch not in "01":
                raise ParseError(f"invalid bit {ch!r}", i)

    def __str__(self):
        return self.bits

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return (int(ch) for ch in self.bits)

    @property
    def cabling_count(self) -> int:
        return len(self.bits) + 2

    @property
    def is_regular(self) -> bool:
        return "1" in self.bits


@dataclass(frozen=True)
class StepSequence:
    steps: str

    def __post_init__(self):
        _check_steps(self.steps)

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class CablingProfile:
    cabling_count: int
    semisimple_count: int
    depth: int
    regular: bool


WordLike = Union[BinaryWord, str]
StepsLike = Union[StepSequence, str]


def as_word(w: WordLike) -> BinaryWord:
    return w if isinstance(w, BinaryWord) else parse_binary(w)


def as_steps(s: StepsLike) -> StepSequence:
    return s if isinstance(s, StepSequence) else parse_steps(s)


def parse_binary(text: str) -> BinaryWord:
    """Parse a string of ``0``/``1`` characters (possibly empty)."""
    return BinaryWord(text)


def _check_steps(text):
    for i, ch in enumerate(text, 1):
        if ch not in "DLR":
            raise ParseError(f"invalid step symbol {ch!r}", i)
    if len(text) < 2:
        raise ParseError("step sequence needs at least two symbols", len(text) + 1)
    if text[0] != "D":
        raise ParseError("step sequence must start with 'D'", 1)
    if text[1] != "R":
        raise ParseError("second step must be 'R'", 2)
    for i in range(len(text) - 1):
        if text[i:i + 2] in _FORBIDDEN_BIGRAMS:
            raise ParseError(f"forbidden bigram {text[i:i + 2]!r}", i + 2)


def parse_steps(text: str) -> StepSequence:
    return StepSequence(text)


def parse_path(text: str) -> BinaryWord:
    """Parse either encoding, detected by alphabet, and return the word.

    The alphabets ``{0,1}`` and ``{D,L,R}`` are disjoint, so detection is
    decided by the first character.  Empty text is the empty word.
    """
    if text and text[0] in "DLR":
        return steps_to_binary(parse_steps(text))
    return parse_binary(text)


# (previous step, step before it) -> (next step if s=0, next step if s=1)
def _next_step(prev2: str, prev: str, bit: int) -> str:
    if prev == "L":
        return "D" if bit else "L"
    if prev == "R":
        return "D" if bit else "R"
    # after D the turn depends on what produced the D
    if prev2 == "L":
        return "L" if bit else "R"
    return "R" if bit else "L"


def binary_to_steps(w: WordLike) -> StepSequence:
    out = ["D", "R"]
    for bit in as_word(w):
        out.append(_next_step(out[-2], out[-1], bit))
    return StepSequence("".join(out))


def steps_to_binary(s: StepsLike) -> BinaryWord:
    steps = as_steps(s).steps
    bits = []
    for i in range(2, len(steps)):
        # exactly one of the two candidate successors matches
        bits.append("1" if _next_step(steps[i - 2], steps[i - 1], 1) == steps[i] else "0")
    return BinaryWord("".join(bits))


def depth_of_word(w: WordLike) -> int:
    """Depth from the binary invariants.

    Every maximal block of ones of length ``k`` contributes ``ceil(k/2)``
    downward steps on top of the initial depth 1.
    """
    bits = as_word(w).bits
    return 1 + sum((len(block) + 1) // 2 for block in bits.split("0") if block)


def depth_of_steps(s: StepsLike) -> int:
    return as_steps(s).steps.count("D")


def semisimple_count(w: WordLike) -> int:
    """Number ``m`` of leading cablings that produce depth-1 tunnels."""
    bits = as_word(w).bits
    return len(bits) - len(bits.lstrip("0")) + 2


def profile(w: WordLike) -> CablingProfile:
    w = as_word(w)
    d = depth_of_word(w)
    return CablingProfile(w.cabling_count, semisimple_count(w), d, d >= 2)
