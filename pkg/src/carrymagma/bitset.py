"""Finite subsets of the naturals stored as unbounded-int bit masks."""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import SetLiteralError

_TOKEN_RE = re.compile(r"[0-9]+")


@dataclass(frozen=True, order=True)
class FinSet:
    """A finite set of natural numbers.

    Bit n of ``bits`` is set iff n is a member.  Python ints carry no
    trailing-zero padding, so equality and hashing are extensional for
    free, and ordering FinSets orders them by their integer encoding.
    """

    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError(f"bit mask must be non-negative, got {self.bits}")

    @classmethod
    def of(cls, *elements: int) -> "FinSet":
        """Build a set from element values (duplicates collapse)."""
        bits = 0
        for n in elements:
            if n < 0:
                raise ValueError(f"element must be a natural number, got {n}")
            bits |= 1 << n
        return cls(bits)

    @classmethod
    def from_iterable(cls, elements: Iterable[int]) -> "FinSet":
        return cls.of(*elements)

    def __contains__(self, n: int) -> bool:
        return n >= 0 and (self.bits >> n) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def min_element(self) -> int:
        if not self.bits:
            raise ValueError("empty set has no minimum element")
        return (self.bits & -self.bits).bit_length() - 1

    @property
    def max_element(self) -> int:
        if not self.bits:
            raise ValueError("empty set has no maximum element")
        return self.bits.bit_length() - 1

    def __str__(self) -> str:
        return format(self)

    def __repr__(self) -> str:
        return f"FinSet.of({', '.join(map(str, self))})"


EMPTY = FinSet(0)


def parse(text: str) -> FinSet:
    """Parse a set literal such as ``{3,4,5}`` or ``3,4,5`` (order-free).

    Raises SetLiteralError on malformed tokens, duplicates, mismatched
    braces, or anything that is not a decimal natural number.  Duplicates
    are rejected rather than collapsed so typos in hand-written input
    surface instead of silently shrinking the set.
    """
    body = text.strip()
    if body.startswith("{"):
        if not body.endswith("}"):
            raise SetLiteralError(f"unclosed brace in set literal: {text!r}")
        body = body[1:-1]
    elif body.endswith("}"):
        raise SetLiteralError(f"unopened brace in set literal: {text!r}")
    body = body.strip()
    if not body:
        return EMPTY
    bits = 0
    for token in body.split(","):
        token = token.strip()
        if not _TOKEN_RE.fullmatch(token):
            raise SetLiteralError(f"invalid element {token!r} in set literal: "
                                  "expected a decimal natural number")
        n = int(token)
        if (bits >> n) & 1:
            raise SetLiteralError(f"duplicate element {token!r} in set literal")
        bits |= 1 << n
    return FinSet(bits)


def format(a: FinSet) -> str:
    """Canonical literal: ascending elements, comma-separated, braced."""
    return "{" + ",".join(map(str, a)) + "}"


def sym_diff(a: FinSet, b: FinSet) -> FinSet:
    """Symmetric difference: elements in exactly one of the two sets."""
    return FinSet(a.bits ^ b.bits)


def intersect(a: FinSet, b: FinSet) -> FinSet:
    """Intersection of two sets."""
    return FinSet(a.bits & b.bits)


def shift_up(a: FinSet, k: int) -> FinSet:
    """Add k to every element: the set-level left shift by k positions."""
    if k < 0:
        raise ValueError(f"shift amount must be non-negative, got {k}")
    return FinSet(a.bits << k)


def encode(a: FinSet) -> int:
    """Sum of 2**n over members n: the set viewed as a binary integer."""
    return a.bits


def decode(m: int) -> FinSet:
    """Inverse of encode: the set of bit positions set in m."""
    if m < 0:
        raise ValueError(f"cannot decode a negative integer: {m}")
    return FinSet(m)
