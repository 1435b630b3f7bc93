"""The Z2^4 group of parity automorphisms acting on the 16 rules.

The four generators T0..T3 flip fixed subsets of the seven triplet
parities; composition is XOR of masks, so every element is an involution
and the group is Z2 x Z2 x Z2 x Z2.  Masks use the same bit weights as
algebra ids (T0=8, T1=4, T2=2, T3=1), which makes the orbit action plain
arithmetic: applying mask m to rule n lands on rule n XOR m.

The seven non-identity elements generated by {T1, T2, T3} form a Fano
plane: three elements per line, the product of any two on a line giving
the third.  T0 alone exchanges the left-handed rules (ids 0..7) with the
right-handed ones (ids 8..15).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .algebra import TripletSet, flip_vector, oriented_triplets, parity_word

__all__ = [
    "Automorphism",
    "T0",
    "T1",
    "T2",
    "T3",
    "IDENTITY",
    "compose",
    "orbit",
    "OrbitEntry",
    "fano_lines",
    "chirality",
]

_GENERATOR_NAMES = ((8, "T0"), (4, "T1"), (2, "T2"), (1, "T3"))

# The sixteen reachable parity words, indexed by rule id.
_ORBIT_WORDS = tuple(parity_word(n) for n in range(16))
_WORD_TO_ID = {w: n for n, w in enumerate(_ORBIT_WORDS)}


@dataclass(frozen=True, order=True)
class Automorphism:
    """An element of the parity group, identified by its 4-bit mask."""

    mask: int

    def __post_init__(self):
        if not isinstance(self.mask, int) or not 0 <= self.mask <= 15:
            raise ValueError(f"mask must be an integer in 0..15, got {self.mask!r}")

    @property
    def flip_pattern(self) -> tuple[int, ...]:
        """Which of the seven triplet parities this element swaps."""
        return flip_vector(self.mask)

    @property
    def word(self) -> str:
        """Generator word such as 'T1*T3'; 'id' for the identity."""
        parts = [name for bit, name in _GENERATOR_NAMES if self.mask & bit]
        return "*".join(parts) if parts else "id"

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        if not isinstance(other, Automorphism):
            return NotImplemented
        return Automorphism(self.mask ^ other.mask)

    def apply(self, t: tuple[TripletSet, str]) -> tuple[TripletSet, str]:
        """Act on an orbit element given as (oriented triplets, parity word)."""
        _, word = t
        n = _WORD_TO_ID.get(word)
        if n is None:
            raise ValueError(f"parity word {word!r} is not one of the 16 orbit elements")
        new_word = _ORBIT_WORDS[n ^ self.mask]
        return oriented_triplets(new_word), new_word

    def __repr__(self) -> str:
        return f"Automorphism({self.mask})  # {self.word}"


T0 = Automorphism(8)
T1 = Automorphism(4)
T2 = Automorphism(2)
T3 = Automorphism(1)
IDENTITY = Automorphism(0)


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """Group product; XOR of masks."""
    return a * b


class OrbitEntry(NamedTuple):
    algebra: int
    automorphism: Automorphism
    parity_word: str


def orbit() -> list[OrbitEntry]:
    """The full orbit of the reference rule, in algebra-id order."""
    return [OrbitEntry(n, Automorphism(n), _ORBIT_WORDS[n]) for n in range(16)]


def fano_lines() -> tuple[frozenset[Automorphism], ...]:
    """The 7 lines of the Fano plane over the non-identity elements of
    <T1, T2, T3>: unordered triples {a, b, a*b}, listed by ascending masks."""
    lines = []
    for a in range(1, 8):
        for b in range(a + 1, 8):
            c = a ^ b
            if b < c:
                lines.append(frozenset(Automorphism(m) for m in (a, b, c)))
    lines.sort(key=lambda line: sorted(e.mask for e in line))
    return tuple(lines)


def chirality(n: int) -> str:
    """'left' for rules 0..7, 'right' for 8..15 (the T0 bit)."""
    if not isinstance(n, int) or not 0 <= n <= 15:
        raise ValueError(f"algebra id must be an integer in 0..15, got {n!r}")
    return "right" if n & 8 else "left"
