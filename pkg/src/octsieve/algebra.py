"""Octonion arithmetic under the 16 equivalent multiplication rules.

An octonion is an 8-tuple of real coefficients over the basis
{1, i1, ..., i7}.  Multiplication is fixed by seven oriented associative
triplets (the lines of the Fano plane): for an oriented triplet (l, m, n)
the units satisfy i_l i_m = i_n cyclically, together with i_k^2 = -1 and
anticommutativity of distinct imaginary units.

Flipping the orientation of triplets in a structured way produces sixteen
pairwise distinct but equivalent algebras O[0]..O[15].  The flips are
generated by four involutions T0..T3 acting on the triplet parities; an
algebra id n encodes which generators are applied to the reference rule
O[0] (bit weights: T0=8, T1=4, T2=2, T3=1).  Ids 0..7 are the left-handed
rules, 8..15 the right-handed ones.

All values here are immutable and all functions are pure.  Integer
coefficients propagate exactly through every operation, which is what the
verification suite relies on for equality (rather than tolerance)
assertions.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

__all__ = [
    "REFERENCE_TRIPLETS",
    "GENERATOR_FLIPS",
    "NotEquivalentAlgebraError",
    "Octonion",
    "flip_vector",
    "parity_word",
    "oriented_triplets",
    "triplet_set",
    "mul_table",
    "multiply",
    "conjugate",
    "norm",
    "norm_sq",
    "inverse",
    "identify_algebra",
    "table_from_tensor",
]

# The reference rule O[0]: seven oriented triplets covering each pair of
# distinct indices 1..7 exactly once.
REFERENCE_TRIPLETS: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (7, 6, 1),
    (5, 7, 2),
    (6, 5, 3),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
)

# Parity-flip patterns of the four generators, one flag per reference
# triplet (1 = swap orientation).  T0 flips three triplets and exchanges
# chirality; T1..T3 flip four triplets each and preserve chirality.
# Keyed by the generator's bit weight in an algebra id.
GENERATOR_FLIPS: dict[int, tuple[int, ...]] = {
    8: (0, 0, 0, 0, 1, 1, 1),  # T0
    4: (1, 1, 1, 1, 0, 0, 0),  # T1
    2: (0, 1, 0, 1, 1, 0, 1),  # T2
    1: (0, 0, 1, 1, 0, 1, 1),  # T3
}

# Table entry: (sign, basis index), index 0 being the real unit.
TableEntry = tuple[int, int]
MulTable = tuple[tuple[TableEntry, ...], ...]
TripletSet = tuple[tuple[int, int, int], ...]


class NotEquivalentAlgebraError(ValueError):
    """A multiplication table does not match any of the 16 rules."""


def _check_algebra_id(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= 15:
        raise ValueError(f"algebra id must be an integer in 0..15, got {n!r}")
    return n


class Octonion:
    """An immutable 8-tuple of real coefficients (a0, ..., a7).

    a0 is the real part; a1..a7 sit on the imaginary units i1..i7.  The
    class only carries the vector-space structure (addition, scalar
    scaling); products depend on the choice of multiplication rule and go
    through :func:`multiply`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[float]):
        cs = tuple(coeffs)
        if len(cs) != 8:
            raise ValueError(f"an octonion needs 8 coefficients, got {len(cs)}")
        for c in cs:
            if not isinstance(c, (int, float)) or isinstance(c, bool):
                raise TypeError(f"coefficients must be real numbers, got {c!r}")
            if not math.isfinite(c):
                raise ValueError(f"coefficients must be finite, got {c!r}")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def one(cls) -> "Octonion":
        return cls.unit(0)

    @classmethod
    def unit(cls, k: int) -> "Octonion":
        """Basis element e_k: the real unit for k=0, else i_k."""
        if not 0 <= k <= 7:
            raise ValueError(f"basis index must be in 0..7, got {k}")
        return cls(tuple(1 if i == k else 0 for i in range(8)))

    @classmethod
    def real(cls, value: float) -> "Octonion":
        return cls((value, 0, 0, 0, 0, 0, 0, 0))

    @property
    def real_part(self) -> float:
        return self.coeffs[0]

    @property
    def imag_parts(self) -> tuple[float, ...]:
        return self.coeffs[1:]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "Octonion":
        return Octonion(-c for c in self.coeffs)

    def __mul__(self, scalar):
        # Scalar scaling only; octonion products need an algebra id.
        if isinstance(scalar, Octonion):
            raise TypeError("octonion products need a rule: use multiply(a, b, n)")
        if not isinstance(scalar, (int, float)):
            return NotImplemented
        return Octonion(scalar * c for c in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k: int) -> float:
        return self.coeffs[k]

    def __repr__(self) -> str:
        return f"Octonion({list(self.coeffs)!r})"


def flip_vector(mask: int) -> tuple[int, ...]:
    """Seven parity-flip flags obtained by XOR-ing the generator patterns
    selected by ``mask`` (bit weights T0=8, T1=4, T2=2, T3=1)."""
    _check_algebra_id(mask)
    out = (0,) * 7
    for bit, pattern in GENERATOR_FLIPS.items():
        if mask & bit:
            out = tuple(a ^ b for a, b in zip(out, pattern))
    return out


def parity_word(n: int) -> str:
    """Orientation of each reference triplet in rule n, as '+'/'-' chars."""
    return "".join("-" if f else "+" for f in flip_vector(n))


def _flips_from_word(word: str) -> tuple[int, ...]:
    if len(word) != 7 or any(c not in "+-" for c in word):
        raise ValueError(f"parity word must be 7 chars of '+'/'-', got {word!r}")
    return tuple(1 if c == "-" else 0 for c in word)


def oriented_triplets(word: str) -> TripletSet:
    """Reference triplets reoriented per a parity word.

    A '-' triplet is written with its last two indices transposed, the
    canonical odd-permutation representative.
    """
    out = []
    for flag, (l, m, n) in zip(_flips_from_word(word), REFERENCE_TRIPLETS):
        out.append((l, n, m) if flag else (l, m, n))
    return tuple(out)


def triplet_set(n: int) -> tuple[TripletSet, str]:
    """Oriented triplets and parity word of rule n (0..15)."""
    word = parity_word(n)
    return oriented_triplets(word), word


def _build_table(n: int) -> MulTable:
    entries: list[list[TableEntry]] = [[(1, 0)] * 8 for _ in range(8)]
    for k in range(8):
        entries[0][k] = (1, k)
        entries[k][0] = (1, k)
    for k in range(1, 8):
        entries[k][k] = (-1, 0)
    flips = flip_vector(n)
    for idx, (l, m, k) in enumerate(REFERENCE_TRIPLETS):
        s = -1 if flips[idx] else 1
        for x, y, z in ((l, m, k), (m, k, l), (k, l, m)):
            entries[x][y] = (s, z)
            entries[y][x] = (-s, z)
    return tuple(tuple(row) for row in entries)


_TABLES: tuple[MulTable, ...] = tuple(_build_table(n) for n in range(16))


def mul_table(n: int) -> MulTable:
    """The 8x8 signed basis table of rule n: table[i][j] = (sign, k) with
    e_i e_j = sign * e_k."""
    return _TABLES[_check_algebra_id(n)]


def multiply(a: Octonion, b: Octonion, n: int) -> Octonion:
    """Product of a and b under rule n (bilinear extension of the table)."""
    table = _TABLES[_check_algebra_id(n)]
    out = [0] * 8
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        row = table[i]
        for j, bj in enumerate(b.coeffs):
            if bj == 0:
                continue
            s, k = row[j]
            out[k] += s * ai * bj
    return Octonion(out)


def conjugate(a: Octonion) -> Octonion:
    """Real part kept, all imaginary coefficients negated."""
    return Octonion((a.coeffs[0],) + tuple(-c for c in a.coeffs[1:]))


def norm_sq(a: Octonion) -> float:
    """Squared Euclidean norm; exact for integer coefficients."""
    return sum(c * c for c in a.coeffs)


def norm(a: Octonion) -> float:
    """Euclidean length of the coefficient 8-tuple (the multiplicative norm)."""
    return math.sqrt(norm_sq(a))


def inverse(a: Octonion, n: int) -> Octonion:
    """Multiplicative inverse conj(a)/|a|^2; the same for every rule n."""
    _check_algebra_id(n)
    ns = norm_sq(a)
    if ns == 0:
        raise ZeroDivisionError("the zero octonion has no inverse")
    return Octonion(c / ns for c in conjugate(a).coeffs)


def _check_table_shape(table) -> MulTable:
    rows = tuple(tuple(row) for row in table)
    if len(rows) != 8 or any(len(row) != 8 for row in rows):
        raise ValueError("multiplication table must be 8x8")
    for row in rows:
        for entry in row:
            if (
                not isinstance(entry, tuple)
                or len(entry) != 2
                or entry[0] not in (1, -1)
                or entry[1] not in range(8)
            ):
                raise ValueError(f"table entries must be (sign, index 0..7), got {entry!r}")
    return rows


def identify_algebra(table) -> int:
    """The unique rule id whose table equals ``table``.

    Raises NotEquivalentAlgebraError when the table is none of the 16.
    """
    rows = _check_table_shape(table)
    for n in range(16):
        if rows == _TABLES[n]:
            return n
    raise NotEquivalentAlgebraError("table does not match any of the 16 equivalent rules")


def table_from_tensor(tensor: Sequence[Sequence[Sequence[float]]]) -> MulTable:
    """Collapse an 8x8x8 structure-constant tensor to a signed basis table.

    tensor[i][j][k] is the coefficient of e_k in e_i e_j.  Each product of
    basis elements must land on exactly one basis element with coefficient
    +1 or -1; anything else is rejected.
    """
    if len(tensor) != 8 or any(len(plane) != 8 for plane in tensor):
        raise ValueError("tensor must be 8x8x8")
    entries: list[list[TableEntry]] = []
    for i in range(8):
        row: list[TableEntry] = []
        for j in range(8):
            comps = tensor[i][j]
            if len(comps) != 8:
                raise ValueError("tensor must be 8x8x8")
            support = [(k, c) for k, c in enumerate(comps) if c != 0]
            if len(support) != 1 or support[0][1] not in (1, -1):
                raise ValueError(
                    f"entry ({i},{j}) is not a signed basis element: {list(comps)!r}"
                )
            k, c = support[0]
            row.append((int(c), k))
        entries.append(row)
    return tuple(tuple(row) for row in entries)
