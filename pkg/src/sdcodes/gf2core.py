"""Binary linear codes over GF(2): vectors, matrices, duality, and shadows.

Vectors are stored as packed integers (bit i of the integer is coordinate
i + 1 of the vector), so weight, XOR, AND and inner products are single
machine operations on arbitrary-length words.  All user-facing coordinate
labels, such as supports and file formats, are 1-indexed; bit positions
inside the packed integers are 0-indexed.

Codes are kept in a canonical form: the generator matrix is always the
reduced row echelon form of whatever rows were supplied.  Two ``LinearCode``
objects are equal exactly when they describe the same set of codewords.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Raised when a code file or vector literal cannot be parsed."""


@dataclass(frozen=True)
class BitVector:
    """An immutable vector in GF(2)^length, packed into a Python integer.

    Attributes:
        length: Number of coordinates.
        bits: Packed value; bit i holds coordinate i + 1.
    """

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside of GF(2)^length")

    @classmethod
    def zero(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        """Builds a vector from 1-indexed coordinate labels."""
        bits = 0
        for c in support:
            if not 1 <= c <= length:
                raise ValueError(f"coordinate {c} outside 1..{length}")
            bits |= 1 << (c - 1)
        return cls(length, bits)

    @classmethod
    def from01(cls, text: str) -> "BitVector":
        """Parses a 0/1 string; the first character is coordinate 1."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ParseError(f"invalid character {ch!r} in vector literal")
        return cls(len(text), bits)

    def to01(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    @property
    def support(self) -> tuple[int, ...]:
        """1-indexed coordinates of the nonzero entries."""
        return tuple(i + 1 for i in range(self.length) if self.bits >> i & 1)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: "BitVector") -> int:
        """Standard inner product over GF(2)."""
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def overlap(self, other: "BitVector") -> int:
        """Size of the support intersection (an ordinary integer)."""
        self._check(other)
        return (self.bits & other.bits).bit_count()

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.bits & other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, coord: int) -> int:
        """Entry at a 1-indexed coordinate."""
        if not 1 <= coord <= self.length:
            raise IndexError(f"coordinate {coord} outside 1..{self.length}")
        return self.bits >> (coord - 1) & 1

    def sort_key(self) -> tuple[int, str]:
        """Orders vectors by length, then lexicographically on the 0/1 string."""
        return (self.length, self.to01())

    def __str__(self) -> str:
        return self.to01()

    def _check(self, other: "BitVector"):
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")


def concat(*parts: BitVector) -> BitVector:
    """Concatenates vectors; the first argument occupies the first coordinates."""
    bits = 0
    shift = 0
    for p in parts:
        bits |= p.bits << shift
        shift += p.length
    return BitVector(shift, bits)


@dataclass(frozen=True)
class BitMatrix:
    """An immutable matrix over GF(2), stored as a tuple of equal-length rows."""

    length: int
    rows: tuple[BitVector, ...]

    def __post_init__(self):
        for r in self.rows:
            if r.length != self.length:
                raise ValueError("rows of differing length")

    @classmethod
    def from_rows(cls, length: int, rows: Iterable) -> "BitMatrix":
        """Accepts BitVector, packed-int, or 0/1-string rows."""
        out = []
        for r in rows:
            if isinstance(r, BitVector):
                out.append(r)
            elif isinstance(r, int):
                out.append(BitVector(length, r))
            elif isinstance(r, str):
                v = BitVector.from01(r)
                if v.length != length:
                    raise ValueError(f"row length {v.length} != {length}")
                out.append(v)
            else:
                raise TypeError(f"cannot build a row from {type(r).__name__}")
        return cls(length, tuple(out))

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.rows)

    def __str__(self) -> str:
        return "\n".join(r.to01() for r in self.rows)


def rref(matrix: BitMatrix) -> tuple[BitMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form over GF(2).

    Returns:
        A triple (reduced, rank, pivots).  ``reduced`` keeps only the
        nonzero rows, one per pivot, with each pivot column cleared in
        every other row.  ``pivots`` holds the 0-indexed pivot columns
        in increasing order.
    """
    n = matrix.length
    work = [r.bits for r in matrix.rows]
    pivots = []
    rank = 0
    for col in range(n):
        mask = 1 << col
        pivot = next((i for i in range(rank, len(work)) if work[i] & mask), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & mask:
                work[i] ^= work[rank]
        pivots.append(col)
        rank += 1
    reduced = BitMatrix(n, tuple(BitVector(n, w) for w in work[:rank]))
    return reduced, rank, tuple(pivots)


def reduce_by(vector: BitVector, basis: BitMatrix, pivots: Sequence[int]) -> BitVector:
    """Clears the pivot columns of ``vector`` against an RREF basis.

    The result is the canonical representative of ``vector``'s coset of
    the row space: two vectors reduce to the same value exactly when they
    differ by a row-space element.
    """
    bits = vector.bits
    for row, col in zip(basis.rows, pivots):
        if bits >> col & 1:
            bits ^= row.bits
    return BitVector(vector.length, bits)


class ParityClass(Enum):
    """Weight residue class of a self-dual code.

    DOUBLY_EVEN means every codeword weight is divisible by 4; SINGLY_EVEN
    means all weights are even but some weight is 2 mod 4.
    """

    DOUBLY_EVEN = "doubly_even"
    SINGLY_EVEN = "singly_even"


@dataclass(frozen=True)
class LinearCode:
    """A binary linear code, held as a canonical RREF generator matrix.

    Construct through :meth:`from_rows` unless the rows are already reduced;
    the constructor itself trusts its input.
    """

    length: int
    generators: BitMatrix

    @classmethod
    def from_rows(cls, length: int, rows: Iterable) -> "LinearCode":
        reduced, _, _ = rref(BitMatrix.from_rows(length, rows))
        return cls(length, reduced)

    @property
    def dimension(self) -> int:
        return self.generators.num_rows

    # Short aliases used throughout the numeric modules.
    @property
    def n(self) -> int:
        return self.length

    @property
    def k(self) -> int:
        return self.generators.num_rows

    @cached_property
    def _pivots(self) -> tuple[int, ...]:
        cols = []
        for r in self.generators.rows:
            cols.append((r.bits & -r.bits).bit_length() - 1)
        return tuple(cols)

    def __contains__(self, v: BitVector) -> bool:
        if v.length != self.length:
            return False
        return not reduce_by(v, self.generators, self._pivots)

    def coset_rep(self, v: BitVector) -> BitVector:
        """Canonical representative of v + C."""
        return reduce_by(v, self.generators, self._pivots)

    @cached_property
    def is_self_orthogonal(self) -> bool:
        rows = self.generators.rows
        return all(
            rows[i].dot(rows[j]) == 0
            for i in range(len(rows))
            for j in range(i, len(rows))
        )

    @cached_property
    def is_self_dual(self) -> bool:
        return 2 * self.dimension == self.length and self.is_self_orthogonal

    def words(self) -> Iterator[BitVector]:
        """Yields all codewords.  Only sensible for small dimensions."""
        rows = [r.bits for r in self.generators.rows]
        for m in range(1 << len(rows)):
            bits = 0
            for i, r in enumerate(rows):
                if m >> i & 1:
                    bits ^= r
            yield BitVector(self.length, bits)

    def __str__(self) -> str:
        return f"[{self.length},{self.dimension}] code"


@dataclass(frozen=True)
class CosetSplit:
    """The four-piece decomposition of (C0)^perp for doubly even self-dual C.

    Given an odd-weight x, C0 is the subcode of C orthogonal to x and the
    dual of C0 splits as C0, r1 + C0, r2 + C0, r3 + C0 where r1 lies in
    x + C0, r2 in C \\ C0, and r3 = r1 + r2's coset.  Representatives are
    canonical: each is reduced against C0's RREF basis.
    """

    c0: LinearCode
    r1: BitVector
    r2: BitVector
    r3: BitVector

    @property
    def pieces(self) -> tuple[BitVector, BitVector, BitVector]:
        return (self.r1, self.r2, self.r3)


@dataclass(frozen=True)
class ShadowCoset:
    """The shadow of a self-dual code, as the coset rep + C0.

    ``rep`` is deterministic: of the two C0-cosets making up the shadow,
    each canonical representative is computed, and the lexicographically
    smaller one is kept.
    """

    code: LinearCode
    c0: LinearCode
    rep: BitVector

    def __contains__(self, v: BitVector) -> bool:
        return (v ^ self.rep) in self.c0 or (v ^ self.rep) in self.code


def dual(code: LinearCode) -> LinearCode:
    """The dual code under the standard inner product.

    The nullspace basis is read off the RREF generator matrix: for each
    non-pivot column there is one dual generator supported on that column
    and the pivot columns whose rows have a 1 there.
    """
    n = code.length
    gens = code.generators
    pivots = code._pivots
    pivot_set = set(pivots)
    out = []
    for col in range(n):
        if col in pivot_set:
            continue
        bits = 1 << col
        for row, p in zip(gens.rows, pivots):
            if row.bits >> col & 1:
                bits |= 1 << p
        out.append(BitVector(n, bits))
    reduced, _, _ = rref(BitMatrix(n, tuple(out)))
    return LinearCode(n, reduced)


def parity_class(code: LinearCode) -> ParityClass:
    """Classifies a self-dual code as doubly or singly even.

    Raises:
        ValueError: if the code is not self-dual.
    """
    if not code.is_self_dual:
        raise ValueError("parity class is defined for self-dual codes only")
    # With even pairwise overlaps, weights mod 4 are determined by the
    # generator weights: the code is doubly even iff every generator is.
    if all(r.weight % 4 == 0 for r in code.generators.rows):
        return ParityClass.DOUBLY_EVEN
    return ParityClass.SINGLY_EVEN


def doubly_even_subcode(code: LinearCode) -> LinearCode:
    """The doubly even subcode C0 of a singly even self-dual code.

    C0 collects the codewords of weight divisible by 4 and has index 2.
    Generators with weight 2 mod 4 are corrected by XOR with one fixed
    such generator, which preserves the span over the new subcode.
    """
    if parity_class(code) is not ParityClass.SINGLY_EVEN:
        raise ValueError("expected a singly even self-dual code")
    odd = [r for r in code.generators.rows if r.weight % 4 == 2]
    keep = [r for r in code.generators.rows if r.weight % 4 == 0]
    anchor = odd[0]
    # Self-duality makes generator overlaps even, so wt(anchor ^ r) =
    # 2 + 2 - 2*(even) = 0 mod 4 for every other weight-2-mod-4 row r.
    fixed = [anchor ^ r for r in odd[1:]]
    sub = LinearCode.from_rows(code.length, keep + fixed)
    assert sub.dimension == code.dimension - 1
    assert all(r.weight % 4 == 0 for r in sub.generators.rows)
    return sub


def shadow(code: LinearCode) -> ShadowCoset:
    """The shadow S = C0^perp \\ C of a singly even self-dual code.

    S is a single coset of C inside C0^perp; the stored representative is
    the lexicographically smallest of the two canonical C0-coset reps.

    Raises:
        ValueError: if the code is not singly even self-dual.
    """
    c0 = doubly_even_subcode(code)
    c0_perp = dual(c0)
    in_c = [v for v in c0_perp.generators.rows if v in code]
    out_c = [v for v in c0_perp.generators.rows if v not in code]
    if not out_c:
        raise ValueError("dual of C0 does not extend C")  # unreachable for valid input
    s = out_c[0]
    # The other shadow coset of C0 is s + c for any c in C \ C0.
    c2 = next(r for r in code.generators.rows if r.weight % 4 == 2)
    a = c0.coset_rep(s)
    b = c0.coset_rep(s ^ c2)
    rep = a if a.sort_key() <= b.sort_key() else b
    return ShadowCoset(code=code, c0=c0, rep=rep)


def coset_split(code: LinearCode, x: BitVector) -> CosetSplit:
    """Splits (C0)^perp by an odd-weight vector x for doubly even self-dual C.

    C0 here is the subcode of C orthogonal to x.  The length must be a
    multiple of 8 so that C can be doubly even self-dual.

    Raises:
        ValueError: if C is not doubly even self-dual, or wt(x) is even.
    """
    if x.length != code.length:
        raise ValueError("x has the wrong length")
    if x.weight % 2 == 0:
        raise ValueError("x must have odd weight")
    if not code.is_self_dual or parity_class(code) is not ParityClass.DOUBLY_EVEN:
        raise ValueError("expected a doubly even self-dual code")
    ortho = [r for r in code.generators.rows if r.dot(x) == 0]
    rest = [r for r in code.generators.rows if r.dot(x) == 1]
    # x has odd weight while every codeword weight is even, so x is not in
    # C = C^perp and some generator fails orthogonality with x.
    anchor = rest[0]
    c0 = LinearCode.from_rows(code.length, ortho + [anchor ^ r for r in rest[1:]])
    assert c0.dimension == code.dimension - 1
    r1 = c0.coset_rep(x)
    r2 = c0.coset_rep(anchor)
    r3 = c0.coset_rep(x ^ anchor)
    return CosetSplit(c0=c0, r1=r1, r2=r2, r3=r3)


def rains_bound(n: int) -> int:
    """Upper bound on the minimum weight of a self-dual code of length n."""
    if n <= 0 or n % 2:
        raise ValueError("length must be a positive even integer")
    d = 4 * (n // 24) + 4
    if n % 24 == 22:
        d += 2
    return d


# -- file formats -----------------------------------------------------------
#
# Text format: one 0/1 generator row per line, '#' starts a comment,
# blank lines ignored.  JSON format: {"length": n, "rows": ["0101...", ...]}.


def loads_code(text: str) -> LinearCode:
    """Parses the text format.  Raises ParseError with a 1-based line number."""
    rows = []
    length = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if any(ch not in "01" for ch in line):
            raise ParseError(f"line {lineno}: rows must be strings of 0 and 1")
        if length is None:
            length = len(line)
        elif len(line) != length:
            raise ParseError(
                f"line {lineno}: row length {len(line)} != {length}"
            )
        rows.append(line)
    if not rows:
        raise ParseError("no generator rows found")
    return LinearCode.from_rows(length, rows)


def dumps_code(code: LinearCode) -> str:
    header = f"# [{code.length},{code.dimension}] binary code, RREF generators\n"
    return header + "".join(r.to01() + "\n" for r in code.generators.rows)


def load_code(path) -> LinearCode:
    """Reads a code from a text or JSON file, chosen by the .json suffix."""
    with open(path) as f:
        text = f.read()
    if str(path).endswith(".json"):
        return code_from_json(json.loads(text))
    return loads_code(text)


def save_code(code: LinearCode, path):
    with open(path, "w") as f:
        if str(path).endswith(".json"):
            json.dump(code_to_json(code), f, indent=1)
            f.write("\n")
        else:
            f.write(dumps_code(code))


def code_to_json(code: LinearCode) -> dict:
    return {
        "length": code.length,
        "dimension": code.dimension,
        "rows": [r.to01() for r in code.generators.rows],
    }


def code_from_json(obj: dict) -> LinearCode:
    try:
        length = int(obj["length"])
        rows = list(obj["rows"])
    except (KeyError, TypeError) as e:
        raise ParseError(f"missing or malformed field: {e}") from e
    code = LinearCode.from_rows(length, rows)
    if "dimension" in obj and code.dimension != int(obj["dimension"]):
        raise ParseError(
            f"declared dimension {obj['dimension']} but rows span {code.dimension}"
        )
    return code
