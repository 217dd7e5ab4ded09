"""Word-packed linear algebra over GF(2).

A length-``n`` vector is stored as an ``int`` bitmask.  Coordinate ``i``
(1-based, leftmost character of the printed string) lives at bit position
``n - i``, so ``int("10100", 2)`` is the vector 10100 and integer order agrees
with lexicographic order of the strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LengthMismatch, NotStandardForm, RankDeficient, SizeMismatch, TooLarge

MAX_LENGTH = 24


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, slots=True, order=True)
class BitWord:
    """A vector of F_2^n."""

    bits: int
    length: int

    def __post_init__(self):
        if not 1 <= self.length <= MAX_LENGTH:
            raise TooLarge(f"word length {self.length} outside 1..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def from_str(cls, s: str) -> BitWord:
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a binary word: {s!r}")
        return cls(int(s, 2), len(s))

    @classmethod
    def zero(cls, n: int) -> BitWord:
        return cls(0, n)

    @classmethod
    def unit(cls, i: int, n: int) -> BitWord:
        """The unit vector e_i (1-based coordinate)."""
        if not 1 <= i <= n:
            raise ValueError(f"coordinate {i} outside 1..{n}")
        return cls(1 << (n - i), n)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"BitWord('{self}')"

    def __xor__(self, other: BitWord) -> BitWord:
        _check_lengths(self, other)
        return BitWord(self.bits ^ other.bits, self.length)

    __add__ = __xor__

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        """1-based coordinates of the nonzero entries, increasing."""
        n = self.length
        return tuple(i for i in range(1, n + 1) if self.bits >> (n - i) & 1)

    def coordinate(self, i: int) -> int:
        return self.bits >> (self.length - i) & 1


def _check_lengths(x: BitWord, y: BitWord) -> None:
    if x.length != y.length:
        raise LengthMismatch(f"lengths differ: {x.length} vs {y.length}")


def hamming_distance(x: BitWord, y: BitWord) -> int:
    _check_lengths(x, y)
    return popcount(x.bits ^ y.bits)


def hamming_weight(x: BitWord) -> int:
    return popcount(x.bits)


def support_subset(x: BitWord, y: BitWord) -> bool:
    """True when supp(x) is contained in supp(y)."""
    _check_lengths(x, y)
    return x.bits & ~y.bits == 0


@dataclass(frozen=True, slots=True)
class BinaryMatrix:
    rows: tuple[BitWord, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("a matrix needs at least one row")
        n = rows[0].length
        for r in rows:
            if r.length != n:
                raise LengthMismatch(f"row {r} has length {r.length}, expected {n}")

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> BinaryMatrix:
        return cls(tuple(BitWord.from_str(r) for r in rows))

    @classmethod
    def from_ints(cls, rows: Iterable[int], n_cols: int) -> BinaryMatrix:
        return cls(tuple(BitWord(r, n_cols) for r in rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return self.rows[0].length

    @property
    def ints(self) -> tuple[int, ...]:
        return tuple(r.bits for r in self.rows)

    def column(self, j: int) -> int:
        """Column j (1-based) packed with row 1 as the most significant bit."""
        shift = self.n_cols - j
        col = 0
        for r in self.rows:
            col = (col << 1) | (r.bits >> shift & 1)
        return col

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


@dataclass(frozen=True, slots=True)
class Permutation:
    """A coordinate permutation; ``mapping[i-1]`` is pi(i).

    Applied to a word it places u_{pi(i)} at coordinate i.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", m)
        if sorted(m) != list(range(1, len(m) + 1)):
            raise ValueError(f"not a permutation of 1..{len(m)}: {m}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(tuple(int(t) for t in text.split()))

    @property
    def size(self) -> int:
        return len(self.mapping)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.mapping)

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, v in enumerate(self.mapping, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def then(self, other: Permutation) -> Permutation:
        """The permutation whose action is ``self`` followed by ``other``."""
        if other.size != self.size:
            raise SizeMismatch(f"sizes differ: {self.size} vs {other.size}")
        return Permutation(tuple(self.mapping[j - 1] for j in other.mapping))

    def apply_bits(self, bits: int, n: int) -> int:
        out = 0
        for src in self.mapping:
            out = (out << 1) | (bits >> (n - src) & 1)
        return out

    def apply(self, word: BitWord) -> BitWord:
        if word.length != self.size:
            raise SizeMismatch(f"permutation of size {self.size} applied to length {word.length}")
        return BitWord(self.apply_bits(word.bits, word.length), word.length)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.mapping, start=1))


def rref_bits(rows: Sequence[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of int rows; returns (nonzero rows, 1-based pivots)."""
    work = [r for r in rows]
    out: list[int] = []
    pivots: list[int] = []
    for col in range(1, n_cols + 1):
        bit = 1 << (n_cols - col)
        piv = next((i for i, r in enumerate(work) if r & bit), None)
        if piv is None:
            continue
        prow = work.pop(piv)
        work = [r ^ prow if r & bit else r for r in work]
        out = [r ^ prow if r & bit else r for r in out]
        out.append(prow)
        pivots.append(col)
    return out, pivots


def rref(m: BinaryMatrix) -> tuple[BinaryMatrix | None, int, list[int]]:
    """Reduced row echelon form with zero rows dropped.

    Returns ``(reduced, rank, pivot_cols)``; ``reduced`` is ``None`` for the
    zero matrix since a :class:`BinaryMatrix` cannot be empty.
    """
    rows, pivots = rref_bits(m.ints, m.n_cols)
    reduced = BinaryMatrix.from_ints(rows, m.n_cols) if rows else None
    return reduced, len(pivots), pivots


def rank(m: BinaryMatrix) -> int:
    return len(rref_bits(m.ints, m.n_cols)[1])


def first_dependent_row(rows: Sequence[int], n_cols: int) -> int | None:
    """1-based index of the first row lying in the span of the earlier rows."""
    basis: list[int] = []
    for idx, r in enumerate(rows, start=1):
        new, _ = rref_bits(basis + [r], n_cols)
        if len(new) == len(basis):
            return idx
        basis = new
    return None


def standard_form(g: BinaryMatrix) -> tuple[BinaryMatrix, Permutation]:
    """Bring a full-rank generator to ``[I_k | A]``.

    The pivot columns of the RREF are moved to the front, the remaining
    columns keep their relative order.  The returned permutation ``p``
    satisfies ``rowspace(std) == {p.apply(c) : c in rowspace(g)}``.
    """
    n, k = g.n_cols, g.n_rows
    rows, pivots = rref_bits(g.ints, n)
    if len(pivots) < k:
        bad = first_dependent_row(g.ints, n)
        raise RankDeficient(f"rank {len(pivots)} < {k} rows (row {bad} is dependent)", row=bad)
    pivot_set = set(pivots)
    perm = Permutation(tuple(pivots) + tuple(j for j in range(1, n + 1) if j not in pivot_set))
    std = BinaryMatrix.from_ints([perm.apply_bits(r, n) for r in rows], n)
    return std, perm


def is_standard_form(m: BinaryMatrix) -> bool:
    k, n = m.n_rows, m.n_cols
    if k > n:
        return False
    for i, r in enumerate(m.rows, start=1):
        if r.bits >> (n - k) != 1 << (k - i):
            return False
    return True


def parity_check_from_standard(std: BinaryMatrix) -> BinaryMatrix:
    """H = [A^T | I_{n-k}] for a generator [I_k | A]."""
    k, n = std.n_rows, std.n_cols
    if k >= n:
        raise NotStandardForm(f"need k < n, got k={k}, n={n}")
    if not is_standard_form(std):
        raise NotStandardForm("left block is not the identity")
    r = n - k
    a_rows = [row.bits & ((1 << r) - 1) for row in std.rows]
    h_rows = []
    for j in range(r):
        # column j of A, read top to bottom, becomes the left block of row j
        left = 0
        for a in a_rows:
            left = (left << 1) | (a >> (r - 1 - j) & 1)
        h_rows.append((left << r) | (1 << (r - 1 - j)))
    return BinaryMatrix.from_ints(h_rows, n)


def transpose_bits(rows: Sequence[int], n_cols: int) -> list[int]:
    """Columns of the matrix, each packed with row 1 as the top bit."""
    m = len(rows)
    cols = []
    for j in range(1, n_cols + 1):
        shift = n_cols - j
        c = 0
        for r in rows:
            c = (c << 1) | (r >> shift & 1)
        cols.append(c)
    return cols if m else [0] * n_cols


def span_bits(rows: Sequence[int]) -> list[int]:
    """All GF(2) combinations of the rows, sorted."""
    out = [0]
    for r in rows:
        out += [x ^ r for x in out]
    return sorted(set(out))
