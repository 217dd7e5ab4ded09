"""Binary linear codes and their coset structure."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LengthMismatch, NotProperSubspace, RankDeficient, TableMismatch, TooLarge
from .gf2 import (
    MAX_LENGTH,
    BinaryMatrix,
    BitWord,
    first_dependent_row,
    parity_check_from_standard,
    popcount,
    rref_bits,
    span_bits,
    standard_form,
    transpose_bits,
)


@dataclass(frozen=True)
class LinearCode:
    """A binary [n, k] code with k < n.

    ``codewords`` is sorted by integer value.  ``column_syndromes[i-1]`` is
    column i of ``parity_check`` packed with row 1 as the top bit, which is
    also the syndrome of the unit vector e_i.
    """

    generator: BinaryMatrix
    parity_check: BinaryMatrix
    codewords: tuple[BitWord, ...]
    column_syndromes: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.generator.n_cols

    @property
    def k(self) -> int:
        return self.generator.n_rows

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def codeword_bits(self) -> tuple[int, ...]:
        return tuple(c.bits for c in self.codewords)

    def syndrome_bits(self, y: int) -> int:
        s = 0
        n = self.n
        cols = self.column_syndromes
        while y:
            low = y & -y
            s ^= cols[n - low.bit_length()]
            y ^= low
        return s

    def __contains__(self, word: BitWord) -> bool:
        return word.length == self.n and self.syndrome_bits(word.bits) == 0


def build_code(g: BinaryMatrix) -> LinearCode:
    n, k = g.n_cols, g.n_rows
    if n > MAX_LENGTH:
        raise TooLarge(f"n = {n} exceeds {MAX_LENGTH}")
    rows, pivots = rref_bits(g.ints, n)
    if len(pivots) < k:
        bad = first_dependent_row(g.ints, n)
        raise RankDeficient(f"generator has rank {len(pivots)} < {k}; row {bad} is dependent", row=bad)
    if k >= n:
        raise NotProperSubspace(f"k = {k} must be smaller than n = {n}")
    std, perm = standard_form(g)
    h_std = parity_check_from_standard(std)
    # undo the column permutation so H annihilates the caller's code
    inv = perm.inverse()
    h = BinaryMatrix.from_ints([inv.apply_bits(r, n) for r in h_std.ints], n)
    codewords = tuple(BitWord(c, n) for c in span_bits(g.ints))
    return LinearCode(g, h, codewords, tuple(transpose_bits(h.ints, n)))


def syndrome(code: LinearCode, y: BitWord) -> BitWord:
    """S(y) = H y^T as a word of length n - k."""
    if y.length != code.n:
        raise LengthMismatch(f"word of length {y.length} for a code of length {code.n}")
    return BitWord(code.syndrome_bits(y.bits), code.redundancy)


@dataclass(frozen=True)
class Coset:
    syndrome: BitWord
    weight: int
    leaders: tuple[BitWord, ...]

    @property
    def representative(self) -> BitWord:
        return self.leaders[0]


@dataclass(frozen=True)
class CosetTable:
    """All 2^(n-k) cosets of a code, sorted by (weight, representative).

    The position of a coset in ``cosets`` is its vertex index everywhere else
    in the package and the ``i`` of its display label ``C_i``.
    """

    code: LinearCode
    cosets: tuple[Coset, ...]
    leader_bits: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    weights: tuple[int, ...] = field(repr=False, compare=False)
    _by_syndrome: dict = field(repr=False, compare=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.cosets)

    def __iter__(self):
        return iter(self.cosets)

    def __getitem__(self, i: int) -> Coset:
        return self.cosets[i]

    def index_of_syndrome(self, s: int) -> int:
        return self._by_syndrome[s]

    def index_of_word(self, y: int) -> int:
        """Vertex index of the coset containing the word with bits ``y``."""
        return self._by_syndrome[self.code.syndrome_bits(y)]

    def index_of(self, coset: Coset) -> int:
        idx = self._by_syndrome.get(coset.syndrome.bits)
        if coset.syndrome.length != self.code.redundancy or idx is None or self.cosets[idx] != coset:
            raise TableMismatch(f"coset with syndrome {coset.syndrome} is not in this table")
        return idx

    def coset_of(self, y: BitWord) -> Coset:
        return self.cosets[self._by_syndrome[syndrome(self.code, y).bits]]


def _leader_levels(code: LinearCode) -> dict[int, tuple[int, list[int]]]:
    """Map syndrome -> (coset weight, leader bitmasks) by weight-ordered growth.

    Every one-coordinate deletion of a coset leader is again a coset leader,
    so the weight-w leaders are found among the one-coordinate extensions of
    the weight-(w-1) leaders.  Each extension is generated once by only
    adding a coordinate to the right of the current rightmost one.
    """
    n = code.n
    total = 1 << code.redundancy
    cols = code.column_syndromes
    found: dict[int, tuple[int, list[int]]] = {0: (0, [0])}
    level = [(0, 0)]  # (leader bits, syndrome)
    w = 0
    while len(found) < total and level:
        w += 1
        fresh: dict[int, list[int]] = {}
        nxt = []
        for x, s in level:
            # rightmost set coordinate of x sits at bit (x & -x); extend below it
            top = (x & -x).bit_length() - 1 if x else n
            for b in range(top):
                t = s ^ cols[n - 1 - b]
                if t in found:
                    continue
                y = x | (1 << b)
                fresh.setdefault(t, []).append(y)
                nxt.append((y, t))
        for t, ls in fresh.items():
            found[t] = (w, ls)
        level = nxt
    return found


def enumerate_cosets(code: LinearCode) -> CosetTable:
    if code.n > MAX_LENGTH:
        raise TooLarge(f"n = {code.n} exceeds {MAX_LENGTH}")
    n, r = code.n, code.redundancy
    found = _leader_levels(code)
    entries = sorted((w, sorted(ls), s) for s, (w, ls) in found.items())
    cosets = tuple(
        Coset(BitWord(s, r), w, tuple(BitWord(x, n) for x in ls)) for w, ls, s in entries
    )
    return CosetTable(
        code,
        cosets,
        tuple(tuple(ls) for _, ls, _ in entries),
        tuple(w for w, _, _ in entries),
        {s: i for i, (_, _, s) in enumerate(entries)},
    )


def covering_radius(table: CosetTable) -> int:
    return max(table.weights)


def minimum_distance(code: LinearCode) -> int:
    return min(c.weight for c in code.codewords if c.bits)


def weight_enumerator(code: LinearCode) -> list[int]:
    """Coefficient list A_0..A_n of the codeword weight distribution."""
    counts = [0] * (code.n + 1)
    for c in code.codewords:
        counts[popcount(c.bits)] += 1
    return counts


def correctable_weight(code: LinearCode) -> int:
    """t = floor((d - 1) / 2)."""
    return (minimum_distance(code) - 1) // 2
