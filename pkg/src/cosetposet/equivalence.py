"""Coordinate permutations acting on codes, and permutation equivalence."""

from __future__ import annotations

from collections import Counter

from .code import LinearCode, build_code, weight_enumerator
from .errors import SizeMismatch, TooLarge
from .gf2 import BinaryMatrix, Permutation, popcount

__all__ = ["Permutation", "apply_permutation", "permutation_equivalent", "coordinate_profiles"]

MAX_SEARCH_LENGTH = 12


def apply_permutation(code: LinearCode, p: Permutation) -> LinearCode:
    """The code {P(u) : u in C}, where P(u) has u_{p(i)} at coordinate i."""
    if p.size != code.n:
        raise SizeMismatch(f"permutation of size {p.size} for a code of length {code.n}")
    rows = [p.apply_bits(r, code.n) for r in code.generator.ints]
    return build_code(BinaryMatrix.from_ints(rows, code.n))


def coordinate_profiles(code: LinearCode) -> list[tuple[int, ...]]:
    """Per coordinate, how many codewords of each weight have a 1 there.

    Permuting coordinates permutes this list, so it is a cheap per-coordinate
    invariant for the search.
    """
    n = code.n
    prof = [[0] * (n + 1) for _ in range(n)]
    for c in code.codeword_bits:
        w = popcount(c)
        for i in range(n):
            if c >> (n - 1 - i) & 1:
                prof[i][w] += 1
    return [tuple(p) for p in prof]


def _image_matches(c: LinearCode, d: LinearCode, p: Permutation) -> bool:
    return {p.apply_bits(u, c.n) for u in c.codeword_bits} == set(d.codeword_bits)


def permutation_equivalent(c: LinearCode, d: LinearCode) -> Permutation | None:
    """A permutation sending ``c`` onto ``d``, or None.

    Codes whose length, dimension, weight enumerator or coordinate profiles
    differ are rejected without search.  Otherwise target coordinates are
    assigned one at a time (most constrained first) and a branch is cut as
    soon as the projections of both codes onto the assigned coordinates stop
    agreeing as multisets.  The search itself is limited to n <= 12.
    """
    if c.n != d.n or c.k != d.k:
        return None
    if weight_enumerator(c) != weight_enumerator(d):
        return None
    prof_c, prof_d = coordinate_profiles(c), coordinate_profiles(d)
    if Counter(prof_c) != Counter(prof_d):
        return None
    n = c.n
    if n > MAX_SEARCH_LENGTH:
        raise TooLarge(f"equivalence search is limited to n <= {MAX_SEARCH_LENGTH}, got {n}")

    class_size = Counter(prof_d)
    targets = sorted(range(n), key=lambda i: (class_size[prof_d[i]], i))
    cands = {i: [j for j in range(n) if prof_c[j] == prof_d[i]] for i in targets}
    words_c, words_d = c.codeword_bits, d.codeword_bits
    mapping = [-1] * n
    used = [False] * n

    def search(depth: int, pre_c: list[int], pre_d: list[int]) -> bool:
        if depth == n:
            return True
        i = targets[depth]
        shift_d = n - 1 - i
        nd = [(q << 1) | (v >> shift_d & 1) for q, v in zip(pre_d, words_d)]
        sd = sorted(nd)
        for j in cands[i]:
            if used[j]:
                continue
            shift_c = n - 1 - j
            nc = [(q << 1) | (u >> shift_c & 1) for q, u in zip(pre_c, words_c)]
            if sorted(nc) != sd:
                continue
            used[j] = True
            mapping[i] = j
            if search(depth + 1, nc, nd):
                return True
            used[j] = False
        return False

    zeros = [0] * len(words_c)
    if not search(0, zeros, list(zeros)):
        return None
    perm = Permutation(tuple(j + 1 for j in mapping))
    if not _image_matches(c, d, perm):
        raise AssertionError("equivalence search produced a permutation that does not map C onto D")
    return perm
