import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosetposet import (
    BinaryMatrix,
    BitWord,
    LengthMismatch,
    NotStandardForm,
    Permutation,
    RankDeficient,
    TooLarge,
    hamming_distance,
    hamming_weight,
    parity_check_from_standard,
    rref,
    standard_form,
    support_subset,
)

from strategies import codes


def row_space(rows):
    """All combinations by explicit subset enumeration (no shared helpers)."""
    rows = list(rows)
    out = set()
    for choose in itertools.product((0, 1), repeat=len(rows)):
        acc = 0
        for c, r in zip(choose, rows):
            if c:
                acc ^= r
        out.add(acc)
    return out


def dot(a: int, b: int) -> int:
    return bin(a & b).count("1") % 2


def same_length_words(k):
    return st.integers(1, 12).flatmap(
        lambda n: st.tuples(*[st.integers(0, (1 << n) - 1).map(lambda b: BitWord(b, n)) for _ in range(k)])
    )


class TestBitWord:
    def test_coordinate_convention(self):
        w = BitWord.from_str("10000")
        assert w.bits == 1 << 4
        assert w.support == (1,)
        assert w.coordinate(1) == 1 and w.coordinate(5) == 0
        assert BitWord.unit(3, 5) == BitWord.from_str("00100")

    @given(st.text(alphabet="01", min_size=1, max_size=24))
    def test_string_round_trip(self, s):
        assert str(BitWord.from_str(s)) == s

    def test_integer_order_is_string_order(self):
        strs = ["".join(p) for p in itertools.product("01", repeat=5)]
        assert sorted(strs) == [str(w) for w in sorted(BitWord.from_str(s) for s in strs)]

    def test_rejects_overflow_and_length(self):
        with pytest.raises(ValueError):
            BitWord(0b100, 2)
        with pytest.raises(TooLarge):
            BitWord(0, 25)


class TestRref:
    def test_two_row_example(self):
        m = BinaryMatrix.from_strings(["11110", "00111"])
        reduced, rank, pivots = rref(m)
        assert [str(r) for r in reduced.rows] == ["11001", "00111"]
        assert rank == 2
        assert pivots == [1, 3]
        assert row_space(reduced.ints) == row_space(m.ints)
        assert len(row_space(m.ints)) == 4

    def test_identity(self):
        m = BinaryMatrix.from_strings(["100", "010", "001"])
        reduced, rank, pivots = rref(m)
        assert reduced == m and rank == 3 and pivots == [1, 2, 3]

    def test_zero(self):
        reduced, rank, pivots = rref(BinaryMatrix.from_strings(["0000"]))
        assert reduced is None and rank == 0 and pivots == []

    @given(st.integers(1, 8).flatmap(
        lambda n: st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=6).map(lambda rs: (n, rs))))
    def test_idempotent_and_span_preserving(self, case):
        n, rows = case
        m = BinaryMatrix.from_ints(rows, n)
        reduced, rank, pivots = rref(m)
        assert row_space(rows) == (row_space(reduced.ints) if reduced else {0})
        assert rank == len(pivots) and pivots == sorted(set(pivots))
        if reduced is not None:
            assert rref(reduced)[0] == reduced
            for i, p in enumerate(pivots):
                col = reduced.column(p)
                assert col == 1 << (rank - 1 - i)


class TestStandardForm:
    def test_example_swaps_columns_two_and_three(self):
        g = BinaryMatrix.from_strings(["11110", "00111"])
        std, perm = standard_form(g)
        assert perm == Permutation((1, 3, 2, 4, 5))
        assert [str(r) for r in std.rows] == ["10101", "01011"]
        assert row_space(std.ints) == {perm.apply_bits(c, 5) for c in row_space(g.ints)}

    def test_already_standard(self):
        g = BinaryMatrix.from_strings(["100011", "010101", "001110"])
        std, perm = standard_form(g)
        assert std == g and perm.is_identity()

    def test_rank_deficient(self):
        with pytest.raises(RankDeficient) as info:
            standard_form(BinaryMatrix.from_strings(["1100", "1100"]))
        assert info.value.row == 2


class TestParityCheck:
    def test_counterexample_matrix(self):
        m = BinaryMatrix.from_strings(["100011", "010101", "001110"])
        h = parity_check_from_standard(m)
        assert [str(r) for r in h.rows] == ["011100", "101010", "110001"]
        words = row_space(m.ints)
        assert len(words) == 8
        assert all(dot(r, c) == 0 for r in h.ints for c in words)

    def test_single_parity_row(self):
        std = BinaryMatrix.from_strings(["1001", "0101", "0011"])
        assert [str(r) for r in parity_check_from_standard(std).rows] == ["1111"]

    def test_not_standard(self):
        with pytest.raises(NotStandardForm):
            parity_check_from_standard(BinaryMatrix.from_strings(["0110", "1001"]))
        with pytest.raises(NotStandardForm):
            parity_check_from_standard(BinaryMatrix.from_strings(["10", "01"]))

    @given(codes(max_n=10))
    def test_generator_annihilated(self, code):
        std, _ = standard_form(code.generator)
        h = parity_check_from_standard(std)
        assert all(dot(r, g) == 0 for r in h.ints for g in std.ints)
        # and the code's own parity check works on the unpermuted generator
        assert all(dot(r, g) == 0 for r in code.parity_check.ints for g in code.generator.ints)


class TestMetrics:
    def test_distance_examples(self):
        x, y = BitWord.from_str("11110"), BitWord.from_str("00111")
        assert hamming_distance(x, y) == sum(a != b for a, b in zip(str(x), str(y))) == 3
        assert hamming_distance(x, x) == 0
        assert hamming_distance(BitWord.from_str("00000"), BitWord.from_str("11111")) == 5
        assert hamming_weight(x) == 4

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            hamming_distance(BitWord.from_str("01"), BitWord.from_str("011"))
        with pytest.raises(LengthMismatch):
            support_subset(BitWord.from_str("01"), BitWord.from_str("011"))

    @given(same_length_words(3))
    def test_metric_axioms(self, xyz):
        x, y, z = xyz
        assert hamming_distance(x, y) == hamming_distance(y, x)
        assert (hamming_distance(x, y) == 0) == (x == y)
        assert hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z)

    def test_support_examples(self):
        assert support_subset(BitWord.from_str("10000"), BitWord.from_str("10100"))
        assert not support_subset(BitWord.from_str("00001"), BitWord.from_str("10100"))
        assert all(support_subset(BitWord(0, 4), BitWord(b, 4)) for b in range(16))

    @given(same_length_words(3))
    def test_support_order_axioms(self, xyz):
        x, y, z = xyz
        assert support_subset(x, x)
        if support_subset(x, y) and support_subset(y, x):
            assert x == y
        if support_subset(x, y) and support_subset(y, z):
            assert support_subset(x, z)
        assert support_subset(x, y) == set(x.support).issubset(y.support)


class TestPermutation:
    @given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.permutations(range(1, n + 1)),
                                                        st.permutations(range(1, n + 1)),
                                                        st.integers(0, (1 << n) - 1))))
    def test_apply_inverse_then(self, case):
        p, q, bits = case
        p, q = Permutation(tuple(p)), Permutation(tuple(q))
        w = BitWord(bits, p.size)
        assert p.inverse().apply(p.apply(w)) == w
        assert p.then(q).apply(w) == q.apply(p.apply(w))
        assert p.apply(w).weight == w.weight

    def test_formula_places_source_coordinate(self):
        p = Permutation((2, 3, 1))
        # P(u1 u2 u3) = u2 u3 u1
        assert str(p.apply(BitWord.from_str("100"))) == "001"
        assert Permutation.parse(str(p)) == p

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))
