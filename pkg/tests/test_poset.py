import pytest
from hypothesis import given, settings

from cosetposet import (
    BitWord,
    TableMismatch,
    build_hasse,
    corollary_distance,
    enumerate_cosets,
    orphans,
    precedes,
)
from cosetposet.graph import bfs_distances
from cosetposet.poset import descendant_masks

from conftest import code_from
from strategies import codes


def literal_edges(table):
    """Pairs (child, parent) straight from the definition: a strictly precedes
    b, weights differ by one, checked over every leader pair."""
    out = set()
    for i, a in enumerate(table):
        for j, b in enumerate(table):
            if b.weight == a.weight + 1 and precedes(a, b, strict=True):
                out.add((i, j))
    return out


def literal_below(table):
    return [{i for i, a in enumerate(table) if i != j and precedes(a, b)} for j, b in enumerate(table)]


class TestPrecedes:
    def test_example_one(self, ex1):
        t = enumerate_cosets(ex1)
        c6 = t.coset_of(BitWord.from_str("10100"))
        assert precedes(t[0], c6, strict=True)
        assert precedes(t.coset_of(BitWord.from_str("00100")), c6)
        assert precedes(t.coset_of(BitWord.from_str("01000")), c6)
        assert not precedes(t.coset_of(BitWord.from_str("00001")), c6)
        assert precedes(c6, c6) and not precedes(c6, c6, strict=True)

    def test_mismatched_tables(self, ex1, code_m):
        with pytest.raises(TableMismatch):
            precedes(enumerate_cosets(ex1)[1], enumerate_cosets(code_m)[1])


class TestHasse:
    def test_example_one_edges(self, ex1):
        g = build_hasse(enumerate_cosets(ex1))
        assert len(g.edges) == 13
        assert g.adjacency[0] == (1, 2, 3, 4, 5)
        assert set(g.edges) == literal_edges(g.table)
        assert orphans(g) == [1, 6, 7]
        # C6 = {01010, 10100} sits above the four weight-1 cosets it contains
        assert g.children(6) == [2, 3, 4, 5]

    def test_example_two_orphans(self, ex2):
        g = build_hasse(enumerate_cosets(ex2))
        assert g.n_vertices == 16
        assert orphans(g) == [7, 14, 15]

    @settings(max_examples=40)
    @given(codes(max_n=7))
    def test_edges_match_definition(self, code):
        g = build_hasse(enumerate_cosets(code))
        assert set(g.edges) == literal_edges(g.table)
        for u, v in g.edges:
            assert u < v
            assert u in g.children(v) and v in g.parents(u)

    @settings(max_examples=40)
    @given(codes(max_n=7))
    def test_descendants_match_definition(self, code):
        table = enumerate_cosets(code)
        masks = descendant_masks(table)
        for j, below in enumerate(literal_below(table)):
            assert {i for i in range(len(table)) if masks[j] >> i & 1} == below

    @settings(max_examples=40)
    @given(codes(max_n=8))
    def test_orphans_are_maximal(self, code):
        g = build_hasse(enumerate_cosets(code))
        table = g.table
        for v in orphans(g):
            assert not any(precedes(table[v], b, strict=True) for b in table)
        assert 0 not in orphans(g)


class TestCorollaryDistance:
    def test_weight_one_to_weight_two(self, ex1):
        t = enumerate_cosets(ex1)
        value, walk = corollary_distance(t, 1, 6)
        # C1 (00001) shares only C0 below with C6 (01010, 10100)
        assert value == 3
        assert walk[0] == 1 and walk[-1] == 6 and 0 in walk and len(walk) == 4

    def test_from_zero_is_weight(self, ex2):
        t = enumerate_cosets(ex2)
        for i in range(1, len(t)):
            value, walk = corollary_distance(t, 0, i)
            assert value == t[i].weight == len(walk) - 1

    def test_two_weight_two_cosets(self, ex1):
        t = enumerate_cosets(ex1)
        value, walk = corollary_distance(t, 6, 7)
        assert value == 2 and len(walk) == 3

    def test_accepts_coset_objects(self, ex1):
        t = enumerate_cosets(ex1)
        assert corollary_distance(t, t[2], t[7]) == corollary_distance(t, 2, 7)

    def test_rejects_bad_input(self, ex1, code_m):
        t = enumerate_cosets(ex1)
        with pytest.raises(ValueError):
            corollary_distance(t, 3, 3)
        with pytest.raises(TableMismatch):
            corollary_distance(t, 0, 99)
        with pytest.raises(TableMismatch):
            corollary_distance(t, 0, enumerate_cosets(code_m)[3])

    @settings(max_examples=40)
    @given(codes(max_n=8))
    def test_bfs_never_exceeds_value(self, code):
        t = enumerate_cosets(code)
        g = build_hasse(t)
        for a in range(len(t)):
            dist = bfs_distances(g, a)
            for b in range(a + 1, len(t)):
                value, walk = corollary_distance(t, a, b)
                assert walk[0] == a and walk[-1] == b
                assert all(walk[i + 1] in g.adjacency[walk[i]] for i in range(len(walk) - 1))
                assert dist[b] <= len(walk) - 1
                assert dist[b] <= value

    def test_repetition_code_strict_pair(self):
        """Two weight-2 cosets joined through a common parent, not a common child."""
        t = enumerate_cosets(code_from(["111111"]))
        g = build_hasse(t)
        a = t.index_of_word(0b000011)
        b = t.index_of_word(0b001100)
        value, _ = corollary_distance(t, a, b)
        assert value == 4
        assert bfs_distances(g, a)[b] == 2
        parent = t.index_of_word(0b010011)
        assert [str(x) for x in t[parent].leaders] == ["010011", "101100"]
        assert parent in g.parents(a) and parent in g.parents(b)
