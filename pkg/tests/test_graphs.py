import random

import networkx as nx
import pytest

import reedcheck as rc
from reedcheck.graphs import Graph, Graph6Error


def test_graph_validation_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b10))  # loops
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0b000))  # bit beyond n-1
    with pytest.raises(ValueError):
        Graph(1, (0, 0))  # row count mismatch


def test_degenerate_graphs_are_legal():
    assert Graph.empty(0).n == 0
    assert Graph.empty(1).m == 0
    assert rc.graph_from_graph6(rc.graph_to_graph6(Graph.empty(0))) == Graph.empty(0)


# graph6 codec ---------------------------------------------------------------

def test_hand_decoded_vectors():
    k2 = rc.graph_from_graph6("A_")
    assert k2 == Graph.complete(2)
    assert rc.graph_from_graph6("?") == Graph.empty(0)
    assert rc.graph_from_graph6("@") == Graph.empty(1)
    assert rc.graph_to_graph6(Graph.complete(2)) == "A_"
    assert rc.graph_to_graph6(Graph.empty(1)) == "@"


def test_header_is_tolerated():
    assert rc.graph_from_graph6(">>graph6<<A_") == Graph.complete(2)


def test_encoding_rejects_oversized_graphs():
    with pytest.raises(Graph6Error):
        rc.graph_to_graph6(Graph.empty(63))


@pytest.mark.parametrize(
    "text, offset",
    [
        (">", 0),            # length byte below '?'
        ("~", 0),            # multi-byte size marker
        ("A", 1),            # truncated body
        ("A_?", 2),          # trailing garbage
        ("A" + chr(20), 1),  # out of range data character
        ("B" + chr(63 + 0b000100), 1),  # nonzero padding bit for n=3
    ],
)
def test_parse_errors_name_the_byte_offset(text, offset):
    with pytest.raises(Graph6Error) as err:
        rc.graph_from_graph6(text)
    assert err.value.offset == offset


def test_roundtrip_all_graphs_up_to_6(graphs_by_n):
    for n in range(7):
        for g in graphs_by_n[n]:
            assert rc.graph_from_graph6(rc.graph_to_graph6(g)) == g


def test_codec_agrees_with_networkx(graphs_by_n):
    # independent reference implementation of the same wire format
    for n in range(6):
        for g in graphs_by_n[n]:
            g6 = rc.graph_to_graph6(g)
            h = nx.from_graph6_bytes(g6.encode())
            assert set(h.edges()) == set(g.edges())
            assert nx.to_graph6_bytes(h, header=False).decode().strip() == g6


# complement / induced subgraph ----------------------------------------------

def test_complement_examples():
    assert rc.complement(Graph.complete(3)) == Graph.empty(3)
    c5 = Graph.cycle(5)
    assert rc.is_isomorphic(rc.complement(c5), c5)


def test_complement_is_an_involution(graphs_by_n):
    for n in range(8):
        for g in graphs_by_n[n]:
            assert rc.complement(rc.complement(g)) == g


def test_complement_preserves_isomorphism_classes(graphs_by_n):
    for n in range(6):
        level = graphs_by_n[n]
        for a in level:
            for b in level:
                assert rc.is_isomorphic(a, b) == rc.is_isomorphic(
                    rc.complement(a), rc.complement(b)
                )


def test_induced_subgraph_examples():
    c5 = Graph.cycle(5)
    assert rc.induced_subgraph(c5, range(5)) == c5
    p4 = rc.induced_subgraph(c5, [0, 1, 2, 3])
    assert rc.is_isomorphic(p4, Graph.path(4))
    with pytest.raises(ValueError):
        rc.induced_subgraph(c5, [0, 7])


def test_induced_subgraph_edge_monotonicity(graphs_by_n):
    for n in range(7):
        for g in graphs_by_n[n]:
            for mask in range(1 << n):
                sub = rc.induced_subgraph(g, [v for v in range(n) if (mask >> v) & 1])
                assert sub.m <= g.m


# canonical codes / isomorphism ----------------------------------------------

def _permuted(g: Graph, perm):
    return Graph.from_edges(g.n, [(perm[v], perm[w]) for v, w in g.edges()])


def test_canonical_code_on_relabelings():
    c5 = Graph.cycle(5)
    code = rc.canonical_code(c5)
    assert rc.canonical_code(_permuted(c5, (3, 1, 4, 0, 2))) == code
    assert rc.canonical_code(Graph.path(5)) != code


def test_canonical_code_is_permutation_invariant(graphs_by_n):
    rng = random.Random(20240817)
    for n in range(7):
        for g in graphs_by_n[n]:
            code = rc.canonical_code(g)
            for _ in range(100):
                perm = list(range(n))
                rng.shuffle(perm)
                assert rc.canonical_code(_permuted(g, perm)) == code


def test_labeled_graphs_n4_give_11_codes():
    codes = set()
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    for mask in range(1 << 6):
        g = Graph.from_edges(4, [pairs[b] for b in range(6) if (mask >> b) & 1])
        codes.add(rc.canonical_code(g))
    assert len(codes) == 11


def test_is_isomorphic_examples():
    c5 = Graph.cycle(5)
    assert rc.is_isomorphic(c5, rc.complement(c5))
    assert not rc.is_isomorphic(Graph.path(5), c5)
    assert rc.is_isomorphic(c5, c5)


def test_is_isomorphic_matches_code_equality(graphs_by_n):
    for n in range(6):
        level = graphs_by_n[n]
        codes = [rc.canonical_code(g) for g in level]
        for i, a in enumerate(level):
            for j, b in enumerate(level):
                assert rc.is_isomorphic(a, b) == (codes[i] == codes[j])
