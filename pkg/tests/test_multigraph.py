import pytest

from cayley_iwasawa.abelian import FiniteAbelianGroup
from cayley_iwasawa.errors import ContainsIdentity, Disconnected, DuplicateGenerator, InvalidMultigraph, NotGenerating, NotSymmetric
from cayley_iwasawa.multigraph import Multigraph, build_cayley, matrices, spanning_structure, validate_base


def test_k4_as_cayley_graph():
    X = build_cayley(FiniteAbelianGroup.cyclic(4), [1, 2, 3])
    assert X.vertex_count == 4
    assert len(X.edges) == 12
    assert X.degrees == [3, 3, 3, 3]
    rep = validate_base(X)
    assert rep.assumption_ok and rep.euler_characteristic == -2 and rep.betti == (1, 3)


def test_edge_order_is_lexicographic():
    X = build_cayley(FiniteAbelianGroup.cyclic(4), [1, 3])
    assert list(X.edges) == sorted(X.edges)
    for e, (o, t) in enumerate(X.edges):
        assert X.edges[X.inversion[e]] == (t, o)


def test_cycle_graph_fails_assumption():
    X = build_cayley(FiniteAbelianGroup.cyclic(5), [1, 4])
    rep = validate_base(X)
    assert not rep.assumption_ok
    assert any("cycle" in f for f in rep.failures())


@pytest.mark.parametrize(
    "gens, exc",
    [([1, 2], NotSymmetric), ([0, 1, 3], ContainsIdentity), ([1, 1, 3], DuplicateGenerator), ([2], NotGenerating), ([], NotGenerating)],
)
def test_cayley_rejections(gens, exc):
    with pytest.raises(exc):
        build_cayley(FiniteAbelianGroup.cyclic(4), gens)


def test_inversion_validation():
    with pytest.raises(InvalidMultigraph):
        Multigraph(2, ((0, 1), (1, 0)), (0, 1))
    with pytest.raises(InvalidMultigraph):
        Multigraph(2, ((0, 1), (0, 1)), (1, 0))


def test_loops_count_twice_in_adjacency():
    X = Multigraph.from_undirected(2, [(0, 0), (0, 1)])
    A, D, Q = matrices(X)
    assert A[0, 0] == 2
    assert D[0, 0] == 3
    assert (Q.sum(axis=1) == 0).all()


def test_matrices_of_cayley_graph():
    X = build_cayley(FiniteAbelianGroup((2, 4)), [(0, 1), (0, 3), (1, 0)])
    A, D, Q = matrices(X)
    assert (A == A.T).all()
    assert (D.diagonal() == 3).all()


def test_fundamental_cycles():
    X = build_cayley(FiniteAbelianGroup.cyclic(4), [1, 2, 3])
    tree, cycles = spanning_structure(X)
    assert len(tree) == 2 * 3
    assert len(cycles) == 3
    for c in cycles:
        assert X.edges[c[0]][0] == 0 and X.edges[c[-1]][1] == 0
        for a, b in zip(c, c[1:]):
            assert X.edges[a][1] == X.edges[b][0]


def test_disconnected_spanning_structure():
    X = Multigraph.from_undirected(4, [(0, 1), (2, 3)])
    assert len(X.components()) == 2
    with pytest.raises(Disconnected):
        spanning_structure(X)
