from itertools import permutations

import numpy as np
import pytest

from ctqw.exceptions import (
    ContractViolationError,
    DegenerateGraphError,
    InvalidParameterError,
    SizeLimitError,
)
from ctqw.graphs import (
    as_graph,
    balanced_multipartite,
    cayley_symmetric,
    complete_graph,
    cycle_graph,
    from_edge_list,
    hamiltonian,
    hypercube_graph,
    to_edge_list,
)


def _find_isomorphism(a1, a2):
    # brute force over vertex relabelings; fine up to n = 6
    n = a1.shape[0]
    for perm in permutations(range(n)):
        p = np.array(perm)
        if np.array_equal(a1[np.ix_(p, p)], a2):
            return perm
    return None


ALL_FAMILIES = [
    complete_graph(2),
    complete_graph(5),
    balanced_multipartite(2, 2),
    balanced_multipartite(3, 4),
    cycle_graph(3),
    cycle_graph(8),
    cayley_symmetric(3),
    cayley_symmetric(4),
    hypercube_graph(1),
    hypercube_graph(4),
]


@pytest.mark.parametrize("g", ALL_FAMILIES, ids=lambda g: g.label)
def test_regularity_and_shape(g):
    adj = g.adjacency
    assert np.array_equal(adj, adj.T)
    assert not np.diagonal(adj).any()
    assert set(np.unique(adj)) <= {0.0, 1.0}
    assert np.all(adj.sum(axis=1) == g.degree)


class TestComplete:
    def test_k2_is_pauli_x_pattern(self):
        assert np.array_equal(complete_graph(2).adjacency, [[0, 1], [1, 0]])

    def test_k3_row_sums(self):
        assert np.all(complete_graph(3).adjacency.sum(axis=1) == 2)

    def test_k5_edge_count(self):
        assert len(complete_graph(5).edges()) == 5 * 4 // 2

    def test_too_small(self):
        with pytest.raises(InvalidParameterError):
            complete_graph(1)


class TestMultipartite:
    def test_22_is_a_4_cycle(self):
        g = balanced_multipartite(2, 2)
        perm = _find_isomorphism(cycle_graph(4).adjacency, g.adjacency)
        assert perm is not None
        # the explicit relabeling 0,2,1,3 works
        p = np.array([0, 2, 1, 3])
        assert np.array_equal(cycle_graph(4).adjacency[np.ix_(p, p)], g.adjacency)

    def test_b1_delegates_to_complete(self):
        g = balanced_multipartite(4, 1)
        assert g.family == "complete"
        assert np.array_equal(g.adjacency, complete_graph(4).adjacency)

    def test_23_is_k33(self):
        g = balanced_multipartite(2, 3)
        assert g.n == 6 and g.degree == 3
        # no edges inside blocks, all edges across
        assert not g.adjacency[:3, :3].any()
        assert g.adjacency[:3, 3:].all()

    def test_degree_formula(self):
        g = balanced_multipartite(3, 4)
        assert g.degree == (3 - 1) * 4

    def test_single_block_rejected(self):
        with pytest.raises(DegenerateGraphError):
            balanced_multipartite(1, 4)

    def test_bad_block_size_rejected(self):
        with pytest.raises(InvalidParameterError):
            balanced_multipartite(2, 0)


class TestCycle:
    def test_c3_equals_k3(self):
        assert np.array_equal(cycle_graph(3).adjacency, complete_graph(3).adjacency)

    def test_c5_first_row(self):
        assert np.array_equal(cycle_graph(5).adjacency[0], [0, 1, 0, 0, 1])

    def test_too_small(self):
        with pytest.raises(InvalidParameterError):
            cycle_graph(2)


class TestCayleySymmetric:
    def test_n2_is_k2(self):
        assert np.array_equal(cayley_symmetric(2).adjacency, complete_graph(2).adjacency)

    def test_n3_isomorphic_to_k33(self):
        g = cayley_symmetric(3)
        assert g.n == 6 and g.degree == 3
        perm = _find_isomorphism(g.adjacency, balanced_multipartite(2, 3).adjacency)
        assert perm is not None

    def test_n4_shape(self):
        g = cayley_symmetric(4)
        assert g.n == 24 and g.degree == 6

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_bipartite_by_parity(self, n):
        g = cayley_symmetric(n)
        signs = []
        for p in sorted(permutations(range(n))):
            inversions = sum(
                1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]
            )
            signs.append(inversions % 2)
        signs = np.array(signs)
        rows, cols = np.nonzero(g.adjacency)
        assert np.all(signs[rows] != signs[cols])

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            cayley_symmetric(6)

    def test_too_small(self):
        with pytest.raises(InvalidParameterError):
            cayley_symmetric(1)


class TestHypercube:
    def test_d1_is_k2(self):
        assert np.array_equal(hypercube_graph(1).adjacency, complete_graph(2).adjacency)

    def test_d2_is_a_4_cycle(self):
        assert _find_isomorphism(hypercube_graph(2).adjacency, cycle_graph(4).adjacency) is not None

    def test_d3_edge_count(self):
        assert len(hypercube_graph(3).edges()) == 3 * 2**2

    def test_limits(self):
        with pytest.raises(InvalidParameterError):
            hypercube_graph(0)
        with pytest.raises(SizeLimitError):
            hypercube_graph(13)


class TestHamiltonian:
    def test_k2_adjacency_form_is_pauli_x(self):
        h = hamiltonian(complete_graph(2))
        assert np.array_equal(h.matrix.real, [[0, 1], [1, 0]])

    def test_k3_normalized_eigenvalues(self):
        h = hamiltonian(complete_graph(3), "adjacency")
        lam = np.sort(np.linalg.eigvalsh(h.matrix))
        assert np.abs(lam - [-0.5, -0.5, 1.0]).max() < 1e-12

    def test_c4_laplacian_eigenvalues(self):
        # circulant eigenvalues 2cos(2 pi j / 4) shifted by -2
        h = hamiltonian(cycle_graph(4), "laplacian")
        lam = np.sort(np.linalg.eigvalsh(h.matrix))
        assert np.abs(lam - [-4.0, -2.0, -2.0, 0.0]).max() < 1e-12

    def test_adjacency_rows_sum_to_one(self):
        h = hamiltonian(balanced_multipartite(3, 2))
        assert np.abs(h.matrix.real.sum(axis=1) - 1.0).max() < 1e-12

    def test_unknown_normalization(self):
        with pytest.raises(InvalidParameterError):
            hamiltonian(complete_graph(3), "renormalized")


class TestAsGraph:
    def test_passthrough(self):
        g = complete_graph(3)
        assert as_graph(g) is g

    def test_custom_adjacency(self):
        g = as_graph(cycle_graph(6).adjacency)
        assert g.family == "custom"
        assert g.degree == 2

    def test_asymmetric_rejected(self):
        with pytest.raises(ContractViolationError):
            as_graph([[0, 1], [0, 0]])

    def test_self_loop_rejected(self):
        with pytest.raises(ContractViolationError):
            as_graph([[1, 1], [1, 0]])

    def test_irregular_rejected(self):
        adj = np.zeros((3, 3))
        adj[0, 1] = adj[1, 0] = 1.0
        adj[1, 2] = adj[2, 1] = 1.0
        with pytest.raises(ContractViolationError):
            as_graph(adj)

    def test_disconnected_rejected(self):
        adj = np.zeros((4, 4))
        adj[0, 1] = adj[1, 0] = 1.0
        adj[2, 3] = adj[3, 2] = 1.0
        with pytest.raises(ContractViolationError):
            as_graph(adj)

    def test_weighted_rejected(self):
        with pytest.raises(ContractViolationError):
            as_graph([[0.0, 0.5], [0.5, 0.0]])


class TestEdgeListFormat:
    @pytest.mark.parametrize(
        "g", [complete_graph(4), balanced_multipartite(2, 3), cycle_graph(7), hypercube_graph(3)],
        ids=lambda g: g.label,
    )
    def test_round_trip(self, g):
        back = from_edge_list(to_edge_list(g))
        assert back.n == g.n
        assert back.degree == g.degree
        assert back.family == g.family
        assert back.params == g.params
        assert np.array_equal(back.adjacency, g.adjacency)

    def test_header_line(self):
        text = to_edge_list(balanced_multipartite(2, 3))
        assert text.splitlines()[0] == "6 3 multipartite(2,3)"

    def test_edges_ascending(self):
        lines = to_edge_list(cycle_graph(5)).splitlines()[1:]
        pairs = [tuple(map(int, ln.split())) for ln in lines]
        assert pairs == sorted(pairs)
        assert all(u < v for u, v in pairs)

    def test_degree_mismatch_rejected(self):
        text = "2 2 custom\n0 1\n"
        with pytest.raises(ContractViolationError):
            from_edge_list(text)


def test_display_names():
    assert complete_graph(5).display_name == "K_5"
    assert balanced_multipartite(2, 3).display_name == "K_{3,3}"
    assert balanced_multipartite(3, 2).display_name == "K_{2,2,2}"
    assert cycle_graph(7).display_name == "C_7"
    assert cayley_symmetric(4).display_name == "X_4"
    assert hypercube_graph(3).display_name == "Q_3"


def test_graph_is_frozen():
    g = complete_graph(3)
    with pytest.raises(Exception):
        g.adjacency[0, 1] = 5.0
    with pytest.raises(Exception):
        g.n = 12
