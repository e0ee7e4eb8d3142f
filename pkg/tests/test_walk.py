import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from ctqw.exceptions import ContractViolationError, InvalidParameterError
from ctqw.graphs import (
    balanced_multipartite,
    cayley_symmetric,
    complete_graph,
    cycle_graph,
    hypercube_graph,
)
from ctqw.walk import (
    ContinuousTimeQuantumWalk,
    WalkState,
    amplitudes_complete,
    amplitudes_cycle,
    amplitudes_multipartite,
    collapse,
    evolve,
)

AGREEMENT_TIMES = [0.3, 1.0, np.pi, 7.0]


class TestEstimatorApi:
    def test_get_set_params_and_clone(self):
        walk = ContinuousTimeQuantumWalk(normalization="laplacian", start_vertex=2)
        assert walk.get_params() == {"normalization": "laplacian", "start_vertex": 2}
        twin = clone(walk)
        assert twin.get_params() == walk.get_params()
        walk.set_params(start_vertex=0)
        assert walk.start_vertex == 0

    def test_transform_before_fit_raises(self):
        with pytest.raises(NotFittedError):
            ContinuousTimeQuantumWalk().transform([1.0])

    def test_fit_returns_self_and_sets_attributes(self):
        walk = ContinuousTimeQuantumWalk()
        assert walk.fit(complete_graph(3)) is walk
        assert walk.n_vertices_ == 3
        assert walk.route_ == "circulant"
        assert walk.overlaps_.shape == (3,)

    @pytest.mark.parametrize(
        "graph, route",
        [
            (complete_graph(4), "circulant"),
            (cycle_graph(6), "circulant"),
            (balanced_multipartite(3, 2), "kronecker"),
            (cayley_symmetric(3), "dense"),
            (hypercube_graph(3), "dense"),
        ],
        ids=lambda v: v if isinstance(v, str) else v.label,
    )
    def test_route_dispatch(self, graph, route):
        assert ContinuousTimeQuantumWalk().fit(graph).route_ == route

    def test_transform_shape(self):
        walk = ContinuousTimeQuantumWalk().fit(cycle_graph(5))
        probs = walk.transform(np.linspace(0, 3, 7))
        assert probs.shape == (7, 5)
        assert np.abs(probs.sum(axis=1) - 1.0).max() < 1e-12

    def test_bad_normalization(self):
        with pytest.raises(InvalidParameterError):
            ContinuousTimeQuantumWalk(normalization="adj").fit(complete_graph(2))

    def test_bad_start_vertex(self):
        with pytest.raises(InvalidParameterError):
            ContinuousTimeQuantumWalk(start_vertex=5).fit(complete_graph(3))

    def test_fit_accepts_raw_adjacency(self):
        walk = ContinuousTimeQuantumWalk().fit(cycle_graph(4).adjacency)
        assert walk.route_ == "dense"  # custom graphs take the generic route
        assert np.abs(walk.probabilities(np.pi / 2) - 0.25).max() < 1e-12


class TestEvolve:
    def test_time_zero_point_mass(self):
        for g in [complete_graph(4), cycle_graph(7), cayley_symmetric(3)]:
            state = evolve(g, 0.0)
            expected = np.zeros(g.n)
            expected[0] = 1.0
            assert np.abs(state.probabilities - expected).max() < 1e-12

    def test_k2_uniform_at_quarter_pi(self):
        state = evolve(complete_graph(2), np.pi / 4)
        assert np.abs(state.probabilities - 0.5).max() < 1e-12

    def test_k4_uniform_at_three_quarter_pi(self):
        # (4/n) sin^2(tn / (2(n-1))) = 1 with n = 4 gives t = 3 pi / 4
        state = evolve(complete_graph(4), 3 * np.pi / 4)
        assert np.abs(state.probabilities - 0.25).max() < 1e-12

    def test_start_vertex_rotates_cycle(self):
        base = evolve(cycle_graph(5), 1.7, start_vertex=0).probabilities
        moved = evolve(cycle_graph(5), 1.7, start_vertex=2).probabilities
        assert np.abs(np.roll(base, 2) - moved).max() < 1e-12

    def test_mixing_times_are_start_independent(self):
        # vertex-transitive families: spot-check rather than assume
        for g, t in [(complete_graph(4), 3 * np.pi / 4), (balanced_multipartite(2, 2), np.pi / 2)]:
            for start in range(g.n):
                probs = evolve(g, t, start_vertex=start).probabilities
                assert np.abs(probs - 1.0 / g.n).max() < 1e-12

    def test_unitary_at_sampled_times(self):
        for g in [complete_graph(5), balanced_multipartite(2, 3), hypercube_graph(2)]:
            walk = ContinuousTimeQuantumWalk().fit(g)
            for t in [0.1, 1.0, np.pi, 10.0]:
                assert abs(np.linalg.norm(walk.amplitudes(t)) - 1.0) < 1e-12


class TestClosedForms:
    def test_complete_k2_matches_pauli_rotation(self):
        t = 1.234
        amps = amplitudes_complete(2, t)
        assert np.abs(amps - [np.cos(t), -1j * np.sin(t)]).max() < 1e-12

    def test_complete_t0(self):
        amps = amplitudes_complete(6, 0.0)
        assert np.abs(amps - np.eye(6)[0]).max() < 1e-12

    def test_complete_k3_uniform_time(self):
        # sin^2(3t/4) = 3/4 gives t = 4 pi / 9
        probs = np.abs(amplitudes_complete(3, 4 * np.pi / 9)) ** 2
        assert np.abs(probs - 1 / 3).max() < 1e-12

    def test_multipartite_k22_cases(self):
        t = 0.87
        amps = amplitudes_multipartite(2, 2, t)
        assert abs(amps[0] - (np.cos(t) + 1) / 2) < 1e-12
        assert abs(amps[1] - (np.cos(t) - 1) / 2) < 1e-12
        assert abs(abs(amps[2]) - abs(np.sin(t) / 2)) < 1e-12
        assert abs(abs(amps[3]) - abs(np.sin(t) / 2)) < 1e-12

    def test_multipartite_t0(self):
        amps = amplitudes_multipartite(3, 2, 0.0)
        assert np.abs(amps - np.eye(6)[0]).max() < 1e-12

    def test_multipartite_rejects_thin_blocks(self):
        with pytest.raises(InvalidParameterError):
            amplitudes_multipartite(3, 1, 1.0)

    def test_cycle_t0(self):
        amps = amplitudes_cycle(7, 0.0)
        assert np.abs(amps - np.eye(7)[0]).max() < 1e-12

    def test_cycle_c4_uniform_at_half_pi(self):
        probs = np.abs(amplitudes_cycle(4, np.pi / 2)) ** 2
        assert np.abs(probs - 0.25).max() < 1e-12

    @pytest.mark.parametrize("n,t", [(3, 0.4), (5, 2.0), (8, np.pi), (24, 7.0)])
    def test_cycle_matches_engine(self, n, t):
        engine = ContinuousTimeQuantumWalk().fit(cycle_graph(n)).amplitudes(t)
        assert np.abs(amplitudes_cycle(n, t) - engine).max() < 1e-10

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 8, 13, 24])
    @pytest.mark.parametrize("t", AGREEMENT_TIMES)
    def test_complete_matches_engine(self, n, t):
        engine = ContinuousTimeQuantumWalk().fit(complete_graph(n))
        amps = amplitudes_complete(n, t)
        assert np.abs(amps - engine.amplitudes(t)).max() < 1e-10
        assert np.abs(np.abs(amps) ** 2 - engine.probabilities(t)).max() < 1e-12

    @pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (3, 2), (2, 6), (3, 4), (4, 3), (2, 12), (4, 6)])
    @pytest.mark.parametrize("t", AGREEMENT_TIMES)
    def test_multipartite_matches_engine(self, a, b, t):
        engine = ContinuousTimeQuantumWalk().fit(balanced_multipartite(a, b))
        amps = amplitudes_multipartite(a, b, t)
        assert np.abs(amps - engine.amplitudes(t)).max() < 1e-10
        assert np.abs(np.abs(amps) ** 2 - engine.probabilities(t)).max() < 1e-12

    def test_multipartite_23_matches_dense_oracle(self, expm_oracle):
        amps = amplitudes_multipartite(2, 3, 1.3)
        assert np.abs(amps - expm_oracle(balanced_multipartite(2, 3), 1.3)).max() < 1e-10

    def test_cycle_c5_matches_dense_oracle(self, expm_oracle):
        assert np.abs(amplitudes_cycle(5, 2.0) - expm_oracle(cycle_graph(5), 2.0)).max() < 1e-10


class TestPhaseInvariances:
    GRAPHS = [complete_graph(4), cycle_graph(5), balanced_multipartite(2, 3)]

    @pytest.mark.parametrize("g", GRAPHS, ids=lambda g: g.label)
    def test_laplacian_matches_adjacency_with_time_scaling(self, g):
        # L = A - dI = d(H - I): probabilities at t/d match H at t
        ts = np.linspace(0.0, 9.0, 61)
        adjacency = ContinuousTimeQuantumWalk(normalization="adjacency").fit(g)
        laplacian = ContinuousTimeQuantumWalk(normalization="laplacian").fit(g)
        gap = np.abs(adjacency.transform(ts) - laplacian.transform(ts / g.degree)).max()
        assert gap < 1e-12

    @pytest.mark.parametrize("g", GRAPHS, ids=lambda g: g.label)
    def test_lazy_at_t_matches_simple_at_half_t(self, g):
        ts = np.linspace(0.0, 9.0, 61)
        simple = ContinuousTimeQuantumWalk(normalization="adjacency").fit(g)
        lazy = ContinuousTimeQuantumWalk(normalization="lazy").fit(g)
        gap = np.abs(lazy.transform(ts) - simple.transform(ts / 2.0)).max()
        assert gap < 1e-12


class TestVertexClassSymmetry:
    @pytest.mark.parametrize("n", [3, 5, 9])
    def test_complete_non_start_vertices_agree(self, n):
        probs = evolve(complete_graph(n), 1.37).probabilities
        assert np.ptp(probs[1:]) < 1e-14

    @pytest.mark.parametrize("a,b", [(2, 3), (3, 2), (4, 3)])
    def test_multipartite_three_classes(self, a, b):
        probs = evolve(balanced_multipartite(a, b), 2.21).probabilities
        assert np.ptp(probs[1:b]) < 1e-14
        assert np.ptp(probs[b:]) < 1e-14

    @pytest.mark.parametrize("n", [5, 8])
    def test_cycle_reflection_symmetry(self, n):
        probs = evolve(cycle_graph(n), 3.3).probabilities
        for k in range(1, n):
            assert abs(probs[k] - probs[n - k]) < 1e-13

    @pytest.mark.parametrize("n", [2, 5, 8])
    def test_complete_probability_period(self, n):
        period = 2 * np.pi * (n - 1) / n
        walk = ContinuousTimeQuantumWalk().fit(complete_graph(n))
        for t in [0.3, 1.1, 2.9]:
            assert np.abs(walk.probabilities(t + period) - walk.probabilities(t)).max() < 1e-12


class TestCollapse:
    def test_point_mass(self):
        assert np.array_equal(collapse([1.0, 0.0]), [1.0, 0.0])

    def test_k2_amplitudes(self):
        t = 0.73
        probs = collapse([np.cos(t), -1j * np.sin(t)])
        assert np.abs(probs - [np.cos(t) ** 2, np.sin(t) ** 2]).max() < 1e-12

    def test_random_state_sums_to_one(self, rng):
        psi = rng.normal(size=6) + 1j * rng.normal(size=6)
        psi /= np.linalg.norm(psi)
        assert abs(collapse(psi).sum() - 1.0) < 1e-12

    def test_unnormalized_rejected(self):
        with pytest.raises(ContractViolationError):
            collapse([1.0, 1.0])


class TestWalkState:
    def test_probability_invariant(self):
        state = evolve(cycle_graph(6), 2.5)
        assert np.abs(state.probabilities - np.abs(state.amplitudes) ** 2).max() == 0.0
        assert abs(state.probabilities.sum() - 1.0) < 1e-12

    def test_rejects_unnormalized(self):
        with pytest.raises(ContractViolationError):
            WalkState(0.0, [0.5, 0.5])


class TestHypercubeControl:
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_uniform_at_quarter_pi_per_factor(self, d):
        # e^{-i(t/d)A} factorizes into K_2 walks, each uniform at t/d = pi/4
        state = evolve(hypercube_graph(d), d * np.pi / 4)
        assert np.abs(state.probabilities - 1.0 / 2**d).max() < 1e-12
