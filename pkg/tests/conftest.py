import numpy as np
import pytest
from scipy.linalg import expm


@pytest.fixture
def expm_oracle():
    """Matrix-exponential evolution oracle, independent of the eigen route.

    Uses scipy's Pade scaling-and-squaring expm on -iHt with H = A/d.
    """

    def run(graph, t, start=0):
        h = np.asarray(graph.adjacency, dtype=complex) / graph.degree
        psi0 = np.zeros(h.shape[0], dtype=complex)
        psi0[start] = 1.0
        return expm(-1j * h * float(t)) @ psi0

    return run


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
