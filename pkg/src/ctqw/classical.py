"""Classical random-walk baselines.

Discrete simple and lazy walks on regular graphs, and the two-state
continuous-time chain with exponential waiting times.  Distributions are
column vectors acted on from the left, so transition matrices are
column-stochastic.
"""

import numpy as np

from ._validation import check_distribution
from .exceptions import DegenerateChainError, InvalidDimensionError, InvalidParameterError
from .graphs import as_graph

__all__ = ["discrete_step", "transition_matrix", "two_state_ct", "ct_limit"]


def transition_matrix(graph, lazy=False):
    """Column-stochastic transition matrix A/d, or (I + A/d)/2 when lazy."""
    g = as_graph(graph)
    p = g.adjacency / g.degree
    if lazy:
        p = (np.eye(g.n) + p) / 2.0
    return p


def discrete_step(graph, dist, lazy=False):
    """One step of the simple (or lazy) random walk applied to ``dist``."""
    g = as_graph(graph)
    dist = check_distribution(dist, name="dist")
    if dist.shape[0] != g.n:
        raise InvalidDimensionError(
            f"distribution has length {dist.shape[0]}, graph has {g.n} vertices"
        )
    return transition_matrix(g, lazy=lazy) @ dist


def two_state_ct(alpha, beta, t):
    """Transition matrix exp(tQ) of the two-state continuous-time chain.

    ``Q = [[-alpha, beta], [alpha, -beta]]`` with nonnegative rates, not
    both zero.  Returns the closed-form column-stochastic 2x2 matrix.
    """
    alpha, beta = float(alpha), float(beta)
    if alpha < 0.0 or beta < 0.0:
        raise InvalidParameterError(f"rates must be nonnegative, got ({alpha}, {beta})")
    if alpha == 0.0 and beta == 0.0:
        raise DegenerateChainError("two-state chain needs alpha + beta > 0")
    t = float(t)
    decay = np.exp(-t * (alpha + beta))
    p = np.array(
        [
            [alpha * decay + beta, beta * (1.0 - decay)],
            [alpha * (1.0 - decay), beta * decay + alpha],
        ]
    )
    return p / (alpha + beta)


def ct_limit(alpha, beta):
    """Limit distribution of the two-state chain: (beta, alpha) / (alpha + beta)."""
    alpha, beta = float(alpha), float(beta)
    if alpha < 0.0 or beta < 0.0:
        raise InvalidParameterError(f"rates must be nonnegative, got ({alpha}, {beta})")
    if alpha + beta <= 0.0:
        raise DegenerateChainError("two-state chain needs alpha + beta > 0")
    return np.array([beta, alpha]) / (alpha + beta)
