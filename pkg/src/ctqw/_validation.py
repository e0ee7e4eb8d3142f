"""Input validation helpers, in the spirit of ``sklearn.utils.validation``.

All helpers return a validated (and possibly converted) numpy array, or
raise one of the package's exception types.
"""

import numpy as np

from .exceptions import (
    ContractViolationError,
    InvalidDimensionError,
)

# Entrywise tolerance for Hermitian symmetry checks.
HERMITIAN_ATOL = 1e-12
# L2-norm tolerance for quantum state vectors.
STATE_NORM_ATOL = 1e-12
# Sum/positivity tolerance for probability distributions.
DISTRIBUTION_ATOL = 1e-12


def as_complex_matrix(matrix, name="matrix"):
    """Coerce to a 2-d complex128 array, rejecting empty dimensions."""
    out = np.asarray(matrix, dtype=np.complex128)
    if out.ndim != 2:
        raise InvalidDimensionError(f"{name} must be 2-dimensional, got ndim={out.ndim}")
    if out.shape[0] == 0 or out.shape[1] == 0:
        raise InvalidDimensionError(f"{name} must be nonempty, got shape {out.shape}")
    return out


def as_complex_vector(vector, name="vector"):
    """Coerce to a 1-d complex128 array, rejecting the empty vector."""
    out = np.asarray(vector, dtype=np.complex128)
    if out.ndim != 1:
        raise InvalidDimensionError(f"{name} must be 1-dimensional, got ndim={out.ndim}")
    if out.shape[0] == 0:
        raise InvalidDimensionError(f"{name} must be nonempty")
    return out


def check_hermitian(matrix, atol=HERMITIAN_ATOL, name="matrix"):
    """Validate that ``matrix`` is square and entrywise Hermitian within ``atol``."""
    out = as_complex_matrix(matrix, name=name)
    if out.shape[0] != out.shape[1]:
        raise ContractViolationError(f"{name} must be square, got shape {out.shape}")
    dev = np.abs(out - out.conj().T).max()
    if dev > atol:
        raise ContractViolationError(
            f"{name} is not Hermitian: max |M - M^dagger| = {dev:.3e} > {atol:.0e}"
        )
    return out


def check_state_vector(vector, atol=STATE_NORM_ATOL, name="state"):
    """Validate that ``vector`` is a unit-norm complex amplitude vector."""
    out = as_complex_vector(vector, name=name)
    norm = np.linalg.norm(out)
    if abs(norm - 1.0) > atol:
        raise ContractViolationError(
            f"{name} must be normalized: ||psi|| = {norm!r} deviates from 1 by more than {atol:.0e}"
        )
    return out


def check_distribution(dist, atol=DISTRIBUTION_ATOL, name="distribution"):
    """Validate that ``dist`` is a probability vector (nonnegative, sums to 1)."""
    out = np.asarray(dist, dtype=float)
    if out.ndim != 1 or out.shape[0] == 0:
        raise InvalidDimensionError(f"{name} must be a nonempty 1-d array")
    if out.min() < -atol:
        raise ContractViolationError(f"{name} has negative entries (min = {out.min()!r})")
    total = out.sum()
    if abs(total - 1.0) > atol:
        raise ContractViolationError(f"{name} must sum to 1, got {total!r}")
    return out
