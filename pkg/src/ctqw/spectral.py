"""Dense complex spectral machinery.

Fourier/Vandermonde matrices, circulant eigenvalues by DFT, Kronecker
products, and unitary time evolution from a Hermitian eigendecomposition.
Everything is dense binary64: the largest instance in scope has a few
thousand vertices.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import as_complex_matrix, as_complex_vector, check_hermitian, check_state_vector
from .exceptions import ContractViolationError, InvalidDimensionError

__all__ = [
    "dft_matrix",
    "circulant_eigenvalues",
    "kronecker",
    "SpectralDecomposition",
    "hermitian_eigendecomposition",
    "evolve_spectral",
]

# Residual imaginary parts above this are treated as a real numerical
# problem rather than round-off when a symmetric circulant is expected.
CIRCULANT_IMAG_ATOL = 1e-10


def dft_matrix(n):
    """Unitary discrete Fourier matrix of order ``n``.

    Entry ``(j, k)`` is ``omega**(j*k) / sqrt(n)`` with
    ``omega = exp(2*pi*1j/n)``, so columns are the normalized circulant
    eigenvectors.  ``dft_matrix(2)`` is the Hadamard matrix.

    Parameters
    ----------
    n : int
        Matrix order, at least 1.

    Returns
    -------
    numpy.ndarray
        Complex ``(n, n)`` unitary matrix.
    """
    n = int(n)
    if n < 1:
        raise InvalidDimensionError(f"DFT matrix order must be >= 1, got {n}")
    jk = np.outer(np.arange(n), np.arange(n))
    return np.exp(2j * np.pi * jk / n) / np.sqrt(n)


def circulant_eigenvalues(first_column):
    """Eigenvalues of the circulant matrix with the given first column.

    Returns ``V(omega) @ f`` where ``V(omega)`` is the Vandermonde matrix
    of the principal n-th root of unity: the eigenvalue attached to the
    j-th Fourier eigenvector, in index order ``j = 0..n-1``.

    Notes
    -----
    ``V(omega) @ f`` equals ``n * ifft(f)``, which is what is computed.
    For symmetric circulants (the only ones arising from graphs here) the
    result is real up to round-off.
    """
    f = as_complex_vector(first_column, name="first column")
    return len(f) * np.fft.ifft(f)


def kronecker(a, b):
    """Kronecker product of two nonempty matrices (dimensions multiply)."""
    a = as_complex_matrix(a, name="left operand")
    b = as_complex_matrix(b, name="right operand")
    return np.kron(a, b)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalues and an orthonormal eigenbasis of a Hermitian matrix.

    Attributes
    ----------
    eigenvalues : numpy.ndarray
        Real eigenvalues, ascending (ties keep their original index order).
    eigenvectors : numpy.ndarray
        Unitary matrix whose column ``j`` is the eigenvector for
        ``eigenvalues[j]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        lam = np.asarray(self.eigenvalues, dtype=float)
        vec = np.asarray(self.eigenvectors, dtype=np.complex128)
        if vec.ndim != 2 or vec.shape[0] != vec.shape[1] or lam.shape != (vec.shape[0],):
            raise InvalidDimensionError(
                f"inconsistent decomposition shapes: {lam.shape} values, {vec.shape} vectors"
            )
        lam.flags.writeable = False
        vec.flags.writeable = False
        object.__setattr__(self, "eigenvalues", lam)
        object.__setattr__(self, "eigenvectors", vec)

    @classmethod
    def from_eigensystem(cls, eigenvalues, eigenvectors):
        """Build a decomposition, sorting ascending with stable tie order."""
        lam = np.asarray(eigenvalues, dtype=float)
        order = np.argsort(lam, kind="stable")
        vec = np.asarray(eigenvectors, dtype=np.complex128)
        return cls(lam[order].copy(), vec[:, order].copy())

    @property
    def n(self):
        return self.eigenvalues.shape[0]

    def overlaps(self, psi0):
        """Expansion coefficients ``alpha_j = <z_j|psi0>`` of a state."""
        psi0 = check_state_vector(psi0, name="psi0")
        if psi0.shape[0] != self.n:
            raise InvalidDimensionError(
                f"state has length {psi0.shape[0]}, decomposition has dimension {self.n}"
            )
        return self.eigenvectors.conj().T @ psi0

    def reconstruct(self):
        """Reassemble ``Z diag(lambda) Z^dagger``."""
        z = self.eigenvectors
        return (z * self.eigenvalues) @ z.conj().T


def hermitian_eigendecomposition(matrix):
    """Full eigendecomposition of a Hermitian matrix.

    Generic dense fallback for graphs without circulant or Kronecker
    structure.  Eigenvalues come back real and ascending; eigenvectors are
    orthonormal columns.

    Raises
    ------
    ContractViolationError
        If the input is not Hermitian within the entrywise tolerance.
    """
    h = check_hermitian(matrix, name="Hamiltonian")
    lam, vec = np.linalg.eigh(h)
    return SpectralDecomposition(lam, vec)


def evolve_spectral(decomposition, t, psi0):
    """Apply ``exp(-i H t)`` to ``psi0`` through an eigendecomposition of H.

    Computes ``sum_j alpha_j exp(-i lambda_j t) |z_j>`` with
    ``alpha_j = <z_j|psi0>``.  The output is unitary-evolved, hence
    normalized up to round-off.

    Parameters
    ----------
    decomposition : SpectralDecomposition
    t : float
        Evolution time (hbar = 1).
    psi0 : array-like
        Normalized initial amplitude vector.
    """
    alpha = decomposition.overlaps(psi0)
    phases = np.exp(-1j * decomposition.eigenvalues * float(t))
    return decomposition.eigenvectors @ (alpha * phases)


def real_circulant_spectrum(first_column, atol=CIRCULANT_IMAG_ATOL):
    """Circulant eigenvalues coerced to real, for symmetric circulants.

    Symmetric circulants are Hermitian, so their spectrum must be real;
    residual imaginary parts above ``atol`` indicate the input was not a
    symmetric circulant column.
    """
    lam = circulant_eigenvalues(first_column)
    worst = np.abs(lam.imag).max()
    if worst > atol:
        raise ContractViolationError(
            f"circulant spectrum has imaginary part {worst:.3e}; "
            "expected a symmetric (real-spectrum) circulant"
        )
    return lam.real.copy()
