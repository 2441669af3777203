"""Orthonormal DCT-II transforms (1-D and 2-D separable) and the
Kronecker-product quantities used by the sparsity uniqueness bound."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.fft


def dct_matrix(m: int) -> np.ndarray:
    """Orthonormal DCT-II basis matrix of size m x m, rows are basis vectors.

    Row 0 is the constant vector sqrt(1/m); row i >= 1 is
    sqrt(2/m) * cos(pi*(2j+1)*i / (2m)).
    """
    return _dct_basis(m).copy()


@lru_cache(maxsize=None)
def _dct_basis(m: int) -> np.ndarray:
    if m < 1:
        raise ValueError(f"matrix size must be a positive integer, got {m}")
    i = np.arange(m)[:, None]
    j = np.arange(m)[None, :]
    D = np.sqrt(2.0 / m) * np.cos(np.pi * (2 * j + 1) * i / (2 * m))
    D[0, :] = np.sqrt(1.0 / m)
    D.setflags(write=False)
    return D


@dataclass(frozen=True)
class DctPlan:
    """Cached transform plan for an m x n grid (cols=1 for 1-D signals).

    Plans are immutable and safe to share between threads; the underlying
    cosine tables are cached per dimension.
    """

    rows: int
    cols: int = 1

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"invalid plan dimensions {self.rows}x{self.cols}")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def row_basis(self) -> np.ndarray:
        """Read-only DCT basis for the row dimension."""
        return _dct_basis(self.rows)

    @property
    def col_basis(self) -> np.ndarray:
        """Read-only DCT basis for the column dimension."""
        return _dct_basis(self.cols)


def _check_shape(plan: DctPlan, M: np.ndarray, name: str) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.shape != plan.shape:
        raise ValueError(f"{name} has shape {M.shape}, plan expects {plan.shape}")
    return M


def forward(plan: DctPlan, X: np.ndarray) -> np.ndarray:
    """Forward transform: C = D_m @ X @ D_n^T (c = D @ x in 1-D).

    Uses the fast separable path; matches the explicit matrix product to
    better than 1e-10.
    """
    X = _check_shape(plan, X, "X")
    return scipy.fft.dctn(X, type=2, norm="ortho")


def inverse(plan: DctPlan, C: np.ndarray) -> np.ndarray:
    """Inverse transform: X = D_m^T @ C @ D_n. Exact inverse of `forward`."""
    C = _check_shape(plan, C, "C")
    return scipy.fft.idctn(C, type=2, norm="ortho")


def kron_infnorm(A: np.ndarray, B: np.ndarray) -> float:
    """Max absolute entry of kron(B^T, A), without materializing the product.

    Every entry of the Kronecker product is a product of one entry of A and
    one of B, so the max modulus factorizes.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.size == 0 or B.size == 0:
        raise ValueError("kron_infnorm requires nonempty matrices")
    return float(np.max(np.abs(A)) * np.max(np.abs(B)))


def dct_infnorm_squared(m: int) -> float:
    """Closed form for the max |entry| of kron(D_m, D_m).

    Equals (2/m)*cos^2(pi/(2m)) when m is a power of two (m > 1), 2/m for
    other m > 1, and 1 for m = 1.
    """
    if m < 1:
        raise ValueError(f"matrix size must be a positive integer, got {m}")
    if m == 1:
        return 1.0
    if m & (m - 1) == 0:  # power of two
        return (2.0 / m) * np.cos(np.pi / (2 * m)) ** 2
    return 2.0 / m


def uniqueness_bound(A: np.ndarray, B: np.ndarray) -> float:
    """Sparsity bound 0.5*(1 + 1/kron_infnorm(A, B)).

    Any feasible pair whose total number of nonzeros (signal plus noise)
    is strictly below this value is the unique sparsest decomposition.
    kron(B^T, A) is expected to be orthonormal; a warning is emitted if
    the factor matrices fail that check at 1e-9.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    _warn_if_not_orthonormal_kron(A, B)
    M = kron_infnorm(A, B)
    if M == 0.0:
        raise ValueError("kron_infnorm is zero; bound undefined")
    return 0.5 * (1.0 + 1.0 / M)


def _warn_if_not_orthonormal_kron(A: np.ndarray, B: np.ndarray, tol: float = 1e-9):
    # kron(B^T, A) is orthonormal iff A^T A = a*I and B B^T = (1/a)*I.
    GA = A.T @ A
    GB = B @ B.T
    a = float(np.mean(np.diag(GA)))
    b = float(np.mean(np.diag(GB)))
    ok = (
        a > 0
        and b > 0
        and np.max(np.abs(GA - a * np.eye(GA.shape[0]))) <= tol * max(1.0, a)
        and np.max(np.abs(GB - b * np.eye(GB.shape[0]))) <= tol * max(1.0, b)
        and abs(a * b - 1.0) <= 1e-6
    )
    if not ok:
        warnings.warn("kron(B^T, A) is not orthonormal; bound may not apply", stacklevel=3)
