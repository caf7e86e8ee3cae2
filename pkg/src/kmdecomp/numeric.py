"""Numeric helpers for the few steps that need square roots.

Symmetric eigenproblems use cyclic Jacobi iteration from the kernel backend.
Hermitian matrices are handled through the real embedding
``X + iY -> [[X, -Y], [Y, X]]``, which is an algebra homomorphism and so
commutes with taking the positive square root.
"""

import numpy as np

from . import _kernels
from .errors import ConvergenceFailureError

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


def eigh(a, tol=DEFAULT_TOL, max_sweeps=MAX_SWEEPS):
    """Eigenvalues (descending) and orthonormal eigenvectors of a real symmetric matrix."""
    a = np.asarray(a, dtype=float)
    w, v, sweeps, converged = _kernels.jacobi_eigh(np.ascontiguousarray(a), tol, max_sweeps)
    if not converged:
        raise ConvergenceFailureError(f"Jacobi did not converge in {max_sweeps} sweeps")
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def _embed(h):
    x, y = h.real, h.imag
    return np.block([[x, -y], [y, x]])


def psd_sqrt(h, tol=DEFAULT_TOL):
    """Positive square root of a symmetric (or Hermitian) positive definite matrix."""
    h = np.asarray(h)
    if np.iscomplexobj(h):
        n = h.shape[0]
        s = psd_sqrt(_embed(h), tol)
        return s[:n, :n] + 1j * s[n:, :n]
    w, v = eigh((h + h.T) / 2, tol)
    if w[-1] <= 0:
        raise ValueError("matrix is not positive definite")
    return (v * np.sqrt(w)) @ v.T


def max_norm(x):
    return float(np.max(np.abs(x))) if np.size(x) else 0.0


def fmt(x):
    """Decimal string with 17 significant digits."""
    if isinstance(x, complex) or np.iscomplexobj(x):
        x = complex(x)
        return f"{x.real:.17g}{x.imag:+.17g}j"
    return f"{float(x):.17g}"


def to_json(a):
    return [[fmt(x) for x in row] for row in np.atleast_2d(a)]
