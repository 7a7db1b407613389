"""Complex linear-algebra kernel: inner products, tolerance-controlled span
ranks, and Hilbert-Schmidt orthogonal complements.

Vectors are 1-D complex arrays and operators are square 2-D complex arrays;
every function is pure and leaves its inputs untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "vec_inner",
    "hs_inner",
    "span_rank",
    "orthocomplement_basis",
]


@dataclass(frozen=True)
class Tolerance:
    """Numerical cutoffs shared across the package.

    ``rank_rel`` scales the dead-pivot threshold of rank computations
    relative to the largest input row norm; ``orth_abs`` is the absolute
    magnitude below which an inner product counts as zero.
    """

    rank_rel: float = 1e-8
    orth_abs: float = 1e-10

    def __post_init__(self):
        for name in ("rank_rel", "orth_abs"):
            value = getattr(self, name)
            if not 0.0 < value < 1e-2:
                raise ValueError(f"{name} must lie in (0, 1e-2), got {value!r}")


DEFAULT_TOL = Tolerance()


def vec_inner(a, b) -> complex:
    """Inner product of two amplitude vectors, conjugating the first slot.

    Products are materialized before summing (no fused multiply-add), so
    structurally cancelling entries give an exact zero; stability checks on
    many parties rely on that.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 1 or b.ndim != 1:
        raise ValueError("vec_inner expects 1-D amplitude vectors")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return complex((a.conj() * b).sum())


def hs_inner(m, n) -> complex:
    """Hilbert-Schmidt pairing Tr(M_adj N) of two equal-size square matrices."""
    m = np.asarray(m, dtype=complex)
    n = np.asarray(n, dtype=complex)
    _require_square(m)
    _require_square(n)
    if m.shape != n.shape:
        raise ValueError(f"shape mismatch: {m.shape} vs {n.shape}")
    return complex((m.conj() * n).sum())


def span_rank(mats, tol: Tolerance = DEFAULT_TOL) -> int:
    """Complex dimension of the linear span of a list of square matrices.

    Each matrix is flattened to a row and the rows are eliminated in input
    order; a pivot counts as dead once its magnitude drops below
    ``tol.rank_rel`` times the largest initial row norm.  The empty list has
    rank 0.
    """
    rows, _ = _flattened_rows(mats)
    if not rows:
        return 0
    scale = max(np.linalg.norm(r) for r in rows)
    if scale == 0.0:
        return 0
    return len(_orthonormalize(rows, tol.rank_rel * scale))


def orthocomplement_basis(mats, tol: Tolerance = DEFAULT_TOL, dim: int | None = None):
    """Orthonormal Hilbert-Schmidt basis of the orthogonal complement of
    span(mats) inside the full d x d matrix space.

    ``dim`` fixes d when ``mats`` is empty and must otherwise agree with the
    shared matrix size.  Together with ``span_rank`` the dimensions always
    add up to d**2.
    """
    rows, d = _flattened_rows(mats)
    if d is None:
        if dim is None:
            raise ValueError("dim is required when no matrices are given")
        d = int(dim)
    elif dim is not None and int(dim) != d:
        raise ValueError(f"dim={dim} disagrees with matrix size {d}")
    if d < 1:
        raise ValueError("dim must be positive")

    span_basis = []
    if rows:
        scale = max(np.linalg.norm(r) for r in rows)
        if scale > 0.0:
            span_basis = _orthonormalize(rows, tol.rank_rel * scale)

    complement = []
    accepted = list(span_basis)
    for idx in range(d * d):
        unit = np.zeros(d * d, dtype=complex)
        unit[idx] = 1.0
        before = len(accepted)
        accepted = _orthonormalize([unit], tol.rank_rel, basis=accepted)
        if len(accepted) > before:
            complement.append(accepted[-1].reshape(d, d))
    return complement


def _require_square(m):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")


def _flattened_rows(mats):
    """Validate a list of equally sized square matrices; return flat rows and d."""
    arrays = [np.asarray(m, dtype=complex) for m in mats]
    for a in arrays:
        _require_square(a)
    sizes = {a.shape[0] for a in arrays}
    if len(sizes) > 1:
        raise ValueError(f"matrices differ in size: {sorted(sizes)}")
    d = sizes.pop() if sizes else None
    return [a.ravel() for a in arrays], d


def _orthonormalize(rows, threshold, basis=None):
    """Modified Gram-Schmidt in input order, appending to ``basis``.

    Residuals are projected out twice per row for numerical stability; a row
    whose residual norm falls below ``threshold`` is treated as dependent.
    """
    if basis is None:
        basis = []
    for row in rows:
        v = row.astype(complex, copy=True)
        for _ in range(2):
            for q in basis:
                v -= np.vdot(q, v) * q
        norm = np.linalg.norm(v)
        if norm >= threshold:
            basis.append(v / norm)
    return basis
