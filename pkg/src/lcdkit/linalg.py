"""Dense matrix algebra over GF(2)/GF(3)/GF(4).

Matrices are 2-D numpy uint8 arrays of element indices.  Everything here
is a pure function of its inputs; results with a canonical form (RREF)
are unique for a given row space, which downstream code relies on for
deterministic coordinate choices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import EUCLIDEAN, FieldSpec, GF2


class LinalgError(ValueError):
    pass


class NotOrthonormalizable(LinalgError):
    """The symmetric form has an all-zero diagonal, so no congruence to I exists."""


def as_matrix(field: FieldSpec, rows) -> np.ndarray:
    m = np.array(rows, dtype=np.uint8)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2:
        raise LinalgError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.size and m.max() >= field.order:
        raise LinalgError(f"entry {int(m.max())} out of range for {field.name}")
    return m


def matmul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Plain (unconjugated) matrix product over the field."""
    if a.shape[1] != b.shape[0]:
        raise LinalgError(f"shape mismatch {a.shape} x {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    add, mul = field.add_table, field.mul_table
    for i in range(a.shape[0]):
        acc = np.zeros(b.shape[1], dtype=np.uint8)
        for j in range(a.shape[1]):
            acc = add[acc, mul[a[i, j], b[j]]]
        out[i] = acc
    return out


@dataclass(frozen=True)
class RrefResult:
    matrix: np.ndarray
    pivots: tuple[int, ...]
    rank: int


def rref(M: np.ndarray, field: FieldSpec, col_order=None) -> RrefResult:
    """Reduced row echelon form; canonical for a given row space.

    ``col_order`` optionally gives the column scan order used for pivot
    selection (the matrix itself is not permuted); pivots are reported in
    scan order.
    """
    work = np.array(M, dtype=np.uint8)
    rows, cols = work.shape
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    order = range(cols) if col_order is None else col_order
    r = 0
    pivots = []
    for c in order:
        pr = None
        for i in range(r, rows):
            if work[i, c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            work[[r, pr]] = work[[pr, r]]
        if work[r, c] != 1:
            work[r] = mul[inv[work[r, c]], work[r]]
        for i in range(rows):
            if i != r and work[i, c]:
                factor = work[i, c]
                work[i] = add[work[i], mul[neg[factor], work[r]]]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return RrefResult(work, tuple(pivots), r)


def rank(M: np.ndarray, field: FieldSpec) -> int:
    if M.size == 0:
        return 0
    return rref(M, field).rank


def row_space_basis(M: np.ndarray, field: FieldSpec) -> np.ndarray:
    """RREF basis with zero rows dropped."""
    res = rref(M, field)
    return res.matrix[: res.rank]


def row_spaces_equal(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> bool:
    a = row_space_basis(A, field) if A.size else A.reshape(0, B.shape[1] if B.size else 0)
    b = row_space_basis(B, field) if B.size else B.reshape(0, A.shape[1] if A.size else 0)
    return a.shape == b.shape and bool(np.array_equal(a, b))


@dataclass(frozen=True)
class StandardFormResult:
    matrix: np.ndarray
    column_permutation: tuple[int, ...]  # new position j holds old column column_permutation[j]


def standard_form(G: np.ndarray, field: FieldSpec) -> StandardFormResult:
    """Bring a full-rank generator to (I_k | A) form, tracking columns.

    Columns are permuted only when a pivot is missing from the diagonal
    position, taking the leftmost available pivot column.  The returned
    permutation maps new column positions to original ones and is never
    applied silently to anything else.
    """
    res = rref(G, field)
    k, n = G.shape
    if res.rank != k:
        raise LinalgError(f"standard form requires full row rank (rank {res.rank} < {k})")
    perm = list(res.pivots) + [j for j in range(n) if j not in set(res.pivots)]
    if list(res.pivots) == list(range(k)):
        return StandardFormResult(res.matrix, tuple(range(n)))
    return StandardFormResult(res.matrix[:, perm], tuple(perm))


def conj_matrix(M: np.ndarray, field: FieldSpec) -> np.ndarray:
    return field.conj_table[M]


def pairing_matrix(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    """All pairings <row_i(A), row_j(B)> under the field's flavor."""
    return matmul(field, A, conj_matrix(B, field).T)


def gram(G: np.ndarray, field: FieldSpec) -> np.ndarray:
    """k x k pairing matrix of the rows of G.

    Euclidean flavor gives a symmetric matrix; Hermitian gives a
    conjugate-symmetric one.
    """
    return pairing_matrix(G, G, field)


def nullspace(M: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Full-rank RREF basis of {y : M conj(y)^T = 0}.

    For the Euclidean flavor this is the plain right kernel; for the
    Hermitian flavor it equals the kernel of the entrywise-conjugated
    matrix, since M conj(y)^T = 0 iff conj(M) y^T = 0.
    """
    rows, cols = M.shape
    work = conj_matrix(M, field) if field.flavor != EUCLIDEAN else M
    res = rref(work, field)
    piv = list(res.pivots)
    free = [j for j in range(cols) if j not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    neg = field.neg_table
    for bi, j in enumerate(free):
        basis[bi, j] = 1
        for ri, c in enumerate(piv):
            basis[bi, c] = neg[res.matrix[ri, j]]
    # already ordered by free column; normalize to canonical RREF
    return row_space_basis(basis, field) if len(free) else basis


def solve_rowspace(A: np.ndarray, v: np.ndarray, field: FieldSpec):
    """Coefficients x with x A = v, or None if v is outside the row space."""
    k, n = A.shape
    aug = np.concatenate([A.T, v.reshape(n, 1)], axis=1)
    res = rref(aug, field)
    if any(p == k for p in res.pivots):
        return None
    x = np.zeros(k, dtype=np.uint8)
    for ri, c in enumerate(res.pivots):
        x[c] = res.matrix[ri, k]
    return x


def intersect_row_spaces(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    """RREF basis of rowspace(A) ∩ rowspace(B) (Zassenhaus block trick)."""
    n = A.shape[1] if A.size else B.shape[1]
    if A.size == 0 or B.size == 0:
        return np.zeros((0, n), dtype=np.uint8)
    top = np.concatenate([A, A], axis=1)
    bot = np.concatenate([B, np.zeros_like(B)], axis=1)
    res = rref(np.concatenate([top, bot], axis=0), field)
    inter = [res.matrix[i, n:] for i in range(res.rank) if not res.matrix[i, :n].any()]
    if not inter:
        return np.zeros((0, n), dtype=np.uint8)
    return row_space_basis(np.array(inter, dtype=np.uint8), field)


def invertible(M: np.ndarray, field: FieldSpec) -> bool:
    return M.shape[0] == M.shape[1] and rank(M, field) == M.shape[0]


def congruence_orthonormalize(M: np.ndarray) -> np.ndarray:
    """Invertible U over GF(2) with U M U^T = I, for symmetric nonsingular M.

    Greedy reduction: pick a basis vector with self-pairing 1, clear its
    pairings with the rest, recurse on the residual.  When the residual
    form turns alternating (all self-pairings 0) it must contain a
    hyperbolic pair u, v; together with an already-processed vector e the
    triple is rebased as e+u, e+v, e+u+v, each of self-pairing 1 and
    mutually orthogonal.  A symmetric form with an all-zero diagonal is
    alternating for every basis, so no U exists and we raise instead.
    """
    M = np.asarray(M, dtype=np.uint8)
    k = M.shape[0]
    if M.shape != (k, k) or not np.array_equal(M, M.T):
        raise LinalgError("congruence_orthonormalize expects a symmetric square matrix")
    if k == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    if rank(M, GF2) != k:
        raise LinalgError("matrix is singular")
    if not M.diagonal().any():
        raise NotOrthonormalizable("alternating form: zero diagonal is congruence-invariant over GF(2)")

    Mi = M.astype(np.int64)

    def pair(x, y):
        return int(x.astype(np.int64) @ Mi @ y.astype(np.int64)) & 1

    basis = [np.eye(k, dtype=np.uint8)[i] for i in range(k)]
    done: list[np.ndarray] = []
    pending = basis
    while pending:
        idx = next((i for i, v in enumerate(pending) if pair(v, v)), None)
        if idx is None:
            # alternating residual: find a hyperbolic pair and repair with
            # the most recent processed vector
            ui, vi = next(
                (i, j)
                for i in range(len(pending))
                for j in range(i + 1, len(pending))
                if pair(pending[i], pending[j])
            )
            e = done.pop()
            u, v = pending[ui], pending[vi]
            rest = [w for i, w in enumerate(pending) if i not in (ui, vi)]
            trio = [(e + u) % 2, (e + v) % 2, (e + u + v) % 2]
            new_pending = []
            for w in rest:
                for t in trio:
                    if pair(w, t):
                        w = (w + t) % 2
                new_pending.append(w)
            done.extend(trio)
            pending = new_pending
            continue
        e = pending.pop(idx)
        pending = [(w + e) % 2 if pair(w, e) else w for w in pending]
        done.append(e)
    U = np.array(done, dtype=np.uint8)
    assert np.array_equal(matmul(GF2, matmul(GF2, U, M), U.T), np.eye(k, dtype=np.uint8))
    return U
