"""Dense and sparse exact linear algebra over a cyclotomic field.

Dense matrices are lists of rows of CycloNum.  Sparse vectors are dicts
mapping column index to a nonzero CycloNum.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .cyclotomic import CycloNum

Matrix = list[list[CycloNum]]
SparseVec = dict[int, CycloNum]


class SingularMatrixError(ZeroDivisionError):
    pass


def zeros(d: int, L: int) -> Matrix:
    z = CycloNum.zero(L)
    return [[z] * d for _ in range(d)]


def identity(d: int, L: int) -> Matrix:
    out = zeros(d, L)
    one = CycloNum.one(L)
    for i in range(d):
        out[i][i] = one
    return out


def scalar_matrix(c: CycloNum, d: int) -> Matrix:
    out = zeros(d, c.order)
    for i in range(d):
        out[i][i] = c
    return out


def matmul(A: Sequence[Sequence[CycloNum]], B: Sequence[Sequence[CycloNum]]) -> Matrix:
    L = A[0][0].order
    zero = CycloNum.zero(L)
    cols = len(B[0])
    sparse_B = [[(j, v) for j, v in enumerate(row) if v] for row in B]
    out = []
    for row in A:
        acc: dict[int, CycloNum] = {}
        for k, a in enumerate(row):
            if not a:
                continue
            for j, b in sparse_B[k]:
                p = a * b
                acc[j] = acc[j] + p if j in acc else p
        out.append([acc.get(j, zero) for j in range(cols)])
    return out


def matadd(A, B) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matsub(A, B) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matscale(c, A) -> Matrix:
    return [[c * a for a in row] for row in A]


def matpow(A, k: int) -> Matrix:
    d = len(A)
    result = identity(d, A[0][0].order)
    base = [list(r) for r in A]
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def is_zero_matrix(A) -> bool:
    return not any(v for row in A for v in row)


def first_nonzero_row(A) -> int | None:
    for i, row in enumerate(A):
        if any(row):
            return i
    return None


def is_diagonal(A) -> bool:
    return all(not v for i, row in enumerate(A) for j, v in enumerate(row) if i != j)


def scalar_value(A) -> CycloNum | None:
    """c if A == c * identity, else None."""
    if not is_diagonal(A):
        return None
    c = A[0][0]
    if any(A[i][i] != c for i in range(len(A))):
        return None
    return c


def det(A) -> CycloNum:
    """Determinant by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in A]
    d = len(M)
    L = M[0][0].order
    sign = 1
    prev = CycloNum.one(L)
    for k in range(d - 1):
        if not M[k][k]:
            swap = next((r for r in range(k + 1, d) if M[r][k]), None)
            if swap is None:
                return CycloNum.zero(L)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        inv_prev = prev.inverse()
        for i in range(k + 1, d):
            mik = M[i][k]
            for j in range(k + 1, d):
                M[i][j] = (M[i][j] * pivot - mik * M[k][j]) * inv_prev
            M[i][k] = CycloNum.zero(L)
        prev = pivot
    out = M[d - 1][d - 1]
    return out if sign > 0 else -out


def rank(A) -> int:
    span = EchelonSpan()
    for row in A:
        span.add({j: v for j, v in enumerate(row) if v})
    return span.rank


def inverse(A) -> Matrix:
    """Gauss-Jordan inverse; raises SingularMatrixError."""
    d = len(A)
    L = A[0][0].order
    M = [list(r) + e for r, e in zip(A, identity(d, L))]
    for k in range(d):
        piv = next((r for r in range(k, d) if M[r][k]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[k], M[piv] = M[piv], M[k]
        inv = M[k][k].inverse()
        M[k] = [v * inv for v in M[k]]
        for r in range(d):
            if r != k and M[r][k]:
                f = M[r][k]
                M[r] = [a - f * b for a, b in zip(M[r], M[k])]
    return [row[d:] for row in M]


class EchelonSpan:
    """Incrementally maintained reduced row echelon basis of sparse vectors."""

    def __init__(self):
        self.rows: dict[int, SparseVec] = {}  # pivot column -> row with pivot 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: SparseVec) -> SparseVec:
        v = dict(v)
        for col in [c for c in v if c in self.rows]:
            f = v.get(col)
            if not f:
                continue
            for j, b in self.rows[col].items():
                nv = v[j] - f * b if j in v else -f * b
                if nv:
                    v[j] = nv
                else:
                    v.pop(j, None)
        return v

    def add(self, v: SparseVec) -> bool:
        """Add ``v``; return True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        col = min(v)
        inv = v[col].inverse()
        v = {j: b * inv for j, b in v.items()}
        for row in self.rows.values():
            f = row.get(col)
            if f:
                for j, b in v.items():
                    nv = row[j] - f * b if j in row else -f * b
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        self.rows[col] = v
        return True


def nullspace(rows: Iterable[SparseVec], ncols: int, L: int) -> list[list[CycloNum]]:
    """Basis of {v : row . v = 0 for all rows}, as dense vectors."""
    span = EchelonSpan()
    for r in rows:
        if r:
            span.add(r)
    pivots = set(span.rows)
    zero, one = CycloNum.zero(L), CycloNum.one(L)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [zero] * ncols
        v[free] = one
        for col, row in span.rows.items():
            f = row.get(free)
            if f:
                v[col] = -f
        basis.append(v)
    return basis
