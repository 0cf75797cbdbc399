"""PI degrees of quantum affine spaces given by integer skew exponent matrices.

The PI degree of the space with commutation scalars q^{h_ij} (q a primitive
m-th root of unity) is computed from the invariant factors of H as
prod m / gcd(h_k, m), and cross-checked against the image size of
Z^N --H--> (Z/m)^N, which must be its square.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Sequence

from .parameters import AlgebraKind, ParameterSet


class InconsistencyError(RuntimeError):
    """Two independent computations disagree; always an implementation bug."""


Matrix = list[list[int]]


@dataclass(frozen=True)
class IntSkewMat:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        N = len(rows)
        if any(len(r) != N for r in rows):
            raise ValueError("exponent matrix must be square")
        for i in range(N):
            for j in range(i, N):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"matrix is not skew-symmetric at ({i}, {j})")

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_list(self) -> Matrix:
        return [list(r) for r in self.rows]

    def to_json(self) -> dict:
        return {"size": self.size, "rows": self.to_list()}

    @classmethod
    def from_json(cls, obj) -> "IntSkewMat":
        m = cls(obj["rows"])
        if obj.get("size", m.size) != m.size:
            raise ValueError("declared size does not match rows")
        return m


@dataclass(frozen=True)
class SkewNormalForm:
    transform: tuple[tuple[int, ...], ...]
    factors: tuple[int, ...]
    kernel_dim: int

    def block_matrix(self) -> Matrix:
        N = 2 * len(self.factors) + self.kernel_dim
        out = [[0] * N for _ in range(N)]
        for k, h in enumerate(self.factors):
            out[2 * k][2 * k + 1] = h
            out[2 * k + 1][2 * k] = -h
        return out


def weyl_exponent_matrix(p: ParameterSet, kind: AlgebraKind = AlgebraKind.MALTSINIOTIS,
                         factor: int | None = None) -> IntSkewMat:
    """zeta_L-exponents of the derivation-erased quantum affine space.

    Variables are ordered y_1, x_1, ..., y_n, x_n.  With ``factor=r`` the
    (r, r) block is zeroed (the prime factor by z_r).
    """
    kind = AlgebraKind.parse(kind)
    n = p.n
    if factor is not None and not 1 <= factor <= n:
        raise IndexError(f"factor index {factor} out of range 1..{n}")
    M = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(1, n + 1):
        a = 2 * (i - 1)
        if i != factor:
            t = p.t(i)
            M[a][a + 1], M[a + 1][a] = -t, t
        for j in range(i + 1, n + 1):
            b = 2 * (j - 1)
            u = p.u(i, j)
            s = u if kind is AlgebraKind.ALTERNATIVE else p.t(i) + u
            block = [[u, -s], [-u, s]]
            for r in range(2):
                for c in range(2):
                    M[a + r][b + c] = block[r][c]
                    M[b + c][a + r] = -block[r][c]
    return IntSkewMat(M)


def _as_rows(H) -> Matrix:
    if isinstance(H, IntSkewMat):
        return H.to_list()
    return [list(r) for r in H]


def skew_normal_form(H) -> SkewNormalForm:
    """Congruence normal form W H W^T = diag([[0,h_k],[-h_k,0]], 0).

    Pivoting on the smallest nonzero entry with simultaneous row and column
    operations; divisibility h_k | h_{k+1} is enforced before each block is
    accepted.
    """
    if not isinstance(H, IntSkewMat):
        H = IntSkewMat(H)
    M = H.to_list()
    N = H.size
    W = [[int(i == j) for j in range(N)] for i in range(N)]

    def add(i, j, c):
        # row_i += c row_j and col_i += c col_j
        for k in range(N):
            M[i][k] += c * M[j][k]
        for k in range(N):
            M[k][i] += c * M[k][j]
        for k in range(N):
            W[i][k] += c * W[j][k]

    def swap(i, j):
        if i == j:
            return
        M[i], M[j] = M[j], M[i]
        for row in M:
            row[i], row[j] = row[j], row[i]
        W[i], W[j] = W[j], W[i]

    def negate(i):
        M[i] = [-v for v in M[i]]
        for row in M:
            row[i] = -row[i]
        W[i] = [-v for v in W[i]]

    factors = []
    p = 0
    while p < N:
        entries = [(abs(M[r][s]), r, s) for r in range(p, N) for s in range(p, N) if M[r][s]]
        if not entries:
            break
        _, r, s = min(entries)
        swap(p, r)
        if s == p:
            s = r
        swap(p + 1, s)
        if M[p][p + 1] < 0:
            negate(p + 1)
        h = M[p][p + 1]
        clean = True
        for c in range(p + 2, N):
            k = M[p][c] // h
            if k:
                add(c, p + 1, -k)
            k = M[p + 1][c] // h
            if k:
                add(c, p, k)
            if M[p][c] or M[p + 1][c]:
                clean = False
        if not clean:
            continue
        bad = next(((r, s) for r in range(p + 2, N) for s in range(p + 2, N) if M[r][s] % h), None)
        if bad is not None:
            add(p, bad[0], 1)
            continue
        factors.append(h)
        p += 2
    nf = SkewNormalForm(transform=tuple(tuple(r) for r in W), factors=tuple(factors),
                        kernel_dim=N - 2 * len(factors))
    if _congruence(W, H.to_list()) != nf.block_matrix():
        raise InconsistencyError("skew normal form certificate failed")
    return nf


def _matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def _congruence(W: Sequence[Sequence[int]], H: Matrix) -> Matrix:
    Wl = [list(r) for r in W]
    Wt = [list(c) for c in zip(*Wl)]
    return _matmul(_matmul(Wl, H), Wt)


def smith_diagonal(A) -> list[int]:
    """Nonnegative Smith invariants of an integer matrix (zeros included)."""
    M = [list(r) for r in _as_rows(A)]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(M[r][c]), r, c) for r in range(t, rows) for c in range(t, cols) if M[r][c]]
        if not entries:
            break
        _, r, c = min(entries)
        M[t], M[r] = M[r], M[t]
        for row in M:
            row[t], row[c] = row[c], row[t]
        piv = M[t][t]
        done = True
        for r in range(t + 1, rows):
            k = M[r][t] // piv
            if k:
                M[r] = [a - k * b for a, b in zip(M[r], M[t])]
            if M[r][t]:
                done = False
        for c in range(t + 1, cols):
            k = M[t][c] // piv
            if k:
                for row in M:
                    row[c] -= k * row[t]
            if M[t][c]:
                done = False
        if not done:
            continue
        bad = next((r for r in range(t + 1, rows) for c in range(t + 1, cols) if M[r][c] % piv), None)
        if bad is not None:
            M[t] = [a + b for a, b in zip(M[t], M[bad])]
            continue
        diag.append(abs(piv))
        t += 1
    return diag + [0] * (min(rows, cols) - len(diag))


def image_cardinality_bruteforce(H, m: int) -> int:
    """Count distinct H x mod m over all x in (Z/m)^N."""
    rows = _as_rows(H)
    N = len(rows)
    seen = set()
    for x in itertools.product(range(m), repeat=N):
        seen.add(tuple(sum(a * b for a, b in zip(row, x)) % m for row in rows))
    return len(seen)


BRUTE_FORCE_LIMIT = (4, 6)  # (max size, max modulus) for the enumeration path


def image_cardinality(H, m: int) -> int:
    """|image of Z^N -> (Z/m)^N| induced by H, via Smith normal form."""
    if m < 1:
        raise ValueError("modulus must be positive")
    rows = _as_rows(H)
    count = prod(m // gcd(d, m) for d in smith_diagonal(rows))
    if len(rows) <= BRUTE_FORCE_LIMIT[0] and m <= BRUTE_FORCE_LIMIT[1]:
        brute = image_cardinality_bruteforce(rows, m)
        if brute != count:
            raise InconsistencyError(
                f"image cardinality mismatch: smith {count} vs enumeration {brute}")
    return count


def pi_degree_from_form(nf: SkewNormalForm, m: int) -> int:
    return prod(m // gcd(h, m) for h in nf.factors)


def pi_degree(H, m: int) -> int:
    """PI degree prod m/gcd(h_k, m), checked against the image-cardinality oracle."""
    if m < 1:
        raise ValueError("modulus must be positive")
    nf = skew_normal_form(H)
    deg = pi_degree_from_form(nf, m)
    card = image_cardinality(H, m)
    if isqrt(card) ** 2 != card or deg * deg != card:
        raise InconsistencyError(
            f"PI degree {deg} disagrees with image cardinality {card}")
    return deg


def normal_form_report(H, m: int) -> dict:
    nf = skew_normal_form(H)
    deg = pi_degree(H, m)
    return {
        "factors": list(nf.factors),
        "kernel_dim": nf.kernel_dim,
        "transform": [list(r) for r in nf.transform],
        "pi_degree": deg,
        "oracle_cardinality": image_cardinality(H, m),
    }
