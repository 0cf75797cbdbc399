"""Finite-dimensional simple modules M(mu(I,J), gamma(I)) as explicit matrices.

Modules are right modules: a vector is a row, generator g acts by right
multiplication with the matrix rho(g), and rho(gh) = rho(g) rho(h).  The
basis vector e(a), 0 <= a_i < l_i, sits at the big-endian mixed-radix index
sum a_i * prod_{j>i} l_j.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from dataclasses import dataclass
from math import prod
from typing import Sequence

from . import linalg
from .algebra import defining_relations
from .cyclotomic import CycloNum, find_root, from_json as cyclo_from_json, to_json as cyclo_to_json
from .linalg import Matrix
from .parameters import AlgebraKind, ParameterSet


class ModuleSpecError(ValueError):
    """Invalid module data; ``clause`` names the violated condition."""

    def __init__(self, clause: str, message: str):
        super().__init__(message)
        self.clause = clause


class RepresentationError(ValueError):
    pass


class TorsionError(ValueError):
    pass


@dataclass(frozen=True)
class ModuleSpec:
    I: frozenset[int]
    J: frozenset[int]
    mu: tuple[CycloNum, ...]
    gamma: tuple[CycloNum, ...]

    def gamma0(self, i: int) -> CycloNum:
        """gamma_i with gamma_0 = 1 (1-based)."""
        if i == 0:
            return CycloNum.one(self.gamma[0].order)
        return self.gamma[i - 1]

    def to_json(self) -> dict:
        return {"I": sorted(self.I), "J": sorted(self.J),
                "mu": [cyclo_to_json(m) for m in self.mu],
                "gamma": [cyclo_to_json(g) for g in self.gamma]}


def spec_from_json(obj, p: ParameterSet) -> ModuleSpec:
    if not isinstance(obj, dict):
        raise ModuleSpecError("shape", "module spec must be an object")
    try:
        I = frozenset(int(i) for i in obj.get("I", []))
        J = frozenset(int(j) for j in obj.get("J", []))
        mu = tuple(cyclo_from_json(m, p.L) for m in obj["mu"])
        gamma = tuple(cyclo_from_json(g, p.L) for g in obj["gamma"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ModuleSpecError("shape", f"malformed module spec: {exc}") from None
    return ModuleSpec(I, J, mu, gamma)


def validate_spec(p: ParameterSet, spec: ModuleSpec) -> None:
    n = p.n
    if len(spec.mu) != n or len(spec.gamma) != n:
        raise ModuleSpecError("shape", f"mu and gamma must have length n={n}")
    for name, s in (("I", spec.I), ("J", spec.J)):
        bad = [i for i in s if not 1 <= i <= n]
        if bad:
            raise ModuleSpecError("shape", f"{name} contains indices outside 1..{n}: {sorted(bad)}")
    for v in spec.mu + spec.gamma:
        if v.order != p.L:
            raise ModuleSpecError("shape", f"scalar of order {v.order} outside Q(zeta_{p.L})")
    both = spec.I & spec.J
    for i in range(1, n + 1):
        m = spec.mu[i - 1]
        if m.is_zero() and i not in both:
            raise ModuleSpecError("mu", f"mu_{i} = 0 but {i} is not in I and J")
        if not m.is_zero() and i in both:
            raise ModuleSpecError("mu", f"mu_{i} must be 0 since {i} is in I and J")
    for i in range(1, n + 1):
        if spec.gamma[i - 1].is_zero():
            raise ModuleSpecError("gamma_nonzero", f"gamma_{i} must be nonzero")
    for i in sorted(spec.I):
        if p.q(i) * spec.gamma0(i) != spec.gamma0(i - 1):
            raise ModuleSpecError("gamma_chain", f"q_{i} * gamma_{i} != gamma_{i - 1} although {i} is in I")


@dataclass(frozen=True)
class Representation:
    dim: int
    radix: tuple[int, ...]
    x: tuple[tuple[tuple[CycloNum, ...], ...], ...]
    y: tuple[tuple[tuple[CycloNum, ...], ...], ...]

    @classmethod
    def make(cls, radix: Sequence[int], x: Sequence[Matrix], y: Sequence[Matrix]) -> "Representation":
        frz = lambda mats: tuple(tuple(tuple(r) for r in m) for m in mats)
        rep = cls(prod(radix), tuple(radix), frz(x), frz(y))
        rep.check_shape()
        return rep

    @property
    def n(self) -> int:
        return len(self.radix)

    @property
    def order(self) -> int:
        return self.x[0][0][0].order

    def check_shape(self) -> None:
        d = self.dim
        if d != prod(self.radix) or len(self.x) != self.n or len(self.y) != self.n:
            raise RepresentationError("dimension or generator count does not match radix")
        for m in self.x + self.y:
            if len(m) != d or any(len(r) != d for r in m):
                raise RepresentationError(f"generator matrices must be {d}x{d}")

    def X(self, i: int) -> Matrix:
        return [list(r) for r in self.x[i - 1]]

    def Y(self, i: int) -> Matrix:
        return [list(r) for r in self.y[i - 1]]

    def generator(self, g: str, i: int) -> Matrix:
        return self.X(i) if g == "x" else self.Y(i)

    def generator_matrices(self) -> list[Matrix]:
        out = []
        for i in range(1, self.n + 1):
            out += [self.X(i), self.Y(i)]
        return out

    def to_json(self) -> dict:
        enc = lambda m: [[cyclo_to_json(v) for v in r] for r in m]
        return {"dim": self.dim, "radix": list(self.radix),
                "x": [enc(m) for m in self.x], "y": [enc(m) for m in self.y]}

    @classmethod
    def from_json(cls, obj, order: int | None = None) -> "Representation":
        dec = lambda m: [[cyclo_from_json(v, order) for v in r] for r in m]
        try:
            rep = cls.make(obj["radix"], [dec(m) for m in obj["x"]], [dec(m) for m in obj["y"]])
        except (KeyError, TypeError) as exc:
            raise RepresentationError(f"malformed representation: {exc}") from None
        if obj.get("dim", rep.dim) != rep.dim:
            raise RepresentationError("declared dim does not match radix")
        return rep


# -- basis indexing ------------------------------------------------------------

def basis_index(a: Sequence[int], radix: Sequence[int]) -> int:
    k = 0
    for ai, li in zip(a, radix):
        k = k * li + ai
    return k


def basis_states(radix: Sequence[int]) -> list[tuple[int, ...]]:
    """All tuples a in index order."""
    return list(itertools.product(*(range(li) for li in radix)))


# -- construction ----------------------------------------------------------------

def construct_module(p: ParameterSet, spec: ModuleSpec) -> Representation:
    validate_spec(p, spec)
    n, L, radix = p.n, p.L, p.l
    d = prod(radix)
    zero = CycloNum.zero(L)
    inI = [i in spec.I for i in range(n + 1)]
    trunc = [i in spec.I and i in spec.J for i in range(n + 1)]
    xs, ys = [], []
    for i in range(1, n + 1):
        X = [[zero] * d for _ in range(d)]
        Y = [[zero] * d for _ in range(d)]
        q, li = p.q(i), radix[i - 1]
        g, g_prev = spec.gamma0(i), spec.gamma0(i - 1)
        inv_q1 = (q - 1).inverse()
        mu = spec.mu[i - 1]
        for a in basis_states(radix):
            A_exp = B_exp = 0
            for s in range(1, i):
                sign = -1 if inI[s] else 1
                A_exp += sign * a[s - 1] * (p.t(s) + p.u(s, i))
                B_exp -= sign * a[s - 1] * p.u(s, i)
            A, B = p.root(A_exp), p.root(B_exp)
            ai = a[i - 1]
            src = basis_index(a, radix)
            up = basis_index(a[:i - 1] + ((ai + 1) % li,) + a[i:], radix)
            down = basis_index(a[:i - 1] + ((ai - 1) % li,) + a[i:], radix)
            down_coeff = (q ** (-ai) - 1) * g_prev * inv_q1
            if not inI[i]:
                X[src][up] = mu * A
                Y[src][down] = mu.inverse() * B * (q ** ai * g - g_prev) * inv_q1
            elif not trunc[i]:
                X[src][down] = mu.inverse() * A * down_coeff
                Y[src][up] = mu * B
            else:
                if ai > 0:
                    X[src][down] = A * down_coeff
                if ai < li - 1:
                    Y[src][up] = B
        xs.append(X)
        ys.append(Y)
    return Representation.make(radix, xs, ys)


def random_spec(p: ParameterSet, I, J, rng: random.Random) -> ModuleSpec:
    """Random valid spec; mu_i are r * zeta^k so their powers have findable roots."""
    L = p.L
    I, J = frozenset(I), frozenset(J)
    scales = [1, -1, 2, -2, 3, "1/2", "-1/3"]
    mu, gamma = [], []
    for i in range(1, p.n + 1):
        if i in I and i in J:
            mu.append(CycloNum.zero(L))
        else:
            mu.append(CycloNum.root(L, rng.randrange(L)) * Fraction(rng.choice(scales)))
    prev = CycloNum.one(L)
    for i in range(1, p.n + 1):
        if i in I:
            g = prev * p.q(i).inverse()
        else:
            kind = rng.randrange(3)
            if kind == 0:
                g = CycloNum.root(L, rng.randrange(L))
            elif kind == 1:
                g = CycloNum.root(L, rng.randrange(L)) * Fraction(rng.choice(scales))
            else:
                g = CycloNum.root(L, rng.randrange(L)) + Fraction(rng.choice(scales[2:]))
            if g.is_zero():
                g = CycloNum.one(L)
        gamma.append(g)
        prev = g
    return ModuleSpec(I, J, tuple(mu), tuple(gamma))


# -- verification ----------------------------------------------------------------

def _word_matrix(rep: Representation, word) -> Matrix:
    out = linalg.identity(rep.dim, rep.order)
    for g, i in word:
        out = linalg.matmul(out, rep.generator(g, i))
    return out


def evaluate_polynomial(rep: Representation, poly) -> Matrix:
    acc = linalg.zeros(rep.dim, rep.order)
    for c, word in poly:
        acc = linalg.matadd(acc, linalg.matscale(c, _word_matrix(rep, word)))
    return acc


def verify_module(p: ParameterSet, rep: Representation, kind=AlgebraKind.MALTSINIOTIS) -> list[dict]:
    """Evaluate every defining relation as a matrix identity.

    A failing relation carries the first basis index whose image is wrong.
    """
    rep.check_shape()
    if tuple(rep.radix) != tuple(p.l) or rep.order != p.L:
        raise RepresentationError("representation does not match the parameter set")
    report = []
    for rid, poly in defining_relations(p, kind):
        diff = evaluate_polynomial(rep, poly)
        bad = linalg.first_nonzero_row(diff)
        entry = {"relation": rid, "pass": bad is None}
        if bad is not None:
            entry["witness_index"] = bad
        report.append(entry)
    return report


def is_representation(p: ParameterSet, rep: Representation, kind=AlgebraKind.MALTSINIOTIS) -> bool:
    return all(r["pass"] for r in verify_module(p, rep, kind))


def z_matrix(p: ParameterSet, rep: Representation, i: int, kind=AlgebraKind.MALTSINIOTIS) -> Matrix:
    """rho(z_i) from the PBW expression of z_i (z_0 = 1)."""
    kind = AlgebraKind.parse(kind)
    out = linalg.identity(rep.dim, rep.order)
    if i == 0:
        return out
    idx = range(1, i + 1) if kind is AlgebraKind.MALTSINIOTIS else [i]
    for j in idx:
        yx = linalg.matmul(rep.Y(j), rep.X(j))
        out = linalg.matadd(out, linalg.matscale(p.q(j) - 1, yx))
    return out


def torsion_profile(p: ParameterSet, rep: Representation, kind=AlgebraKind.MALTSINIOTIS) -> list[str]:
    tags = []
    for i in range(1, p.n + 1):
        Z = z_matrix(p, rep, i, kind)
        if linalg.is_zero_matrix(Z):
            tags.append("zero")
        elif linalg.det(Z):
            tags.append("invertible")
        else:
            tags.append("mixed")
    return tags


def _flatten(M: Matrix) -> dict[int, CycloNum]:
    d = len(M)
    return {r * d + c: v for r, row in enumerate(M) for c, v in enumerate(row) if v}


def span_dimension(rep: Representation) -> int:
    """Dimension of the algebra generated by the generator matrices.

    Breadth-first closure under left multiplication by generators; only
    words that enlarged the span are expanded further.
    """
    gens = rep.generator_matrices()
    span = linalg.EchelonSpan()
    start = linalg.identity(rep.dim, rep.order)
    span.add(_flatten(start))
    frontier = [start]
    target = rep.dim ** 2
    while frontier and span.rank < target:
        nxt = []
        for W in frontier:
            for G in gens:
                P = linalg.matmul(G, W)
                if span.add(_flatten(P)):
                    nxt.append(P)
                    if span.rank == target:
                        return target
        frontier = nxt
    return span.rank


def simplicity_check(rep: Representation) -> bool:
    return span_dimension(rep) == rep.dim ** 2


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    """Block-diagonal sum; radix is only nominal (dimension d1 + d2)."""
    L = r1.order
    d1, d2 = r1.dim, r2.dim
    zero = CycloNum.zero(L)

    def block(A, B):
        out = [[zero] * (d1 + d2) for _ in range(d1 + d2)]
        for r in range(d1):
            out[r][:d1] = A[r]
        for r in range(d2):
            out[d1 + r][d1:] = B[r]
        return out

    xs = [block(r1.X(i), r2.X(i)) for i in range(1, r1.n + 1)]
    ys = [block(r1.Y(i), r2.Y(i)) for i in range(1, r1.n + 1)]
    return Representation(d1 + d2, (d1 + d2,),
                          tuple(tuple(tuple(r) for r in m) for m in xs),
                          tuple(tuple(tuple(r) for r in m) for m in ys))


# -- eigendata -------------------------------------------------------------------

@dataclass(frozen=True)
class Eigendata:
    alpha: tuple[CycloNum, ...]
    beta: tuple[CycloNum, ...]
    zeta: tuple[CycloNum, ...]
    spectra: tuple[tuple[CycloNum, ...], ...]
    canonical: bool

    def to_json(self) -> dict:
        enc = lambda seq: [cyclo_to_json(v) for v in seq]
        return {"alpha": enc(self.alpha), "beta": enc(self.beta), "zeta": enc(self.zeta),
                "spectra": [enc(s) for s in self.spectra], "canonical": self.canonical}


class CenterMismatchError(ValueError):
    pass


def _eigenvalues(Z: Matrix, li: int) -> list[CycloNum]:
    """Eigenvalues with geometric multiplicity for Z with Z**li scalar.

    Candidates are the li-th roots of that scalar of the form r * zeta^k.
    """
    d = len(Z)
    L = Z[0][0].order
    c = linalg.scalar_value(linalg.matpow(Z, li))
    if c is None:
        raise CenterMismatchError("not a module over the expected center")
    root = find_root(c, li)
    if root is None or root.is_zero():
        raise CenterMismatchError("eigenvalues of z are not reachable in the working field")
    out = []
    for k in range(L):
        lam = root * CycloNum.root(L, k)
        if lam ** li != c or lam in out:
            continue
        mult = d - linalg.rank(linalg.matsub(Z, linalg.scalar_matrix(lam, d)))
        out += [lam] * mult
    if len(out) != d:
        raise CenterMismatchError("z does not diagonalize over the working field")
    return out


def extract_eigendata(p: ParameterSet, rep: Representation, kind=AlgebraKind.MALTSINIOTIS) -> Eigendata:
    alpha, beta, zeta, spectra = [], [], [], []
    canonical = True
    for i in range(1, p.n + 1):
        li = p.l[i - 1]
        a = linalg.scalar_value(linalg.matpow(rep.X(i), li))
        b = linalg.scalar_value(linalg.matpow(rep.Y(i), li))
        if a is None or b is None:
            raise CenterMismatchError("not a module over the expected center")
        alpha.append(a)
        beta.append(b)
        Z = z_matrix(p, rep, i, kind)
        if linalg.is_diagonal(Z):
            zeta.append(Z[0][0])
            spectra.append(tuple(Z[k][k] for k in range(rep.dim)))
        else:
            canonical = False
            eig = _eigenvalues(Z, li)
            zeta.append(eig[0])
            spectra.append(tuple(eig))
    return Eigendata(tuple(alpha), tuple(beta), tuple(zeta), tuple(spectra), canonical)


def reconstruct_spec(p: ParameterSet, data: Eigendata) -> ModuleSpec | None:
    """A spec whose module should be isomorphic to one with this eigendata.

    I = {alpha_i = 0}, J = {i in I : beta_i = 0}, gamma = zeta, and mu_i an
    l_i-th root of alpha_i or beta_i.  None if no such root is found.
    """
    I = frozenset(i for i in range(1, p.n + 1) if data.alpha[i - 1].is_zero())
    J = frozenset(i for i in I if data.beta[i - 1].is_zero())
    mu = []
    for i in range(1, p.n + 1):
        if i in I and i in J:
            mu.append(CycloNum.zero(p.L))
            continue
        target = data.beta[i - 1] if i in I else data.alpha[i - 1]
        root = find_root(target, p.l[i - 1])
        if root is None:
            return None
        mu.append(root)
    return ModuleSpec(I, J, tuple(mu), tuple(data.zeta))


# -- intertwiners ------------------------------------------------------------------

@dataclass(frozen=True)
class IntertwinerSpace:
    dimension: int
    basis: tuple[Matrix, ...]
    invertible: bool | None  # certified when dimension == 1

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "invertible": self.invertible,
                "basis": [[[cyclo_to_json(v) for v in r] for r in m] for m in self.basis]}


def intertwiner_space(rep1: Representation, rep2: Representation) -> IntertwinerSpace:
    """Module maps M1 -> M2, i.e. Phi with rho1(g) Phi = Phi rho2(g) (row vectors)."""
    if rep1.dim != rep2.dim or rep1.n != rep2.n:
        raise RepresentationError("intertwiners need representations of equal dimension")
    d, L = rep1.dim, rep1.order
    rows = []
    g1, g2 = rep1.generator_matrices(), rep2.generator_matrices()
    for A, B in zip(g1, g2):
        colsB = [[(k, B[k][c]) for k in range(d) if B[k][c]] for c in range(d)]
        for r in range(d):
            rowA = [(k, A[r][k]) for k in range(d) if A[r][k]]
            for c in range(d):
                eq: dict[int, CycloNum] = {}
                for k, v in rowA:  # (A Phi)[r][c]
                    j = k * d + c
                    eq[j] = eq[j] + v if j in eq else v
                for k, v in colsB[c]:  # (Phi B)[r][c]
                    j = r * d + k
                    eq[j] = eq[j] - v if j in eq else -v
                eq = {j: v for j, v in eq.items() if v}
                if eq:
                    rows.append(eq)
    basis = []
    for vec in linalg.nullspace(rows, d * d, L):
        basis.append([vec[r * d:(r + 1) * d] for r in range(d)])
    invertible = None
    if len(basis) == 1:
        invertible = not linalg.det(basis[0]).is_zero()
    return IntertwinerSpace(len(basis), tuple(basis), invertible)


# -- transport to the alternative algebra -------------------------------------------

def to_alternative(p: ParameterSet, rep: Representation) -> Representation:
    """rho'(y_i) = rho(y_i), rho'(x_i) = rho(z_{i-1})^{-1} rho(x_i)."""
    xs = []
    for i in range(1, p.n + 1):
        Z = z_matrix(p, rep, i - 1, AlgebraKind.MALTSINIOTIS)
        try:
            Zinv = linalg.inverse(Z)
        except linalg.SingularMatrixError:
            raise TorsionError("torsion module cannot be transported") from None
        xs.append(linalg.matmul(Zinv, rep.X(i)))
    return Representation.make(rep.radix, xs, [rep.Y(i) for i in range(1, p.n + 1)])


def from_alternative(p: ParameterSet, rep: Representation) -> Representation:
    """Inverse transport: rho(x_i) = rho(z_{i-1}) rho'(x_i), with rho(z_{i-1})
    rebuilt from the already recovered rho(x_j), rho(y_j), j < i.

    Equivalently rho(z_{i-1}) = rho'(z_1) ... rho'(z_{i-1}).
    """
    xs, ys = [], [rep.Y(i) for i in range(1, p.n + 1)]
    d, L = rep.dim, rep.order
    Z = linalg.identity(d, L)
    for i in range(1, p.n + 1):
        X = linalg.matmul(Z, rep.X(i))
        xs.append(X)
        Z = linalg.matadd(Z, linalg.matscale(p.q(i) - 1, linalg.matmul(ys[i - 1], X)))
    return Representation.make(rep.radix, xs, ys)
