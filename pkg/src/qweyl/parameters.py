"""Defining multiparameters q_i, lambda_ij as exponents of one global root.

Every scalar is zeta_L**k with L = l_n, so validation is integer arithmetic.
Indices are 1-based throughout, matching the algebra's generator names.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .cyclotomic import CycloNum


class ParameterError(ValueError):
    """Invalid parameter data; ``clause`` names the violated condition."""

    def __init__(self, clause: str, message: str):
        super().__init__(message)
        self.clause = clause


class AlgebraKind(enum.Enum):
    MALTSINIOTIS = "maltsiniotis"
    ALTERNATIVE = "alternative"

    @classmethod
    def parse(cls, value) -> "AlgebraKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ParameterError("kind", f"unknown algebra kind {value!r}") from None


@dataclass(frozen=True)
class ParameterSet:
    n: int
    l: tuple[int, ...]
    q_exp: tuple[int, ...]
    lam_exp: tuple[tuple[int, ...], ...]  # full n x n, reduced mod L

    @property
    def L(self) -> int:
        return self.l[-1]

    def _check(self, *idx: int) -> None:
        for i in idx:
            if not 1 <= i <= self.n:
                raise IndexError(f"index {i} out of range 1..{self.n}")

    def q(self, i: int) -> CycloNum:
        self._check(i)
        return CycloNum.root(self.L, self.q_exp[i - 1])

    def lam(self, i: int, j: int) -> CycloNum:
        self._check(i, j)
        return CycloNum.root(self.L, self.lam_exp[i - 1][j - 1])

    def u(self, i: int, j: int) -> int:
        """Exponent of lambda_ij."""
        self._check(i, j)
        return self.lam_exp[i - 1][j - 1]

    def t(self, i: int) -> int:
        """Exponent of q_i."""
        self._check(i)
        return self.q_exp[i - 1]

    def root(self, k: int) -> CycloNum:
        return CycloNum.root(self.L, k)

    def to_json(self) -> dict:
        upper = [[i, j, self.u(i, j)]
                 for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]
        return {"n": self.n, "l": list(self.l), "q_exp": list(self.q_exp),
                "lambda_exp_upper": upper}


def scalar(p: ParameterSet, which: str, *idx: int) -> CycloNum:
    """``scalar(p, "q", i)`` or ``scalar(p, "lambda", i, j)``."""
    if which == "q" and len(idx) == 1:
        return p.q(*idx)
    if which in ("lambda", "lam") and len(idx) == 2:
        return p.lam(*idx)
    raise ValueError(f"unknown scalar {which}{idx}")


def _int_list(raw, key: str) -> list[int]:
    value = raw.get(key)
    if not isinstance(value, (list, tuple)) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ParameterError("shape", f"'{key}' must be a list of integers")
    return list(value)


def validate(raw) -> ParameterSet:
    """Check candidate data against the root-of-unity assumptions.

    Checks run in a fixed order (shapes, l_i >= 2, divisibility chain,
    orders of q_i, lambda conditions) and the first failure is raised.
    """
    if isinstance(raw, ParameterSet):
        raw = raw.to_json()
    if not isinstance(raw, dict):
        raise ParameterError("shape", "parameter data must be an object")
    n = raw.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParameterError("shape", f"'n' must be a positive integer, got {n!r}")
    l = _int_list(raw, "l")
    t = _int_list(raw, "q_exp")
    if len(l) != n or len(t) != n:
        raise ParameterError("shape", f"'l' and 'q_exp' must have length n={n}")
    entries = raw.get("lambda_exp_upper", [])
    if not isinstance(entries, (list, tuple)):
        raise ParameterError("shape", "'lambda_exp_upper' must be a list of [i, j, u] triples")
    upper: dict[tuple[int, int], int] = {}
    for entry in entries:
        if (not isinstance(entry, (list, tuple)) or len(entry) != 3
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)):
            raise ParameterError("shape", f"bad lambda entry {entry!r}; expected [i, j, u]")
        i, j, u = entry
        if not 1 <= i < j <= n:
            raise ParameterError("shape", f"lambda entry needs 1 <= i < j <= n, got ({i}, {j})")
        if (i, j) in upper and upper[i, j] != u:
            raise ParameterError("shape", f"conflicting entries for lambda_{i}{j}")
        upper[i, j] = u

    for i, li in enumerate(l, 1):
        if li < 2:
            raise ParameterError("order", f"l_{i} = {li} but q_{i} != 1 forces l_{i} >= 2")
    for i in range(1, n):
        if l[i] % l[i - 1]:
            raise ParameterError(
                "divisibility", f"divisibility chain violated: l_{i} = {l[i - 1]} does not divide l_{i + 1} = {l[i]}")
    L = l[-1]
    for i, (li, ti) in enumerate(zip(l, t), 1):
        if L // gcd(ti, L) != li:
            raise ParameterError(
                "q_order", f"q_{i} = zeta_{L}^{ti} is not a primitive {li}-th root of unity")
    lam = [[0] * n for _ in range(n)]
    for (i, j), u in sorted(upper.items()):
        if (l[i - 1] * u) % L:
            raise ParameterError(
                "lambda_root", f"lambda_{i}{j} not an l_{i}-th root of unity (l_{i} = {l[i - 1]})")
        lam[i - 1][j - 1] = u % L
        lam[j - 1][i - 1] = (-u) % L
    return ParameterSet(n=n, l=tuple(l), q_exp=tuple(ti % L for ti in t),
                        lam_exp=tuple(tuple(row) for row in lam))


def preset(case: str, n: int, order: int) -> dict:
    """Raw data for the uniparameter families.

    Case A: all q_i equal of the given order, lambda_ij = 1.
    Case B: q_i = q^2 and lambda_ij = q^-1 (i < j), q of odd order.
    """
    case = case.upper()
    if n < 1 or order < 2:
        raise ParameterError("shape", "preset needs n >= 1 and order >= 2")
    if case == "A":
        return {"n": n, "l": [order] * n, "q_exp": [1] * n, "lambda_exp_upper": []}
    if case == "B":
        if order % 2 == 0:
            raise ParameterError("parity", f"case B needs odd ord(q), got {order}")
        upper = [[i, j, order - 1] for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        return {"n": n, "l": [order] * n, "q_exp": [2] * n, "lambda_exp_upper": upper}
    raise ParameterError("shape", f"unknown preset case {case!r}")
