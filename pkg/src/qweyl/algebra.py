"""Element arithmetic in the quantized Weyl algebras via PBW normal forms.

A PBW monomial y_1^{a_1} x_1^{b_1} ... y_n^{a_n} x_n^{b_n} is stored as the
exponent tuple (a_1, b_1, ..., a_n, b_n).  Products are formed by right
multiplication with one generator at a time: the generator is moved left
past the higher-index blocks (pure scalar swaps) and merged into its own
block with the closed-form identity

    x_j^b y_j = q_j^b y_j x_j^b + (1 + q_j + ... + q_j^{b-1}) z_{j-1} x_j^{b-1},

where z_{j-1} commutes with y_j and is expanded on the lower-index prefix
(for the alternative algebra z_{j-1} is replaced by 1).
"""
from __future__ import annotations

import random
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CycloNum, from_json as cyclo_from_json, to_json as cyclo_to_json
from .parameters import AlgebraKind, ParameterSet

Exps = tuple[int, ...]
Terms = dict[Exps, CycloNum]
Generator = tuple[str, int]  # ("x", i) or ("y", i), 1-based


class AlgebraElement:
    """A finite linear combination of PBW monomials with nonzero coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "WeylAlgebra", terms: Mapping[Exps, CycloNum] | None = None):
        self.algebra = algebra
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != 2 * algebra.n or min(exps, default=0) < 0:
                raise ValueError(f"bad PBW exponent tuple {exps}")
            if c:
                clean[exps] = c
        self.terms = clean

    def _wrap(self, terms: Terms) -> "AlgebraElement":
        return AlgebraElement(self.algebra, terms)

    def _lift(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise ValueError("elements belong to different algebras")
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        c = self.algebra._scalar_value(other)
        return self._wrap({m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        c = self.algebra._scalar_value(other)
        return self._wrap({m: c * v for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and self.terms == other.terms
        try:
            return self == self.algebra.scalar(other)
        except (TypeError, ValueError):
            return NotImplemented

    __hash__ = None

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = "".join(
                f"{g}{i // 2 + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(m) if e for g in ["yx"[i % 2]])
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"n": self.algebra.n,
                "terms": [{"exps": list(m), "coeff": cyclo_to_json(self.terms[m])}
                          for m in sorted(self.terms)]}


class WeylAlgebra:
    """A_n^{q,Lambda} (maltsiniotis) or its alternative version over Q(zeta_L)."""

    def __init__(self, params: ParameterSet, kind: AlgebraKind | str = AlgebraKind.MALTSINIOTIS):
        self.params = params
        self.kind = AlgebraKind.parse(kind)
        self.n = params.n
        self.L = params.L
        self._roots = [CycloNum.root(self.L, k) for k in range(self.L)]

    def __eq__(self, other):
        return (isinstance(other, WeylAlgebra) and self.params == other.params
                and self.kind == other.kind)

    def __hash__(self):
        return hash((self.params, self.kind))

    @property
    def maltsiniotis(self) -> bool:
        return self.kind is AlgebraKind.MALTSINIOTIS

    # -- constructors -------------------------------------------------------

    def _scalar_value(self, c) -> CycloNum:
        if isinstance(c, CycloNum):
            if c.order != self.L:
                raise ValueError(f"scalar of order {c.order} outside Q(zeta_{self.L})")
            return c
        return CycloNum.rational(self.L, c)

    def zero_exps(self) -> Exps:
        return (0,) * (2 * self.n)

    def scalar(self, c) -> AlgebraElement:
        return AlgebraElement(self, {self.zero_exps(): self._scalar_value(c)})

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def monomial(self, exps: Sequence[int], coeff=1) -> AlgebraElement:
        return AlgebraElement(self, {tuple(exps): self._scalar_value(coeff)})

    def _gen_exps(self, which: str, i: int, power: int = 1) -> Exps:
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")
        e = [0] * (2 * self.n)
        e[2 * (i - 1) + (which == "x")] = power
        return tuple(e)

    def x(self, i: int, power: int = 1) -> AlgebraElement:
        return self.monomial(self._gen_exps("x", i, power))

    def y(self, i: int, power: int = 1) -> AlgebraElement:
        return self.monomial(self._gen_exps("y", i, power))

    def generators(self) -> list[tuple[str, AlgebraElement]]:
        out = []
        for i in range(1, self.n + 1):
            out.append((f"x{i}", self.x(i)))
            out.append((f"y{i}", self.y(i)))
        return out

    def z(self, i: int) -> AlgebraElement:
        """z_i = x_i y_i - y_i x_i in PBW form; z_0 = 1."""
        if not 0 <= i <= self.n:
            raise IndexError(f"z index {i} out of range 0..{self.n}")
        out = self.one()
        if i == 0:
            return out
        p = self.params
        indices = range(1, i + 1) if self.maltsiniotis else [i]
        for j in indices:
            out = out + (p.q(j) - 1) * self.monomial(self._yx_exps(j))
        return out

    def _yx_exps(self, j: int) -> Exps:
        e = [0] * (2 * self.n)
        e[2 * (j - 1)] = e[2 * (j - 1) + 1] = 1
        return tuple(e)

    # -- multiplication -----------------------------------------------------

    def _swap_exponent(self, which: str, j: int, exps: Exps) -> int:
        """zeta-exponent picked up moving generator (which, j) left past blocks > j."""
        p = self.params
        t = p.t(j) if self.maltsiniotis else 0
        e = 0
        for k in range(j + 1, self.n + 1):
            a, b = exps[2 * (k - 1)], exps[2 * (k - 1) + 1]
            if not (a or b):
                continue
            u = p.u(j, k)
            if which == "y":
                e += -u * a + (t + u) * b
            else:
                e += u * a - (t + u) * b
        return e

    def _q_integer(self, j: int, b: int) -> CycloNum:
        t = self.params.t(j)
        total = CycloNum.zero(self.L)
        for s in range(b):
            total = total + self._roots[(t * s) % self.L]
        return total

    def _mul_gen_mono(self, exps: Exps, gen: Generator) -> Terms:
        """PBW expansion of (monomial) * generator."""
        which, j = gen
        pos = 2 * (j - 1)
        e = self._swap_exponent(which, j, exps)
        if which == "x":
            new = list(exps)
            new[pos + 1] += 1
            return {tuple(new): self._roots[e % self.L]}
        b = exps[pos + 1]
        new = list(exps)
        new[pos] += 1
        t = self.params.t(j)
        out: Terms = {tuple(new): self._roots[(e + t * b) % self.L]}
        if b == 0:
            return out
        coeff = self._q_integer(j, b) * self._roots[e % self.L]
        tail = list(exps[pos:])
        tail[1] -= 1
        if not self.maltsiniotis or j == 1:
            key = tuple(exps[:pos]) + tuple(tail)
            _accumulate(out, key, coeff)
            return out
        # (prefix) * z_{j-1}, expanded on blocks < j
        prefix = {tuple(exps[:pos]) + (0,) * len(tail): CycloNum.one(self.L)}
        pz = dict(prefix)
        for k in range(1, j):
            yx = self._mul_gen_terms(self._mul_gen_terms(prefix, ("y", k)), ("x", k))
            qk1 = self.params.q(k) - 1
            for m, c in yx.items():
                _accumulate(pz, m, c * qk1)
        for m, c in pz.items():
            _accumulate(out, m[:pos] + tuple(tail), c * coeff)
        return out

    def _mul_gen_terms(self, terms: Terms, gen: Generator) -> Terms:
        out: Terms = {}
        for m, c in terms.items():
            for m2, c2 in self._mul_gen_mono(m, gen).items():
                _accumulate(out, m2, c * c2)
        return {m: c for m, c in out.items() if c}

    def multiply(self, e1: AlgebraElement, e2: AlgebraElement) -> AlgebraElement:
        if e1.algebra != self or e2.algebra != self:
            raise ValueError("elements belong to a different algebra")
        out: Terms = {}
        for m2, c2 in e2.terms.items():
            cur = dict(e1.terms)
            for gen in _word_of(m2):
                cur = self._mul_gen_terms(cur, gen)
            for m, c in cur.items():
                _accumulate(out, m, c * c2)
        return AlgebraElement(self, out)

    # -- checks -------------------------------------------------------------

    def is_central(self, e: AlgebraElement) -> bool:
        return all((e * g - g * e).is_zero() for _, g in self.generators())

    def evaluate_word_polynomial(self, poly: "WordPolynomial") -> AlgebraElement:
        out = self.zero()
        for c, word in poly:
            term = self.scalar(c)
            for g, i in word:
                term = term * (self.x(i) if g == "x" else self.y(i))
            out = out + term
        return out

    def relations(self) -> list[tuple[str, AlgebraElement]]:
        """Defining relations as (id, lhs - rhs) evaluated in the algebra."""
        return [(rid, self.evaluate_word_polynomial(poly))
                for rid, poly in defining_relations(self.params, self.kind)]

    def normality_relations(self) -> list[tuple[str, AlgebraElement, AlgebraElement]]:
        p = self.params
        out = []
        for i in range(1, self.n + 1):
            zi = self.z(i)
            out.append((f"z{i}=x{i}y{i}-y{i}x{i}", zi, self.x(i) * self.y(i) - self.y(i) * self.x(i)))
            for j in range(1, self.n + 1):
                scaled = (j <= i) if self.maltsiniotis else (j == i)
                qx = p.q(j).inverse() if scaled else CycloNum.one(self.L)
                qy = p.q(j) if scaled else CycloNum.one(self.L)
                out.append((f"z{i}x{j}=c*x{j}z{i}", zi * self.x(j), qx * (self.x(j) * zi)))
                out.append((f"z{i}y{j}=c*y{j}z{i}", zi * self.y(j), qy * (self.y(j) * zi)))
                if j > i:
                    zj = self.z(j)
                    out.append((f"z{i}z{j}=z{j}z{i}", zi * zj, zj * zi))
        return out

    def verify_relations(self) -> list[dict]:
        report = []
        for rid, diff in self.relations():
            report.append({"relation": rid, "pass": diff.is_zero()})
        for rid, lhs, rhs in self.normality_relations():
            report.append({"relation": rid, "pass": (lhs - rhs).is_zero()})
        return report

    def z_power_rhs(self, i: int) -> AlgebraElement:
        p = self.params
        li = p.l[i - 1]
        q = p.q(i)
        c = q ** (li * (li - 1) // 2) * (q - 1) ** li
        yx = [0] * (2 * self.n)
        yx[2 * (i - 1)] = yx[2 * (i - 1) + 1] = li
        base = self.z(i - 1) ** li if self.maltsiniotis else self.one()
        return base + self.monomial(yx, c)

    def verify_z_power_identity(self, i: int) -> bool:
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range 1..{self.n}")
        return self.z(i) ** self.params.l[i - 1] == self.z_power_rhs(i)

    def element_from_json(self, obj) -> AlgebraElement:
        if obj.get("n") != self.n:
            raise ValueError("element has wrong number of generator pairs")
        terms: Terms = {}
        for t in obj["terms"]:
            _accumulate(terms, tuple(t["exps"]), cyclo_from_json(t["coeff"], self.L))
        return AlgebraElement(self, terms)

    # -- independent reference rewriter ---------------------------------------

    def normalize_word(self, word: Iterable[Generator], rng: random.Random | None = None) -> AlgebraElement:
        """Normal form of a generator word using only the defining relations.

        Adjacent out-of-order pairs are rewritten one at a time, chosen at
        random when ``rng`` is given.  Independent of :meth:`multiply`.
        """
        p = self.params
        todo: dict[tuple, CycloNum] = {tuple(word): CycloNum.one(self.L)}
        done: Terms = {}

        def key(g):
            return (g[1], g[0] == "x")

        def add(w, c):
            if c:
                _accumulate(todo, w, c)
                if not todo[w]:
                    del todo[w]

        while todo:
            w = next(iter(todo)) if rng is None else rng.choice(list(todo))
            c = todo.pop(w)
            bad = [k for k in range(len(w) - 1) if key(w[k]) > key(w[k + 1])]
            if not bad:
                exps = [0] * (2 * self.n)
                for g, i in w:
                    exps[2 * (i - 1) + (g == "x")] += 1
                _accumulate(done, tuple(exps), c)
                continue
            k = bad[0] if rng is None else rng.choice(bad)
            (g, i), (h, j) = w[k], w[k + 1]
            pre, post = w[:k], w[k + 2:]
            if i == j:
                # x_i y_i = q_i y_i x_i + z_{i-1}
                add(pre + (("y", i), ("x", i)) + post, c * p.q(i))
                add(pre + post, c)
                if self.maltsiniotis:
                    for s in range(1, i):
                        add(pre + (("y", s), ("x", s)) + post, c * (p.q(s) - 1))
                continue
            # i > j: g_i h_j = scalar * h_j g_i
            u = p.u(j, i)
            t = p.t(j) if self.maltsiniotis else 0
            e = {("y", "y"): -u, ("y", "x"): u, ("x", "y"): t + u, ("x", "x"): -t - u}[g, h]
            add(pre + ((h, j), (g, i)) + post, c * self._roots[e % self.L])
        return AlgebraElement(self, done)


WordPolynomial = list[tuple[CycloNum, tuple[Generator, ...]]]


def defining_relations(p: ParameterSet, kind) -> list[tuple[str, WordPolynomial]]:
    """Defining relations as free-algebra polynomials (sum c * word == 0)."""
    kind = AlgebraKind.parse(kind)
    malt = kind is AlgebraKind.MALTSINIOTIS
    one = CycloNum.one(p.L)
    out = []
    for i in range(1, p.n + 1):
        X, Y = ("x", i), ("y", i)
        for j in range(i + 1, p.n + 1):
            Xj, Yj = ("x", j), ("y", j)
            lam = p.lam(i, j)
            c = p.q(i) * lam if malt else lam
            out.append((f"y{i}y{j}=lam{i}{j}*y{j}y{i}", [(one, (Y, Yj)), (-lam, (Yj, Y))]))
            out.append((f"x{i}x{j}=c{i}{j}*x{j}x{i}", [(one, (X, Xj)), (-c, (Xj, X))]))
            out.append((f"x{i}y{j}=lam{i}{j}^-1*y{j}x{i}", [(one, (X, Yj)), (-lam.inverse(), (Yj, X))]))
            out.append((f"y{i}x{j}=c{i}{j}^-1*x{j}y{i}", [(one, (Y, Xj)), (-c.inverse(), (Xj, Y))]))
    for i in range(1, p.n + 1):
        X, Y = ("x", i), ("y", i)
        poly = [(one, (X, Y)), (-p.q(i), (Y, X)), (-one, ())]
        if malt:
            poly += [(-(p.q(k) - 1), (("y", k), ("x", k))) for k in range(1, i)]
        rhs = f"z{i - 1}" if malt else "1"
        out.append((f"x{i}y{i}-q{i}*y{i}x{i}={rhs}", poly))
    return out


def _accumulate(terms: dict, key, c) -> None:
    if key in terms:
        terms[key] = terms[key] + c
    else:
        terms[key] = c


def _word_of(exps: Exps) -> list[Generator]:
    word = []
    for k in range(len(exps) // 2):
        word += [("y", k + 1)] * exps[2 * k] + [("x", k + 1)] * exps[2 * k + 1]
    return word


def word_of(exps: Sequence[int]) -> list[Generator]:
    """Generator word spelling the PBW monomial ``exps``."""
    return _word_of(tuple(exps))


# -- functional surface ----------------------------------------------------------

def multiply(e1: AlgebraElement, e2: AlgebraElement, p: ParameterSet | None = None,
             kind: AlgebraKind | str | None = None) -> AlgebraElement:
    alg = e1.algebra
    if (p is not None and p != alg.params) or (kind is not None and AlgebraKind.parse(kind) != alg.kind):
        raise ValueError("elements were built for different parameters")
    return alg.multiply(e1, e2)


def z_element(p: ParameterSet, kind, i: int) -> AlgebraElement:
    return WeylAlgebra(p, kind).z(i)


def is_central(e: AlgebraElement) -> bool:
    return e.algebra.is_central(e)


def verify_relations(p: ParameterSet, kind) -> list[dict]:
    return WeylAlgebra(p, kind).verify_relations()


def verify_z_power_identity(p: ParameterSet, kind, i: int) -> bool:
    return WeylAlgebra(p, kind).verify_z_power_identity(i)
