"""Exact arithmetic in the cyclotomic field Q(zeta_L).

Elements are stored in the power basis 1, z, ..., z^(phi(L)-1) of
Q[x]/Phi_L(x), so two elements of the same order are equal exactly when
their coefficient tuples are equal.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence


class OrderMismatchError(ValueError):
    """Raised when combining elements of different cyclotomic orders."""


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divmod_int(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # den is monic with integer coefficients, low degree first
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [0], num
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j in range(dn + 1):
                num[k - dn + j] -= c * den[j]
    rem = num[:dn] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_L, lowest degree first."""
    if L < 1:
        raise ValueError(f"cyclotomic order must be positive, got {L}")
    poly = [-1] + [0] * (L - 1) + [1]
    for d in _divisors(L)[:-1]:
        poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
        if any(rem):
            raise ArithmeticError(f"Phi_{d} does not divide x^{L}-1")
    return tuple(poly)


def totient(L: int) -> int:
    return len(cyclotomic_polynomial(L)) - 1


@lru_cache(maxsize=None)
def _power_table(L: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Sparse reductions of x^k mod Phi_L for k = 0..L-1."""
    phi = cyclotomic_polynomial(L)
    deg = len(phi) - 1
    table = []
    vec = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(L):
        table.append(tuple((i, c) for i, c in enumerate(vec) if c))
        # multiply by x and reduce the overflow coefficient
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for i in range(deg):
                vec[i] -= top * phi[i]
    return tuple(table)


def _reduce(L: int, coeffs: Iterable) -> tuple[Fraction, ...]:
    deg = totient(L)
    table = _power_table(L)
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if c:
            for i, t in table[k % L]:
                out[i] += t * c
    return tuple(out)


class CycloNum:
    """An element of Q(zeta_L), immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != totient(order):
            coeffs = list(_reduce(order, coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def _make(cls, order: int, coeffs: tuple) -> "CycloNum":
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, order: int, value) -> "CycloNum":
        deg = totient(order)
        return cls._make(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zero(cls, order: int) -> "CycloNum":
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycloNum":
        return cls.rational(order, 1)

    @classmethod
    def root(cls, order: int, k: int = 1) -> "CycloNum":
        """zeta_order ** k."""
        deg = totient(order)
        out = [Fraction(0)] * deg
        for i, t in _power_table(order)[k % order]:
            out[i] = Fraction(t)
        return cls._make(order, tuple(out))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def root_exponent(self) -> int | None:
        """Return k in [0, L) with self == zeta_L**k, or None."""
        for k in range(self.order):
            if self == CycloNum.root(self.order, k):
                return k
        return None

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"orders differ: {self.order} vs {other.order}; embed first")
            return other
        if isinstance(other, (int, Rational)):
            return CycloNum.rational(self.order, other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._make(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._make(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._make(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not any(a[1:]):
            c = a[0]
            return CycloNum._make(self.order, tuple(c * x for x in b))
        if not any(b[1:]):
            c = b[0]
            return CycloNum._make(self.order, tuple(c * x for x in a))
        L = self.order
        table = _power_table(L)
        out = [Fraction(0)] * len(a)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                p = x * y
                for k, t in table[(i + j) % L]:
                    out[k] += t * p
        return CycloNum._make(L, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycloNum.rational(self.order, 1 / self.coeffs[0])
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        u = _poly_inverse_mod(list(self.coeffs), modulus)
        return CycloNum(self.order, u)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = CycloNum.one(self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CycloNum({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _poly_trim(p: list) -> list:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = _poly_trim(list(num))
    den = _poly_trim(list(den))
    if len(num) < len(den):
        return [Fraction(0)], num
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    rem = _poly_trim(num[: len(den) - 1] or [Fraction(0)])
    return quot, rem


def _poly_sub_mul(a: list, q: list, b: list) -> list:
    """a - q*b."""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _poly_trim(out)


def _poly_inverse_mod(a: list, m: list) -> list:
    # invariant: s_i * a == r_i (mod m)
    r0, r1 = m, _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or r1[0]:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if len(r0) != 1:
        raise ArithmeticError("element is not invertible modulo Phi_L")
    c = r0[0]
    return [x / c for x in s0]


def make_root(L: int, k: int) -> CycloNum:
    """zeta_L ** (k mod L) in canonical form."""
    return CycloNum.root(L, k)


def embed(a: CycloNum, target: int) -> CycloNum:
    """Image of ``a`` under Q(zeta_L) -> Q(zeta_target), zeta_L = zeta_target**(target/L)."""
    if target % a.order:
        raise ValueError(f"order {a.order} does not divide target order {target}")
    if target == a.order:
        return a
    step = target // a.order
    coeffs = [Fraction(0)] * (step * (len(a.coeffs) - 1) + 1)
    for k, c in enumerate(a.coeffs):
        coeffs[k * step] = c
    return CycloNum(target, coeffs)


def multiplicative_order(a: CycloNum) -> int | None:
    """Order of ``a`` as a root of unity, or None if it is not one.

    Roots of unity in Q(zeta_L) have order dividing lcm(2, L).
    """
    if a.is_zero():
        return None
    x = a
    for k in range(1, 2 * a.order + 1):
        if x == 1:
            return k
        x = x * a
    return None


def _integer_root(n: int, k: int) -> int | None:
    if n < 0:
        if k % 2 == 0:
            return None
        r = _integer_root(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid ** k
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_root(x: Fraction, k: int) -> Fraction | None:
    """Exact k-th root of a rational number, if one exists in Q."""
    x = Fraction(x)
    num = _integer_root(x.numerator, k)
    den = _integer_root(x.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def find_root(a: CycloNum, k: int) -> CycloNum | None:
    """Search for mu = r * zeta_L**j with mu**k == a and rational r.

    This is not a general radical algorithm: roots outside that shape are
    not found even when they lie in the field.
    """
    L = a.order
    if a.is_zero():
        return CycloNum.zero(L)
    for j in range(L):
        rest = a * CycloNum.root(L, -j * k)
        if rest.is_rational():
            r = rational_root(rest.to_fraction(), k)
            if r is not None:
                mu = CycloNum.root(L, j) * r
                if mu ** k == a:
                    return mu
    return None


# -- serialization -------------------------------------------------------------

def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def to_json(a: CycloNum) -> dict:
    return {"order": a.order, "coeffs": [_frac_str(c) for c in a.coeffs]}


def from_json(obj, order: int | None = None) -> CycloNum:
    """Parse a CycloNum payload, optionally embedding into ``order``.

    Bare numbers and rational strings are accepted as rational elements.
    """
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        if order is None:
            raise ValueError("bare rational needs a target order")
        return CycloNum.rational(order, Fraction(obj))
    if not isinstance(obj, dict) or "order" not in obj:
        raise ValueError(f"malformed cyclotomic number: {obj!r}")
    L = obj["order"]
    if not isinstance(L, int) or L < 1:
        raise ValueError(f"bad cyclotomic order: {L!r}")
    if "coeffs" in obj:
        coeffs = [Fraction(c) for c in obj["coeffs"]]
        if len(coeffs) != totient(L):
            raise ValueError(f"order {L} needs exactly {totient(L)} coefficients, got {len(coeffs)}")
        value = CycloNum(L, coeffs)
    elif "zeta_pow" in obj:
        scale = Fraction(obj.get("scale", "1/1"))
        value = CycloNum.root(L, int(obj["zeta_pow"])) * scale
    else:
        raise ValueError(f"cyclotomic number needs 'coeffs' or 'zeta_pow': {obj!r}")
    if order is not None:
        value = embed(value, order)
    return value
