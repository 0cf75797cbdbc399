"""Center generators, central characters and the Azumaya locus."""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import AlgebraElement, WeylAlgebra
from .cyclotomic import CycloNum, from_json as cyclo_from_json, to_json as cyclo_to_json
from .modules import CenterMismatchError, Representation, extract_eigendata, z_matrix
from .parameters import AlgebraKind, ParameterSet


@dataclass(frozen=True)
class CentralPoint:
    alpha: tuple[CycloNum, ...]
    beta: tuple[CycloNum, ...]

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")

    def to_json(self) -> dict:
        return {"alpha": [cyclo_to_json(a) for a in self.alpha],
                "beta": [cyclo_to_json(b) for b in self.beta]}

    @classmethod
    def from_json(cls, obj, p: ParameterSet) -> "CentralPoint":
        try:
            alpha = tuple(cyclo_from_json(a, p.L) for a in obj["alpha"])
            beta = tuple(cyclo_from_json(b, p.L) for b in obj["beta"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed central point: {exc}") from None
        if len(alpha) != p.n or len(beta) != p.n:
            raise ValueError(f"central point needs n={p.n} coordinates")
        return cls(alpha, beta)


def center_generators(p: ParameterSet, kind=AlgebraKind.MALTSINIOTIS) -> list[tuple[str, AlgebraElement]]:
    """x_i^{l_i}, y_i^{l_i} for every i; raises if one fails to be central."""
    A = WeylAlgebra(p, kind)
    out = []
    for i in range(1, p.n + 1):
        li = p.l[i - 1]
        out.append((f"x{i}^{li}", A.x(i, li)))
        out.append((f"y{i}^{li}", A.y(i, li)))
    for name, e in out:
        if not A.is_central(e):
            raise ArithmeticError(f"{name} is not central")
    return out


def centrality_witnesses(p: ParameterSet, kind=AlgebraKind.MALTSINIOTIS) -> list[dict]:
    """For each center generator c and algebra generator g, c*g - g*c."""
    A = WeylAlgebra(p, kind)
    report = []
    for name, c in center_generators(p, kind):
        for gname, g in A.generators():
            diff = c * g - g * c
            report.append({"element": name, "generator": gname,
                           "commutator": str(diff), "pass": diff.is_zero()})
    return report


def character_constant(p: ParameterSet, i: int) -> CycloNum:
    """q_i^{l(l-1)/2} (q_i - 1)^l, the coefficient of beta_i alpha_i."""
    li = p.l[i - 1]
    q = p.q(i)
    return q ** (li * (li - 1) // 2) * (q - 1) ** li


def central_character(p: ParameterSet, pt: CentralPoint, kind=AlgebraKind.MALTSINIOTIS) -> list[CycloNum]:
    """chi(z_i^{l_i}) for i = 1..n.

    Maltsiniotis: chi_i = chi_{i-1}^{l_i / l_{i-1}} + c_i beta_i alpha_i with
    chi_0 = 1; alternative: chi_i = 1 + c_i beta_i alpha_i.
    """
    kind = AlgebraKind.parse(kind)
    if len(pt.alpha) != p.n:
        raise ValueError(f"central point needs n={p.n} coordinates")
    chi = []
    prev, prev_l = CycloNum.one(p.L), 1
    for i in range(1, p.n + 1):
        li = p.l[i - 1]
        base = prev ** (li // prev_l) if kind is AlgebraKind.MALTSINIOTIS else CycloNum.one(p.L)
        value = base + character_constant(p, i) * pt.beta[i - 1] * pt.alpha[i - 1]
        chi.append(value)
        prev, prev_l = value, li
    return chi


def is_azumaya_point(p: ParameterSet, pt: CentralPoint, kind=AlgebraKind.MALTSINIOTIS) -> bool:
    return all(not c.is_zero() for c in central_character(p, pt, kind))


def inequations(p: ParameterSet, kind=AlgebraKind.MALTSINIOTIS) -> list[str]:
    """The conditions chi_i != 0 written out in a_i = alpha_i, b_i = beta_i."""
    kind = AlgebraKind.parse(kind)
    out = []
    prev, prev_l = "1", 1
    for i in range(1, p.n + 1):
        li = p.l[i - 1]
        term = f"({character_constant(p, i)})*b{i}*a{i}"
        if kind is AlgebraKind.MALTSINIOTIS and prev != "1":
            k = li // prev_l
            base = f"({prev})" + (f"^{k}" if k > 1 else "")
        else:
            base = "1"
        expr = f"{base} + {term}"
        out.append(f"{expr} != 0")
        prev, prev_l = expr, li
    return out


def azumaya_report(p: ParameterSet, pt: CentralPoint, kind=AlgebraKind.MALTSINIOTIS) -> dict:
    chi = central_character(p, pt, kind)
    return {"point": pt.to_json(), "chi": [cyclo_to_json(c) for c in chi],
            "azumaya": all(not c.is_zero() for c in chi),
            "inequations": inequations(p, kind)}


def character_consistency(p: ParameterSet, rep: Representation, kind=AlgebraKind.MALTSINIOTIS) -> bool:
    """rho(z_i)^{l_i} == chi(z_i^{l_i}) * identity for every i.

    A rep whose x_i^{l_i}, y_i^{l_i} are not scalar is reported inconsistent.
    """
    try:
        data = extract_eigendata(p, rep, kind)
    except CenterMismatchError:
        return False
    chi = central_character(p, CentralPoint(data.alpha, data.beta), kind)
    for i in range(1, p.n + 1):
        power = linalg.matpow(z_matrix(p, rep, i, kind), p.l[i - 1])
        if power != linalg.scalar_matrix(chi[i - 1], rep.dim):
            return False
    return True
