import random
from fractions import Fraction

import pytest

from qweyl import validate
from qweyl.cyclotomic import CycloNum
from qweyl.modules import (CenterMismatchError, ModuleSpec, ModuleSpecError, Representation,
                           RepresentationError, TorsionError, basis_index, construct_module,
                           direct_sum, extract_eigendata, from_alternative, intertwiner_space,
                           random_spec, reconstruct_spec, simplicity_check, span_dimension,
                           spec_from_json, to_alternative, torsion_profile, validate_spec,
                           verify_module, z_matrix)
from qweyl.parameters import AlgebraKind

from grids import MODULE_PARAMS, PATTERNS

ALT = AlgebraKind.ALTERNATIVE
P1 = validate({"n": 1, "l": [2], "q_exp": [1]})
E = frozenset()


def one(L=2):
    return CycloNum.one(L)


def spec(I=(), J=(), mu=None, gamma=None, L=2):
    return ModuleSpec(frozenset(I), frozenset(J), tuple(mu or (one(L),)), tuple(gamma or (one(L),)))


def entries(M):
    return [[str(v) for v in row] for row in M]


def passes(report):
    return all(r["pass"] for r in report)


def test_minus_one_module():
    rep = construct_module(P1, spec())
    assert entries(rep.X(1)) == [["0", "1"], ["1", "0"]]
    assert entries(rep.Y(1)) == [["0", "0"], ["1", "0"]]
    assert passes(verify_module(P1, rep))


def test_minus_one_module_with_I():
    rep = construct_module(P1, spec(I=(1,), gamma=(-one(),)))
    assert entries(rep.Y(1)) == [["0", "1"], ["1", "0"]]
    # (q^{-a} - 1) gamma_0 / (q - 1) at a = 0, 1
    assert entries(rep.X(1)) == [["0", "0"], ["1", "0"]]
    assert passes(verify_module(P1, rep))


def test_truncated_ladder():
    p = validate({"n": 1, "l": [3], "q_exp": [1]})
    q = p.q(1)
    rep = construct_module(p, ModuleSpec(frozenset({1}), frozenset({1}), (CycloNum.zero(3),),
                                         (q.inverse(),)))
    X, Y = rep.X(1), rep.Y(1)
    assert not any(X[0]) and not any(Y[2])
    assert passes(verify_module(p, rep))
    assert torsion_profile(p, rep) == ["invertible"]


@pytest.mark.parametrize("kwargs,clause", [
    ({"mu": (CycloNum.zero(2),)}, "mu"),
    ({"I": (1,), "J": (1,), "gamma": (-one(),)}, "mu"),
    ({"gamma": (CycloNum.zero(2),)}, "gamma_nonzero"),
    ({"I": (1,)}, "gamma_chain"),
    ({"I": (2,)}, "shape"),
    ({"mu": (one(), one())}, "shape"),
])
def test_module_data_validation(kwargs, clause):
    with pytest.raises(ModuleSpecError) as err:
        validate_spec(P1, spec(**kwargs))
    assert err.value.clause == clause


def test_module_data_json():
    p = validate(MODULE_PARAMS[(2, 4)])
    s = random_spec(p, {1}, {2}, random.Random(3))
    assert spec_from_json(s.to_json(), p) == s
    s2 = spec_from_json({"I": [], "J": [], "mu": [1, {"order": 4, "zeta_pow": 1}], "gamma": ["1/2", 3]}, p)
    assert s2.mu[1] == p.root(1) and s2.gamma[0] == Fraction(1, 2)
    with pytest.raises(ModuleSpecError):
        spec_from_json({"I": [], "mu": []}, p)


def test_zeroed_x_fails_verification():
    rep = construct_module(P1, spec())
    zero = CycloNum.zero(2)
    bad = Representation.make(rep.radix, [[[zero] * 2] * 2], [rep.Y(1)])
    report = verify_module(P1, bad)
    assert report[0]["relation"] == "x1y1-q1*y1x1=z0"
    assert not report[0]["pass"] and report[0]["witness_index"] == 0


def test_corrupted_entry_has_witness():
    p = validate(MODULE_PARAMS[(2, 2)])
    rep = construct_module(p, random_spec(p, E, E, random.Random(0)))
    X = rep.X(2)
    X[3][2] = X[3][2] + 1
    bad = Representation.make(rep.radix, [rep.X(1), X], [rep.Y(1), rep.Y(2)])
    failures = [r for r in verify_module(p, bad) if not r["pass"]]
    assert failures and all("witness_index" in r for r in failures)


def test_shape_mismatch():
    rep = construct_module(P1, spec())
    with pytest.raises(RepresentationError):
        verify_module(validate(MODULE_PARAMS[(2, 2)]), rep)
    with pytest.raises(RepresentationError):
        Representation.make((2,), [[[one()]]], [[[one()]]])


def test_z_diagonal_entries():
    g = CycloNum.rational(2, 3)
    rep = construct_module(P1, spec(gamma=(g,)))
    Z = z_matrix(P1, rep, 1)
    assert entries(Z) == [["3", "0"], ["0", "-3"]]


def test_simplicity_examples():
    rep = construct_module(P1, spec())
    assert span_dimension(rep) == 4 and simplicity_check(rep)
    assert span_dimension(direct_sum(rep, rep)) == 4
    assert not simplicity_check(direct_sum(rep, rep))


def test_all_patterns_small():
    p = validate(MODULE_PARAMS[(2, 2)])
    rng = random.Random(5)
    for I in PATTERNS:
        for J in PATTERNS:
            rep = construct_module(p, random_spec(p, I, J, rng))
            assert rep.dim == 4
            assert passes(verify_module(p, rep))
            assert simplicity_check(rep)
            assert torsion_profile(p, rep) == ["invertible", "invertible"]
            for i in (1, 2):
                Z = z_matrix(p, rep, i)
                assert all(not Z[r][c] for r in range(4) for c in range(4) if r != c)


def test_eigendata_examples():
    d = extract_eigendata(P1, construct_module(P1, spec()))
    assert d.alpha == (1,) and d.beta == (0,) and d.canonical
    assert sorted(str(v) for v in d.spectra[0]) == ["-1", "1"]
    d = extract_eigendata(P1, construct_module(P1, spec(I=(1,), gamma=(-one(),))))
    assert d.alpha == (0,) and d.beta == (1,)


def test_eigendata_root_of_unity_scaling():
    p = validate(MODULE_PARAMS[(3, 3)])
    s = random_spec(p, E, E, random.Random(1))
    w = p.root(1)
    scaled = ModuleSpec(s.I, s.J, (s.mu[0] * w, s.mu[1] * w * w), s.gamma)
    a, b = (extract_eigendata(p, construct_module(p, x)) for x in (s, scaled))
    assert (a.alpha, a.beta) == (b.alpha, b.beta)


def test_eigendata_rejects_non_central_action():
    rep = construct_module(P1, spec())
    X = rep.X(1)
    X[0][0] = one()
    with pytest.raises(CenterMismatchError):
        extract_eigendata(P1, Representation.make(rep.radix, [X], [rep.Y(1)]))


def test_eigendata_after_base_change():
    """A conjugated module has non-diagonal z; eigenvalues are recovered anyway."""
    p = validate({"n": 1, "l": [3], "q_exp": [1]})
    rep = construct_module(p, ModuleSpec(E, E, (CycloNum.one(3),), (CycloNum.rational(3, 2),)))
    from qweyl import linalg
    T = linalg.identity(3, 3)
    T[0][1] = CycloNum.one(3)
    Ti = linalg.inverse(T)
    conj = lambda M: linalg.matmul(linalg.matmul(Ti, M), T)
    rep2 = Representation.make(rep.radix, [conj(rep.X(1))], [conj(rep.Y(1))])
    d1, d2 = extract_eigendata(p, rep), extract_eigendata(p, rep2)
    assert not d2.canonical
    assert sorted(map(str, d1.spectra[0])) == sorted(map(str, d2.spectra[0]))
    assert intertwiner_space(rep, rep2).dimension == 1


def test_intertwiner_examples():
    rep = construct_module(P1, spec(gamma=(CycloNum.rational(2, 3),)))
    space = intertwiner_space(rep, rep)
    assert space.dimension == 1 and space.invertible
    B = space.basis[0]
    assert all(B[r][c] == (B[0][0] if r == c else 0) for r in range(2) for c in range(2))
    flipped = construct_module(P1, spec(mu=(-one(),), gamma=(CycloNum.rational(2, 3),)))
    assert intertwiner_space(rep, flipped).dimension == 1
    other = construct_module(P1, spec(gamma=(CycloNum.rational(2, 5),)))
    assert intertwiner_space(rep, other).dimension == 0
    with pytest.raises(RepresentationError):
        intertwiner_space(rep, direct_sum(rep, rep))


def test_same_orbit_gamma_gives_isomorphic_modules():
    p = validate({"n": 1, "l": [3], "q_exp": [1]})
    one3 = CycloNum.one(3)
    a = construct_module(p, ModuleSpec(E, E, (one3,), (one3,)))
    b = construct_module(p, ModuleSpec(E, E, (one3,), (p.root(1),)))
    c = construct_module(p, ModuleSpec(E, E, (one3,), (one3 * 2,)))
    assert intertwiner_space(a, b).dimension == 1
    assert intertwiner_space(a, c).dimension == 0


def test_classification_coherence():
    p = validate(MODULE_PARAMS[(2, 4)])
    rng = random.Random(7)
    for I in PATTERNS:
        for J in PATTERNS:
            s = random_spec(p, I, J, rng)
            rep = construct_module(p, s)
            s2 = reconstruct_spec(p, extract_eigendata(p, rep))
            assert s2 is not None
            assert s2.I == s.I and s2.J == s.I & s.J
            assert intertwiner_space(rep, construct_module(p, s2)).dimension == 1


def test_transport_single_generator_is_identity():
    rep = construct_module(P1, spec())
    assert to_alternative(P1, rep) == rep


def test_transport_two_generators():
    p = validate(MODULE_PARAMS[(2, 2)])
    rep = construct_module(p, random_spec(p, E, E, random.Random(2)))
    alt = to_alternative(p, rep)
    assert passes(verify_module(p, alt, ALT))
    assert simplicity_check(alt)
    assert torsion_profile(p, alt, ALT) == ["invertible", "invertible"]
    assert from_alternative(p, alt) == rep
    assert not passes(verify_module(p, rep, ALT))


def test_transport_three_generators_round_trip():
    p = validate({"n": 3, "l": [2, 2, 2], "q_exp": [1, 1, 1],
                  "lambda_exp_upper": [[1, 2, 1], [1, 3, 0], [2, 3, 1]]})
    rep = construct_module(p, random_spec(p, {2}, E, random.Random(4)))
    assert passes(verify_module(p, rep))
    alt = to_alternative(p, rep)
    assert passes(verify_module(p, alt, ALT))
    assert from_alternative(p, alt) == rep


def test_transport_rejects_torsion():
    p = validate(MODULE_PARAMS[(2, 2)])
    rep = construct_module(p, random_spec(p, E, E, random.Random(2)))
    from qweyl import linalg
    # z_1 = 1 + (q_1 - 1) y_1 x_1 = 1 - 2 * (1/2) = 0
    X1 = linalg.identity(4, 2)
    Y1 = linalg.scalar_matrix(CycloNum.rational(2, Fraction(1, 2)), 4)
    bad = Representation.make(rep.radix, [X1, rep.X(2)], [Y1, rep.Y(2)])
    with pytest.raises(TorsionError, match="torsion module cannot be transported"):
        to_alternative(p, bad)


def test_representation_json_roundtrip():
    p = validate(MODULE_PARAMS[(3, 3)])
    rep = construct_module(p, random_spec(p, {1}, E, random.Random(9)))
    assert Representation.from_json(rep.to_json()) == rep


def test_basis_index_big_endian():
    assert basis_index((1, 0), (2, 3)) == 3
    assert basis_index((1, 2), (2, 3)) == 5


def test_z_eigenvalue_formula():
    """z_r acts on e(a) by prod_{s<=r} q_s^{+-a_s} * gamma_r, minus sign for s in I."""
    from qweyl.modules import basis_states
    rng = random.Random(12)
    for key in ((2, 4), (3, 3)):
        p = validate(MODULE_PARAMS[key])
        for I in PATTERNS:
            for J in PATTERNS:
                s = random_spec(p, I, J, rng)
                rep = construct_module(p, s)
                for r in (1, 2):
                    Z = z_matrix(p, rep, r)
                    for a in basis_states(p.l):
                        value = s.gamma[r - 1]
                        for t in range(1, r + 1):
                            value = value * p.q(t) ** (-a[t - 1] if t in I else a[t - 1])
                        k = basis_index(a, p.l)
                        assert Z[k][k] == value
