import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from iwcontract.contraction import (adjoint_N, adjoint_torus, adjoint_unipotent, coadjoint_apply,
                                    coadjoint_apply_dual, contraction_for, exp_ad, family_bracket,
                                    family_structure, group_coadjoint_N, index_estimate, kirillov_matrix,
                                    kirillov_rank, moment_map_phi, pairing, q_bracket, u_conjugate_to_cartan)
from iwcontract.errors import NotRegular, ZeroParameter
from iwcontract.liecore import GVector, bracket_g, build_algebra, label_kind

SPECS = ["A1", "A2", "A3", "B2", "C2", "C3", "D3", "D4"]
coord = st.integers(-50, 50)


def vec_strategy(name):
    basis, _ = build_algebra(name)
    return st.lists(coord, min_size=basis.dim, max_size=basis.dim).map(basis.from_vec)


def part(x, kinds):
    return GVector({k: v for k, v in x.items() if label_kind(k) in kinds})


@pytest.fixture(scope="module")
def a1():
    return build_algebra("A1")[0]


def test_a1_q_bracket(a1):
    t, e, f = (a1.element(lab) for lab in ("t1", "e+1", "e-1"))
    assert q_bracket(t, f, a1) == -2 * f
    assert q_bracket(e, f, a1) == GVector()
    assert q_bracket(t, e, a1) == bracket_g(t, e, a1)


def test_a1_family_bracket(a1):
    e, f, t = (a1.element(lab) for lab in ("e+1", "e-1", "t1"))
    for s in (1, 5, Fraction(-2, 3)):
        assert family_bracket(e, f, s, a1) == s * t
    with pytest.raises(ZeroParameter):
        family_bracket(e, f, 0, a1)


def test_a1_coadjoint(a1):
    e, f, t = (a1.element(lab) for lab in ("e+1", "e-1", "t1"))
    assert moment_map_phi(e, f, a1) == t
    assert coadjoint_apply(GVector(), e, a1) == GVector()
    # the sign of the moment-map term follows from adjointness
    assert coadjoint_apply(f, e, a1) == -t
    assert coadjoint_apply_dual(f, e, a1) == -t
    assert group_coadjoint_N(GVector(), e + t, a1) == e + t
    assert group_coadjoint_N(f, e, a1) == e + t


def test_a1_kirillov(a1):
    Q = contraction_for(a1)
    X = [7, 3, -4]
    assert Q.kirillov_from_values(X) == [[0, 2 * 3, -2 * -4], [-2 * 3, 0, 0], [2 * -4, 0, 0]]
    assert kirillov_rank(GVector(), a1) == 0
    assert index_estimate("A1") == 1
    assert index_estimate("A2") == 2


def test_a1_u_conjugation(a1):
    t, e = a1.element("t1"), a1.element("e+1")
    assert u_conjugate_to_cartan(t, a1) == GVector()
    for c in (4, -3, Fraction(1, 5)):
        uprime = u_conjugate_to_cartan(t + c * e, a1)
        assert uprime == Fraction(-c, 2) * e
        assert exp_ad(uprime, t, a1) == t + c * e
    with pytest.raises(NotRegular):
        u_conjugate_to_cartan(e, a1)


@pytest.mark.parametrize("name", SPECS)
@given(data=st.data())
def test_b_is_a_subalgebra_and_uminus_abelian(name, data):
    basis, _ = build_algebra(name)
    x, y = data.draw(vec_strategy(name)), data.draw(vec_strategy(name))
    b, b2 = part(x, {"cartan", "pos"}), part(y, {"cartan", "pos"})
    assert q_bracket(b, b2, basis) == bracket_g(b, b2, basis)
    n, n2 = part(x, {"neg"}), part(y, {"neg"})
    assert q_bracket(n, n2, basis) == GVector()
    assert q_bracket(x, x, basis) == GVector()


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "D4"])
@given(data=st.data())
def test_family_bracket_limits(name, data):
    basis, _ = build_algebra(name)
    x, y = data.draw(vec_strategy(name)), data.draw(vec_strategy(name))
    assert family_bracket(x, y, 1, basis) == bracket_g(x, y, basis)
    b, b2 = part(x, {"cartan", "pos"}), part(y, {"cartan", "pos"})
    t = data.draw(st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool))
    assert family_bracket(b, b2, t, basis) == bracket_g(b, b2, basis)


@pytest.mark.parametrize("name", ["A2", "C2", "D3"])
def test_family_polynomial_limit_is_q(name):
    """Oracle: evaluate the family bracket at t and interpolate the value at t = 0 with sympy."""
    basis, _ = build_algebra(name)
    rng = random.Random(name)
    fam = family_structure(basis)
    assert max(p.degree() for p in fam.values()) <= 1
    s = sympy.Symbol("s")
    for _ in range(15):
        x = basis.from_vec([rng.randint(-9, 9) for _ in range(basis.dim)])
        y = basis.from_vec([rng.randint(-9, 9) for _ in range(basis.dim)])
        samples = [(tv, basis.vec(family_bracket(x, y, tv, basis))) for tv in (1, 2, 3)]
        for m in range(basis.dim):
            poly = sympy.interpolate([(tv, v[m]) for tv, v in samples], s)
            assert poly.subs(s, 0) == basis.vec(q_bracket(x, y, basis))[m]


@pytest.mark.parametrize("name", SPECS)
@given(data=st.data())
def test_coadjoint_routes_agree_and_are_adjoint(name, data):
    basis, _ = build_algebra(name)
    x, y, z = (data.draw(vec_strategy(name)) for _ in range(3))
    lhs = coadjoint_apply(x, y, basis)
    assert lhs == coadjoint_apply_dual(x, y, basis)
    assert pairing(q_bracket(x, z, basis), y, basis) + pairing(z, lhs, basis) == 0


@pytest.mark.parametrize("name", ["A2", "B2", "C2", "D4"])
@given(data=st.data())
def test_coadjoint_is_a_representation(name, data):
    basis, _ = build_algebra(name)
    x, z, y = (data.draw(vec_strategy(name)) for _ in range(3))
    act = lambda a, w: coadjoint_apply(a, w, basis)  # noqa: E731
    assert act(q_bracket(x, z, basis), y) == act(x, act(z, y)) - act(z, act(x, y))


@pytest.mark.parametrize("name", ["A2", "C2", "B3"])
@given(data=st.data())
def test_adjoint_group_elements_are_automorphisms(name, data):
    basis, _ = build_algebra(name)
    x, y, g = (data.draw(vec_strategy(name)) for _ in range(3))
    u, eta = part(g, {"pos"}), part(g, {"neg"})
    s = data.draw(st.lists(st.integers(1, 5), min_size=basis.spec.rank, max_size=basis.spec.rank))
    for act in (lambda w: adjoint_unipotent(u, w, basis), lambda w: adjoint_N(eta, w, basis),
                lambda w: adjoint_torus(s, w, basis)):
        assert act(q_bracket(x, y, basis)) == q_bracket(act(x), act(y), basis)
        cart = lambda w: part(w, {"cartan"})  # noqa: E731
        assert cart(act(x)) == cart(x)


@pytest.mark.parametrize("name", ["A2", "B2", "D4"])
@given(data=st.data())
def test_group_N_matches_infinitesimal(name, data):
    basis, _ = build_algebra(name)
    y, g = data.draw(vec_strategy(name)), data.draw(vec_strategy(name))
    eta = part(g, {"neg"})
    # exp(-eta) y = y - eta * y, the series ending after one term
    assert group_coadjoint_N(eta, y, basis) == y - coadjoint_apply(eta, y, basis)


@pytest.mark.parametrize("name", SPECS)
def test_index_equals_rank(name):
    basis, _ = build_algebra(name)
    assert index_estimate(name, samples=3, seed=11) == basis.spec.rank


def test_kirillov_rank_oracle():
    basis, _ = build_algebra("C2")
    rng = random.Random(3)
    y = basis.from_vec([rng.randint(-99, 99) for _ in range(basis.dim)])
    assert kirillov_rank(y, basis) == sympy.Matrix(kirillov_matrix(y, basis)).rank()


@pytest.mark.parametrize("name", ["A3", "B2", "C3", "D4"])
def test_u_conjugation_random(name):
    basis, _ = build_algebra(name)
    rng = random.Random(name)
    for _ in range(5):
        t = GVector({lab: rng.randint(1, 50) * (i + 1) ** 3 for i, lab in enumerate(basis.cartan_labels)})
        u = GVector({lab: rng.randint(-50, 50) for lab in basis.pos_labels})
        tv = [t[lab] for lab in basis.cartan_labels]
        if any(basis.root_value(lab, tv) == 0 for lab in basis.pos_labels):
            continue
        uprime = u_conjugate_to_cartan(t + u, basis)
        assert exp_ad(uprime, t, basis) == t + u
