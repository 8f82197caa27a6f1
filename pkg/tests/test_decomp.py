"""Tests for decompositions of the invariant map."""

from fractions import Fraction

import pytest

from icosacurves.decomp import (
    check_inner,
    conjugated_edge_form,
    conjugated_edge_identity,
    conjugated_face_form,
    conjugated_vertex_form,
    conjugation_to_even,
    cyclic_symmetric_inner,
    inner_cubic_decomposition,
    left_factor,
    transported_invariant_map,
    transported_matches_factored,
    verify_conjugated_identities,
)
from icosacurves.errors import ConstantInner, DegreeMismatch
from icosacurves.exactfield import EPSILON3, QuadraticElement
from icosacurves.icosa import MoebiusMap, invariant_map
from icosacurves.polyring import Poly, RationalFunction, compose_rational

F = Fraction
I = QuadraticElement(0, 1, -1)


def test_conjugated_form_degrees():
    assert conjugated_face_form().degree == 20
    assert conjugated_vertex_form().degree == 12
    assert conjugated_edge_form().degree == 29


def test_conjugated_forms_parity():
    # face and vertex forms are even; the edge form is x times an even one
    for form in (conjugated_face_form(), conjugated_vertex_form()):
        assert all(not form.coeff(k) for k in range(1, form.degree + 1, 2))
    t = conjugated_edge_form()
    assert not t.coeff(0)
    assert all(not t.coeff(k) for k in range(0, t.degree + 1, 2))


def test_transported_map_samples():
    # the transported map must equal the plain map after the substitution
    t = transported_invariant_map()
    phi = invariant_map()
    sigma = conjugation_to_even()
    for x0 in (F(2), F(1, 3), F(-5)):
        pre = sigma.inverse().apply(x0)
        expect = phi(pre)
        got = t(QuadraticElement(x0, 0, -1))
        assert got == expect


def test_transported_matches_factored():
    assert transported_matches_factored()


def test_conjugated_edge_identity_true_scalar():
    assert conjugated_edge_identity()
    verify_conjugated_identities()


def test_conjugated_edge_identity_rejects_conjugate_scalar():
    # swapping the Gaussian parts of the scalar breaks the identity
    assert not conjugated_edge_identity(QuadraticElement(512, 256, -1))
    assert not conjugated_edge_identity(QuadraticElement(256, -512, -1))


def test_leading_coefficient_cancellation():
    lhs = conjugated_face_form() ** 3 * F(64) \
        - conjugated_vertex_form() ** 5 * F(1728)
    assert lhs.degree == 58
    assert 64 * 9375 ** 3 == 1728 * 125 ** 5


def test_left_factor_power_of_five():
    phi = invariant_map()
    g = left_factor(phi, RationalFunction(Poly([0, 0, 0, 0, 0, F(1)])))
    assert g is not None
    assert g.mapped_degree() == 12
    assert compose_rational(g, RationalFunction(Poly([0, 0, 0, 0, 0, F(1)]))) \
        == phi


def test_left_factor_even_transported():
    t = transported_invariant_map()
    g = left_factor(t, RationalFunction(Poly([0, 0, F(1)])))
    assert g is not None
    assert g.mapped_degree() == 30


def test_left_factor_rejects_bad_inner():
    phi = invariant_map()
    with pytest.raises(ConstantInner):
        left_factor(phi, RationalFunction(Poly([F(3)])))
    with pytest.raises(DegreeMismatch):
        left_factor(phi, RationalFunction(Poly([0, 0, 0, 0, 0, 0, 0, F(1)])))
    # the plain map is not a function of x^2
    assert left_factor(phi, RationalFunction(Poly([0, 0, F(1)]))) is None


def test_left_factor_general_inner():
    # f = g(h) with a non-monomial inner map; the solver must recover g
    h = RationalFunction(Poly([F(1), 0, 1]), Poly([F(0), 1]))   # (x^2+1)/x
    g = RationalFunction(Poly([F(2), 1]), Poly([F(-1), 1]))
    f = compose_rational(g, h)
    got = left_factor(f, h)
    assert got is not None
    assert compose_rational(got, h) == f


def test_cyclic_symmetric_inner_scaling():
    gamma = MoebiusMap(EPSILON3, 0, 0, 1)
    inner = cyclic_symmetric_inner(gamma, 3)
    # sums and pair sums vanish for a pure scaling, leaving the product x^3
    assert inner.mapped_degree() == 3
    assert inner == RationalFunction(Poly([0, 0, 0, 1])) \
        or inner == RationalFunction(Poly([0, 0, 0, -1]))


def test_inner_cubic_decomposition():
    outer, inner = inner_cubic_decomposition()
    assert inner.mapped_degree() == 3
    assert outer.mapped_degree() == 20
    assert compose_rational(outer, inner) == invariant_map()


def test_check_inner_reports():
    r5 = check_inner("x5")
    assert r5["found"] and r5["outer_degree"] == 12
    r2 = check_inner("x2")
    assert r2["found"] and r2["outer_degree"] == 30
    with pytest.raises(ValueError):
        check_inner("x7")
