"""Tests for the icosahedral rotation group and its invariant map."""

import random
from fractions import Fraction

import pytest

from icosacurves.errors import (
    FixedPointsOutsideField,
    OrderTooLarge,
    ParabolicElement,
)
from icosacurves.exactfield import EPSILON5, I_UNIT, ZETA, cyclotomic_field
from icosacurves.icosa import (
    IcosahedralGroup,
    MoebiusMap,
    build_icosahedral_group,
    edge_form,
    face_form,
    first_nonconstant_symmetric_function,
    invariant_map,
    invariant_map_shifted,
    moebius_equivalence,
    normalize_element_to_scaling,
    orbit_invariance_check,
    syzygy_check,
    vertex_form,
)
from icosacurves.polyring import Poly, RationalFunction

F = Fraction


def test_group_order_and_profile():
    g = build_icosahedral_group()
    assert len(g) == 60
    assert g.order_profile() == {1: 1, 2: 15, 3: 20, 5: 24}


def test_generator_orders():
    g = build_icosahedral_group()
    ga, gb = g.generators
    assert ga.order() == 2
    assert gb.order() == 5


def test_group_closure_sampled():
    g = build_icosahedral_group()
    members = set(g.elements)
    rng = random.Random(7)
    for _ in range(40):
        x, y = rng.choice(g.elements), rng.choice(g.elements)
        assert x.compose(y) in members
    for x in rng.sample(g.elements, 10):
        assert x.inverse() in members


def test_moebius_map_basics():
    m = MoebiusMap(1, 2, 3, 4)
    assert m.apply(F(0)) == F(2, 4)
    inv = m.inverse()
    assert m.compose(inv).is_identity()
    with pytest.raises(ValueError):
        MoebiusMap(1, 2, 2, 4)
    with pytest.raises(OrderTooLarge):
        MoebiusMap(1, 1, 0, 1).order(bound=10)


def test_orbit_form_degrees_and_values():
    r, s, t = face_form(), vertex_form(), edge_form()
    assert (r.degree, s.degree, t.degree) == (20, 11, 30)
    assert r(F(1)) == 496
    assert s(F(1)) == 11
    assert t(F(1)) == -20008


def test_syzygy():
    syzygy_check()
    r, s, t = face_form(), vertex_form(), edge_form()
    assert t * t == r ** 3 + s ** 5 * 1728


def test_invariant_map_shape():
    phi = invariant_map()
    assert phi.mapped_degree() == 60
    assert phi.num.degree == 60
    assert phi.den.degree == 55
    shifted = invariant_map_shifted()
    assert shifted == phi - 1728


def test_invariant_map_orbit_invariance():
    g = build_icosahedral_group()
    assert orbit_invariance_check(invariant_map(), g)


def test_orbit_invariance_rejects_noninvariant():
    g = build_icosahedral_group()
    x = RationalFunction(Poly([0, F(1)]))
    assert not orbit_invariance_check(x, g)


def test_normalize_order_five_diagonal():
    g = build_icosahedral_group()
    gb = g.generators[1]
    sigma, mu, order = normalize_element_to_scaling(gb)
    assert order == 5
    assert mu ** 5 == 1 and mu != 1
    assert mu in (EPSILON5 ** k for k in range(1, 5))


def test_normalize_order_two_generator():
    g = build_icosahedral_group()
    ga = g.generators[0]
    sigma, mu, order = normalize_element_to_scaling(ga)
    assert order == 2
    assert mu == -1


def test_normalize_involutions_all_in_field():
    g = build_icosahedral_group()
    for el in g.elements:
        if el.order() == 2:
            _, mu, _ = normalize_element_to_scaling(el)
            assert mu == -1


def test_normalize_order_three_uniform_outcome():
    # all order-3 elements are conjugate over the ambient field, so either
    # every one diagonalizes in the field or none does
    g = build_icosahedral_group()
    outcomes = set()
    for el in g.elements:
        if el.order() != 3:
            continue
        try:
            _, mu, _ = normalize_element_to_scaling(el)
            assert mu * mu + mu + 1 == 0
            outcomes.add("in-field")
        except FixedPointsOutsideField:
            outcomes.add("outside")
    assert len(outcomes) == 1


def test_normalize_parabolic_and_outside():
    with pytest.raises(ParabolicElement):
        normalize_element_to_scaling(MoebiusMap(1, 1, 0, 1))
    # x -> zeta/x has order two and fixed points +-sqrt(zeta), not in the field
    with pytest.raises(FixedPointsOutsideField):
        normalize_element_to_scaling(MoebiusMap(0, ZETA, 1, 0))


def test_normalize_identity():
    sigma, mu, order = normalize_element_to_scaling(MoebiusMap(1, 0, 0, 1))
    assert (mu, order) == (1, 1)


def _cyclic_group(n=5):
    f5 = cyclotomic_field(5)
    maps = []
    for k in range(n):
        m = MoebiusMap(EPSILON5 ** k, 0, 0, 1)
        m.sub5 = (f5.zeta(k), f5.zero(), f5.zero(), f5.one())
        maps.append(m)
    return IcosahedralGroup(maps, (maps[1],))


def test_symmetric_function_cyclic_oracle():
    # for the cyclic rotation group the orbit product is T^5 - x^5, so the
    # first varying elementary symmetric function is the fifth, equal to x^5
    grp = _cyclic_group()
    k, s = first_nonconstant_symmetric_function(grp)
    assert k == 5
    assert s == RationalFunction(Poly([0, 0, 0, 0, 0, F(1)]))


def test_moebius_equivalence_synthetic():
    g = RationalFunction(Poly([F(1), 0, 0, 1]), Poly([F(2), 1]))
    target = MoebiusMap(2, 3, 1, -1)
    f = RationalFunction(g.num * 2 + g.den * 3, g.num - g.den)
    w = moebius_equivalence(f, g)
    assert w is not None
    assert w == target
    assert moebius_equivalence(
        RationalFunction(Poly([0, F(1)])),
        RationalFunction(Poly([0, 0, F(1)]))) is None


def test_trace_sq_over_det_conjugation_invariant():
    g = build_icosahedral_group()
    el = next(x for x in g.elements if x.order() == 5)
    conj = MoebiusMap(1, 2, 0, 1)
    moved = conj.compose(el).compose(conj.inverse())
    assert el.trace_sq_over_det() == moved.trace_sq_over_det()
