import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from icosacurves.errors import (
    NotInLocus,
    NotOnLocus,
    SingularPoint,
)
from icosacurves.exactfield import QuadraticElement
from icosacurves.families import curve_equation, even_model
from icosacurves.fixtures import load_fixtures
from icosacurves.invariants import (
    DihedralInvariants,
    _demote,
    check_group_relation,
    dihedral_invariants,
    invariant_set,
)
from icosacurves.loci import (
    _quadratic_root,
    build_locus,
    evaluate_plane_model,
    family_invariant_functions,
    fiber_model,
    field_of_moduli_at,
    rational_model,
    singular_fibers,
    solve_lambda,
)
from icosacurves.polyring import Poly

FIBER_KEYS = {"collision": "collision", "zero_locus": "zero",
              "infinity_locus": "infinity"}


@pytest.fixture(scope="module")
def locus1():
    return build_locus(1)


@pytest.fixture(scope="module")
def fibers1(locus1):
    return singular_fibers(locus1)


def test_case1_matches_printed_equation(locus1):
    ref = {k: int(v) for k, v in load_fixtures().reference_locus_case1.items()}
    assert locus1.F == ref
    assert locus1.F[(0, 4)] == 20104543529222176607891970551365425625
    assert locus1.kappa == (F(1), F(1), F(1))


def test_case1_degree_box(locus1):
    assert max(j for j, k in locus1.F) == 6
    assert max(k for j, k in locus1.F) == 4


def test_identity_holds_symbolically(locus1):
    # clear denominators: sum c_jk n1^j d1^(6-j) n2^k d2^(4-k) must vanish
    n1, d1 = locus1.i1_of_lambda.num, locus1.i1_of_lambda.den
    n2, d2 = locus1.i2_of_lambda.num, locus1.i2_of_lambda.den
    acc = Poly()
    for (j, k), c in locus1.F.items():
        acc = acc + Poly([c]) * n1 ** j * d1 ** (6 - j) * n2 ** k * d2 ** (4 - k)
    assert not acc


def test_identity_at_sample_values(locus1):
    for lam in (F(5), F(7), F(-3, 2), F(22, 7)):
        v = evaluate_plane_model(locus1.F, locus1.i1_of_lambda(lam),
                                 locus1.i2_of_lambda(lam))
        assert v == 0


def test_origin_is_a_singular_point(locus1):
    # value and both first partials vanish at (0, 0)
    assert (0, 0) not in locus1.F
    assert (1, 0) not in locus1.F
    assert (0, 1) not in locus1.F


def test_invalid_case_number_rejected():
    with pytest.raises(ValueError):
        build_locus(9)


@pytest.mark.parametrize("case", range(1, 9))
def test_singular_fibers_match_reference_tables(case):
    fx = load_fixtures()
    L = build_locus(case)
    fibers = singular_fibers(L)
    assert [fb.kind for fb in fibers] == ["collision", "zero_locus",
                                          "infinity_locus"]
    for fb in fibers:
        ref = fx.singular_quadratics[case][FIBER_KEYS[fb.kind]]
        assert [int(c) for c in fb.q.coeffs] == [ref.coeff(i)
                                                 for i in range(3)]
        assert fb.d_table == fx.moduli_fields[case][FIBER_KEYS[fb.kind]]
        # table datum is the squarefree part of the discriminant
        prod = fb.D * fb.d_table
        assert prod > 0
        assert math.isqrt(prod) ** 2 == prod


def test_collision_roots_share_both_invariants(locus1, fibers1):
    coll = fibers1[0]
    root = _quadratic_root(coll.q, coll.d_table)
    conj = QuadraticElement(root.a, -root.b, root.D)
    assert root != conj
    for rf in (locus1.i1_of_lambda, locus1.i2_of_lambda):
        assert rf(root) == rf(conj)


def test_field_of_moduli_case1(locus1, fibers1):
    expected = {"collision": 6594752841114090745134757,
                "zero_locus": 127067509222,
                "infinity_locus": -27468005002203037701}
    for fb in fibers1:
        assert field_of_moduli_at(fb, locus1) == expected[fb.kind]


def test_solve_lambda_round_trip(locus1):
    for lam in (F(7), F(-3, 2)):
        i1 = locus1.i1_of_lambda(lam)
        i2 = locus1.i2_of_lambda(lam)
        assert solve_lambda(i1, i2, locus1) == lam


@settings(max_examples=25, deadline=None)
@given(lam=st.fractions(min_value=-200, max_value=200, max_denominator=11))
def test_solve_lambda_round_trips_generically(lam):
    L = build_locus(1)
    assert solve_lambda(L.i1_of_lambda(lam), L.i2_of_lambda(lam), L) == lam


def test_solve_lambda_rejects_points_off_the_curve(locus1):
    assert evaluate_plane_model(locus1.F, F(1), F(1)) != 0
    with pytest.raises(NotOnLocus):
        solve_lambda(F(1), F(1), locus1)


def test_solve_lambda_flags_singular_points(locus1, fibers1):
    root = _quadratic_root(fibers1[0].q, fibers1[0].d_table)
    i1 = _demote(locus1.i1_of_lambda(root))
    i2 = _demote(locus1.i2_of_lambda(root))
    assert isinstance(i1, F) and isinstance(i2, F)
    with pytest.raises(SingularPoint):
        solve_lambda(i1, i2, locus1)


def _u_of_model(curve):
    return dihedral_invariants(even_model(curve))


@pytest.mark.parametrize("case,genus,lam", [(1, 29, F(7)), (1, 29, F(-5, 3)),
                                            (5, 44, F(5)), (5, 44, F(13, 4))])
def test_rational_model_round_trip(case, genus, lam):
    u = _u_of_model(curve_equation(genus, [lam], "x2"))
    group = check_group_relation(u)
    m = rational_model(u)
    assert m.genus == genus
    assert m.case.case_no == case
    assert _u_of_model(m).values == u.values
    assert check_group_relation(_u_of_model(m)) == group
    # the model is defined over the field generated by the u_i
    assert all(isinstance(c, (int, F)) for c in m.f.coeffs)


def test_rational_model_matches_absolute_invariants():
    lam = F(7)
    m = rational_model(_u_of_model(curve_equation(29, [lam], "x2")))
    s_orig = invariant_set(curve_equation(29, [lam], "x5").f, 29)
    s_model = invariant_set(m.f, 29)
    assert s_orig.absolute() == s_model.absolute()


def test_rational_model_rejects_generic_invariants():
    u = DihedralInvariants(d=30, values=tuple(F(k + 3) for k in range(29)))
    assert check_group_relation(u) == "neither"
    with pytest.raises(NotInLocus):
        rational_model(u)


def test_family_invariant_functions_interpolate_curves(locus1):
    funcs = family_invariant_functions(1)
    assert funcs.d == 30
    for lam in (F(7), F(-2)):
        u = _u_of_model(curve_equation(29, [lam], "x2"))
        assert tuple(f(lam) for f in funcs.values) == u.values


def test_fiber_model_lives_over_the_moduli_field(locus1, fibers1):
    coll = fibers1[0]
    d, m = fiber_model(locus1, coll)
    assert d == coll.d_table
    assert m.genus == 29
    # some coefficient must genuinely need sqrt(d)
    assert any(isinstance(c, QuadraticElement) and c.b != 0
               for c in m.f.coeffs)
    u = _u_of_model(m)
    assert check_group_relation(u) == "Z2xA5"
