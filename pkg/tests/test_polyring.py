"""Tests for polynomials, rational functions, and exact linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icosacurves.errors import (
    DivisionByZero,
    DuplicateAbscissa,
    InconsistentData,
    ZeroPolynomial,
)
from icosacurves.exactfield import OMEGA, QuadraticElement, cyclotomic_field
from icosacurves.polyring import (
    Poly,
    RationalFunction,
    certified_coprime,
    clear_denominators,
    compose_rational,
    integer_primitive,
    interpolate,
    is_squarefree_certified,
    nullspace,
    poly_mod_p,
    resultant,
    rref,
    solve_linear,
)

F = Fraction


def test_poly_basic_ops():
    p = Poly([1, 2, 3])     # 1 + 2x + 3x^2
    q = Poly([0, 1])        # x
    assert (p * q).coeffs == (0, 1, 2, 3)
    assert (p + q).coeffs == (1, 3, 3)
    assert (p - p) == Poly()
    assert p(2) == 1 + 4 + 12
    assert p.degree == 2
    assert Poly([0, 0]).degree == -1


def test_poly_divmod():
    p = Poly([F(-1), 0, 1])   # x^2 - 1
    d = Poly([F(1), 1])       # x + 1
    q, r = divmod(p, d)
    assert q == Poly([F(-1), 1])
    assert r == Poly()
    q, r = divmod(Poly([F(1), 0, 0, 1]), Poly([F(2), 1]))
    assert q * Poly([F(2), 1]) + r == Poly([F(1), 0, 0, 1])
    with pytest.raises(ZeroPolynomial):
        divmod(p, Poly())


def test_poly_gcd():
    a = Poly([F(-1), 0, 1]) * Poly([F(3), 1])
    b = Poly([F(1), 1]) * Poly([F(7), 1])
    g = a.gcd(b)
    assert g == Poly([F(1), 1])
    assert Poly([F(2)]).gcd(Poly([F(0), 1])) == Poly([F(1)])


def test_poly_compose_and_derivative():
    p = Poly([F(1), 0, 1])       # 1 + x^2
    inner = Poly([F(0), 0, 1])   # x^2
    assert p.compose(inner) == Poly([F(1), 0, 0, 0, 1])
    assert p.derivative() == Poly([0, F(2)])
    assert Poly([F(5)]).derivative() == Poly()


def test_poly_over_cyclotomic_coefficients():
    f = cyclotomic_field(5)
    z = f.zeta(1)
    p = Poly([z, 1])
    q = Poly([-z, 1])
    prod = p * q
    assert prod.coeffs == (-(z * z), f.zero(), f.one()) or prod == Poly(
        [-(z * z), 0, 1])
    g = (p * p).gcd(p * q)
    assert g.degree == 1
    assert g.monic() == p.monic()


def test_clear_denominators_and_primitive():
    p = Poly([F(1, 2), F(3, 4), F(5)])
    ints, mult = clear_denominators(p)
    assert mult == 4
    assert ints == [2, 3, 20]
    assert integer_primitive(Poly([F(4), F(-8), F(12)])) == Poly([1, -2, 3])
    assert integer_primitive(Poly([F(2), F(-4)])) == Poly([-1, 2])


def test_interpolate_exact():
    p = Poly([F(1), F(-2), F(0), F(7)])
    pts = [(F(k), p(F(k))) for k in range(-3, 4)]
    assert interpolate(pts, degree=3) == p
    assert interpolate(pts[:4]) == p
    with pytest.raises(DuplicateAbscissa):
        interpolate([(F(1), F(0)), (F(1), F(1))])
    bad = pts[:4] + [(F(9), p(F(9)) + 1)]
    with pytest.raises(InconsistentData):
        interpolate(bad, degree=3)


def naive_det(m):
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j, c in enumerate(m[0]):
        if c:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * c * naive_det(minor)
    return total


def sylvester_det(p, q):
    """Independent oracle: cofactor-expanded Sylvester determinant."""
    m, n = p.degree, q.degree
    pd = list(reversed([F(c) for c in p.coeffs]))
    qd = list(reversed([F(c) for c in q.coeffs]))
    rows = [[F(0)] * i + pd + [F(0)] * (n - 1 - i) for i in range(n)]
    rows += [[F(0)] * i + qd + [F(0)] * (m - 1 - i) for i in range(m)]
    return naive_det(rows)


def test_resultant_known_values():
    assert resultant(Poly([F(-3), 1]), Poly([F(-5), 1])) == 3 - 5
    assert resultant(Poly([F(-1), 0, 1]), Poly([F(-2), 1])) == 3
    # common root makes the resultant vanish
    assert resultant(Poly([F(-1), 1]) * Poly([F(2), 1]),
                     Poly([F(-1), 1]) * Poly([F(5), 1])) == 0


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(-6, 6), min_size=2, max_size=5),
    st.lists(st.integers(-6, 6), min_size=2, max_size=5),
)
def test_resultant_matches_sylvester_oracle(a, b):
    p, q = Poly([F(c) for c in a]), Poly([F(c) for c in b])
    if p.degree < 1 or q.degree < 1:
        return
    assert resultant(p, q) == sylvester_det(p, q)


@settings(max_examples=20, deadline=None)
@given(
    st.lists(st.integers(-5, 5), min_size=2, max_size=4),
    st.lists(st.integers(-5, 5), min_size=2, max_size=4),
    st.lists(st.integers(-5, 5), min_size=2, max_size=3),
)
def test_resultant_multiplicative(a, b, c):
    p, q, r = (Poly([F(x) for x in v]) for v in (a, b, c))
    if p.degree < 1 or q.degree < 1 or r.degree < 1:
        return
    assert resultant(p * q, r) == resultant(p, r) * resultant(q, r)


def test_poly_mod_p_and_coprime_certificate():
    p = Poly([F(1, 3), F(2)])
    assert poly_mod_p(p, 7) == [5, 2]
    assert poly_mod_p(p, 3) is None
    a = Poly([F(-1), 0, 1])
    b = Poly([F(1), 1])
    assert certified_coprime(a, b) is None  # shared root x = -1
    assert certified_coprime(a, Poly([F(-2), 1])) is True


def test_poly_mod_p_quadratic_coefficients():
    i = QuadraticElement(0, 1, -1)
    p = Poly([i, 1])
    # 13 = 1 mod 4, so -1 has a residue root
    red = poly_mod_p(p, 13, {-1: 5})
    assert red == [5, 1]
    assert 5 * 5 % 13 == 13 - 1


def test_is_squarefree_certified():
    assert is_squarefree_certified(Poly([F(-1), 0, 1]))
    assert not is_squarefree_certified(Poly([F(1), 2, 1]))
    assert not is_squarefree_certified(Poly([F(1), 1]) ** 2 * Poly([F(3), 1]))
    assert is_squarefree_certified(Poly([F(2), 1]))


def test_rational_function_reduction():
    num = Poly([F(-1), 0, 1])
    den = Poly([F(1), 1]) * Poly([F(2)])
    r = RationalFunction(num, den)
    assert r.num == Poly([F(-1, 2), F(1, 2)])
    assert r.den == Poly([F(1)])
    assert r(F(3)) == 1
    with pytest.raises(ZeroPolynomial):
        RationalFunction(num, Poly())


def test_rational_function_arith():
    x = RationalFunction(Poly([0, F(1)]))
    one_over = RationalFunction(Poly([F(1)]), Poly([0, F(1)]))
    assert x * one_over == 1
    s = x + one_over
    assert s.num == Poly([F(1), 0, 1])
    assert s.den == Poly([0, F(1)])
    with pytest.raises(DivisionByZero):
        x / RationalFunction(Poly())
    with pytest.raises(DivisionByZero):
        one_over(F(0))


def test_compose_rational():
    # outer = x^2 / (x - 1), inner = (x+1)/(x-1)
    outer = RationalFunction(Poly([0, 0, F(1)]), Poly([F(-1), 1]))
    inner = RationalFunction(Poly([F(1), 1]), Poly([F(-1), 1]))
    comp = compose_rational(outer, inner)
    for v in (F(2), F(3), F(-5), F(1, 7)):
        assert comp(v) == outer(inner(v))
    assert compose_rational(outer, Poly([0, F(1)])) == outer


def test_compose_rational_degree():
    outer = RationalFunction(Poly([F(1), 0, 0, 1]), Poly([F(2), 1]))
    inner = RationalFunction(Poly([F(0), 0, 1]), Poly([F(1), 1]))
    comp = compose_rational(outer, inner)
    assert comp.mapped_degree() == outer.mapped_degree() * inner.mapped_degree()


def test_rref_and_nullspace():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
    red, piv = rref(rows)
    assert piv == [0]
    ns = nullspace(rows, 3)
    assert len(ns) == 2
    for v in ns:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_nullspace_full_rank():
    rows = [[F(1), F(0)], [F(0), F(1)]]
    assert nullspace(rows, 2) == []


def test_solve_linear():
    rows = [[F(2), F(1)], [F(1), F(-1)]]
    sol = solve_linear(rows, [F(5), F(1)])
    assert sol == [F(2), F(1)]
    assert solve_linear([[F(1), F(1)]], [F(3)]) is None  # underdetermined
    assert solve_linear([[F(1), F(1)], [F(2), F(2)]], [F(3), F(7)]) is None


def test_nullspace_over_quadratic_field():
    i = QuadraticElement(0, 1, -1)
    rows = [[i, 1]]
    ns = nullspace(rows, 2)
    assert len(ns) == 1
    v = ns[0]
    assert rows[0][0] * v[0] + rows[0][1] * v[1] == 0
