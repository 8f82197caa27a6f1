"""Decompositions of the degree-60 invariant map through smaller inner maps.

Three routes are covered.  The map is a polynomial in x^5 as written, since
the vertex orbit sits at 0 and infinity.  Conjugating by the fixed Moebius
map that carries a pair of edge midpoints to 0 and infinity produces an even
map over the Gaussian rationals, the x^2 route.  Conjugating by a map that
does the same for two face centers produces the x^3 route.  A generic
left-factor solver backs all of them and verifies every answer by exact
composition.
"""

from fractions import Fraction

from .errors import (
    ConstantInner,
    DegreeMismatch,
    FactorMismatch,
    FixedPointsOutsideField,
    IdentityFailed,
    InconsistentData,
)
from .exactfield import I_UNIT, QuadraticElement
from .fixtures import load_fixtures
from .icosa import (
    MoebiusMap,
    build_icosahedral_group,
    invariant_map,
    normalize_element_to_scaling,
)
from .polyring import Poly, RationalFunction, compose_rational, nullspace

_GAUSS_I = QuadraticElement(0, 1, -1)


def conjugation_to_even():
    """The map x -> (ix + 1)/(-ix + 1) carrying two edge midpoints to 0, inf."""
    return MoebiusMap(I_UNIT, 1, -I_UNIT, 1)


_CONJ_CACHE = {}


def _conjugated_form(kind):
    if kind not in _CONJ_CACHE:
        prod = Poly([1])
        for factor in load_fixtures().conjugated_factors[kind]:
            prod = prod * factor
        _CONJ_CACHE[kind] = prod
    return _CONJ_CACHE[kind]


def conjugated_face_form():
    return _conjugated_form("face")


def conjugated_vertex_form():
    return _conjugated_form("vertex")


def conjugated_edge_form():
    return _conjugated_form("edge")


def transported_invariant_map():
    """The invariant map conjugated to even form, over the Gaussian field.

    Computed directly from the plain map by substituting the inverse of the
    conjugation and clearing powers of (x + 1); numerator and denominator
    come out with Gaussian coefficients and joint degree 60.
    """
    phi = invariant_map()
    m = 60
    one_minus = Poly([-1, 1])   # x - 1
    one_plus = Poly([1, 1])     # x + 1
    pows_minus = [Poly([1])]
    pows_plus = [Poly([1])]
    for _ in range(m):
        pows_minus.append(pows_minus[-1] * one_minus)
        pows_plus.append(pows_plus[-1] * one_plus)
    i_pows = [QuadraticElement(1, 0, -1)]
    for _ in range(m):
        i_pows.append(i_pows[-1] * _GAUSS_I)

    def transport(poly):
        acc = [QuadraticElement(0, 0, -1)] * (m + 1)
        for i, c in enumerate(poly.coeffs):
            if not c:
                continue
            scalar = i_pows[m - i] * Fraction(c)
            term = pows_minus[i] * pows_plus[m - i]
            for k, t in enumerate(term.coeffs):
                if t:
                    acc[k] = acc[k] + scalar * t
        return Poly(acc)

    num = transport(phi.num)
    den = transport(phi.den)
    return RationalFunction(num, den)


def transported_matches_factored():
    """The transported map must equal 64 * face^3 / vertex^5 coefficientwise.

    Both sides are reduced fractions of joint degree 60, so they agree up to
    one common scalar; a coefficient that breaks proportionality raises
    FactorMismatch with its index.
    """
    t = transported_invariant_map()
    nf = conjugated_face_form() ** 3 * Fraction(64)
    df = conjugated_vertex_form() ** 5
    c = t.num.leading() / nf.leading()
    for name, got, want in (("numerator", t.num, nf), ("denominator", t.den, df)):
        for k in range(max(got.degree, want.degree) + 1):
            if got.coeff(k) - want.coeff(k) * c:
                raise FactorMismatch("transported map misses the factored form",
                                     part=name, index=k)
    return True


def conjugated_edge_identity(scalar=None):
    """Whether 64*face^3 - 1728*vertex^5 equals scalar * edge^2 exactly."""
    if scalar is None:
        scalar = load_fixtures().conjugated_identity_scalar
    lhs = conjugated_face_form() ** 3 * Fraction(64) \
        - conjugated_vertex_form() ** 5 * Fraction(1728)
    rhs = conjugated_edge_form() ** 2 * scalar
    return lhs == rhs


def verify_conjugated_identities():
    """Raise IdentityFailed unless both conjugated-side identities hold."""
    transported_matches_factored()
    if not conjugated_edge_identity():
        raise IdentityFailed("edge-square identity fails on the even side")


# ----------------------------------------------------------------------------
# left factorization: find g with f == g(h)
# ----------------------------------------------------------------------------

def _is_plain_power(h):
    """The exponent m when h is exactly x^m, else None."""
    if h.den.degree != 0 or h.den.coeff(0) != 1:
        return None
    nz = [k for k, c in enumerate(h.num.coeffs) if c]
    if len(nz) == 1 and h.num.coeffs[nz[0]] == 1 and nz[0] >= 1:
        return nz[0]
    return None


def _compress_power(poly, m):
    """Read a polynomial supported on multiples of m as a polynomial in x^m."""
    out = []
    for k, c in enumerate(poly.coeffs):
        if k % m == 0:
            out.append(c)
        elif c:
            return None
    return Poly(out)


def left_factor(f, h, max_rows=None):
    """Solve f == g(h) for the outer map g; None when no such g exists.

    The answer is always verified by exact composition.  A constant inner
    map raises ConstantInner; an inner degree that does not divide the outer
    one raises DegreeMismatch.
    """
    if not isinstance(f, RationalFunction):
        f = RationalFunction(f)
    if not isinstance(h, RationalFunction):
        h = RationalFunction(h)
    m = h.mapped_degree()
    if m == 0:
        raise ConstantInner("inner map is constant")
    n = f.mapped_degree()
    if n % m:
        raise DegreeMismatch("inner degree does not divide the outer degree",
                             inner=m, outer=n)
    k = n // m
    power = _is_plain_power(h)
    if power is not None:
        # for h = x^m a factorization exists exactly when both reduced parts
        # of f are supported on multiples of m
        cn = _compress_power(f.num, power)
        cd = _compress_power(f.den, power)
        if cn is None or cd is None:
            return None
        return RationalFunction(cn, cd, reduce=False)
    hn, hd = h.num, h.den
    lifts = [Poly([1])]
    for _ in range(k):
        lifts.append(lifts[-1] * hn)
    drops = [Poly([1])]
    for _ in range(k):
        drops.append(drops[-1] * hd)
    blend = [lifts[j] * drops[k - j] for j in range(k + 1)]
    p_cols = [f.den * bj * -1 for bj in blend]
    q_cols = [f.num * bj for bj in blend]
    deg = max(c.degree for c in p_cols + q_cols)
    nrows = deg + 1 if max_rows is None else min(deg + 1, max_rows)
    rows = []
    for r in range(nrows):
        rows.append([c.coeff(r) for c in p_cols] + [c.coeff(r) for c in q_cols])
    for vec in nullspace(rows, 2 * (k + 1)):
        den = Poly(vec[k + 1:])
        if not den:
            continue
        g = RationalFunction(Poly(vec[: k + 1]), den)
        if compose_rational(g, h) == f:
            return g
    return None


def cyclic_symmetric_inner(gamma, order):
    """First nonconstant elementary symmetric function of a cyclic orbit.

    The orbit is {x, gamma(x), ..., gamma^(order-1)(x)}; the returned
    rational function is fixed by gamma and has degree at most the order.
    """
    maps = [MoebiusMap(1, 0, 0, 1)]
    for _ in range(order - 1):
        maps.append(maps[-1].compose(gamma))
    # product over the orbit of (den_j * T - num_j); coefficients are
    # polynomials in x of degree <= order
    tpoly = [Poly([1])]
    for mp in maps:
        numj = Poly([mp.b, mp.a])
        denj = Poly([mp.d, mp.c])
        nxt = [Poly() for _ in range(len(tpoly) + 1)]
        for deg_t, coef in enumerate(tpoly):
            if coef:
                nxt[deg_t + 1] = nxt[deg_t + 1] + coef * denj
                nxt[deg_t] = nxt[deg_t] - coef * numj
        tpoly = nxt
    top = tpoly[order]
    for i in range(1, order + 1):
        cand = RationalFunction(tpoly[order - i] * (-1) ** i, top)
        if not cand.is_constant():
            return cand
    raise InconsistentData("cyclic orbit has no nonconstant symmetric function")


def inner_cubic_decomposition():
    """Write the invariant map as outer(inner) with a degree-3 inner map.

    Preferred route: diagonalize an order-3 group element (its fixed points
    lie in the ambient field) and compress the conjugated map through x^3.
    If diagonalization were impossible the symmetric-function inner map is
    used with the generic solver.  Returns (outer, inner), verified.
    """
    group = build_icosahedral_group()
    phi = invariant_map()
    gamma = next(g for g in group.elements if g.order() == 3)
    try:
        sigma, _, _ = normalize_element_to_scaling(gamma)
    except FixedPointsOutsideField:
        inner = cyclic_symmetric_inner(gamma, 3)
        outer = left_factor(phi, inner, max_rows=60)
        if outer is None:
            raise IdentityFailed("no cubic inner decomposition found")
        return outer, inner
    psi = compose_rational(phi, sigma.inverse().as_rational_function())
    cube = RationalFunction(Poly([0, 0, 0, 1]))
    outer = left_factor(psi, cube)
    if outer is None:
        raise IdentityFailed("conjugated map is not a function of x^3")
    snum, sden = Poly([sigma.b, sigma.a]), Poly([sigma.d, sigma.c])
    inner = RationalFunction(snum ** 3, sden ** 3)
    if compose_rational(outer, inner) != phi:
        raise IdentityFailed("cubic decomposition failed verification")
    return outer, inner


def check_inner(kind):
    """CLI-facing decomposition check; returns a report dictionary."""
    if kind == "x5":
        outer = left_factor(invariant_map(), RationalFunction(
            Poly([0, 0, 0, 0, 0, 1])))
        ok = outer is not None
        deg = outer.mapped_degree() if ok else None
    elif kind == "x2":
        outer = left_factor(transported_invariant_map(), RationalFunction(
            Poly([0, 0, 1])))
        ok = outer is not None
        deg = outer.mapped_degree() if ok else None
    elif kind == "x3":
        outer, _ = inner_cubic_decomposition()
        ok = True
        deg = outer.mapped_degree()
    else:
        raise ValueError(f"unknown inner kind {kind!r}")
    return {"inner": kind, "found": ok, "outer_degree": deg}
