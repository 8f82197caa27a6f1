"""The rotation group of the icosahedron inside the projective linear group.

Everything here is exact: the sixty fractional-linear maps are generated by
an order-2 and an order-5 element with entries in the 5th cyclotomic field,
and the three special point orbits (face centers, vertices, edge midpoints)
appear as fixed polynomials whose combination gives the degree-60 invariant
map of the projective line.
"""

import math
from fractions import Fraction

from .errors import (
    DivisionByZero,
    FixedPointsOutsideField,
    IdentityFailed,
    InconsistentData,
    OrderTooLarge,
    ParabolicElement,
)
from .exactfield import (
    AlgebraicNumber,
    IntVectorOps,
    cyclo_sqrt,
    cyclotomic_field,
    to_ambient,
    to_subfield,
)
from .fixtures import load_fixtures
from .polyring import Poly, RationalFunction, interpolate, nullspace


class MoebiusMap:
    """A fractional-linear map x -> (a*x + b)/(c*x + d), up to scaling."""

    __slots__ = ("a", "b", "c", "d", "_canon", "sub5")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (to_ambient(v) for v in (a, b, c, d))
        if not (self.a * self.d - self.b * self.c):
            raise ValueError("singular matrix does not define a map")
        self._canon = None
        self.sub5 = None

    def canonical_entries(self):
        """Entries scaled so the first nonzero one is 1."""
        if self._canon is None:
            entries = (self.a, self.b, self.c, self.d)
            lead = next(e for e in entries if e)
            inv = lead.inverse()
            self._canon = tuple(e * inv for e in entries)
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return self.canonical_entries() == other.canonical_entries()

    def __hash__(self):
        return hash(self.canonical_entries())

    def compose(self, other):
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def apply(self, x):
        den = self.c * x + self.d
        if not den:
            raise DivisionByZero("point maps to infinity", at=x)
        return (self.a * x + self.b) * den.inverse()

    def is_identity(self):
        c = self.canonical_entries()
        return c[0] == 1 and not c[1] and not c[2] and c[3] == 1

    def order(self, bound=60):
        acc = self
        for k in range(1, bound + 1):
            if acc.is_identity():
                return k
            acc = acc.compose(self)
        raise OrderTooLarge("order exceeds search bound", bound=bound)

    def trace_sq_over_det(self):
        """(a + d)^2 / (ad - bc); invariant under rescaling the matrix."""
        t = self.a + self.d
        return t * t * (self.a * self.d - self.b * self.c).inverse()

    def as_rational_function(self):
        return RationalFunction(Poly([self.b, self.a]), Poly([self.d, self.c]))

    def __repr__(self):
        return (f"MoebiusMap({self.a!r}, {self.b!r}, "
                f"{self.c!r}, {self.d!r})")


class IcosahedralGroup:
    """All sixty maps, plus the pair of generators that produced them."""

    def __init__(self, elements, generators):
        self.elements = elements
        self.generators = generators

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def order_profile(self):
        profile = {}
        for g in self.elements:
            k = g.order()
            profile[k] = profile.get(k, 0) + 1
        return profile


def _canon5(mat):
    """Canonical scaling of a 2x2 matrix over the 5th cyclotomic field."""
    lead = next(e for e in mat if e)
    inv = lead.inverse()
    return tuple(e * inv for e in mat)


_GROUP = None


def build_icosahedral_group():
    """Breadth-first closure of the two defining generators; cached."""
    global _GROUP
    if _GROUP is not None:
        return _GROUP
    f5 = cyclotomic_field(5)
    w = f5.element([-1, 0, -1, -1])          # the golden-section element
    one = f5.one()
    z2 = f5.zeta(2)
    gen_a = (w, one, one, -w)                # order 2
    gen_b = (z2, f5.zero(), f5.zero(), one)  # order 5
    gens = [_canon5(gen_a), _canon5(gen_b)]

    def mat_mul(m, n):
        return (m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
                m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3])

    identity = _canon5((one, f5.zero(), f5.zero(), one))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = _canon5(mat_mul(g, m))
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    elements = []
    for mat in sorted(seen, key=lambda m: tuple(e.coeffs for e in m)):
        mm = MoebiusMap(*[to_ambient(e) for e in mat])
        mm.sub5 = mat
        elements.append(mm)
    gen_maps = [MoebiusMap(*[to_ambient(e) for e in g]) for g in gens]
    for gm, g in zip(gen_maps, gens):
        gm.sub5 = g
    _GROUP = IcosahedralGroup(elements, tuple(gen_maps))
    return _GROUP


def face_form():
    return load_fixtures().orbit_forms["face"]


def vertex_form():
    return load_fixtures().orbit_forms["vertex"]


def edge_form():
    return load_fixtures().orbit_forms["edge"]


def syzygy_check():
    """The edge form squared equals faces cubed plus 1728 vertices fifth."""
    r, s, t = face_form(), vertex_form(), edge_form()
    if t * t != r ** 3 + s ** 5 * 1728:
        raise IdentityFailed("orbit form syzygy does not hold")


def invariant_map():
    """The degree-60 map with value 0 on faces and a pole on vertices."""
    r, s = face_form(), vertex_form()
    return RationalFunction(-(r ** 3), s ** 5)


def invariant_map_shifted():
    """invariant_map - 1728, expressed through the edge form."""
    s, t = vertex_form(), edge_form()
    return RationalFunction(-(t * t), s ** 5)


# ----------------------------------------------------------------------------
# invariance of a rational function under the group
# ----------------------------------------------------------------------------

def _joint_small_field(values):
    """Smallest cyclotomic order among 1, 4, 5, 60 holding every value."""
    amb = [to_ambient(v) for v in values]
    for n in (1, 4, 5, 60):
        subs = [to_subfield(x, n) for x in amb]
        if all(s is not None for s in subs):
            return n, subs
    raise ValueError("values escape the ambient field")  # unreachable


def _int_vectors(field_elems):
    """Clear denominators jointly; the common scalar is irrelevant here."""
    den = 1
    for e in field_elems:
        for c in e.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
    return [tuple(int(c * den) for c in e.coeffs) for e in field_elems]


def orbit_invariance_check(func, group):
    """Exact check that func(g(x)) == func(x) for every g in the group.

    Invariance under the two generators extends to the whole group, so only
    those are tested.  Each check evaluates the cross-multiplied difference
    at more points than its degree bound, which turns sampling into a proof.
    """
    num, den = func.num, func.den
    m = max(num.degree, den.degree)
    gens = group.generators
    for g in gens:
        entries = [g.a, g.b, g.c, g.d]
        n, subs = _joint_small_field(
            entries + [to_ambient(c) for c in num.coeffs]
            + [to_ambient(c) for c in den.coeffs])
        ops = IntVectorOps(n)
        vecs = _int_vectors(subs)
        ga, gb, gc, gd = vecs[: 4]
        ncoef = vecs[4: 4 + len(num.coeffs)]
        dcoef = vecs[4 + len(num.coeffs):]
        npoints = 2 * m + 1
        x = 0
        checked = 0
        while checked < npoints:
            xv = x
            x = -x if x > 0 else -x + 1
            u = ops.add(ops.scale(ga, xv), gb)   # a*x + b
            v = ops.add(ops.scale(gc, xv), gd)   # c*x + d
            upow = [ops.one()]
            vpow = [ops.one()]
            for _ in range(m):
                upow.append(ops.mul(upow[-1], u))
                vpow.append(ops.mul(vpow[-1], v))

            def homog(coefs):
                acc = ops.zero()
                for i, cvec in enumerate(coefs):
                    if any(cvec):
                        term = ops.mul(cvec, ops.mul(upow[i], vpow[m - i]))
                        acc = ops.add(acc, term)
                return acc

            tn = homog(ncoef)
            td = homog(dcoef)
            fn = homog_scalar(ncoef, xv, ops)
            fd = homog_scalar(dcoef, xv, ops)
            # func(g(x)) == func(x)  <=>  tn*fd == td*fn pointwise
            lhs = ops.mul(tn, fd)
            rhs = ops.mul(td, fn)
            if lhs != rhs:
                return False
            checked += 1
    return True


def homog_scalar(coefs, xv, ops):
    """Plain evaluation of an integer-vector polynomial at an integer."""
    acc = ops.zero()
    for cvec in reversed(coefs):
        acc = ops.add(ops.scale(acc, xv), cvec)
    return acc


# ----------------------------------------------------------------------------
# diagonalization of a finite-order map
# ----------------------------------------------------------------------------

def normalize_element_to_scaling(gamma):
    """Conjugate a finite-order map to x -> mu*x.

    Returns (sigma, mu, order) with sigma mapping the fixed points of gamma
    to 0 and infinity.  Raises ParabolicElement when the fixed points
    coincide and FixedPointsOutsideField when they live outside the ambient
    field.
    """
    a, b, c, d = gamma.a, gamma.b, gamma.c, gamma.d
    if not c:
        if a == d:
            if b:
                raise ParabolicElement("single fixed point at infinity")
            sigma = MoebiusMap(1, 0, 0, 1)   # gamma is the identity
        else:
            p = b * (d - a).inverse()
            sigma = MoebiusMap(1, -p, 0, 1)  # fixed points p and infinity
    else:
        disc = (d - a) * (d - a) + b * c * 4
        if not disc:
            raise ParabolicElement("coincident fixed points")
        root = cyclo_sqrt(disc)
        if root is None:
            raise FixedPointsOutsideField(
                "fixed points generate a larger field")
        inv2c = (c * 2).inverse()
        p1 = (a - d + root) * inv2c
        p2 = (a - d - root) * inv2c
        sigma = MoebiusMap(1, -p1, 1, -p2)
    k = gamma.order()
    tau = sigma.compose(gamma).compose(sigma.inverse())
    if tau.b or tau.c:
        raise IdentityFailed("conjugation did not diagonalize the map")
    mu = tau.a * tau.d.inverse()
    if mu ** k != 1:
        raise IdentityFailed("scaling factor is not a root of unity")
    if any(mu ** j == 1 for j in range(1, k)):
        raise IdentityFailed("scaling factor has too small an order")
    return sigma, mu, k


# ----------------------------------------------------------------------------
# symmetrized orbit functions
# ----------------------------------------------------------------------------

class _OrbitProductSampler:
    """Exact samples of the coefficients of prod_g ((c x+d) T - (a x+b)).

    Matrices are cleared to integer vectors over the 5th cyclotomic field by
    rational per-matrix scalars, so every coefficient of the product in T
    stays a rational polynomial in x; its values come out as plain integers.
    """

    def __init__(self, group):
        self.ops = IntVectorOps(5)
        mats = []
        for g in group.elements:
            sub = getattr(g, "sub5", None)
            if sub is None:
                n, subs = _joint_small_field([g.a, g.b, g.c, g.d])
                if n not in (1, 5):
                    raise ValueError("group entries escape the small field")
                f5 = cyclotomic_field(5)
                sub = tuple(f5.element(s.coeffs if n == 5 else [
                    s.rational_value()]) for s in subs)
            mats.append(_int_vectors(sub))
        self.mats = mats
        self.size = len(mats)

    def coefficients_at(self, xv):
        """All T-coefficients of the orbit product at integer x, or None.

        None signals a sample where the top coefficient vanishes (the point
        hits a pole of the orbit); such samples are skipped by callers.
        """
        ops = self.ops
        poly = [ops.one()]
        for a, b, c, d in self.mats:
            alpha = ops.add(ops.scale(c, xv), d)
            beta = ops.add(ops.scale(a, xv), b)
            nxt = [ops.zero() for _ in range(len(poly) + 1)]
            for k, coef in enumerate(poly):
                if any(coef):
                    nxt[k + 1] = ops.add(nxt[k + 1], ops.mul(coef, alpha))
                    nxt[k] = ops.sub(nxt[k], ops.mul(coef, beta))
            poly = nxt
        out = []
        for vec in poly:
            if any(vec[1:]):
                raise InconsistentData(
                    "orbit product coefficient is not rational", at=xv)
            out.append(vec[0])
        if out[-1] == 0:
            return None
        return out


def first_nonconstant_symmetric_function(group):
    """Smallest k whose k-th elementary symmetric orbit function varies.

    Returns (k, the function) with the function reconstructed exactly from
    integer samples and verified on spare points.
    """
    sampler = _OrbitProductSampler(group)
    n = sampler.size
    need = n + 5
    samples = {}
    x = 0
    while len(samples) < need:
        xv = x
        x = -x if x > 0 else -x + 1
        coeffs = sampler.coefficients_at(xv)
        if coeffs is not None:
            samples[xv] = coeffs
    xs = sorted(samples, key=abs)
    for k in range(1, n + 1):
        vals = [Fraction((-1) ** k * samples[xv][n - k], samples[xv][n])
                for xv in xs]
        if any(v != vals[0] for v in vals):
            num_pts = [(Fraction(xv), Fraction(samples[xv][n - k]))
                       for xv in xs]
            den_pts = [(Fraction(xv), Fraction(samples[xv][n]))
                       for xv in xs]
            num = interpolate(num_pts, degree=n) * ((-1) ** k)
            den = interpolate(den_pts, degree=n)
            return k, RationalFunction(num, den)
    raise InconsistentData("all symmetric orbit functions look constant")


def moebius_equivalence(f, g):
    """A projective change of target with f == (a*g + b)/(c*g + d), or None.

    The certificate is found as a nullspace vector of the cross-multiplied
    coefficient system and then verified by exact polynomial identity.
    """
    nf, df = f.num, f.den
    ng, dg = g.num, g.den
    # f.num * (c*ng + d*dg) == f.den * (a*ng + b*dg)
    lhs_c = nf * ng
    lhs_d = nf * dg
    rhs_a = df * ng
    rhs_b = df * dg
    deg = max(p.degree for p in (lhs_c, lhs_d, rhs_a, rhs_b))
    rows = []
    for i in range(deg + 1):
        rows.append([rhs_a.coeff(i), rhs_b.coeff(i),
                     -lhs_c.coeff(i), -lhs_d.coeff(i)])
    basis = nullspace(rows, 4)
    for vec in basis:
        a, b, c, d = (Fraction(v) if isinstance(v, int) else v for v in vec)
        if a * d - b * c == 0:
            continue
        if rhs_a * a + rhs_b * b == lhs_c * c + lhs_d * d:
            return MoebiusMap(a, b, c, d)
    return None
