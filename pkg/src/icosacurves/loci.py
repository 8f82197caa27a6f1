"""One-parameter loci: elimination, singular fibers, moduli fields, models.

Each family case with one free branch value traces a rational curve in
the plane of absolute invariants (i1, i2).  This module interpolates the
invariants as exact functions of the branch value, eliminates the
parameter to produce the integer plane model, locates the three singular
fibers, determines the quadratic field of moduli at each, inverts the
parameterization at nonsingular points, and emits curve models over the
field of moduli.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import (
    EliminationDegenerate,
    IcosaError,
    InconsistentData,
    NotInLocus,
    NotOnLocus,
    RationalI3,
    SingularPoint,
    UnexpectedFactorStructure,
)
from .exactfield import QuadraticElement, squarefree_part
from .families import (
    CurveModel,
    classify_genus,
    curve_equation,
    smallest_one_dimensional_genus,
)
from .fixtures import load_fixtures
from .invariants import (
    DihedralInvariants,
    _demote,
    _even_multiplier,
    _fiber_pair,
    check_group_relation,
    dihedral_invariants,
    invariant_set,
)
from .polyring import (
    Poly,
    RationalFunction,
    _bareiss_det,
    integer_primitive,
    interpolate,
)


@dataclass
class LocusCurve:
    """A one-parameter family traced in the (i1, i2) plane."""

    case_no: int
    genus: int
    F: Dict[Tuple[int, int], int]
    i1_of_lambda: RationalFunction
    i2_of_lambda: RationalFunction
    I2_of_lambda: Poly
    I4_of_lambda: Poly
    I6_of_lambda: Poly
    I6star_of_lambda: Poly
    kappa: Optional[Tuple[Fraction, Fraction, Fraction]]


@dataclass(frozen=True)
class SingularFiber:
    """A parameter quadratic over which the moduli map degenerates."""

    kind: str
    q: Poly
    D: int
    d_table: int


_SAMPLE_COUNT = 25


def _sample_values(count):
    out = []
    k = 1
    banned = {0, 1728}
    while len(out) < count:
        for v in (k, -k):
            if v not in banned and len(out) < count:
                out.append(v)
        k += 1
    return out


_LOCUS_CACHE = {}


def build_locus(case_no):
    """Interpolate the invariants of the one-parameter family and
    eliminate the parameter.

    The classical invariants are polynomials in the branch value of
    degrees at most 2, 4, 6, 6, so twenty-five integer samples fix them
    with plenty of consistency slack; the plane model comes from the
    smallest coefficient box admitting a linear relation among the
    monomials in (i1, i2).
    """
    if case_no in _LOCUS_CACHE:
        return _LOCUS_CACHE[case_no]
    if case_no not in range(1, 9):
        raise ValueError("case number must be between 1 and 8")
    g = smallest_one_dimensional_genus(case_no)
    lams = _sample_values(_SAMPLE_COUNT)
    samples = []
    for lam in lams:
        cur = curve_equation(g, [Fraction(lam)], "x5")
        samples.append(invariant_set(cur.f, g))
    I2 = interpolate([(Fraction(l), s.I2) for l, s in zip(lams, samples)],
                     degree=2)
    I4 = interpolate([(Fraction(l), s.I4) for l, s in zip(lams, samples)],
                     degree=4)
    I6 = interpolate([(Fraction(l), s.I6) for l, s in zip(lams, samples)],
                     degree=6)
    I6s = interpolate([(Fraction(l), s.I6star) for l, s in zip(lams, samples)],
                      degree=6)
    i1 = RationalFunction(I4, I2 ** 2)
    i2 = RationalFunction(I6, I2 ** 3)
    F = _eliminate(i1, i2)
    kappa = None
    if case_no == 1:
        fx = load_fixtures()
        k1 = _constant_ratio(fx.reference_absolute_g29["i1"], i1)
        k2 = _constant_ratio(fx.reference_absolute_g29["i2"], i2)
        kappa = (k1, k2, Fraction(1))
    locus = LocusCurve(case_no=case_no, genus=g, F=F,
                       i1_of_lambda=i1, i2_of_lambda=i2,
                       I2_of_lambda=I2, I4_of_lambda=I4,
                       I6_of_lambda=I6, I6star_of_lambda=I6s,
                       kappa=kappa)
    _LOCUS_CACHE[case_no] = locus
    return locus


def _constant_ratio(reference, computed):
    """The constant carrying one normalization convention to the other."""
    ratio = reference / computed
    if not ratio.is_constant():
        raise InconsistentData("normalization ratio is not constant")
    c = ratio.num.coeff(0) / ratio.den.coeff(0)
    if reference != computed * c:
        raise InconsistentData("normalization ratio fails to verify")
    return c


def _integer_poly(poly):
    prim = integer_primitive(poly)
    return Poly([int(c) for c in prim.coeffs])


def _integer_pair(rf):
    """Integer numerator and denominator with exactly the ratio of rf.

    One common rescaling keeps num/den equal to the input; scaling the
    two halves separately would silently change the function.
    """
    den_l = 1
    for p in (rf.num, rf.den):
        for c in p.coeffs:
            q = Fraction(c).denominator
            den_l = den_l * q // math.gcd(den_l, q)
    num_g = 0
    for p in (rf.num, rf.den):
        for c in p.coeffs:
            num_g = math.gcd(num_g, (Fraction(c) * den_l).numerator)
    scale = Fraction(den_l, num_g)
    n = Poly([int(Fraction(c) * scale) for c in rf.num.coeffs])
    d = Poly([int(Fraction(c) * scale) for c in rf.den.coeffs])
    return n, d


def _eliminate(i1, i2):
    """Plane model by eliminating the parameter with a resultant.

    R(X, Y) = Res_lam(numer(i1) - X denom(i1), numer(i2) - Y denom(i2))
    vanishes exactly on the image curve plus possible coordinate lines
    from leading-coefficient dropouts; R is recovered by interpolating
    integer Sylvester determinants over a grid, then reduced to the
    content-free model by stripping one-variable factors and repeated
    factors.
    """
    n1, d1 = _integer_pair(i1)
    n2, d2 = _integer_pair(i2)
    m1 = max(n1.degree, d1.degree)
    m2 = max(n2.degree, d2.degree)
    # the Sylvester block structure bounds deg_X R by m2 and deg_Y R by m1
    xs = _sample_values(m2 + 3)
    ys = _sample_values(m1 + 3)
    slices = []
    for a in xs:
        pc = [n1.coeff(j) - a * d1.coeff(j) for j in range(m1 + 1)]
        pts = []
        for b in ys:
            qc = [n2.coeff(j) - b * d2.coeff(j) for j in range(m2 + 1)]
            pts.append((Fraction(b), Fraction(_fixed_resultant(pc, qc))))
        slices.append(interpolate(pts, degree=m1))
    cols = []
    for k in range(m1 + 1):
        cpts = [(Fraction(a), s.coeff(k)) for a, s in zip(xs, slices)]
        cols.append(interpolate(cpts, degree=m2))
    if not any(cols):
        raise EliminationDegenerate(
            "elimination resultant vanished identically")
    return _reduce_plane_model(cols)


def _reduce_plane_model(cols):
    """Content-free irreducible model from the Y-coefficient list of R.

    cols[k] is the X-polynomial multiplying Y^k.  One-variable factors
    (the leading-coefficient artifacts) live in the X-content or the
    Y-content; repeated bivariate factors fall to a gcd with the
    Y-derivative over the field Q(X).
    """
    xcontent = Poly()
    for c in cols:
        if c:
            xcontent = xcontent.gcd(c) if xcontent else c.monic()
    if xcontent.degree > 0:
        cols = [c // xcontent for c in cols]
    width = max(c.degree for c in cols if c) + 1
    rows = [Poly([c.coeff(j) for c in cols]) for j in range(width)]
    ycontent = Poly()
    for r in rows:
        if r:
            ycontent = ycontent.gcd(r) if ycontent else r.monic()
    if ycontent.degree > 0:
        rows = [r // ycontent for r in rows]
        cols = [Poly([r.coeff(k) for r in rows])
                for k in range(max(r.degree for r in rows if r) + 1)]
    P = Poly([RationalFunction(c) for c in cols])
    if P.degree > 0:
        g = P.gcd(P.derivative())
        if g.degree > 0:
            P = P // g
    den = Poly([1])
    for c in P.coeffs:
        extra = c.den // c.den.gcd(den)
        den = den * extra
    out = {}
    scale_num = 0
    scale_den = 1
    for k, c in enumerate(P.coeffs):
        col = c.num * (den // c.den)
        for j in range(col.degree + 1):
            v = Fraction(col.coeff(j))
            if v:
                out[(j, k)] = v
                scale_num = math.gcd(scale_num, v.numerator)
                scale_den = scale_den * v.denominator // math.gcd(
                    scale_den, v.denominator)
    if not out:
        raise EliminationDegenerate("plane model reduced to zero")
    scale = Fraction(scale_den, scale_num)
    if out[max(out)] < 0:
        scale = -scale
    return {jk: int(v * scale) for jk, v in out.items()}


def evaluate_plane_model(F, x, y):
    """F at a point, for dict-of-monomials plane models."""
    total = 0
    for (j, k), c in F.items():
        total = total + c * x ** j * y ** k
    return total


def _divided_kernel(num, den, lam0):
    """Coefficients in mu of (num(lam0) den(mu) - num(mu) den(lam0)) divided
    by (mu - lam0); the division is exact since mu = lam0 is a root."""
    m = max(num.degree, den.degree)
    a = num(lam0)
    b = den(lam0)
    top = [a * den.coeff(j) - num.coeff(j) * b for j in range(m + 1)]
    quot = [0] * m
    carry = top[m]
    for j in range(m - 1, -1, -1):
        quot[j] = carry
        carry = top[j] + lam0 * carry
    if carry != 0:
        raise InconsistentData("kernel division left a remainder")
    return quot


def _fixed_resultant(pc, qc):
    """Sylvester determinant for integer coefficient lists of fixed length."""
    m = len(pc) - 1
    n = len(qc) - 1
    if m <= 0 or n <= 0:
        return 0
    size = m + n
    pdesc = list(reversed(pc))
    qdesc = list(reversed(qc))
    rows = []
    for i in range(n):
        rows.append([0] * i + pdesc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qdesc + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def _strip_factor(poly, factor):
    """Remove every copy of a monic factor; both arguments monic."""
    while poly.degree >= factor.degree:
        q, r = divmod(poly, factor)
        if r:
            break
        poly = q
    return poly


def _quadratic_root(q, d):
    """The root (-B + s sqrt(d)) / (2A) of A x^2 + B x + C."""
    A = q.coeff(2)
    B = q.coeff(1)
    C = q.coeff(0)
    disc = B * B - 4 * A * C
    s2, rem = divmod(disc, d)
    s = math.isqrt(s2)
    if rem or s * s != s2:
        raise InconsistentData("discriminant is not d times a square")
    return QuadraticElement(Fraction(-B, 2 * A), Fraction(s, 2 * A), int(d))


def singular_fibers(locus):
    """The three parameter quadratics where the locus map degenerates.

    zero_locus: shared quadratic of the two numerators (the point (0,0)).
    infinity_locus: the quadratic I2, killing every denominator.
    collision: pairs of distinct parameters with equal (i1, i2), found by
    a resultant of divided-difference kernels and verified exactly in the
    quadratic field of its roots.
    """
    i1, i2 = locus.i1_of_lambda, locus.i2_of_lambda
    gz = i1.num.gcd(i2.num)
    if gz.degree > 1:
        # the shared quadratic enters both numerators squared
        gz = gz // gz.gcd(gz.derivative())
    if gz.degree != 2:
        raise UnexpectedFactorStructure(
            "numerators do not share a quadratic", degree=gz.degree)
    q_zero = _integer_poly(gz)
    q_inf = _integer_poly(locus.I2_of_lambda)
    if q_inf.degree != 2:
        raise UnexpectedFactorStructure("I2 is not quadratic",
                                        degree=q_inf.degree)
    inf_monic = Poly([Fraction(c) for c in q_inf.coeffs]).monic()
    for den, power in ((i1.den, 2), (i2.den, 3)):
        if divmod(inf_monic ** power, den)[1]:
            raise UnexpectedFactorStructure(
                "denominator is not a power of the I2 quadratic")

    n1, d1 = _integer_pair(i1)
    n2, d2 = _integer_pair(i2)
    m1 = max(n1.degree, d1.degree)
    m2 = max(n2.degree, d2.degree)
    bound = (m1 + m2 - 2) * (2 * max(m1, m2) - 1) + 1
    points = []
    for lam0 in _sample_values(bound + 6):
        p1 = _divided_kernel(n1, d1, lam0)
        p2 = _divided_kernel(n2, d2, lam0)
        points.append((Fraction(lam0), Fraction(_fixed_resultant(p1, p2))))
    res = interpolate(points, degree=bound)
    if not res:
        raise UnexpectedFactorStructure("collision resultant vanished")
    work = Poly([Fraction(c) for c in integer_primitive(res).coeffs]).monic()
    zero_monic = Poly([Fraction(c) for c in q_zero.coeffs]).monic()
    work = _strip_factor(work, zero_monic)
    work = _strip_factor(work, inf_monic)
    work = (work // work.gcd(work.derivative())).monic()
    if work.degree != 2:
        raise UnexpectedFactorStructure(
            "collision residue is not quadratic", degree=work.degree)
    q_coll = _integer_poly(work)

    fx = load_fixtures()
    refs = fx.moduli_fields.get(locus.case_no, {})
    fibers = []
    for kind, q in (("collision", q_coll), ("zero_locus", q_zero),
                    ("infinity_locus", q_inf)):
        disc = q.coeff(1) ** 2 - 4 * q.coeff(2) * q.coeff(0)
        d = _squarefree_datum(disc, refs.get(kind.split("_")[0]))
        fibers.append(SingularFiber(kind=kind, q=q, D=disc, d_table=d))

    coll = fibers[0]
    root = _quadratic_root(coll.q, coll.d_table)
    conj = QuadraticElement(root.a, -root.b, root.D)
    for rf in (i1, i2):
        if rf(root) != rf(conj):
            raise UnexpectedFactorStructure(
                "collision quadratic fails the equal-invariants check")
    return tuple(fibers)


def _squarefree_datum(disc, reference):
    """Squarefree part of a discriminant, by bounded factorization with a
    perfect-square fallback against the frozen table value."""
    try:
        return squarefree_part(disc, max_iter=250_000)
    except IcosaError:
        pass
    if reference is not None:
        prod = disc * reference
        if prod > 0 and math.isqrt(prod) ** 2 == prod:
            return reference
    raise InconsistentData(
        "could not certify the squarefree part of the discriminant",
        discriminant=disc)


def _poly_mod(poly, q):
    return divmod(poly, q)[1]


def _mod_inverse(p, q):
    """Inverse of p modulo the quadratic q, or None if not coprime."""
    r0, r1 = q, _poly_mod(p, q)
    s0, s1 = Poly(), Poly([1])
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
    if r0.degree != 0:
        return None
    return s0 * Poly([1 / Fraction(r0.coeff(0))])


def field_of_moduli_at(fiber, locus):
    """Squarefree d with Q(sqrt(d)) the field of moduli over the fiber.

    Works in Q[lam]/(q): the first absolute-invariant generator defined
    there is written as a + b lam; b != 0 certifies that adjoining it is
    the same as adjoining a root of q, so the field is Q(sqrt(disc)).
    """
    q = Poly([Fraction(c) for c in fiber.q.coeffs]).monic()
    disc = fiber.D
    if disc >= 0 and math.isqrt(disc) ** 2 == disc:
        raise ValueError("fiber quadratic is reducible")
    I2 = locus.I2_of_lambda
    I4 = locus.I4_of_lambda
    I6 = locus.I6_of_lambda
    I6s = locus.I6star_of_lambda
    cascade = [
        ("i3", I6s, I2 ** 3),
        ("i3_reciprocal", I2 ** 3, I6s),
        ("i1", I4, I2 ** 2),
        ("i2", I6, I2 ** 3),
        ("i4", I6 ** 2, I4 ** 3),
    ]
    saw_rational = False
    for _, num, den in cascade:
        inv = _mod_inverse(den, q)
        if inv is None:
            continue
        val = _poly_mod(_poly_mod(num, q) * inv, q)
        if val.degree >= 1:
            refs = load_fixtures().moduli_fields.get(locus.case_no, {})
            expect = refs.get(fiber.kind.split("_")[0])
            if expect is not None and expect != fiber.d_table:
                raise InconsistentData("table value mismatch",
                                       computed=fiber.d_table, table=expect)
            return fiber.d_table
        saw_rational = True
    if saw_rational:
        raise RationalI3("every defined generator is rational over the "
                         "fiber", fiber=fiber.kind)
    raise InconsistentData("no absolute invariant is defined over the fiber")


def solve_lambda(i1_value, i2_value, locus):
    """The branch value with the given absolute invariants.

    Generic points pin the parameter as the unique common root of two
    specialized numerators; a quadratic gcd means the point is one of the
    three singular fibers.
    """
    g1 = locus.i1_of_lambda.num - locus.i1_of_lambda.den * Fraction(i1_value)
    g2 = locus.i2_of_lambda.num - locus.i2_of_lambda.den * Fraction(i2_value)
    if not g1 or not g2:
        raise InconsistentData("specialized numerator vanished identically")
    h = g1.gcd(g2)
    if h.degree == 0:
        raise NotOnLocus("invariants do not solve the locus equation",
                         i1=i1_value, i2=i2_value)
    if h.degree == 1:
        return -Fraction(h.coeff(0)) / Fraction(h.coeff(1))
    if h.degree == 2:
        raise SingularPoint("two parameters share this moduli point",
                            quadratic=[str(c) for c in h.monic().coeffs])
    raise InconsistentData("parameter gcd has impossible degree",
                           degree=h.degree)


def rational_model(u, group=None):
    """A curve model over the field generated by the dihedral invariants.

    Z2xA5 gives y^2 = u1 x^(2g+2) + u1 x^(2g) + u2 x^(2g-2) + ... +
    u_g x^2 + 2; SL2_5 the same shape times x with top weight u1 at
    x^(2g+1).  Coefficients are exactly the u_i and 2, so the model is
    defined over the field of moduli.
    """
    if group is None:
        group = check_group_relation(u)
    if group == "neither":
        raise NotInLocus("dihedral invariants satisfy no group relation")
    d = u.d
    if group == "Z2xA5":
        g = d - 1
    else:
        g = d
    desc = classify_genus(g)
    if desc.group != group:
        raise NotInLocus("group does not match the genus", genus=g)
    even = [2]
    for k in range(1, d):
        even.append(u.u(d - k))
    even.append(u.u(1))
    f = Poly([0])
    for k, c in enumerate(even):
        f = f + Poly([c]).shifted(2 * k)
    if group == "SL2_5":
        f = f.shifted(1)
    return CurveModel(f=f, genus=g, model="x2", case=desc, params=[])


_SYMBOLIC_U = {}


def family_invariant_functions(case_no):
    """Dihedral invariants of the one-parameter family as exact rational
    functions of the branch value, reduced to rational coefficients."""
    if case_no in _SYMBOLIC_U:
        return _SYMBOLIC_U[case_no]
    g = smallest_one_dimensional_genus(case_no)
    desc = classify_genus(g)
    mult = Poly([1])
    for name in ("edge", "face", "vertex"):
        if name in desc.multipliers:
            mult = mult * _even_multiplier(name)
    top, bottom = _fiber_pair()
    mtop = mult * top
    mbot = mult * bottom
    width = mtop.degree + 1
    coeffs = [RationalFunction(Poly([mtop.coeff(j), -mbot.coeff(j)]))
              for j in range(width)]
    u = dihedral_invariants(coeffs)
    out = DihedralInvariants(d=u.d, values=tuple(_demote_function(v)
                                                 for v in u.values))
    _SYMBOLIC_U[case_no] = out
    return out


def _demote_function(rf):
    num = rf.num.map_coeffs(_demote)
    den = rf.den.map_coeffs(_demote)
    for p in (num, den):
        for c in p.coeffs:
            if isinstance(c, QuadraticElement):
                raise InconsistentData(
                    "family invariant function is not rational")
    return RationalFunction(num, den, reduce=False)


def fiber_model(locus, fiber):
    """(d, model): the curve over Q(sqrt(d)) attached to a singular fiber.

    The parameter is a root of the fiber quadratic; evaluating the family
    invariant functions there gives dihedral invariants in Q(sqrt(d)),
    and the group-relation model over that field follows.
    """
    d = fiber.d_table
    root = _quadratic_root(fiber.q, d)
    funcs = family_invariant_functions(locus.case_no)
    values = tuple(f(root) for f in funcs.values)
    u = DihedralInvariants(d=funcs.d, values=values)
    return d, rational_model(u)
