"""Invariants of hyperelliptic models: transvectant-based and dihedral.

Two toolkits live here.  Binary-form transvection gives the classical
invariants I2, I4, I6, I6star of the defining polynomial together with
their absolute ratios, which are what cut out the one-parameter loci.
The even-model coefficients give the dihedral invariants u_i, computed
by a root-free formula, and from those we detect the full automorphism
group and recover the symmetric functions of the branch values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .decomp import (
    conjugated_edge_form,
    conjugated_face_form,
    conjugated_vertex_form,
)
from .errors import (
    DegenerateLeadingOrTrailing,
    DegreeTooSmall,
    DivisionByZero,
    NormalizationUndefined,
    OrderTooLarge,
    SingularSystem,
)
from .exactfield import QuadraticElement
from .polyring import Poly, RationalFunction, nullspace


class BinaryForm:
    """Homogeneous form in X, Y; coeffs[i] multiplies X^(n-i) * Y^i."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != degree + 1:
            raise ValueError("coefficient count does not match the degree")
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, poly, degree):
        """Homogenize an ascending-coefficient polynomial to this degree.

        A polynomial of lower degree picks up roots at infinity: the x^j
        coefficient lands in the X^j Y^(degree-j) slot.
        """
        if poly.degree > degree:
            raise ValueError("polynomial degree exceeds the form degree")
        padded = list(poly.coeffs) + [0] * (degree + 1 - len(poly.coeffs))
        return cls(degree, reversed(padded))

    def to_poly(self):
        return Poly(tuple(reversed(self.coeffs)))

    def dx(self):
        n = self.degree
        return BinaryForm(n - 1,
                          (self.coeffs[i] * (n - i) for i in range(n)))

    def dy(self):
        n = self.degree
        return BinaryForm(n - 1,
                          (self.coeffs[i + 1] * (i + 1) for i in range(n)))

    def __mul__(self, other):
        m, n = self.degree, other.degree
        out = [0] * (m + n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(m + n, out)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryForm(self.degree,
                          (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c):
        return BinaryForm(self.degree, (c * a for a in self.coeffs))

    def substitute(self, a, b, c, d):
        """The form at (aX + bY, cX + dY)."""
        first = BinaryForm(1, (a, b))
        second = BinaryForm(1, (c, d))
        n = self.degree
        fp = [BinaryForm(0, (1,))]
        sp = [BinaryForm(0, (1,))]
        for _ in range(n):
            fp.append(fp[-1] * first)
            sp.append(sp[-1] * second)
        acc = BinaryForm(n, [0] * (n + 1))
        for i, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            acc = acc + (fp[n - i] * sp[i]).scale(coeff)
        return acc

    def constant_value(self):
        if self.degree != 0:
            raise ValueError("form is not a constant")
        return self.coeffs[0]

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return (self.degree == other.degree
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return f"BinaryForm({self.degree}, {self.coeffs!r})"


def transvectant(f, h, r):
    """The r-th transvection of two binary forms.

    Normalization: ((m-r)! (n-r)! / (m! n!)) times the alternating sum of
    mixed r-th partial products.  Degree m + n - 2r.
    """
    m, n = f.degree, h.degree
    if r < 0 or r > min(m, n):
        raise OrderTooLarge("transvection order exceeds a form degree",
                            order=r, degrees=(m, n))
    fparts = _mixed_partials(f, r)
    hparts = fparts if h is f else _mixed_partials(h, r)
    acc = None
    for k in range(r + 1):
        c = math.comb(r, k)
        if k % 2:
            c = -c
        term = (fparts[k] * hparts[r - k]).scale(c)
        acc = term if acc is None else acc + term
    lead = Fraction(math.factorial(m - r) * math.factorial(n - r),
                    math.factorial(m) * math.factorial(n))
    return acc.scale(lead)


def _mixed_partials(f, r):
    # index k holds d^r f / dX^(r-k) dY^k, written directly as
    # coeff[j] = c[j+k] * ff(n-j-k, r-k) * ff(j+k, k) with falling
    # factorials ff; one pass beats r-fold repeated differentiation
    n = f.degree
    fact = [1] * (n + 1)
    for t in range(1, n + 1):
        fact[t] = fact[t - 1] * t

    def ff(m, t):
        return fact[m] // fact[m - t]

    c = f.coeffs
    out = []
    for k in range(r + 1):
        deg = n - r
        out.append(BinaryForm(
            deg,
            (c[j + k] * (ff(n - j - k, r - k) * ff(j + k, k))
             for j in range(deg + 1))))
    return out


@dataclass
class InvariantSet:
    """Classical invariants of a curve model and their absolute ratios.

    The i-slots are None when their denominators vanish (or, for i3, when
    the degree is too small for I6star to exist at all).
    """

    I2: object
    I4: object
    I6: object
    I6star: Optional[object]
    i1: Optional[object]
    i2: Optional[object]
    i3: Optional[object]
    i4: Optional[object]

    def absolute(self):
        """(i1, i2, i3, i4), raising when I2 kills the normalization."""
        if self.I2 == 0:
            raise NormalizationUndefined(
                "I2 vanishes, absolute invariants undefined")
        return (self.i1, self.i2, self.i3, self.i4)


def _primitive(form):
    """(scalar, rescaled form) with integer, content-free coefficients.

    Exotic coefficient types pass through untouched with scalar one; the
    point is to keep the transvectant inner loops on machine integers.
    """
    den = 1
    for c in form.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
        elif not isinstance(c, int):
            return Fraction(1), form
    ints = [int(c * den) for c in form.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return Fraction(1), form
    return Fraction(g, den), BinaryForm(form.degree, [v // g for v in ints])


def invariant_set(f, genus):
    """Classical invariants of y^2 = f(x) at the given genus.

    An odd-degree f is homogenized with one root at infinity so the form
    degree is always d = 2*genus + 2.
    """
    d = 2 * genus + 2
    if d < 12:
        raise DegreeTooSmall("invariant chain needs form degree twelve",
                             degree=d)
    if f.degree not in (d - 1, d):
        raise ValueError("polynomial degree does not match the genus")
    sF, F = _primitive(BinaryForm.from_poly(f, d))
    I2 = sF ** 2 * transvectant(F, F, d).constant_value()
    sJ, J12 = _primitive(transvectant(F, F, d - 6))
    sJ = sF ** 2 * sJ
    I4 = sJ ** 2 * transvectant(J12, J12, 12).constant_value()
    sG, G = _primitive(transvectant(F, J12, 12))
    sG = sF * sJ * sG
    I6 = sG ** 2 * transvectant(G, G, d - 12).constant_value()
    I6star = None
    if d >= 20:
        sK, J20 = _primitive(transvectant(F, F, d - 10))
        sK = sF ** 2 * sK
        sH, H = _primitive(transvectant(F, J20, 20))
        sH = sF * sK * sH
        I6star = sH ** 2 * transvectant(H, H, d - 20).constant_value()
    i1 = i2 = i3 = i4 = None
    if I2 != 0:
        sq = I2 * I2
        cube = sq * I2
        i1 = I4 / sq
        i2 = I6 / cube
        if I6star is not None:
            i3 = I6star / cube
    if I4 != 0:
        i4 = (I6 * I6) / (I4 * I4 * I4)
    return InvariantSet(I2=I2, I4=I4, I6=I6, I6star=I6star,
                        i1=i1, i2=i2, i3=i3, i4=i4)


def covariant_vanishing_checks(f, genus):
    """Values of the four small self-transvected covariants.

    For each s in {4, 8, 16, 28} the covariant (F,F)^(d - s/2) has degree
    s, and transvecting it with itself s times yields a constant.  All
    four constants vanish on family curves; a slot is None when the form
    degree is too small to define it.
    """
    d = 2 * genus + 2
    if f.degree not in (d - 1, d):
        raise ValueError("polynomial degree does not match the genus")
    sF, F = _primitive(BinaryForm.from_poly(f, d))
    out = {}
    for s in (4, 8, 16, 28):
        r = d - s // 2
        if r < 0:
            out[s] = None
            continue
        sJ, J = _primitive(transvectant(F, F, r))
        sJ = sF ** 2 * sJ
        out[s] = sJ ** 2 * transvectant(J, J, s).constant_value()
    return out


def _inverse(x):
    if isinstance(x, QuadraticElement):
        return x.inverse()
    if isinstance(x, RationalFunction):
        return 1 / x
    return Fraction(1) / Fraction(x)


def _demote(x):
    """Drop a quadratic wrapper whose irrational part vanishes."""
    if isinstance(x, QuadraticElement) and x.b == 0:
        return x.a
    return x


@dataclass(frozen=True)
class DihedralInvariants:
    """Root-free dihedral invariants of an even model.

    d is the reduced degree (genus + 1 or genus, by full group); values
    holds u_1 ... u_(d-1) in order.
    """

    d: int
    values: Tuple

    def u(self, i):
        if not 1 <= i <= self.d - 1:
            raise IndexError(f"u_{i} is not defined for reduced degree "
                             f"{self.d}")
        return self.values[i - 1]


def dihedral_invariants(b):
    """Dihedral invariants from even-model coefficients b_0 ... b_d.

    Normalizing y^2 = sum b_j x^(2j) to leading and constant term one
    introduces a d-th root; in u_i every root exponent cancels, giving

        u_i = (b_1/b_0)^(d-i) (b_i/b_0) (b_0/b_d)
            + (b_(d-1)/b_0)^(d-i) (b_(d-i)/b_0) (b_0/b_d)^(d-i)

    entirely inside the coefficient field.
    """
    b = list(b)
    d = len(b) - 1
    if d < 2:
        raise ValueError("need at least a quadratic even part")
    if b[0] == 0 or b[d] == 0:
        raise DegenerateLeadingOrTrailing(
            "leading or trailing even coefficient vanishes")
    inv0 = _inverse(b[0])
    low = b[1] * inv0
    high = b[d - 1] * inv0
    ratio = b[0] * _inverse(b[d])
    vals = []
    for i in range(1, d):
        first = low ** (d - i) * (b[i] * inv0) * ratio
        second = high ** (d - i) * (b[d - i] * inv0) * ratio ** (d - i)
        vals.append(_demote(first + second))
    return DihedralInvariants(d=d, values=tuple(vals))


def check_group_relation(u, genus=None):
    """Which full automorphism group the dihedral invariants certify.

    Evaluates 2^((d-2)/2) u_1 -/+ u_(d-1)^(d/2) exactly; the minus sign
    certifies the direct product with the involution, the plus sign the
    binary icosahedral double cover.  Anything else is "neither".
    """
    d = u.d
    if genus is not None and d not in (genus, genus + 1):
        raise ValueError("reduced degree does not match the genus")
    if d % 2:
        return "neither"
    lead = 2 ** ((d - 2) // 2)
    power = u.u(d - 1) ** (d // 2)
    scaled = lead * u.u(1)
    minus_zero = scaled - power == 0
    plus_zero = scaled + power == 0
    if minus_zero and not plus_zero:
        return "Z2xA5"
    if plus_zero and not minus_zero:
        return "SL2_5"
    return "neither"


# t-degrees of the even multiplier products, keyed by d - 30*delta
_MULTIPLIER_BY_OFFSET = {
    0: (),
    6: ("vertex",),
    10: ("face",),
    14: ("edge",),
    16: ("vertex", "face"),
    20: ("edge", "vertex"),
    24: ("edge", "face"),
    30: ("edge", "face", "vertex"),
}

_EVEN_CACHE = {}


def _even_part(poly):
    cs = poly.coeffs
    if any(cs[k] for k in range(1, len(cs), 2)):
        raise ValueError("polynomial is not even")
    return Poly(cs[0::2])


def _even_multiplier(name):
    if name not in _EVEN_CACHE:
        if name == "face":
            _EVEN_CACHE[name] = _even_part(conjugated_face_form())
        elif name == "vertex":
            _EVEN_CACHE[name] = _even_part(conjugated_vertex_form())
        else:
            # edge form is x times an even polynomial
            edge = conjugated_edge_form()
            _EVEN_CACHE[name] = _even_part(Poly(edge.coeffs[1:]))
    return _EVEN_CACHE[name]


def _fiber_pair():
    """Even parts of the two degree-60 building blocks, as t-polynomials."""
    if "pair" not in _EVEN_CACHE:
        face = _even_multiplier("face")
        vertex = _even_multiplier("vertex")
        _EVEN_CACHE["pair"] = (Poly([64]) * face ** 3, vertex ** 5)
    return _EVEN_CACHE["pair"]


def symmetric_from_dihedral(u, delta):
    """Elementary symmetric functions of the branch values, from u alone.

    The even model is M(t) * prod_j (A(t) - lam_j B(t)) in t = x^2, so its
    coefficients are linear in the unknowns s_m = e_m(lam).  Normal-form
    coefficients obey a geometric-ratio symmetry whose unit, together with
    the normalization root, collapses into one extra unknown w; the
    quantities mu_k = u_(d-2k) / (2 (u_(d-1)/2)^k) then satisfy the
    bilinear relations w mu_k b_(2k+2) = mu_(k+1) b_(2k), linear in the
    doubled vector (1, s, w, w s).  A one-dimensional nullspace plus a
    forward re-check of every u_i pins the answer.
    """
    d = u.d
    if delta < 1:
        raise ValueError("dimension must be at least one")
    offset = d - 30 * delta
    if offset not in _MULTIPLIER_BY_OFFSET:
        raise ValueError("invariant vector shape matches no family")
    mult = Poly([1])
    for name in _MULTIPLIER_BY_OFFSET[offset]:
        mult = mult * _even_multiplier(name)
    top, bottom = _fiber_pair()
    cols = []
    for m in range(delta + 1):
        pol = mult * top ** (delta - m) * bottom ** m
        vec = [pol.coeff(j) for j in range(d + 1)]
        if m % 2:
            vec = [-c for c in vec]
        cols.append(vec)

    half = u.u(d - 1) * Fraction(1, 2)
    if half == 0:
        raise SingularSystem("u_(d-1) vanishes, recovery degenerate")
    mus = [Fraction(1)]
    hk = 1
    half_inv = _inverse(half)
    for k in range(1, (d - 2) // 2 + 1):
        hk = hk * half_inv
        mus.append(u.u(d - 2 * k) * Fraction(1, 2) * hk)

    width = 2 * (delta + 1)
    rows = []
    for k in range((d - 2) // 2):
        row = [0] * width
        for m in range(delta + 1):
            row[m] = -(mus[k + 1] * cols[m][2 * k])
            row[delta + 1 + m] = mus[k] * cols[m][2 * k + 2]
        rows.append(row)
    basis = nullspace(rows, width)
    if len(basis) != 1:
        raise SingularSystem("recovery system rank is off",
                             dimension=len(basis))
    v = basis[0]
    if v[0] == 0:
        raise SingularSystem("recovery system degenerates in the "
                             "leading slot")
    inv = _inverse(v[0])
    s = tuple(v[m] * inv for m in range(1, delta + 1))
    w = v[delta + 1] * inv
    for m in range(1, delta + 1):
        if v[delta + 1 + m] * inv != w * s[m - 1]:
            raise SingularSystem("recovery system is internally "
                                 "inconsistent")
    rebuilt = [sum(cols[m][j] * (1 if m == 0 else s[m - 1])
                   for m in range(delta + 1)) for j in range(d + 1)]
    if dihedral_invariants(rebuilt).values != u.values:
        raise SingularSystem("recovered parameters fail to reproduce the "
                             "invariants")
    return tuple(_demote(x) for x in s)


def normal_form_symmetry_report(b, unit=None):
    """Probe the coefficient symmetry a_i unit^i = a_(d-i) projectively.

    The normal form is only defined up to rescaling x and a d-th root of
    unity twist, so the symmetry is tested as the solvability of
    b_i unit^i q^i K = b_(d-i) for a single pair (q, K); the product
    q^d K^2 is the scale-invariant obstruction to realizing both from one
    root.  All arithmetic happens in the ambient cyclotomic field since
    the coefficients and the unit live in different quadratic subfields.
    Returns a dict with keys consistent, q, K, obstruction.
    """
    from .exactfield import EPSILON3, to_ambient

    if unit is None:
        unit = EPSILON3
    b = [to_ambient(x) for x in b]
    d = len(b) - 1
    if not b[0] or not b[d]:
        raise DegenerateLeadingOrTrailing(
            "leading or trailing even coefficient vanishes")
    unit = to_ambient(unit)
    K = b[d] * b[0].inverse()
    q = None
    for i in range(d):
        if b[i] and b[i + 1] and b[d - i] and b[d - i - 1]:
            q = (b[d - i - 1] * b[i]) * (b[d - i] * b[i + 1] * unit).inverse()
            break
    if q is None:
        return {"consistent": False, "q": None, "K": None,
                "obstruction": None}
    consistent = True
    upow = to_ambient(1)
    qpow = upow
    for i in range(d + 1):
        if (b[i] * upow * qpow * K) != b[d - i]:
            consistent = False
            break
        upow = upow * unit
        qpow = qpow * q
    obstruction = q ** d * K * K if consistent else None
    return {"consistent": consistent, "q": q, "K": K,
            "obstruction": obstruction}
