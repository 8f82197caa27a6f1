"""Dense univariate polynomials and rational functions over exact fields.

Coefficients may be Fractions, quadratic-field elements, or cyclotomic
elements; any type with exact +, -, *, / and truthiness works, and plain
ints coerce through the coefficient type's own arithmetic.  Polynomials are
stored lowest degree first with trailing zeros stripped.
"""

import math
from fractions import Fraction

from .errors import (
    DivisionByZero,
    DuplicateAbscissa,
    InconsistentData,
    ZeroPolynomial,
)


def _exact_div(a, b):
    # keep int/int division exact instead of drifting into floats
    if isinstance(b, int):
        b = Fraction(b)
    return a / b


class Poly:
    """Dense univariate polynomial, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly()
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        if not other:
            raise ZeroPolynomial("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= dn:
            return Poly(), self
        q = [0] * (len(rem) - dn)
        for k in range(len(rem) - dn - 1, -1, -1):
            c = _exact_div(rem[k + dn], lead)
            q[k] = c
            if c:
                for j in range(dn + 1):
                    rem[k + j] = rem[k + j] - c * other.coeffs[j]
        return Poly(q), Poly(rem[:dn])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self):
        lc = self.leading()
        return Poly([_exact_div(c, lc) for c in self.coeffs])

    def derivative(self):
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:])

    def shifted(self, k):
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    def compose(self, inner):
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def gcd(self, other):
        """Monic gcd by the Euclidean algorithm."""
        a, b = self, other
        while b:
            a, b = b, a % b
        if not a:
            return a
        return a.monic()

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def map_coeffs(self, fn):
        return Poly([fn(c) for c in self.coeffs])

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"({c})*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


def clear_denominators(poly):
    """For a Fraction-coefficient polynomial: (integer coeff list, multiplier)."""
    den = 1
    for c in poly.coeffs:
        c = Fraction(c)
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(Fraction(c) * den) for c in poly.coeffs], den

def integer_primitive(poly):
    """Strip integer content (Fraction coefficients); leading made positive."""
    if not poly:
        return poly
    ints, _ = clear_denominators(poly)
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    if ints[-1] < 0:
        g = -g
    return Poly([Fraction(c, g) for c in ints])


# ----------------------------------------------------------------------------
# interpolation
# ----------------------------------------------------------------------------

def interpolate(points, degree=None):
    """Newton interpolation through exact points.

    With a degree bound, fit on the first degree+1 points and verify the rest
    exactly; disagreement raises InconsistentData.  Repeated abscissae raise
    DuplicateAbscissa.
    """
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation nodes must be distinct")
    if degree is None:
        fit_pts, check_pts = list(points), []
    else:
        if len(points) < degree + 1:
            raise InconsistentData("not enough interpolation nodes",
                                   needed=degree + 1, got=len(points))
        fit_pts, check_pts = list(points[: degree + 1]), list(points[degree + 1:])
    # divided differences
    n = len(fit_pts)
    coef = [p[1] for p in fit_pts]
    nodes = [p[0] for p in fit_pts]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = _exact_div(coef[i] - coef[i - 1], nodes[i] - nodes[i - j])
    poly = Poly()
    for k in range(n - 1, -1, -1):
        poly = poly * Poly([-nodes[k], 1]) + Poly([coef[k]])
    for x, y in check_pts:
        if poly(x) != y:
            raise InconsistentData("interpolated polynomial misses a sample",
                                   at=x)
    return poly


# ----------------------------------------------------------------------------
# resultants
# ----------------------------------------------------------------------------

def _bareiss_det(m):
    """Fraction-free determinant of a square integer matrix."""
    n = len(m)
    m = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k]), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(p, q):
    """Resultant of two Fraction-coefficient polynomials.

    Sylvester determinant with the rows of the first polynomial on top:
    resultant(x - a, x - b) == a - b.
    """
    if not p or not q:
        return Fraction(0)
    m, n = p.degree, q.degree
    if m == 0:
        return Fraction(p.coeffs[0]) ** n
    if n == 0:
        return Fraction(q.coeffs[0]) ** m
    pi, pa = clear_denominators(p)
    qi, qa = clear_denominators(q)
    size = m + n
    rows = []
    pdesc = list(reversed(pi))
    qdesc = list(reversed(qi))
    for i in range(n):
        rows.append([0] * i + pdesc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qdesc + [0] * (size - n - 1 - i))
    det = _bareiss_det(rows)
    return Fraction(det) / (Fraction(pa) ** n * Fraction(qa) ** m)


# ----------------------------------------------------------------------------
# modular reductions and squarefree certification
# ----------------------------------------------------------------------------

def _mod_sqrt(a, p):
    """Tonelli-Shanks square root mod an odd prime, or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def poly_mod_p(poly, prime, root_map=None):
    """Reduce coefficients mod prime; None when a denominator vanishes.

    Fraction coefficients reduce directly.  Quadratic-field coefficients
    reduce through root_map, a dict from square class D to a residue r with
    r*r == D mod prime.
    """
    out = []
    for c in poly.coeffs:
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
            if c.denominator % prime == 0:
                return None
            out.append(c.numerator * pow(c.denominator, -1, prime) % prime)
        else:
            # quadratic-field coefficient: a + b*sqrt(D)
            d = getattr(c, "D", None)
            r = None if root_map is None or d is None else root_map.get(d)
            if r is None:
                return None
            parts = []
            for frac in (c.a, c.b):
                if frac.denominator % prime == 0:
                    return None
                parts.append(frac.numerator * pow(frac.denominator, -1, prime)
                             % prime)
            out.append((parts[0] + parts[1] * r) % prime)
    while out and out[-1] == 0:
        out.pop()
    return out


def _gcd_mod_p(a, b, p):
    """Euclid over the prime field; lists of residues, ascending."""
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], -1, p)
        dn = len(b) - 1
        rem = list(a)
        if len(rem) > dn:
            for k in range(len(rem) - dn - 1, -1, -1):
                c = rem[k + dn] * inv % p
                if c:
                    for j in range(dn + 1):
                        rem[k + j] = (rem[k + j] - c * b[j]) % p
            rem = rem[:dn]
        while rem and rem[-1] == 0:
            rem.pop()
        a, b = b, rem
    return a


_CERT_PRIMES = (1000003, 1000033, 1000037, 1000039, 1000081, 1000099)


def _root_map_for(poly, prime):
    rm = {}
    for c in poly.coeffs:
        if isinstance(c, (int, Fraction)):
            continue
        d = getattr(c, "D", None)
        if d is None:
            return None  # coefficient type without a modular image
        if d not in rm:
            r = _mod_sqrt(d, prime)
            if r is None:
                return None
            rm[d] = r
    return rm


def certified_coprime(p, q, primes=_CERT_PRIMES):
    """True when a single good prime certifies gcd(p, q) constant.

    A constant gcd mod a prime that preserves both leading coefficients is a
    proof of coprimality over the ground field; a nonconstant one is not a
    proof of the converse, so None means undecided.
    """
    if not p or not q:
        return False
    for prime in primes:
        rm_p = _root_map_for(p, prime)
        rm_q = _root_map_for(q, prime)
        if rm_p is None or rm_q is None:
            continue
        a = poly_mod_p(p, prime, rm_p)
        b = poly_mod_p(q, prime, rm_q)
        if a is None or b is None:
            continue
        if len(a) != len(p.coeffs) or len(b) != len(q.coeffs):
            continue  # leading coefficient vanished mod prime
        g = _gcd_mod_p(a, b, prime)
        if len(g) == 1:
            return True
    return None


def is_squarefree_certified(poly):
    """Exact squarefree test, preferring a one-prime certificate."""
    if not poly or poly.degree == 0:
        return bool(poly)
    cert = certified_coprime(poly, poly.derivative())
    if cert is not None and cert:
        return True
    g = poly.gcd(poly.derivative())
    return g.degree == 0


# ----------------------------------------------------------------------------
# rational functions
# ----------------------------------------------------------------------------

class RationalFunction:
    """Quotient of two polynomials, kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if not isinstance(num, Poly):
            num = Poly([num])
        if den is None:
            den = Poly([1])
        elif not isinstance(den, Poly):
            den = Poly([den])
        if not den:
            raise ZeroPolynomial("rational function with zero denominator")
        if reduce and num:
            if certified_coprime(num, den) is not True:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num // g
                    den = den // g
        lc = den.leading()
        if lc != 1:
            num = num * _inv(lc)
            den = den.monic()
        self.num = num
        self.den = den

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self.num * other.den) == (other.num * self.den)
        if isinstance(other, (Poly, int, Fraction)):
            return self == RationalFunction(other if isinstance(other, Poly)
                                            else Poly([other]))
        return NotImplemented

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __pow__(self, k):
        if k < 0:
            if not self.num:
                raise DivisionByZero("inverse of the zero rational function")
            return RationalFunction(self.den, self.num) ** (-k)
        # num and den are coprime, so their powers are too
        return RationalFunction(self.num ** k, self.den ** k, reduce=False)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, reduce=False)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Poly([other]), reduce=False)
        return None

    def __call__(self, x):
        dv = self.den(x)
        if not dv:
            raise DivisionByZero("pole of a rational function", at=x)
        return self.num(x) / dv

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def mapped_degree(self):
        """Degree as a map of the projective line."""
        return max(self.num.degree, self.den.degree)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def compose_rational(outer, inner):
    """outer(inner(x)) for rational functions, via homogenization."""
    if not isinstance(inner, RationalFunction):
        inner = RationalFunction(inner if isinstance(inner, Poly)
                                 else Poly([inner]))
    if not isinstance(outer, RationalFunction):
        outer = RationalFunction(outer if isinstance(outer, Poly)
                                 else Poly([outer]))
    a, b = inner.num, inner.den
    m = max(outer.num.degree, outer.den.degree, 0)
    a_pows = [Poly([1])]
    b_pows = [Poly([1])]
    for _ in range(m):
        a_pows.append(a_pows[-1] * a)
        b_pows.append(b_pows[-1] * b)

    def homog(p):
        acc = Poly()
        for i, c in enumerate(p.coeffs):
            if c:
                acc = acc + a_pows[i] * b_pows[m - i] * c
        return acc

    num = homog(outer.num)
    den = homog(outer.den)
    if not den:
        raise ZeroPolynomial("composition collapses the denominator")
    return RationalFunction(num, den)


# ----------------------------------------------------------------------------
# exact linear algebra over any of the coefficient fields
# ----------------------------------------------------------------------------

def _inv(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(1) / x
    return x.inverse()


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    piv_cols = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = _inv(m[r][c])
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    return m, piv_cols


def nullspace(rows, ncols):
    """Basis of the right nullspace of the given coefficient rows."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)]
                for j in range(ncols)]
    red, piv_cols = rref(rows)
    free = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(piv_cols):
            v[pc] = -red[i][f]
        basis.append(v)
    return basis


def solve_linear(rows, rhs):
    """Unique solution of rows * x == rhs, or None when absent or non-unique."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    red, piv_cols = rref(aug)
    if ncols in piv_cols:
        return None  # inconsistent
    if len(piv_cols) != ncols:
        return None  # underdetermined
    sol = [0] * ncols
    for i, pc in enumerate(piv_cols):
        sol[pc] = red[i][ncols]
    return sol
