"""Exact arithmetic in cyclotomic fields and their quadratic subfields.

The ambient field is the degree-16 cyclotomic field generated by a primitive
60th root of unity; every algebraic quantity in this package lives inside it.
Elements are coefficient vectors over the power basis of the generator, with
all arithmetic done in stdlib Fractions.  Smaller cyclotomic fields (orders
3, 4, 5, ...) are available as fast internal representations and embed into
the ambient field along fixed root-of-unity identifications.

Square roots inside the ambient field are decided exactly by walking the
quadratic tower Q < Q(sqrt5) < Q(zeta5) < Q(zeta5, i) < ambient, reducing at
the bottom to integer perfect-square tests.  No floating point anywhere.
"""

import math
import random
from fractions import Fraction

from .errors import DivisionByZero, IcosaError, NotInQuadraticSubfield

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ----------------------------------------------------------------------------
# cyclotomic polynomials and fields
# ----------------------------------------------------------------------------

def _intpoly_div_exact(num, den):
    """Exact quotient of integer polynomials (ascending coefficients)."""
    num = list(num)
    dn = len(den) - 1
    while den[dn] == 0:
        dn -= 1
    q = [0] * (len(num) - dn)
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[k + dn]
        if c % den[dn] != 0:
            raise ArithmeticError("division not exact")
        c //= den[dn]
        q[k] = c
        if c:
            for j in range(dn + 1):
                num[k + j] -= c * den[j]
    if any(num[: dn]):
        raise ArithmeticError("division not exact")
    return q


_CYCLO_CACHE = {}


def cyclotomic_polynomial(n):
    """Ascending integer coefficients of the n-th cyclotomic polynomial."""
    if n in _CYCLO_CACHE:
        return list(_CYCLO_CACHE[n])
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _intpoly_div_exact(poly, cyclotomic_polynomial(d))
    _CYCLO_CACHE[n] = tuple(poly)
    return list(poly)


def _totient(n):
    r, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            r *= p - 1
            m //= p
            while m % p == 0:
                r *= p
                m //= p
        p += 1
    if m > 1:
        r *= m - 1
    return r


class CyclotomicField:
    """The field generated by a primitive n-th root of unity."""

    __slots__ = ("n", "degree", "modulus", "_reduction_rows", "_zeta_powers")

    def __init__(self, n):
        self.n = n
        self.modulus = tuple(cyclotomic_polynomial(n))
        self.degree = len(self.modulus) - 1
        assert self.degree == _totient(n)
        d = self.degree
        # x^k mod modulus for k = d .. 2d-2, as integer rows
        rows = {}
        cur = [-c for c in self.modulus[:d]]
        rows[d] = tuple(cur)
        for k in range(d + 1, 2 * d - 1):
            nxt = [0] + cur[: d - 1]
            top = cur[d - 1]
            if top:
                base = rows[d]
                for j in range(d):
                    nxt[j] += top * base[j]
            cur = nxt
            rows[k] = tuple(cur)
        self._reduction_rows = rows
        self._zeta_powers = None

    # -- element construction -------------------------------------------------

    def element(self, coeffs):
        d = self.degree
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > d:
            raise ValueError("coefficient vector too long")
        cs += [_ZERO] * (d - len(cs))
        return CycloElement(self, tuple(cs))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def zeta(self, power=1):
        """zeta_n raised to the given power, reduced to the power basis."""
        if self._zeta_powers is None:
            z = self.element([0, 1])
            powers = [self.one()]
            for _ in range(self.n - 1):
                powers.append(powers[-1] * z)
            self._zeta_powers = powers
        return self._zeta_powers[power % self.n]

    def __repr__(self):
        return f"CyclotomicField({self.n})"


_FIELD_CACHE = {}


def cyclotomic_field(n):
    if n not in _FIELD_CACHE:
        _FIELD_CACHE[n] = CyclotomicField(n)
    return _FIELD_CACHE[n]


class CycloElement:
    """Element of a cyclotomic field, as a Fraction vector on the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _new(self, coeffs):
        obj = object.__new__(type(self))
        obj.field = self.field
        obj.coeffs = coeffs
        return obj

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            if other.field.n != self.field.n:
                raise ValueError("mixed cyclotomic fields; convert explicitly")
            return other
        if isinstance(other, (int, Fraction)):
            d = self.field.degree
            return self._new((Fraction(other),) + (_ZERO,) * (d - 1))
        if isinstance(other, QuadraticElement) and self.field.n == 60:
            return to_ambient(other)
        return None

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return self._new(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        a, b = self.coeffs, o.coeffs
        conv = [_ZERO] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        rows = self.field._reduction_rows
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = rows[k]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return self._new(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self._new((_ONE,) + (_ZERO,) * (self.field.degree - 1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Extended Euclid against the field modulus."""
        if not self:
            raise DivisionByZero("inverse of zero cyclotomic element")
        mod = [Fraction(c) for c in self.field.modulus]
        r0, r1 = mod, list(self.coeffs)
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [], [_ONE]
        while True:
            # r1 nonzero here; divide r0 by r1
            q = []
            rem = list(r0)
            dn = len(r1) - 1
            lead = r1[dn]
            q = [_ZERO] * max(len(rem) - dn, 0)
            for k in range(len(rem) - dn - 1, -1, -1):
                c = rem[k + dn] / lead
                q[k] = c
                if c:
                    for j in range(dn + 1):
                        rem[k + j] -= c * r1[j]
            while rem and not rem[-1]:
                rem.pop()
            s_next = list(s0)
            # s_next = s0 - q*s1
            prod = [_ZERO] * (len(q) + len(s1) - 1 if q and s1 else 0)
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(s1):
                        prod[i + j] += x * y
            n = max(len(s_next), len(prod))
            s_next += [_ZERO] * (n - len(s_next))
            for i, x in enumerate(prod):
                s_next[i] -= x
            if not rem:
                # r1 is the gcd; must be a nonzero constant
                if len(r1) != 1:
                    raise ArithmeticError("modulus not coprime with element")
                inv = [c / r1[0] for c in s1]
                d = self.field.degree
                inv = inv[:d] + [_ZERO] * max(0, d - len(inv))
                return self._new(tuple(inv))
            r0, r1 = r1, rem
            s0, s1 = s1, s_next

    # -- predicates and conversions -------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.n == o.field.n and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.n, self.coeffs))

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __repr__(self):
        terms = [f"{c}*z{self.field.n}^{k}" if k else str(c)
                 for k, c in enumerate(self.coeffs) if c]
        return "(" + (" + ".join(terms) if terms else "0") + ")"


class AlgebraicNumber(CycloElement):
    """Element of the ambient degree-16 field (order-60 root of unity)."""

    def __init__(self, coeffs=()):
        field = cyclotomic_field(60)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > 16:
            raise ValueError("ambient field elements have 16 coefficients")
        cs += [_ZERO] * (16 - len(cs))
        super().__init__(field, tuple(cs))


def algebraic(coeffs=()):
    return AlgebraicNumber(coeffs)


def algebraic_to_json(x):
    return [str(c) for c in x.coeffs]


def algebraic_from_json(items):
    return AlgebraicNumber([Fraction(s) for s in items])


# ----------------------------------------------------------------------------
# embeddings between the ambient field and its cyclotomic subfields
# ----------------------------------------------------------------------------

_EMBED_CACHE = {}


def _subfield_basis_images(n):
    """Images of the power basis of the order-n field inside the ambient one."""
    if n not in _EMBED_CACHE:
        if 60 % n != 0:
            raise ValueError("not a subfield order")
        amb = cyclotomic_field(60)
        step = 60 // n
        k = cyclotomic_field(n).degree
        imgs = []
        for j in range(k):
            z = amb.zeta(step * j)
            imgs.append(AlgebraicNumber(z.coeffs))
        _EMBED_CACHE[n] = imgs
    return _EMBED_CACHE[n]


def to_ambient(x):
    """Embed a subfield or quadratic-field element into the ambient field."""
    if isinstance(x, AlgebraicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicNumber([x])
    if isinstance(x, QuadraticElement):
        return SQRT_BY_CLASS[x.D] * x.b + x.a
    imgs = _subfield_basis_images(x.field.n)
    acc = AlgebraicNumber()
    for c, img in zip(x.coeffs, imgs):
        if c:
            acc = acc + img * c
    return acc


def to_subfield(x, n):
    """Project an ambient element into the order-n subfield, or None."""
    imgs = _subfield_basis_images(n)
    k = len(imgs)
    # solve sum_j c_j * imgs[j] == x  (16 equations, k unknowns)
    rows = [[imgs[j].coeffs[i] for j in range(k)] + [x.coeffs[i]]
            for i in range(16)]
    sol = _solve_overdetermined(rows, k)
    if sol is None:
        return None
    return cyclotomic_field(n).element(sol)


def _solve_overdetermined(rows, k):
    """Gaussian elimination for a consistent overdetermined system, or None."""
    m = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][k]:
            return None
    sol = [_ZERO] * k
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][k]
    # columns without pivots stay zero; verify nothing was underdetermined
    for i in range(r):
        lhs = sum(m[i][j] * sol[j] for j in range(k))
        if lhs != m[i][k]:
            return None
    return sol


# ----------------------------------------------------------------------------
# distinguished constants (ambient field)
# ----------------------------------------------------------------------------

def _Z(k):
    return AlgebraicNumber(cyclotomic_field(60).zeta(k).coeffs)


ZETA = _Z(1)
I_UNIT = _Z(15)                       # the square root of -1 with positive imaginary part
EPSILON5 = _Z(12)                     # primitive 5th root, smallest positive argument
EPSILON3 = _Z(40)                     # primitive cube root with negative imaginary part
OMEGA = _Z(12) + _Z(48)               # (-1 + sqrt5)/2, the golden-section cosine
THETA = _Z(12) - _Z(48)               # purely imaginary generator of Q(zeta5) over Q(sqrt5)

SQRT5 = OMEGA * 2 + 1                 # positive real square root of 5
SQRTM3 = _Z(20) * 2 + 1               # i*sqrt3, positive imaginary part
SQRT3 = -I_UNIT * SQRTM3              # positive real square root of 3
SQRTM1 = I_UNIT
SQRT15 = SQRT3 * SQRT5
SQRTM5 = I_UNIT * SQRT5
SQRTM15 = I_UNIT * SQRT15

# pinned square roots of the square classes present in the ambient field;
# convention: positive real for positive D, positive imaginary for negative D
SQRT_BY_CLASS = {
    5: SQRT5, 3: SQRT3, 15: SQRT15,
    -1: SQRTM1, -3: SQRTM3, -5: SQRTM5, -15: SQRTM15,
}


def cyclo_arith(x, y, op):
    """Field arithmetic on ambient elements; op in add/sub/mul/div."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise DivisionByZero("division by zero in the ambient field")
        return x / y
    raise ValueError(f"unknown op {op!r}")


# ----------------------------------------------------------------------------
# square roots in the ambient field (quadratic tower descent)
# ----------------------------------------------------------------------------

# mixed basis: products of tower generators, index bits (1=sqrt5, 2=theta,
# 4=i, 8=sqrt3); bit k set means the corresponding generator is a factor
_MIXED_STATE = {}


def _mixed_state():
    if not _MIXED_STATE:
        gens = [SQRT5, THETA, I_UNIT, SQRT3]
        basis = []
        for mask in range(16):
            v = AlgebraicNumber([1])
            for b in range(4):
                if mask & (1 << b):
                    v = v * gens[b]
            basis.append(v)
        cols = [list(v.coeffs) for v in basis]
        # invert the 16x16 change-of-basis matrix (columns = basis vectors)
        n = 16
        aug = [[cols[j][i] for j in range(n)] + [_ONE if i == j2 else _ZERO
               for j2 in range(n)] for i in range(n)]
        for c in range(n):
            p = next(i for i in range(c, n) if aug[i][c])
            aug[c], aug[p] = aug[p], aug[c]
            lead = aug[c][c]
            aug[c] = [v / lead for v in aug[c]]
            for i in range(n):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
        inv = [row[n:] for row in aug]
        _MIXED_STATE["basis"] = basis
        _MIXED_STATE["inv"] = inv
        _MIXED_STATE["gens"] = gens
        # squares of the tower generators, as elements of the level below
        _MIXED_STATE["gen_squares"] = [
            AlgebraicNumber([5]), THETA * THETA, AlgebraicNumber([-1]),
            AlgebraicNumber([3]),
        ]
    return _MIXED_STATE


def _to_mixed(x):
    inv = _mixed_state()["inv"]
    return [sum(row[j] * x.coeffs[j] for j in range(16)) for row in inv]


def _from_mixed(vec):
    basis = _mixed_state()["basis"]
    acc = AlgebraicNumber()
    for c, v in zip(vec, basis):
        if c:
            acc = acc + v * c
    return acc


def rational_square_root(q):
    """Exact square root of a Fraction, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _sqrt_descend(x, bit):
    """Square root of x, whose mixed support uses only generator bits < 2*bit."""
    st = _mixed_state()
    if bit == 0:
        # x must be rational
        mix = _to_mixed(x)
        if any(mix[1:]):
            return None
        r = rational_square_root(mix[0])
        return None if r is None else AlgebraicNumber([r])
    level_bit = bit
    mix = _to_mixed(x)
    lo = [_ZERO] * 16
    hi = [_ZERO] * 16
    for idx in range(16):
        if not mix[idx]:
            continue
        if idx & ~(2 * level_bit - 1):
            raise ValueError("element outside the claimed tower level")
        if idx & level_bit:
            hi[idx & ~level_bit] = mix[idx]
        else:
            lo[idx] = mix[idx]
    gi = level_bit.bit_length() - 1
    gen = st["gens"][gi]
    msq = st["gen_squares"][gi]
    a = _from_mixed(lo)
    b = _from_mixed(hi)
    nb = bit >> 1
    if not b:
        r = _sqrt_descend(a, nb)
        if r is not None:
            return r
        r = _sqrt_descend(a / msq, nb)
        if r is not None:
            return r * gen
        return None
    norm = a * a - msq * b * b
    n = _sqrt_descend(norm, nb)
    if n is None:
        return None
    for sgn in (1, -1):
        y2 = (a + n * sgn) / (msq * 2)
        y = _sqrt_descend(y2, nb)
        if y is None or not y:
            continue
        cand = b / (y * 2) + y * gen
        if cand * cand == x:
            return cand
    return None


def cyclo_sqrt(x):
    """A square root of x in the ambient field, or None if none exists."""
    if not x:
        return AlgebraicNumber()
    return _sqrt_descend(to_ambient(x), 8)


# ----------------------------------------------------------------------------
# quadratic subfield elements
# ----------------------------------------------------------------------------

class QuadraticElement:
    """a + b*sqrt(D) with rational a, b and a fixed squarefree integer D."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b, D):
        if D in (0, 1):
            raise ValueError("D must be a nonsquare integer")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.D = int(D)

    def _coerce(self, other):
        if isinstance(other, QuadraticElement):
            if other.D != self.D:
                raise ValueError("mixed quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticElement(other, 0, self.D)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadraticElement(-self.a, -self.b, self.D)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement(self.a * o.a + self.D * self.b * o.b,
                                self.a * o.b + self.b * o.a, self.D)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - self.D * self.b * self.b
        if n == 0:
            raise DivisionByZero("inverse of zero quadratic element")
        return QuadraticElement(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadraticElement(1, 0, self.D)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def conjugate(self):
        return QuadraticElement(self.a, -self.b, self.D)

    def is_rational(self):
        return self.b == 0

    def to_json(self):
        return {"a": str(self.a), "b": str(self.b), "D": str(self.D)}

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.D}))"


def embed_subfield(x):
    """Express an ambient element inside Q or a quadratic subfield.

    Returns a Fraction for rational input, a QuadraticElement for an element
    of degree two, and raises otherwise.
    """
    x = to_ambient(x)
    if x.is_rational():
        return x.rational_value()
    sq = x * x
    # solve sq == alpha*x + beta
    rows = [[x.coeffs[i], _ONE if i == 0 else _ZERO, sq.coeffs[i]]
            for i in range(16)]
    sol = _solve_overdetermined(rows, 2)
    if sol is None:
        raise NotInQuadraticSubfield(
            "element generates a subfield of degree above two")
    alpha, beta = sol
    half_trace = alpha / 2
    t = x - half_trace
    quarter_disc = beta + half_trace * half_trace   # t^2, a rational
    if quarter_disc == 0:
        raise NotInQuadraticSubfield("degenerate quadratic relation")
    D = squarefree_part(quarter_disc.numerator * quarter_disc.denominator)
    root = SQRT_BY_CLASS.get(D)
    if root is None:
        raise NotInQuadraticSubfield(
            f"square class {D} does not occur in the ambient field")
    ratio = t / root
    if not ratio.is_rational():
        raise NotInQuadraticSubfield("inconsistent quadratic embedding")
    return QuadraticElement(half_trace, ratio.rational_value(), D)


# ----------------------------------------------------------------------------
# integer factor utilities
# ----------------------------------------------------------------------------

def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n, max_iter):
    """One Brent-cycle factor attempt; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ (n & 0xFFFFFFFF))
    for _ in range(8):
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        count = 0
        while g == 1 and count < max_iter:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
                count += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def _factor_bounded(n, max_iter):
    """Factor n into primes; raises IcosaError when effort runs out."""
    if n == 1:
        return {}
    factors = {}
    for p in range(2, 100000):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        if p * p > n:
            break
    if n == 1:
        return factors
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend([r, r])
            continue
        g = _brent_rho(m, max_iter)
        if g is None:
            raise IcosaError("integer factorisation effort exhausted",
                             remaining=m)
        stack.extend([g, m // g])
    return factors


def squarefree_part(n, max_iter=2_000_000):
    """The squarefree integer d with n = d * (square); sign preserved."""
    n = int(n)
    if n == 0:
        raise ValueError("squarefree part of zero")
    sign = -1 if n < 0 else 1
    factors = _factor_bounded(abs(n), max_iter)
    d = 1
    for p, e in factors.items():
        if e % 2:
            d *= p
    return sign * d


# ----------------------------------------------------------------------------
# integer vector fast path (internal)
# ----------------------------------------------------------------------------

class IntVectorOps:
    """Arithmetic on integer coefficient vectors of a cyclotomic order.

    Used by hot loops that clear denominators first; the scalar they drop is
    tracked by the caller.  Vectors are plain tuples of ints.
    """

    __slots__ = ("n", "degree", "rows")

    _CACHE = {}

    def __new__(cls, n):
        if n in cls._CACHE:
            return cls._CACHE[n]
        self = object.__new__(cls)
        field = cyclotomic_field(n)
        self.n = n
        self.degree = field.degree
        self.rows = {k: tuple(int(c) for c in row)
                     for k, row in field._reduction_rows.items()}
        cls._CACHE[n] = self
        return self

    def zero(self):
        return (0,) * self.degree

    def one(self):
        return (1,) + (0,) * (self.degree - 1)

    def mul(self, a, b):
        d = self.degree
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = self.rows[k]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return tuple(out)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def scale(self, a, c):
        return tuple(x * c for x in a)

    def from_element(self, e):
        """Clear denominators; returns (int vector, denominator)."""
        den = 1
        for c in e.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return tuple(int(c * den) for c in e.coeffs), den
