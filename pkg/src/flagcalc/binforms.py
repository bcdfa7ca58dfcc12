"""Binary forms in (s, t) over Q(i): evaluation, gcd, Sylvester resultants.

A form of degree d is stored as the tuple of its d+1 coefficients, where
``coeffs[k]`` multiplies s^(d-k) * t^k.  Dehomogenizing at s = 1 maps the
form to the univariate polynomial sum coeffs[k] * x^k; the drop between d
and the degree of that polynomial counts the multiplicity of s as a factor.
"""

from __future__ import annotations

from .errors import PreconditionError
from .gaussian import ONE, ZERO, GaussianRational


def _coerce_scalar(c):
    return c if isinstance(c, GaussianRational) else GaussianRational(c)


class BinaryForm:
    """Homogeneous polynomial in (s, t); coeffs[k] is the s^(d-k) t^k coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(_coerce_scalar(c) for c in coeffs)
        if not cs:
            raise PreconditionError("a binary form needs at least one coefficient")
        self.coeffs = cs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def evaluate(self, s, t) -> GaussianRational:
        s = _coerce_scalar(s)
        t = _coerce_scalar(t)
        d = self.degree
        spow = [ONE]
        tpow = [ONE]
        for _ in range(d):
            spow.append(spow[-1] * s)
            tpow.append(tpow[-1] * t)
        acc = ZERO
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * spow[d - k] * tpow[k]
        return acc

    def scale(self, c) -> "BinaryForm":
        c = _coerce_scalar(c)
        return BinaryForm(tuple(x * c for x in self.coeffs))

    def normalized(self) -> "BinaryForm":
        """Scale so the first nonzero coefficient equals 1."""
        for c in self.coeffs:
            if c:
                return self.scale(ONE / c)
        return self

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise PreconditionError("cannot add binary forms of different degree")
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise PreconditionError("cannot subtract binary forms of different degree")
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return BinaryForm(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return BinaryForm(out)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BinaryForm({[str(c) for c in self.coeffs]})"


def binary_form(coeffs) -> BinaryForm:
    return coeffs if isinstance(coeffs, BinaryForm) else BinaryForm(coeffs)


def zero_form(degree: int) -> BinaryForm:
    return BinaryForm([ZERO] * (degree + 1))


# Univariate helpers on ascending coefficient lists over Q(i).

def _pdeg(u) -> int:
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i
    return -1


def _pdivmod(num, den):
    dn = _pdeg(den)
    if dn < 0:
        raise PreconditionError("polynomial division by zero")
    r = list(num)
    q = [ZERO] * max(_pdeg(num) - dn + 1, 1)
    while True:
        dr = _pdeg(r)
        if dr < dn:
            break
        c = r[dr] / den[dn]
        q[dr - dn] = c
        for i in range(dn + 1):
            r[dr - dn + i] = r[dr - dn + i] - c * den[i]
    return q, r


def _pmonic(u):
    d = _pdeg(u)
    lead = u[d]
    return [c / lead for c in u[: d + 1]]


def _pgcd(u, v):
    a = u[: _pdeg(u) + 1]
    b = v[: _pdeg(v) + 1]
    if _pdeg(a) < _pdeg(b):
        a, b = b, a
    while _pdeg(b) >= 0:
        b = _pmonic(b)
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _pmonic(a)


def bf_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Greatest common divisor, with first nonzero coefficient scaled to 1.

    Common roots at (0, 1) show up as a shared power of s, detected through
    the degree drop of the dehomogenizations; everything else is a Euclidean
    gcd of univariate polynomials over Q(i).
    """
    fz, gz = f.is_zero(), g.is_zero()
    if fz and gz:
        raise PreconditionError("gcd of two zero forms is undefined")
    if fz:
        return g.normalized()
    if gz:
        return f.normalized()
    uf = list(f.coeffs)
    ug = list(g.coeffs)
    ef, eg = _pdeg(uf), _pdeg(ug)
    s_mult = min(f.degree - ef, g.degree - eg)
    u = _pgcd(uf[: ef + 1], ug[: eg + 1])
    return BinaryForm(u + [ZERO] * s_mult).normalized()


def triple_gcd(forms) -> BinaryForm:
    """gcd of the nonzero members of a form triple."""
    nz = [f for f in forms if not f.is_zero()]
    if not nz:
        raise PreconditionError("gcd of an identically zero triple")
    g = nz[0]
    for f in nz[1:]:
        g = bf_gcd(g, f)
    return g.normalized()


def bf_div_exact(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Quotient f / g when g divides f exactly."""
    if g.is_zero():
        raise PreconditionError("division by the zero form")
    if f.is_zero():
        if f.degree < g.degree:
            raise PreconditionError("degree of divisor exceeds degree of dividend")
        return zero_form(f.degree - g.degree)
    uf, ug = list(f.coeffs), list(g.coeffs)
    ef, eg = _pdeg(uf), _pdeg(ug)
    sf, sg = f.degree - ef, g.degree - eg
    if sf < sg:
        raise PreconditionError("form does not divide: s-multiplicity deficit")
    q, r = _pdivmod(uf[: ef + 1], ug[: eg + 1])
    if _pdeg(r) >= 0:
        raise PreconditionError("form does not divide exactly")
    q = q + [ZERO] * max(ef - eg - _pdeg(q), 0)
    return BinaryForm(q[: ef - eg + 1] + [ZERO] * (sf - sg))


def bf_divides(g: BinaryForm, f: BinaryForm) -> bool:
    try:
        bf_div_exact(f, g)
        return True
    except PreconditionError:
        return False


def sylvester_resultant(f: BinaryForm, g: BinaryForm) -> GaussianRational:
    """Resultant of forms of positive degrees m and n, as the (m+n)-square
    Sylvester determinant of their coefficient sequences."""
    from . import linalg

    m, n = f.degree, g.degree
    if m < 1 or n < 1:
        raise PreconditionError("resultant needs both degrees >= 1")
    size = m + n
    rows = []
    for r in range(n):
        rows.append([ZERO] * r + list(f.coeffs) + [ZERO] * (size - m - 1 - r))
    for r in range(m):
        rows.append([ZERO] * r + list(g.coeffs) + [ZERO] * (size - n - 1 - r))
    return linalg.det(rows)


def bf_resultant(f: BinaryForm, g: BinaryForm) -> GaussianRational:
    """Resultant of two binary forms of the same degree d >= 1.

    This is the determinant of the 2d x 2d Sylvester matrix; it vanishes
    exactly when f and g share a projective root.
    """
    if f.degree != g.degree:
        raise PreconditionError("bf_resultant requires equal degrees")
    return sylvester_resultant(f, g)
