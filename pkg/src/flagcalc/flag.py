"""Geometry of the flag threefold F = {(p, l) in P2 x P2 : p.l = 0}.

The module provides points of F, the bidegree (1,1) curves
L_{q,m} = {p.m = 0, q.l = 0} (smooth conics when q.m != 0, twistor fibers
when m is the conjugate of q), the anti-holomorphic involution
j(p, l) = (conj l, conj p) acting on curves and on surfaces, restriction of
surfaces to conics, and bidegrees of rational parametrized curves.

Projective points are kept in canonical form (first nonzero coordinate
equal to 1) so equality and hashing are exact.
"""

from __future__ import annotations

from .binforms import BinaryForm, bf_div_exact, triple_gcd, zero_form
from .biforms import BiForm, proportionality as _proportionality
from .errors import DegenerateConicError, PreconditionError
from .gaussian import ONE, ZERO, GaussianRational
from .sampling import SplitMix64


def dot(u, v) -> GaussianRational:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _coerce_triple(coords):
    out = tuple(c if isinstance(c, GaussianRational) else GaussianRational(c) for c in coords)
    if len(out) != 3:
        raise PreconditionError("a projective point needs exactly 3 coordinates")
    return out


class ProjPoint:
    """A point of P2 over Q(i), stored with first nonzero coordinate 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        raw = _coerce_triple(coords)
        pivot = next((c for c in raw if c), None)
        if pivot is None:
            raise PreconditionError("(0, 0, 0) is not a projective point")
        self.coords = tuple(c / pivot for c in raw)

    def conjugate(self) -> "ProjPoint":
        return ProjPoint(tuple(c.conjugate() for c in self.coords))

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"ProjPoint(({', '.join(str(c) for c in self.coords)}))"


class FlagPoint:
    """A pair (p, l) with the incidence p.l = 0 holding exactly."""

    __slots__ = ("p", "l")

    def __init__(self, p, l):
        self.p = p if isinstance(p, ProjPoint) else ProjPoint(p)
        self.l = l if isinstance(l, ProjPoint) else ProjPoint(l)
        if dot(self.p.coords, self.l.coords):
            raise PreconditionError("point-line pair is not incident")

    def __eq__(self, other):
        if not isinstance(other, FlagPoint):
            return NotImplemented
        return self.p == other.p and self.l == other.l

    def __hash__(self):
        return hash((self.p, self.l))

    def __repr__(self):
        return f"FlagPoint({self.p!r}, {self.l!r})"


class Conic:
    """The bidegree (1,1) curve L_{q,m} = {(p,l) in F : p.m = 0, q.l = 0}."""

    __slots__ = ("q", "m", "is_smooth")

    def __init__(self, q, m):
        self.q = q if isinstance(q, ProjPoint) else ProjPoint(q)
        self.m = m if isinstance(m, ProjPoint) else ProjPoint(m)
        self.is_smooth = bool(dot(self.q.coords, self.m.coords))

    def is_twistor_fiber(self) -> bool:
        return self.m == self.q.conjugate()

    def __eq__(self, other):
        if not isinstance(other, Conic):
            return NotImplemented
        return self.q == other.q and self.m == other.m

    def __hash__(self):
        return hash((self.q, self.m))

    def __repr__(self):
        return f"Conic(q={self.q!r}, m={self.m!r})"


def twistor_fiber_of(q) -> Conic:
    """The twistor fiber over q, namely L_{q, conj(q)}.

    Always smooth: q.conj(q) is the coordinate norm sum, positive for q != 0.
    """
    q = q if isinstance(q, ProjPoint) else ProjPoint(q)
    return Conic(q, q.conjugate())


def j_conic(C: Conic) -> Conic:
    """Image of L_{q,m} under j(p,l) = (conj l, conj p): the curve
    L_{conj m, conj q}.  An involution whose fixed points are exactly the
    twistor fibers."""
    return Conic(C.m.conjugate(), C.q.conjugate())


class FlagCurve:
    """A rational curve in F given by two triples of binary forms.

    p_forms parametrizes the point component and l_forms the line component;
    the incidence pairing p(s,t).l(s,t) must vanish identically.
    """

    __slots__ = ("p_forms", "l_forms")

    def __init__(self, p_forms, l_forms):
        self.p_forms = _validate_triple(p_forms, "p")
        self.l_forms = _validate_triple(l_forms, "l")
        pairing = _triple_pairing(self.p_forms, self.l_forms)
        if not pairing.is_zero():
            raise PreconditionError("parametrization is not incident: p.l != 0")

    def point_at(self, s, t) -> FlagPoint:
        p = tuple(f.evaluate(s, t) for f in self.p_forms)
        l = tuple(f.evaluate(s, t) for f in self.l_forms)
        return FlagPoint(p, l)


def _validate_triple(forms, label):
    forms = tuple(f if isinstance(f, BinaryForm) else BinaryForm(f) for f in forms)
    if len(forms) != 3:
        raise PreconditionError(f"{label}-triple needs exactly 3 forms")
    if len({f.degree for f in forms}) != 1:
        raise PreconditionError(f"{label}-triple forms must share one degree")
    if all(f.is_zero() for f in forms):
        raise PreconditionError(f"{label}-triple is identically zero")
    return forms


def _triple_pairing(p_forms, l_forms) -> BinaryForm:
    acc = zero_form(p_forms[0].degree + l_forms[0].degree)
    for f, g in zip(p_forms, l_forms):
        acc = acc + f * g
    return acc


def line_basis(m, pivot: int | None = None):
    """Two independent points spanning the line {p : p.m = 0}.

    Deterministic chart: with i the first nonzero coordinate of m (or the
    requested pivot) and j, k the remaining indices in order, the basis is
    m_i e_j - m_j e_i and m_i e_k - m_k e_i.  The chart degenerates exactly
    when m_i = 0.
    """
    i = pivot if pivot is not None else next(idx for idx in range(3) if m[idx])
    if not m[i]:
        raise PreconditionError("chart pivot coordinate vanishes")
    j, k = [idx for idx in range(3) if idx != i]
    v1 = [ZERO, ZERO, ZERO]
    v2 = [ZERO, ZERO, ZERO]
    v1[j], v1[i] = m[i], -m[j]
    v2[k], v2[i] = m[i], -m[k]
    return tuple(v1), tuple(v2)


def parametrize_conic_pair(q, m):
    """Degree-1 form triples sweeping L_{q,m} from raw coordinate triples."""
    v1, v2 = line_basis(m)
    p_forms = tuple(BinaryForm([v1[c], v2[c]]) for c in range(3))
    l1, l2 = cross(q, v1), cross(q, v2)
    l_forms = tuple(BinaryForm([l1[c], l2[c]]) for c in range(3))
    return p_forms, l_forms


def conic_param(C: Conic) -> FlagCurve:
    """Injective degree-1 parametrization of a smooth conic.

    p(s,t) spans the line {p.m = 0} and l(s,t) = q x p(s,t); the three
    defining equations p.m = 0, q.l = 0, p.l = 0 then hold identically.
    """
    if not C.is_smooth:
        raise DegenerateConicError("cannot parametrize a degenerate conic (q.m = 0)")
    p_forms, l_forms = parametrize_conic_pair(C.q.coords, C.m.coords)
    curve = FlagCurve(p_forms, l_forms)
    assert _pm_pairing(curve.p_forms, C.m.coords).is_zero()
    assert _pm_pairing(curve.l_forms, C.q.coords).is_zero()
    return curve


def _pm_pairing(forms, const_triple) -> BinaryForm:
    d = forms[0].degree
    acc = zero_form(d)
    for f, c in zip(forms, const_triple):
        acc = acc + f.scale(c)
    return acc


def substitute_forms(F: BiForm, p_forms, l_forms) -> BinaryForm:
    """Pull a biform back along a parametrized curve, giving a binary form."""
    a, b = F.bidegree
    dp = p_forms[0].degree
    dl = l_forms[0].degree
    out_deg = a * dp + b * dl
    p_pows = [_form_powers(f, a) for f in p_forms]
    l_pows = [_form_powers(f, b) for f in l_forms]
    acc = [ZERO] * (out_deg + 1)
    for (pe, le), c in F.terms.items():
        prod = None
        for i in range(3):
            if pe[i]:
                prod = p_pows[i][pe[i]] if prod is None else prod * p_pows[i][pe[i]]
        for i in range(3):
            if le[i]:
                prod = l_pows[i][le[i]] if prod is None else prod * l_pows[i][le[i]]
        if prod is None:
            acc[0] = acc[0] + c
            continue
        offset = out_deg - prod.degree
        for k, pc in enumerate(prod.coeffs):
            if pc:
                acc[k + offset] = acc[k + offset] + c * pc
    return BinaryForm(acc)


def _form_powers(f: BinaryForm, n: int):
    out = [BinaryForm([ONE])]
    for _ in range(n):
        out.append(out[-1] * f)
    return out


def restrict_to_curve(F: BiForm, curve: FlagCurve) -> BinaryForm:
    return substitute_forms(F, curve.p_forms, curve.l_forms)


def restrict_to_conic(F: BiForm, C: Conic) -> BinaryForm:
    """Binary form of degree a+b: F pulled back along the conic.

    Identically zero exactly when L_{q,m} lies on the surface {F = 0}.
    """
    return restrict_to_curve(F, conic_param(C))


def contains_conic(F: BiForm, C: Conic) -> bool:
    """Whether {F = 0} contains the smooth conic C; all a+b+1 restriction
    coefficients must vanish."""
    return restrict_to_conic(F, C).is_zero()


def conics_disjoint(C1: Conic, C2: Conic) -> bool:
    """Whether two distinct smooth conics have empty intersection.

    When the q's and the m's are both non-proportional, the candidate
    intersection point is forced: p = m1 x m2 and l = q1 x q2, so the conics
    meet exactly when (m1 x m2).(q1 x q2) = 0.  When either pair coincides,
    one of p or l moves in a pencil and a common point always exists.
    """
    if not (C1.is_smooth and C2.is_smooth):
        raise DegenerateConicError("disjointness is defined for smooth conics")
    if C1 == C2:
        raise PreconditionError("conics must be distinct")
    if C1.q == C2.q or C1.m == C2.m:
        return False
    w = dot(cross(C1.m.coords, C2.m.coords), cross(C1.q.coords, C2.q.coords))
    return bool(w)


def conics_meet_bruteforce(C1: Conic, C2: Conic) -> bool:
    """Independent oracle: solve the five linear conditions directly.

    Computes the solution spaces of {p.m1 = p.m2 = 0} and
    {q1.l = q2.l = 0} by exact nullspace and decides whether p.l = 0 is
    solvable there.
    """
    from . import linalg

    p_space = linalg.nullspace([list(C1.m.coords), list(C2.m.coords)])
    l_space = linalg.nullspace([list(C1.q.coords), list(C2.q.coords)])
    if len(p_space) >= 2 or len(l_space) >= 2:
        return True
    return not dot(p_space[0], l_space[0])


DEFAULT_BIDEGREE_SEED = 0x5EED1


def curve_bidegree(curve: FlagCurve, seed: int = DEFAULT_BIDEGREE_SEED):
    """Intersection numbers (d1, d2) of the curve with the two plane classes.

    d1 is the degree of the pairing of the gcd-reduced p-triple with a
    random constant line, and symmetrically for d2.  Three independent
    draws must agree; with exact arithmetic a disagreement can only come
    from the pairing vanishing identically, which is resampled away.
    """
    rng = SplitMix64(seed)
    d1 = _pairing_degree(curve.p_forms, rng)
    d2 = _pairing_degree(curve.l_forms, rng)
    return d1, d2


def _pairing_degree(forms, rng) -> int:
    g = triple_gcd(forms)
    reduced = tuple(
        bf_div_exact(f, g) if not f.is_zero() else zero_form(f.degree - g.degree)
        for f in forms
    )
    votes = []
    for _ in range(12):
        const = tuple(
            GaussianRational(rng.int_in(-50, 50), rng.int_in(-50, 50)) for _ in range(3)
        )
        pairing = _pm_pairing(reduced, const)
        if pairing.is_zero():
            continue
        votes.append(pairing.degree)
        if len(votes) == 3:
            break
    if len(votes) < 3:
        raise PreconditionError("degenerate parametrization: pairing vanishes identically")
    return max(set(votes), key=votes.count)


def j_pullback(F: BiForm) -> BiForm:
    """Pullback of a surface form under j: coefficients are conjugated and
    the roles of the p and l variables are exchanged, so bidegree (a, b)
    becomes (b, a).  Applying it twice gives back F exactly."""
    a, b = F.bidegree
    out = {}
    for (pe, le), c in F.terms.items():
        out[(le, pe)] = c.conjugate()
    return BiForm((b, a), out)


def is_j_invariant(F: BiForm) -> bool:
    """Whether j*F is a nonzero scalar multiple of F (exact comparison).

    Only meaningful for square bidegree (a, a); anything else is rejected.
    """
    a, b = F.bidegree
    if a != b:
        raise PreconditionError("j-invariance needs bidegree of the form (a, a)")
    if F.is_zero():
        return True
    return _proportionality(j_pullback(F), F) is not None
