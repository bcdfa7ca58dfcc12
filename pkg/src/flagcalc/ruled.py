"""Surfaces of bidegree (a, a) ruled by a circle's worth of twistor fibers.

Given a gcd-free triple f = (f0, f1, f2) of real binary forms of degree
a >= 2 that parametrizes a plane curve birationally, the surface swept by
the conics L_{f(t), f(t)} is cut out by the resultant in the parameter of
the two pencils

    P(s, t) = p . f(s, t)      and      L(s, t) = l . f(s, t),

a bihomogeneous form of bidegree (a, a) with real coefficients.  At every
real parameter (including infinity) the swept conic is a twistor fiber, so
the surface contains infinitely many of them; the affine parameter k maps
to (s, t) = (k, 1) and infinity to (1, 0).

Containment of the whole one-parameter family is certified by sampling:
on a fixed coordinate chart the coefficients of the restriction are
polynomials in the parameter of explicitly bounded degree, so vanishing at
bound + 1 distinct rational parameters proves identical vanishing, and the
three charts cover the parameter line because the triple is gcd-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binforms import BinaryForm, triple_gcd
from .biforms import BiForm
from .errors import PreconditionError
from .flag import (
    Conic,
    conics_disjoint,
    contains_conic,
    cross,
    j_pullback,
    line_basis,
    restrict_to_conic,
    substitute_forms,
    twistor_fiber_of,
)
from .gaussian import GaussianRational
from .linsys import SingularWitness, conic_singularity_witness
from .sampling import SplitMix64

DEFAULT_RULED_SEED = 0x52D


@dataclass
class RuledSurfaceSpec:
    """A constructed ruled surface together with its verification data."""

    forms: tuple[BinaryForm, BinaryForm, BinaryForm]
    degree: int
    surface: BiForm
    witness_params: list
    certificate: dict


def twistor_ruled_surface(
    forms,
    seed: int = DEFAULT_RULED_SEED,
    positivity_check: bool = True,
    certify: bool = True,
) -> RuledSurfaceSpec:
    """Build the bidegree (a, a) surface swept by the conics L_{f(t), f(t)}.

    Preconditions: real coefficients, common degree a >= 2, trivial gcd,
    and t -> f(t) birational onto its image (probed on three random image
    points by exact preimage count).  The result is never certified
    irreducible; factorization over Q(i) is out of scope.
    """
    forms = tuple(f if isinstance(f, BinaryForm) else BinaryForm(f) for f in forms)
    if len(forms) != 3:
        raise PreconditionError("the ruling needs exactly three binary forms")
    degrees = {f.degree for f in forms}
    if len(degrees) != 1:
        raise PreconditionError("the three forms must share one degree")
    a = degrees.pop()
    if a < 2:
        raise PreconditionError("the construction needs degree a >= 2")
    for f in forms:
        if any(not c.is_real() for c in f.coeffs):
            raise PreconditionError("the forms must have real coefficients")
    g = triple_gcd(forms)
    if g.degree > 0:
        raise PreconditionError("the forms share a common factor")
    _check_birational(forms, seed)
    if positivity_check:
        _positivity_certificate(forms)

    surface = _parameter_resultant(forms)
    if surface.is_zero():
        raise PreconditionError("the parameter resultant vanishes identically")
    if any(not c.is_real() for c in surface.terms.values()):
        raise PreconditionError("resultant unexpectedly has nonreal coefficients")
    # Swapping the two coefficient blocks of the Sylvester matrix shows
    # j*S = (-1)^a S; with real coefficients the sign cannot be scaled away
    # for odd a, so exact j-invariance is recorded as proportionality.
    expected = surface if a % 2 == 0 else -surface
    if j_pullback(surface) != expected:
        raise PreconditionError("resultant lost its j-symmetry")

    witness_params = []
    for s, t in _sample_parameters(a + 3):
        C = _fiber_at(forms, s, t)
        if not contains_conic(surface, C):
            raise PreconditionError("a sampled twistor fiber escapes the surface")
        witness_params.append(((s, t), C))

    certificate = (
        containment_certificate(forms, surface, seed=seed)
        if certify
        else {"passed": None, "skipped": True}
    )
    if certify and not certificate["passed"]:
        raise PreconditionError("containment certificate failed")
    return RuledSurfaceSpec(forms, a, surface, witness_params, certificate)


def _fiber_at(forms, s, t) -> Conic:
    q = tuple(f.evaluate(s, t) for f in forms)
    if not any(q):
        raise PreconditionError("parameter hits a base point of the triple")
    return twistor_fiber_of(q)


def _sample_parameters(n: int):
    params = [(GaussianRational(k), GaussianRational(1)) for k in range(n - 1)]
    params.append((GaussianRational(1), GaussianRational(0)))
    return params


def _parameter_resultant(forms) -> BiForm:
    """Resultant of p.f and l.f in the parameter, as a 2a x 2a Sylvester
    determinant whose entries are linear biforms."""
    a = forms[0].degree
    p_row: list[BiForm] = []
    l_row: list[BiForm] = []
    for k in range(a + 1):
        pterms = {}
        lterms = {}
        for i in range(3):
            c = forms[i].coeffs[k]
            if c:
                e = [0, 0, 0]
                e[i] = 1
                pterms[(tuple(e), (0, 0, 0))] = c
                lterms[((0, 0, 0), tuple(e))] = c
        p_row.append(BiForm((1, 0), pterms))
        l_row.append(BiForm((0, 1), lterms))
    n = 2 * a
    zero_p = BiForm((1, 0))
    zero_l = BiForm((0, 1))
    rows = []
    for r in range(a):
        rows.append([zero_p] * r + p_row + [zero_p] * (n - a - 1 - r))
    for r in range(a):
        rows.append([zero_l] * r + l_row + [zero_l] * (n - a - 1 - r))
    return _poly_det(rows, a)


def _poly_det(rows, a: int) -> BiForm:
    n = len(rows)
    memo: dict = {}

    def minor(depth: int, cols: tuple) -> BiForm:
        if len(cols) == 1:
            return rows[depth][cols[0]]
        key = (depth, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = None
        for pos, c in enumerate(cols):
            entry = rows[depth][c]
            if entry.is_zero():
                continue
            sub = minor(depth + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            if pos % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            p_count = max(0, a - depth)
            acc = BiForm((p_count, len(cols) - p_count))
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def _check_birational(forms, seed: int):
    """Probabilistic birationality probe: the fiber of t -> f(t) over a
    random image point must be a single reduced parameter, read off as the
    degree of the gcd of the 2x2 minors against that point."""
    rng = SplitMix64(seed)
    a = forms[0].degree
    for _ in range(3):
        t = GaussianRational(Fraction(rng.int_in(-999, 999), rng.int_in(1, 97)))
        q0 = tuple(f.evaluate(t, 1) for f in forms)
        minors = []
        for x, y in ((0, 1), (0, 2), (1, 2)):
            mf = forms[x].scale(q0[y]) - forms[y].scale(q0[x])
            if not mf.is_zero():
                minors.append(mf)
        if not minors:
            raise PreconditionError("parametrization has constant image")
        g = minors[0]
        for mf in minors[1:]:
            from .binforms import bf_gcd

            g = bf_gcd(g, mf)
        if g.degree != 1:
            raise PreconditionError(
                "parametrization is not birational onto its image "
                f"(a random image point has {g.degree} preimages)"
            )


# Sturm-sequence positivity of sum f_i^2 on the real parameter line.

def _fdeg(u):
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i
    return -1


def _fderiv(u):
    return [i * u[i] for i in range(1, len(u))] or [Fraction(0)]


def _frem(u, v):
    dv = _fdeg(v)
    r = list(u)
    while _fdeg(r) >= dv:
        dr = _fdeg(r)
        c = r[dr] / v[dv]
        for i in range(dv + 1):
            r[dr - dv + i] -= c * v[i]
    return r


def _real_root_count(u) -> int:
    """Number of distinct real roots, by Sturm sign variations at -inf/+inf."""
    d = _fdeg(u)
    if d <= 0:
        return 0
    chain = [u[: d + 1], _fderiv(u[: d + 1])]
    while _fdeg(chain[-1]) >= 0:
        r = _frem(chain[-2], chain[-1])
        if _fdeg(r) < 0:
            break
        chain.append([-c for c in r])

    def variations(signs):
        signs = [s for s in signs if s]
        return sum(1 for x, y in zip(signs, signs[1:]) if x * y < 0)

    at_plus = []
    at_minus = []
    for p in chain:
        dp = _fdeg(p)
        if dp < 0:
            continue
        lead = 1 if p[dp] > 0 else -1
        at_plus.append(lead)
        at_minus.append(lead if dp % 2 == 0 else -lead)
    return variations(at_minus) - variations(at_plus)


def _positivity_certificate(forms):
    """Certify f(s,t).f(s,t) > 0 on the whole real parameter circle.

    Sturm root counting on sum f_i(x, 1)^2 handles the affine line; the
    value at (1, 0) handles infinity.
    """
    a = forms[0].degree
    u = [Fraction(0)] * (2 * a + 1)
    for f in forms:
        asc = [c.re for c in reversed(f.coeffs)]
        for i, ci in enumerate(asc):
            if not ci:
                continue
            for j, cj in enumerate(asc):
                if cj:
                    u[i + j] += ci * cj
    if _fdeg(u) < 0:
        raise PreconditionError("triple is identically zero")
    if _real_root_count(u) != 0:
        raise PreconditionError("f.f vanishes at a real parameter")
    if not sum(f.coeffs[0].re ** 2 for f in forms):
        raise PreconditionError("f.f vanishes at the parameter at infinity")


def containment_certificate(forms, surface: BiForm, seed: int = DEFAULT_RULED_SEED) -> dict:
    """Prove that every conic L_{f(t), f(t)} lies on the surface.

    On the chart with pivot coordinate i, the parametrization of the swept
    conic is polynomial in the parameter: p-entries have parameter degree a
    and l-entries 2a, so each coefficient of the restriction has degree at
    most D = a*a + a*2a.  Vanishing at D + 1 distinct rational parameters
    (skipping the finitely many where the chart degenerates) therefore
    proves identical vanishing; the charts with f_i not identically zero
    cover the parameter line because the triple is gcd-free.
    """
    a = surface.bidegree[0]
    deg_p = forms[0].degree
    deg_l = 2 * forms[0].degree
    bound = surface.bidegree[0] * deg_p + surface.bidegree[1] * deg_l
    charts = []
    for i in range(3):
        if forms[i].is_zero():
            continue
        count = 0
        k = 0
        while count <= bound:
            m = tuple(f.evaluate(k, 1) for f in forms)
            k += 1
            if not m[i]:
                continue
            v1, v2 = line_basis(m, pivot=i)
            p_forms = tuple(BinaryForm([v1[c], v2[c]]) for c in range(3))
            l1, l2 = cross(m, v1), cross(m, v2)
            l_forms = tuple(BinaryForm([l1[c], l2[c]]) for c in range(3))
            r = substitute_forms(surface, p_forms, l_forms)
            if not r.is_zero():
                return {
                    "passed": False,
                    "degree_bound": bound,
                    "failed_chart": i,
                    "failed_parameter": k - 1,
                }
            count += 1
        charts.append({"pivot_index": i, "samples": count, "degree_bound": bound})
    rng = SplitMix64(seed ^ 0xC0FFEE)
    probes = []
    for _ in range(5):
        t = GaussianRational(Fraction(rng.int_in(-500, 500), rng.int_in(1, 60)))
        C = _fiber_at(forms, t, GaussianRational(1))
        if not restrict_to_conic(surface, C).is_zero():
            return {"passed": False, "degree_bound": bound, "failed_probe": str(t.re)}
        probes.append(str(t.re))
    return {"passed": True, "degree_bound": bound, "charts": charts, "probe_parameters": probes}


def twistor_circle_samples(spec: RuledSurfaceSpec, n: int) -> list[Conic]:
    """n pairwise disjoint twistor fibers of the ruling at rational
    parameters on the real circle (affine integers, then infinity)."""
    if n < 1:
        raise PreconditionError("need n >= 1 samples")
    out: list[Conic] = []
    seen = set()
    k = 0
    while len(out) < n - 1:
        C = _fiber_at(spec.forms, GaussianRational(k), GaussianRational(1))
        k += 1
        key = (C.q.coords, C.m.coords)
        if key in seen:
            continue
        seen.add(key)
        out.append(C)
    C_inf = _fiber_at(spec.forms, GaussianRational(1), GaussianRational(0))
    if (C_inf.q.coords, C_inf.m.coords) in seen:
        while True:
            C_inf = _fiber_at(spec.forms, GaussianRational(k), GaussianRational(1))
            k += 1
            if (C_inf.q.coords, C_inf.m.coords) not in seen:
                break
    out.append(C_inf)
    for idx, C in enumerate(out):
        if not contains_conic(spec.surface, C):
            raise PreconditionError("sampled fiber escapes the surface")
        for D in out[:idx]:
            if not conics_disjoint(C, D):
                raise PreconditionError("sampled fibers are not disjoint")
    return out


def smoothness_profile(spec: RuledSurfaceSpec, fibers: int = 6) -> dict:
    """Search the sampled twistor fibers for singular points of the surface.

    The report either exhibits singular witnesses or declares the search
    inconclusive; it has no vocabulary for certifying smoothness, which for
    these ruled surfaces of degree >= 2 would be wrong.
    """
    samples = twistor_circle_samples(spec, fibers)
    entries = []
    found = False
    for C in samples:
        w: SingularWitness | None = conic_singularity_witness(spec.surface, C)
        if w is None:
            entries.append({"conic": C, "witness": None})
            continue
        found = True
        entries.append(
            {
                "conic": C,
                "witness": {
                    "whole_conic": w.whole_conic,
                    "gcd_degree": w.gcd.degree if w.gcd is not None else None,
                    "exact_parameter": w.parameter is not None,
                },
            }
        )
    return {
        "bidegree": list(spec.surface.bidegree),
        "fibers_checked": len(samples),
        "status": "singular_witness_found" if found else "inconclusive",
        "certifies_smoothness": False,
        "fibers": entries,
    }
