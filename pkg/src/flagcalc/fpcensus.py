"""Brute-force conic census over small prime fields.

An independent desk-scale oracle: reduce a surface mod an odd prime p,
enumerate every pair (q, m) in P2(F_p) x P2(F_p) with q.m != 0, and keep
the pairs whose conic L_{q,m} lies on the reduced surface.  The
containment test mirrors the characteristic-zero restriction pipeline
(same chart rule, same cross product), so reductions of rational witnesses
are found whenever their reductions stay smooth.  Results are mod-p
evidence only; a conic over F_p need not lift.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .biforms import BiForm
from .errors import PreconditionError

FpConic = tuple[tuple[int, int, int], tuple[int, int, int]]


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def sqrt_minus_one(p: int) -> int:
    """Smallest positive square root of -1 mod p; needs p = 1 (mod 4)."""
    if p % 4 != 1:
        raise PreconditionError("i has no image mod p unless p = 1 (mod 4)")
    for x in range(2, p):
        if x * x % p == p - 1:
            return x
    raise PreconditionError("unreachable: no square root of -1 found")


@dataclass
class FpSurface:
    """A biform with coefficients reduced into F_p."""

    p: int
    bidegree: tuple[int, int]
    terms: dict
    i_image: int | None


def reduce_mod_p(F: BiForm, p: int) -> FpSurface:
    """Coefficientwise reduction of F mod p.

    Denominators must be units mod p; nonreal coefficients additionally
    need p = 1 (mod 4), in which case i maps to the smallest positive
    square root of -1.
    """
    if not _is_odd_prime(p):
        raise PreconditionError(f"{p} is not an odd prime")
    has_imag = any(not c.is_real() for c in F.terms.values())
    i_img = sqrt_minus_one(p) if p % 4 == 1 else None
    if has_imag and i_img is None:
        raise PreconditionError("nonreal coefficients need p = 1 (mod 4)")
    terms = {}
    for key, c in F.terms.items():
        for den in (c.re.denominator, c.im.denominator):
            if den % p == 0:
                raise PreconditionError(f"denominator {den} is divisible by {p}")
        v = c.re.numerator * pow(c.re.denominator, -1, p) % p
        if c.im:
            v = (v + (i_img or 0) * c.im.numerator * pow(c.im.denominator, -1, p)) % p
        if v:
            terms[key] = v
    if not terms:
        raise PreconditionError("surface reduces to zero mod p")
    return FpSurface(p, F.bidegree, terms, i_img)


def proj_points(p: int) -> list[tuple[int, int, int]]:
    """Canonical representatives of P2(F_p): p^2 + p + 1 points."""
    pts = [(1, y, z) for y in range(p) for z in range(p)]
    pts.extend((0, 1, z) for z in range(p))
    pts.append((0, 0, 1))
    return pts


def _dot(u, v, p):
    return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % p


def _cross(u, v, p):
    return (
        (u[1] * v[2] - u[2] * v[1]) % p,
        (u[2] * v[0] - u[0] * v[2]) % p,
        (u[0] * v[1] - u[1] * v[0]) % p,
    )


def _line_basis(m, p):
    # Same deterministic chart as the exact pipeline: pivot at the first
    # nonzero coordinate of the canonical representative.
    i = next(idx for idx in range(3) if m[idx])
    j, k = [idx for idx in range(3) if idx != i]
    v1 = [0, 0, 0]
    v2 = [0, 0, 0]
    v1[j], v1[i] = m[i], (-m[j]) % p
    v2[k], v2[i] = m[i], (-m[k]) % p
    return tuple(v1), tuple(v2)


def _conv(u, v, p):
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[i + j] = (out[i + j] + a * b) % p
    return out


def _form_powers(lin, n, p):
    out = [[1]]
    for _ in range(n):
        out.append(_conv(out[-1], lin, p))
    return out


def conic_census(S: FpSurface, threads: int | None = None) -> list[FpConic]:
    """All smooth conics over F_p contained in the reduced surface.

    Scans the (p^2+p+1)^2 canonical pairs; output is sorted, so the result
    does not depend on how the scan was chunked.
    """
    pts = proj_points(S.p)
    if threads is None:
        threads = worker_cap()
    if threads <= 1 or len(pts) < 8:
        hits = _census_chunk(S, pts, pts)
    else:
        from concurrent.futures import ThreadPoolExecutor

        chunks = [pts[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(lambda ms: _census_chunk(S, ms, pts), chunks))
        hits = [h for part in parts for h in part]
    return sorted(hits)


def _census_chunk(S: FpSurface, m_points, q_points) -> list[FpConic]:
    p = S.p
    a, b = S.bidegree
    terms = list(S.terms.items())
    hits: list[FpConic] = []
    for m in m_points:
        v1, v2 = _line_basis(m, p)
        p_lins = [(v1[c], v2[c]) for c in range(3)]
        p_pows = [_form_powers(list(lin), a, p) for lin in p_lins]
        # p-part of each monomial is shared across all q for this m
        p_parts = {}
        for (pe, _le), _c in terms:
            if pe not in p_parts:
                prod = [1]
                for i in range(3):
                    if pe[i]:
                        prod = _conv(prod, p_pows[i][pe[i]], p)
                p_parts[pe] = prod
        for q in q_points:
            if not _dot(q, m, p):
                continue
            l1 = _cross(q, v1, p)
            l2 = _cross(q, v2, p)
            l_pows = [_form_powers([l1[c], l2[c]], b, p) for c in range(3)]
            acc = [0] * (a + b + 1)
            for (pe, le), c in terms:
                prod = p_parts[pe]
                for i in range(3):
                    if le[i]:
                        prod = _conv(prod, l_pows[i][le[i]], p)
                off = a + b + 1 - len(prod)
                for k, pc in enumerate(prod):
                    if pc:
                        acc[k + off] = (acc[k + off] + c * pc) % p
            if not any(acc):
                hits.append((q, m))
    return hits


def conics_meet_fp(c1: FpConic, c2: FpConic, p: int) -> bool:
    """Mod-p version of the disjointness criterion."""
    q1, m1 = c1
    q2, m2 = c2
    if q1 == q2 and m1 == m2:
        raise PreconditionError("conics must be distinct")
    if q1 == q2 or m1 == m2:
        return True
    return _dot(_cross(m1, m2, p), _cross(q1, q2, p), p) == 0


@dataclass
class IndependenceResult:
    size: int
    exact: bool


def max_disjoint_subset(census: list[FpConic], p: int, limit: int = 24) -> IndependenceResult:
    """Largest pairwise-disjoint subfamily of the census.

    Exact branch-and-bound maximum independent set on the conflict graph
    while the census has at most `limit` members; greedy lower bound,
    flagged as such, beyond that.
    """
    n = len(census)
    if n == 0:
        return IndependenceResult(0, True)
    if n > limit:
        # greedy in canonical order, reported as a lower bound
        taken: list[FpConic] = []
        for c in census:
            if all(not conics_meet_fp(c, t, p) for t in taken):
                taken.append(c)
        return IndependenceResult(len(taken), False)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if conics_meet_fp(census[i], census[j], p):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    best = 0

    def search(cand: int, size: int):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = max(best, size)
            return
        v = (cand & -cand).bit_length() - 1
        search(cand & ~(1 << v) & ~adj[v], size + 1)
        search(cand & ~(1 << v), size)

    search((1 << n) - 1, 0)
    return IndependenceResult(best, True)


def worker_cap() -> int:
    """Worker parallelism cap from FLAGCALC_THREADS (default: all cores)."""
    raw = os.environ.get("FLAGCALC_THREADS", "")
    try:
        n = int(raw) if raw else (os.cpu_count() or 1)
    except ValueError:
        n = 1
    return max(1, min(n, os.cpu_count() or 1))
