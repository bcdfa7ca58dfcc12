"""Deterministic seeded sampling for points, conics, and forms.

Every source of randomness in the package flows through SplitMix64, a
64-bit generator with a one-line state transition.  Fixing the seed fixes
every sampled object bit for bit, independent of platform or interpreter,
which is what makes emitted fixtures reproducible.  Derived draws use plain
modulo reduction; the slight bias is irrelevant here and keeps the mapping
trivial to restate.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; output = mix(state)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def int_in(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def random_gaussian_rational(rng: SplitMix64, height: int = 9):
    from .gaussian import GaussianRational

    return GaussianRational(rng.int_in(-height, height), rng.int_in(-height, height))


def random_proj_point(rng: SplitMix64, height: int = 9, real: bool = False):
    """A projective point with Gaussian-integer coordinates of bounded height."""
    from .flag import ProjPoint
    from .gaussian import GaussianRational

    while True:
        if real:
            coords = [GaussianRational(rng.int_in(-height, height)) for _ in range(3)]
        else:
            coords = [random_gaussian_rational(rng, height) for _ in range(3)]
        if any(coords):
            return ProjPoint(coords)


def random_flag_point(rng: SplitMix64, height: int = 4):
    """A random incident pair, built as (p, p x r) for random p and r."""
    from .flag import FlagPoint, ProjPoint, cross

    while True:
        p = random_proj_point(rng, height)
        r = random_proj_point(rng, height)
        l = cross(p.coords, r.coords)
        if any(l):
            return FlagPoint(p, ProjPoint(l))


def random_smooth_conic(rng: SplitMix64, height: int = 9):
    """A conic L_{q,m} with q.m != 0, coordinates of bounded height."""
    from .flag import Conic, dot

    while True:
        q = random_proj_point(rng, height)
        m = random_proj_point(rng, height)
        if dot(q.coords, m.coords):
            return Conic(q, m)


def random_smooth_conics(rng: SplitMix64, count: int, height: int = 9):
    """Pairwise distinct smooth conics."""
    out = []
    seen = set()
    while len(out) < count:
        c = random_smooth_conic(rng, height)
        key = (c.q.coords, c.m.coords)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def random_binary_form(rng: SplitMix64, degree: int, height: int = 9, real: bool = False):
    from .binforms import BinaryForm
    from .gaussian import GaussianRational

    while True:
        if real:
            coeffs = [GaussianRational(rng.int_in(-height, height)) for _ in range(degree + 1)]
        else:
            coeffs = [random_gaussian_rational(rng, height) for _ in range(degree + 1)]
        f = BinaryForm(coeffs)
        if not f.is_zero():
            return f
