"""Complex polynomials and certified polynomial self-maps of the unit disc.

Every sampled class member in conrad is built from a polynomial ``g`` with
``sum(|c_k|) <= 1``.  The coefficient sum bounds ``|g|`` on the closed disc,
so membership in the Schwarz class is checked by a single addition rather
than by sampling the boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

MAX_DEGREE = 32
DEFAULT_HEADROOM = 0.999


@dataclass(frozen=True)
class CPoly:
    """Polynomial with complex coefficients, ``coeffs[k]`` multiplying ``z**k``."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return cpoly_eval(self, z)

    def __add__(self, other):
        other = _as_cpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0j,) * (n - len(self.coeffs))
        b = other.coeffs + (0j,) * (n - len(other.coeffs))
        return CPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return CPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_cpoly(other))

    def __rsub__(self, other):
        return _as_cpoly(other) - self

    def __mul__(self, other):
        other = _as_cpoly(other)
        if not self.coeffs or not other.coeffs:
            return CPoly()
        out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return CPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "CPoly":
        return cpoly_derivative(self)

    def antiderivative(self) -> "CPoly":
        return cpoly_antiderivative(self)

    def shift(self, k: int) -> "CPoly":
        """Multiply by ``z**k``."""
        if not self.coeffs:
            return self
        return CPoly((0j,) * k + self.coeffs)

    def deflate(self, root: complex) -> "CPoly":
        """Quotient of ``(self - self(root)) / (z - root)`` by synthetic division.

        The remainder is discarded, which is exactly what the difference
        quotient wants.
        """
        if len(self.coeffs) <= 1:
            return CPoly()
        n = len(self.coeffs) - 1
        quot = [0j] * n
        acc = self.coeffs[-1]
        for k in range(n - 1, -1, -1):
            quot[k] = acc
            acc = self.coeffs[k] + acc * root
        return CPoly(quot)


def _as_cpoly(x) -> CPoly:
    if isinstance(x, CPoly):
        return x
    return CPoly((x,))


def cpoly_eval(p: CPoly, z):
    """Horner evaluation; ``z`` may be a scalar or a numpy array."""
    if not p.coeffs:
        return z * 0j if isinstance(z, np.ndarray) else 0j
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * z + c
    if isinstance(z, np.ndarray) and not isinstance(acc, np.ndarray):
        acc = np.full(z.shape, acc, dtype=complex)
    return acc


def cpoly_derivative(p: CPoly) -> CPoly:
    return CPoly(tuple(k * c for k, c in enumerate(p.coeffs) if k > 0))


def cpoly_antiderivative(p: CPoly) -> CPoly:
    """Antiderivative vanishing at the origin."""
    if not p.coeffs:
        return CPoly()
    return CPoly((0j,) + tuple(c / (k + 1) for k, c in enumerate(p.coeffs)))


@dataclass(frozen=True)
class SchwarzCert:
    """A polynomial disc self-map together with its coefficient-sum bound.

    ``sum_bound`` dominates ``max |poly(z)|`` over the closed unit disc.
    """

    poly: CPoly
    sum_bound: float
    vanishes_at_zero: bool

    @classmethod
    def from_poly(cls, poly: CPoly) -> "SchwarzCert":
        bound = _abs_sum(poly.coeffs)
        if bound > 1.0:
            raise ParameterError(f"coefficient sum {bound!r} exceeds 1")
        vanishes = not poly.coeffs or poly.coeffs[0] == 0
        return cls(poly, bound, vanishes)

    def __call__(self, z):
        return cpoly_eval(self.poly, z)


def sample_schwarz(
    seed: int,
    degree: int,
    vanish_at_zero: bool = True,
    headroom: float = DEFAULT_HEADROOM,
    *,
    linear: float | None = None,
    max_degree: int = MAX_DEGREE,
) -> SchwarzCert:
    """Draw a seeded polynomial self-map of the disc.

    Coefficients are uniform in the unit disc and then scaled so their
    absolute values sum to ``headroom``.  With ``linear`` set, the
    coefficient of ``z`` is pinned to that value (the map must then vanish
    at zero) and only the coefficients of ``z**2`` and up are drawn, inside
    ``max(0, headroom - linear)``.
    """
    if not isinstance(degree, (int, np.integer)) or degree < 0:
        raise ParameterError(f"degree must be a non-negative integer, got {degree!r}", "degree")
    if degree > max_degree:
        raise ParameterError(f"degree {degree} exceeds cap {max_degree}", "degree")
    if not 0.0 < headroom <= 1.0:
        raise ParameterError(f"headroom must lie in (0, 1], got {headroom!r}", "headroom")
    if seed < 0:
        raise ParameterError(f"seed must be non-negative, got {seed!r}", "seed")

    rng = np.random.default_rng(seed)
    n = degree + 1
    radius = np.sqrt(rng.random(n))
    angle = 2.0 * np.pi * rng.random(n)
    c = radius * np.exp(1j * angle)
    if vanish_at_zero or linear is not None:
        c[0] = 0.0

    if linear is None:
        c = _scale_to(c, headroom)
    else:
        if not vanish_at_zero:
            raise ParameterError("a pinned linear coefficient requires vanish_at_zero", "linear")
        if degree < 1:
            raise ParameterError("a pinned linear coefficient needs degree >= 1", "degree")
        if not 0.0 <= linear <= 1.0:
            raise ParameterError(f"linear coefficient must lie in [0, 1], got {linear!r}", "a")
        c[1] = linear
        c[2:] = _scale_to(c[2:], max(0.0, headroom - linear))

    return SchwarzCert.from_poly(CPoly(c))


def _abs_sum(coeffs) -> float:
    # builtin abs, not np.abs: the two can differ in the last bit
    return math.fsum(abs(complex(c)) for c in coeffs)


def _scale_to(c: np.ndarray, target: float) -> np.ndarray:
    s = _abs_sum(c)
    if s == 0.0:
        return c
    c = c * (target / s)
    # rounding may overshoot the target by an ulp or two
    while _abs_sum(c) > target:
        c = c * (1.0 - 2.0**-52)
    return c


def schwarz_pick_margin(cert: SchwarzCert, z):
    """``(1 - |g|^2) - |g'| (1 - |z|^2)``; non-negative for self-maps of the disc."""
    g = cert(z)
    dg = cpoly_eval(cert.poly.derivative(), z)
    return (1.0 - np.abs(g) ** 2) - np.abs(dg) * (1.0 - np.abs(z) ** 2)
