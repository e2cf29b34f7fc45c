"""Radii of concavity/convexity and the polynomials that determine them."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NoRootError, ParameterError
from .operators import ClassSpec

SCAN_INTERVALS = 4096
SCAN_EPS = 1e-12
ROOT_TOL = 1e-12


@dataclass(frozen=True)
class RPoly:
    """Real polynomial, ``coeffs[k]`` multiplying ``r**k``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    def __call__(self, r):
        return np.polynomial.polynomial.polyval(r, self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class RadiusResult:
    value: float
    method: str  # "closed-form", "least-root" or "min-of-two"
    r1: Optional[float] = None
    r2: Optional[float] = None
    poly: Optional[RPoly] = None
    bracket: Optional[tuple] = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "r1": self.r1,
            "r2": self.r2,
            "poly": list(self.poly.coeffs) if self.poly is not None else None,
            "bracket": list(self.bracket) if self.bracket is not None else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RadiusResult":
        return cls(
            value=d["value"],
            method=d["method"],
            r1=d.get("r1"),
            r2=d.get("r2"),
            poly=RPoly(d["poly"]) if d.get("poly") is not None else None,
            bracket=tuple(d["bracket"]) if d.get("bracket") is not None else None,
        )


def least_root_in(poly: RPoly, lo: float, hi: float, tol: float = ROOT_TOL,
                  intervals: int = SCAN_INTERVALS) -> float:
    """Smallest root of ``poly`` in ``(lo, hi)``, up to the scan resolution.

    The interval is cut into ``intervals`` equal pieces; the first piece
    whose endpoints differ in sign (or hit zero) is bisected down to width
    ``tol`` and its midpoint returned.
    """
    if not lo < hi:
        raise ParameterError(f"need lo < hi, got ({lo!r}, {hi!r})", "bracket")
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol!r}", "tol")
    a0, b0 = lo + SCAN_EPS, hi - SCAN_EPS
    xs = np.linspace(a0, b0, intervals + 1)
    ys = poly(xs)
    sign = np.sign(ys)
    hits = np.nonzero(sign[:-1] * sign[1:] <= 0)[0]
    if hits.size == 0:
        raise NoRootError(
            f"no sign change in ({lo}, {hi}): poly({a0})={ys[0]!r}, poly({b0})={ys[-1]!r}",
            lo, hi, float(ys[0]), float(ys[-1]),
        )
    i = int(hits[0])
    a, b = float(xs[i]), float(xs[i + 1])
    fa = float(ys[i])
    if fa == 0.0:
        return a
    if float(ys[i + 1]) == 0.0:
        return b
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = float(poly(m))
        if fm == 0.0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def polynomial_for(spec: ClassSpec) -> RPoly:
    """Radius polynomial whose least root in the bracket bounds the radius."""
    kind = spec.kind
    if kind == "pprime-fixed":
        A, a = spec.A, spec.a
        d = A + 3.0
        return RPoly((
            (A - 1.0) / d,
            -2.0 * (A * (1.0 - a) + 3.0 * a + 1.0) / d,
            2.0 * (A * (1.0 - 2.0 * a) - 2.0 * a - 3.0) / d,
            -2.0 * (A + 1.0) * (1.0 - a) / d,
            1.0,
        ))
    if kind == "starlike-half":
        A = spec.A
        return RPoly((-A - 1.0, 3.0 * A + 7.0, -(3.0 * A + 1.0), A - 1.0))
    if kind == "u0":
        A, lam = spec.A, spec.lam
        return RPoly((A - 1.0, -(A + 3.0), -lam * (A + 11.0), -lam * (9.0 - A)))
    if kind == "vp":
        lam, p = spec.lam, spec.p
        p2 = p * p
        return RPoly((
            p,
            -(1.0 + p2 + 3.0 * lam * p2),
            p * (1.0 - 4.0 * lam - lam * p2),
            lam * (5.0 * lam * p2 - 4.0 * p2 + 3.0),
            lam * p * (3.0 * lam * p2 - lam + 1.0),
            lam * lam * p2,
        ))
    if kind == "vp-convex":
        lam, p = spec.lam, spec.p
        p2 = p * p
        return RPoly((
            p2,
            -p * (2.0 + 3.0 * lam * p2),
            1.0 - 5.0 * lam * p2,
            -lam * p * (1.0 - 5.0 * lam * p2),
            lam * (1.0 + 2.0 * lam * p2),
            lam * lam * p,
        ))
    raise ParameterError(f"class {kind} has a closed-form radius, no radius polynomial", "class")


def bracket_for(spec: ClassSpec) -> tuple:
    if spec.kind in ("vp", "vp-convex"):
        return (0.0, spec.p)
    return (0.0, 1.0)


def pprime_radius(A: float) -> float:
    """``1 - 2/sqrt(A + 3)``, rationalised so it stays accurate as A -> 1."""
    s = math.sqrt(A + 3.0)
    return (A - 1.0) / (s * (s + 2.0))


def lif_radius(A: float, alpha: float) -> float:
    """``(A + 1 + 2 alpha - 2 sqrt((A + alpha)(1 + alpha))) / (A - 1)``.

    Multiplying through by the conjugate turns the numerator into
    ``(A - 1)^2``, which removes the cancellation near A = 1.
    """
    return (A - 1.0) / (A + 1.0 + 2.0 * alpha + 2.0 * math.sqrt((A + alpha) * (1.0 + alpha)))


def u0_r1(lam: float) -> float:
    """Radius inside which the pre-Schwarzian bound ``6 lam r^2/(1 - lam r^2)`` holds."""
    r = math.sqrt((5.0 + lam - math.sqrt((1.0 - lam) * (25.0 - lam))) / (6.0 * lam))
    return min(r, 1.0)


def vp_r1(lam: float) -> float:
    r = math.sqrt((3.0 - lam - math.sqrt((1.0 - lam) * (9.0 - lam))) / (2.0 * lam))
    return min(r, 1.0)


def radius_for(spec: ClassSpec) -> RadiusResult:
    kind = spec.kind
    if kind == "pprime":
        return RadiusResult(pprime_radius(spec.A), "closed-form")
    if kind == "lif":
        return RadiusResult(lif_radius(spec.A, spec.alpha), "closed-form")

    poly = polynomial_for(spec)
    bracket = bracket_for(spec)
    r2 = least_root_in(poly, *bracket)
    if kind in ("pprime-fixed", "starlike-half"):
        return RadiusResult(r2, "least-root", poly=poly, bracket=bracket)
    r1 = u0_r1(spec.lam) if kind == "u0" else vp_r1(spec.lam)
    return RadiusResult(min(r1, r2), "min-of-two", r1=r1, r2=r2, poly=poly, bracket=bracket)
