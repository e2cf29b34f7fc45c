"""Numerical verification of the radius theorems.

Three kinds of evidence are produced here:

* sampled positivity -- draw class members from seeded Schwarz data and
  check the concavity (or convexity) functional on a polar grid filling
  ``margin * R``;
* sharpness -- evaluate the closed-form ``T`` of the extremal function on
  both sides of ``-R``;
* algebraic identities between the radius formulas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .analytic import DEFAULT_HEADROOM, sample_schwarz
from .errors import DomainError, ParameterError
from .operators import ClassSpec, closed_extremal_t, p_of, presch_for, t_of
from .radii import lif_radius, polynomial_for, pprime_radius, radius_for

FAIL_THRESHOLD = -1e-9
SAMPLED_KINDS = ("pprime", "pprime-fixed", "starlike-half", "u0", "vp", "vp-convex")


@dataclass(frozen=True)
class GridSpec:
    n_radial: int = 16
    n_angular: int = 256
    margin_factor: float = 0.999

    def __post_init__(self):
        if self.n_radial < 1 or self.n_angular < 1:
            raise ParameterError("grid sizes must be >= 1", "grid")
        if not 0.0 < self.margin_factor < 1.0:
            raise ParameterError(f"margin must lie in (0, 1), got {self.margin_factor!r}", "margin")

    def points(self, r_max: float) -> np.ndarray:
        """Polar grid ``r_max * j/n_radial * exp(2 pi i k/n_angular)``, j = 1..n_radial."""
        radii = r_max * np.arange(1, self.n_radial + 1) / self.n_radial
        theta = 2.0 * np.pi * np.arange(self.n_angular) / self.n_angular
        return radii[:, None] * np.exp(1j * theta)[None, :]


@dataclass(frozen=True)
class VerifyReport:
    class_spec: ClassSpec
    samples: int
    failures: int
    worst_margin: float
    witness_seed: int
    witness_z: complex
    radius_used: float

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "classSpec": self.class_spec.to_dict(),
            "samples": self.samples,
            "failures": self.failures,
            "worstMargin": self.worst_margin,
            "witness": {"seed": self.witness_seed, "z": [self.witness_z.real, self.witness_z.imag]},
            "radiusUsed": self.radius_used,
        }


@dataclass(frozen=True)
class SharpnessReport:
    kind: str
    A: float
    alpha: Optional[float]
    radius: float
    eps: float
    inside: float   # Re T at -(R - eps)
    outside: float  # Re T at -(R + eps)

    @property
    def passed(self) -> bool:
        return self.outside < 0.0 < self.inside

    def to_dict(self) -> dict:
        return {
            "kind": self.kind, "A": self.A, "alpha": self.alpha, "radius": self.radius,
            "eps": self.eps, "inside": self.inside, "outside": self.outside, "passed": self.passed,
        }


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    max_error: float
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "maxError": self.max_error, "detail": self.detail}


def _evaluate_grid(evaluate: Callable, z: np.ndarray) -> np.ndarray:
    try:
        values = np.real(evaluate(z))
    except DomainError:
        # find the first offending point so the error names it
        for zk in z.ravel():
            try:
                evaluate(complex(zk))
            except DomainError as exc:
                raise DomainError(f"{exc} (grid point z={complex(zk)!r})", complex(zk)) from exc
        raise
    bad = ~np.isfinite(values)
    if np.any(bad):
        zk = complex(z[bad].ravel()[0])
        raise DomainError(f"non-finite value at grid point z={zk!r}", zk)
    return values


def disc_min_real(evaluate: Callable, r_max: float, grid: GridSpec = GridSpec()):
    """Minimum of ``Re evaluate(z)`` over the polar grid of radius ``r_max``.

    Returns ``(min_value, argmin_z)``.
    """
    if not 0.0 < r_max < 1.0:
        raise ParameterError(f"r_max must lie in (0, 1), got {r_max!r}", "r_max")
    z = grid.points(r_max)
    values = _evaluate_grid(evaluate, z)
    k = int(np.argmin(values))
    return float(values.flat[k]), complex(z.flat[k])


def sharpness_check(kind: str, A: float, alpha: Optional[float] = None, eps: float = 0.01) -> SharpnessReport:
    """Evaluate the extremal ``T`` at ``-(R - eps)`` and ``-(R + eps)``."""
    if kind == "pprime":
        spec = ClassSpec("pprime", A=A)
    elif kind == "lif":
        spec = ClassSpec("lif", A=A, alpha=alpha)
    else:
        raise ParameterError(f"sharpness is only established for pprime and lif, not {kind}", "class")
    if not eps > 0:
        raise ParameterError(f"eps must be positive, got {eps!r}", "eps")
    R = radius_for(spec).value
    if R + eps >= 1.0:
        raise ParameterError(f"R + eps = {R + eps} must stay below 1", "eps")
    inside = float(np.real(closed_extremal_t(kind, A, alpha, -(R - eps))))
    outside = float(np.real(closed_extremal_t(kind, A, alpha, -(R + eps))))
    return SharpnessReport(kind, spec.A, spec.alpha, R, eps, inside, outside)


def sample_member(spec: ClassSpec, seed: int, degree: int, headroom: float = DEFAULT_HEADROOM):
    """Schwarz datum of one seeded member of ``spec``'s class."""
    if spec.kind == "pprime":
        return sample_schwarz(seed, degree, True, headroom)
    if spec.kind == "pprime-fixed":
        # f''(0)/2 = g'(0) under f' = (1+g)/(1-g)
        return sample_schwarz(seed, max(degree, 1), True, headroom, linear=spec.a)
    if spec.kind in ("starlike-half", "u0", "vp", "vp-convex"):
        return sample_schwarz(seed, degree, False, headroom)
    raise ParameterError(f"no sampler for class {spec.kind}", "class")


def functional_for(spec: ClassSpec, data) -> Callable:
    """The functional whose real part the theorem for ``spec`` keeps positive."""
    q = presch_for(spec, data)
    if spec.kind == "vp":
        return lambda z: p_of(spec.p, q, z)
    if spec.kind == "vp-convex":
        p = spec.p
        # 1 + z f''/f' from the pole-cancelled form
        return lambda z: q.regularized(z) - (z + p) / (z - p)
    return lambda z: t_of(spec.A, q, z)


def sample_verify(spec: ClassSpec, n_samples: int = 200, seed: int = 1,
                  grid: GridSpec = GridSpec(), degree: int = 4,
                  headroom: float = DEFAULT_HEADROOM) -> VerifyReport:
    """Check positivity inside ``margin * R`` for ``n_samples`` seeded members.

    Sample ``i`` is drawn with seed ``seed ^ i``.
    """
    if spec.kind not in SAMPLED_KINDS:
        raise ParameterError(f"class {spec.kind} has no constructive sampler", "class")
    if n_samples < 1:
        raise ParameterError("samples must be >= 1", "samples")
    if seed < 0:
        raise ParameterError("seed must be non-negative", "seed")
    R = radius_for(spec).value
    r_max = grid.margin_factor * R
    z = grid.points(r_max)

    failures = 0
    worst, witness_seed, witness_z = math.inf, seed, 0j
    for i in range(n_samples):
        s = seed ^ i
        try:
            values = _evaluate_grid(functional_for(spec, sample_member(spec, s, degree, headroom)), z)
        except DomainError as exc:
            raise DomainError(f"sample {i} (seed {s}): {exc}", exc.z) from exc
        failures += int(np.count_nonzero(values < FAIL_THRESHOLD))
        k = int(np.argmin(values))
        if values.flat[k] < worst:
            worst, witness_seed, witness_z = float(values.flat[k]), s, complex(z.flat[k])
    return VerifyReport(spec, n_samples, failures, worst, witness_seed, witness_z, r_max)


A_GRID = tuple(np.linspace(1.05, 2.0, 20))
ALPHA_GRID = tuple(np.linspace(1.0, 5.0, 20))
LAM_GRID = tuple(np.linspace(0.05, 1.0, 20))
P_GRID = tuple(np.linspace(0.05, 0.95, 20))


def _check(name, errors, tol, detail=""):
    err = float(max(errors))
    return IdentityResult(name, bool(err <= tol), err, detail)


def identity_checks() -> list:
    """Fixed suite of algebraic identities between the radius formulas."""
    results = []

    results.append(_check(
        "pprime-fixed(a=1) reduces to pprime",
        [abs(radius_for(ClassSpec("pprime-fixed", A=A, a=1.0)).value - pprime_radius(A)) for A in A_GRID],
        1e-10,
    ))

    results.append(_check(
        "lif radius at alpha=2 matches the class S formula",
        [abs(lif_radius(A, 2.0) - (A + 5.0 - math.sqrt(12.0 * (A + 2.0))) / (A - 1.0)) for A in A_GRID],
        1e-12,
    ))

    def smaller_root(A, alpha):
        b = (A + 1.0 + 2.0 * alpha) / (A - 1.0)
        return 1.0 / (b + math.sqrt(b * b - 1.0))

    results.append(_check(
        "lif radius is the smaller root of r^2 - 2br + 1",
        [abs(lif_radius(A, al) - smaller_root(A, al)) for A in A_GRID for al in ALPHA_GRID],
        1e-12,
    ))

    u = polynomial_for(ClassSpec("starlike-half", A=2.0))
    results.append(_check(
        "starlike-half radius at A=2 is 2 - sqrt(3)",
        [abs(radius_for(ClassSpec("starlike-half", A=2.0)).value - (2.0 - math.sqrt(3.0))),
         abs(float(u(2.0 - math.sqrt(3.0))))],
        1e-9,
    ))

    results.append(_check(
        "u0 radius at A=2, lambda=1 is 1/7",
        [abs(radius_for(ClassSpec("u0", A=2.0, lam=1.0)).value - 1.0 / 7.0)],
        1e-9,
    ))

    errs = []
    for lam in LAM_GRID:
        for p in P_GRID:
            phi = polynomial_for(ClassSpec("vp", lam=lam, p=p))
            psi = polynomial_for(ClassSpec("vp-convex", lam=lam, p=p))
            errs.append(abs(float(phi(p)) + 4.0 * lam * p**3 * (1.0 + p * p) * (1.0 - lam * p * p)))
            errs.append(abs(float(psi(p)) + 8.0 * lam * p**4 * (1.0 - lam * p * p)))
    results.append(_check("vp polynomials at r=p match their closed values", errs, 1e-12))
    return results
