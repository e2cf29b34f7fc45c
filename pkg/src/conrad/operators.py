"""Concavity operators and pre-Schwarzians of class members.

A class member is never stored as ``f`` itself.  It is described by the
Schwarz-class datum of its representation, and this module turns that
datum into an evaluator for ``z f''(z) / f'(z)``.  All evaluators accept
scalars or numpy arrays.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, Optional

import numpy as np

from .analytic import CPoly, SchwarzCert, cpoly_eval
from .errors import DomainError, ParameterError, SingularityError

KINDS = ("pprime", "pprime-fixed", "lif", "starlike-half", "u0", "vp", "vp-convex")

# parameters each kind takes; anything else must be left unset
KIND_PARAMS = {
    "pprime": ("A",),
    "pprime-fixed": ("A", "a"),
    "lif": ("A", "alpha"),
    "starlike-half": ("A",),
    "u0": ("A", "lam"),
    "vp": ("lam", "p"),
    "vp-convex": ("lam", "p"),
}

A_MIN = 1.0 + 1e-9
DELTA_POLE = 1e-3

# public (CLI / JSON) spelling of each field
PARAM_NAMES = {"A": "A", "a": "a", "alpha": "alpha", "lam": "lambda", "p": "p"}


def _check_A(A):
    if not (A_MIN < A <= 2.0):
        raise ParameterError(f"A must lie in (1, 2], got {A!r}", "A")


@dataclass(frozen=True)
class ClassSpec:
    """One of the function classes together with its parameters."""

    kind: str
    A: Optional[float] = None
    a: Optional[float] = None
    alpha: Optional[float] = None
    lam: Optional[float] = None
    p: Optional[float] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown class {self.kind!r}; expected one of {', '.join(KINDS)}", "class")
        wanted = KIND_PARAMS[self.kind]
        for name in PARAM_NAMES:
            value = getattr(self, name)
            public = PARAM_NAMES[name]
            if name in wanted and value is None:
                raise ParameterError(f"class {self.kind} requires {public}", public)
            if name not in wanted and value is not None:
                raise ParameterError(f"class {self.kind} does not take {public}", public)
            if value is not None:
                if not math.isfinite(value):
                    raise ParameterError(f"{public} must be finite", public)
                object.__setattr__(self, name, float(value))

        if self.A is not None:
            _check_A(self.A)
        if self.a is not None and not 0.0 <= self.a <= 1.0:
            raise ParameterError(f"a must lie in [0, 1], got {self.a!r}", "a")
        if self.alpha is not None and self.alpha < 1.0:
            raise ParameterError(f"alpha must be >= 1, got {self.alpha!r}", "alpha")
        if self.lam is not None and not 0.0 < self.lam <= 1.0:
            raise ParameterError(f"lambda must lie in (0, 1], got {self.lam!r}", "lambda")
        if self.p is not None and not 0.0 < self.p < 1.0:
            raise ParameterError(f"p must lie in (0, 1), got {self.p!r}", "p")

    def params(self) -> dict:
        """Set parameters keyed by their public names."""
        return {PARAM_NAMES[k]: v for k, v in asdict(self).items() if k != "kind" and v is not None}

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.params()}

    @classmethod
    def from_dict(cls, d: dict) -> "ClassSpec":
        inverse = {v: k for k, v in PARAM_NAMES.items()}
        return cls(d["kind"], **{inverse[k]: v for k, v in d.items() if k != "kind"})

    def replace(self, **params) -> "ClassSpec":
        """Copy with some parameters changed, keyed by public name."""
        return ClassSpec.from_dict({**self.to_dict(), **params})


@dataclass(frozen=True)
class PreSchwarzian:
    """Evaluator of ``Q(z) = z f''(z) / f'(z)`` for one function.

    For meromorphic members ``regularized`` evaluates the pole-cancelled
    combination ``1 + Q(z) + (z + p)/(z - p)``, which stays finite at ``z = p``.
    """

    eval: Callable
    regularized: Optional[Callable] = None

    def __call__(self, z):
        return self.eval(z)


def _check_disc(z):
    if np.any(np.abs(z) >= 1.0):
        bad = z if np.ndim(z) == 0 else np.asarray(z)[np.abs(z) >= 1.0].ravel()[0]
        raise DomainError(f"|z| must be < 1, got z={complex(bad)!r}", complex(bad))


def half_plane_kernel(z):
    """``(1 + z)/(1 - z)``, the Caratheodory kernel."""
    return (1.0 + z) / (1.0 - z)


def t_of(A: float, q: PreSchwarzian, z):
    """Concavity functional ``T_f`` for aperture ``A``; positive real part on
    a disc means ``f`` behaves like a member of ``Co(A)`` there."""
    _check_A(A)
    _check_disc(z)
    return (2.0 / (A - 1.0)) * (0.5 * (A + 1.0) * half_plane_kernel(z) - 1.0 - q(z))


def p_of(p: float, q: PreSchwarzian, z, delta_pole: float = DELTA_POLE):
    """Concavity functional ``P_f`` for a function with a simple pole at ``p``.

    Uses the pole-cancelled evaluator when ``q`` carries one; otherwise
    points within ``delta_pole`` of the pole are rejected.
    """
    if not 0.0 < p < 1.0:
        raise ParameterError(f"p must lie in (0, 1), got {p!r}", "p")
    _check_disc(z)
    inner = (1.0 + p * z) / (1.0 - p * z)
    if q.regularized is not None:
        return -(q.regularized(z) - inner)
    near = np.abs(np.asarray(z) - p) <= delta_pole
    if np.any(near):
        bad = complex(np.asarray(z)[near].ravel()[0]) if np.ndim(z) else complex(z)
        raise SingularityError(f"z={bad!r} lies within {delta_pole} of the pole p={p}", bad)
    return -(1.0 + q(z) + (z + p) / (z - p) - inner)


def presch_for(spec: ClassSpec, data: SchwarzCert) -> PreSchwarzian:
    """Pre-Schwarzian of the member of ``spec.kind`` built from ``data``.

    ``data`` plays the role of ``g`` (pprime kinds, ``f' = (1+g)/(1-g)``),
    of ``phi`` (starlike-half, ``z f'/f = 1/(1 + z phi)``) or of ``w1``
    (u0 and vp kinds, ``(z/f)^2 f' = 1 - lambda z^2 w1``).
    """
    kind = spec.kind
    if kind in ("pprime", "pprime-fixed"):
        if not data.vanishes_at_zero:
            raise ParameterError(f"{kind} needs a datum vanishing at 0", "data")
        if kind == "pprime-fixed":
            lin = data.poly.coeffs[1] if len(data.poly.coeffs) > 1 else 0j
            if abs(lin - spec.a) > 1e-12:
                raise ParameterError(f"datum has g'(0)={lin!r}, expected a={spec.a!r}", "a")
        return _presch_pprime(data.poly)
    if kind == "starlike-half":
        return _presch_starlike_half(data.poly)
    if kind == "u0":
        return _presch_u0(data.poly, spec.lam)
    if kind in ("vp", "vp-convex"):
        return _presch_vp(data.poly, spec.lam, spec.p)
    raise ParameterError(f"no constructive members for class {kind}", "class")


def _presch_pprime(g: CPoly) -> PreSchwarzian:
    dg = g.derivative()

    def q(z):
        gz = cpoly_eval(g, z)
        return 2.0 * z * cpoly_eval(dg, z) / (1.0 - gz * gz)

    return PreSchwarzian(q)


def _presch_starlike_half(phi: CPoly) -> PreSchwarzian:
    # z f'/f = 1/(1 + z phi)  =>  1 + z f''/f' = (1 - z phi - z^2 phi') / (1 + z phi)
    zphi = phi.shift(1)
    numer = 1.0 - zphi - phi.derivative().shift(2)
    denom = 1.0 + zphi

    def q(z):
        return cpoly_eval(numer, z) / cpoly_eval(denom, z) - 1.0

    return PreSchwarzian(q)


def _presch_u0(w1: CPoly, lam: float) -> PreSchwarzian:
    # z/f = 1 + lam z W with W' = w1, W(0) = 0.  |lam z W| <= lam |z|^2 < 1 and
    # |lam z^2 w1| < 1, so neither denominator vanishes in the disc.
    W = w1.antiderivative()
    u = w1.shift(2)
    zdu = u.derivative().shift(1)
    num2 = (W + w1.shift(1)).shift(1)
    den1 = 1.0 - lam * u
    den2 = 1.0 + lam * W.shift(1)

    def q(z):
        return -lam * cpoly_eval(zdu, z) / cpoly_eval(den1, z) - 2.0 * lam * cpoly_eval(num2, z) / cpoly_eval(den2, z)

    return PreSchwarzian(q)


def _presch_vp(w1: CPoly, lam: float, p: float) -> PreSchwarzian:
    # z/f = -(z - p)(1 - lam p z w)/p with w = (W(z) - W(p))/(z - p); the
    # difference quotient of a polynomial is a polynomial, so w is exact.
    W = w1.antiderivative()
    w = W.deflate(p)
    zw = w.shift(1)
    u = w1.shift(2)
    zdu = u.derivative().shift(1)
    den1 = 1.0 - lam * u
    den2 = 1.0 - lam * p * zw
    zdzw = zw.derivative().shift(1)
    # u - p z w vanishes at p, so dividing out (z - p) leaves a polynomial
    s = (u - p * zw).deflate(p)

    def q(z):
        return (
            -2.0 * z / (z - p)
            - lam * cpoly_eval(zdu, z) / cpoly_eval(den1, z)
            + 2.0 * lam * p * cpoly_eval(zdzw, z) / cpoly_eval(den2, z)
        )

    def reg(z):
        return -lam * cpoly_eval(zdu, z) / cpoly_eval(den1, z) + 2.0 * lam * p * cpoly_eval(s, z) / cpoly_eval(den2, z)

    return PreSchwarzian(q, reg)


def u_functional(spec: ClassSpec, data: SchwarzCert, z):
    """``U_f(z) = (z/f)^2 f' - 1`` for a u0 or vp member; equals ``-lam z^2 w1(z)``."""
    if spec.kind not in ("u0", "vp", "vp-convex"):
        raise ParameterError(f"U_f representation is defined for u0/vp classes, not {spec.kind}", "class")
    _check_disc(z)
    return -spec.lam * z * z * cpoly_eval(data.poly, z)


def u_functional_direct(f: Callable, fprime: Callable, z):
    """``(z/f)^2 f' - 1`` from explicit evaluators of ``f`` and ``f'``."""
    _check_disc(z)
    return (z / f(z)) ** 2 * fprime(z) - 1.0


def extremal_presch(kind: str, alpha: float = 2.0) -> PreSchwarzian:
    """Pre-Schwarzian of the extremal function of the sharp theorems.

    pprime: ``f0(z) = -z + 2 log(1 + z)``, i.e. ``g(z) = -z``.
    lif: ``g0(z) = (1 - ((1 - z)/(1 + z))**alpha) / (2 alpha)``.
    """
    if kind == "pprime":
        return PreSchwarzian(lambda z: -2.0 * z / (1.0 - z * z))
    if kind == "lif":
        if alpha < 1.0:
            raise ParameterError(f"alpha must be >= 1, got {alpha!r}", "alpha")
        return PreSchwarzian(lambda z: (2.0 * z * z - 2.0 * alpha * z) / (1.0 - z * z))
    raise ParameterError(f"no extremal function for class {kind}", "class")


def closed_extremal_t(kind: str, A: float, alpha: Optional[float], z):
    """Closed form of ``T`` for the extremal function of ``kind``."""
    _check_A(A)
    if np.any(np.abs(1.0 - z * z) < 1e-15):
        raise DomainError(f"T of the extremal function has poles at z = +-1, got z={z!r}", z)
    if kind == "pprime":
        c = (A - 1.0) / (A + 3.0)
        return ((A + 3.0) / (A - 1.0)) * (z * z + 2.0 * z + c) / (1.0 - z * z)
    if kind == "lif":
        if alpha is None or alpha < 1.0:
            raise ParameterError(f"alpha must be >= 1, got {alpha!r}", "alpha")
        b = (A + 1.0 + 2.0 * alpha) / (A - 1.0)
        return (z * z + 2.0 * b * z + 1.0) / (1.0 - z * z)
    raise ParameterError(f"no closed extremal form for class {kind}", "class")
