"""Independent reference computations used by the tests.

Nothing here goes through the closed-form pre-Schwarzians in
``conrad.operators``; derivatives are taken by finite differences of
explicitly built ``f`` or ``f'`` and roots come from ``numpy.roots``.
"""
import numpy as np

H = 1e-6


def central_diff(F, z, h=H):
    """Derivative of an analytic F, averaged over the real and imaginary directions."""
    d_real = (F(z + h) - F(z - h)) / (2 * h)
    d_imag = (F(z + 1j * h) - F(z - 1j * h)) / (2j * h)
    return 0.5 * (d_real + d_imag)


def second_diff(F, z, h=1e-4):
    return (F(z + h) - 2 * F(z) + F(z - h)) / (h * h)


def horner_free(coeffs, z):
    """Power-sum evaluation, deliberately not Horner."""
    z = np.asarray(z, dtype=complex)
    return sum(complex(c) * z**k for k, c in enumerate(coeffs))


def presch_from_fprime(fprime, z):
    """z f''/f' with f'' from central differences of f'."""
    return z * central_diff(fprime, z) / fprime(z)


def presch_from_f(f, z, h=1e-4):
    """z f''/f' with both derivatives from finite differences of f."""
    d1 = (f(z + h) - f(z - h)) / (2 * h)
    d2 = second_diff(f, z, h)
    return z * d2 / d1


def T(A, Q, z):
    return (2 / (A - 1)) * ((A + 1) / 2 * (1 + z) / (1 - z) - 1 - Q)


def least_real_root(coeffs_low_first, lo, hi):
    """Smallest real root in (lo, hi) via companion-matrix eigenvalues."""
    roots = np.roots(list(reversed(coeffs_low_first)))
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-9 and lo < r.real < hi)
    return real[0] if real else None


def bisect(F, lo, hi, tol=1e-14):
    flo = F(lo)
    while hi - lo > tol:
        m = 0.5 * (lo + hi)
        fm = F(m)
        if (fm > 0) == (flo > 0):
            lo, flo = m, fm
        else:
            hi = m
    return 0.5 * (lo + hi)
