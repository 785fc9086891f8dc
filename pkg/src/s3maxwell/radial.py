"""
Radial equations of the separated Maxwell field on S3 (dimensionless, unit
curvature radius) and an independent shooting check of the spectrum.

Amplitudes are indexed f[0..9] = f1..f10. Every residual function returns the
left-hand sides of its system, which vanish for exact solutions.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import CoordinateDomainError

SHOOT_MARGIN = 0.01
SHOOT_STEPS = 4000


def _check_chi(chi):
    chi = np.asarray(chi, dtype=float)
    if np.any((chi <= 0.0) | (chi >= np.pi)):
        raise CoordinateDomainError("chi must lie strictly inside (0, pi)")
    return chi


@dataclass(frozen=True)
class RadialState:
    """Amplitudes ``f`` and their chi-derivatives ``df`` (shape (10, ...))."""

    f: np.ndarray
    df: np.ndarray
    chi: np.ndarray
    omega: float
    j: int

    @property
    def nu(self):
        return np.sqrt(self.j * (self.j + 1) / 2)


def _parts(state):
    chi = _check_chi(state.chi)
    f = np.asarray(state.f, dtype=complex)
    df = np.asarray(state.df, dtype=complex)
    return f, df, 1.0 / np.sin(chi), np.cos(chi) / np.sin(chi), state.nu, state.omega


def residual_full(state):
    """All ten first-order radial equations (corrected form)."""
    f, df, cosec, cot, nu, w = _parts(state)
    f1, f2, f3, f4, f5, f6, f7, f8, f9, f10 = f
    return np.array([
        -(df[5] + 2 * cot * f6) - nu * cosec * (f5 + f7),
        1j * w * f5 + 1j * (df[7] + cot * f8) + 1j * nu * cosec * f9,
        1j * w * f6 + 1j * nu * cosec * (-f8 + f10),
        1j * w * f7 - 1j * (df[9] + cot * f10) - 1j * nu * cosec * f9,
        -1j * w * f2 + nu * cosec * f1 - f5,
        -1j * w * f3 - df[0] - f6,
        -1j * w * f4 + nu * cosec * f1 - f7,
        -1j * (df[1] + cot * f2) - 1j * nu * cosec * f3 - f8,
        1j * nu * cosec * (f2 - f4) - f9,
        1j * (df[3] + cot * f4) + 1j * nu * cosec * f3 - f10,
    ])


def residual_parity_magnetic(state):
    """Four equations left for parity (-1)^(j+1), in f2, f5, f8, f9."""
    f, df, cosec, cot, nu, w = _parts(state)
    f2, f5, f8, f9 = f[1], f[4], f[7], f[8]
    return np.array([
        1j * w * f5 + 1j * (df[7] + cot * f8) + 1j * nu * cosec * f9,
        -1j * w * f2 - f5,
        -1j * (df[1] + cot * f2) - f8,
        2j * nu * cosec * f2 - f9,
    ])


def residual_parity_electric(state):
    """Six equations left for parity (-1)^j, in f1, f2, f3, f5, f6, f8."""
    f, df, cosec, cot, nu, w = _parts(state)
    f1, f2, f3, f5, f6, f8 = f[0], f[1], f[2], f[4], f[5], f[7]
    return np.array([
        (df[5] + 2 * cot * f6) + 2 * nu * cosec * f5,
        1j * w * f5 + 1j * (df[7] + cot * f8),
        1j * w * f6 - 2j * nu * cosec * f8,
        -1j * w * f2 + nu * cosec * f1 - f5,
        1j * w * f3 + df[0] + f6,
        1j * (df[1] + cot * f2) + 1j * nu * cosec * f3 + f8,
    ])


def residual_electric_landau(state):
    """Parity (-1)^j system with f1 = 0 (Landau gauge)."""
    f, df, cosec, cot, nu, w = _parts(state)
    f2, f3, f5, f6, f8 = f[1], f[2], f[4], f[5], f[7]
    return np.array([
        (df[5] + 2 * cot * f6) + 2 * nu * cosec * f5,
        1j * w * f5 + 1j * (df[7] + cot * f8),
        1j * w * f6 - 2j * nu * cosec * f8,
        -1j * w * f2 - f5,
        1j * w * f3 + f6,
        1j * (df[1] + cot * f2) + 1j * nu * cosec * f3 + f8,
    ])


def residual_electric_reduced(F, dF, chi, omega, j):
    """
    Landau-gauge electric system after f2 = F2/sin, f3 = F3, f5 = F5/sin,
    f6 = F6/sin^2, f8 = F8/sin. ``F``/``dF`` are indexed like f (slots 1, 2,
    4, 5, 7 are used).
    """
    chi = _check_chi(chi)
    nu = np.sqrt(j * (j + 1) / 2)
    F2, F3, F5, F6, F8 = F[1], F[2], F[4], F[5], F[7]
    return np.array([
        dF[5] + 2 * nu * F5,
        omega * F5 + dF[7],
        omega * F6 - 2 * nu * F8,
        -1j * omega * F2 - F5,
        1j * omega * F3 + F6 / np.sin(chi) ** 2,
        1j * dF[1] + 1j * nu * F3 + F8,
    ])


def residual_magnetic(f2, df2, d2f2, omega, j, chi):
    """(d/dchi + cot)^2 f2 + (omega^2 - j(j+1)/sin^2) f2."""
    if j < 1:
        raise ValueError("j = 0 carries no helicity +-1 harmonics; magnetic modes need j >= 1")
    chi = _check_chi(chi)
    s = np.sin(chi)
    cot = np.cos(chi) / s
    # (d + cot)^2 = d^2 + 2 cot d + cot' + cot^2 = d^2 + 2 cot d - 1
    return d2f2 + 2 * cot * df2 - f2 + (omega ** 2 - j * (j + 1) / s ** 2) * f2


def second_order_residual(f, d2f, omega, j, chi):
    """f'' + (omega^2 - j(j+1)/sin^2 chi) f."""
    chi = _check_chi(chi)
    return d2f + (omega ** 2 - j * (j + 1) / np.sin(chi) ** 2) * f


def second_order_form(f2, chi):
    """f = sin(chi) f2."""
    return np.sin(chi) * np.asarray(f2)


def from_second_order_form(f, chi):
    """f2 = f / sin(chi)."""
    return np.asarray(f) / np.sin(chi)


def z_of_chi(chi):
    """
    z = 1 - exp(-2i chi), checked against the factored form
    2 sin(chi) exp(i(pi/2 - chi)).
    """
    chi = np.asarray(chi, dtype=float)
    z = 1.0 - np.exp(-2j * chi)
    factored = 2 * np.sin(chi) * np.exp(1j * (np.pi / 2 - chi))
    if not np.allclose(z, factored, rtol=0, atol=1e-14):
        raise ArithmeticError("exponential and factored forms of z disagree")
    return z[()]


@dataclass(frozen=True)
class HypergeometricReduction:
    j: int
    omega: float
    a: float
    b: float
    alpha: float
    beta_param: float
    gamma_param: float
    n: Optional[int] = field(default=None)

    @property
    def quantized(self):
        return self.n is not None


def reduction_params(j, omega, tol=1e-12):
    """Regular (a = j+1), polynomial (b = -omega/2) branch of the reduction."""
    a = j + 1.0
    b = -omega / 2
    alpha = a + b - omega / 2
    n_real = omega - j - 1
    n = None
    if n_real > -tol and abs(n_real - round(n_real)) <= tol:
        n = int(round(n_real))
    return HypergeometricReduction(j, omega, a, b, alpha, a + b + omega / 2, 2 * a, n)


def _rk4(rhs, y0, x0, x1, steps):
    h = (x1 - x0) / steps
    y = np.array(y0, dtype=float)
    x = x0
    out = np.empty((steps + 1, y.size))
    out[0] = y
    for k in range(steps):
        k1 = rhs(x, y)
        k2 = rhs(x + h / 2, y + h / 2 * k1)
        k3 = rhs(x + h / 2, y + h / 2 * k2)
        k4 = rhs(x + h, y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        x = x0 + (k + 1) * h
        out[k + 1] = y
    return out


def shoot_profile(j, omega, margin=SHOOT_MARGIN, steps=SHOOT_STEPS):
    """
    Integrate f'' + (omega^2 - j(j+1)/sin^2) f = 0 across (margin, pi - margin)
    from regular data f = sin^(j+1) chi (1 + c chi^2) at the left end.

    Returns ``(chi_grid, f_values)``.
    """
    if j < 1:
        raise ValueError("shooting requires j >= 1")
    if omega <= 0:
        raise ValueError("omega must be positive")
    a = j + 1
    x0, x1 = margin, np.pi - margin
    c2 = (a * a - omega * omega) / (2 * (2 * a + 1))
    s0, c0 = np.sin(x0), np.cos(x0)
    y0 = (s0 ** a * (1 + c2 * x0 ** 2),
          a * s0 ** (a - 1) * c0 * (1 + c2 * x0 ** 2) + s0 ** a * 2 * c2 * x0)
    ll = j * (j + 1)

    h = (x1 - x0) / steps
    stiffness = max(omega, np.sqrt(ll) / np.sin(x0))
    if h * stiffness > 1.0:
        raise FloatingPointError(
            f"step {h:.3g} too coarse for omega={omega}, j={j} "
            f"(need h * {stiffness:.3g} <= 1; raise steps above {int(np.ceil((x1 - x0) * stiffness))})")
    w2 = np.float64(omega) ** 2

    def rhs(x, y):
        return np.array([y[1], -(w2 - ll / np.sin(x) ** 2) * y[0]])

    with np.errstate(over="ignore", invalid="ignore"):
        sol = _rk4(rhs, y0, x0, x1, steps)
    if not np.all(np.isfinite(sol)):
        raise FloatingPointError(f"shooting diverged for j={j}, omega={omega}, steps={steps}")
    return np.linspace(x0, x1, steps + 1), sol[:, 0]


def shoot_regularity(j, omega, margin=SHOOT_MARGIN, steps=SHOOT_STEPS):
    """
    |f(pi - margin)| / max |f| for the regular shooting solution; small only
    when omega is an eigenfrequency.
    """
    _, f = shoot_profile(j, omega, margin, steps)
    return float(abs(f[-1]) / np.abs(f).max())
