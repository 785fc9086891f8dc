"""
Wigner functions for the three helicity slots and the angular part of the
Duffin-Kemmer operator.

Convention: the slot function is

    D_sigma(theta, phi) = D^j_{-m, sigma}(phi, theta, 0) = exp(i m phi) d^j_{-m, sigma}(theta)

with the standard small-d function d^j_{m' m}(beta) = <j m'| exp(-i beta J_y) |j m>.
With this choice the angular recurrences hold with the signs used by the
radial equations; :func:`recurrence_residuals` is the check.
"""

from dataclasses import dataclass

import numpy as np

from . import dkp_algebra as alg

J_MAX = 20
FD_STEP = 1e-4

_LOG_FACT = np.concatenate([[0.0], np.cumsum(np.log(np.arange(1, 4 * J_MAX + 2)))])


def wigner_d(j, m, sigma, theta):
    """
    Small Wigner function d^j_{m, sigma}(theta) from the explicit finite sum.

    Returns 0 when |m| > j or |sigma| > j (the function vanishes there).
    ``theta`` may be an array.
    """
    if j < 0 or j > J_MAX:
        raise ValueError(f"j must lie in [0, {J_MAX}], got {j!r}")
    theta = np.asarray(theta, dtype=float)
    if abs(m) > j or abs(sigma) > j:
        return np.zeros_like(theta)[()]
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    lf = _LOG_FACT
    pref = 0.5 * (lf[j + m] + lf[j - m] + lf[j + sigma] + lf[j - sigma])
    total = np.zeros_like(theta)
    for k in range(max(0, sigma - m), min(j + sigma, j - m) + 1):
        logw = pref - (lf[j + sigma - k] + lf[k] + lf[m - sigma + k] + lf[j - m - k])
        sign = -1.0 if (m - sigma + k) % 2 else 1.0
        total = total + sign * np.exp(logw) * c ** (2 * j + sigma - m - 2 * k) * s ** (m - sigma + 2 * k)
    return total[()]


def slot_function(j, m, sigma, theta, phi=0.0):
    """D_sigma(theta, phi) in the convention of this module."""
    return np.exp(1j * m * phi) * wigner_d(j, -m, sigma, theta)


@dataclass(frozen=True)
class WignerTriple:
    """Slot functions D_{-2} .. D_{+2} at one angle (azimuthal phase included)."""

    j: int
    m: int
    theta: float
    phi: float
    values: dict

    @classmethod
    def at(cls, j, m, theta, phi=0.0):
        if abs(m) > j:
            raise ValueError(f"|m| must not exceed j (j={j}, m={m})")
        vals = {s: complex(slot_function(j, m, s, theta, phi)) for s in range(-2, 3)}
        return cls(j, m, theta, phi, vals)

    def __getitem__(self, sigma):
        return self.values[sigma]


def _fd5(fun, x, h=FD_STEP):
    return (-fun(x + 2 * h) + 8 * fun(x + h) - 8 * fun(x - h) + fun(x - 2 * h)) / (12 * h)


def recurrence_residuals(j, m, theta, h=FD_STEP):
    """
    Absolute residuals of the six first-order recurrences linking D_{-2..2}
    and the two gauge-condition identities, with d/dtheta taken numerically.

    Order: d D_-1, (cos-m)/sin D_-1, d D_0, -m/sin D_0, d D_+1,
    -(m+cos)/sin D_+1, then the two combined identities for D_-1 and D_+1.
    """
    D = {s: (lambda th, s=s: wigner_d(j, -m, s, th)) for s in range(-2, 3)}
    v = {s: D[s](theta) for s in D}
    dv = {s: _fd5(D[s], theta, h) for s in (-1, 0, 1)}
    a = np.sqrt(max((j - 1) * (j + 2), 0))
    lam = np.sqrt(j * (j + 1))
    st, ct = np.sin(theta), np.cos(theta)
    r = [
        dv[-1] - 0.5 * (a * v[-2] - lam * v[0]),
        (-m + ct) / st * v[-1] - 0.5 * (-a * v[-2] - lam * v[0]),
        dv[0] - 0.5 * lam * (v[-1] - v[1]),
        -m / st * v[0] - 0.5 * lam * (-v[-1] - v[1]),
        dv[1] - 0.5 * (lam * v[0] - a * v[2]),
        (-m - ct) / st * v[1] - 0.5 * (-lam * v[0] - a * v[2]),
        (-m + ct) / st * v[-1] + dv[-1] + lam * v[0],
        (m + ct) / st * v[1] + dv[1] - lam * v[0],
    ]
    return np.abs(np.array(r))


def sigma_apply(f, j, m, theta, phi=0.0):
    """
    Closed-form action of the angular operator

        Sigma = i beta^1 d_theta + beta^2 (i d_phi + iJ^12 cos(theta)) / sin(theta)

    on the separated wavefunction ``(f1 D_0, f2 D_-1, ..., f10 D_+1)``, where
    ``f`` holds the ten radial amplitudes. The result is proportional to
    nu = sqrt(j(j+1)/2).
    """
    f = np.asarray(f, dtype=complex)
    if j == 0 and np.any(f[[1, 3, 4, 6, 7, 9]] != 0):
        raise ValueError("j = 0 admits no helicity +-1 harmonics; those amplitudes must vanish")
    f1, f2, f3, f4, f5, f6, f7, f8, f9, f10 = f
    d_m, d_0, d_p = (slot_function(j, m, s, theta, phi) for s in (-1, 0, 1))
    nu = np.sqrt(j * (j + 1) / 2)
    return nu * np.array([
        (-f5 - f7) * d_0,
        1j * f9 * d_m,
        (-1j * f8 + 1j * f10) * d_0,
        -1j * f9 * d_p,
        f1 * d_m,
        0.0,
        f1 * d_p,
        -1j * f3 * d_m,
        (1j * f2 - 1j * f4) * d_0,
        1j * f3 * d_p,
    ], dtype=complex)


def separated_field(f, j, m, theta, phi=0.0):
    """Wavefunction components f_k D_{sigma_k}(theta, phi)."""
    d = {s: slot_function(j, m, s, theta, phi) for s in (-1, 0, 1)}
    return np.asarray(f, dtype=complex) * np.array([d[s] for s in alg.SLOT_HELICITY])


def sigma_direct(f, j, m, theta, phi=0.0, h=FD_STEP):
    """Angular operator applied literally: numerical d_theta, exact d_phi = i m."""
    field = separated_field(f, j, m, theta, phi)
    dtheta = _fd5(lambda th: separated_field(f, j, m, th, phi), theta, h)
    ij12 = 1j * alg.spin_generator(1, 2)
    return (1j * alg.beta(1) @ dtheta
            + alg.beta(2) @ (-m * field + np.cos(theta) * (ij12 @ field)) / np.sin(theta))
