"""
Static S3 universe in spherical coordinates (t, chi, theta, phi), unit radius.

    ds^2 = dt^2 - dchi^2 - sin^2(chi) (dtheta^2 + sin^2(theta) dphi^2)

Closed-form geometric data used by the Duffin-Kemmer operator, and
finite-difference oracles that rebuild the same data from the metric alone.
Array conventions: ``tetrad[a, alpha] = e^alpha_(a)``,
``christoffel[lam, mu, nu] = Gamma^lam_{mu nu}``, ``gamma[a, b, c]`` with all
tetrad indices lowered.
"""

from dataclasses import dataclass

import numpy as np

from . import dkp_algebra as alg

T, CHI, THETA, PHI = range(4)

FD_STEP = 1e-5


class CoordinateDomainError(ValueError):
    """Point lies on a coordinate singularity (chi or theta in {0, pi})."""


def _check_interior(chi, theta=None):
    for name, v in (("chi", chi), ("theta", theta)):
        if v is None:
            continue
        if not 0.0 < v < np.pi:
            raise CoordinateDomainError(f"{name}={v!r} outside (0, pi)")


def metric_diag(chi, theta):
    return np.array([1.0, -1.0, -np.sin(chi) ** 2,
                     -(np.sin(chi) * np.sin(theta)) ** 2])


def metric(chi, theta):
    return np.diag(metric_diag(chi, theta))


def sqrt_minus_g(chi, theta):
    return np.sin(chi) ** 2 * np.sin(theta)


def tetrad_at(chi, theta):
    """
    Tetrad vectors e^alpha_(a) as rows of a 4x4 array.

    The time vector e_(0) and the radial vector e_(3) are coordinate
    directions; e_(1) and e_(2) are the normalized theta and phi directions.
    """
    _check_interior(chi, theta)
    e = np.zeros((4, 4))
    e[0, T] = 1.0
    e[1, THETA] = 1.0 / np.sin(chi)
    e[2, PHI] = 1.0 / (np.sin(chi) * np.sin(theta))
    e[3, CHI] = 1.0
    return e


def orthonormality_residual(chi, theta):
    e = tetrad_at(chi, theta)
    return float(np.abs(e @ metric(chi, theta) @ e.T - alg.ETA).max())


def christoffel_at(chi, theta):
    """
    Non-zero Christoffel symbols as a map ``(lam, mu, nu) -> value``, both
    orderings of the symmetric lower pair included.
    """
    _check_interior(chi, theta)
    sc, cc = np.sin(chi), np.cos(chi)
    st, ct = np.sin(theta), np.cos(theta)
    base = {
        (CHI, PHI, PHI): -sc * cc * st ** 2,
        (CHI, THETA, THETA): -sc * cc,
        (THETA, PHI, PHI): -st * ct,
        (THETA, THETA, CHI): cc / sc,
        (PHI, PHI, THETA): ct / st,
        (PHI, CHI, PHI): cc / sc,
    }
    out = {}
    for (lam, mu, nu), val in base.items():
        out[(lam, mu, nu)] = val
        out[(lam, nu, mu)] = val
    return out


def christoffel_array(chi, theta):
    g = np.zeros((4, 4, 4))
    for idx, val in christoffel_at(chi, theta).items():
        g[idx] = val
    return g


def ricci_rotation_at(chi, theta):
    """Ricci rotation coefficients gamma[a, b, c]; only c = 1, 2 are non-zero."""
    _check_interior(chi, theta)
    cot_chi = np.cos(chi) / np.sin(chi)
    q = np.cos(theta) / (np.sin(theta) * np.sin(chi))
    g = np.zeros((4, 4, 4))
    g[1, 3, 1], g[3, 1, 1] = -cot_chi, cot_chi
    g[1, 2, 2], g[2, 1, 2] = q, -q
    g[2, 3, 2], g[3, 2, 2] = -cot_chi, cot_chi
    return g


def tetrad_divergence(a, chi, theta):
    """Covariant divergence of e^{(a) alpha} (tetrad index raised)."""
    _check_interior(chi, theta)
    if a == 1:
        return -np.cos(theta) / (np.sin(theta) * np.sin(chi))
    if a == 3:
        return -2.0 * np.cos(chi) / np.sin(chi)
    if a in (0, 2):
        return 0.0
    raise ValueError(f"tetrad index must be 0..3, got {a!r}")


def connection_term(chi):
    """
    Radial part of the spinor connection, i cot(chi) (beta^1 J^31 + beta^2 J^32).

    The theta-dependent remainder, beta^2 iJ^12 cot(theta)/sin(chi), is kept
    inside the angular operator.
    """
    _check_interior(chi)
    b1, b2 = alg.beta(1), alg.beta(2)
    m = b1 @ alg.spin_generator(3, 1) + b2 @ alg.spin_generator(3, 2)
    return 1j * np.cos(chi) / np.sin(chi) * m


def connection_assembly(chi, theta, gamma=None):
    """
    General contraction i beta^c (1/2) J^{ab} gamma_{abc} at (chi, theta).

    ``gamma`` defaults to the closed-form coefficients; pass the
    finite-difference ones to assemble from the metric alone.
    """
    if gamma is None:
        gamma = ricci_rotation_at(chi, theta)
    out = np.zeros((10, 10), dtype=complex)
    for a in range(4):
        for b in range(4):
            if a == b:
                continue
            jab = alg.spin_generator(a, b)
            for c in range(4):
                if gamma[a, b, c] != 0.0:
                    out += 0.5j * gamma[a, b, c] * (alg.beta(c) @ jab)
    return out


def angular_connection_term(chi, theta):
    """The part of the connection absorbed into the angular operator."""
    _check_interior(chi, theta)
    return (np.cos(theta) / (np.sin(theta) * np.sin(chi))
            * alg.beta(2) @ (1j * alg.spin_generator(1, 2)))


@dataclass(frozen=True)
class GeometryPoint:
    chi: float
    theta: float
    metric_diag: np.ndarray
    tetrad: np.ndarray
    christoffel: dict
    gamma: np.ndarray

    @classmethod
    def at(cls, chi, theta):
        return cls(chi, theta, metric_diag(chi, theta), tetrad_at(chi, theta),
                   christoffel_at(chi, theta), ricci_rotation_at(chi, theta))


# --- finite-difference oracles -------------------------------------------

def _richardson(fun, x, h):
    """Central difference at step h refined with h/2 (error O(h^4))."""
    d1 = (fun(x + h) - fun(x - h)) / (2 * h)
    d2 = (fun(x + h / 2) - fun(x - h / 2)) / h
    return (4 * d2 - d1) / 3


def _coordinate_gradient(field, chi, theta, h):
    """d field / dx^alpha for a field of (chi, theta); t and phi are Killing."""
    val = np.asarray(field(chi, theta))
    grad = np.zeros((4,) + val.shape, dtype=val.dtype)
    grad[CHI] = _richardson(lambda x: np.asarray(field(x, theta)), chi, h)
    grad[THETA] = _richardson(lambda x: np.asarray(field(chi, x)), theta, h)
    return grad


def christoffel_fd(chi, theta, h=FD_STEP):
    """Levi-Civita symbols from numerically differentiated metric components."""
    dg = _coordinate_gradient(metric, chi, theta, h)  # dg[sigma, mu, nu]
    ginv = np.linalg.inv(metric(chi, theta))
    lower = 0.5 * (np.einsum("mrn->rmn", dg) + np.einsum("nrm->rmn", dg) - dg)
    return np.einsum("lr,rmn->lmn", ginv, lower)


def metric_compatibility_residual(chi, theta, h=FD_STEP):
    """max |nabla_alpha g_{beta gamma}| with closed-form Christoffels."""
    dg = _coordinate_gradient(metric, chi, theta, h)
    g = metric(chi, theta)
    gam = christoffel_array(chi, theta)
    cov = (dg - np.einsum("mab,mc->abc", gam, g)
           - np.einsum("mac,bm->abc", gam, g))
    return float(np.abs(cov).max())


def ricci_rotation_fd(chi, theta, h=FD_STEP):
    """
    gamma_{abc} = e_{(b) beta; alpha} e^beta_(a) e^alpha_(c), with the
    covariant derivative built from finite differences of the metric.
    """
    def lowered(x, y):
        return tetrad_at(x, y) @ metric(x, y)  # e_{(b) beta}

    e = tetrad_at(chi, theta)
    low = lowered(chi, theta)
    d_low = _coordinate_gradient(lowered, chi, theta, h)  # [alpha, b, beta]
    gam = christoffel_fd(chi, theta, h)
    cov = d_low - np.einsum("mab,km->akb", gam, low)  # [alpha, b, beta]
    return np.einsum("akb,ib,ca->ikc", cov, e, e)


def tetrad_divergence_fd(a, chi, theta, h=FD_STEP):
    """(1/sqrt(-g)) d_alpha (sqrt(-g) e^{(a) alpha}) by finite differences."""
    def flux(x, y):
        return sqrt_minus_g(x, y) * alg.ETA[a, a] * tetrad_at(x, y)[a]

    grad = _coordinate_gradient(flux, chi, theta, h)
    return float(np.trace(grad) / sqrt_minus_g(chi, theta))
