"""
Magnetic- and electric-type spherical waves of the Maxwell field on S3.

Internal arithmetic is dimensionless (curvature radius 1, c = 1); a
:class:`ModeSpec` carries (rho, c) only to report physical frequencies.
"""

import enum
from dataclasses import dataclass, replace

import numpy as np

from . import angular
from . import dkp_algebra as alg
from . import geometry
from .hypergeom import profile_derivatives
from .radial import RadialState, _check_chi

FD_STEP = 1e-4

#: cyclic (Phi_0, Phi_-1, Phi_0', Phi_+1) -> tetrad Cartesian (Phi_(0..3))
CARTESIAN_FROM_CYCLIC = np.array([
    [1, 0, 0, 0],
    [0, -np.sqrt(0.5), 0, np.sqrt(0.5)],
    [0, -1j * np.sqrt(0.5), 0, -1j * np.sqrt(0.5)],
    [0, 0, 1, 0],
], dtype=complex)
CARTESIAN_FROM_CYCLIC.flags.writeable = False


class ModeKind(enum.Enum):
    MAGNETIC = "magnetic"
    ELECTRIC = "electric"


def spectrum(j, n, rho=1.0, c=1.0):
    """Eigenfrequency (c / rho)(n + 1 + j) of the (j, n) mode."""
    if j < 1:
        raise ValueError("j = 0 is excluded: both wave types need helicity +-1 harmonics")
    if n < 0:
        raise ValueError("n must be non-negative")
    if rho <= 0 or c <= 0:
        raise ValueError("rho and c must be positive")
    return (c / rho) * (n + 1 + j)


@dataclass(frozen=True)
class ModeSpec:
    kind: ModeKind
    j: int
    n: int
    m: int = 0
    rho: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", ModeKind(self.kind))
        if self.j < 1:
            raise ValueError("j = 0 is excluded: both wave types need helicity +-1 harmonics")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if abs(self.m) > self.j:
            raise ValueError(f"|m| must not exceed j (j={self.j}, m={self.m})")
        if self.rho <= 0 or self.c <= 0:
            raise ValueError("rho and c must be positive")

    @property
    def omega(self):
        """Dimensionless frequency n + 1 + j."""
        return self.n + 1 + self.j

    @property
    def omega_physical(self):
        return spectrum(self.j, self.n, self.rho, self.c)

    @property
    def parity(self):
        if self.kind is ModeKind.MAGNETIC:
            return (-1) ** (self.j + 1)
        return (-1) ** self.j

    @property
    def nu(self):
        return np.sqrt(self.j * (self.j + 1) / 2)


@dataclass(frozen=True)
class RadialSolution:
    """
    The ten radial amplitudes of a mode. Calling the object returns an array
    of shape (10,) + chi.shape; :meth:`derivative` returns d/dchi of each.
    ``scale`` multiplies every amplitude (1.0 keeps the raw profile constant).
    """

    spec: ModeSpec
    scale: complex = 1.0

    def _evaluate(self, chi):
        chi = _check_chi(chi)
        spec = self.spec
        w, nu = spec.omega, spec.nu
        f, df, d2f = profile_derivatives(spec.j, spec.n, chi, order=2)
        s, c = np.sin(chi), np.cos(chi)
        cot = c / s
        dcot = -1 / s ** 2
        val = np.zeros((10,) + chi.shape, dtype=complex)
        der = np.zeros_like(val)
        if spec.kind is ModeKind.MAGNETIC:
            f2 = f / s
            df2 = df / s - f * c / s ** 2
            d2f2 = d2f / s - 2 * df * c / s ** 2 + f * (1 / s + 2 * c ** 2 / s ** 3)
            val[1], der[1] = f2, df2
            val[4], der[4] = -1j * w * f2, -1j * w * df2
            val[7] = -1j * (df2 + cot * f2)
            der[7] = -1j * (d2f2 + dcot * f2 + cot * df2)
            val[8] = 2j * nu * f2 / s
            der[8] = 2j * nu * (df2 / s - f2 * c / s ** 2)
            for k, sign in ((3, -1), (6, -1), (9, 1)):
                val[k], der[k] = sign * val[k - 2], sign * der[k - 2]
        else:
            F8, dF8 = f, df
            F5, dF5 = -df / w, -d2f / w
            F6, dF6 = 2 * nu / w * f, 2 * nu / w * df
            F2, dF2 = -1j * df / w ** 2, -1j * d2f / w ** 2
            F3 = 2j * nu / w ** 2 * f / s ** 2
            dF3 = 2j * nu / w ** 2 * (df / s ** 2 - 2 * f * c / s ** 3)
            val[1], der[1] = F2 / s, dF2 / s - F2 * c / s ** 2
            val[2], der[2] = F3, dF3
            val[4], der[4] = F5 / s, dF5 / s - F5 * c / s ** 2
            val[5], der[5] = F6 / s ** 2, dF6 / s ** 2 - 2 * F6 * c / s ** 3
            val[7], der[7] = F8 / s, dF8 / s - F8 * c / s ** 2
            for k, sign in ((3, 1), (6, 1), (9, -1)):
                val[k], der[k] = sign * val[k - 2], sign * der[k - 2]
        return self.scale * val, self.scale * der

    def __call__(self, chi):
        return self._evaluate(chi)[0]

    def derivative(self, chi):
        return self._evaluate(chi)[1]

    def state(self, chi, omega=None):
        """:class:`RadialState` at ``chi``; ``omega`` overrides the frequency."""
        val, der = self._evaluate(chi)
        w = self.spec.omega if omega is None else omega
        return RadialState(val, der, np.asarray(chi, dtype=float), w, self.spec.j)

    def reduced(self, chi):
        """
        Electric-type reduced amplitudes F (and dF) indexed like f: F2 = sin f2,
        F3 = f3, F5 = sin f5, F6 = sin^2 f6, F8 = sin f8.
        """
        if self.spec.kind is not ModeKind.ELECTRIC:
            raise ValueError("reduced amplitudes are defined for electric-type modes")
        val, der = self._evaluate(chi)
        s, c = np.sin(chi), np.cos(chi)
        F = np.zeros_like(val)
        dF = np.zeros_like(der)
        for k in (1, 4, 7):
            F[k], dF[k] = s * val[k], c * val[k] + s * der[k]
        F[2], dF[2] = val[2], der[2]
        F[5], dF[5] = s ** 2 * val[5], 2 * s * c * val[5] + s ** 2 * der[5]
        return F, dF

    def normalized(self, chi_grid):
        """Copy rescaled so that max |f2| over ``chi_grid`` equals 1."""
        peak = np.abs(RadialSolution(self.spec)(chi_grid)[1]).max()
        return replace(self, scale=1.0 / peak)


def magnetic_mode(spec):
    if spec.kind is not ModeKind.MAGNETIC:
        raise ValueError("magnetic_mode needs a magnetic ModeSpec")
    return RadialSolution(spec)


def electric_mode(spec):
    if spec.kind is not ModeKind.ELECTRIC:
        raise ValueError("electric_mode needs an electric ModeSpec")
    return RadialSolution(spec)


def build_mode(spec):
    if spec.kind is ModeKind.MAGNETIC:
        return magnetic_mode(spec)
    return electric_mode(spec)


@dataclass(frozen=True)
class PotentialSample:
    cyclic: np.ndarray
    cartesian: np.ndarray


def potential(solution, t, chi, theta, phi):
    """
    Tetrad 4-potential: cyclic slots (f1 D_0, f2 D_-1, f3 D_0, f4 D_+1) times
    exp(-i omega t), and its Cartesian tetrad components.
    """
    spec = solution.spec
    f = solution(chi)
    d = {s: angular.slot_function(spec.j, spec.m, s, theta, phi) for s in (-1, 0, 1)}
    phase = np.exp(-1j * spec.omega * t)
    cyc = phase * np.array([f[0] * d[0], f[1] * d[-1], f[2] * d[0], f[3] * d[1]])
    return PotentialSample(cyc, np.tensordot(CARTESIAN_FROM_CYCLIC, cyc, axes=1))


def lorentz_residual(solution, chi):
    """-i omega f1 - (d/dchi + 2 cot) f3 - sqrt(j(j+1))/(sqrt2 sin) (f2 + f4)."""
    chi = _check_chi(chi)
    spec = solution.spec
    f, df = solution(chi), solution.derivative(chi)
    s = np.sin(chi)
    return (-1j * spec.omega * f[0] - (df[2] + 2 * np.cos(chi) / s * f[2])
            - np.sqrt(spec.j * (spec.j + 1)) / (np.sqrt(2) * s) * (f[1] + f[3]))


def lorentz_residual_electric_form(solution, chi):
    """Parity (-1)^j form i omega f1 + (d + 2 cot) f3 + 2 nu/sin f2 (= -lorentz_residual)."""
    chi = _check_chi(chi)
    spec = solution.spec
    f, df = solution(chi), solution.derivative(chi)
    s = np.sin(chi)
    return (1j * spec.omega * f[0] + (df[2] + 2 * np.cos(chi) / s * f[2])
            + 2 * spec.nu / s * f[1])


def landau_residual(solution, chi):
    """(f1, (d/dchi + 2 cot) f3 + 2 nu/sin f2) for an electric-type mode."""
    if solution.spec.kind is not ModeKind.ELECTRIC:
        raise ValueError("the Landau condition is stated for electric-type modes")
    chi = _check_chi(chi)
    f, df = solution(chi), solution.derivative(chi)
    s = np.sin(chi)
    return f[0], df[2] + 2 * np.cos(chi) / s * f[2] + 2 * solution.spec.nu / s * f[1]


def field_sample(solution, t, chi, theta, phi):
    """10-component wavefunction exp(-i omega t) f_k(chi) D_{sigma_k}(theta, phi)."""
    spec = solution.spec
    return (np.exp(-1j * spec.omega * t)
            * angular.separated_field(solution(chi), spec.j, spec.m, theta, phi))


def _fd5(fun, x, h):
    return (-fun(x + 2 * h) + 8 * fun(x + h) - 8 * fun(x - h) + fun(x - 2 * h)) / (12 * h)


def apply_dkp_operator(field, omega, m, chi, theta, h=FD_STEP):
    """
    Apply the separated Duffin-Kemmer operator to ``field(chi, theta)`` (a
    10-vector at fixed t, phi carrying exp(-i omega t) exp(i m phi)):

        i b0 d_t + i b3 d_chi + connection(chi) + Sigma / sin(chi) - P6

    with d_t = -i omega, d_phi = i m exact and d_chi, d_theta by 5-point
    differences.
    """
    if min(chi, theta) <= 2 * h or max(chi, theta) >= np.pi - 2 * h:
        raise FloatingPointError("difference stencil reaches a coordinate singularity")
    phi0 = np.asarray(field(chi, theta), dtype=complex)
    dchi = _fd5(lambda x: np.asarray(field(x, theta)), chi, h)
    dtheta = _fd5(lambda x: np.asarray(field(chi, x)), theta, h)
    ij12 = 1j * alg.spin_generator(1, 2)
    sigma = (1j * alg.beta(1) @ dtheta
             + alg.beta(2) @ (-m * phi0 + np.cos(theta) * (ij12 @ phi0)) / np.sin(theta))
    return (omega * (alg.beta(0) @ phi0)
            + 1j * alg.beta(3) @ dchi
            + geometry.connection_term(chi) @ phi0
            + sigma / np.sin(chi)
            - alg.projector_p6() @ phi0)


def dkp_equation_residual(solution, t, chi, theta, phi, h=FD_STEP):
    """Full covariant equation applied to the mode's wavefunction."""
    spec = solution.spec
    return apply_dkp_operator(lambda x, y: field_sample(solution, t, x, y, phi),
                              spec.omega, spec.m, chi, theta, h)
