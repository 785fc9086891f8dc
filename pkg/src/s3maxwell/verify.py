"""
Named verification suites. Each suite returns a list of :class:`Check`;
a check passes when its value respects the tolerance in the given direction
(``upper``: value <= tol, ``lower``: value >= tol).
"""

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import angular, geometry, modes, radial
from . import dkp_algebra as alg

SUITES = ("algebra", "geometry", "angular", "radial", "gauge", "full")

DEFAULT_TOLERANCES = {
    "algebra.trilinear": 1e-12,
    "algebra.ij12_structure": 1e-15,
    "algebra.parity_involution": 1e-15,
    "geometry.orthonormality": 1e-12,
    "geometry.christoffel": 1e-8,
    "geometry.ricci_rotation": 1e-8,
    "geometry.divergence": 1e-8,
    "geometry.metric_compatibility": 1e-6,
    "geometry.connection": 1e-12,
    "angular.recurrence": 1e-6,
    "angular.sigma": 1e-6,
    "angular.orthogonality": 1e-8,
    "radial.full_system": 1e-10,
    "radial.split_system": 1e-10,
    "radial.shoot_eigen": 1e-3,
    "radial.shoot_detuned": 0.05,
    "gauge.lorentz_magnetic": 1e-12,
    "gauge.lorentz_electric": 1e-9,
    "gauge.landau": 1e-9,
    "full.dkp": 1e-5,
}
LOWER_BOUND_KEYS = {"radial.shoot_detuned"}


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    value: float
    tolerance: float
    direction: str = "upper"

    @property
    def passed(self):
        if not np.isfinite(self.value):
            return False
        if self.direction == "lower":
            return self.value >= self.tolerance
        return self.value <= self.tolerance


@dataclass
class VerifyOptions:
    grid_points: int = 128
    chi_margin: float = 0.02
    detune: float = 0.0
    seed: int = 20240607
    tolerances: dict = None

    def tol(self, key):
        if self.tolerances and key in self.tolerances:
            return float(self.tolerances[key])
        return DEFAULT_TOLERANCES[key]

    def grid(self):
        return np.linspace(self.chi_margin, np.pi - self.chi_margin, self.grid_points)


def _check(opts, key, value, label=None):
    suite, name = key.split(".", 1)
    direction = "lower" if key in LOWER_BOUND_KEYS else "upper"
    return Check(suite, label or name, float(value), opts.tol(key), direction)


def _mode_sweep(j_max, n_max):
    for kind in modes.ModeKind:
        for j in range(1, j_max + 1):
            for n in range(n_max + 1):
                yield modes.ModeSpec(kind, j, n, m=min(1, j))


def suite_algebra(opts):
    t3 = np.diag([1.0, 0.0, -1.0])
    expected = np.zeros((10, 10))
    for k in range(3):
        expected[1 + 3 * k:4 + 3 * k, 1 + 3 * k:4 + 3 * k] = t3
    ij12 = 1j * alg.spin_generator(1, 2)
    p = alg.parity_matrix()
    return [
        _check(opts, "algebra.trilinear", alg.dkp_trilinear_residual()),
        _check(opts, "algebra.ij12_structure", np.abs(ij12 - expected).max()),
        _check(opts, "algebra.parity_involution", np.abs(p @ p - np.eye(10)).max()),
    ]


def _interior_points(opts, count):
    rng = np.random.default_rng(opts.seed)
    return rng.uniform(0.1, np.pi - 0.1, size=(count, 2))


def suite_geometry(opts):
    pts = _interior_points(opts, 20)
    worst = dict.fromkeys(["orthonormality", "christoffel", "ricci_rotation",
                           "divergence", "metric_compatibility", "connection"], 0.0)
    for chi, theta in pts:
        worst["orthonormality"] = max(worst["orthonormality"],
                                      geometry.orthonormality_residual(chi, theta))
        worst["christoffel"] = max(worst["christoffel"], np.abs(
            geometry.christoffel_fd(chi, theta) - geometry.christoffel_array(chi, theta)).max())
        gam_fd = geometry.ricci_rotation_fd(chi, theta)
        worst["ricci_rotation"] = max(worst["ricci_rotation"], np.abs(
            gam_fd - geometry.ricci_rotation_at(chi, theta)).max())
        worst["divergence"] = max(worst["divergence"], max(
            abs(geometry.tetrad_divergence_fd(a, chi, theta)
                - geometry.tetrad_divergence(a, chi, theta)) for a in range(4)))
        worst["metric_compatibility"] = max(worst["metric_compatibility"],
                                            geometry.metric_compatibility_residual(chi, theta))
        split = geometry.connection_term(chi) + geometry.angular_connection_term(chi, theta)
        worst["connection"] = max(worst["connection"], np.abs(
            geometry.connection_assembly(chi, theta) - split).max())
    return [_check(opts, f"geometry.{k}", v) for k, v in worst.items()]


def suite_angular(opts):
    thetas = np.linspace(0.15, np.pi - 0.15, 20)
    rec = 0.0
    for j in range(1, 5):
        for m in range(-j, j + 1):
            for th in thetas:
                rec = max(rec, angular.recurrence_residuals(j, m, th).max())
    rng = np.random.default_rng(opts.seed)
    sig = 0.0
    for j in range(1, 5):
        for m in (-j, 0, j):
            f = rng.normal(size=10) + 1j * rng.normal(size=10)
            th, ph = rng.uniform(0.2, np.pi - 0.2), rng.uniform(0, 2 * np.pi)
            sig = max(sig, np.abs(angular.sigma_apply(f, j, m, th, ph)
                                  - angular.sigma_direct(f, j, m, th, ph)).max())
    orth = 0.0
    for sigma in (-1, 0, 1):
        for m in (-1, 0, 1):
            for j1 in range(1, 4):
                for j2 in range(1, 4):
                    val, _ = integrate.quad(
                        lambda t: angular.wigner_d(j1, m, sigma, t)
                        * angular.wigner_d(j2, m, sigma, t) * np.sin(t),
                        0, np.pi, epsabs=1e-13, epsrel=1e-13)
                    target = 2.0 / (2 * j1 + 1) if j1 == j2 else 0.0
                    orth = max(orth, abs(val - target))
    return [_check(opts, "angular.recurrence", rec),
            _check(opts, "angular.sigma", sig),
            _check(opts, "angular.orthogonality", orth)]


def suite_radial(opts, j_max=3, n_max=2):
    x = opts.grid()
    full = split = 0.0
    for spec in _mode_sweep(j_max, n_max):
        sol = modes.build_mode(spec)
        state = sol.state(x, omega=spec.omega + opts.detune)
        full = max(full, np.abs(radial.residual_full(state)).max())
        if spec.kind is modes.ModeKind.MAGNETIC:
            split = max(split, np.abs(radial.residual_parity_magnetic(state)).max())
        else:
            F, dF = sol.reduced(x)
            split = max(split,
                        np.abs(radial.residual_electric_landau(state)).max(),
                        np.abs(radial.residual_electric_reduced(
                            F, dF, x, state.omega, spec.j)).max())
    eigen = 0.0
    detuned = np.inf
    for j in range(1, min(j_max, 3) + 1):
        for n in range(min(n_max, 2) + 1):
            w = n + 1 + j
            eigen = max(eigen, radial.shoot_regularity(j, w + opts.detune))
            detuned = min(detuned, radial.shoot_regularity(j, w + 0.5))
    return [_check(opts, "radial.full_system", full),
            _check(opts, "radial.split_system", split),
            _check(opts, "radial.shoot_eigen", eigen),
            _check(opts, "radial.shoot_detuned", detuned)]


def suite_gauge(opts, j_max=3, n_max=2):
    x = opts.grid()
    lor_m = lor_e = landau = 0.0
    for spec in _mode_sweep(j_max, n_max):
        sol = modes.build_mode(spec)
        r = np.abs(modes.lorentz_residual(sol, x)).max()
        if spec.kind is modes.ModeKind.MAGNETIC:
            lor_m = max(lor_m, r)
        else:
            lor_e = max(lor_e, r)
            f1, cond = modes.landau_residual(sol, x)
            landau = max(landau, np.abs(f1).max(), np.abs(cond).max())
    return [_check(opts, "gauge.lorentz_magnetic", lor_m),
            _check(opts, "gauge.lorentz_electric", lor_e),
            _check(opts, "gauge.landau", landau)]


def suite_full(opts, j_max=2, n_max=1, points=5):
    rng = np.random.default_rng(opts.seed)
    worst = 0.0
    for kind in modes.ModeKind:
        for j in range(1, j_max + 1):
            for n in range(n_max + 1):
                for m in sorted({-j, 0, j}):
                    sol = modes.build_mode(modes.ModeSpec(kind, j, n, m))
                    w = sol.spec.omega + opts.detune
                    for _ in range(points):
                        t = rng.uniform(0, 2 * np.pi)
                        chi, theta = rng.uniform(0.2, np.pi - 0.2, size=2)
                        phi = rng.uniform(0, 2 * np.pi)
                        res = modes.apply_dkp_operator(
                            lambda x, y: modes.field_sample(sol, t, x, y, phi),
                            w, m, chi, theta)
                        worst = max(worst, np.abs(res).max())
    return [_check(opts, "full.dkp", worst)]


_RUNNERS = {
    "algebra": suite_algebra,
    "geometry": suite_geometry,
    "angular": suite_angular,
    "radial": suite_radial,
    "gauge": suite_gauge,
    "full": suite_full,
}


def run_suite(name, opts=None):
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return _RUNNERS[name](opts or VerifyOptions())
