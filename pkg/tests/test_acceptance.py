"""
Acceptance harness. Each test records one pass/fail line through the
``criterion`` fixture; the lines are printed in the terminal summary.
"""

import csv
import io
import time

import numpy as np

from s3maxwell import angular, cli, dkp_algebra as alg, geometry, hypergeom, modes, radial
from s3maxwell.modes import ModeKind, ModeSpec

GRID128 = np.linspace(0.02, np.pi - 0.02, 128)
INTERIOR = np.linspace(0.05, np.pi - 0.05, 64)


def _spectrum_rows(capsys, rho, c):
    code = cli.main(["spectrum", "--j-max", "10", "--n-max", "10",
                     "--rho", repr(rho), "--c-light", repr(c)])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()[1:]
    reader = csv.DictReader(io.StringIO("\n".join(lines)))
    return list(reader)


def test_01_spectrum(capsys, criterion):
    worst_mismatch = 0
    start = time.perf_counter()
    for rho, c in [(1.0, 1.0), (2.5, 3.0), (0.7, 299792458.0)]:
        rows = _spectrum_rows(capsys, rho, c)
        seen = set()
        for r in rows:
            j, n = int(r["j"]), int(r["n"])
            seen.add((j, n))
            if int(r["omega_dimensionless"]) != n + 1 + j:
                worst_mismatch += 1
            if float(r["omega_physical"]) != (n + 1 + j) * (c / rho):
                worst_mismatch += 1
        assert seen == {(j, n) for j in range(1, 11) for n in range(11)}
    elapsed = time.perf_counter() - start
    ok = worst_mismatch == 0 and elapsed < 1.0
    criterion(1, "spectrum reproduction", ok,
              f"{worst_mismatch} mismatches over 3x110 rows, {elapsed:.3f} s (need 0, < 1 s)")
    assert ok


def test_02_shooting(criterion):
    start = time.perf_counter()
    eigen, detuned = 0.0, np.inf
    for j in (1, 2, 3):
        for n in (0, 1, 2):
            w = n + 1 + j
            eigen = max(eigen, radial.shoot_regularity(j, w))
            detuned = min(detuned, radial.shoot_regularity(j, w + 0.5))
    elapsed = time.perf_counter() - start
    ok = eigen <= 1e-3 and detuned >= 0.05 and elapsed < 10.0
    criterion(2, "independent quantization (shooting)", ok,
              f"max at eigenfrequency {eigen:.2e} (<= 1e-3), min detuned {detuned:.3f} "
              f"(>= 0.05), {elapsed:.2f} s (< 10 s)")
    assert ok


def test_03_closed_form_profiles(criterion):
    x = GRID128
    s, c = np.sin(x), np.cos(x)
    err = max(np.abs(hypergeom.profile_f(1, 0, x) - (-4 * s ** 2)).max(),
              np.abs(hypergeom.profile_f(1, 1, x) - (-4 * s ** 2 * c)).max())
    ode = 0.0
    for n in (0, 1):
        f, _, d2f = hypergeom.profile_derivatives(1, n, x)
        ode = max(ode, np.abs(radial.second_order_residual(f, d2f, n + 2, 1, x)).max())
    ok = err <= 1e-10 and ode <= 1e-9
    criterion(3, "closed-form modes", ok,
              f"profile error {err:.2e} (<= 1e-10), ODE residual {ode:.2e} (<= 1e-9)")
    assert ok


def test_04_matrix_transcription(criterion):
    tri = np.abs(alg.trilinear_residuals()).max()
    ij12 = 1j * alg.spin_generator(1, 2)
    t3 = np.diag([1.0, 0.0, -1.0])
    expected = np.zeros((10, 10))
    for k in range(3):
        expected[1 + 3 * k:4 + 3 * k, 1 + 3 * k:4 + 3 * k] = t3
    exact = np.array_equal(ij12, expected)
    ok = tri <= 1e-12 and exact
    criterion(4, "matrix transcription", ok,
              f"trilinear {tri:.1e} over 64 triples (<= 1e-12); iJ12 equals the t3 blocks "
              f"{'exactly' if exact else 'NOT exactly'}")
    assert ok


def test_05_geometry_oracles(criterion):
    rng = np.random.default_rng(2024)
    pts = rng.uniform(0.1, np.pi - 0.1, size=(20, 2))
    chr_err = rot_err = div_err = 0.0
    for chi, theta in pts:
        chr_err = max(chr_err, np.abs(geometry.christoffel_fd(chi, theta)
                                      - geometry.christoffel_array(chi, theta)).max())
        rot_err = max(rot_err, np.abs(geometry.ricci_rotation_fd(chi, theta)
                                      - geometry.ricci_rotation_at(chi, theta)).max())
        div_err = max(div_err, max(abs(geometry.tetrad_divergence_fd(a, chi, theta)
                                       - geometry.tetrad_divergence(a, chi, theta))
                                   for a in range(4)))
    ok = max(chr_err, rot_err, div_err) <= 1e-8
    criterion(5, "geometry oracles", ok,
              f"Christoffel {chr_err:.1e}, rotation {rot_err:.1e}, divergence {div_err:.1e} "
              f"at 20 points (<= 1e-8)")
    assert ok


def test_06_angular_machinery(criterion):
    rec = 0.0
    for j in range(1, 5):
        for m in range(-j, j + 1):
            for th in np.linspace(0.15, np.pi - 0.15, 20):
                rec = max(rec, angular.recurrence_residuals(j, m, th).max())
    rng = np.random.default_rng(7)
    sig = 0.0
    for j in range(1, 5):
        for m in range(-j, j + 1):
            f = rng.normal(size=10) + 1j * rng.normal(size=10)
            th, ph = rng.uniform(0.2, np.pi - 0.2), rng.uniform(0, 2 * np.pi)
            sig = max(sig, np.abs(angular.sigma_apply(f, j, m, th, ph)
                                  - angular.sigma_direct(f, j, m, th, ph)).max())
    ok = rec <= 1e-6 and sig <= 1e-6
    criterion(6, "angular machinery", ok,
              f"recurrences {rec:.1e}, Sigma closed form vs direct {sig:.1e} (<= 1e-6)")
    assert ok


def _radial_worst(detune=0.0):
    mag = ele = 0.0
    for j in range(1, 4):
        for n in range(3):
            msol = modes.magnetic_mode(ModeSpec(ModeKind.MAGNETIC, j, n))
            mstate = msol.state(INTERIOR, omega=msol.spec.omega + detune)
            mag = max(mag, np.abs(radial.residual_parity_magnetic(mstate)).max())
            esol = modes.electric_mode(ModeSpec(ModeKind.ELECTRIC, j, n))
            w = esol.spec.omega + detune
            estate = esol.state(INTERIOR, omega=w)
            F, dF = esol.reduced(INTERIOR)
            ele = max(ele, np.abs(radial.residual_electric_landau(estate)).max(),
                      np.abs(radial.residual_electric_reduced(F, dF, INTERIOR, w, j)).max())
    return mag, ele


def test_07_radial_systems(criterion):
    mag, ele = _radial_worst()
    ok = mag <= 1e-10 and ele <= 1e-10
    criterion(7, "radial systems", ok,
              f"magnetic {mag:.1e}, electric {ele:.1e} for j <= 3, n <= 2 (<= 1e-10)")
    assert ok


def test_08_gauge_conditions(criterion):
    lor_m = lor_e = landau = 0.0
    for j in range(1, 4):
        for n in range(3):
            msol = modes.magnetic_mode(ModeSpec(ModeKind.MAGNETIC, j, n))
            lor_m = max(lor_m, np.abs(modes.lorentz_residual(msol, INTERIOR)).max())
            esol = modes.electric_mode(ModeSpec(ModeKind.ELECTRIC, j, n))
            lor_e = max(lor_e, np.abs(modes.lorentz_residual(esol, INTERIOR)).max())
            f1, cond = modes.landau_residual(esol, INTERIOR)
            landau = max(landau, np.abs(f1).max(), np.abs(cond).max())
    ok = lor_m <= 1e-12 and lor_e <= 1e-9 and landau <= 1e-9
    criterion(8, "gauge conditions", ok,
              f"Lorentz magnetic {lor_m:.1e} (<= 1e-12), electric {lor_e:.1e} (<= 1e-9), "
              f"Landau {landau:.1e} (<= 1e-9)")
    assert ok


def _dkp_worst(rng, omega_shift=0.0, points=5):
    worst, count = 0.0, 0
    for kind in ModeKind:
        for j in (1, 2):
            for n in (0, 1):
                m = int(rng.integers(-j, j + 1))
                sol = modes.build_mode(ModeSpec(kind, j, n, m))
                for _ in range(points):
                    t, phi = rng.uniform(0, 2 * np.pi, size=2)
                    chi, theta = rng.uniform(0.2, np.pi - 0.2, size=2)
                    res = modes.apply_dkp_operator(
                        lambda x, y: modes.field_sample(sol, t, x, y, phi),
                        sol.spec.omega + omega_shift, m, chi, theta)
                    worst = max(worst, np.abs(res).max())
                    count += 1
    return worst, count


def test_09_full_dkp_equation(criterion):
    start = time.perf_counter()
    worst, count = _dkp_worst(np.random.default_rng(99), points=6)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-5 and elapsed < 30.0
    criterion(9, "end-to-end covariant equation", ok,
              f"max residual {worst:.1e} over {count} samples (<= 1e-5), {elapsed:.2f} s (< 30 s)")
    assert ok


def test_10_negative_controls(criterion):
    floors = {}
    # criterion 2 harness: off-spectrum frequencies
    floors["shooting"] = min(radial.shoot_regularity(j, n + 1 + j + d)
                             for j in (1, 2, 3) for n in (0, 1, 2) for d in (0.25, 0.5))
    # criterion 7 harness: detuned omega fed to the radial systems
    floors["radial"] = min(max(_radial_worst(detune=d)) for d in (-0.3, 0.3))
    # criterion 9 harness: detuned omega and random field samples
    floors["dkp_detuned"], _ = _dkp_worst(np.random.default_rng(5), omega_shift=0.3, points=2)
    rng = np.random.default_rng(6)
    rand = np.inf
    for _ in range(5):
        f = rng.normal(size=10) + 1j * rng.normal(size=10)
        j, m = 2, int(rng.integers(-2, 3))
        chi, theta = rng.uniform(0.3, np.pi - 0.3, size=2)
        phi = rng.uniform(0, 2 * np.pi)
        res = modes.apply_dkp_operator(
            lambda x, y: angular.separated_field(f, j, m, y, phi),
            4.0, m, chi, theta)
        rand = min(rand, np.abs(res).max())
    floors["dkp_random"] = rand
    ok = all(v >= 0.01 for v in floors.values())
    criterion(10, "negative controls", ok,
              ", ".join(f"{k} {v:.2e}" for k, v in floors.items()) + " (each >= 0.01)")
    assert ok

