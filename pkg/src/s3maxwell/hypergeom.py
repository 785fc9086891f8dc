"""
Terminating Gauss series 2F1(-n, beta; gamma; z) and the regular radial
profile built from it.

On the unit circle around z = 1 parametrized by z = 1 - exp(-2i chi), the
regular, polynomial branch of the reduced radial equation is

    f(chi) = z^(j+1) (1 - z)^(-omega/2) 2F1(-n, j+1; 2j+2; z),  omega = n + 1 + j.

Since 1 - z = exp(-2i chi) exactly, (1 - z)^(-omega/2) is evaluated as
exp(i omega chi), so no branch of a complex power is ever chosen.
"""

import numpy as np


def _check_params(n, gamma_param):
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if float(gamma_param).is_integer() and gamma_param <= 0:
        raise ValueError(f"gamma must not be a non-positive integer, got {gamma_param!r}")


def poly_coefficients(n, beta_param, gamma_param):
    """
    Coefficients c_0..c_n of 2F1(-n, beta; gamma; z) = sum_k c_k z^k, from the
    term ratio c_{k+1}/c_k = (k - n)(beta + k) / ((gamma + k)(k + 1)).
    """
    _check_params(n, gamma_param)
    coeffs = [1.0]
    for k in range(int(n)):
        coeffs.append(coeffs[-1] * (k - n) * (beta_param + k) / ((gamma_param + k) * (k + 1)))
    return np.array(coeffs)


def hyp2f1_poly(n, beta_param, gamma_param, z, deriv=0):
    """
    Evaluate the terminating series (or its ``deriv``-th z-derivative) at
    complex ``z``; exact for any z since only n + 1 terms exist.
    """
    c = poly_coefficients(n, beta_param, gamma_param)
    p = np.polynomial.Polynomial(c)
    if deriv:
        p = p.deriv(deriv)
    z = np.asarray(z, dtype=complex)
    return p(z)[()]


def z_of_chi(chi):
    return 1.0 - np.exp(-2j * np.asarray(chi, dtype=float))


def profile_derivatives(j, n, chi, order=2):
    """
    f, f', ..., f^(order) of the regular profile at ``chi`` (order <= 2).

    Written as f = (2i)^(j+1) sin^(j+1)(chi) exp(i n chi) F(z(chi)); each
    factor is differentiated analytically.
    """
    if j < 0 or n < 0:
        raise ValueError("need j >= 0 and n >= 0")
    if order not in (0, 1, 2):
        raise ValueError("order must be 0, 1 or 2")
    chi = np.asarray(chi, dtype=float)
    s, c = np.sin(chi), np.cos(chi)
    a = j + 1
    pref = (2j) ** a

    u = (s ** a, a * s ** (a - 1) * c,
         a * (a - 1) * s ** max(a - 2, 0) * c ** 2 - a * s ** a)
    v = (np.exp(1j * n * chi),)
    v += (1j * n * v[0], -(n ** 2) * v[0])
    z = z_of_chi(chi)
    dz = 2j * np.exp(-2j * chi)
    d2z = 4 * np.exp(-2j * chi)
    F = [hyp2f1_poly(n, a, 2 * a, z, k) for k in range(order + 1)]
    w = [F[0]]
    if order >= 1:
        w.append(F[1] * dz)
    if order >= 2:
        w.append(F[2] * dz ** 2 + F[1] * d2z)

    out = [pref * u[0] * v[0] * w[0]]
    if order >= 1:
        out.append(pref * (u[1] * v[0] * w[0] + u[0] * v[1] * w[0] + u[0] * v[0] * w[1]))
    if order >= 2:
        out.append(pref * (u[2] * v[0] * w[0] + u[0] * v[2] * w[0] + u[0] * v[0] * w[2]
                           + 2 * (u[1] * v[1] * w[0] + u[1] * v[0] * w[1] + u[0] * v[1] * w[1])))
    return tuple(x[()] for x in out)


def profile_f(j, n, chi):
    """Regular radial profile f(chi) for omega = n + 1 + j."""
    return profile_derivatives(j, n, chi, order=0)[0]


def profile_derivative(j, n, chi):
    """d f / d chi, analytic."""
    return profile_derivatives(j, n, chi, order=1)[1]


def profile_f_literal(j, n, chi):
    """
    Same profile evaluated directly as z^(j+1) (1-z)^(-omega/2) F(z) with the
    principal complex power; valid for chi in (0, pi/2) where arg(1 - z)
    stays inside (-pi, 0]. Used only as an independent cross-check.
    """
    omega = n + 1 + j
    z = z_of_chi(chi)
    return z ** (j + 1) * (1 - z) ** (-omega / 2) * hyp2f1_poly(n, j + 1, 2 * j + 2, z)
