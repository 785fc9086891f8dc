"""
Duffin-Kemmer matrices of the massless vector field in the cyclic basis.

Component layout of the 10-dimensional wavefunction (0-based slots)::

    0       time component of the potential          (helicity 0)
    1, 2, 3 spatial potential, cyclic -1, 0, +1
    4, 5, 6 electric-type field components, cyclic -1, 0, +1
    7, 8, 9 magnetic-type field components, cyclic -1, 0, +1

Every matrix returned by this module is a read-only ``complex128`` array, so
values can be shared freely between callers.
"""

import itertools

import numpy as np

SQRT1_2 = 1.0 / np.sqrt(2.0)

#: Minkowski metric, signature (+, -, -, -)
ETA = np.diag([1.0, -1.0, -1.0, -1.0])
ETA.flags.writeable = False

#: helicity label sigma carried by each slot of the wavefunction
SLOT_HELICITY = (0, -1, 0, 1, -1, 0, 1, -1, 0, 1)

# Non-zero entries as (row, col, value); the 1/sqrt(2) of beta^1, beta^2 is
# applied once when the dense matrices are built.
_BETA_ENTRIES = {
    0: [(1, 4, 1j), (2, 5, 1j), (3, 6, 1j),
        (4, 1, -1j), (5, 2, -1j), (6, 3, -1j)],
    1: [(0, 4, -1j), (0, 6, 1j),
        (1, 8, 1), (2, 7, 1), (2, 9, 1), (3, 8, 1),
        (4, 0, -1j), (6, 0, 1j),
        (7, 2, -1), (8, 1, -1), (8, 3, -1), (9, 2, -1)],
    2: [(0, 4, 1), (0, 6, 1),
        (1, 8, -1j), (2, 7, 1j), (2, 9, -1j), (3, 8, 1j),
        (4, 0, -1), (6, 0, -1),
        (7, 2, 1j), (8, 1, -1j), (8, 3, 1j), (9, 2, -1j)],
    3: [(0, 5, 1j), (1, 7, 1), (3, 9, -1),
        (5, 0, 1j), (7, 1, -1), (9, 3, 1)],
}
_BETA_SCALE = {0: 1.0, 1: SQRT1_2, 2: SQRT1_2, 3: 1.0}

#: Entries of the commonly printed beta^0 / beta^3 tables that violate the
#: Duffin-Kemmer algebra, as (index, row, col, printed, used).  The values used
#: here are the ones fixed by the trilinear identity and by the explicit
#: actions of i beta^0 d/dt and i beta^3 d/dchi on the separated ansatz.
PRINTED_TABLE_CORRECTIONS = (
    (0, 6, 0, 1j, 0),
    (3, 5, 0, 0, 1j),
    (3, 6, 0, 1j, 0),
    (3, 9, 2, 1, 0),
    (3, 9, 3, 0, 1),
    (3, 9, 5, 1j, 0),
)


def _frozen(a):
    a = np.asarray(a, dtype=complex)
    a.flags.writeable = False
    return a


def _unscaled(index):
    m = np.zeros((10, 10), dtype=complex)
    for row, col, val in _BETA_ENTRIES[index]:
        m[row, col] = val
    return m


_RAW = tuple(_unscaled(a) for a in range(4))
_BETA = tuple(_frozen(_BETA_SCALE[a] * _RAW[a]) for a in range(4))


def beta(a):
    """Return the Duffin-Kemmer matrix beta^a, a in 0..3."""
    if a not in (0, 1, 2, 3):
        raise ValueError(f"tetrad index must be 0..3, got {a!r}")
    return _BETA[a]


def spin_generator(a, b):
    """J^{ab} = beta^a beta^b - beta^b beta^a (zero matrix when a == b)."""
    beta(a), beta(b)
    # commute the integer tables, then scale: 1/sqrt(2)^2 is applied as an
    # exact 0.5 so the generators carry no rounding noise
    ra, rb = _RAW[a], _RAW[b]
    scaled = sum(1 for k in (a, b) if _BETA_SCALE[k] != 1.0)
    factor = (1.0, SQRT1_2, 0.5)[scaled]
    return _frozen(factor * (ra @ rb - rb @ ra))


def projector_p6():
    """Projector onto the six field-strength components (slots 4..9)."""
    return _frozen(np.diag([0, 0, 0, 0, 1, 1, 1, 1, 1, 1]))


def parity_matrix():
    """
    Signed permutation part of the space-inversion operator.

    It swaps the helicity -1 and +1 slots of each 3-vector block and flips the
    sign of the magnetic block. Acting on separated amplitudes
    ``(f1, ..., f10)`` the full inversion is ``(-1)**j * parity_matrix()``,
    because the angular factor contributes ``D_sigma -> (-1)**j D_{-sigma}``.
    """
    p = np.zeros((10, 10))
    for row, col, val in [(0, 0, 1), (1, 3, 1), (2, 2, 1), (3, 1, 1),
                          (4, 6, 1), (5, 5, 1), (6, 4, 1),
                          (7, 9, -1), (8, 8, -1), (9, 7, -1)]:
        p[row, col] = val
    return _frozen(p)


def amplitude_parity_operator(j):
    """Inversion acting on radial amplitudes for total angular momentum j."""
    return _frozen((-1) ** j * parity_matrix())


def parity_eigenspace(j, parity):
    """
    Orthonormal basis (columns) of amplitude vectors with inversion
    eigenvalue ``parity`` (+1 or -1) at angular momentum j.
    """
    if parity not in (1, -1):
        raise ValueError("parity must be +1 or -1")
    w, v = np.linalg.eigh(amplitude_parity_operator(j).real)
    return v[:, np.isclose(w, parity)]


def trilinear_residuals():
    """
    Array R[a, b, c] = max |beta^a beta^b beta^c + beta^c beta^b beta^a
    - eta^{ab} beta^c - eta^{cb} beta^a| over matrix entries.
    """
    out = np.empty((4, 4, 4))
    for a, b, c in itertools.product(range(4), repeat=3):
        lhs = _BETA[a] @ _BETA[b] @ _BETA[c] + _BETA[c] @ _BETA[b] @ _BETA[a]
        rhs = ETA[a, b] * _BETA[c] + ETA[c, b] * _BETA[a]
        out[a, b, c] = np.abs(lhs - rhs).max()
    return out


def dkp_trilinear_residual(matrices=None):
    """
    Max-norm violation of the Duffin-Kemmer algebra over all 64 triples.

    ``matrices`` may supply an alternative set of four 10x10 matrices, which
    is how a transcription is checked without going through :func:`beta`.
    """
    if matrices is None:
        return float(trilinear_residuals().max())
    bs = [np.asarray(m, dtype=complex) for m in matrices]
    worst = 0.0
    for a, b, c in itertools.product(range(4), repeat=3):
        r = (bs[a] @ bs[b] @ bs[c] + bs[c] @ bs[b] @ bs[a]
             - ETA[a, b] * bs[c] - ETA[c, b] * bs[a])
        worst = max(worst, float(np.abs(r).max()))
    return worst
