"""Eigenvalues of ILDT adjacency matrices.

If ``A`` is the adjacency matrix of ``G_t`` then ``G_{t+1}`` has the block
matrix ``[[A, A+I], [A+I, 0]]``, and every eigenvalue ``rho`` of ``A`` splits
into the two roots of ``lam**2 - rho*lam - (rho+1)**2``. Iterating that map
gives the whole spectrum of ``G_t`` from the seed spectrum.

Seed spectra are computed without LAPACK: an exact integer characteristic
polynomial, its square-free decomposition, and Durand-Kerner on each factor.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .digraph import Digraph
from .errors import BudgetExceededError, ConvergenceError, PreconditionError

PHI = (1 + 5**0.5) / 2
DEFAULT_MAX_VALUES = 2**24
DEFAULT_CURVE_RESOLUTION = 1e-4
MAX_CHARPOLY_SIZE = 64


@dataclass(frozen=True, eq=False)
class Spectrum:
    values: np.ndarray
    t: int = 0
    normalized: bool = False

    def __len__(self) -> int:
        return len(self.values)

    def sorted(self) -> "Spectrum":
        return replace(self, values=sort_complex(self.values))


@dataclass(frozen=True, eq=False)
class CurveSample:
    points: np.ndarray
    t: int
    seeds_per_unit_circle: int
    normalized: bool
    thinned: bool = False


def sort_complex(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return z[np.lexsort((z.imag, z.real))]


def step_map(z: complex | np.ndarray) -> tuple:
    """Both eigenvalues spawned by ``z``, using the principal square root."""
    z = np.asarray(z, dtype=complex)
    root = np.sqrt(z * z + 4 * (z + 1) ** 2)
    plus, minus = (z + root) / 2, (z - root) / 2
    if plus.ndim == 0:
        return complex(plus), complex(minus)
    return plus, minus


# -- seed spectra ------------------------------------------------------------

def charpoly(a: np.ndarray) -> list[int]:
    """Exact characteristic polynomial of an integer matrix, leading term first.

    Faddeev-LeVerrier in Python integers; every division is exact.
    """
    n = a.shape[0]
    A = np.asarray(a).astype(object)
    eye = np.identity(n, dtype=np.int64).astype(object)
    M = np.zeros((n, n), dtype=object)
    coeffs = [1]
    for k in range(1, n + 1):
        M = A.dot(M) + coeffs[-1] * eye
        trace = int(np.trace(A.dot(M)))
        if trace % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs.append(-trace // k)
    return coeffs


def squarefree_factors(coeffs: Sequence[int]) -> list[tuple[list[int], int]]:
    """Square-free decomposition ``[(factor, multiplicity), ...]`` over the rationals."""
    import sympy

    x = sympy.Symbol("x")
    _, factors = sympy.Poly([int(c) for c in coeffs], x).sqf_list()
    return [([int(c) for c in f.all_coeffs()], m) for f, m in factors]


def root_bound(coeffs: Sequence[complex]) -> float:
    """Fujiwara's upper bound on the moduli of the roots."""
    c = np.asarray(coeffs, dtype=complex)
    c = c / c[0]
    n = len(c) - 1
    terms = [abs(c[k]) ** (1.0 / k) for k in range(1, n)]
    terms.append(abs(c[n] / 2) ** (1.0 / n))
    return 2 * max(terms, default=0.0)


def _residuals(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    # backward error |p(z)| / sum |c_k| |z|^k; 0/0 only at an exact root
    num = np.abs(np.polyval(c, z))
    den = np.polyval(np.abs(c), np.abs(z))
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(num == 0, 0.0, num / den)


def durand_kerner(
    coeffs: Sequence[complex], max_iter: int = 1000, tol: float = 1e-12
) -> np.ndarray:
    """All roots of a polynomial by simultaneous Weierstrass iteration.

    Starting points sit on a circle of radius ``root_bound(coeffs)`` at
    angles offset by 0.4 rad so none lies on the real axis.
    Raises ConvergenceError if the residual is not below ``tol``.
    """
    c = np.asarray(coeffs, dtype=complex)
    if c[0] == 0:
        raise ValueError("leading coefficient must be non-zero")
    c = c / c[0]
    n = len(c) - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    if n == 1:
        return np.array([-c[1]])
    radius = max(root_bound(c), 1.0)
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    res = _residuals(c, z)
    for _ in range(max_iter):
        if res.max() < tol:
            break
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        z = z - np.polyval(c, z) / diff.prod(axis=1)
        res = _residuals(c, z)
    else:
        if res.max() >= tol:
            raise ConvergenceError("Durand-Kerner did not converge", float(res.max()))
    return z


def polish_roots(coeffs: Sequence[int], roots: np.ndarray, dps: int = 60, max_iter: int = 50) -> np.ndarray:
    """Newton refinement in ``dps``-digit arithmetic against exact coefficients.

    Double-precision Durand-Kerner only reaches a small backward error; for
    degree ~50 the forward error can still be 1e-4, so each root is refined
    against the integer polynomial itself.
    """
    import mpmath

    out = np.empty(len(roots), dtype=complex)
    with mpmath.workdps(dps):
        c = [mpmath.mpf(int(k)) for k in coeffs]
        dc = [ci * (len(c) - 1 - i) for i, ci in enumerate(c[:-1])]
        eps = mpmath.mpf(10) ** (-(dps - 10))
        for i, r in enumerate(roots):
            z = mpmath.mpc(r.real, r.imag)
            for _ in range(max_iter):
                d = mpmath.polyval(dc, z)
                if d == 0:
                    break
                step = mpmath.polyval(c, z) / d
                z -= step
                if abs(step) <= eps * max(1, abs(z)):
                    break
            out[i] = complex(z)
    return out


def initial_spectrum(g: Digraph, t: int = 0, tol: float = 1e-12) -> Spectrum:
    """All eigenvalues of the 0/1 adjacency matrix of a small digraph.

    ``t`` only labels the result (pass the step when ``g`` is a generated
    ``G_t`` so normalization divides by the right power).
    """
    if g.n > MAX_CHARPOLY_SIZE:
        raise BudgetExceededError(
            f"characteristic polynomial route is limited to {MAX_CHARPOLY_SIZE} nodes, got {g.n}"
        )
    if g.n == 0:
        return Spectrum(np.zeros(0, dtype=complex), t)
    values: list[np.ndarray] = []
    for factor, mult in squarefree_factors(charpoly(g.adjacency_matrix())):
        if len(factor) < 2:
            continue
        roots = polish_roots(factor, durand_kerner(factor, tol=tol))
        values.extend([roots] * mult)
    z = np.concatenate(values)
    # the matrix is real, so tiny imaginary parts on real roots are noise
    z = np.where(np.abs(z.imag) < 1e-14 * np.maximum(1.0, np.abs(z)), z.real + 0j, z)
    return Spectrum(sort_complex(z), t)


# -- iteration ---------------------------------------------------------------

def spectrum_iterate(s0: Spectrum, t: int, max_values: int = DEFAULT_MAX_VALUES) -> Spectrum:
    if t < 0:
        raise PreconditionError(f"t must be >= 0, got {t}")
    if s0.normalized:
        raise PreconditionError("iterate raw eigenvalues, then normalize")
    if len(s0) * 2**t > max_values:
        raise BudgetExceededError(
            f"{len(s0)} * 2^{t} eigenvalues exceed the memory guard of {max_values}"
        )
    z = np.asarray(s0.values, dtype=complex)
    for _ in range(t):
        plus, minus = step_map(z)
        z = np.concatenate([plus, minus])
    return Spectrum(sort_complex(z), s0.t + t, False)


def normalize_spectrum(s: Spectrum) -> Spectrum:
    """Divide step-``t`` eigenvalues by ``PHI ** t``."""
    if s.normalized:
        raise PreconditionError("spectrum is already normalized")
    return Spectrum(np.asarray(s.values) / PHI**s.t, s.t, True)


def compose_adjacency(a: np.ndarray, max_size: int = 4096) -> np.ndarray:
    """Block matrix ``[[A, A+I], [A+I, 0]]`` of one ILDT step."""
    a = np.asarray(a)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if 2 * n > max_size:
        raise BudgetExceededError(f"composed matrix of size {2 * n} exceeds {max_size}")
    api = a + np.identity(n, dtype=a.dtype)
    return np.block([[a, api], [api, np.zeros_like(a)]])


def match_spectra(a: np.ndarray, b: np.ndarray) -> float:
    """Largest error of a greedy nearest-value pairing of two multisets.

    Values of ``a`` are visited by increasing modulus, then angle; each takes
    the nearest still-unused value of ``b``. Returns ``inf`` on size mismatch.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return float("inf")
    order = np.lexsort((np.angle(a), np.abs(a)))
    free = np.ones(len(b), dtype=bool)
    worst = 0.0
    for i in order:
        d = np.where(free, np.abs(b - a[i]), np.inf)
        j = int(np.argmin(d))
        free[j] = False
        worst = max(worst, float(d[j]))
    return worst


def dominant_growth(z0: complex, t: int) -> list[float]:
    """Ratios ``|z_{k+1}| / |z_k|`` along the larger-modulus branch."""
    ratios = []
    z = complex(z0)
    for _ in range(t):
        nxt = max(step_map(z), key=abs)
        ratios.append(abs(nxt) / abs(z))
        z = nxt
    return ratios


# -- curves ------------------------------------------------------------------

def _thin(z: np.ndarray, scale: float, resolution: float) -> np.ndarray:
    """Keep the first point in each ``resolution``-sized cell of ``z / scale``."""
    w = z / scale
    ix = np.round(w.real / resolution).astype(np.int64)
    iy = np.round(w.imag / resolution).astype(np.int64)
    _, first = np.unique(ix * (1 << 32) + iy, return_index=True)
    return z[np.sort(first)]


def curve_sample(
    t: int,
    m: int,
    normalize: bool = True,
    max_points: int = DEFAULT_MAX_VALUES,
    resolution: float = DEFAULT_CURVE_RESOLUTION,
) -> CurveSample:
    """Image of ``m`` equally spaced unit-circle points under ``t`` steps of the map.

    While the full branch tree fits in ``max_points`` every branch is kept,
    giving ``m * 2**t`` points. Past the cap, points are thinned to one per
    ``resolution``-sized cell of the normalized plane, which keeps the shape
    of the point set but not its multiplicities.
    """
    if t < 0 or m < 1:
        raise PreconditionError(f"need t >= 0 and m >= 1, got t={t}, m={m}")
    z = np.exp(2j * np.pi * np.arange(m) / m)
    # exact values at the quarter turns keep the t=0 sample clean
    z = np.round(z.real, 15) + 1j * np.round(z.imag, 15)
    thinned = False
    for step in range(1, t + 1):
        plus, minus = step_map(z)
        z = np.concatenate([plus, minus])
        if z.size > max_points:
            z = _thin(z, PHI**step, resolution)
            thinned = True
            if z.size > max_points:
                raise BudgetExceededError(
                    f"curve at step {step} keeps {z.size} points after thinning "
                    f"(cap {max_points}); use a coarser resolution"
                )
    if normalize:
        z = z / PHI**t
    return CurveSample(z, t, m, normalize, thinned)


def cloud_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Symmetric nearest-point (Hausdorff) distance between two point clouds."""
    from scipy.spatial import cKDTree

    pa = np.column_stack([np.real(a), np.imag(a)])
    pb = np.column_stack([np.real(b), np.imag(b)])
    d_ab = cKDTree(pb).query(pa)[0].max()
    d_ba = cKDTree(pa).query(pb)[0].max()
    return float(max(d_ab, d_ba))
