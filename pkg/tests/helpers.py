"""Shared test helpers."""
import numpy as np

from hscoherence.matops import DensityMatrix, random_density


def random_state(dims, rng):
    d = int(np.prod(dims))
    return random_density(d, rng, dims)


def random_hermitian(d, rng):
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (a + a.conj().T) / 2


def ket(*amps):
    v = np.asarray(amps, dtype=complex)
    return v / np.linalg.norm(v)


PLUS = DensityMatrix(np.full((2, 2), 0.5))


def offdiag_mass(m):
    """sum_{i != j} |m_ij|^2, computed straight from the entries."""
    m = np.asarray(m)
    return float(np.sum(np.abs(m) ** 2) - np.sum(np.abs(np.diag(m)) ** 2))


def simplex_grid(d, step=0.01):
    n = int(round(1 / step))
    pts = [c for c in _compositions(n, d)]
    return np.array(pts, dtype=float) / n


def _compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def brute_force_hsc(rho, step=0.01):
    """Minimum of sqrt(Tr (rho - iota)^2) over diagonal states iota.

    Dense grid on the probability simplex, then SLSQP refinement from the
    best grid point. Independent of any Bloch-vector machinery.
    """
    from scipy.optimize import minimize

    m = np.asarray(rho)
    d = m.shape[0]
    grid = simplex_grid(d, step)
    diffs = m[None, :, :] - np.einsum("ni,ij->nij", grid, np.eye(d))
    vals = np.einsum("nij,nji->n", diffs, diffs).real
    start = grid[np.argmin(vals)]

    def f(t):
        diff = m - np.diag(t)
        return float(np.trace(diff @ diff).real)

    res = minimize(
        f, start, method="SLSQP", bounds=[(0, 1)] * d,
        constraints=[{"type": "eq", "fun": lambda t: np.sum(t) - 1}],
        options={"ftol": 1e-14, "maxiter": 200},
    )
    best = min(vals.min(), res.fun if res.success else np.inf)
    return float(np.sqrt(max(best, 0.0)))


ACCEPTANCE = []
