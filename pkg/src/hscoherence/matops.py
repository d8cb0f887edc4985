"""Dense complex matrix primitives, spectra, entropies and random states.

Everything here works on small (side <= ~100) numpy arrays. A
:class:`DensityMatrix` is a thin wrapper that carries the subsystem
dimensions next to the matrix so that the Bloch machinery knows how the
Hilbert space factorizes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence, Union

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
EIG_CLAMP = 1e-12


class InvalidStateError(ValueError):
    """Raised when a matrix violates a density-matrix invariant.

    The violated invariant ("shape", "dims", "hermitian", "trace",
    "positive") is kept in :attr:`invariant` and appears in the message.
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = f"{invariant} invariant violated"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A state matrix together with its subsystem dimensions.

    Construction only checks shapes. Use :meth:`validate` (or
    :attr:`is_valid`) for the Hermitian / unit-trace / PSD checks, since
    some producers (e.g. reconstruction from an arbitrary Bloch vector)
    may legitimately yield matrices outside the state set.
    """

    mat: np.ndarray
    dims: tuple[int, ...] = ()

    def __post_init__(self):
        mat = np.array(self.mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
            raise InvalidStateError("shape", f"expected a square matrix, got shape {mat.shape}")
        dims = tuple(int(x) for x in self.dims) if len(self.dims) else (mat.shape[0],)
        if any(x < 2 for x in dims):
            raise InvalidStateError("dims", f"subsystem dimensions must be >= 2, got {list(dims)}")
        if int(np.prod(dims)) != mat.shape[0]:
            raise InvalidStateError(
                "dims", f"product of {list(dims)} does not match matrix side {mat.shape[0]}")
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "dims", dims)

    @property
    def d(self) -> int:
        return self.mat.shape[0]

    def violations(self) -> list[tuple[str, str]]:
        """Return ``(invariant, detail)`` for every violated state invariant."""
        out = []
        m = self.mat
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > HERMITIAN_TOL:
            out.append(("hermitian", f"max |rho_ij - conj(rho_ji)| = {herm:.3g}"))
        tr = np.trace(m)
        if abs(tr - 1) > TRACE_TOL:
            out.append(("trace", f"Tr(rho) = {tr.real:.12g}{tr.imag:+.3g}j, expected 1"))
        if herm <= 1e-8:
            lmin = float(np.linalg.eigvalsh((m + m.conj().T) / 2)[0])
            if lmin < -PSD_TOL:
                out.append(("positive", f"minimum eigenvalue {lmin:.3g} < 0"))
        return out

    @property
    def is_valid(self) -> bool:
        return not self.violations()

    def validate(self) -> "DensityMatrix":
        bad = self.violations()
        if bad:
            raise InvalidStateError(*bad[0])
        return self

    def __array__(self, dtype=None, copy=None):
        return self.mat if dtype is None else self.mat.astype(dtype)


StateLike = Union[DensityMatrix, np.ndarray]


def as_state(x: StateLike, dims: Sequence[int] = ()) -> DensityMatrix:
    """Wrap an array as a :class:`DensityMatrix` (no-op for instances)."""
    if isinstance(x, DensityMatrix):
        return x
    return DensityMatrix(np.asarray(x), tuple(dims))


def tensor(*ops):
    """Kronecker product of the arguments, left to right.

    If every argument is a :class:`DensityMatrix` the result is one too,
    with the subsystem dimensions concatenated; otherwise a plain array is
    returned.
    """
    if not ops:
        raise ValueError("tensor() needs at least one operand")
    mats = [np.asarray(o.mat if isinstance(o, DensityMatrix) else o, dtype=complex) for o in ops]
    out = reduce(np.kron, mats)
    if all(isinstance(o, DensityMatrix) for o in ops):
        return DensityMatrix(out, sum((o.dims for o in ops), ()))
    return out


def hermitian_eigenvalues(m) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix.

    Raises ValueError if ``m`` is not Hermitian within 1e-12 (absolute,
    scaled by the largest entry when that exceeds one).
    """
    m = np.asarray(m.mat if isinstance(m, DensityMatrix) else m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m))))
    err = float(np.max(np.abs(m - m.conj().T)))
    if err > HERMITIAN_TOL * scale:
        raise ValueError(f"matrix is not Hermitian (max asymmetry {err:.3g})")
    return np.linalg.eigvalsh((m + m.conj().T) / 2)


def shannon_bits(p) -> float:
    """Shannon entropy in bits, with 0 log 0 = 0 and entries <= 1e-12 dropped."""
    p = np.asarray(p, dtype=float)
    p = p[p > EIG_CLAMP]
    return float(-np.sum(p * np.log2(p))) if p.size else 0.0


def vn_entropy(rho: StateLike) -> float:
    """Von Neumann entropy ``-Tr(rho log2 rho)`` in bits."""
    s = shannon_bits(hermitian_eigenvalues(rho))
    return max(s, 0.0)


def purity(rho: StateLike) -> float:
    m = np.asarray(rho.mat if isinstance(rho, DensityMatrix) else rho)
    # Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return float(np.sum(np.abs(m) ** 2))


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Reduced state on the subsystems listed in ``keep`` (0-based)."""
    dims = rho.dims
    n = len(dims)
    keep = sorted(keep)
    t = rho.mat.reshape(dims + dims)
    traced = [s for s in range(n) if s not in keep]
    # trace out from the highest index so axis numbers stay valid
    for k, s in enumerate(sorted(traced, reverse=True)):
        cur = n - k
        t = np.trace(t, axis1=s, axis2=s + cur)
    kd = tuple(dims[s] for s in keep)
    side = int(np.prod(kd))
    return DensityMatrix(t.reshape(side, side), kd)


def pure_state(psi, dims: Sequence[int] = ()) -> DensityMatrix:
    """Projector onto the normalized vector ``psi``."""
    psi = np.asarray(psi, dtype=complex).ravel()
    psi = psi / np.linalg.norm(psi)
    return DensityMatrix(np.outer(psi, psi.conj()), tuple(dims))


def ginibre_matrix(d: int, rng: np.random.Generator) -> np.ndarray:
    """d x d matrix of i.i.d. standard complex Gaussians, E|g|^2 = 1."""
    re = rng.standard_normal((d, d))
    im = rng.standard_normal((d, d))
    return (re + 1j * im) / np.sqrt(2)


def random_density(d: int, rng: np.random.Generator, dims: Sequence[int] = ()) -> DensityMatrix:
    """Random state ``G G^dag / Tr(G G^dag)`` from the Hilbert-Schmidt measure.

    The draw consumes exactly ``2 d^2`` normals from ``rng``, so a given
    seed and dimension always produce the same matrix.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    g = ginibre_matrix(d, rng)
    m = g @ g.conj().T
    m = (m + m.conj().T) / 2
    return DensityMatrix(m / np.trace(m).real, tuple(dims))


def random_pure(d: int, rng: np.random.Generator, dims: Sequence[int] = ()) -> DensityMatrix:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return pure_state(v, dims)
