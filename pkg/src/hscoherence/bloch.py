"""Bloch-vector representation of multi-qudit states and the HS distance.

For a product label ``G = G_1 x ... x G_n`` three numbers are tracked:

* the mean value ``<G> = Tr(rho G)``,
* the raw component ``r = <G> / N`` with ``N = Tr(G^2) = prod_s Tr(G_s^2)``,
  so that ``rho = sum r G``,
* the rescaled component ``R = <G> / sqrt(N) = r sqrt(N)``.

With the rescaled components the Hilbert-Schmidt distance is a plain
Euclidean distance.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Mapping, Sequence

import numpy as np

from .gellmann import Anti, Diag, GeneratorClass, MultiIndex, Sym, build_basis, multi_index_space
from .matops import HERMITIAN_TOL, DensityMatrix, StateLike, as_state

IMAG_TOL = 1e-10


@lru_cache(maxsize=None)
def _product_ops(dims: tuple[int, ...]):
    bases = [build_basis(d) for d in dims]
    ops = bases[0].mats
    norms = np.array([bases[0].norm(i) for i in range(len(bases[0]))])
    for b in bases[1:]:
        ops = np.einsum("aij,bkl->abikjl", ops, b.mats)
        n0, n1 = ops.shape[0], ops.shape[1]
        side = ops.shape[2] * ops.shape[3]
        ops = ops.reshape(n0 * n1, side, side)
        norms = np.outer(norms, [b.norm(i) for i in range(len(b))]).ravel()
    labels = tuple(multi_index_space(dims))
    index = {mi: i for i, mi in enumerate(labels)}
    ops.setflags(write=False)
    norms.setflags(write=False)
    return labels, index, ops, norms


def product_operator(mi: MultiIndex, dims: Sequence[int]) -> np.ndarray:
    """Explicit matrix of ``G_1 x ... x G_n`` for the multi-index ``mi``."""
    mats = [build_basis(d).matrix(g) for g, d in zip(mi, dims)]
    return reduce(np.kron, mats)


def _key(mi) -> MultiIndex:
    return (mi,) if isinstance(mi, GeneratorClass) else tuple(mi)


@dataclass(frozen=True, eq=False)
class BlochVector:
    """Bloch components of a state, aligned with ``multi_index_space(dims)``."""

    dims: tuple[int, ...]
    mean: np.ndarray

    def __post_init__(self):
        dims = tuple(int(x) for x in self.dims)
        labels, _, _, norms = _product_ops(dims)
        mean = np.asarray(self.mean, dtype=float)
        if mean.shape != (len(labels),):
            raise ValueError(
                f"expected {len(labels)} components for dims {list(dims)}, got shape {mean.shape}")
        if not np.all(np.isfinite(mean)):
            raise ValueError("Bloch vector has missing (non-finite) components")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mean", mean)

    @classmethod
    def from_mean_values(cls, dims: Sequence[int], values: Mapping, complete: bool = False):
        """Build from a ``{multi-index: <G>}`` mapping.

        The all-identity entry is fixed to 1 (unit trace). Unless
        ``complete`` is set, absent components default to zero; with
        ``complete=True`` every non-identity component must be given.
        """
        dims = tuple(int(x) for x in dims)
        labels, index, _, _ = _product_ops(dims)
        mean = np.full(len(labels), np.nan if complete else 0.0)
        mean[0] = 1.0
        for mi, val in values.items():
            key = _key(mi)
            if key not in index:
                raise KeyError(f"{key!r} is not a valid multi-index for dims {list(dims)}")
            if index[key] == 0 and abs(val - 1.0) > 1e-12:
                raise ValueError("the all-identity mean value must be 1 (unit trace)")
            mean[index[key]] = val
        missing = [labels[i] for i in np.flatnonzero(np.isnan(mean))]
        if missing:
            raise ValueError(f"missing Bloch components: {missing[:5]}{' ...' if len(missing) > 5 else ''}")
        return cls(dims, mean)

    @property
    def labels(self) -> tuple[MultiIndex, ...]:
        return _product_ops(self.dims)[0]

    @property
    def normalization(self) -> np.ndarray:
        return _product_ops(self.dims)[3]

    @property
    def comps(self) -> np.ndarray:
        return self.mean / self.normalization

    @property
    def rescaled(self) -> np.ndarray:
        return self.mean / np.sqrt(self.normalization)

    def position(self, mi) -> int:
        return _product_ops(self.dims)[1][_key(mi)]

    def mean_value(self, mi) -> float:
        return float(self.mean[self.position(mi)])

    def __getitem__(self, mi) -> float:
        """Raw component ``r`` at a multi-index."""
        i = self.position(mi)
        return float(self.mean[i] / self.normalization[i])

    def rescaled_value(self, mi) -> float:
        i = self.position(mi)
        return float(self.mean[i] / np.sqrt(self.normalization[i]))


def to_bloch(rho: StateLike) -> BlochVector:
    rho = as_state(rho)
    m = rho.mat
    if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
        raise ValueError("to_bloch needs a Hermitian matrix")
    _, _, ops, _ = _product_ops(rho.dims)
    # Tr(rho G) = sum_ij rho_ij G_ji
    vals = np.einsum("ij,kji->k", m, ops)
    worst = float(np.max(np.abs(vals.imag)))
    if worst > IMAG_TOL:
        raise ValueError(f"Bloch components not real (imaginary residue {worst:.3g})")
    return BlochVector(rho.dims, vals.real)


def from_bloch(v: BlochVector) -> DensityMatrix:
    """Rebuild ``rho = sum r G``. The result is not forced to be PSD;
    check ``.is_valid`` on the returned state."""
    _, _, ops, _ = _product_ops(v.dims)
    mat = np.einsum("k,kij->ij", v.comps, ops)
    return DensityMatrix(mat, v.dims)


def qubit_state(diag: float, sym: float, anti: float) -> DensityMatrix:
    """Qubit with mean values ``<Diag(1)>, <Sym(1,2)>, <Anti(1,2)>``."""
    v = BlochVector.from_mean_values([2], {Diag(1): diag, Sym(1, 2): sym, Anti(1, 2): anti})
    return from_bloch(v)


def _check_pair(rho: DensityMatrix, zeta: DensityMatrix):
    if rho.dims != zeta.dims:
        raise ValueError(f"dimension mismatch: {list(rho.dims)} vs {list(zeta.dims)}")


def hsd_direct(rho: StateLike, zeta: StateLike) -> float:
    """``sqrt(Tr (rho - zeta)^2)`` evaluated on the matrices."""
    rho, zeta = as_state(rho), as_state(zeta)
    _check_pair(rho, zeta)
    diff = rho.mat - zeta.mat
    val = np.einsum("ij,ji->", diff, diff).real
    return float(np.sqrt(max(val, 0.0)))


def hsd_bloch(rho: StateLike, zeta: StateLike) -> float:
    """Euclidean distance between the rescaled Bloch vectors."""
    rho, zeta = as_state(rho), as_state(zeta)
    _check_pair(rho, zeta)
    return float(np.linalg.norm(to_bloch(rho).rescaled - to_bloch(zeta).rescaled))
