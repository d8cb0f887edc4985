"""Qutrit phase-damping and amplitude-damping channels and coherence sweeps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bloch import BlochVector
from .coherence import hsc, l1c, rec
from .gellmann import Anti, Sym
from .matops import DensityMatrix, StateLike, as_state

COMPLETENESS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class KrausChannel:
    dim: int
    kraus: tuple
    label: str = "custom"

    def __post_init__(self):
        ks = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        if not ks:
            raise ValueError("a channel needs at least one Kraus operator")
        for k in ks:
            if k.shape != (self.dim, self.dim):
                raise ValueError(f"Kraus operator of shape {k.shape}, expected {(self.dim, self.dim)}")
        err = completeness_error(ks)
        if err > COMPLETENESS_TOL:
            raise ValueError(f"Kraus operators are not complete: max |sum K^dag K - I| = {err:.3g}")
        object.__setattr__(self, "kraus", ks)

    def __call__(self, rho: StateLike) -> DensityMatrix:
        return apply(self, rho)


def completeness_error(kraus: Sequence[np.ndarray]) -> float:
    total = sum(k.conj().T @ k for k in kraus)
    return float(np.max(np.abs(total - np.eye(total.shape[0]))))


def _check_p(p: float):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")


def pd_channel(p: float) -> KrausChannel:
    """Qutrit phase damping: ``sqrt(1-p) I`` and ``sqrt(p) |j><j|``."""
    _check_p(p)
    ks = [np.sqrt(1 - p) * np.eye(3)]
    for j in range(3):
        k = np.zeros((3, 3))
        k[j, j] = np.sqrt(p)
        ks.append(k)
    return KrausChannel(3, tuple(ks), "PD")


def ad_channel(p: float) -> KrausChannel:
    """Qutrit amplitude damping towards level 1."""
    _check_p(p)
    k0 = np.diag([1.0, np.sqrt(1 - p), np.sqrt(1 - p)])
    k1 = np.zeros((3, 3))
    k1[0, 1] = np.sqrt(p)
    k2 = np.zeros((3, 3))
    k2[0, 2] = np.sqrt(p)
    return KrausChannel(3, (k0, k1, k2), "AD")


def identity_channel(d: int) -> KrausChannel:
    return KrausChannel(d, (np.eye(d),), "custom")


def apply(ch: KrausChannel, rho: StateLike) -> DensityMatrix:
    rho = as_state(rho)
    if rho.d != ch.dim:
        raise ValueError(f"channel acts on dimension {ch.dim}, state has dimension {rho.d}")
    out = sum(k @ rho.mat @ k.conj().T for k in ch.kraus)
    out = (out + out.conj().T) / 2
    return DensityMatrix(out, rho.dims)


def rho_w(w: float) -> DensityMatrix:
    """Mixture ``(1-w) I/3 + w |psi><psi|`` with ``psi`` the uniform superposition."""
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"w must lie in [0, 1], got {w}")
    m = np.full((3, 3), w / 3, dtype=complex)
    np.fill_diagonal(m, 1 / 3)
    return DensityMatrix(m)


def ad_coherence_closed(p: float, bloch: BlochVector) -> tuple[float, float]:
    """(C_l1, C_hs) after amplitude damping, from the initial mean values.

    Coherences between the ground level and the excited levels decay as
    ``sqrt(1-p)``; the one between the two excited levels as ``1-p``.
    """
    _check_p(p)
    if bloch.dims != (3,):
        raise ValueError(f"expected a qutrit Bloch vector, got dims {list(bloch.dims)}")

    def pair2(k, l):
        return bloch.mean_value(Sym(k, l)) ** 2 + bloch.mean_value(Anti(k, l)) ** 2

    q = 1 - p
    c_l1 = np.sqrt(q) * (np.sqrt(pair2(1, 2)) + np.sqrt(pair2(1, 3))) + q * np.sqrt(pair2(2, 3))
    c_hs = np.sqrt(q * (pair2(1, 2) + pair2(1, 3)) + q * q * pair2(2, 3)) / np.sqrt(2)
    return float(c_l1), float(c_hs)


@dataclass(frozen=True, eq=False)
class SweepResult:
    p: np.ndarray
    c_hs: np.ndarray
    c_l1: np.ndarray
    c_re: np.ndarray

    @property
    def rows(self) -> list[tuple[float, float, float, float]]:
        return [tuple(float(x) for x in r) for r in zip(self.p, self.c_hs, self.c_l1, self.c_re)]


CHANNEL_FAMILIES = {"pd": pd_channel, "ad": ad_channel}


def sweep(family: str, rho0: StateLike, steps: int) -> SweepResult:
    """Coherences of ``channel(p)(rho0)`` on the uniform grid ``p = k/(steps-1)``."""
    try:
        make = CHANNEL_FAMILIES[family.lower()]
    except KeyError:
        raise ValueError(f"unknown channel family {family!r}; choose from {sorted(CHANNEL_FAMILIES)}") from None
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    rho0 = as_state(rho0)
    ps = np.linspace(0.0, 1.0, steps)
    cols = np.empty((3, steps))
    for i, p in enumerate(ps):
        out = apply(make(float(p)), rho0)
        cols[:, i] = hsc(out), l1c(out), rec(out)
    return SweepResult(ps, cols[0], cols[1], cols[2])
