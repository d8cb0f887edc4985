"""Coherence quantifiers in the computational (product) basis.

Three quantifiers are provided: the Hilbert-Schmidt coherence (distance
to the closest diagonal state), the l1-norm coherence, and the relative
entropy of coherence (in bits). There are also closed forms for a single
qubit and for two copies of a qubit.

Two-qubit closed forms follow the general rescaled-Bloch normalization,
under which every two-qubit product label has ``Tr(G^2) = 4``. Hence::

    C_local(rho x rho)    = C_hs(rho)^2
    C_nonlocal(rho x rho) = C_hs(rho)^2 (<Diag(1)>^2 + C_hs(rho)^2)

and both agree with the off-diagonal mass ``sum_{i != j} |rho_ij|^2``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bloch import BlochVector, from_bloch, to_bloch
from .gellmann import Anti, Id, MultiIndex, Sym, is_coherence_index
from .matops import DensityMatrix, StateLike, as_state, shannon_bits, vn_entropy

BALL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class CoherenceVector:
    """Rescaled Bloch components carrying at least one off-diagonal generator."""

    labels: tuple[MultiIndex, ...]
    values: np.ndarray

    def __len__(self):
        return len(self.labels)

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))


@dataclass(frozen=True)
class CoherenceReport:
    c_hs: float
    c_l1: float
    c_re: float

    def as_dict(self) -> dict:
        return {"c_hs": self.c_hs, "c_l1": self.c_l1, "c_re": self.c_re}


def dephase(rho: StateLike) -> DensityMatrix:
    """Drop every off-diagonal entry (complete dephasing)."""
    rho = as_state(rho)
    return DensityMatrix(np.diag(np.diag(rho.mat)), rho.dims)


def coherence_vector(rho: StateLike) -> CoherenceVector:
    v = to_bloch(rho)
    mask = np.array([is_coherence_index(mi) for mi in v.labels])
    labels = tuple(mi for mi, keep in zip(v.labels, mask) if keep)
    return CoherenceVector(labels, v.rescaled[mask])


def optimal_incoherent_state(rho: StateLike) -> DensityMatrix:
    """Closest incoherent state under the HS distance.

    Built by keeping only the identity/diagonal-generator components of the
    Bloch vector, which reproduces :func:`dephase` by a different route.
    """
    v = to_bloch(rho)
    keep = np.array([not is_coherence_index(mi) for mi in v.labels])
    return from_bloch(BlochVector(v.dims, np.where(keep, v.mean, 0.0)))


def hsc(rho: StateLike) -> float:
    """Hilbert-Schmidt coherence, the norm of the coherence vector."""
    return coherence_vector(rho).norm()


def l1c(rho: StateLike) -> float:
    m = as_state(rho).mat
    return float(np.sum(np.abs(m)) - np.sum(np.abs(np.diag(m))))


def rec(rho: StateLike) -> float:
    """Relative entropy of coherence ``S(diag rho) - S(rho)`` in bits."""
    rho = as_state(rho)
    val = shannon_bits(np.diag(rho.mat).real) - vn_entropy(rho)
    if val < -1e-10:
        raise ValueError(f"negative relative entropy of coherence ({val:.3g}); invalid state?")
    return max(val, 0.0)


def coherence_report(rho: StateLike) -> CoherenceReport:
    return CoherenceReport(hsc(rho), l1c(rho), rec(rho))


def qubit_rec_closed(a: float, c: float) -> float:
    """Closed-form qubit REC from ``a = <Diag(1)>`` and ``c = C_l1``.

    The populations are ``(1 +- a)/2`` and the eigenvalues ``(1 +- G)/2``
    with ``G = sqrt(a^2 + c^2)`` the Bloch vector length.
    """
    if c < 0:
        raise ValueError(f"l1 coherence must be >= 0, got {c}")
    g2 = a * a + c * c
    if g2 > 1 + BALL_TOL:
        raise ValueError(f"(a, c) = ({a}, {c}) lies outside the Bloch ball")
    g = min(np.sqrt(g2), 1.0)
    pops = [(1 + a) / 2, (1 - a) / 2]
    eigs = [(1 + g) / 2, (1 - g) / 2]
    return max(shannon_bits(pops) - shannon_bits(eigs), 0.0)


def two_qubit_split(rho: StateLike) -> tuple[float, float]:
    """Squared HS coherence of a two-qubit state split as (local, nonlocal).

    The local part collects the rescaled components pairing an off-diagonal
    generator with the identity; the rest is nonlocal.
    """
    rho = as_state(rho)
    if rho.dims != (2, 2):
        raise ValueError(f"two_qubit_split needs dims [2, 2], got {list(rho.dims)}")
    v = to_bloch(rho)
    local = 0.0
    for kappa in (Sym(1, 2), Anti(1, 2)):
        local += v.rescaled_value((Id, kappa)) ** 2 + v.rescaled_value((kappa, Id)) ** 2
    total = hsc(rho) ** 2
    return local, total - local


def two_copy_closed_forms(a: float, c2: float) -> tuple[float, float, float]:
    """(local, nonlocal, l1) coherences of ``rho x rho`` for a qubit ``rho``.

    ``a`` is ``<Diag(1)>`` and ``c2`` is ``C_hs(rho)^2``; the qubit lies in
    the Bloch ball iff ``a^2 + 2 c2 <= 1``.
    """
    if c2 < 0:
        raise ValueError(f"c2 must be >= 0, got {c2}")
    if a * a + 2 * c2 > 1 + BALL_TOL:
        raise ValueError(f"(a, c2) = ({a}, {c2}) lies outside the Bloch ball")
    local = c2
    nonlocal_ = c2 * (a * a + c2)
    l1_pair = (1 + np.sqrt(2 * c2)) ** 2 - 1
    return local, nonlocal_, float(l1_pair)
