"""Non-monotonicity of the HS distance under tensor products.

A quartet ``(rho, sigma, xi, eta)`` is *inverted* when the ordering of
``d(rho, sigma)`` vs ``d(xi, eta)`` flips after every state is replaced
by two copies of itself. Counting is symmetric in the two pairs, so a
flip in either direction is one event; ties within ``TIE_TOL`` are not
events.

Monte Carlo estimates draw each quartet from its own random stream,
spawned from ``(seed, sample index)``; the count therefore does not
depend on how samples are split across worker processes.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .bloch import hsd_direct, qubit_state
from .coherence import coherence_vector, hsc, optimal_incoherent_state
from .matops import DensityMatrix, StateLike, as_state, pure_state, random_density, tensor

log = logging.getLogger(__name__)

TIE_TOL = 1e-12
CHUNK = 2000


class Quartet(NamedTuple):
    rho: DensityMatrix
    sigma: DensityMatrix
    xi: DensityMatrix
    eta: DensityMatrix


@dataclass(frozen=True)
class NmutpEstimate:
    dim: int
    samples: int
    hits: int
    percent: float
    seed: int

    @property
    def stderr(self) -> float:
        """Binomial standard error of ``percent``."""
        f = self.hits / self.samples
        return 100.0 * float(np.sqrt(f * (1 - f) / self.samples))

    def as_dict(self) -> dict:
        return asdict(self)


def hsd_tensor_power(rho: StateLike, sigma: StateLike) -> float:
    """``d_hs(rho x rho, sigma x sigma)`` without forming the products.

    Uses ``Tr((A x A)(B x B)) = Tr(AB)^2``.
    """
    rho, sigma = as_state(rho), as_state(sigma)
    if rho.dims != sigma.dims:
        raise ValueError(f"dimension mismatch: {list(rho.dims)} vs {list(sigma.dims)}")
    a, b = rho.mat, sigma.mat
    pa = np.einsum("ij,ji->", a, a).real
    pb = np.einsum("ij,ji->", b, b).real
    ab = np.einsum("ij,ji->", a, b).real
    return float(np.sqrt(max(pa * pa + pb * pb - 2 * ab * ab, 0.0)))


def _flipped(d1, d2, big1, big2):
    small = np.asarray(d1) - np.asarray(d2)
    big = np.asarray(big1) - np.asarray(big2)
    return (np.abs(small) > TIE_TOL) & (np.abs(big) > TIE_TOL) & (np.sign(small) != np.sign(big))


def is_inverted(q: Quartet) -> bool:
    d1, d2 = hsd_direct(q.rho, q.sigma), hsd_direct(q.xi, q.eta)
    big1, big2 = hsd_tensor_power(q.rho, q.sigma), hsd_tensor_power(q.xi, q.eta)
    return bool(_flipped(d1, d2, big1, big2))


def count_inverted(stack: np.ndarray) -> int:
    """Number of inverted quartets in an ``(n, 4, d, d)`` stack of states."""

    def tr(a, b):
        return np.einsum("nij,nji->n", a, b).real

    def dist(a, b):
        diff = a - b
        return np.sqrt(np.maximum(tr(diff, diff), 0.0))

    def dist2(a, b):
        return np.sqrt(np.maximum(tr(a, a) ** 2 + tr(b, b) ** 2 - 2 * tr(a, b) ** 2, 0.0))

    r, s, x, e = (stack[:, k] for k in range(4))
    return int(np.count_nonzero(_flipped(dist(r, s), dist(x, e), dist2(r, s), dist2(x, e))))


def sample_stream(seed: int, index: int) -> np.random.Generator:
    """Random stream of sample ``index``; equals ``SeedSequence(seed).spawn`` child ``index``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def ginibre_quartet(d: int, rng: np.random.Generator) -> Quartet:
    return Quartet(*(random_density(d, rng) for _ in range(4)))


def pure_quartet(d: int, rng: np.random.Generator) -> Quartet:
    states = []
    for _ in range(4):
        v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        states.append(pure_state(v))
    return Quartet(*states)


def collinear_qubit_quartet(d: int, rng: np.random.Generator) -> Quartet:
    """Four qubit states whose Bloch vectors lie on one common random axis."""
    if d != 2:
        raise ValueError("collinear quartets are defined for qubits only")
    axis = rng.standard_normal(3)
    axis /= np.linalg.norm(axis)
    lengths = rng.uniform(-1.0, 1.0, size=4)
    return Quartet(*(qubit_state(*(t * axis)) for t in lengths))


SAMPLERS = {
    "ginibre": ginibre_quartet,
    "pure": pure_quartet,
    "collinear": collinear_qubit_quartet,
}


def _count_range(args) -> int:
    d, seed, start, stop, ensemble = args
    sampler = SAMPLERS[ensemble]
    stack = np.empty((stop - start, 4, d, d), dtype=complex)
    for n, i in enumerate(range(start, stop)):
        q = sampler(d, sample_stream(seed, i))
        for k in range(4):
            stack[n, k] = q[k].mat
    return count_inverted(stack)


def estimate(d: int, samples: int, seed: int, workers: int = 1, ensemble: str = "ginibre") -> NmutpEstimate:
    """Fraction of random quartets (in percent) that show an inversion."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if ensemble not in SAMPLERS:
        raise ValueError(f"unknown ensemble {ensemble!r}; choose from {sorted(SAMPLERS)}")
    tasks = [(d, seed, lo, min(lo + CHUNK, samples), ensemble) for lo in range(0, samples, CHUNK)]
    if workers == 1 or len(tasks) == 1:
        hits = sum(map(_count_range, tasks))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_count_range, tasks))
    return NmutpEstimate(d, samples, hits, 100.0 * hits / samples, seed)


@dataclass(frozen=True)
class InversionDemo:
    c_rho: float
    c_xi: float
    c_rhorho: float
    c_xixi: float
    d_rhorho_iota: float
    d_xixi_iota: float

    @property
    def inverted(self) -> bool:
        return self.c_rho > self.c_xi and self.c_rhorho < self.c_xixi

    def as_dict(self) -> dict:
        out = asdict(self)
        out["inverted"] = self.inverted
        return out


def coherence_inversion_demo(
    coh_rho: float = 0.34, coh_xi: float = 0.33, pop_xi: float = 0.7
) -> InversionDemo:
    """Two qubits where the more coherent one has the less coherent two-copy state.

    ``rho`` has ``<Sym> = <Anti> = coh_rho`` and balanced populations;
    ``xi`` has ``<Sym> = <Anti> = coh_xi`` and ``<Diag(1)> = pop_xi``.
    Two-copy coherences are evaluated on the explicit 4x4 products, and
    again as distances to the product of the single-copy closest
    incoherent states.
    """
    rho = qubit_state(0.0, coh_rho, coh_rho).validate()
    xi = qubit_state(pop_xi, coh_xi, coh_xi).validate()
    rr, xx = tensor(rho, rho), tensor(xi, xi)
    iota_r, iota_x = optimal_incoherent_state(rho), optimal_incoherent_state(xi)
    demo = InversionDemo(
        c_rho=hsc(rho),
        c_xi=hsc(xi),
        c_rhorho=coherence_vector(rr).norm(),
        c_xixi=coherence_vector(xx).norm(),
        d_rhorho_iota=hsd_direct(rr, tensor(iota_r, iota_r)),
        d_xixi_iota=hsd_direct(xx, tensor(iota_x, iota_x)),
    )
    c2r, c2x = demo.c_rho ** 2, demo.c_xi ** 2
    log.info(
        "two-copy squared coherences with prefactor 2 and a linear population term: %.4f and %.4f",
        2 * c2r * (1 + c2r), 2 * c2x * (1 + c2x + pop_xi),
    )
    return demo
