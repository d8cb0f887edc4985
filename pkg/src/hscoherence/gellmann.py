"""Generalized Gell-Mann generators and multi-qudit index bookkeeping.

Labels use 1-based level indices (``Sym(1, 2)`` couples ``|1>`` and
``|2>``); positions in a :class:`GeneratorBasis` are 0-based. The
canonical order inside one subsystem of dimension ``d`` is::

    Id, Diag(1..d-1), Sym(k,l) lexicographic, Anti(k,l) lexicographic

so position 0 is always the identity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

IDENTITY, DIAGONAL, SYMMETRIC, ANTISYMMETRIC = "I", "d", "s", "a"


@dataclass(frozen=True)
class GeneratorClass:
    """Label of one generator: its set and its (1-based) indices.

    For diagonal generators ``k`` holds ``j``; ``l`` is unused.
    """

    kind: str
    k: int = 0
    l: int = 0

    @classmethod
    def identity(cls) -> "GeneratorClass":
        return cls(IDENTITY)

    @classmethod
    def diagonal(cls, j: int) -> "GeneratorClass":
        if j < 1:
            raise ValueError(f"diagonal index must be >= 1, got {j}")
        return cls(DIAGONAL, j)

    @classmethod
    def symmetric(cls, k: int, l: int) -> "GeneratorClass":
        if not 1 <= k < l:
            raise ValueError(f"need 1 <= k < l, got ({k}, {l})")
        return cls(SYMMETRIC, k, l)

    @classmethod
    def antisymmetric(cls, k: int, l: int) -> "GeneratorClass":
        if not 1 <= k < l:
            raise ValueError(f"need 1 <= k < l, got ({k}, {l})")
        return cls(ANTISYMMETRIC, k, l)

    @property
    def is_offdiagonal(self) -> bool:
        return self.kind in (SYMMETRIC, ANTISYMMETRIC)

    def __repr__(self):
        if self.kind == IDENTITY:
            return "Id"
        if self.kind == DIAGONAL:
            return f"Diag({self.k})"
        name = "Sym" if self.kind == SYMMETRIC else "Anti"
        return f"{name}({self.k},{self.l})"


Id = GeneratorClass.identity()
Diag = GeneratorClass.diagonal
Sym = GeneratorClass.symmetric
Anti = GeneratorClass.antisymmetric

MultiIndex = tuple  # tuple[GeneratorClass, ...]


@dataclass(frozen=True, eq=False)
class GeneratorBasis:
    """The ``d**2`` generators of one subsystem, in canonical order."""

    dim: int
    labels: tuple[GeneratorClass, ...]
    mats: np.ndarray  # shape (d*d, d, d)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(zip(self.labels, self.mats))

    def index(self, label: GeneratorClass) -> int:
        return self.labels.index(label)

    def matrix(self, label: GeneratorClass) -> np.ndarray:
        return self.mats[self.index(label)]

    def norm(self, pos: int) -> float:
        """``Tr(G_pos^2)``: d for the identity, 2 otherwise."""
        return float(self.dim) if pos == 0 else 2.0


def canonical_labels(d: int) -> tuple[GeneratorClass, ...]:
    pairs = [(k, l) for k in range(1, d + 1) for l in range(k + 1, d + 1)]
    return (
        (Id,)
        + tuple(Diag(j) for j in range(1, d))
        + tuple(Sym(k, l) for k, l in pairs)
        + tuple(Anti(k, l) for k, l in pairs)
    )


def generator_matrix(label: GeneratorClass, d: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=complex)
    if label.kind == IDENTITY:
        return np.eye(d, dtype=complex)
    if label.kind == DIAGONAL:
        j = label.k
        if j > d - 1:
            raise ValueError(f"Diag({j}) does not exist for d={d}")
        m[np.arange(j), np.arange(j)] = 1.0
        m[j, j] = -j
        return np.sqrt(2.0 / (j * (j + 1))) * m
    k, l = label.k - 1, label.l - 1
    if l >= d:
        raise ValueError(f"{label!r} does not exist for d={d}")
    if label.kind == SYMMETRIC:
        m[k, l] = m[l, k] = 1.0
    else:
        m[k, l] = -1j
        m[l, k] = 1j
    return m


@lru_cache(maxsize=None)
def build_basis(d: int) -> GeneratorBasis:
    """Generalized Gell-Mann basis of dimension ``d`` (Pauli set for d=2)."""
    if int(d) != d or d < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {d}")
    d = int(d)
    labels = canonical_labels(d)
    mats = np.stack([generator_matrix(lab, d) for lab in labels])
    mats.setflags(write=False)
    return GeneratorBasis(d, labels, mats)


def multi_index_space(dims: Sequence[int]) -> list[MultiIndex]:
    """Lexicographic product of per-subsystem generator orders."""
    if any(int(x) < 2 for x in dims):
        raise ValueError(f"subsystem dimensions must be >= 2, got {list(dims)}")
    return list(itertools.product(*(build_basis(int(x)).labels for x in dims)))


def is_coherence_index(mi: MultiIndex) -> bool:
    """True if any factor comes from the symmetric or antisymmetric set."""
    return any(g.is_offdiagonal for g in mi)
