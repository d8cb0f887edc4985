import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hscoherence.bloch import (
    BlochVector,
    from_bloch,
    hsd_bloch,
    hsd_direct,
    product_operator,
    qubit_state,
    to_bloch,
)
from hscoherence.gellmann import Anti, Diag, Id, Sym
from hscoherence.matops import DensityMatrix, random_density

from helpers import PLUS, random_state

ENSEMBLES = [[2], [3], [4], [2, 2], [2, 3]]
BASIS_1 = DensityMatrix(np.diag([1.0, 0.0]))
BASIS_2 = DensityMatrix(np.diag([0.0, 1.0]))


def test_to_bloch_diagonal_qubit():
    v = to_bloch(BASIS_1)
    assert v[Diag(1)] == pytest.approx(0.5)
    assert v.mean_value(Diag(1)) == pytest.approx(1.0)
    assert v.mean_value(Sym(1, 2)) == 0 and v.mean_value(Anti(1, 2)) == 0


def test_to_bloch_plus_state():
    v = to_bloch(PLUS)
    assert v.mean_value(Sym(1, 2)) == pytest.approx(1.0)
    assert v.mean_value(Anti(1, 2)) == pytest.approx(0.0)


@pytest.mark.parametrize("dims", ENSEMBLES + [[3, 2]])
def test_maximally_mixed_has_only_identity(dims):
    d = int(np.prod(dims))
    v = to_bloch(DensityMatrix(np.eye(d) / d, dims))
    assert v.comps[0] == pytest.approx(1 / d)
    assert v.rescaled[0] == pytest.approx(1 / np.sqrt(d))
    assert np.allclose(v.mean[1:], 0, atol=1e-15)


def test_components_follow_trace_formula(rng):
    # r = Tr(rho G) / (2^(n - #identities) prod d_s^[identity])
    rho = random_state([2, 3], rng)
    v = to_bloch(rho)
    for mi in [(Id, Id), (Id, Sym(1, 3)), (Diag(1), Id), (Anti(1, 2), Diag(2))]:
        op = product_operator(mi, [2, 3])
        n_id = sum(g == Id for g in mi)
        norm = 2 ** (2 - n_id) * np.prod([d for g, d in zip(mi, [2, 3]) if g == Id])
        tr = np.trace(rho.mat @ op).real
        assert v[mi] == pytest.approx(tr / norm, abs=1e-14)
        assert v.rescaled_value(mi) == pytest.approx(v[mi] * np.sqrt(norm), abs=1e-14)


def test_to_bloch_rejects_non_hermitian():
    with pytest.raises(ValueError, match="Hermitian"):
        to_bloch(DensityMatrix(np.array([[0.5, 0.2], [0.0, 0.5]])))


def test_from_bloch_examples():
    v = BlochVector.from_mean_values([3], {})
    assert np.allclose(from_bloch(v).mat, np.eye(3) / 3)
    assert np.allclose(qubit_state(1.0, 0.0, 0.0).mat, BASIS_1.mat)


def test_from_bloch_flags_non_physical_vectors():
    out = qubit_state(0.9, 0.9, 0.0)  # |bloch| > 1
    assert not out.is_valid
    assert out.violations()[0][0] == "positive"


def test_missing_components_rejected():
    with pytest.raises(ValueError, match="missing"):
        BlochVector.from_mean_values([2], {Diag(1): 0.1}, complete=True)
    with pytest.raises(ValueError):
        BlochVector((2,), np.array([1.0, 0.0, np.nan, 0.0]))
    with pytest.raises(ValueError):
        BlochVector((2,), np.zeros(3))


@pytest.mark.parametrize("dims", ENSEMBLES)
def test_round_trip(dims, rng):
    for _ in range(20):
        rho = random_state(dims, rng)
        back = from_bloch(to_bloch(rho))
        assert back.dims == rho.dims
        assert np.max(np.abs(back.mat - rho.mat)) <= 1e-11


def test_hsd_examples():
    for dist in (hsd_direct, hsd_bloch):
        assert dist(BASIS_1, BASIS_2) == pytest.approx(np.sqrt(2), abs=1e-14)
        assert dist(PLUS, PLUS) == pytest.approx(0.0, abs=1e-14)
        assert dist(PLUS, DensityMatrix(np.eye(2) / 2)) == pytest.approx(1 / np.sqrt(2), abs=1e-14)


def test_hsd_dimension_mismatch(rng):
    with pytest.raises(ValueError, match="mismatch"):
        hsd_direct(random_state([4], rng), random_state([2, 2], rng))
    with pytest.raises(ValueError, match="mismatch"):
        hsd_bloch(random_state([2], rng), random_state([3], rng))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=st.sampled_from(ENSEMBLES))
def test_two_routes_agree(seed, dims):
    rng = np.random.default_rng(seed)
    a, b = random_state(dims, rng), random_state(dims, rng)
    assert abs(hsd_bloch(a, b) - hsd_direct(a, b)) <= 1e-10
    assert hsd_direct(a, b) == pytest.approx(hsd_direct(b, a), abs=1e-15)


def test_triangle_inequality(rng):
    for dims in ENSEMBLES:
        for _ in range(30):
            a, b, c = (random_state(dims, rng) for _ in range(3))
            assert hsd_direct(a, c) <= hsd_direct(a, b) + hsd_direct(b, c) + 1e-10


def test_rescaled_identity_component(rng):
    for dims in ENSEMBLES:
        d = int(np.prod(dims))
        assert to_bloch(random_density(d, rng, dims)).rescaled[0] == pytest.approx(1 / np.sqrt(d), abs=1e-14)
