import numpy as np
import pytest

from hscoherence.bloch import hsd_direct
from hscoherence.matops import DensityMatrix, tensor
from hscoherence.nmutp import (
    NmutpEstimate,
    Quartet,
    coherence_inversion_demo,
    collinear_qubit_quartet,
    count_inverted,
    estimate,
    ginibre_quartet,
    hsd_tensor_power,
    is_inverted,
    pure_quartet,
    sample_stream,
)

from helpers import offdiag_mass, random_state


def test_tensor_power_examples(rng):
    rho = random_state([3], rng)
    assert hsd_tensor_power(rho, rho) == pytest.approx(0.0, abs=1e-7)
    e1, e2 = DensityMatrix(np.diag([1.0, 0.0])), DensityMatrix(np.diag([0.0, 1.0]))
    assert hsd_tensor_power(e1, e2) == pytest.approx(np.sqrt(2), abs=1e-15)
    assert hsd_direct(tensor(e1, e1), tensor(e2, e2)) == pytest.approx(np.sqrt(2), abs=1e-15)


@pytest.mark.parametrize("d", [2, 3])
def test_tensor_power_matches_explicit(d, rng):
    for _ in range(200):
        a, b = random_state([d], rng), random_state([d], rng)
        assert abs(hsd_tensor_power(a, b) - hsd_direct(tensor(a, a), tensor(b, b))) <= 1e-10


def test_tensor_power_dimension_mismatch(rng):
    with pytest.raises(ValueError):
        hsd_tensor_power(random_state([2], rng), random_state([3], rng))


def test_trivial_quartet_not_inverted(rng):
    a, b = random_state([2], rng), random_state([2], rng)
    assert not is_inverted(Quartet(a, a, b, b))


def test_counts_agree_with_single_quartet_path(rng):
    quartets = [ginibre_quartet(2, rng) for _ in range(3000)]
    stack = np.array([[s.mat for s in q] for q in quartets])
    assert count_inverted(stack) == sum(map(is_inverted, quartets)) > 0


def test_inversion_is_symmetric_in_pairs(rng):
    for _ in range(500):
        q = ginibre_quartet(2, rng)
        assert is_inverted(q) == is_inverted(Quartet(q.xi, q.eta, q.rho, q.sigma))


@pytest.mark.parametrize("d", [2, 4])
def test_no_inversions_for_pure_quartets(d, rng):
    # d^2 = 2(1 - F) and D^2 = 2(1 - F^2) are both decreasing in the fidelity F
    assert not any(is_inverted(pure_quartet(d, rng)) for _ in range(2000))


def test_collinear_qubit_tensor_distance_closed_form(rng):
    # Bloch lengths t1, t2 on one axis: D^2 = d^2 (2 + (t1 + t2)^2) / 2
    from hscoherence.bloch import qubit_state

    axis = np.array([0.6, 0.0, 0.8])
    for t1, t2 in rng.uniform(-1, 1, (50, 2)):
        a, b = qubit_state(*(t1 * axis)), qubit_state(*(t2 * axis))
        d2 = hsd_direct(a, b) ** 2
        assert d2 == pytest.approx((t1 - t2) ** 2 / 2, abs=1e-14)
        assert hsd_tensor_power(a, b) ** 2 == pytest.approx(d2 * (2 + (t1 + t2) ** 2) / 2, abs=1e-14)


def test_collinear_qubit_quartets_can_invert(rng):
    # the (t1 + t2)^2 factor lets commuting qubit quartets flip their order:
    # d^2 = 0.5 > 0.405 but D^2 = 0.5 < 0.650
    q = Quartet(*(DensityMatrix(np.diag(p)) for p in ([0.75, 0.25], [0.25, 0.75], [1.0, 0.0], [0.55, 0.45])))
    assert hsd_direct(q.rho, q.sigma) ** 2 == pytest.approx(0.5)
    assert hsd_direct(q.xi, q.eta) ** 2 == pytest.approx(0.405)
    assert hsd_tensor_power(q.xi, q.eta) ** 2 == pytest.approx(0.405 * (2 + 1.1 ** 2) / 2)
    assert is_inverted(q)
    hits = sum(is_inverted(collinear_qubit_quartet(2, rng)) for _ in range(2000))
    assert hits > 0


def test_collinear_quartet_is_collinear(rng):
    q = collinear_qubit_quartet(2, rng)
    # collinear Bloch vectors <=> the four states commute pairwise
    for a in q:
        for b in q:
            assert np.allclose(a.mat @ b.mat, b.mat @ a.mat, atol=1e-14)


def test_sample_stream_is_spawned_child():
    child = np.random.SeedSequence(9).spawn(4)[3]
    assert np.array_equal(
        sample_stream(9, 3).standard_normal(5), np.random.default_rng(child).standard_normal(5)
    )


def test_estimate_fields_and_determinism():
    a = estimate(2, 3000, seed=7)
    b = estimate(2, 3000, seed=7)
    assert a == b
    assert a.dim == 2 and a.samples == 3000 and a.seed == 7
    assert 0 < a.hits <= a.samples
    assert a.percent == 100 * a.hits / a.samples


def test_estimate_independent_of_workers():
    assert estimate(3, 5000, seed=3, workers=1) == estimate(3, 5000, seed=3, workers=3)


def test_estimate_prefix_consistency():
    # per-sample streams: the first chunk of a larger run is the smaller run
    small, large = estimate(2, 2000, seed=4), estimate(2, 4000, seed=4)
    assert small.hits <= large.hits


def test_estimate_validation():
    with pytest.raises(ValueError):
        estimate(2, 0, seed=1)
    with pytest.raises(ValueError):
        estimate(1, 10, seed=1)
    with pytest.raises(ValueError):
        estimate(2, 10, seed=1, ensemble="nope")


def test_stderr():
    est = NmutpEstimate(2, 100, 10, 10.0, 0)
    assert est.stderr == pytest.approx(3.0)


def test_demo_values():
    demo = coherence_inversion_demo()
    assert demo.c_rho == pytest.approx(0.34, abs=1e-12)
    assert demo.c_xi == pytest.approx(0.33, abs=1e-12)
    # sqrt(c2 (1 + a^2 + c2)) with c2 = C_hs^2
    assert demo.c_rhorho == pytest.approx(0.3591146892010963, abs=1e-12)
    assert demo.c_xixi == pytest.approx(0.4172771381228547, abs=1e-12)
    assert demo.d_rhorho_iota == pytest.approx(demo.c_rhorho, abs=1e-12)
    assert demo.d_xixi_iota == pytest.approx(demo.c_xixi, abs=1e-12)
    assert demo.inverted
    assert demo.as_dict()["inverted"] is True


def test_demo_two_copy_values_from_entries():
    from hscoherence.bloch import qubit_state

    rho, xi = qubit_state(0.0, 0.34, 0.34), qubit_state(0.7, 0.33, 0.33)
    assert np.sqrt(offdiag_mass(tensor(rho, rho).mat)) == pytest.approx(0.3591146892010963, abs=1e-12)
    assert np.sqrt(offdiag_mass(tensor(xi, xi).mat)) == pytest.approx(0.4172771381228547, abs=1e-12)
