import numpy as np
import pytest

from qdiscord import (
    DensityMatrix,
    InvalidSubsystemError,
    OptimizerConfig,
    cyclic_interaction_identity_gap,
    gen_ghz,
    gen_w,
    interrogated_interaction_info,
    monogamy_deficit,
    partial_trace,
    pseudo_pure,
    random_density_matrix,
    random_pure_state,
    random_unitary,
    theorem1_check,
    unmeasured_interaction_info,
    vn_entropy,
)

CFG = OptimizerConfig()


def product_three_qubit(seed=19):
    rng = np.random.default_rng(seed)
    mats = [random_density_matrix(rng, (2,)).matrix for _ in range(3)]
    return DensityMatrix(np.kron(np.kron(mats[0], mats[1]), mats[2]), (2, 2, 2))


def ghz_mixture():
    m = np.zeros((8, 8), dtype=complex)
    m[0, 0] = m[7, 7] = 0.5
    return DensityMatrix(m, (2, 2, 2))


def test_unmeasured_ii_zero_for_pure():
    rng = np.random.default_rng(44)
    for _ in range(20):
        rho = random_pure_state(rng).to_density()
        assert abs(unmeasured_interaction_info(rho)) <= 1e-9


def test_unmeasured_ii_zero_for_product():
    assert unmeasured_interaction_info(product_three_qubit()) == pytest.approx(0.0, abs=1e-10)


def test_unmeasured_ii_ghz_mixture():
    # every marginal entropy is 1 bit and S(ABC) = 1: 3 - 3 - 1 = -1
    assert unmeasured_interaction_info(ghz_mixture()) == pytest.approx(-1.0, abs=1e-10)


def test_unmeasured_ii_permutation_symmetric():
    rng = np.random.default_rng(46)
    rho = random_density_matrix(rng, (2, 2, 2))
    base = unmeasured_interaction_info(rho)
    t = rho.matrix.reshape((2,) * 6)
    for perm in ((1, 0, 2), (2, 1, 0), (1, 2, 0)):
        permuted = np.transpose(t, perm + tuple(3 + p for p in perm)).reshape(8, 8)
        assert unmeasured_interaction_info(DensityMatrix(permuted, (2, 2, 2))) == pytest.approx(
            base, abs=1e-10
        )


def test_unmeasured_ii_local_unitary_invariant():
    rng = np.random.default_rng(48)
    rho = random_density_matrix(rng, (2, 2, 2))
    base = unmeasured_interaction_info(rho)
    u = np.kron(np.kron(random_unitary(rng, 2), random_unitary(rng, 2)), random_unitary(rng, 2))
    rotated = DensityMatrix(u @ rho.matrix @ u.conj().T, (2, 2, 2))
    assert unmeasured_interaction_info(rotated) == pytest.approx(base, abs=1e-9)


def test_unmeasured_ii_requires_three_parties():
    rng = np.random.default_rng(50)
    with pytest.raises(InvalidSubsystemError):
        unmeasured_interaction_info(random_density_matrix(rng, (2, 2)))


def test_interrogated_ii_product_state():
    assert abs(interrogated_interaction_info(product_three_qubit(), "A", CFG)) <= 1e-5


def test_interrogated_ii_ghz_nonpositive():
    rho = gen_ghz(np.pi / 4).to_density()
    assert interrogated_interaction_info(rho, "A", CFG) <= 1e-5


def test_interrogated_ii_standard_w_positive():
    rho = gen_w(np.arccos(1 / np.sqrt(3)), np.pi / 4).to_density()
    assert interrogated_interaction_info(rho, "A", CFG) > 1e-3


def test_cyclic_identity_product_state():
    lhs, rhs = cyclic_interaction_identity_gap(product_three_qubit(), CFG)
    assert abs(lhs) <= 1e-5
    assert abs(rhs) <= 1e-5


def test_cyclic_identity_random_mixed():
    rng = np.random.default_rng(52)
    for _ in range(5):
        rho = random_density_matrix(rng, (2, 2, 2))
        lhs, rhs = cyclic_interaction_identity_gap(rho, CFG)
        assert abs(lhs - rhs) <= 1e-4
        assert lhs >= -1e-5
        assert rhs >= -1e-5


def test_cyclic_identity_maximally_mixed_certifies_zero_discords():
    rho = DensityMatrix(np.eye(8) / 8, (2, 2, 2))
    lhs, rhs = cyclic_interaction_identity_gap(rho, CFG)
    assert abs(lhs) <= 1e-6
    assert abs(rhs) <= 1e-6


def test_monogamy_generalized_ghz():
    for phi in (0.3, np.pi / 4, 1.2):
        rho = gen_ghz(phi).to_density()
        rep = monogamy_deficit(rho, "A", CFG)
        s_a = vn_entropy(partial_trace(rho, (0,)))
        assert rep.monogamous
        assert rep.d_ab <= 1e-6
        assert rep.d_ac <= 1e-6
        assert rep.delta_m == pytest.approx(-s_a, abs=1e-5)


def test_monogamy_generalized_w():
    for theta, phi in ((0.6, 0.8), (np.arccos(1 / np.sqrt(3)), np.pi / 4)):
        rep = monogamy_deficit(gen_w(theta, phi).to_density(), "A", CFG)
        assert not rep.monogamous
        assert rep.delta_m > 1e-4


def test_monogamy_maximally_mixed():
    rep = monogamy_deficit(DensityMatrix(np.eye(8) / 8, (2, 2, 2)), "A", CFG)
    assert abs(rep.delta_m) <= 1e-6
    assert rep.monogamous


def test_report_internal_consistency():
    rng = np.random.default_rng(54)
    rho = random_density_matrix(rng, (2, 2, 2))
    rep = monogamy_deficit(rho, "A", CFG)
    assert rep.delta_m == pytest.approx(rep.d_ab + rep.d_ac - rep.d_a_bc, abs=1e-9)
    assert rep.monogamous == (rep.delta_m <= 1e-6)


def test_theorem1_identity_random_mixed():
    rng = np.random.default_rng(56)
    for _ in range(6):
        rho = random_density_matrix(rng, (2, 2, 2))
        rep = monogamy_deficit(rho, "A", CFG)
        gap = rep.interrogated_ii - rep.unmeasured_ii
        assert abs(rep.delta_m - gap) <= 1e-4
        assert rep.theorem1_consistent


def test_theorem1_standalone_matches_report():
    rng = np.random.default_rng(58)
    rho = random_density_matrix(rng, (2, 2, 2))
    rep = monogamy_deficit(rho, "A", CFG)
    chk = theorem1_check(rho, "A", CFG)
    assert chk.delta_m == pytest.approx(rep.delta_m, abs=1e-12)
    assert chk.consistent
    # standalone interrogated op re-runs its own optimizations, same values
    assert interrogated_interaction_info(rho, "A", CFG) == pytest.approx(
        rep.interrogated_ii, abs=1e-12
    )


def test_monogamy_other_nodes():
    rng = np.random.default_rng(60)
    rho = random_density_matrix(rng, (2, 2, 2))
    for node in ("B", "C", 1, 2):
        rep = monogamy_deficit(rho, node, CFG)
        assert np.isfinite(rep.delta_m)
        assert rep.theorem1_consistent
    with pytest.raises(InvalidSubsystemError):
        monogamy_deficit(rho, "D", CFG)


def test_w_deficit_vanishes_toward_boundary():
    # continuity: approaching theta = 0 the state tends to a product and
    # delta_m falls to zero from above
    near = monogamy_deficit(gen_w(0.02, np.pi / 4).to_density(), "A", CFG).delta_m
    interior = monogamy_deficit(gen_w(0.6, np.pi / 4).to_density(), "A", CFG).delta_m
    assert -1e-6 <= near <= 1e-3
    assert near < interior


def test_ghz_class_product_point_has_zero_deficit():
    from qdiscord import ghz_class

    # cos(theta/2) = 0 leaves the bare product |psi1 psi2 psi3>
    locals_ = [(complex(np.cos(c)), complex(np.sin(c))) for c in (0.3, 1.1, 0.7)]
    rep = monogamy_deficit(ghz_class(np.pi, locals_).to_density(), "A", CFG)
    assert abs(rep.delta_m) <= 1e-6
    assert rep.monogamous


def test_pseudo_pure_w_crossover_structure():
    psi = gen_w(np.arccos(1 / np.sqrt(3)), np.pi / 4)
    low = monogamy_deficit(pseudo_pure(psi, 0.3), "A", CFG)
    high = monogamy_deficit(pseudo_pure(psi, 1.0), "A", CFG)
    assert low.delta_m < 0
    assert high.delta_m > 0
