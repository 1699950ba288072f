import numpy as np
import pytest

from imaginarity import gatesim, measures, realops, states
from imaginarity.gatesim import (
    CS,
    CZ,
    CCZ,
    GDG,
    H,
    S,
    SDG,
    SimulationInstance,
    X,
    Y,
    Z,
    cs_gadget,
    cz_from_cs,
    hs_consistency,
    phase_rigidity,
    real_target_instance,
    residual_independence_check,
    rx_from_s,
    s_gadget,
    theorem1_pipeline,
    verify_instance,
)
from imaginarity.states import BlochVector, DensityMatrix


def random_unitary(dim, rng):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


class TestGateLibrary:
    def test_defining_entries(self):
        np.testing.assert_array_equal(H * np.sqrt(2), [[1, 1], [1, -1]])
        np.testing.assert_array_equal(S, [[1, 0], [0, 1j]])
        np.testing.assert_array_equal(Z, [[1, 0], [0, -1]])
        np.testing.assert_array_equal(CS, np.diag([1, 1, 1, 1j]))
        np.testing.assert_array_equal(CCZ, np.diag([1, 1, 1, 1, 1, 1, 1, -1]))

    def test_all_constants_unitary(self):
        for g in (H, S, SDG, X, Y, Z, GDG, CS, CZ, CCZ):
            n = g.shape[0]
            assert np.max(np.abs(g.conj().T @ g - np.eye(n))) <= 1e-14

    def test_real_members(self):
        for g in (H, X, Z, GDG, CZ, CCZ, gatesim.ry(1.2)):
            assert np.max(np.abs(g.imag)) == 0

    def test_g_rotates_plus_i_by_minus_i(self):
        plus_i = states.plus_i().amplitudes
        np.testing.assert_allclose(gatesim.G @ plus_i, -1j * plus_i, atol=1e-15)
        np.testing.assert_allclose(GDG @ plus_i, 1j * plus_i, atol=1e-15)


class TestVerifyInstance:
    def test_factorized_real_targets_hold(self):
        rng = np.random.default_rng(0)
        for seed in range(5):
            rho = states.gen_random_density(2 + seed % 3, seed)
            od, _ = np.linalg.qr(rng.standard_normal((3, 3)))
            orr, _ = np.linalg.qr(rng.standard_normal((rho.dim, rho.dim)))
            inst = real_target_instance(rho, od, orr)
            report = verify_instance(inst, tolerance=1e-12)
            assert report.holds

    def test_s_gadget_holds(self):
        report = verify_instance(s_gadget(), tolerance=1e-12)
        assert report.holds
        assert report.max_deviation <= 1e-13

    def test_wrong_target_phase_fails(self):
        base = s_gadget()
        wrong = SimulationInstance(
            unitary=base.unitary,
            resource=base.resource,
            ancilla_dim=1,
            target=Z @ S,
            residual=base.residual,
            out_ancilla=base.out_ancilla,
        )
        report = verify_instance(wrong)
        assert not report.holds
        assert report.max_deviation > 0.1

    def test_rejects_non_orthogonal_unitary(self):
        base = s_gadget()
        bad = SimulationInstance(
            unitary=np.eye(4) * 0.5,
            resource=base.resource,
            ancilla_dim=1,
            target=S,
            residual=base.residual,
            out_ancilla=base.out_ancilla,
        )
        with pytest.raises(ValueError, match="orthogonal"):
            verify_instance(bad)

    def test_rejects_dimension_mismatch(self):
        base = s_gadget()
        bad = SimulationInstance(
            unitary=base.unitary,
            resource=states.gen_random_density(3, 0),
            ancilla_dim=1,
            target=S,
            residual=base.residual,
            out_ancilla=base.out_ancilla,
        )
        with pytest.raises(ValueError, match="dimension"):
            verify_instance(bad)


class TestResiduals:
    def test_s_gadget_catalyst_preserved(self):
        inst = s_gadget()
        assert residual_independence_check(inst)
        report = verify_instance(inst)
        target = states.from_pure(states.plus_i()).matrix
        for r in report.residuals:
            assert np.max(np.abs(r - target)) <= 1e-12

    def test_cs_gadget_catalyst_preserved(self):
        inst = cs_gadget()
        assert residual_independence_check(inst)
        report = verify_instance(inst)
        target = states.from_pure(states.plus_i()).matrix
        for r in report.residuals:
            assert np.max(np.abs(r - target)) <= 1e-12

    def test_trivial_instance_residual_is_input(self):
        rho = states.gen_random_density(2, 4)
        inst = real_target_instance(rho, H)
        assert residual_independence_check(inst)
        report = verify_instance(inst)
        np.testing.assert_allclose(report.residuals[0], rho.matrix, atol=1e-12)

    def test_entangling_unitary_fails_before_residual_check(self):
        base = s_gadget()
        # swap on [resource, data] entangles the registers
        swap = np.zeros((4, 4))
        for i in range(2):
            for j in range(2):
                swap[2 * j + i, 2 * i + j] = 1.0
        corrupted = SimulationInstance(
            unitary=swap.astype(complex),
            resource=base.resource,
            ancilla_dim=1,
            target=S,
            residual=base.residual,
            out_ancilla=base.out_ancilla,
        )
        assert not verify_instance(corrupted).holds
        with pytest.raises(ValueError, match="does not verify"):
            residual_independence_check(corrupted)


class TestHsConsistency:
    def test_s_gadget_both_sides_vanish(self):
        rec = hs_consistency(s_gadget())
        assert rec["lhs"] <= 1e-14
        assert all(r <= 1e-12 for r in rec["rhs_values"])

    def test_real_resource_real_target(self):
        rho = DensityMatrix(np.full((2, 2), 0.5))  # |+><+|
        rec = hs_consistency(real_target_instance(rho, H))
        assert abs(rec["lhs"] - 1.0) <= 1e-12
        assert rec["max_deviation"] <= 1e-10

    def test_partially_imaginary_resource(self):
        # tr[rho rho*] = (1 + x^2 - y^2 + z^2)/2 = 0.375 at Bloch (0, 0.5, 0)
        rho = states.state_of(BlochVector(0, 0.5, 0))
        rec = hs_consistency(real_target_instance(rho, H))
        assert abs(rec["lhs"] - 0.375) <= 1e-12
        assert rec["max_deviation"] <= 1e-10


class TestPhaseRigidity:
    def test_real_orthogonal_target(self):
        res = phase_rigidity(H)
        assert res.is_phase_multiple_of_identity
        assert abs(res.eta) <= 1e-12
        assert res.realified_is_real

    def test_global_phase_identity(self):
        res = phase_rigidity(np.exp(1j * np.pi / 4) * np.eye(2))
        assert res.is_phase_multiple_of_identity
        assert abs(res.eta - np.pi / 2) <= 1e-12
        np.testing.assert_allclose(res.realified, np.eye(2), atol=1e-12)

    def test_s_gate_rejected(self):
        res = phase_rigidity(S)
        assert not res.is_phase_multiple_of_identity
        np.testing.assert_allclose(res.gram, np.diag([1, -1]), atol=1e-14)

    def test_rejects_non_unitary(self):
        with pytest.raises(ValueError, match="unitary"):
            phase_rigidity(np.eye(2) * 0.5)

    def test_soundness_against_sampling_oracle(self):
        rng = np.random.default_rng(9)
        cases = []
        for i in range(50):
            cases.append(random_unitary(2 + i % 5, rng))  # generic: not rigid
        for i in range(50):
            o, _ = np.linalg.qr(rng.standard_normal((2 + i % 5, 2 + i % 5)))
            cases.append(np.exp(1j * rng.uniform(-np.pi, np.pi)) * o)  # rigid
        for v in cases:
            n = v.shape[0]
            gram = v.T @ v
            psis = rng.standard_normal((1000, n)) + 1j * rng.standard_normal((1000, n))
            psis /= np.linalg.norm(psis, axis=1, keepdims=True)
            brute = float(np.min(np.abs(np.einsum("ki,ij,kj->k", psis.conj(), gram, psis))))
            assert phase_rigidity(v).is_phase_multiple_of_identity == (brute >= 1 - 1e-9)

    def test_zero_resource_instances_have_rigid_targets(self):
        rng = np.random.default_rng(10)
        for seed in range(10):
            rho = states.gen_random_density(2, seed)
            if measures.overlap_conj(rho) <= 1e-6:
                continue
            od, _ = np.linalg.qr(rng.standard_normal((3, 3)))
            inst = real_target_instance(rho, od)
            assert verify_instance(inst).holds
            assert phase_rigidity(inst.target).is_phase_multiple_of_identity


class TestGadgets:
    def test_s_gadget_on_basis_states(self):
        inst = s_gadget()
        plus_i = states.plus_i().amplitudes
        e0 = np.array([1, 0], dtype=complex)
        e1 = np.array([0, 1], dtype=complex)
        np.testing.assert_allclose(inst.unitary @ np.kron(plus_i, e0), np.kron(plus_i, e0), atol=1e-15)
        np.testing.assert_allclose(
            inst.unitary @ np.kron(plus_i, e1), 1j * np.kron(plus_i, e1), atol=1e-15
        )

    def test_s_gadget_generates_plus_hat_from_plus(self):
        inst = s_gadget()
        plus_i = states.plus_i().amplitudes
        plus = np.array([1, 1], dtype=complex) / np.sqrt(2)
        out = inst.unitary @ np.kron(plus_i, plus)
        np.testing.assert_allclose(out, np.kron(plus_i, states.plus_i().amplitudes), atol=1e-15)

    def test_cs_gadget_phase_on_11(self):
        inst = cs_gadget()
        plus_i = states.plus_i().amplitudes
        e11 = np.zeros(4, dtype=complex)
        e11[3] = 1.0
        np.testing.assert_allclose(
            inst.unitary @ np.kron(plus_i, e11), 1j * np.kron(plus_i, e11), atol=1e-15
        )

    def test_cs_gadget_verifies(self):
        report = verify_instance(cs_gadget(), tolerance=1e-12)
        assert report.holds and report.max_deviation <= 1e-13

    def test_cs_squared_is_cz(self):
        np.testing.assert_allclose(CS @ CS, CZ, atol=1e-15)
        assert cz_from_cs().holds

    def test_rx_identity_on_theta_grid(self):
        assert rx_from_s(0.0) <= 1e-15
        for theta in np.linspace(0, 2 * np.pi, 64):
            assert rx_from_s(float(theta)) <= 1e-12

    def test_conjugate_covariance_of_s_gadget(self):
        # same U verifies (rho*, V*, rho'*): an S-dagger gadget on |-i>
        base = s_gadget()
        conj_inst = SimulationInstance(
            unitary=base.unitary,
            resource=states.conj_state(base.resource),
            ancilla_dim=1,
            target=SDG,
            residual=states.conj_state(base.residual),
            out_ancilla=base.out_ancilla,
        )
        report = verify_instance(conj_inst, tolerance=1e-12)
        assert report.holds


class TestPipeline:
    def test_plus_i_runs_through(self):
        result = theorem1_pipeline(states.from_pure(states.plus_i()))
        assert result.report.verdict == measures.UNIVERSAL
        assert result.gadget_verified
        np.testing.assert_allclose(
            result.conversion.output.matrix,
            states.from_pure(states.plus_i()).matrix,
            atol=1e-12,
        )

    def test_constructed_state_runs_through(self):
        result = theorem1_pipeline(states.gen_max_imaginary(8, 3, 21))
        assert result.report.verdict == measures.UNIVERSAL
        assert result.gadget_verified
        assert abs(result.conversion.fidelity - 1.0) <= 1e-10

    def test_real_state_refused(self):
        result = theorem1_pipeline(DensityMatrix(np.full((2, 2), 0.5)))
        assert result.report.verdict == measures.ZERO
        assert result.gadget_verified is None
        assert abs(result.best_fidelity - 0.5) <= 1e-12

    def test_zero_states_report_partial_fidelity(self):
        for seed in range(10):
            rho = states.gen_random_density(4, seed)
            result = theorem1_pipeline(rho)
            assert result.report.verdict == measures.ZERO
            expected = 0.5 + measures.imaginarity_trace_norm(rho) / 4
            assert abs(result.best_fidelity - expected) <= 1e-12
            assert result.best_fidelity < 1

    def test_gadget_serialization(self):
        obj = s_gadget().to_json()
        assert obj["ancilla_dim"] == 1
        report = verify_instance(s_gadget()).to_json()
        assert set(report) == {"holds", "max_deviation", "probe_count", "residual_uniform"}
