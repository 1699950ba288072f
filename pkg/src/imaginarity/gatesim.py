"""Gate library, simulation-instance verifier, phase rigidity, gadgets.

A simulation instance realizes

    U (rho (x) |0..0><0..0| (x) |psi><psi|) U^dag
        = rho' (x) |0'><0'| (x) V |psi><psi| V^dag   for all |psi>,

with U real orthogonal.  Register order is fixed globally as
[resource, ancilla, data] (slow to fast tensor index); all bookkeeping in
this module follows it.

The universal quantifier over |psi> reduces to a finite probe family:
both sides are linear in |psi><psi|, and the basis vectors together with
the real and imaginary pairwise superpositions span all Hermitian
matrices.  Seeded random probes are added as a safety net.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg
from .measures import UNIVERSAL, ClassificationReport, classify, imaginarity_trace_norm
from .states import DensityMatrix, PureState, basis_state, from_pure, plus_i
from .realops import ConversionResult, convert_to_plus_hat

# --- gate library (computational basis) ------------------------------------

H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)
S = np.array([[1, 0], [0, 1j]], dtype=complex)
SDG = S.conj().T
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: G = -iY, the real rotation with |+i> / |-i> as -i / +i eigenvectors.
G = np.array([[0, -1], [1, 0]], dtype=complex)
GDG = G.conj().T

I2 = np.eye(2, dtype=complex)
CS = np.kron(np.diag([1.0, 0.0]).astype(complex), I2) + np.kron(
    np.diag([0.0, 1.0]).astype(complex), S
)
CZ = np.diag([1, 1, 1, -1]).astype(complex)
_P11 = np.diag([0.0, 0.0, 0.0, 1.0]).astype(complex)
CCZ = np.kron(np.eye(4, dtype=complex) - _P11, I2) + np.kron(_P11, Z)


def ry(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rx(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


# --- simulation instances ---------------------------------------------------

ORTHOGONALITY_TOL = 1e-12
UNITARITY_TOL = 1e-12


@dataclass(frozen=True)
class SimulationInstance:
    """One concrete realization of the simulation equation.

    Register order [resource, ancilla, data]; the input ancilla is fixed to
    the all-zeros basis state of dimension `ancilla_dim`.
    """

    unitary: np.ndarray
    resource: DensityMatrix
    ancilla_dim: int
    target: np.ndarray
    residual: DensityMatrix
    out_ancilla: PureState

    @property
    def data_dim(self) -> int:
        return self.target.shape[0]

    def to_json(self) -> dict:
        from .states import density_to_json, pure_to_json

        return {
            "unitary_re": self.unitary.real.tolist(),
            "unitary_im": self.unitary.imag.tolist(),
            "resource": density_to_json(self.resource),
            "ancilla_dim": self.ancilla_dim,
            "target_re": self.target.real.tolist(),
            "target_im": self.target.imag.tolist(),
            "residual": density_to_json(self.residual),
            "out_ancilla": pure_to_json(self.out_ancilla),
        }


def _check_instance(inst: SimulationInstance) -> None:
    u = inst.unitary
    n = u.shape[0]
    if inst.resource.dim * inst.ancilla_dim * inst.data_dim != n:
        raise ValueError(
            f"dimension bookkeeping broken: {inst.resource.dim} * {inst.ancilla_dim} "
            f"* {inst.data_dim} != {n}"
        )
    if inst.residual.dim * inst.out_ancilla.dim * inst.data_dim != n:
        raise ValueError("output-side dimensions inconsistent with the unitary")
    if np.max(np.abs(u.imag)) > ORTHOGONALITY_TOL:
        raise ValueError("instance unitary must be real")
    if np.max(np.abs(u.real.T @ u.real - np.eye(n))) > ORTHOGONALITY_TOL:
        raise ValueError("instance unitary is not orthogonal")
    v = inst.target
    if np.max(np.abs(v.conj().T @ v - np.eye(inst.data_dim))) > UNITARITY_TOL:
        raise ValueError("target matrix is not unitary")


def _probe_family(n: int, random_probes: int, seed: int) -> list:
    probes = [np.eye(n, dtype=complex)[:, j] for j in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            e = np.zeros(n, dtype=complex)
            f = np.zeros(n, dtype=complex)
            e[j] = 1.0
            f[k] = 1.0
            probes.append((e + f) / np.sqrt(2.0))
            probes.append((e + 1j * f) / np.sqrt(2.0))
    rng = np.random.default_rng(seed)
    for _ in range(random_probes):
        psi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        probes.append(psi / np.linalg.norm(psi))
    return probes


@dataclass(frozen=True)
class VerificationReport:
    holds: bool
    max_deviation: float
    probe_count: int
    residuals: tuple

    def residual_uniform(self, tolerance: float = 1e-12) -> bool:
        first = self.residuals[0]
        return all(np.max(np.abs(r - first)) <= tolerance for r in self.residuals[1:])

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "max_deviation": self.max_deviation,
            "probe_count": self.probe_count,
            "residual_uniform": self.residual_uniform(),
        }


def verify_instance(
    inst: SimulationInstance,
    tolerance: float = 1e-10,
    random_probes: int = 50,
    seed: int = 0,
) -> VerificationReport:
    """Evaluate both sides of the simulation equation on the probe family.

    Also extracts the residual resource state per probe (partial trace over
    ancilla and data) for the residual-independence check.
    """
    _check_instance(inst)
    u = inst.unitary
    anc = from_pure(basis_state(inst.ancilla_dim)).matrix
    out_anc = from_pure(inst.out_ancilla).matrix
    left_in = np.kron(inst.resource.matrix, anc)
    left_out = np.kron(inst.residual.matrix, out_anc)

    max_dev = 0.0
    residuals = []
    out_dims = [inst.residual.dim, inst.out_ancilla.dim, inst.data_dim]
    for psi in _probe_family(inst.data_dim, random_probes, seed):
        proj = np.outer(psi, psi.conj())
        lhs = u @ np.kron(left_in, proj) @ u.conj().T
        vpsi = inst.target @ psi
        rhs = np.kron(left_out, np.outer(vpsi, vpsi.conj()))
        max_dev = max(max_dev, float(np.max(np.abs(lhs - rhs))))
        residuals.append(linalg.partial_trace(lhs, out_dims, keep={0}))
    return VerificationReport(
        holds=max_dev <= tolerance,
        max_deviation=max_dev,
        probe_count=len(residuals),
        residuals=tuple(residuals),
    )


def residual_independence_check(inst: SimulationInstance, tolerance: float = 1e-12) -> bool:
    """True iff the extracted residual state is the same for every probe."""
    report = verify_instance(inst)
    if not report.holds:
        raise ValueError("instance does not verify; residual extraction is meaningless")
    return report.residual_uniform(tolerance)


def hs_consistency(inst: SimulationInstance, samples: int = 20, seed: int = 0) -> dict:
    """Hilbert-Schmidt consistency of a verified instance.

    For every sampled |psi>, tr[rho rho*] must equal
    tr[rho' rho'*] |<psi| V^T V |psi>|^2.
    """
    report = verify_instance(inst)
    if not report.holds:
        raise ValueError("instance does not verify")
    lhs = float(np.trace(inst.resource.matrix @ inst.resource.matrix.conj()).real)
    res_overlap = float(np.trace(inst.residual.matrix @ inst.residual.matrix.conj()).real)
    gram = inst.target.T @ inst.target
    rng = np.random.default_rng(seed)
    rhs_values = []
    for _ in range(samples):
        psi = rng.standard_normal(inst.data_dim) + 1j * rng.standard_normal(inst.data_dim)
        psi = psi / np.linalg.norm(psi)
        rhs_values.append(res_overlap * abs(psi.conj() @ gram @ psi) ** 2)
    max_dev = max(abs(lhs - r) for r in rhs_values)
    return {"lhs": lhs, "rhs_values": rhs_values, "max_deviation": max_dev}


# --- phase rigidity ---------------------------------------------------------


@dataclass(frozen=True)
class PhaseRigidityResult:
    gram: np.ndarray
    is_phase_multiple_of_identity: bool
    eta: Optional[float]
    realified: Optional[np.ndarray]
    realified_is_real: bool

    def to_json(self) -> dict:
        out = {
            "gram_re": self.gram.real.tolist(),
            "gram_im": self.gram.imag.tolist(),
            "is_phase_multiple_of_identity": self.is_phase_multiple_of_identity,
            "eta": self.eta,
            "realified_is_real": self.realified_is_real,
        }
        if self.realified is not None:
            out["realified_re"] = self.realified.real.tolist()
            out["realified_im"] = self.realified.imag.tolist()
        return out


def phase_rigidity(v, tolerance: float = 1e-10) -> PhaseRigidityResult:
    """Analyze W = V^T V of a unitary V.

    If W = e^{i eta} I, then V' = e^{-i eta / 2} V is real orthogonal: V can
    only differ from a real orthogonal matrix by a global phase.  Otherwise
    V cannot be simulated with a zero resource.
    """
    v = np.asarray(v, dtype=complex)
    n = v.shape[0]
    if np.max(np.abs(v.conj().T @ v - np.eye(n))) > UNITARITY_TOL:
        raise ValueError("input matrix is not unitary")
    w = v.T @ v
    off = w - np.diag(np.diag(w))
    diag = np.diag(w)
    is_phase = (
        float(np.max(np.abs(off))) <= tolerance
        and float(np.max(np.abs(diag - diag[0]))) <= tolerance
    )
    if not is_phase:
        return PhaseRigidityResult(w, False, None, None, False)
    eta = float(np.angle(np.mean(diag)))
    realified = np.exp(-0.5j * eta) * v
    # real up to an overall sign: the eta/2 branch may flip it
    is_real = float(np.max(np.abs(realified.imag))) <= max(tolerance, 1e-12)
    return PhaseRigidityResult(w, True, eta, realified, is_real)


# --- gadgets ----------------------------------------------------------------


def _trivial_out_ancilla() -> PureState:
    return PureState(np.array([1.0 + 0.0j]))


def s_gadget(resource: Optional[DensityMatrix] = None) -> SimulationInstance:
    """Catalytic S-gate gadget.

    U applies the real rotation G^dag to the resource qubit, controlled on
    the data qubit; with the |+i> catalyst the data register picks up
    exactly the S phase while the catalyst is returned untouched.
    """
    if resource is None:
        resource = from_pure(plus_i())
    p0 = np.diag([1.0, 0.0]).astype(complex)
    p1 = np.diag([0.0, 1.0]).astype(complex)
    u = np.kron(I2, p0) + np.kron(GDG, p1)
    return SimulationInstance(
        unitary=u,
        resource=resource,
        ancilla_dim=1,
        target=S,
        residual=resource,
        out_ancilla=_trivial_out_ancilla(),
    )


def cs_gadget(resource: Optional[DensityMatrix] = None) -> SimulationInstance:
    """Catalytic controlled-S gadget (doubly controlled G^dag)."""
    if resource is None:
        resource = from_pure(plus_i())
    u = np.kron(I2, np.eye(4, dtype=complex) - _P11) + np.kron(GDG, _P11)
    return SimulationInstance(
        unitary=u,
        resource=resource,
        ancilla_dim=1,
        target=CS,
        residual=resource,
        out_ancilla=_trivial_out_ancilla(),
    )


def cz_from_cs(tolerance: float = 1e-12) -> VerificationReport:
    """Applying the controlled-S gadget twice simulates controlled-Z."""
    base = cs_gadget()
    inst = SimulationInstance(
        unitary=base.unitary @ base.unitary,
        resource=base.resource,
        ancilla_dim=1,
        target=CZ,
        residual=base.residual,
        out_ancilla=_trivial_out_ancilla(),
    )
    return verify_instance(inst, tolerance=tolerance)


def rx_from_s(theta: float) -> float:
    """Max entrywise deviation of S^dag R_y(theta) S from R_x(theta)."""
    return float(np.max(np.abs(SDG @ ry(theta) @ S - rx(theta))))


def real_target_instance(
    rho: DensityMatrix, data_orthogonal, resource_orthogonal=None
) -> SimulationInstance:
    """Trivial instance simulating a real orthogonal target.

    Works for every resource state: U factorizes across the registers, so
    no imaginarity is consumed.
    """
    od = np.asarray(data_orthogonal, dtype=complex)
    orr = (
        np.eye(rho.dim, dtype=complex)
        if resource_orthogonal is None
        else np.asarray(resource_orthogonal, dtype=complex)
    )
    return SimulationInstance(
        unitary=np.kron(orr, od),
        resource=rho,
        ancilla_dim=1,
        target=od,
        residual=DensityMatrix(orr @ rho.matrix @ orr.conj().T),
        out_ancilla=_trivial_out_ancilla(),
    )


# --- end-to-end pipeline ------------------------------------------------------


@dataclass(frozen=True)
class PipelineResult:
    report: ClassificationReport
    best_fidelity: float
    conversion: Optional[ConversionResult]
    gadget_verified: Optional[bool]


def theorem1_pipeline(rho: DensityMatrix, seed: int = 0, tolerance: float = 1e-9) -> PipelineResult:
    """Classify, convert and (for universal resources) run the S gadget.

    Universal inputs are converted to |+i><+i| at fidelity 1 and plugged
    into the catalytic S gadget, which must verify.  Zero-resource inputs
    are refused with the best achievable fidelity, strictly below 1.
    """
    report = classify(rho, tolerance=tolerance)
    best_fidelity = 0.5 + imaginarity_trace_norm(rho) / 4.0
    if report.verdict != UNIVERSAL:
        return PipelineResult(report, best_fidelity, None, None)
    conversion = convert_to_plus_hat(rho)
    inst = s_gadget(resource=conversion.output)
    verification = verify_instance(inst, tolerance=max(tolerance, 1e-10), seed=seed)
    verified = verification.holds and verification.residual_uniform(max(tolerance, 1e-10))
    return PipelineResult(report, best_fidelity, conversion, verified)
