"""3-qubit pure states: canonical parameters, density matrices, partial traces.

Basis convention used everywhere in this package: a computational basis
vector |b1 b2 b3> is stored at index 4*b1 + 2*b2 + b3, i.e. qubit 1 is the
most significant bit.  Qubit labels are 1-based.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

NORM_ATOL = 1e-12
HERM_ATOL = 1e-12
PSD_ATOL = 1e-10


@dataclass(frozen=True)
class CanonicalParams:
    """Five non-negative amplitudes plus one phase fixing a state up to
    local unitaries.

    Invariants (checked on construction):
      * ``lambda0 .. lambda4 >= 0``
      * ``0 <= phi <= pi``
      * ``lambda0**2 + ... + lambda4**2 == 1`` within ``NORM_ATOL``
    """

    lambda0: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    phi: float = 0.0

    def __post_init__(self):
        for name in ("lambda0", "lambda1", "lambda2", "lambda3", "lambda4"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0.0:
                raise ValidationError(f"{name} must be a finite non-negative real, got {value!r}")
        if not np.isfinite(self.phi) or not 0.0 <= self.phi <= np.pi:
            raise ValidationError(f"phi must lie in [0, pi], got {self.phi!r}")
        norm_sq = sum(getattr(self, f"lambda{i}") ** 2 for i in range(5))
        if abs(norm_sq - 1.0) > NORM_ATOL:
            raise ValidationError(
                "lambda amplitudes must satisfy sum(lambda_i^2) = 1 within "
                f"{NORM_ATOL:g}, got sum {norm_sq!r}"
            )

    def lambdas(self) -> np.ndarray:
        return np.array(
            [self.lambda0, self.lambda1, self.lambda2, self.lambda3, self.lambda4]
        )


def canonical_state(params: CanonicalParams) -> np.ndarray:
    """Amplitude vector of the canonical-form state.

    The non-zero amplitudes sit at |000>, |100> (with the phase), |101>,
    |110> and |111>.  Returns a length-8 complex array.
    """
    amps = np.zeros(8, dtype=complex)
    amps[0b000] = params.lambda0
    amps[0b100] = params.lambda1 * np.exp(1j * params.phi)
    amps[0b101] = params.lambda2
    amps[0b110] = params.lambda3
    amps[0b111] = params.lambda4
    return amps


def validate_state(state: np.ndarray) -> np.ndarray:
    state = np.asarray(state, dtype=complex)
    if state.shape != (8,):
        raise ValidationError(f"state must have 8 amplitudes, got shape {state.shape}")
    norm_sq = float(np.sum(np.abs(state) ** 2))
    if abs(norm_sq - 1.0) > NORM_ATOL:
        raise ValidationError(
            f"state must be normalized within {NORM_ATOL:g}, got |psi|^2 = {norm_sq!r}"
        )
    return state


def density_matrix(state: np.ndarray) -> np.ndarray:
    """Projector |psi><psi| of a normalized pure state."""
    state = validate_state(state)
    return np.outer(state, state.conj())


def validate_density_matrix(rho: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return as complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValidationError(f"density matrix must be square, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise ValidationError(f"density matrix must be {dim}x{dim}, got shape {rho.shape}")
    if not np.allclose(rho, rho.conj().T, rtol=0.0, atol=HERM_ATOL):
        raise ValidationError(f"density matrix must be Hermitian within {HERM_ATOL:g}")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > NORM_ATOL:
        raise ValidationError(f"density matrix must have trace 1 within {NORM_ATOL:g}, got {trace!r}")
    eigenvalues = np.linalg.eigvalsh(rho)
    if eigenvalues[0] < -PSD_ATOL:
        raise ValidationError(
            f"density matrix must be positive semidefinite within {PSD_ATOL:g}, "
            f"smallest eigenvalue {eigenvalues[0]!r}"
        )
    return rho


def reduce(rho: np.ndarray, keep) -> np.ndarray:
    """Partial trace of an 8x8 density matrix onto the qubits in ``keep``.

    ``keep`` is a non-empty strict subset of {1, 2, 3}; the kept qubits
    retain their relative order.  Trace is preserved.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (8, 8):
        raise ValidationError(f"expected an 8x8 density matrix, got shape {rho.shape}")
    keep = sorted(set(keep))
    if not keep or any(q not in (1, 2, 3) for q in keep):
        raise ValidationError(f"keep must be a non-empty subset of {{1, 2, 3}}, got {keep}")
    if len(keep) == 3:
        raise ValidationError("keep must be a strict subset of {1, 2, 3}; nothing to trace out")
    traced = [q for q in (1, 2, 3) if q not in keep]
    block = rho.reshape((2,) * 6)
    n = 3
    # trace highest traced qubit first so earlier axis indices stay valid
    for q in sorted(traced, reverse=True):
        block = np.trace(block, axis1=q - 1, axis2=q - 1 + n)
        n -= 1
    dim = 2 ** len(keep)
    return block.reshape(dim, dim)


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2); equals 1 exactly for pure states."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.real(np.sum(rho * rho.T)))


def sample_canonical(seed) -> CanonicalParams:
    """Draw canonical parameters deterministically from ``seed``.

    The amplitude vector is the absolute value of five independent standard
    Gaussian draws, normalized; the phase is uniform on [0, pi].  The same
    seed always yields the same parameters.  The law is a convenience
    choice covering the interior of the amplitude simplex, not a claim of
    uniformity over canonical forms.
    """
    rng = np.random.default_rng(seed)
    while True:
        draws = rng.standard_normal(5)
        norm = float(np.linalg.norm(draws))
        if norm > 1e-6:
            break
    lams = np.abs(draws) / norm
    phi = float(rng.uniform(0.0, np.pi))
    return CanonicalParams(*map(float, lams), phi=phi)
