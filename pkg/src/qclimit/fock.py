"""Truncated symmetric Fock space over finitely many field modes.

The classical field space is C^M (one complex amplitude per mode).  The Fock
space is truncated by capping the *total* quantum number at ``max_total_quanta``
rather than per mode, so that the number operator expectation (which the
scaled theory keeps of order one) controls the truncation error directly.

All operators carry the epsilon-scaled commutation relations

    [a_eps(f), a_eps^dag(g)] = eps <f, g> I

with the inner product antilinear in the first slot, <f, g> = sum conj(f_k) g_k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np
import scipy.sparse as sp
from scipy.linalg import expm
from scipy.special import gammaln

__all__ = [
    "FockSpec",
    "FockBasis",
    "SparseComplexOperator",
    "TruncationError",
    "build_basis",
    "annihilator",
    "creator",
    "second_quantize",
    "field_operator",
    "weyl_operator",
    "coherent_state",
    "partial_trace_field",
    "inner",
]

# refuse bases that would not fit in desk-scale memory
DEFAULT_DIM_CAP = 2_000_000


class TruncationError(Exception):
    """Raised when a requested truncation is infeasible or unsafe."""


def inner(f: np.ndarray, g: np.ndarray) -> complex:
    """Mode-space inner product, antilinear in the first argument."""
    return complex(np.vdot(f, g))


@dataclass(frozen=True)
class FockSpec:
    """Parameters of a truncated Fock space.

    num_modes: number M of field modes.
    max_total_quanta: cap N on the total occupation sum(n_k).
    epsilon: the quasi-classical scaling parameter, > 0.
    """

    num_modes: int
    max_total_quanta: int
    epsilon: float

    def __post_init__(self):
        if self.num_modes < 1:
            raise ValueError("num_modes must be >= 1")
        if self.max_total_quanta < 0:
            raise ValueError("max_total_quanta must be >= 0")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")

    @property
    def dimension(self) -> int:
        """Stars-and-bars count of multi-indices with total <= cap."""
        return comb(self.max_total_quanta + self.num_modes, self.num_modes)


def _occupations_graded_lex(num_modes: int, max_total: int) -> np.ndarray:
    """All occupation multi-indices with sum <= max_total.

    Ordered by grade (total quanta) first, then lexicographically within a
    grade.  The ordering is fixed so operator matrices are reproducible.
    """
    rows = []

    def compositions(total, slots):
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, slots - 1):
                yield (first,) + rest

    for total in range(max_total + 1):
        grade = sorted(compositions(total, num_modes))
        rows.extend(grade)
    return np.array(rows, dtype=np.int64)


class FockBasis:
    """Concrete enumeration of the truncated occupation-number basis."""

    def __init__(self, spec: FockSpec, dim_cap: int = DEFAULT_DIM_CAP):
        if spec.dimension > dim_cap:
            raise TruncationError(
                f"basis dimension {spec.dimension} exceeds cap {dim_cap}"
            )
        self.spec = spec
        self.occupations = _occupations_graded_lex(
            spec.num_modes, spec.max_total_quanta
        )
        self.dim = self.occupations.shape[0]
        assert self.dim == spec.dimension
        self.total_quanta = self.occupations.sum(axis=1)
        self._index = {tuple(row): i for i, row in enumerate(self.occupations)}

    def index_of(self, multi_index) -> int:
        return self._index[tuple(int(n) for n in multi_index)]

    def multi_index(self, i: int) -> tuple:
        return tuple(int(n) for n in self.occupations[i])

    def __len__(self) -> int:
        return self.dim


@dataclass
class SparseComplexOperator:
    """Sparse complex operator tagged with the space it acts on.

    space_tag is one of {"particle", "field", "joint"}.
    """

    matrix: sp.csr_matrix
    space_tag: str = "field"
    hermitian: bool | None = field(default=None, compare=False)
    unitary: bool | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.space_tag not in ("particle", "field", "joint"):
            raise ValueError(f"unknown space_tag {self.space_tag!r}")
        self.matrix = sp.csr_matrix(self.matrix)

    @property
    def shape(self):
        return self.matrix.shape

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()

    def adjoint(self) -> "SparseComplexOperator":
        return SparseComplexOperator(
            self.matrix.conj().T.tocsr(), self.space_tag,
            hermitian=self.hermitian, unitary=self.unitary,
        )

    def hermiticity_defect(self) -> float:
        d = self.matrix - self.matrix.conj().T
        return float(sp.linalg.norm(d)) if d.nnz else 0.0

    def unitarity_defect(self) -> float:
        n = self.shape[0]
        d = self.matrix.conj().T @ self.matrix - sp.identity(n, format="csr")
        return float(sp.linalg.norm(d)) if d.nnz else 0.0

    def verify_flags(self, tol: float = 1e-10) -> None:
        """Check declared hermitian/unitary flags against the entries."""
        if self.hermitian and self.hermiticity_defect() > tol:
            raise ValueError("operator declared hermitian but is not")
        if self.unitary and self.unitarity_defect() > tol:
            raise ValueError("operator declared unitary but is not")

    def __matmul__(self, other):
        if isinstance(other, SparseComplexOperator):
            if other.space_tag != self.space_tag:
                raise ValueError("space_tag mismatch in product")
            return SparseComplexOperator(self.matrix @ other.matrix, self.space_tag)
        return self.matrix @ other

    def __add__(self, other):
        if isinstance(other, SparseComplexOperator):
            if other.space_tag != self.space_tag:
                raise ValueError("space_tag mismatch in sum")
            return SparseComplexOperator(self.matrix + other.matrix, self.space_tag)
        return SparseComplexOperator(self.matrix + other, self.space_tag)

    def __sub__(self, other):
        if isinstance(other, SparseComplexOperator):
            return self + SparseComplexOperator(-other.matrix, other.space_tag)
        return SparseComplexOperator(self.matrix - other, self.space_tag)

    def __mul__(self, scalar):
        return SparseComplexOperator(self.matrix * scalar, self.space_tag)

    __rmul__ = __mul__


def build_basis(spec: FockSpec, dim_cap: int = DEFAULT_DIM_CAP) -> FockBasis:
    """Enumerate the graded-lex occupation basis for the given truncation."""
    return FockBasis(spec, dim_cap=dim_cap)


def _mode_lowering(basis: FockBasis, k: int) -> sp.csr_matrix:
    """Unscaled single-mode annihilator a_k on the truncated basis."""
    occ = basis.occupations
    cols = np.nonzero(occ[:, k] > 0)[0]
    data = np.sqrt(occ[cols, k]).astype(np.float64)
    rows = np.empty_like(cols)
    for j, c in enumerate(cols):
        target = occ[c].copy()
        target[k] -= 1
        rows[j] = basis.index_of(target)
    return sp.csr_matrix(
        (data, (rows, cols)), shape=(basis.dim, basis.dim), dtype=np.complex128
    )


def annihilator(basis: FockBasis, f: np.ndarray) -> SparseComplexOperator:
    """Scaled annihilator a_eps(f) = sqrt(eps) * sum_k conj(f_k) a_k.

    Antilinear in f; the creator is the adjoint.
    """
    f = np.asarray(f, dtype=np.complex128)
    if f.shape != (basis.spec.num_modes,):
        raise ValueError(
            f"field vector has length {f.shape}, expected {basis.spec.num_modes}"
        )
    if not np.all(np.isfinite(f.view(np.float64))):
        raise ValueError("field vector has non-finite entries")
    sqeps = np.sqrt(basis.spec.epsilon)
    a = sp.csr_matrix((basis.dim, basis.dim), dtype=np.complex128)
    for k in range(basis.spec.num_modes):
        if f[k] != 0:
            a = a + (sqeps * np.conj(f[k])) * _mode_lowering(basis, k)
    return SparseComplexOperator(a, "field")


def creator(basis: FockBasis, f: np.ndarray) -> SparseComplexOperator:
    """Scaled creator a_eps^dag(f), linear in f."""
    return annihilator(basis, f).adjoint()


def second_quantize(basis: FockBasis, omega: np.ndarray) -> SparseComplexOperator:
    """Second quantization dG_eps(omega): diagonal eps * sum_k omega_k n_k.

    The number operator is the special case omega = ones.
    """
    omega = np.asarray(omega, dtype=np.float64)
    if omega.shape != (basis.spec.num_modes,):
        raise ValueError("dispersion length mismatch")
    if np.any(omega < 0):
        raise ValueError("dispersion entries must be nonnegative")
    diag = basis.spec.epsilon * (basis.occupations @ omega)
    return SparseComplexOperator(
        sp.diags(diag.astype(np.complex128), format="csr"), "field", hermitian=True
    )


def field_operator(basis: FockBasis, f: np.ndarray) -> SparseComplexOperator:
    """Hermitian field operator a_eps^dag(f) + a_eps(f)."""
    a = annihilator(basis, f)
    out = a.adjoint() + a
    out.hermitian = True
    return out


def weyl_operator(basis: FockBasis, eta: np.ndarray) -> SparseComplexOperator:
    """Unitary W_eps(eta) = exp(i (a_eps^dag(eta) + a_eps(eta))).

    Computed as a dense exponential of the truncated generator; the unitarity
    defect is a truncation-leakage diagnostic available via unitarity_defect().
    """
    phi = field_operator(basis, eta)
    W = expm(1j * phi.toarray())
    return SparseComplexOperator(sp.csr_matrix(W), "field", unitary=True)


def coherent_state(
    basis: FockBasis,
    z0: np.ndarray,
    safety_factor: float = 0.25,
    return_defect: bool = False,
):
    """Normalized truncated expansion of the eps-coherent state at z0.

    Satisfies a_eps(f) psi = <f, z0> psi up to truncation.  The per-mode
    amplitude in unscaled oscillator variables is alpha_k = z0_k / sqrt(eps),
    so the mean total quantum number is |z0|^2 / eps; the precondition
    |z0|^2 / eps <= safety_factor * max_total_quanta guards against visible
    truncation leakage.

    With return_defect=True, returns (psi, mass_defect) where mass_defect is
    the coherent-state weight lost to the discarded high-quanta sectors.
    """
    z0 = np.asarray(z0, dtype=np.complex128)
    spec = basis.spec
    if z0.shape != (spec.num_modes,):
        raise ValueError("field vector length mismatch")
    mean_quanta = float(np.vdot(z0, z0).real) / spec.epsilon
    if mean_quanta > safety_factor * spec.max_total_quanta:
        raise TruncationError(
            f"|z0|^2/eps = {mean_quanta:.3g} exceeds "
            f"{safety_factor} * N_cap = {safety_factor * spec.max_total_quanta:.3g}"
        )
    alpha = z0 / np.sqrt(spec.epsilon)
    # amplitude for occupation n: prod_k alpha_k^{n_k} / sqrt(n_k!), assembled
    # in log space to stay finite at large caps
    occ = basis.occupations
    log_abs = np.zeros(basis.dim)
    phase = np.zeros(basis.dim)
    for k in range(spec.num_modes):
        n = occ[:, k]
        ak = alpha[k]
        if ak == 0:
            log_abs[n > 0] = -np.inf
            continue
        log_abs = log_abs + n * np.log(np.abs(ak)) - 0.5 * gammaln(n + 1.0)
        phase = phase + n * np.angle(ak)
    amp = np.exp(log_abs - 0.5 * mean_quanta) * np.exp(1j * phase)
    captured = float(np.vdot(amp, amp).real)
    mass_defect = 1.0 - captured
    psi = amp / np.sqrt(captured)
    if return_defect:
        return psi, mass_defect
    return psi


def partial_trace_field(state, dims: tuple) -> np.ndarray:
    """Trace over the Fock factor of a joint state on H_particle (x) K_eps.

    Accepts a joint vector (length dp*df), a joint density matrix
    (dp*df square), or a list of (probability, vector) pairs.  Returns the
    particle density matrix; trace is preserved by construction.
    """
    dp, df = dims
    if isinstance(state, (list, tuple)) and state and isinstance(state[0], tuple):
        out = np.zeros((dp, dp), dtype=np.complex128)
        for p, vec in state:
            out += p * partial_trace_field(vec, dims)
        return out
    state = np.asarray(state)
    if state.ndim == 1:
        if state.shape[0] != dp * df:
            raise ValueError("vector length does not match declared factors")
        m = state.reshape(dp, df)
        return m @ m.conj().T
    if state.shape != (dp * df, dp * df):
        raise ValueError("matrix shape does not match declared factors")
    return np.trace(
        state.reshape(dp, df, dp, df), axis1=1, axis2=3
    )
