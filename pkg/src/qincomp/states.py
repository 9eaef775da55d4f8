"""Bipartite pure states, partial trace, Schmidt vectors, entanglement entropy."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import NORM_TOL, eigenvalues_hermitian_jacobi, is_normalized

SCHMIDT_SUM_TOL = 1e-10
ENTROPY_CLAMP = 1e-13


@dataclass(frozen=True)
class BipartiteState:
    """Pure state of an (dim_a x dim_b) system, amplitudes flat at i*dim_b + j."""

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.dim_a < 1 or self.dim_b < 1:
            raise ValueError("subsystem dimensions must be positive")
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (self.dim_a * self.dim_b,):
            raise ValueError("amplitude count must equal dim_a * dim_b")
        if not is_normalized(amps, NORM_TOL):
            raise ValueError("state amplitudes must have unit norm")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)


def reduced_density_a(s: BipartiteState) -> np.ndarray:
    """Trace out subsystem B: entry (i, k) = sum_j amp(i,j) * conj(amp(k,j))."""
    mat = s.amplitudes.reshape(s.dim_a, s.dim_b)
    return mat @ mat.conj().T


def schmidt_vector(s: BipartiteState) -> np.ndarray:
    """Descending eigenvalues of the A-side reduced density matrix.

    Truncated to min(dim_a, dim_b) entries; eigenvalue noise below zero
    is clamped to 0.  Invariant under a global phase on the state.
    """
    vals = eigenvalues_hermitian_jacobi(reduced_density_a(s))
    vals = vals[: min(s.dim_a, s.dim_b)]
    return np.clip(vals, 0.0, None)


def entropy_of_entanglement(v: np.ndarray) -> float:
    """Shannon entropy of a Schmidt vector in bits, with 0*log(0) = 0."""
    v = np.asarray(v, dtype=float)
    v = np.where(v < ENTROPY_CLAMP, 0.0, v)
    positive = v[v > 0.0]
    return float(-np.sum(positive * np.log2(positive)))
