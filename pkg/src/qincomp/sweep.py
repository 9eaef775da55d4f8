"""Parameter sweeps with per-point classification records and summaries.

Every record carries the trigonometric spectrum, cross-checked against the
Jacobi spectrum of the directly constructed state; disagreement beyond
tolerance raises ContractViolationError.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .cases import Prediction, _pi_initial_schmidt, predict_case, prediction_consistent
from .majorization import PairLabel, classify_pair
from .qubits import IppParams, UnitaryParams
from .scenarios import (
    CHI_FINAL_SCHMIDT,
    chi_final,
    cubic_coefficients,
    pi_final,
    pqr,
    spectrum_from_ab,
)
from .states import entropy_of_entanglement, schmidt_vector

SOLVER_AGREE_TOL = 1e-10
GAMMA_DEVIATION_TOL = 1e-10

CSV_HEADER = "phi,delta,A,B,lam1,lam2,lam3,entropy_i,entropy_f,observed,predicted,agree"

_CATEGORY = {
    PairLabel.INCOMPARABLE: "incomparable",
    PairLabel.CONVERTIBLE_BACKWARD: "increase",
    PairLabel.EQUAL: "equal",
    PairLabel.CONVERTIBLE_FORWARD: "convertible",
}


class ContractViolationError(RuntimeError):
    """An internal cross-check failed beyond its stated tolerance."""


@dataclass(frozen=True)
class SweepRecord:
    phi: float
    delta: float | None
    big_a: float
    big_b: float
    lam1: float
    lam2: float
    lam3: float
    entropy_initial: float
    entropy_final: float
    observed: PairLabel
    predicted: Prediction
    agree: bool


@dataclass(frozen=True)
class GammaSweepSummary:
    n_theta: int
    n_a: int
    n_b: int
    grid_points: int
    max_deviation: float


def _evaluate(phi: float, delta: float | None, p: IppParams) -> SweepRecord:
    initial_vec, initial_entropy = _pi_initial_schmidt()
    direct_vec = schmidt_vector(pi_final(p))
    big_a, big_b = cubic_coefficients(pqr(p))
    trig_vec = spectrum_from_ab(big_a, big_b).eigenvalues
    gap = float(np.max(np.abs(trig_vec - direct_vec)))
    if gap > SOLVER_AGREE_TOL:
        raise ContractViolationError(
            f"trig and Jacobi spectra disagree by {gap:.3e} at phi={phi!r}, delta={delta!r}"
        )
    observed = classify_pair(initial_vec, direct_vec)
    verdict = predict_case(big_a, big_b)
    return SweepRecord(
        phi=phi,
        delta=delta,
        big_a=big_a,
        big_b=big_b,
        lam1=float(trig_vec[0]),
        lam2=float(trig_vec[1]),
        lam3=float(trig_vec[2]),
        entropy_initial=initial_entropy,
        entropy_final=entropy_of_entanglement(direct_vec),
        observed=observed.label,
        predicted=verdict.predicted,
        agree=prediction_consistent(verdict, observed.label),
    )


def sweep_real(n: int) -> list[SweepRecord]:
    """Classify n equally spaced real parameter points phi in [0, 2pi)."""
    if n < 2:
        raise ValueError("sweep_real requires n >= 2")
    records = []
    for k in range(n):
        phi = 2.0 * math.pi * k / n
        records.append(_evaluate(phi, None, IppParams(math.cos(phi), math.sin(phi))))
    return records


def sweep_complex(n_phi: int, n_delta: int) -> list[SweepRecord]:
    """Classify the (phi, delta) grid with alpha = cos(phi), beta = e^{i delta} sin(phi)."""
    if n_phi < 2 or n_delta < 1:
        raise ValueError("sweep_complex requires n_phi >= 2 and n_delta >= 1")
    records = []
    for k in range(n_phi):
        phi = 2.0 * math.pi * k / n_phi
        for j in range(n_delta):
            delta = 2.0 * math.pi * j / n_delta
            p = IppParams(math.cos(phi), np.exp(1j * delta) * math.sin(phi))
            records.append(_evaluate(phi, delta, p))
    return records


def sweep_gamma(
    n_theta: int,
    n_a: int,
    n_b: int,
    theta0: float = 0.0,
    phi_a0: float = 0.0,
    phi_b0: float = 0.0,
) -> GammaSweepSummary:
    """Max deviation of the anti-unitary scenario's final Schmidt vector from
    its parameter-free value, over an (n_theta x n_a x n_b) angle grid.

    The optional offsets shift each grid axis, so single-point grids can
    probe any chosen parameter triple.  Deviation at or above 1e-10 is an
    internal contract violation.
    """
    if n_theta < 1 or n_a < 1 or n_b < 1:
        raise ValueError("sweep_gamma requires positive grid sizes")
    worst = 0.0
    for i in range(n_theta):
        theta = theta0 + 2.0 * math.pi * i / n_theta
        for j in range(n_a):
            phi_a = phi_a0 + 2.0 * math.pi * j / n_a
            for k in range(n_b):
                phi_b = phi_b0 + 2.0 * math.pi * k / n_b
                vec = schmidt_vector(chi_final(UnitaryParams(theta, phi_a, phi_b)))
                worst = max(worst, float(np.max(np.abs(vec - CHI_FINAL_SCHMIDT))))
    if worst >= GAMMA_DEVIATION_TOL:
        raise ContractViolationError(
            f"final Schmidt vector deviates by {worst:.3e} from its parameter-free value"
        )
    return GammaSweepSummary(n_theta, n_a, n_b, n_theta * n_a * n_b, worst)


def summarize(records: list[SweepRecord]) -> dict[str, dict[str, float]]:
    """Category counts and fractions over a record sequence."""
    counts = {name: 0 for name in ("incomparable", "increase", "equal", "convertible")}
    for record in records:
        counts[_CATEGORY[record.observed]] += 1
    total = len(records)
    fractions = {name: count / total for name, count in counts.items()}
    return {"counts": counts, "fractions": fractions, "total": total}


def format_float(x: float) -> str:
    """Render a float with 15 significant digits."""
    return f"{x:.15g}"


def _record_fields(record: SweepRecord) -> list[str]:
    return [
        format_float(record.phi),
        "" if record.delta is None else format_float(record.delta),
        format_float(record.big_a),
        format_float(record.big_b),
        format_float(record.lam1),
        format_float(record.lam2),
        format_float(record.lam3),
        format_float(record.entropy_initial),
        format_float(record.entropy_final),
        record.observed.value,
        record.predicted.value,
        "true" if record.agree else "false",
    ]


def records_to_csv(records: list[SweepRecord]) -> str:
    """CSV text with the fixed sweep header."""
    lines = [CSV_HEADER]
    lines.extend(",".join(_record_fields(record)) for record in records)
    return "\n".join(lines) + "\n"


def _record_dict(record: SweepRecord) -> dict:
    return {
        "phi": float(format_float(record.phi)),
        "delta": None if record.delta is None else float(format_float(record.delta)),
        "A": float(format_float(record.big_a)),
        "B": float(format_float(record.big_b)),
        "lam1": float(format_float(record.lam1)),
        "lam2": float(format_float(record.lam2)),
        "lam3": float(format_float(record.lam3)),
        "entropy_i": float(format_float(record.entropy_initial)),
        "entropy_f": float(format_float(record.entropy_final)),
        "observed": record.observed.value,
        "predicted": record.predicted.value,
        "agree": record.agree,
    }


def records_to_json(records: list[SweepRecord]) -> str:
    """JSON array of records with the same field names as the CSV columns."""
    return json.dumps([_record_dict(record) for record in records], indent=2)
