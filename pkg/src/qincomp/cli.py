"""Command-line interface: demos, pair checks, and classification sweeps.

Exit codes: 0 success, 2 malformed input, 3 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

import numpy as np

from .cases import BOUNDARY_NOTE, predict_case, verify_prediction
from .linalg import JacobiConvergenceError
from .majorization import classify_pair
from .qubits import IppParams, UnitaryParams
from .scenarios import (
    PI_INITIAL_SCHMIDT,
    build_chi_initial,
    chi_final,
    cubic_coefficients,
    pqr,
    spectrum_from_ab,
)
from .states import BipartiteState, entropy_of_entanglement, schmidt_vector
from .sweep import (
    ContractViolationError,
    format_float,
    records_to_csv,
    records_to_json,
    summarize,
    sweep_complex,
    sweep_gamma,
    sweep_real,
)

_FLOAT = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^({_FLOAT})(?:({_FLOAT})i)?$")

SCHMIDT_ARG_SUM_TOL = 1e-10


def parse_complex(text: str) -> complex:
    """Parse the re[+im i] literal form, e.g. 0.5+0.5i or -1."""
    match = _COMPLEX_RE.match(text.strip().replace(" ", ""))
    if match is None:
        raise ValueError(f"malformed complex literal: {text!r} (expected re[+im i])")
    imag = float(match.group(2)) if match.group(2) is not None else 0.0
    return complex(float(match.group(1)), imag)


def parse_state_file(path: str) -> BipartiteState:
    """Read a state file: first line 'dimA dimB', then dimA*dimB lines 're im'."""
    with open(path, encoding="utf-8") as handle:
        lines = [line.strip() for line in handle if line.strip()]
    if not lines:
        raise ValueError("state file is empty")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("state file must start with 'dimA dimB'")
    try:
        dim_a, dim_b = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ValueError("state file dimensions must be integers") from exc
    body = lines[1:]
    if len(body) != dim_a * dim_b:
        raise ValueError(
            f"state file needs {dim_a * dim_b} amplitude lines, found {len(body)}"
        )
    amps = np.empty(dim_a * dim_b, dtype=complex)
    for index, line in enumerate(body):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"amplitude line {index + 2} must be 're im'")
        try:
            amps[index] = complex(float(parts[0]), float(parts[1]))
        except ValueError as exc:
            raise ValueError(f"amplitude line {index + 2} is not numeric") from exc
    return BipartiteState(dim_a, dim_b, amps)


def parse_schmidt_arg(text: str) -> np.ndarray:
    """Parse a comma-separated Schmidt vector and validate it."""
    try:
        values = np.array([float(part) for part in text.split(",")], dtype=float)
    except ValueError as exc:
        raise ValueError(f"malformed Schmidt vector: {text!r}") from exc
    if values.size == 0 or np.any(values < 0.0):
        raise ValueError("Schmidt coefficients must be nonnegative")
    if abs(float(values.sum()) - 1.0) > SCHMIDT_ARG_SUM_TOL:
        raise ValueError("Schmidt coefficients must sum to 1")
    return values


def _emit(fmt: str, header_fields: list[str], row_fields: list[str], payload: dict) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(",".join(header_fields))
        print(",".join(row_fields))


def _cmd_schmidt(args: argparse.Namespace) -> int:
    state = parse_state_file(args.state_file)
    vec = schmidt_vector(state)
    entropy = entropy_of_entanglement(vec)
    names = [f"lam{i + 1}" for i in range(vec.size)] + ["entropy"]
    row = [format_float(v) for v in vec] + [format_float(entropy)]
    _emit(
        args.format,
        names,
        row,
        {"schmidt": [float(format_float(v)) for v in vec], "entropy": float(format_float(entropy))},
    )
    return 0


def _cmd_check_pair(args: argparse.Namespace) -> int:
    src = parse_schmidt_arg(args.vec_a)
    dst = parse_schmidt_arg(args.vec_b)
    verdict = classify_pair(src, dst)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "label": verdict.label.value,
                    "partial_sums_src": [float(format_float(v)) for v in verdict.partial_sums_src],
                    "partial_sums_dst": [float(format_float(v)) for v in verdict.partial_sums_dst],
                },
                indent=2,
            )
        )
    else:
        print(verdict.label.value)
    return 0


def _cmd_gamma_demo(args: argparse.Namespace) -> int:
    params = UnitaryParams(args.theta, args.phi_a, args.phi_b)
    initial = schmidt_vector(build_chi_initial())
    final = schmidt_vector(chi_final(params))
    observed = classify_pair(initial, final)
    names = (
        ["theta", "phi_a", "phi_b"]
        + [f"lam_i{i + 1}" for i in range(3)]
        + [f"lam_f{i + 1}" for i in range(3)]
        + ["entropy_i", "entropy_f", "observed"]
    )
    values = (
        [params.theta, params.phi_a, params.phi_b]
        + list(initial)
        + list(final)
        + [entropy_of_entanglement(initial), entropy_of_entanglement(final)]
    )
    row = [format_float(v) for v in values] + [observed.label.value]
    payload = dict(zip(names, [float(format_float(v)) for v in values]))
    payload["observed"] = observed.label.value
    _emit(args.format, names, row, payload)
    return 0


def _ipp_from_args(args: argparse.Namespace) -> IppParams:
    return IppParams(parse_complex(args.alpha), parse_complex(args.beta))


def _cmd_ipp_demo(args: argparse.Namespace) -> int:
    params = _ipp_from_args(args)
    big_a, big_b = cubic_coefficients(pqr(params))
    spectrum = spectrum_from_ab(big_a, big_b)
    check = verify_prediction(params)
    entropy_i = entropy_of_entanglement(PI_INITIAL_SCHMIDT)
    entropy_f = entropy_i + check.entropy_delta
    names = ["A", "B", "lam1", "lam2", "lam3", "entropy_i", "entropy_f", "observed", "predicted", "agree"]
    values = [big_a, big_b, *spectrum.eigenvalues, entropy_i, entropy_f]
    row = [format_float(v) for v in values] + [
        check.observed.label.value,
        check.predicted.predicted.value,
        "true" if check.agree else "false",
    ]
    payload = dict(zip(names[:7], [float(format_float(v)) for v in values]))
    payload.update(
        observed=check.observed.label.value,
        predicted=check.predicted.predicted.value,
        agree=check.agree,
    )
    _emit(args.format, names, row, payload)
    return 0


def _cmd_case_analyze(args: argparse.Namespace) -> int:
    params = _ipp_from_args(args)
    big_a, big_b = cubic_coefficients(pqr(params))
    verdict = predict_case(big_a, big_b)
    condition = verdict.condition
    names = [
        "A",
        "B",
        "case",
        "subcase",
        "predicted",
        "condition_value",
        "expr_max_branch",
        "expr_min_branch",
        "governing",
    ]
    row = [
        format_float(big_a),
        format_float(big_b),
        verdict.case_id.value,
        verdict.subcase.value,
        verdict.predicted.value,
        "" if verdict.condition_value is None else format_float(verdict.condition_value),
        "" if condition is None else format_float(condition.expr_max_branch),
        "" if condition is None else format_float(condition.expr_min_branch),
        "" if condition is None else condition.governing,
    ]
    payload = {
        "A": float(format_float(big_a)),
        "B": float(format_float(big_b)),
        "case": verdict.case_id.value,
        "subcase": verdict.subcase.value,
        "predicted": verdict.predicted.value,
        "condition_value": None
        if verdict.condition_value is None
        else float(format_float(verdict.condition_value)),
        "expr_max_branch": None if condition is None else float(format_float(condition.expr_max_branch)),
        "expr_min_branch": None if condition is None else float(format_float(condition.expr_min_branch)),
        "governing": None if condition is None else condition.governing,
        "note": BOUNDARY_NOTE,
    }
    _emit(args.format, names, row, payload)
    return 0


def _print_records(args: argparse.Namespace, records) -> None:
    if args.summary:
        summary = summarize(records)
        names = ["total"] + [f"count_{k}" for k in summary["counts"]] + [
            f"frac_{k}" for k in summary["fractions"]
        ]
        row = [str(summary["total"])] + [str(v) for v in summary["counts"].values()] + [
            format_float(v) for v in summary["fractions"].values()
        ]
        _emit(args.format, names, row, summary)
    elif args.format == "json":
        print(records_to_json(records))
    else:
        sys.stdout.write(records_to_csv(records))


def _cmd_sweep_real(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise ValueError("--n must be at least 2")
    _print_records(args, sweep_real(args.n))
    return 0


def _cmd_sweep_complex(args: argparse.Namespace) -> int:
    if args.n_phi < 2 or args.n_delta < 1:
        raise ValueError("--n-phi must be at least 2 and --n-delta at least 1")
    _print_records(args, sweep_complex(args.n_phi, args.n_delta))
    return 0


def _cmd_sweep_gamma(args: argparse.Namespace) -> int:
    if min(args.n_theta, args.n_a, args.n_b) < 1:
        raise ValueError("grid sizes must be positive")
    summary = sweep_gamma(args.n_theta, args.n_a, args.n_b)
    names = ["n_theta", "n_a", "n_b", "grid_points", "max_deviation"]
    row = [
        str(summary.n_theta),
        str(summary.n_a),
        str(summary.n_b),
        str(summary.grid_points),
        format_float(summary.max_deviation),
    ]
    payload = {
        "n_theta": summary.n_theta,
        "n_a": summary.n_a,
        "n_b": summary.n_b,
        "grid_points": summary.grid_points,
        "max_deviation": float(format_float(summary.max_deviation)),
    }
    _emit(args.format, names, row, payload)
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qincomp",
        description="Detect nonphysical qubit operations via LOCC-incomparable states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schmidt", help="Schmidt vector and entropy of a state file")
    p.add_argument("state_file")
    _add_format(p)
    p.set_defaults(func=_cmd_schmidt)

    p = sub.add_parser("check-pair", help="Nielsen verdict for two Schmidt vectors")
    p.add_argument("vec_a")
    p.add_argument("vec_b")
    _add_format(p)
    p.set_defaults(func=_cmd_check_pair)

    p = sub.add_parser("gamma-demo", help="anti-unitary scenario at chosen angles")
    p.add_argument("--theta", type=float, default=math.pi / 2.0)
    p.add_argument("--phi-a", type=float, default=0.0)
    p.add_argument("--phi-b", type=float, default=0.0)
    _add_format(p)
    p.set_defaults(func=_cmd_gamma_demo)

    p = sub.add_parser("ipp-demo", help="superposition-map scenario at chosen amplitudes")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_ipp_demo)

    p = sub.add_parser("sweep-real", help="classify real parameters on a circle grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--summary", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_sweep_real)

    p = sub.add_parser("sweep-complex", help="classify a (phi, delta) parameter grid")
    p.add_argument("--n-phi", type=int, required=True)
    p.add_argument("--n-delta", type=int, required=True)
    p.add_argument("--summary", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_sweep_complex)

    p = sub.add_parser("sweep-gamma", help="angle-grid check of the parameter-free spectrum")
    p.add_argument("--n-theta", type=int, required=True)
    p.add_argument("--n-a", type=int, required=True)
    p.add_argument("--n-b", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_sweep_gamma)

    p = sub.add_parser("case-analyze", help="predicted case for chosen amplitudes")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_case_analyze)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ContractViolationError, JacobiConvergenceError) as exc:
        print(f"internal contract violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
