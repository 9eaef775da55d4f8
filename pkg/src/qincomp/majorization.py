"""Nielsen's majorization test for deterministic LOCC conversion.

A source Schmidt vector converts to a target exactly when every partial
sum of the source (sorted descending) stays at or below the target's.
A pair convertible in neither direction is incomparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

MAJORIZATION_TOL = 1e-10


class PairLabel(Enum):
    CONVERTIBLE_FORWARD = "CONVERTIBLE_FORWARD"
    CONVERTIBLE_BACKWARD = "CONVERTIBLE_BACKWARD"
    EQUAL = "EQUAL"
    INCOMPARABLE = "INCOMPARABLE"


@dataclass(frozen=True)
class PairVerdict:
    label: PairLabel
    partial_sums_src: np.ndarray
    partial_sums_dst: np.ndarray


def _descending_padded(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.sort(np.asarray(a, dtype=float))[::-1]
    b = np.sort(np.asarray(b, dtype=float))[::-1]
    n = max(a.size, b.size)
    return (
        np.pad(a, (0, n - a.size)),
        np.pad(b, (0, n - b.size)),
    )


def majorizes(b: np.ndarray, a: np.ndarray, tol: float = MAJORIZATION_TOL) -> bool:
    """True iff a is majorized by b: every partial sum of a is <= b's + tol.

    Ties count as satisfying the inequality, so borderline pairs register
    as convertible rather than incomparable.  Unequal lengths are
    zero-padded.
    """
    a, b = _descending_padded(a, b)
    return bool(np.all(np.cumsum(a) <= np.cumsum(b) + tol))


def classify_pair(src: np.ndarray, dst: np.ndarray) -> PairVerdict:
    """Nielsen verdict for converting src into dst under deterministic LOCC."""
    src, dst = _descending_padded(src, dst)
    forward = majorizes(dst, src)
    backward = majorizes(src, dst)
    if forward and backward:
        label = PairLabel.EQUAL
    elif forward:
        label = PairLabel.CONVERTIBLE_FORWARD
    elif backward:
        label = PairLabel.CONVERTIBLE_BACKWARD
    else:
        label = PairLabel.INCOMPARABLE
    return PairVerdict(label, np.cumsum(src), np.cumsum(dst))


def incomparable_strict3(a: np.ndarray, b: np.ndarray) -> bool:
    """Shortcut incomparability test for strictly decreasing 3-entry vectors.

    Incomparable iff (a1 > b1 and a3 > b3) or (a1 < b1 and a3 < b3).
    Raises ValueError unless both vectors are strictly decreasing; callers
    with ties should use classify_pair instead.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != (3,) or b.shape != (3,):
        raise ValueError("incomparable_strict3 requires 3-entry vectors")
    for v in (a, b):
        if not (v[0] > v[1] > v[2]):
            raise ValueError("incomparable_strict3 requires strictly decreasing entries")
    return bool((a[0] > b[0] and a[2] > b[2]) or (a[0] < b[0] and a[2] < b[2]))
