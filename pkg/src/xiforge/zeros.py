"""Locating the critical-line zeros of the degree-q polynomial family.

The reflection law p(s) = (-1)^q p(1-s) pins p(1/2 + it) to a fixed line
through the origin: real values for even q, purely imaginary for odd q.
critical_line_section projects onto that line, turning the search into
one-dimensional sign-change bracketing plus bisection, which is complete
and derivative-free.  The default window t_max = 45 covers every zero up
to degree 25 (the outermost ordinate grows by about 1.8 per degree and
reaches 40.01 at q = 25).  If the zero count (doubling t > 0 zeros for the
mirror ordinates, plus the forced t = 0 zero of odd degrees) ever differs
from the polynomial degree, the scan retries once at 10x resolution and
then reports CountMismatch instead of staying silent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CountMismatch, DomainError
from .hyper import hermite_mellin_poly

# Refinement and detection thresholds
_BRACKET_WIDTH = 1e-12
_FLAT_BRACKET = 1e-13


@dataclass(frozen=True)
class ZeroRecord:
    """A refined critical-line zero at s = 1/2 + i t, t >= 0."""

    q: int
    t: float
    residual: float
    bracket_width: float


@dataclass(frozen=True)
class ExhaustiveReport:
    """Outcome of the completeness check for one degree."""

    q: int
    ok: bool
    found_with_multiplicity: int
    expected: int
    zeros: tuple[ZeroRecord, ...]
    min_gap: float | None
    detail: str


def critical_line_section(q: int, t: float) -> float:
    """Re p(1/2 + it) for even q, Im p(1/2 + it) for odd q.

    Sign changes of this real-valued section bracket every critical-line
    zero of the degree-q polynomial.
    """
    if q < 0:
        raise DomainError("q must be >= 0")
    value = hermite_mellin_poly(q, complex(0.5, t))
    return value.real if q % 2 == 0 else value.imag


def _bisect(q: int, lo: float, hi: float, f_lo: float) -> tuple[float, float]:
    while hi - lo > _BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        f_mid = critical_line_section(q, mid)
        if f_mid == 0.0:
            return mid, 0.0
        if (f_lo > 0.0) == (f_mid > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi), hi - lo


def _scan_positive(
    q: int, t_lo: float, t_hi: float, step: float, depth: int = 0
) -> list[ZeroRecord]:
    records: list[ZeroRecord] = []
    t = t_lo
    f_prev = critical_line_section(q, t)
    local_scale = abs(f_prev)
    while t < t_hi:
        t_next = min(t + step, t_hi)
        f_next = critical_line_section(q, t_next)
        local_scale = max(local_scale, abs(f_next))
        if f_prev == 0.0:
            records.append(ZeroRecord(q, t, abs(hermite_mellin_poly(q, complex(0.5, t))), 0.0))
        elif (f_prev > 0.0) != (f_next > 0.0):
            flat = (
                abs(f_prev) < _FLAT_BRACKET * local_scale
                and abs(f_next) < _FLAT_BRACKET * local_scale
            )
            if flat and depth < 3:
                # suspicious near-tangent crossing: re-scan at 10x resolution
                records.extend(_scan_positive(q, t, t_next, step / 10.0, depth + 1))
            else:
                root, width = _bisect(q, t, t_next, f_prev)
                residual = abs(hermite_mellin_poly(q, complex(0.5, root)))
                records.append(ZeroRecord(q, root, residual, width))
        t, f_prev = t_next, f_next
    return records


def find_zeros(q: int, t_max: float = 45.0, grid_step: float = 0.01) -> list[ZeroRecord]:
    """All critical-line zeros with ordinate in [0, t_max], refined.

    Returns t >= 0 representatives; negative ordinates follow by mirror
    symmetry.  Raises CountMismatch if, even after one retry at ten times
    the resolution, the multiplicity count does not equal q.
    """
    if q < 0:
        raise DomainError("q must be >= 0")
    if grid_step <= 0.0 or t_max <= 0.0:
        raise DomainError("t_max and grid_step must be positive")
    if q == 0:
        return []
    for attempt_step in (grid_step, grid_step / 10.0):
        records: list[ZeroRecord] = []
        if q % 2 == 1:
            # reflection forces a zero at the real point of the line
            residual = abs(hermite_mellin_poly(q, complex(0.5, 0.0)))
            records.append(ZeroRecord(q, 0.0, residual, 0.0))
            start = attempt_step / 2.0
        else:
            start = 0.0
        records.extend(_scan_positive(q, start, t_max, attempt_step))
        count = sum(1 if r.t == 0.0 else 2 for r in records)
        if count == q:
            return sorted(records, key=lambda r: r.t)
    raise CountMismatch(
        f"degree {q}: found multiplicity {count} zeros in [0, {t_max}], expected {q}",
        found=count,
        expected=q,
    )


def verify_exhaustive(q: int, t_max: float = 45.0, grid_step: float = 0.01) -> ExhaustiveReport:
    """Check that the critical line carries all q zeros of the polynomial.

    The polynomial has exact degree q, so finding q critical-line zeros
    (counting the mirror ordinates) leaves no room for off-line zeros.
    The report carries the minimum gap between refined ordinates as
    simplicity evidence.
    """
    if q < 0:
        raise DomainError("q must be >= 0")
    if q == 0:
        return ExhaustiveReport(0, True, 0, 0, (), None, "degree 0: vacuously exhaustive")
    try:
        zeros = find_zeros(q, t_max=t_max, grid_step=grid_step)
    except CountMismatch as exc:
        return ExhaustiveReport(
            q, False, exc.found, exc.expected, (), None,
            f"count mismatch: {exc}",
        )
    ordinates = [r.t for r in zeros]
    gaps = [b - a for a, b in zip(ordinates, ordinates[1:])]
    min_gap = min(gaps) if gaps else None
    count = sum(1 if r.t == 0.0 else 2 for r in zeros)
    return ExhaustiveReport(
        q, True, count, q, tuple(zeros), min_gap,
        f"found all {q} zeros on the critical line",
    )
