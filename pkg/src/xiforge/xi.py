"""The Riemann xi function and its quadrature-backed integral representations.

xi_direct composes s(s-1)/2 with the completed zeta factor
pi^(-s/2) Gamma(s/2) zeta(s), always evaluated on whichever of s, 1-s has
the larger real part (the factor is reflection-symmetric), so trivial-zero
and pole collisions never form 0 * inf.

The integral side evaluates Mellin transforms of the Hermite theta sums:

  mellin_psi_integral:    integral_0^inf psi_j(x) x^(s/2-1) dx
  mellin_omega_integral:  the m^ell weighted variant
  split_tail_transform (F): integral_b^inf psi_j(x) x^(s/2-1) dx - f_2j(0) b^(s/2)/s
  xi_split_real / xi_split_wedge: the two-sided split representations that
  must reproduce (weight poly) * 2 xi(s) / (s(s-1)) for every admissible b.

Integration runs along the ray x = b + u (u real); the integrand is
analytic on the wedge and decays like e^(-pi Re x), so path independence
holds and is asserted empirically through the alternate scaled path
x = b v.  Beyond the configured cutoff the integral is replaced by an
analytic majorant (Hermite envelope times Gaussian decay), and the piece
of the half-line Mellin transforms near the origin uses the Poisson
principal part of the theta sum, whose remainder is exponentially small
below the 0.05 split point.  All such bounds are folded into the reported
error estimate; quadrature that cannot meet tolerance raises
ToleranceNotMet rather than returning a silently degraded value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, FormError, ToleranceNotMet
from .hyper import xi_weight_poly
from .quad import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    QuadratureResult,
    adaptive_quadrature,
    build_mesh,
)
from .special import POLE_TOL, gamma_complex, hermite
from .theta import (
    SeriesControl,
    gaussian_hermite_moment,
    hermite_gaussian_at_zero,
    hermite_theta,
    hermite_theta_weighted,
    theta_abs_bound,
    theta_small_argument_asymptote,
)
from .zeta import zeta

# Wedge margin for quadrature paths: theta convergence degrades like
# 1/sqrt(Re x) toward the boundary, so rays must keep |arg b| below this.
_ARG_MARGIN = math.pi / 2.0 - 0.05

# Mellin transforms over (0, inf) switch to the Poisson principal part
# below this point; its remainder is < 1e-20 there.
_ORIGIN_SPLIT = 0.05

_INTEGRAND_CTL = SeriesControl(tail_tol=1e-15, max_terms=50000)

_EPS = 2.2e-16


@dataclass(frozen=True)
class SplitParameter:
    """Split point b for the two-sided representations.

    Constrained to the open wedge |arg b| < pi/2; unit_circle is set when
    |b| sits within 1e-14 of 1 (the conjugate-symmetric form needs it).
    """

    b: complex
    unit_circle: bool = field(init=False)

    def __post_init__(self) -> None:
        b = complex(self.b)
        if not (b.real > 0.0 and math.isfinite(b.real) and math.isfinite(b.imag)):
            raise DomainError(f"split parameter {b} is outside the wedge |arg b| < pi/2")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "unit_circle", abs(abs(b) - 1.0) < 1e-14)


def _as_split(b) -> SplitParameter:
    return b if isinstance(b, SplitParameter) else SplitParameter(complex(b))


def _require_quad_wedge(x: complex) -> None:
    if abs(cmath.phase(x)) > _ARG_MARGIN:
        raise DomainError(
            f"quadrature path start {x} too close to the wedge boundary "
            f"(|arg| must stay below pi/2 - 0.05)"
        )


def completed_zeta(s: complex) -> complex:
    """pi^(-s/2) Gamma(s/2) zeta(s), evaluated on the reflection-stable side.

    The factor equals its own reflection s -> 1-s, so it is computed from
    whichever side has Re >= 1/2.  Poles at s = 0 and s = 1 remain genuine.
    """
    s = complex(s)
    u = s if s.real >= 0.5 else 1.0 - s
    return cmath.exp(-u / 2.0 * math.log(math.pi)) * gamma_complex(u / 2.0) * zeta(u)


def xi_direct(s: complex) -> complex:
    """Entire completion xi(s) = s(s-1) pi^(-s/2) Gamma(s/2) zeta(s) / 2."""
    s = complex(s)
    if abs(s) <= POLE_TOL or abs(s - 1.0) <= POLE_TOL:
        # s(s-1)/2 * completed factor has the removable limit 1/2 here;
        # within 1e-12 the linear correction is below 1e-13.
        return 0.5 + 0.0j
    return 0.5 * s * (s - 1.0) * completed_zeta(s)


def _psi(j: int, x: complex) -> complex:
    return hermite_theta(j, x, _INTEGRAND_CTL)


def _power(x: complex, e: complex) -> complex:
    return cmath.exp(e * cmath.log(x))


def _integral_tail_bound(g, start: float, step: float = 1.0) -> float:
    """Bound integral_start^inf g(u) du for a decreasing positive majorant g.

    Uses the left-endpoint Riemann sum (an upper bound for decreasing g)
    over a few explicit steps, then caps the remainder by a geometric
    series.  The majorants here decay like exp(-pi u) or faster, so the
    geometric ratio check succeeds immediately.
    """
    total = 0.0
    u = start
    for _ in range(4):
        total += step * g(u)
        u += step
    a, b = g(u), g(u + step)
    if a <= 0.0:
        return total
    ratio = b / a
    if ratio >= 0.9:  # majorant not decaying as expected; widen the step
        return _integral_tail_bound(g, start, step * 2.0)
    return total + step * a / (1.0 - ratio)


def _abs_power_bound(x: complex, s: complex) -> float:
    # |x^(s/2-1)| = |x|^(sigma/2-1) exp(-(Im s / 2) arg x)
    return abs(x) ** (s.real / 2.0 - 1.0) * math.exp(abs(s.imag) / 2.0 * abs(cmath.phase(x)))


def _shift_tail_bound(j: int, b: complex, s: complex, cutoff: float) -> float:
    """Majorant of |integral over the ray beyond b + cutoff|."""
    scale = (8.0 * math.pi) ** (-j)

    def g(u: float) -> float:
        x = b + u
        return scale * theta_abs_bound(2 * j, 0, x) * _abs_power_bound(x, s)

    return _integral_tail_bound(g, cutoff)


def _scale_tail_bound(j: int, b: complex, s: complex, v_cut: float) -> float:
    scale = (8.0 * math.pi) ** (-j) * abs(b)

    def g(v: float) -> float:
        x = b * v
        return scale * theta_abs_bound(2 * j, 0, x) * _abs_power_bound(x, s)

    return _integral_tail_bound(g, v_cut)


def _ray_integral(j: int, start: complex, s: complex, qc: QuadratureConfig, path: str = "shift") -> QuadratureResult:
    """integral_start^inf psi_j(x) x^(s/2-1) dx along the chosen path.

    path="shift" walks x = start + u; path="scale" walks x = start * v and
    exists to certify path independence inside the wedge.
    """
    _require_quad_wedge(start)
    im_s = abs(s.imag)
    if path == "shift":

        def f(u: float) -> complex:
            x = start + u
            return _psi(j, x) * _power(x, s / 2.0 - 1.0)

        def cap(u: float) -> float:
            return min(1.25, 4.0 * math.pi * abs(start + u) / (im_s + 4.0))

        cut = qc.ray_cutoff
        tail = _shift_tail_bound(j, start, s, cut)
        mesh = build_mesh(0.0, cut, cap)
    elif path == "scale":

        def f(v: float) -> complex:
            x = start * v
            return _psi(j, x) * _power(x, s / 2.0 - 1.0) * start

        def cap(v: float) -> float:
            return min(
                max(1.25 / abs(start), 0.05),
                4.0 * math.pi * v / (im_s + 4.0),
            )

        cut = 1.0 + qc.ray_cutoff / start.real
        tail = _scale_tail_bound(j, start, s, cut)
        mesh = build_mesh(1.0, cut, cap)
    else:
        raise ValueError(f"unknown path {path!r}")
    series_err = 1.1 * _INTEGRAND_CTL.tail_tol * (mesh[-1] - mesh[0])
    res = adaptive_quadrature(f, mesh, qc, extra_err=tail + series_err)
    return res


def _child(qc: QuadratureConfig, parts: int) -> QuadratureConfig:
    return QuadratureConfig(
        abs_tol=qc.abs_tol / parts,
        rel_tol=qc.rel_tol / parts,
        max_subdivisions=qc.max_subdivisions,
        ray_cutoff=qc.ray_cutoff,
    )


def split_tail_transform(
    j: int,
    s: complex,
    b,
    qc: QuadratureConfig = DEFAULT_QUADRATURE,
    path: str = "shift",
) -> QuadratureResult:
    """F_b(s): the b-to-infinity Mellin piece minus its endpoint correction.

    F_b(s) = integral_b^inf psi_j(x) x^(s/2-1) dx - f_2j(0) b^(s/2) / s,
    principal branch of b^(s/2).  DomainError within 1e-12 of s = 0.
    """
    sp = _as_split(b)
    s = complex(s)
    if abs(s) <= POLE_TOL:
        raise DomainError("split_tail_transform needs s away from 0")
    core = _ray_integral(j, sp.b, s, qc, path=path)
    corr = hermite_gaussian_at_zero(j) * _power(sp.b, s / 2.0) / s
    return QuadratureResult(core.value - corr, core.err_estimate, core.subdivisions_used)


def xi_split_real(j: int, s: complex, b: float, qc: QuadratureConfig = DEFAULT_QUADRATURE) -> QuadratureResult:
    """Two-sided split representation for real b > 0.

    Returns the right-hand side
      (-1)^j integral_(1/b)^inf x^(-(s+1)/2) psi_j dx
      + integral_b^inf psi_j x^(s/2-1) dx
      - f_2j(0) [ b^(s/2)/s + (-1)^j b^((s-1)/2)/(1-s) ],
    which must equal xi_weight_poly(j, s) * 2 xi(s) / (s(s-1)) for every b.
    """
    if not (isinstance(b, (int, float)) and b > 0.0):
        raise DomainError("xi_split_real needs real b > 0")
    s = complex(s)
    if abs(s) <= POLE_TOL or abs(s - 1.0) <= POLE_TOL:
        raise DomainError("split representation undefined at s in {0, 1}")
    half = _child(qc, 2)
    mirrored = _ray_integral(j, 1.0 / b, 1.0 - s, half)
    direct = _ray_integral(j, float(b), s, half)
    f0 = hermite_gaussian_at_zero(j)
    sign = (-1) ** j
    corr = f0 * (_power(b, s / 2.0) / s + sign * _power(b, (s - 1.0) / 2.0) / (1.0 - s))
    value = sign * mirrored.value + direct.value - corr
    return QuadratureResult(
        value,
        mirrored.err_estimate + direct.err_estimate,
        mirrored.subdivisions_used + direct.subdivisions_used,
    )


def xi_split_wedge(
    j: int,
    s: complex,
    b,
    qc: QuadratureConfig = DEFAULT_QUADRATURE,
    form: str = "i",
) -> QuadratureResult:
    """Split representation for complex b in the wedge.

    form="i":  F_b(s) + (-1)^j F_(1/b)(1 - s)
    form="ii": F_b(s) + (-1)^j conj(F_b(1 - conj(s))), which additionally
    needs |b| = 1 (FormError otherwise).  Both equal
    xi_weight_poly(j, s) * 2 xi(s)/(s(s-1)).
    """
    sp = _as_split(b)
    s = complex(s)
    if abs(s) <= POLE_TOL or abs(s - 1.0) <= POLE_TOL:
        raise DomainError("split representation undefined at s in {0, 1}")
    half = _child(qc, 2)
    sign = (-1) ** j
    if form == "i":
        first = split_tail_transform(j, s, sp, half)
        second = split_tail_transform(j, 1.0 - s, SplitParameter(1.0 / sp.b), half)
        value = first.value + sign * second.value
    elif form == "ii":
        if not sp.unit_circle:
            raise FormError(f"form ii needs |b| = 1, got |b| = {abs(sp.b)}")
        first = split_tail_transform(j, s, sp, half)
        second = split_tail_transform(j, 1.0 - s.conjugate(), sp, half)
        value = first.value + sign * second.value.conjugate()
    else:
        raise FormError(f"unknown form {form!r}")
    return QuadratureResult(
        value,
        first.err_estimate + second.err_estimate,
        first.subdivisions_used + second.subdivisions_used,
    )


def _mellin_core(n: int, ell: int, s: complex, qc: QuadratureConfig) -> QuadratureResult:
    # integral_0^inf (weighted theta) t^(s/2-1) dt, Re s > 1 + ell.
    delta = _ORIGIN_SPLIT
    cut = qc.ray_cutoff
    # Poisson principal part on (0, delta], exact up to the measured remainder
    a_exp = (s - ell - 1.0) / 2.0
    moment = gaussian_hermite_moment(n, ell)
    analytic = 0.5 * moment * delta**a_exp / a_exp
    if ell == 0:
        analytic -= 0.5 * hermite(n, 0.0) * delta ** (s / 2.0) / (s / 2.0)
    omega_delta = hermite_theta_weighted(n, ell, delta, _INTEGRAND_CTL).value
    remainder = abs(omega_delta - theta_small_argument_asymptote(n, ell, delta))
    rem_bound = 1.2 * 2.0 * (remainder + 4.0 * _EPS * abs(omega_delta)) * delta ** (s.real / 2.0) / (s.real / 2.0)

    im_s = abs(s.imag)

    def f(t: float) -> complex:
        return hermite_theta_weighted(n, ell, t, _INTEGRAND_CTL).value * _power(t, s / 2.0 - 1.0)

    def cap(t: float) -> float:
        return min(0.8, max(0.03, 0.6 * t), 4.0 * math.pi * t / (im_s + 4.0))

    def tail_majorant(t: float) -> float:
        return theta_abs_bound(n, ell, t) * t ** (s.real / 2.0 - 1.0)

    tail = _integral_tail_bound(tail_majorant, cut)
    mesh = build_mesh(delta, cut, cap)
    series_err = 1.1 * _INTEGRAND_CTL.tail_tol * (cut - delta)
    res = adaptive_quadrature(f, mesh, qc, extra_err=tail + rem_bound + series_err)
    return QuadratureResult(res.value + analytic, res.err_estimate, res.subdivisions_used)


def mellin_psi_integral(j: int, s: complex, qc: QuadratureConfig = DEFAULT_QUADRATURE) -> QuadratureResult:
    """integral_0^inf psi_j(x) x^(s/2-1) dx for Re s > 1.

    Matches xi_weight_poly(j, s) pi^(-s/2) Gamma(s/2) zeta(s); checking that
    identity is the verification suites' job, not this function's.
    """
    s = complex(s)
    if not s.real > 1.0:
        raise DomainError("mellin_psi_integral needs Re s > 1")
    core = _mellin_core(2 * j, 0, s, qc)
    scale = (8.0 * math.pi) ** (-j)
    return QuadratureResult(scale * core.value, scale * core.err_estimate, core.subdivisions_used)


def mellin_omega_integral(
    q: int, ell: int, s: complex, qc: QuadratureConfig = DEFAULT_QUADRATURE
) -> QuadratureResult:
    """integral_0^inf (weighted theta)_{2q, ell}(t) t^(s/2-1) dt, Re s > 1 + ell."""
    if ell < 0 or ell % 2 != 0:
        raise DomainError("ell must be even and >= 0")
    s = complex(s)
    if not s.real > 1.0 + ell:
        raise DomainError(f"mellin_omega_integral needs Re s > {1 + ell}")
    return _mellin_core(2 * q, ell, s, qc)


@dataclass(frozen=True)
class ReportCell:
    kind: str  # "split-real" | "split-wedge-i" | "split-wedge-ii"
    j: int
    b: complex
    value: complex | None
    err_estimate: float | None
    implied_completed: complex | None
    deviation_vs_direct: float | None
    error: str | None = None


@dataclass(frozen=True)
class RepresentationReport:
    s: complex
    xi_value: complex
    completed_value: complex
    cells: tuple[ReportCell, ...]
    max_pairwise_deviation: float | None
    warnings: tuple[str, ...]


def representation_report(
    s: complex,
    j_list: tuple[int, ...] | list[int],
    b_list,
    qc: QuadratureConfig = DEFAULT_QUADRATURE,
) -> RepresentationReport:
    """Evaluate xi_direct and every requested split representation at s.

    Per-cell failures are recorded in the cell, never propagated, so a
    report always comes back.  Cells are evaluated in sorted order and
    share no state, so the table is deterministic and safe to parallelize.
    Pairwise deviations are taken on the implied completed-zeta scale
    (cell value divided by its weight polynomial); cells whose weight
    polynomial is too small to divide by are skipped in that comparison
    and flagged in the warnings list.
    """
    s = complex(s)
    xi_val = xi_direct(s)
    lam = completed_zeta(s)
    warnings_list: list[str] = []
    cells: list[ReportCell] = []
    for j in sorted(j_list):
        weight = xi_weight_poly(j, s)
        target = weight * lam
        for b in b_list:
            sp = _as_split(b)
            kinds: list[tuple[str, object]] = []
            if abs(sp.b.imag) <= 1e-14:
                kinds.append(("split-real", lambda jj=j, bb=sp.b.real: xi_split_real(jj, s, bb, qc)))
            kinds.append(("split-wedge-i", lambda jj=j, bb=sp: xi_split_wedge(jj, s, bb, qc, form="i")))
            if sp.unit_circle:
                kinds.append(("split-wedge-ii", lambda jj=j, bb=sp: xi_split_wedge(jj, s, bb, qc, form="ii")))
            for kind, runner in kinds:
                try:
                    res = runner()
                except (DomainError, FormError, ToleranceNotMet) as exc:
                    cells.append(ReportCell(kind, j, sp.b, None, None, None, None, error=str(exc)))
                    continue
                if abs(weight) > 1e-12 * max(1.0, abs(res.value)):
                    implied = res.value / weight
                else:
                    implied = None
                    warnings_list.append(
                        f"cell ({kind}, j={j}, b={sp.b}): weight polynomial too small to normalize"
                    )
                cells.append(
                    ReportCell(
                        kind,
                        j,
                        sp.b,
                        res.value,
                        res.err_estimate,
                        implied,
                        abs(res.value - target),
                    )
                )
    implied_vals = [c.implied_completed for c in cells if c.implied_completed is not None]
    max_dev = None
    if len(implied_vals) >= 2:
        max_dev = max(
            abs(u - v) for i, u in enumerate(implied_vals) for v in implied_vals[i + 1 :]
        )
    return RepresentationReport(
        s=s,
        xi_value=xi_val,
        completed_value=lam,
        cells=tuple(cells),
        max_pairwise_deviation=max_dev,
        warnings=tuple(warnings_list),
    )
