"""Named verification suites: every closed-form identity as a pass/fail table.

Each suite exercises one family of invariants at pinned tolerances and
returns a deterministic, sorted list of CaseResult rows.  The CLI maps
these to the `verify` subcommand; the acceptance tests call them
directly.  Random sampling uses fixed seeds so identical invocations
produce identical tables.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .hyper import (
    d_hyp2f1_at_zero,
    d_hyp2f1_ds,
    hermite_mellin_poly,
    xi_weight_poly,
)
from .quad import DEFAULT_QUADRATURE, QuadratureConfig
from .theta import SeriesControl, inversion_residual, parity_split_recombination
from .xi import (
    completed_zeta,
    mellin_omega_integral,
    mellin_psi_integral,
    xi_split_real,
    xi_split_wedge,
)
from .zeta import (
    special_value_even_float,
    special_value_neg,
    zeta_family,
    zeta_family_hyp_form,
)
from .special import gamma_complex

SUITE_NAMES = (
    "functional-eq",
    "lemma1",
    "mellin",
    "prop3",
    "prop4",
    "special-values",
    "eq24",
    "eq14",
)


@dataclass(frozen=True)
class CaseResult:
    case: str
    ok: bool
    deviation: float
    tolerance: float
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "status": "pass" if self.ok else "fail",
            "deviation": self.deviation,
            "tolerance": self.tolerance,
            "note": self.note,
        }


def _fmt_c(z: complex) -> str:
    return f"{z.real:g}{z.imag:+g}i"


def suite_functional_eq(qmax: int = 20, samples: int = 200) -> list[CaseResult]:
    """Reflection law p(s) = (-1)^q p(1-s) on random points, |s| <= 15."""
    rng = random.Random(987123)
    results = []
    for q in range(qmax + 1):
        worst = 0.0
        for _ in range(samples):
            while True:
                s = complex(rng.uniform(-15, 15), rng.uniform(-15, 15))
                if abs(s) <= 15.0:
                    break
            lhs = hermite_mellin_poly(q, s)
            rhs = (-1) ** q * hermite_mellin_poly(q, 1.0 - s)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
        results.append(CaseResult(f"functional-eq q={q:02d}", worst <= 1e-9, worst, 1e-9))
    return results


def suite_lemma1(jmax: int = 5, tail_tol: float = 1e-14) -> list[CaseResult]:
    """Inversion law residual on the 40-point grid (20 real, 20 on |x|=1)."""
    ctl = SeriesControl(tail_tol=tail_tol, max_terms=20000)
    lo, hi = 0.05, 20.0
    grid: list[complex] = [
        complex(lo * (hi / lo) ** (k / 19.0)) for k in range(20)
    ]
    # 20 points strictly inside the open arg-interval (midpoint partition);
    # at the interval endpoints themselves the series terms reach ~1e10
    # against O(600) values, past what doubles can certify at 1e-12
    for k in range(20):
        phi = -math.pi / 2 + 0.1 + (k + 0.5) * (math.pi - 0.2) / 20.0
        grid.append(cmath.exp(1j * phi))
    results = []
    for j in range(jmax + 1):
        for x in grid:
            r = inversion_residual(j, x, ctl)
            results.append(
                CaseResult(f"lemma1 j={j} x={_fmt_c(x)}", r <= 1e-12, r, 1e-12)
            )
    return sorted(results, key=lambda c: c.case)


def suite_mellin(qc: QuadratureConfig = DEFAULT_QUADRATURE) -> list[CaseResult]:
    """Half-line Mellin transforms against the closed forms, plus the
    hypergeometric sign-convention adjudication."""
    tol = 1e-8
    results = []

    def gamma_pi(s: complex) -> complex:
        return cmath.exp(-s / 2.0 * cmath.log(math.pi)) * gamma_complex(s / 2.0)

    for j in range(4):
        for s in (2.0, 2.5, 4.0, 3 + 2j):
            s = complex(s)
            got = mellin_psi_integral(j, s, qc)
            expect = xi_weight_poly(j, s) * completed_zeta(s)
            dev = abs(got.value - expect)
            results.append(
                CaseResult(f"mellin-psi j={j} s={_fmt_c(s)}", dev <= tol, dev, tol)
            )
    for q, ell, s in ((0, 0, 2.0), (1, 0, 3.0), (2, 0, 4.0)):
        s = complex(s)
        got = mellin_omega_integral(q, ell, s, qc)
        expect = gamma_pi(s) * zeta_family(q, ell, s)
        dev = abs(got.value - expect)
        results.append(
            CaseResult(f"mellin-omega q={q} ell={ell} s={_fmt_c(s)}", dev <= tol, dev, tol)
        )
    # the printed formula carries no ell-dependence in the polynomial
    # factor; its ell=2 extension is verified here and recorded, not assumed
    s = complex(5.0)
    got = mellin_omega_integral(1, 2, s, qc)
    expect = gamma_pi(s) * zeta_family(1, 2, s)
    dev = abs(got.value - expect)
    results.append(
        CaseResult(
            "mellin-omega-ell2 q=1 ell=2 s=5+0i",
            dev <= tol,
            dev,
            tol,
            note="recorded: ell=2 extension of the family formula",
        )
    )
    # sign adjudication: exactly one of the +-s/2 printed conventions can
    # satisfy the integral identity at q >= 1
    for q in (1, 2):
        s = complex(3.0 if q == 1 else 4.0)
        got = mellin_omega_integral(q, 0, s, qc)
        dev_plus = abs(got.value - gamma_pi(s) * zeta_family_hyp_form(q, s, sign=+1))
        dev_minus = abs(got.value - gamma_pi(s) * zeta_family_hyp_form(q, s, sign=-1))
        ok = dev_plus <= tol and dev_minus > 100 * tol
        results.append(
            CaseResult(
                f"prop2i-adjudication q={q}",
                ok,
                dev_plus,
                tol,
                note=f"+s/2 dev {dev_plus:.2e}, -s/2 dev {dev_minus:.2e}: winner +s/2",
            )
        )
    return sorted(results, key=lambda c: c.case)


def suite_prop3(
    j_list=(0, 1, 2, 3),
    s_list=(2.0, 3.0, 0.5 + 5j),
    b_list=(0.3, 1.0, 3.0),
    qc: QuadratureConfig = DEFAULT_QUADRATURE,
) -> list[CaseResult]:
    """Split-point independence of the real-b representation."""
    tol = 1e-8
    results = []
    for j in j_list:
        for s in s_list:
            s = complex(s)
            target = xi_weight_poly(j, s) * completed_zeta(s)
            vals = {}
            for b in b_list:
                vals[b] = xi_split_real(j, s, float(b), qc).value
                dev = abs(vals[b] - target)
                results.append(
                    CaseResult(
                        f"prop3-direct j={j} s={_fmt_c(s)} b={b:g}", dev <= tol, dev, tol
                    )
                )
            pair = max(
                abs(u - v) for u in vals.values() for v in vals.values()
            )
            results.append(
                CaseResult(f"prop3-pairwise j={j} s={_fmt_c(s)}", pair <= tol, pair, tol)
            )
    return sorted(results, key=lambda c: c.case)


def suite_prop4(
    j_list=(0, 1),
    s_list=(2.0, 2 + 1j),
    thetas=(0.0, math.pi / 6, -math.pi / 6, math.pi / 3, -math.pi / 3),
    qc: QuadratureConfig = DEFAULT_QUADRATURE,
) -> list[CaseResult]:
    """Wedge representation: forms (i) and (ii) against each other and
    against the direct composition, for unit-circle split points."""
    tol = 1e-8
    results = []
    for j in j_list:
        for s in s_list:
            s = complex(s)
            target = xi_weight_poly(j, s) * completed_zeta(s)
            for th in thetas:
                b = cmath.exp(1j * th)
                vi = xi_split_wedge(j, s, b, qc, form="i").value
                vii = xi_split_wedge(j, s, b, qc, form="ii").value
                dev_forms = abs(vi - vii)
                dev_direct = max(abs(vi - target), abs(vii - target))
                dev = max(dev_forms, dev_direct)
                results.append(
                    CaseResult(
                        f"prop4 j={j} s={_fmt_c(s)} theta={th:+.4f}",
                        dev <= tol,
                        dev,
                        tol,
                    )
                )
    return sorted(results, key=lambda c: c.case)


def suite_special_values() -> list[CaseResult]:
    """Exact Bernoulli-rational special values against the floating engine."""
    tol = 1e-12
    results = []
    anchors = [
        ("zeta(2)=pi^2/6", special_value_even_float(0, 1), math.pi**2 / 6.0),
        ("zeta(4)=pi^4/90", special_value_even_float(0, 2), math.pi**4 / 90.0),
        ("zeta(-1)=-1/12", complex(float(special_value_neg(0, 1))), complex(-1.0 / 12.0)),
        ("zeta(0)=-1/2", complex(float(special_value_neg(0, 0))), complex(-0.5)),
    ]
    for name, got, want in anchors:
        dev = abs(complex(got) - complex(want))
        results.append(CaseResult(f"special {name}", dev <= tol, dev, tol))
    for m in (1, 2, 3):
        fam = zeta_family(0, 0, complex(-2 * m))
        exact = float(special_value_neg(0, 2 * m))
        dev = max(abs(fam), abs(exact))
        results.append(CaseResult(f"special trivial-zero s={-2 * m}", dev <= tol, dev, tol))
    # exact pipeline vs floating family evaluation, both conventions at q=0
    # collapse, q >= 1 distinguishes them
    for q, m in ((1, 1), (2, 1), (1, 2), (3, 2)):
        exact = special_value_even_float(q, m)
        fam = zeta_family(q, 0, complex(2 * m))
        dev = abs(exact - fam)
        results.append(CaseResult(f"special even q={q} m={m}", dev <= 1e-12 * max(1.0, abs(fam)), dev, 1e-12))
    for q, n in ((1, 1), (2, 0), (1, 3), (2, 5)):
        exact = float(special_value_neg(q, n))
        fam = zeta_family(q, 0, complex(-n))
        dev = abs(exact - fam)
        results.append(CaseResult(f"special neg q={q} n={n}", dev <= 1e-12 * max(1.0, abs(fam)), dev, 1e-12))
    return sorted(results, key=lambda c: c.case)


def suite_eq24(j_list=(0, 1, 2), x_list=(1.0, 0.3 + 0.8j)) -> list[CaseResult]:
    """Direct theta sum against its odd/even phase recombination."""
    tol = 1e-10
    ctl = SeriesControl(tail_tol=1e-14, max_terms=20000)
    results = []
    for j in j_list:
        for x in x_list:
            direct, recombined = parity_split_recombination(j, complex(x), ctl)
            dev = abs(direct - recombined)
            results.append(
                CaseResult(f"eq24 j={j} x={_fmt_c(complex(x))}", dev <= tol, dev, tol)
            )
    return sorted(results, key=lambda c: c.case)


def suite_eq14(qmax: int = 15) -> list[CaseResult]:
    """Dual closed forms of the s=0 derivative, and the s->0 limit route."""
    results = []
    for q in range(qmax + 1):
        # d_hyp2f1_at_zero raises ArithmeticError if its two internal forms
        # split beyond 1e-12 relative; reaching the comparison below means
        # that gate passed
        both = d_hyp2f1_at_zero(q)
        results.append(CaseResult(f"eq14-dual q={q:02d}", True, 0.0, 1e-12, note="internal dual-form gate"))
        limit = d_hyp2f1_ds(q, 0.0)
        dev = abs(limit - both)
        results.append(
            CaseResult(f"eq14-limit q={q:02d}", dev <= 1e-10 * max(1.0, abs(both)), dev, 1e-10)
        )
    return sorted(results, key=lambda c: c.case)


def run_suite(name: str, **params) -> list[CaseResult]:
    if name == "functional-eq":
        return suite_functional_eq(qmax=int(params.get("qmax", 20)))
    if name == "lemma1":
        return suite_lemma1(jmax=int(params.get("jmax", 5)))
    if name == "mellin":
        return suite_mellin()
    if name == "prop3":
        j_list = params.get("j_list") or (0, 1, 2, 3)
        s_list = params.get("s_list") or (2.0, 3.0, 0.5 + 5j)
        b_list = params.get("b_list") or (0.3, 1.0, 3.0)
        return suite_prop3(j_list=j_list, s_list=s_list, b_list=b_list)
    if name == "prop4":
        return suite_prop4()
    if name == "special-values":
        return suite_special_values()
    if name == "eq24":
        return suite_eq24()
    if name == "eq14":
        return suite_eq14()
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
