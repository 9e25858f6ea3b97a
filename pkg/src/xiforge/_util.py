"""Small numeric helpers shared across modules."""

from __future__ import annotations

import math


class CompensatedSum:
    """Neumaier compensated accumulator for complex terms.

    The alternating hypergeometric and theta sums cancel heavily; tracking
    the rounding residue per component keeps the accumulated error at the
    level of the final value instead of the largest term.
    """

    __slots__ = ("_sr", "_si", "_cr", "_ci")

    def __init__(self) -> None:
        self._sr = 0.0
        self._si = 0.0
        self._cr = 0.0
        self._ci = 0.0

    def add(self, z: complex) -> None:
        zr, zi = z.real, z.imag
        t = self._sr + zr
        if abs(self._sr) >= abs(zr):
            self._cr += (self._sr - t) + zr
        else:
            self._cr += (zr - t) + self._sr
        self._sr = t
        t = self._si + zi
        if abs(self._si) >= abs(zi):
            self._ci += (self._si - t) + zi
        else:
            self._ci += (zi - t) + self._si
        self._si = t

    @property
    def value(self) -> complex:
        return complex(self._sr + self._cr, self._si + self._ci)


def comp_sum(terms) -> complex:
    acc = CompensatedSum()
    for t in terms:
        acc.add(complex(t))
    return acc.value


def is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)
