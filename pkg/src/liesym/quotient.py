"""Quotient by the foliation of symmetry when the index is 1.

The projection onto the leaf space is a Riemannian submersion only if every
horizontal right-invariant field has constant length along the flow of the
symmetric direction Y. Along t -> Exp(tY) that squared length is
f(t) = |Ad(Exp(-tY)) X|^2, whose Taylor coefficients are exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import exact
from .curvature import CurvatureJets, sectional_curvature
from .killing import SymmetryReport
from .liealg import MetricLieAlgebra, orthogonal_complement

DEFAULT_ORDER = 20
ORDER_RATIONALE = (
    "f^(k)(0) = x^T L^k(g) x with L(S) = M^T S + S M acting on symmetric n x n matrices "
    "(M = -ad_Y), so f', f'', ... obey a linear recurrence of order n(n+1)/2 = 6 and "
    "vanishing of orders 1..6 forces f constant; N = 20 leaves a wide margin"
)


class UnsupportedCase(ValueError):
    """The quotient analysis only covers index of symmetry 1."""


@dataclass(frozen=True)
class FlowNormSeries:
    derivatives: list[Fraction]

    @property
    def order(self) -> int:
        return len(self.derivatives) - 1


@dataclass(frozen=True)
class SubmersionVerdict:
    constant: bool
    first_nonvanishing_order: int | None
    order: int
    symmetric_direction: np.ndarray
    horizontal_basis: list[np.ndarray]


def flow_norm_derivatives(a: MetricLieAlgebra, y, x, order: int) -> FlowNormSeries:
    """f^(m)(0) for m = 0..order, with u_k = (-ad_Y)^k X and
    f^(m)(0) = sum_i C(m, i) <u_i, u_{m-i}>."""
    if order < 1:
        raise ValueError("derivative order must be at least 1")
    step = -a.ad(exact.frac_array(y))
    u = [exact.frac_array(x)]
    for _ in range(order):
        u.append(np.dot(step, u[-1]))
    derivs = [sum((comb(m, i) * a.inner(u[i], u[m - i]) for i in range(m + 1)), Fraction(0))
              for m in range(order + 1)]
    return FlowNormSeries(derivs)


def horizontal_basis(a: MetricLieAlgebra, report: SymmetryReport) -> list[np.ndarray]:
    return orthogonal_complement(a, report.symmetric_basis)


def _symmetric_direction(report: SymmetryReport) -> np.ndarray:
    if report.index != 1:
        raise UnsupportedCase(f"quotient analysis needs index of symmetry 1, got {report.index}")
    return report.symmetric_basis[0]


def submersion_check(a: MetricLieAlgebra, report: SymmetryReport, order: int = DEFAULT_ORDER) -> SubmersionVerdict:
    y = _symmetric_direction(report)
    horiz = horizontal_basis(a, report)
    first = None
    for x in horiz:
        d = flow_norm_derivatives(a, y, x, order).derivatives
        m = next((m for m in range(1, order + 1) if d[m] != 0), None)
        if m is not None and (first is None or m < first):
            first = m
    return SubmersionVerdict(first is None, first, order, y, horiz)


def oneill_base_curvature(
    a: MetricLieAlgebra,
    report: SymmetryReport,
    x,
    y,
    order: int = DEFAULT_ORDER,
    jets: CurvatureJets | None = None,
) -> Fraction:
    """Sectional curvature of the leaf space on the plane spanned by horizontal x, y.

    K_base = K(x, y) + 3/4 |[x, y]^vert|^2 / (|x|^2 |y|^2 - <x, y>^2), the
    vertical part being the projection onto the symmetric direction.
    """
    ydir = _symmetric_direction(report)
    if not submersion_check(a, report, order).constant:
        raise UnsupportedCase("leaf space is not a Riemannian submersion quotient; base curvature undefined")
    x, y = exact.frac_array(x), exact.frac_array(y)
    if a.inner(x, ydir) != 0 or a.inner(y, ydir) != 0:
        raise ValueError("base curvature needs horizontal vectors (orthogonal to the symmetric direction)")
    jets = jets or CurvatureJets(a)
    k = sectional_curvature(a, jets.R, x, y)
    area = a.inner(x, x) * a.inner(y, y) - a.inner(x, y) ** 2
    vert = a.inner(a.bracket(x, y), ydir) ** 2 / a.inner(ydir, ydir)
    return k + Fraction(3, 4) * vert / area
