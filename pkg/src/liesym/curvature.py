"""Levi-Civita connection, curvature and its covariant derivatives on the left-invariant frame.

Tensors carry one contravariant slot first: ``T.data[l, i1, ..., ir]`` is
the X_l-component of T(X_i1, ..., X_ir). Conventions:

* ``Gamma.data[l, i, j]``: nabla_{X_i} X_j = sum_l Gamma[l, i, j] X_l
* ``R.data[l, i, j, k]``: R(X_i, X_j) X_k with
  R(X, Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X, Y]
* ``(nabla T).data[l, m, i1, ...]``: (nabla_{X_m} T)(X_i1, ...), derivative slot first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact
from .liealg import MetricLieAlgebra


class CapExceeded(RuntimeError):
    """Iterated derivative order beyond the hard cap n(n-1)/2 + 2."""


@dataclass(frozen=True, eq=False)
class FrameTensor:
    data: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.data, dtype=object)
        if d.ndim < 1 or len(set(d.shape)) != 1:
            raise ValueError(f"frame tensor needs equal index ranges, got shape {d.shape}")
        object.__setattr__(self, "data", d)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def rank(self) -> int:
        """Number of covariant slots."""
        return self.data.ndim - 1

    def is_zero(self) -> bool:
        return exact.is_zero(self.data)

    def __eq__(self, other):
        if not isinstance(other, FrameTensor):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(np.all(self.data == other.data))

    __hash__ = object.__hash__

    def __call__(self, *vectors) -> np.ndarray:
        """Evaluate on coordinate vectors, returning a coordinate vector."""
        if len(vectors) != self.rank:
            raise ValueError(f"rank-{self.rank} tensor evaluated on {len(vectors)} vectors")
        out = self.data
        for v in reversed(vectors):
            out = np.tensordot(out, v, axes=([out.ndim - 1], [0]))
        return out


@dataclass(frozen=True)
class GeometryFlags:
    flat: bool
    locally_symmetric: bool
    constant_curvature: bool
    curvature_constant: Fraction | None = None


def levi_civita(a: MetricLieAlgebra) -> FrameTensor:
    """Koszul formula on left-invariant fields, solved against g."""
    b = np.einsum("ijm,mk->ijk", a.c, a.g)  # <[X_i, X_j], X_k>
    low = (b - np.transpose(b, (0, 2, 1)) - np.transpose(b, (2, 0, 1))) * Fraction(1, 2)
    ginv = exact.inverse(a.g)
    return FrameTensor(np.einsum("lk,ijk->lij", ginv, low))


def curvature(a: MetricLieAlgebra, gamma: FrameTensor) -> FrameTensor:
    g = gamma.data
    first = np.einsum("lim,mjk->lijk", g, g)
    second = np.einsum("ljm,mik->lijk", g, g)
    bracket = np.einsum("ijm,lmk->lijk", a.c, g)
    return FrameTensor(first - second - bracket)


def derivation(b: np.ndarray, t: FrameTensor) -> FrameTensor:
    """(B.T)(x1..xr) = B(T(x1..xr)) - sum_s T(.., B x_s, ..)."""
    d = t.data
    out = np.tensordot(b, d, axes=([1], [0]))
    for s in range(1, d.ndim):
        out = out - np.moveaxis(np.tensordot(d, b, axes=([s], [0])), -1, s)
    return FrameTensor(out)


def covariant_derivative(a: MetricLieAlgebra, gamma: FrameTensor, t: FrameTensor) -> FrameTensor:
    """nabla of a left-invariant tensor; nabla_{X_m} acts as the derivation by Gamma[:, m, :]."""
    parts = [derivation(gamma.data[:, m, :], t).data for m in range(a.n)]
    return FrameTensor(np.moveaxis(np.stack(parts), 0, 1))


class CurvatureJets:
    """Lazily computed R, nabla R, nabla^2 R, ... for one algebra.

    The cache lives on the instance, so independent analyses share nothing.
    """

    def __init__(self, a: MetricLieAlgebra):
        self.algebra = a
        self.cap = a.n * (a.n - 1) // 2 + 2
        self.gamma = levi_civita(a)
        self._jets = [curvature(a, self.gamma)]

    @property
    def R(self) -> FrameTensor:
        return self._jets[0]

    def __getitem__(self, order: int) -> FrameTensor:
        if order > self.cap:
            raise CapExceeded(f"nabla^{order} R requested; hard cap is {self.cap} for n = {self.algebra.n}")
        while len(self._jets) <= order:
            self._jets.append(covariant_derivative(self.algebra, self.gamma, self._jets[-1]))
        return self._jets[order]


def curvature_endomorphism(r: FrameTensor, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix of w -> R(x, y) w."""
    return np.einsum("lijk,i,j->lk", r.data, x, y)


def sectional_curvature(a: MetricLieAlgebra, r: FrameTensor, x, y) -> Fraction:
    x, y = exact.frac_array(x), exact.frac_array(y)
    denom = a.inner(x, x) * a.inner(y, y) - a.inner(x, y) ** 2
    if denom == 0:
        raise ValueError("sectional curvature needs linearly independent vectors")
    return a.inner(r(x, y, y), x) / denom


def constant_curvature_tensor(a: MetricLieAlgebra, k) -> FrameTensor:
    """R(X, Y)Z = k(<Y, Z>X - <X, Z>Y)."""
    n = a.n
    delta = exact.identity(n)
    t = np.einsum("li,jk->lijk", delta, a.g) - np.einsum("lj,ik->lijk", delta, a.g)
    return FrameTensor(t * exact.to_scalar(k))


def flags(a: MetricLieAlgebra, jets: CurvatureJets | None = None) -> GeometryFlags:
    jets = jets or CurvatureJets(a)
    r = jets.R
    if r.is_zero():
        return GeometryFlags(True, True, True, Fraction(0))
    locally_symmetric = jets[1].is_zero()
    if a.n < 2:
        return GeometryFlags(False, locally_symmetric, True, Fraction(0))
    e = a.basis()
    k = sectional_curvature(a, r, e[0], e[1])
    if r == constant_curvature_tensor(a, k):
        return GeometryFlags(False, locally_symmetric, True, k)
    return GeometryFlags(False, locally_symmetric, False, None)
