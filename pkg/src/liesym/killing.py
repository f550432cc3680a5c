"""Killing generators, isotropy algebra by prolongation, and the index of symmetry.

A Killing field is determined by its generator (v, B) at the identity: its
value and its covariant derivative there. Every Killing field of a
left-invariant metric on a simply connected group has generator
``(v, A_v + B)`` with ``A_v`` the derivative of the right-invariant field
through ``v`` and ``B`` in the isotropy algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import exact
from .curvature import CurvatureJets, FrameTensor, GeometryFlags, curvature_endomorphism, derivation, flags
from .liealg import MetricLieAlgebra


@dataclass(frozen=True, eq=False)
class KillingGenerator:
    v: np.ndarray
    B: np.ndarray

    def flat(self) -> np.ndarray:
        return np.concatenate([np.asarray(self.v, dtype=object), np.asarray(self.B, dtype=object).reshape(-1)])

    def __eq__(self, other):
        if not isinstance(other, KillingGenerator):
            return NotImplemented
        return bool(np.all(self.flat() == other.flat()))

    __hash__ = object.__hash__


@dataclass(frozen=True)
class IsotropyAlgebra:
    basis: list[np.ndarray]
    stabilization_order: int
    n: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, b: np.ndarray) -> bool:
        return exact.in_span(np.asarray(b, dtype=object).reshape(-1), exact.flatten(self.basis))


@dataclass(frozen=True)
class Witness:
    """A Killing field parallel at e: right-invariant part plus isotropy part.

    ``right_derivative + isotropy_part`` is the zero matrix.
    """

    v: np.ndarray
    right_derivative: np.ndarray
    isotropy_part: np.ndarray
    isotropy_coefficients: np.ndarray


@dataclass(frozen=True)
class SymmetryReport:
    index: int
    symmetric_basis: list[np.ndarray]
    isotropy: IsotropyAlgebra
    isometry_dim: int
    flags: GeometryFlags
    parallel_generators: list[KillingGenerator]
    witnesses: list[Witness]
    caveat: str = field(default="results refer to the simply connected group with this Lie algebra")

    @property
    def isotropy_dim(self) -> int:
        return self.isotropy.dim

    @property
    def stabilization_order(self) -> int:
        return self.isotropy.stabilization_order


def right_invariant_derivative(a: MetricLieAlgebra, v) -> np.ndarray:
    """A_v = (nabla v*)_e for the right-invariant field v* with v*(e) = v.

    Uses the Koszul formula for Killing fields with right-invariant brackets
    [x*, y*] = -[x, y]*, evaluated at e, then solves against g.
    """
    v = exact.frac_array(v)
    # pair[i, j] = -1/2 (<[X_i, v], X_j> + <[X_i, X_j], v> + <[v, X_j], X_i>)
    first = np.dot(np.tensordot(a.c, v, axes=([1], [0])), a.g)
    second = np.tensordot(a.c, np.dot(a.g, v), axes=([2], [0]))
    pair = -Fraction(1, 2) * (first + second - first.T)
    return np.dot(exact.inverse(a.g), pair.T)


def skew_basis(g: np.ndarray) -> list[np.ndarray]:
    """Basis of the g-skew endomorphisms: g^{-1}(E_pq - E_qp), p < q."""
    n = g.shape[0]
    ginv = exact.inverse(g)
    out = []
    for p, q in combinations(range(n), 2):
        s = exact.zeros(n, n)
        s[p, q], s[q, p] = Fraction(1), Fraction(-1)
        out.append(np.dot(ginv, s))
    return out


def is_skew(g: np.ndarray, b: np.ndarray) -> bool:
    gb = np.dot(g, b)
    return bool(np.all(gb == -gb.T))


def _annihilators(candidates: list[np.ndarray], t: FrameTensor) -> list[np.ndarray]:
    if not candidates:
        return []
    cols = [derivation(b, t).data.reshape(-1) for b in candidates]
    m = np.array(cols, dtype=object).T
    out = []
    for coeffs in exact.kernel(m):
        out.append(sum((c * b for c, b in zip(coeffs, candidates)), exact.zeros(*candidates[0].shape)))
    return _canonical(out)


def _canonical(mats: list[np.ndarray]) -> list[np.ndarray]:
    if not mats:
        return []
    shape = mats[0].shape
    return [v.reshape(shape) for v in exact.span_basis(exact.flatten(mats), mats[0].size)]


def isotropy_algebra(a: MetricLieAlgebra, jets: CurvatureJets | None = None) -> IsotropyAlgebra:
    """Skew endomorphisms annihilating R, nabla R, ... up to stabilization.

    h_k = {B skew : B . nabla^j R = 0 for j <= k}; returns h_k for the first
    k with h_{k+1} = h_k. Raises CapExceeded past the hard cap.
    """
    jets = jets or CurvatureJets(a)
    h = _annihilators(skew_basis(a.g), jets[0])
    k = 0
    while True:
        if not h:
            return IsotropyAlgebra([], k, a.n)
        nxt = _annihilators(h, jets[k + 1])
        if len(nxt) == len(h):
            return IsotropyAlgebra(h, k, a.n)
        h, k = nxt, k + 1


def symmetric_subspace(a: MetricLieAlgebra) -> SymmetryReport:
    """Distribution of symmetry at e: {v : A_v lies in the isotropy algebra}."""
    jets = CurvatureJets(a)
    iso = isotropy_algebra(a, jets)
    n = a.n
    right = [right_invariant_derivative(a, e) for e in a.basis()]
    cols = [m.reshape(-1) for m in right] + [-m.reshape(-1) for m in iso.basis]
    system = np.array(cols, dtype=object).T
    sols = exact.kernel(system)
    sym = exact.span_basis([s[:n] for s in sols], n)

    gens, witnesses = [], []
    h_flat = exact.flatten(iso.basis)
    for v in sym:
        av = sum((vi * m for vi, m in zip(v, right)), exact.zeros(n, n))
        coeffs = exact.solve_in_subspace((-av).reshape(-1), h_flat)
        gens.append(KillingGenerator(v, av))
        witnesses.append(Witness(v, av, -av, coeffs))
    return SymmetryReport(
        index=len(sym),
        symmetric_basis=sym,
        isotropy=iso,
        isometry_dim=n + iso.dim,
        flags=flags(a, jets),
        parallel_generators=gens,
        witnesses=witnesses,
    )


def index_of_symmetry(a: MetricLieAlgebra) -> int:
    return symmetric_subspace(a).index


def generator_bracket(r: FrameTensor, x: KillingGenerator, y: KillingGenerator) -> KillingGenerator:
    """Generator of [X, X'] from those of X and X': (B'v - Bv', R_{v,v'} - [B, B'])."""
    v = np.dot(y.B, x.v) - np.dot(x.B, y.v)
    b = curvature_endomorphism(r, x.v, y.v) - exact.commutator(x.B, y.B)
    return KillingGenerator(v, b)


def generator_space(a: MetricLieAlgebra, iso: IsotropyAlgebra) -> list[KillingGenerator]:
    """Basis of all Killing generators: (e_i, A_{e_i}) and (0, B) for B in h."""
    gens = [KillingGenerator(e, right_invariant_derivative(a, e)) for e in a.basis()]
    gens += [KillingGenerator(exact.zeros(a.n), b) for b in iso.basis]
    return gens


def in_generator_space(gen: KillingGenerator, space: list[KillingGenerator]) -> np.ndarray | None:
    return exact.solve_in_subspace(gen.flat(), [s.flat() for s in space])


def fixed_point_set(iso: IsotropyAlgebra) -> list[np.ndarray]:
    """Vectors killed by every element of the isotropy algebra."""
    if not iso.basis:
        return [exact.unit(iso.n, i) for i in range(iso.n)]
    return exact.kernel(np.concatenate(iso.basis, axis=0))
