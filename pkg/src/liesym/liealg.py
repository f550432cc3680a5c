"""Metric Lie algebras: structure constants plus an inner product.

A :class:`MetricLieAlgebra` stands for a simply connected Lie group with a
left-invariant metric; every geometric quantity in this package is computed
on the left-invariant frame at the identity.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from . import exact
from .exact import frac_array, kernel, zeros


@dataclass(frozen=True, eq=False)
class MetricLieAlgebra:
    """Structure constants ``c[i, j, k]`` = c^k_ij and metric ``g[i, j]``.

    ``[X_i, X_j] = sum_k c[i, j, k] X_k`` and ``g[i, j] = <X_i, X_j>``.
    """

    c: np.ndarray
    g: np.ndarray
    name: str | None = field(default=None)

    def __post_init__(self):
        c = frac_array(self.c)
        g = frac_array(self.g)
        n = g.shape[0] if g.ndim == 2 else -1
        if g.ndim != 2 or g.shape != (n, n):
            raise ValueError(f"metric must be square, got shape {g.shape}")
        if c.shape != (n, n, n):
            raise ValueError(f"structure constants must have shape {(n, n, n)}, got {c.shape}")
        c.flags.writeable = False
        g.flags.writeable = False
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "g", g)

    @property
    def n(self) -> int:
        return self.g.shape[0]

    def __eq__(self, other):
        if not isinstance(other, MetricLieAlgebra):
            return NotImplemented
        return (
            self.n == other.n
            and bool(np.all(self.c == other.c))
            and bool(np.all(self.g == other.g))
        )

    __hash__ = object.__hash__

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.c)

    def ad(self, x: np.ndarray) -> np.ndarray:
        """Matrix of ``y -> [x, y]`` acting on coordinate columns."""
        return np.einsum("i,ijk->kj", x, self.c)

    def inner(self, x: np.ndarray, y: np.ndarray) -> Fraction:
        return exact.inner(self.g, x, y)

    def basis(self) -> list[np.ndarray]:
        return [exact.unit(self.n, i) for i in range(self.n)]

    def with_metric(self, g) -> "MetricLieAlgebra":
        return MetricLieAlgebra(self.c, g, self.name)

    def scaled(self, factor) -> "MetricLieAlgebra":
        return self.with_metric(self.g * exact.to_scalar(factor))


def from_brackets(n: int, brackets: dict[tuple[int, int], dict[int, object]], g, name=None) -> MetricLieAlgebra:
    """Build from ``{(i, j): {k: value}}`` with 0-based indices; fills ``[X_j, X_i]``."""
    c = zeros(n, n, n)
    for (i, j), terms in brackets.items():
        for k, val in terms.items():
            v = exact.to_scalar(val)
            c[i, j, k] = v
            c[j, i, k] = -v
    return MetricLieAlgebra(c, g, name)


def validate(a: MetricLieAlgebra) -> list[str]:
    """All violated invariants, as messages; an empty list means valid."""
    n, c, g = a.n, a.c, a.g
    problems = []
    for i, j, k in product(range(n), repeat=3):
        if c[i, j, k] != -c[j, i, k]:
            problems.append(
                f"antisymmetry: c^{k + 1}_{i + 1}{j + 1} = {c[i, j, k]} but c^{k + 1}_{j + 1}{i + 1} = {c[j, i, k]}"
            )
    # Jacobi: [X_i,[X_j,X_k]] + cyclic = 0
    cc = np.einsum("jkm,iml->ijkl", c, c)
    jac = cc + np.transpose(cc, (1, 2, 0, 3)) + np.transpose(cc, (2, 0, 1, 3))
    for i, j, k in product(range(n), repeat=3):
        if i < j < k and not exact.is_zero(jac[i, j, k]):
            problems.append(f"jacobi: cyclic sum for (X{i + 1}, X{j + 1}, X{k + 1}) is {list(map(str, jac[i, j, k]))}")
    if not exact.is_symmetric(g):
        problems.append("metric: not symmetric")
    elif not exact.is_positive_definite(g):
        minors = ", ".join(map(str, exact.leading_minors(g)))
        problems.append(f"metric: not positive definite (leading minors {minors})")
    return problems


def is_unimodular(a: MetricLieAlgebra) -> bool:
    """trace(ad X_i) = sum_j c^j_ij vanishes for every i."""
    return all(sum(a.c[i, j, j] for j in range(a.n)) == 0 for i in range(a.n))


def center(a: MetricLieAlgebra) -> list[np.ndarray]:
    n = a.n
    m = a.c.reshape(n, n * n).T
    return kernel(m)


def orthogonal_complement(a: MetricLieAlgebra, vectors) -> list[np.ndarray]:
    """Basis of the metric-orthogonal complement of span(vectors)."""
    if not vectors:
        return a.basis()
    rows = exact.stack_rows([np.dot(a.g, v) for v in vectors], a.n)
    return kernel(rows)


def j_map(a: MetricLieAlgebra, z: np.ndarray, complement: list[np.ndarray]) -> np.ndarray:
    """Matrix of j(z) on the complement v of the center: <j(z)x, y> = <[x, y], z>.

    Column ``i`` holds the coordinates of ``j(z) complement[i]`` in the
    ``complement`` basis.
    """
    z = frac_array(z)
    if not exact.is_zero(a.ad(z)):
        raise ValueError("j_map needs a central element")
    cent = center(a)
    if len(complement) + len(cent) != a.n or exact.rank(
        exact.stack_rows(list(cent) + list(complement), a.n)
    ) != a.n:
        raise ValueError("complement must complete a basis of the center")
    for v in complement:
        if any(a.inner(v, w) != 0 for w in cent):
            raise ValueError("complement is not orthogonal to the center")
    m = len(complement)
    gram = zeros(m, m)
    pair = zeros(m, m)
    for p, q in product(range(m), repeat=2):
        gram[p, q] = a.inner(complement[p], complement[q])
        pair[p, q] = a.inner(a.bracket(complement[p], complement[q]), z)
    if m == 0:
        return zeros(0, 0)
    return np.dot(exact.inverse(gram), pair.T)


def change_basis(a: MetricLieAlgebra, t: np.ndarray) -> MetricLieAlgebra:
    """Re-express ``a`` in the basis whose i-th vector is column i of ``t``."""
    t = frac_array(t)
    tinv = exact.inverse(t)
    raw = np.einsum("ia,jb,ijk->abk", t, t, a.c)
    c = np.einsum("lk,abk->abl", tinv, raw)
    g = np.dot(np.dot(t.T, a.g), t)
    return MetricLieAlgebra(c, g, a.name)


def is_automorphism(a: MetricLieAlgebra, t: np.ndarray) -> bool:
    t = frac_array(t)
    if t.shape != (a.n, a.n) or exact.det(t) == 0:
        return False
    lhs = np.einsum("lk,ijk->ijl", t, a.c)
    rhs = np.einsum("pi,qj,pql->ijl", t, t, a.c)
    return bool(np.all(lhs == rhs))


def apply_automorphism(a: MetricLieAlgebra, t: np.ndarray) -> MetricLieAlgebra:
    """Same brackets, pulled-back metric g'(x, y) = g(tx, ty)."""
    if not is_automorphism(a, t):
        raise ValueError("matrix is not a Lie algebra automorphism")
    t = frac_array(t)
    return MetricLieAlgebra(a.c, np.dot(np.dot(t.T, a.g), t), a.name)


# -- random test material -------------------------------------------------

def random_rational(rng: random.Random, bound: int = 3, max_den: int = 3, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound * max_den, bound * max_den), rng.randint(1, max_den))
        if x != 0 or not nonzero:
            return x


def random_spd(rng: random.Random, n: int = 3, bound: int = 2) -> np.ndarray:
    """A A^T + I with small random rational A."""
    m = frac_array([[random_rational(rng, bound) for _ in range(n)] for _ in range(n)])
    return np.dot(m, m.T) + exact.identity(n)


def milnor_algebra(c1, c2, c3, g=None) -> MetricLieAlgebra:
    """[e2, e3] = c1 e1, [e3, e1] = c2 e2, [e1, e2] = c3 e3."""
    g = exact.identity(3) if g is None else g
    return from_brackets(3, {(1, 2): {0: c1}, (2, 0): {1: c2}, (0, 1): {2: c3}}, g)


def random_unimodular(rng: random.Random, zero_prob: float = 0.25) -> MetricLieAlgebra:
    """Random Milnor-form bracket with a random SPD metric."""
    coeffs = [Fraction(0) if rng.random() < zero_prob else random_rational(rng, 2, 2, nonzero=True)
              for _ in range(3)]
    return milnor_algebra(*coeffs, g=random_spd(rng))


def _cayley(s: np.ndarray) -> np.ndarray | None:
    n = s.shape[0]
    i = exact.identity(n)
    if exact.det(i - s) == 0:
        return None
    return np.dot(exact.inverse(i - s), i + s)


def random_automorphism(a: MetricLieAlgebra, group: str, rng: random.Random) -> np.ndarray:
    """A random rational automorphism of one of the catalog brackets."""
    r = lambda: random_rational(rng, 2, 3)  # noqa: E731
    nz = lambda: random_rational(rng, 2, 3, nonzero=True)  # noqa: E731
    for _ in range(100):
        if group == "R3":
            t = frac_array([[r() for _ in range(3)] for _ in range(3)])
        elif group == "H1":
            p, q, s, u = nz(), r(), r(), nz()
            t = frac_array([[p, q, 0], [s, u, 0], [r(), r(), p * u - q * s]])
        elif group == "SU2":
            x, y, z = r(), r(), r()
            t = _cayley(frac_array([[0, -z, y], [z, 0, -x], [-y, x, 0]]))
        elif group == "SL2R":
            t = _cayley(a.ad(frac_array([r(), r(), r()])))
        elif group in ("E2tilde", "E11"):
            flip = rng.random() < 0.5
            p, q = nz(), nz()
            if group == "E2tilde":
                block = [[p, q], [q, -p]] if flip else [[p, -q], [q, p]]
            else:
                block = [[0, p], [q, 0]] if flip else [[p, 0], [0, q]]
            t = frac_array([[block[0][0], block[0][1], r()],
                            [block[1][0], block[1][1], r()],
                            [0, 0, -1 if flip else 1]])
        else:
            raise ValueError(f"unknown group {group!r}")
        if t is not None and is_automorphism(a, t):
            return t
    raise RuntimeError(f"could not sample an automorphism for {group}")
