"""Exact rational scalars and dense linear algebra over Q.

Matrices and vectors are numpy arrays with ``dtype=object`` holding
:class:`fractions.Fraction` entries. Nothing in here ever touches a float.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Scalar = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; floats and exponents are rejected."""
    if not isinstance(text, str):
        raise ValueError(f"rational must be given as a string, got {type(text).__name__}: {text!r}")
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not an exact rational literal: {text!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(s)


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"refusing non-exact value {x!r} of type {type(x).__name__}")


def frac_array(data) -> np.ndarray:
    """Convert nested lists / arrays of ints, Fractions or rational strings."""
    arr = np.array(data, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = to_scalar(v)
    return out


def zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def unit(n: int, i: int) -> np.ndarray:
    v = zeros(n)
    v[i] = Fraction(1)
    return v


def is_zero(arr: np.ndarray) -> bool:
    return all(x == 0 for x in np.asarray(arr, dtype=object).flat)


def _check_matrix(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    return m


def rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivoting is deterministic: columns left to right, first row (from the
    current pivot row down) with a nonzero entry.
    """
    a = [[Fraction(x) for x in row] for row in _check_matrix(m)]
    rows = len(a)
    cols = len(a[0]) if rows else _check_matrix(m).shape[1]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    out = zeros(rows, cols)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = a[i][j]
    return out, pivots


def rank(m: np.ndarray) -> int:
    return len(rref(m)[1])


def kernel(m: np.ndarray) -> list[np.ndarray]:
    """Basis of the null space of ``m``; one vector per free column."""
    m = _check_matrix(m)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return [unit(cols, j) for j in range(cols)]
    red, pivots = rref(m)
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for f in free:
        v = zeros(cols)
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -red[row, f]
        basis.append(v)
    return basis


def stack_rows(vectors: Sequence[np.ndarray], width: int) -> np.ndarray:
    if not vectors:
        return zeros(0, width)
    for v in vectors:
        if len(v) != width:
            raise ValueError(f"vector length {len(v)} != {width}")
    return np.array([list(v) for v in vectors], dtype=object).reshape(len(vectors), width)


def span_basis(vectors: Sequence[np.ndarray], dim: int) -> list[np.ndarray]:
    """Canonical basis (nonzero RREF rows) of the span of ``vectors``."""
    if not vectors:
        return []
    red, pivots = rref(stack_rows(vectors, dim))
    return [red[i].copy() for i in range(len(pivots))]


def solve_in_subspace(target: np.ndarray, basis: Sequence[np.ndarray]) -> np.ndarray | None:
    """Coefficients ``c`` with ``sum c_i basis[i] == target``, or None.

    For a dependent ``basis`` the coefficients of non-pivot vectors are 0.
    """
    target = np.asarray(target, dtype=object)
    n = len(target)
    k = len(basis)
    for b in basis:
        if len(b) != n:
            raise ValueError(f"basis vector length {len(b)} != target length {n}")
    if k == 0:
        return zeros(0) if is_zero(target) else None
    aug = zeros(n, k + 1)
    for j, b in enumerate(basis):
        aug[:, j] = b
    aug[:, k] = target
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = zeros(k)
    for row, pc in enumerate(pivots):
        coeffs[pc] = red[row, k]
    return coeffs


def in_span(target: np.ndarray, basis: Sequence[np.ndarray]) -> bool:
    return solve_in_subspace(target, basis) is not None


def is_symmetric(g: np.ndarray) -> bool:
    g = _check_matrix(g)
    return g.shape[0] == g.shape[1] and all(
        g[i, j] == g[j, i] for i in range(g.shape[0]) for j in range(i)
    )


def det(m: np.ndarray) -> Fraction:
    """Determinant by exact elimination."""
    m = _check_matrix(m)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ValueError("determinant of a non-square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    sign = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = sign
    for i in range(n):
        out *= a[i][i]
    return out


def leading_minors(g: np.ndarray) -> list[Fraction]:
    g = _check_matrix(g)
    return [det(g[:k, :k]) for k in range(1, g.shape[0] + 1)]


def is_positive_definite(g: np.ndarray) -> bool:
    """Sylvester's criterion. Raises ValueError on non-symmetric input."""
    if not is_symmetric(g):
        raise ValueError("positive-definiteness is only defined here for symmetric matrices")
    return all(m > 0 for m in leading_minors(g))


def inverse(m: np.ndarray) -> np.ndarray:
    m = _check_matrix(m)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ValueError("inverse of a non-square matrix")
    aug = zeros(n, 2 * n)
    aug[:, :n] = m
    aug[:, n:] = identity(n)
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:].copy()


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    return np.dot(a, b)


def inner(g: np.ndarray, x: np.ndarray, y: np.ndarray) -> Fraction:
    """``<x, y>_g`` for coordinate vectors in the frame of ``g``."""
    return Fraction(np.dot(np.dot(x, g), y))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.dot(a, b) - np.dot(b, a)


def flatten(arrays: Iterable[np.ndarray]) -> list[np.ndarray]:
    return [np.asarray(a, dtype=object).reshape(-1) for a in arrays]
