"""JSON input documents and report rendering.

Algebra document::

    {"name": "heisenberg", "dimension": 3,
     "brackets": [{"i": 1, "j": 2, "k": 3, "value": "1"}],
     "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}

Indices are 1-based. Values are rational strings ("p" or "p/q"); JSON
integers are tolerated, JSON floats are a parse error anywhere.
"""
from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from itertools import product

import numpy as np

from . import __version__, exact
from .exact import format_rational
from .killing import SymmetryReport
from .liealg import MetricLieAlgebra, validate
from .quotient import ORDER_RATIONALE, SubmersionVerdict


class DocumentError(ValueError):
    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def _reject_float(text):
    raise DocumentError([f"floating-point literal {text} not allowed; write rationals as strings like \"1/3\""])


def _value(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DocumentError([f"{where}: expected a rational string, got {x!r}"])
    try:
        return exact.to_scalar(x)
    except ValueError as err:
        raise DocumentError([f"{where}: {err}"]) from None


def loads(text: str) -> dict:
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as err:
        raise DocumentError([f"invalid JSON: {err}"]) from None


def parse_algebra(doc: dict, check: bool = True) -> MetricLieAlgebra:
    """Document -> algebra. With ``check`` the algebra must pass :func:`validate`."""
    if not isinstance(doc, dict):
        raise DocumentError(["document must be a JSON object"])
    n = doc.get("dimension")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError([f"dimension must be a positive integer, got {n!r}"])
    metric = doc.get("metric")
    if not isinstance(metric, list) or len(metric) != n or any(
        not isinstance(row, list) or len(row) != n for row in metric
    ):
        raise DocumentError([f"metric must be a {n}x{n} array"])
    g = exact.zeros(n, n)
    for i, j in product(range(n), repeat=2):
        g[i, j] = _value(metric[i][j], f"metric[{i + 1}][{j + 1}]")

    c = exact.zeros(n, n, n)
    seen: dict[tuple[int, int, int], Fraction] = {}
    problems = []
    for pos, entry in enumerate(doc.get("brackets", [])):
        if not isinstance(entry, dict):
            raise DocumentError([f"brackets[{pos}] must be an object"])
        idx = []
        for key in ("i", "j", "k"):
            v = entry.get(key)
            if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n:
                raise DocumentError([f"brackets[{pos}].{key} must be an integer in 1..{n}, got {v!r}"])
            idx.append(v - 1)
        i, j, k = idx
        val = _value(entry.get("value"), f"brackets[{pos}].value")
        if i == j:
            if val != 0:
                problems.append(f"antisymmetry: [X{i + 1}, X{i + 1}] has nonzero X{k + 1} component {val}")
            continue
        for key, want in (((i, j, k), val), ((j, i, k), -val)):
            if key in seen and seen[key] != want:
                a, b, kk = (x + 1 for x in key)
                problems.append(f"antisymmetry: conflicting values for c^{kk}_{a}{b}")
            seen[key] = want
            c[key] = want
    if problems:
        raise DocumentError(problems)
    name = doc.get("name")
    a = MetricLieAlgebra(c, g, str(name) if name is not None else None)
    if check:
        violations = validate(a)
        if violations:
            raise DocumentError(violations)
    return a


def serialize_algebra(a: MetricLieAlgebra) -> dict:
    n = a.n
    brackets = [
        {"i": i + 1, "j": j + 1, "k": k + 1, "value": format_rational(a.c[i, j, k])}
        for i in range(n) for j in range(i + 1, n) for k in range(n)
        if a.c[i, j, k] != 0
    ]
    doc = {
        "dimension": n,
        "brackets": brackets,
        "metric": [[format_rational(a.g[i, j]) for j in range(n)] for i in range(n)],
    }
    if a.name is not None:
        doc["name"] = a.name
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def algebra_hash(a: MetricLieAlgebra) -> str:
    doc = serialize_algebra(a)
    doc.pop("name", None)
    return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()


def _vec(v) -> list[str]:
    return [format_rational(x) for x in v]


def _mat(m) -> list[list[str]]:
    return [_vec(row) for row in np.asarray(m, dtype=object)]


def render_verdict(verdict: SubmersionVerdict, base_curvature: Fraction | None) -> dict:
    return {
        "constant": verdict.constant,
        "first_nonvanishing_order": verdict.first_nonvanishing_order,
        "derivative_order": verdict.order,
        "symmetric_direction": _vec(verdict.symmetric_direction),
        "horizontal_basis": [_vec(v) for v in verdict.horizontal_basis],
        "base_sectional_curvature": None if base_curvature is None else format_rational(base_curvature),
    }


def render_report(
    a: MetricLieAlgebra,
    report: SymmetryReport,
    verdict: dict | None,
    derivative_order: int,
    submersion_note: str | None = None,
) -> dict:
    f = report.flags
    return {
        "tool": {"name": "liesym", "version": __version__},
        "input": {"name": a.name, "sha256": algebra_hash(a), "algebra": serialize_algebra(a)},
        "index_of_symmetry": report.index,
        "symmetric_basis": [_vec(v) for v in report.symmetric_basis],
        "isotropy": {
            "dimension": report.isotropy_dim,
            "basis": [_mat(b) for b in report.isotropy.basis],
            "stabilization_order": report.stabilization_order,
        },
        "isometry_dimension": report.isometry_dim,
        "flags": {
            "flat": f.flat,
            "locally_symmetric": f.locally_symmetric,
            "constant_curvature": f.constant_curvature,
            "curvature_constant": None if f.curvature_constant is None else format_rational(f.curvature_constant),
        },
        "witnesses": [
            {
                "v": _vec(w.v),
                "right_invariant_derivative": _mat(w.right_derivative),
                "isotropy_part": _mat(w.isotropy_part),
                "isotropy_coefficients": _vec(w.isotropy_coefficients),
            }
            for w in report.witnesses
        ],
        "submersion": verdict,
        "submersion_note": submersion_note,
        "derivative_order": derivative_order,
        "derivative_order_rationale": ORDER_RATIONALE,
        "caveat": report.caveat,
    }


def render_text(doc: dict) -> str:
    lines = [f"algebra: {doc['input']['name'] or '(unnamed)'}  sha256={doc['input']['sha256'][:16]}"]
    if "index_of_symmetry" in doc:
        lines += [
            f"index of symmetry: {doc['index_of_symmetry']}",
            "symmetric basis: " + ("; ".join("(" + ", ".join(v) + ")" for v in doc["symmetric_basis"]) or "-"),
            f"isotropy dimension: {doc['isotropy']['dimension']} "
            f"(stabilized at order {doc['isotropy']['stabilization_order']})",
            f"isometry dimension: {doc['isometry_dimension']}",
        ]
        fl = doc["flags"]
        cc = f" (K = {fl['curvature_constant']})" if fl["constant_curvature"] else ""
        lines.append(
            f"flat: {fl['flat']}  locally symmetric: {fl['locally_symmetric']}  "
            f"constant curvature: {fl['constant_curvature']}{cc}"
        )
    sub = doc.get("submersion")
    if sub is not None:
        if sub["constant"]:
            lines.append(f"submersion: constant horizontal lengths up to order {sub['derivative_order']}; "
                         f"base sectional curvature {sub['base_sectional_curvature']}")
        else:
            lines.append(f"submersion: non-constant, first nonvanishing derivative at order "
                         f"{sub['first_nonvanishing_order']}")
    elif doc.get("submersion_note"):
        lines.append(f"submersion: {doc['submersion_note']}")
    lines.append(f"note: {doc['caveat']}")
    return "\n".join(lines) + "\n"
