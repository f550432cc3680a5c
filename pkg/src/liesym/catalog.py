"""The six simply connected 3-dimensional unimodular groups and their metric families."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import exact
from .liealg import MetricLieAlgebra, from_brackets

GROUPS = ("R3", "SU2", "SL2R", "H1", "E2tilde", "E11")

# 0-based bracket tables: {(i, j): {k: c^k_ij}}
BRACKETS = {
    "R3": {},
    "SU2": {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}},
    "SL2R": {(0, 1): {2: 2}, (0, 2): {1: -2}, (1, 2): {0: -2}},
    "H1": {(0, 1): {2: 1}},
    "E2tilde": {(0, 2): {1: -1}, (1, 2): {0: 1}},
    "E11": {(0, 2): {0: -1}, (1, 2): {1: 1}},
}


class CatalogError(ValueError):
    """Unknown family or parameters outside the family's constraints."""


def _diag(a, b, c):
    return [[a, 0, 0], [0, b, 0], [0, 0, c]]


def _spd(g11, g12, g13, g22, g23, g33):
    return [[g11, g12, g13], [g12, g22, g23], [g13, g23, g33]]


@dataclass(frozen=True)
class Family:
    group: str
    name: str
    params: tuple[str, ...]
    constraint: str
    check: Callable[..., bool]
    metric: Callable[..., list]


_SPD_PARAMS = ("g11", "g12", "g13", "g22", "g23", "g33")


def _spd_ok(*p):
    g = exact.frac_array(_spd(*p))
    return exact.is_positive_definite(g)


FAMILIES: dict[tuple[str, str], Family] = {}
for _fam in (
    Family("R3", "standard", (), "none", lambda: True, lambda: _diag(1, 1, 1)),
    Family("R3", "spd", _SPD_PARAMS, "metric positive definite", _spd_ok, _spd),
    Family("SU2", "g_lmn", ("l", "m", "n"), "l >= m >= n > 0",
           lambda l, m, n: l >= m >= n > 0, _diag),
    Family("SL2R", "g_lmn", ("l", "m", "n"), "l > 0 and m >= n > 0",
           lambda l, m, n: l > 0 and m >= n > 0, _diag),
    Family("H1", "standard", (), "none", lambda: True, lambda: _diag(1, 1, 1)),
    Family("H1", "spd", _SPD_PARAMS, "metric positive definite", _spd_ok, _spd),
    Family("E2tilde", "g_mn", ("m", "n"), "0 < m < 1 and n > 0",
           lambda m, n: 0 < m < 1 and n > 0, lambda m, n: _diag(1, m, n)),
    Family("E2tilde", "flat", ("a", "b"), "a > 0 and b > 0",
           lambda a, b: a > 0 and b > 0, lambda a, b: _diag(a, a, b)),
    Family("E11", "g_n", ("n",), "n > 0", lambda n: n > 0, lambda n: _diag(1, 1, n)),
    Family("E11", "g_mn", ("m", "n"), "m > 1 and n > 0",
           lambda m, n: m > 1 and n > 0, lambda m, n: [[1, 1, 0], [1, m, 0], [0, 0, n]]),
):
    FAMILIES[(_fam.group, _fam.name)] = _fam


@dataclass(frozen=True)
class CatalogEntry:
    group: str
    family: str
    params: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(exact.to_scalar(p) for p in self.params))
        fam = FAMILIES.get((self.group, self.family))
        if fam is None:
            raise CatalogError(f"unknown family {self.family!r} for group {self.group!r}")
        if len(self.params) != len(fam.params):
            raise CatalogError(
                f"{self.group}/{self.family} takes parameters {fam.params}, got {len(self.params)} values"
            )
        if not fam.check(*self.params):
            shown = ", ".join(f"{k}={exact.format_rational(v)}" for k, v in zip(fam.params, self.params))
            raise CatalogError(f"{self.group}/{self.family}: constraint '{fam.constraint}' violated by {shown}")

    @property
    def label(self) -> str:
        if not self.params:
            return f"{self.group}/{self.family}"
        vals = ",".join(exact.format_rational(p) for p in self.params)
        return f"{self.group}/{self.family}({vals})"


def catalog(entry: CatalogEntry) -> MetricLieAlgebra:
    fam = FAMILIES[(entry.group, entry.family)]
    return from_brackets(3, BRACKETS[entry.group], fam.metric(*entry.params), name=entry.label)


def get(group: str, family: str = "", *params) -> MetricLieAlgebra:
    """Shorthand: ``get("SL2R", "g_lmn", 1, 2, 1)``; family may be inferred."""
    if not family:
        family = family_for(group, len(params))
    return catalog(CatalogEntry(group, family, tuple(params)))


def family_for(group: str, nparams: int) -> str:
    matches = [f.name for f in FAMILIES.values() if f.group == group and len(f.params) == nparams]
    if len(matches) != 1:
        raise CatalogError(f"cannot infer a {group} family from {nparams} parameters")
    return matches[0]


def family_by_param_names(group: str, names: tuple[str, ...]) -> Family:
    for fam in FAMILIES.values():
        if fam.group == group and fam.params == names:
            return fam
    known = [f"{','.join(f.params) or '(none)'}" for f in FAMILIES.values() if f.group == group]
    raise CatalogError(f"no {group} family with parameters {','.join(names)}; known: {'; '.join(known)}")
