"""Submersion verdicts and base curvatures for the index-1 catalog entries."""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from liesym import catalog
from liesym.killing import symmetric_subspace
from liesym.quotient import DEFAULT_ORDER, oneill_base_curvature, submersion_check

F = Fraction


@dataclass
class SurveyConfig:
    order: int = DEFAULT_ORDER
    entries: list[tuple] = field(default_factory=lambda: [
        ("H1", "standard"),
        ("SU2", "g_lmn", 2, 1, 1), ("SU2", "g_lmn", 3, 1, 1), ("SU2", "g_lmn", 1, 1, F(1, 2)),
        ("SU2", "g_lmn", 3, 2, 1),
        ("SL2R", "g_lmn", F(1, 2), 1, 1), ("SL2R", "g_lmn", 1, 1, 1), ("SL2R", "g_lmn", 3, 1, 1),
        ("SL2R", "g_lmn", 1, 2, 1), ("SL2R", "g_lmn", 2, 3, 1),
        ("E11", "g_n", F(1, 2)), ("E11", "g_n", 1), ("E11", "g_n", 2),
    ])


def run(cfg: SurveyConfig) -> None:
    for args in cfg.entries:
        entry = catalog.CatalogEntry(args[0], args[1], args[2:])
        a = catalog.catalog(entry)
        rep = symmetric_subspace(a)
        v = submersion_check(a, rep, cfg.order)
        if v.constant:
            k = oneill_base_curvature(a, rep, *v.horizontal_basis, order=cfg.order)
            print(f"{entry.label:22s} submersion   base curvature {k}")
        else:
            print(f"{entry.label:22s} no submersion (derivative of order {v.first_nonvanishing_order} nonzero)")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--derivative-order", type=int, default=DEFAULT_ORDER)
    run(SurveyConfig(order=p.parse_args().derivative_order))


if __name__ == "__main__":
    main()
