"""Sweep every catalog family over a rational grid and write one CSV per family.

    python scripts/reproduce_tables.py --out-dir results/tables

Rows with index 1 trace the loci where a Killing field parallel at the
identity exists; the printed summary lists them per family.
"""
from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from liesym.cli import sweep_rows

F = Fraction


@dataclass
class SweepConfig:
    group: str
    grid: dict[str, list[Fraction]]
    tag: str = ""

    @property
    def name(self) -> str:
        return self.tag or self.group.lower()


@dataclass
class TablesConfig:
    out_dir: Path = Path("results/tables")
    sweeps: list[SweepConfig] = field(default_factory=lambda: [
        SweepConfig("SU2", {"l": [1, 2, 3, 4], "m": [1, 2, 3], "n": [F(1, 2), 1, 2]}),
        SweepConfig("SL2R", {"l": [F(1, 2), 1, 2, 3], "m": [1, 2, 3, 4], "n": [1, 2]}),
        SweepConfig("E2tilde", {"m": [F(1, 4), F(1, 2), F(3, 4)], "n": [1, 2, 3]}, "e2tilde_g_mn"),
        SweepConfig("E2tilde", {"a": [1, 2], "b": [F(1, 2), 1, 3]}, "e2tilde_flat"),
        SweepConfig("E11", {"n": [F(1, 3), F(1, 2), 1, 2, 5]}, "e11_g_n"),
        SweepConfig("E11", {"m": [F(3, 2), 2, 3], "n": [F(1, 2), 1, 2]}, "e11_g_mn"),
    ])


def run(cfg: TablesConfig) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for sw in cfg.sweeps:
        header, rows = sweep_rows(sw.group, {k: [F(v) for v in vs] for k, vs in sw.grid.items()})
        path = cfg.out_dir / f"{sw.name}.csv"
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
        k = len(sw.grid)
        ok = [r for r in rows if r[-1] == "ok"]
        hits = [tuple(r[:k]) for r in ok if r[k] == "1"]
        full = [tuple(r[:k]) for r in ok if r[k] == "3"]
        print(f"{sw.name}: {len(ok)}/{len(rows)} rows -> {path}")
        print(f"  index 1 at {', '.join('(' + ','.join(h) + ')' for h in hits) or 'none'}")
        if full:
            print(f"  index 3 at {', '.join('(' + ','.join(h) + ')' for h in full)}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", type=Path, default=TablesConfig.out_dir)
    args = p.parse_args()
    run(TablesConfig(out_dir=args.out_dir))


if __name__ == "__main__":
    main()
