#!/usr/bin/env python3
"""Rebuild the binary and ternary bounds grids from the bundled seeds.

Seeds the published cell values plus the exact high-rate ternary values,
propagates the inequality rules to a fixpoint, renders both grids, and
reports any cell where propagation improves on the published value.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from lcdkit import bounds
from lcdkit.corpus import data_dir


def rebuild(field, n_range, k_range, extra_seeds=None, ternary_exact=None):
    table = bounds.BoundsTable(field)
    grid = bounds.load_grid(bounds.grid_path(field))
    bounds.seed_from_grid(table, grid, "published grid")
    if extra_seeds:
        bounds.seed_from_csv(table, extra_seeds)
    if ternary_exact:
        bounds.seed_ternary_exact(table, ternary_exact)
    updates = bounds.propagate(table)
    print(f"== {field}: {len(grid)} published cells, {updates} propagation updates ==")
    print(bounds.render(table, n_range, k_range, fmt="markdown"))
    improved = []
    for (n, k), cell in sorted(grid.items()):
        got = bounds.cell_string(table, n, k)
        if got != cell:
            improved.append((n, k, cell, got))
    if improved:
        print("cells improved beyond the published values:")
        for n, k, cell, got in improved:
            print(f"  [{n},{k}]: published {cell}, derived {got}")
    print()


def main():
    rebuild("gf2", range(29, 41), range(9, 31))
    rebuild(
        "gf3",
        range(20, 26),
        range(4, 26),
        extra_seeds=data_dir() / "seeds_extra_gf3.csv",
        ternary_exact=range(20, 26),
    )


if __name__ == "__main__":
    main()
