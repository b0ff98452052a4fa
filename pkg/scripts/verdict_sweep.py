#!/usr/bin/env python3
"""Exhaustive sweep: splitting verdict vs the removal-definition oracle.

Enumerates every labeled graph on 3..max_n vertices, keeps the connected
ones, and confirms that the z-splitting verdict is exactly the failure of
biconnectivity recomputed from scratch.  Prints one census row per n.

Usage: verdict_sweep.py [max_n]   (default 6)
"""

import sys
import time

from raagsplit import connected_components
from raagsplit.cli import labeled_graphs, oracle_biconnected
from raagsplit.splitting import Z_SPLIT_YES, splits_over_z


def sweep(max_n: int) -> None:
    for n in range(3, max_n + 1):
        start = time.perf_counter()
        connected = splits = biconnected = 0
        for g in labeled_graphs(n):
            if len(connected_components(g)) != 1:
                continue
            connected += 1
            verdict = splits_over_z(g).z_split == Z_SPLIT_YES
            oracle = oracle_biconnected(g)
            if verdict != (not oracle):
                raise SystemExit(f"disagreement on {g!r}")
            splits += verdict
            biconnected += oracle
        elapsed = time.perf_counter() - start
        print(
            f"n={n}: connected={connected} splits_over_Z={splits} "
            f"biconnected={biconnected} ({elapsed:.2f}s)"
        )


if __name__ == "__main__":
    sweep(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
