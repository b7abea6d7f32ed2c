#!/usr/bin/env python3
"""Benchmark the compiled Z/2 reduction kernel against the pure-Python one.

Builds genuine filtrations (no synthetic matrices), reduces each with both
kernels, checks they agree, and reports wall times.

Usage: python benchmarks/bench_reduction.py [--repeat N]
"""

import argparse
import itertools
import time

from extremal_cech import _reduce_py, complexgen, construct, homology


def boundary_columns(fc):
    index = {}
    columns = []
    for pos, (_, cs) in enumerate(fc.entries):
        rows = []
        if cs.dim > 0:
            rows = sorted(index[f] for f in itertools.combinations(cs.vertices, cs.dim))
        columns.append(rows)
        index[cs.vertices] = pos
    return columns


def cases():
    yield "3d n=30", construct.build_3d(30, 1e-3)
    yield "3d n=45", construct.build_3d(45, 1e-3)
    yield "even k=3 n=10", construct.build_even(3, 10)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not homology.HAVE_COMPILED:
        print("compiled kernel not built; nothing to compare")
        return

    from extremal_cech import _reduce_cy

    print(f"{'case':16s} {'columns':>8s} {'pure [s]':>10s} {'compiled [s]':>13s} {'speedup':>8s}")
    for name, ps in cases():
        fc = complexgen.build_filtration(ps)
        columns = boundary_columns(fc)

        t_pure = min(_timed(_reduce_py.reduce_columns, columns) for _ in range(args.repeat))
        t_comp = min(_timed(_reduce_cy.reduce_columns, columns) for _ in range(args.repeat))
        assert _reduce_py.reduce_columns(columns) == list(_reduce_cy.reduce_columns(columns))
        print(f"{name:16s} {len(columns):8d} {t_pure:10.4f} {t_comp:13.4f} "
              f"{t_pure / t_comp:7.1f}x")


def _timed(fn, columns):
    t0 = time.perf_counter()
    fn(columns)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
