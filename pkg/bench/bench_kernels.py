"""Benchmark the two kernel paths (numba JIT vs pure numpy) on the hot
counting workloads.

Run:  python3 bench/bench_kernels.py [rmax]

The JIT path is warmed before timing so compilation does not pollute the
numbers.  Both paths are checked for equal output while benchmarking.
"""

from __future__ import annotations

import sys
import time

import numpy as np

from voxsphere import kernels


def _time(fn, *args, repeat: int = 3) -> tuple[float, object]:
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _equal(a, b) -> bool:
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main() -> int:
    rmax = int(sys.argv[1]) if len(sys.argv) > 1 else 4000
    nb = kernels.IMPLEMENTATIONS["numba"]
    np_ = kernels.IMPLEMENTATIONS["numpy"]
    if not nb["available"]:
        print("numba path unavailable; nothing to compare")
        return 1

    radii = np.arange(rmax + 1, dtype=np.int64)
    print(f"workload: tables and totals to r={rmax}, flood on a r=48 shell")
    print(f"{'kernel':<16} {'numba (s)':>12} {'numpy (s)':>12} {'speedup':>9}")

    nb["size_tables"](64)  # JIT warmup
    t_nb, tables_nb = _time(nb["size_tables"], rmax)
    t_np, tables_np = _time(np_["size_tables"], rmax)
    assert _equal(tables_nb, tables_np)
    print(f"{'size_tables':<16} {t_nb:>12.4f} {t_np:>12.4f} {t_np / t_nb:>8.1f}x")
    csz, dsz = tables_nb
    cpref = kernels.circle_prefix(csz)

    nb["surface_totals"](radii[:8], csz, cpref)
    t_nb, a = _time(nb["surface_totals"], radii, csz, cpref)
    t_np, b = _time(np_["surface_totals"], radii, csz, cpref)
    assert _equal(a, b)
    print(f"{'surface_totals':<16} {t_nb:>12.4f} {t_np:>12.4f} {t_np / t_nb:>8.1f}x")

    nb["solid_totals"](radii[:8], dsz)
    t_nb, a = _time(nb["solid_totals"], radii, dsz)
    t_np, b = _time(np_["solid_totals"], radii, dsz)
    assert _equal(a, b)
    print(f"{'solid_totals':<16} {t_nb:>12.4f} {t_np:>12.4f} {t_np / t_nb:>8.1f}x")

    nb["gap_tallies"](64, csz)
    t_nb, a = _time(nb["gap_tallies"], rmax - 1, csz)
    t_np, b = _time(np_["gap_tallies"], rmax - 1, csz)
    assert _equal(a, b)
    print(f"{'gap_tallies':<16} {t_nb:>12.4f} {t_np:>12.4f} {t_np / t_nb:>8.1f}x")

    from voxsphere import sphere, solid
    sp = sphere.completed_sphere_voxels(48)
    lo = sp.min(axis=0) - 1
    occ = np.zeros(tuple((sp.max(axis=0) - lo + 1).astype(int)), dtype=np.uint8)
    idx = (sp - lo).astype(int)
    occ[idx[:, 0], idx[:, 1], idx[:, 2]] = 1
    nb["flood_outside"](occ[:4, :4, :4].copy())
    t_nb, a = _time(nb["flood_outside"], occ)
    t_np, b = _time(np_["flood_outside"], occ)
    assert _equal(a, b)
    print(f"{'flood_outside':<16} {t_nb:>12.4f} {t_np:>12.4f} {t_np / t_nb:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
