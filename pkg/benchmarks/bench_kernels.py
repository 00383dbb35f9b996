"""Time the numba and numpy versions of the integer kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Workloads are the ones the library produces: degree slices of Borel ideals
tested for divisibility, and generator lists minimalized.
"""

import argparse
import timeit
from math import comb

import numpy as np

from borelseg import _accel
from borelseg.monomials import all_terms, terms_array
from borelseg.segments import revlex_segment_constant


def workloads():
    J = revlex_segment_constant(20, 4)
    gens = _accel._as_matrix(J.gens, 5)
    for t in (6, 10, 14):
        yield f"divisible_mask  n=4 t={t:<2} |T|={comb(4 + t, t):>6} |G|={len(J.gens)}", "divisible_mask", (terms_array(4, t), gens)
        yield f"count_outside   n=4 t={t:<2} |T|={comb(4 + t, t):>6} |G|={len(J.gens)}", "count_outside", (terms_array(4, t), gens)
    for n, t in ((3, 6), (4, 6), (5, 5)):
        rows = sorted(all_terms(n, t - 1) + all_terms(n, t), key=lambda u: (sum(u),) + tuple(u))
        yield f"minimal_mask    n={n} t={t:<2} rows={len(rows):>5}", "minimal_mask", (_accel._as_matrix(rows, n + 1),)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        print("numba is not installed; only the numpy path can run")
    print(f"{'workload':<48} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for label, name, data in workloads():
        np_fn = getattr(_accel, name + "_np")
        t_np = min(timeit.repeat(lambda: np_fn(*data), number=1, repeat=args.repeat)) * 1e3
        if _accel.HAVE_NUMBA:
            nb_fn = getattr(_accel, name + "_nb")
            a, b = np_fn(*data), nb_fn(*data)  # compile, and check agreement
            assert np.array_equal(np.asarray(a), np.asarray(b)), label
            t_nb = min(timeit.repeat(lambda: nb_fn(*data), number=1, repeat=args.repeat)) * 1e3
            print(f"{label:<48} {t_np:>10.3f} {t_nb:>10.3f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{label:<48} {t_np:>10.3f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
