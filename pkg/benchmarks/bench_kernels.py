"""Time each hot kernel under the numba and numpy backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The numba column excludes compilation: every kernel is called once before
timing.  Outputs are compared so a fast but wrong kernel is caught here too.
"""

import argparse
import timeit

import numpy as np

from qbinmod._accel import HAVE_NUMBA
from qbinmod.kernels import BACKENDS
from qbinmod.partitions import p_le_k_prefix

CASES = [
    ("partition_prefix", (6, 7, 200_000)),
    ("box_mod", (3000, 6, 5)),
    ("residue_count_sweep", (4, 5, 4, 8_000)),
    ("smallest_period", (p_le_k_prefix(4, 9, 3 * 7560).values.copy(),)),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    names = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    print(f"{'kernel':22s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}")
    for kernel, kargs in CASES:
        times, outs = [], []
        for name in names:
            fn = BACKENDS[name][kernel]
            outs.append(fn(*kargs))
            times.append(min(timeit.repeat(lambda: fn(*kargs), number=1, repeat=args.repeat)))
        if len(outs) == 2 and not np.array_equal(np.asarray(outs[0]), np.asarray(outs[1])):
            raise SystemExit(f"{kernel}: backends disagree")
        speed = f"{times[0] / times[1]:9.1f}x" if len(times) == 2 else ""
        print(f"{kernel:22s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
