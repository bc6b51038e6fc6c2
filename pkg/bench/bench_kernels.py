"""Compare the compiled and pure-Python cyclotomic kernels.

    python3 bench/bench_kernels.py [--repeat 5] [--pipeline]

The micro benchmark times products in Q(zeta_24) and Q(zeta_40). With
--pipeline it also times the uqsl2(3) modular pipeline under each backend in
a fresh interpreter (the backend is chosen at import time).
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from hopfmod import _kernels_py
from hopfmod.cyclo import field

try:
    from hopfmod import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _operands(N: int, count: int, seed: int = 0):
    F = field(N)
    rng = random.Random(seed)
    ops = []
    for _ in range(count):
        a = tuple(rng.randint(-9, 9) for _ in range(F.phi))
        b = tuple(rng.randint(-9, 9) for _ in range(F.phi))
        ops.append((a, 1, b, rng.randint(1, 6)))
    return F, ops


def micro(module, N: int, repeat: int) -> float:
    F, ops = _operands(N, 2000)

    def run():
        for ac, ad, bc, bd in ops:
            module.cmul(ac, ad, bc, bd, F.phi, F.red)
            module.cadd(ac, ad, bc, bd)

    return min(timeit.repeat(run, number=1, repeat=repeat))


PIPELINE = ("import time; t=time.perf_counter();"
            "from hopfmod.families import uqsl2; from hopfmod.modular import cw_modular_data;"
            "cw_modular_data(uqsl2(3).cw_input()); print(time.perf_counter()-t)")


def pipeline(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("HOPFMOD_PURE", None)
    if pure:
        env["HOPFMOD_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", PIPELINE], env=env, capture_output=True,
                         text=True, check=True)
    return float(out.stdout.strip())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--pipeline", action="store_true")
    args = ap.parse_args()
    if _kernels_c is None:
        print("compiled kernels not built; only the pure backend is available")
    for N in (24, 40):
        tp = micro(_kernels_py, N, args.repeat)
        line = f"N={N:<3} pure {tp * 1e3:8.2f} ms"
        if _kernels_c is not None:
            tc = micro(_kernels_c, N, args.repeat)
            line += f"   cython {tc * 1e3:8.2f} ms   speedup {tp / tc:5.2f}x"
        print(line)
    if args.pipeline:
        tp = pipeline(True)
        line = f"uqsl2(3) pipeline: pure {tp:6.2f} s"
        if _kernels_c is not None:
            tc = pipeline(False)
            line += f"   cython {tc:6.2f} s   speedup {tp / tc:5.2f}x"
        print(line)


if __name__ == "__main__":
    main()
