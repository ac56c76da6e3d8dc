"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Workloads come from the HS 2-(176,8,2) fixture, the largest computation the
library runs: developing the base block, counting pair coverage over 1100
blocks, and walking the flag and antiflag orbits.
"""
import argparse
import statistics
import time

from sporadic_designs import _kernels_py
from sporadic_designs.design import FixtureStore, _block_action, develop_block
from sporadic_designs.perm import build_chain

try:
    from sporadic_designs import _kernels as compiled
except ImportError:
    compiled = None


def workloads():
    store = FixtureStore.default()
    gens = store.generator_files["HS"][0]
    base = store.blocks["HS"][0].block
    chain = build_chain(gens)
    design = develop_block(gens, chain, base)
    point_gens = gens.images
    block_gens = _block_action(gens, design)
    outside = next(x for x in range(176) if x not in design.blocks[0])
    a, b = point_gens[0], point_gens[1]

    def compose_loop(k):
        p = a
        for _ in range(20000):
            p = k.compose(p, b)

    return {
        "compose x20000 (degree 176)": compose_loop,
        "set orbit of base block (1100)": lambda k: k.set_orbit(point_gens, tuple(base), 10**7),
        "pair coverage (1100 blocks)": lambda k: k.pair_coverage(176, design.blocks),
        "flag orbit (8800)": lambda k: k.pair_orbit_size(point_gens, block_gens, design.blocks[0][0], 0),
        "antiflag orbit (184800)": lambda k: k.pair_orbit_size(point_gens, block_gens, outside, 0),
    }


def timed(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':34} {'python (ms)':>12} {'compiled (ms)':>14} {'speedup':>8}")
    for name, fn in workloads().items():
        py = timed(lambda: fn(_kernels_py), args.repeat)
        if compiled is None:
            print(f"{name:34} {py * 1e3:12.2f}")
            continue
        cy = timed(lambda: fn(compiled), args.repeat)
        print(f"{name:34} {py * 1e3:12.2f} {cy * 1e3:14.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
