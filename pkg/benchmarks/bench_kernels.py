#!/usr/bin/env python3
"""Compare the pure-Python and compiled kernel backends.

Two views: raw kernel micro-benchmarks on random involution triples, and
an end-to-end workload (mon over the one-face family plus an exhaustive
structure scan) with the kernel backend swapped in place.

Usage: python benchmarks/bench_kernels.py [--pairs 12] [--rounds 20000]
"""

import argparse
import random
import time

from monmap import _kernels_py, kernels

try:
    from monmap import _kernels_c
except ImportError:
    _kernels_c = None


def random_involution(rng, n):
    labs = list(range(n))
    rng.shuffle(labs)
    arr = [0] * n
    for i in range(0, n, 2):
        a, b = labs[i], labs[i + 1]
        arr[a], arr[b] = b, a
    return tuple(arr)


def micro(backend, triples, rounds):
    t0 = time.perf_counter()
    for i in range(rounds):
        p, q, r = triples[i % len(triples)]
        backend.orbit_ids2(p, q)
        backend.orbit_ids3(p, q, r)
        backend.face_data(p, q)
        backend.bipartite3(p, q, r)
    return time.perf_counter() - t0


def end_to_end(backend):
    # swap the active kernels; all map operations read them per call
    saved = (kernels.orbit_ids2, kernels.orbit_ids3, kernels.face_data,
             kernels.bipartite3)
    kernels.orbit_ids2 = backend.orbit_ids2
    kernels.orbit_ids3 = backend.orbit_ids3
    kernels.face_data = backend.face_data
    kernels.bipartite3 = backend.bipartite3
    try:
        from monmap.enumeration import all_maps, conservative_one_face
        from monmap.maps import is_orientable, structure
        from monmap.mon import clear_caches, mon

        clear_caches()
        t0 = time.perf_counter()
        for m in conservative_one_face(4):
            mon(m)
        for m in all_maps(3):
            structure(m)
            is_orientable(m)
        return time.perf_counter() - t0
    finally:
        (kernels.orbit_ids2, kernels.orbit_ids3, kernels.face_data,
         kernels.bipartite3) = saved


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--pairs", type=int, default=12,
                        help="labels per random involution (even)")
    parser.add_argument("--rounds", type=int, default=20000)
    args = parser.parse_args()

    rng = random.Random(0)
    triples = [tuple(random_involution(rng, args.pairs) for _ in range(3))
               for _ in range(100)]

    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("compiled", _kernels_c))
    else:
        print("compiled extension not built; showing pure Python only")

    print(f"micro-benchmark: {args.rounds} rounds of 4 kernels on "
          f"{args.pairs}-label involutions")
    times = {}
    for name, backend in backends:
        times[name] = micro(backend, triples, args.rounds)
        print(f"  {name:9s} {times[name]:8.3f}s")
    if len(times) == 2:
        print(f"  speedup   {times['python'] / times['compiled']:.2f}x")

    print("end-to-end: mon over the 105 one-face maps (cold cache) "
          "+ structure/orientability over all 3375 maps on 6 labels")
    times = {}
    for name, backend in backends:
        times[name] = end_to_end(backend)
        print(f"  {name:9s} {times[name]:8.3f}s")
    if len(times) == 2:
        print(f"  speedup   {times['python'] / times['compiled']:.2f}x")


if __name__ == "__main__":
    main()
