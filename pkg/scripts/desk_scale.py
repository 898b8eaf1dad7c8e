"""Generate and verify the universal cycle for each n in a range, with timings.

    python scripts/desk_scale.py --max-n 10
"""
import argparse
import resource
import time

from permucycle.generate import Walker, iter_chunks
from permucycle.treebuild import extend, find_base_tree
from permucycle.verify import verify_chunks


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--min-n", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=9)
    args = parser.parse_args()

    t0 = time.perf_counter()
    base = find_base_tree()
    print(f"base tree search: {time.perf_counter() - t0:.3f}s")
    print(f"{'n':>3} {'length':>10} {'tree':>8} {'compile':>8} {'walk':>8} {'verify':>8}  valid")
    tree = base
    for n in range(args.min_n, args.max_n + 1):
        t_tree = t_compile = 0.0
        if n >= 5:
            t0 = time.perf_counter()
            tree = base if n == 5 else extend(tree)
            t_tree = time.perf_counter() - t0
            t0 = time.perf_counter()
            chunks = Walker(n, tree).chunks()
            t_compile = time.perf_counter() - t0
        else:
            chunks = iter_chunks(n)
        t0 = time.perf_counter()
        word = b"".join(chunks)
        t_gen = time.perf_counter() - t0
        t0 = time.perf_counter()
        report = verify_chunks(n, [word])
        t_ver = time.perf_counter() - t0
        print(f"{n:>3} {len(word):>10} {t_tree:>7.2f}s {t_compile:>7.2f}s {t_gen:>7.2f}s {t_ver:>7.2f}s  {report.valid}")
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    print(f"peak RSS: {peak:.0f} MiB")


if __name__ == "__main__":
    main()
