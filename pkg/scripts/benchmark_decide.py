"""Time decide() over growing batches to show per-item cost stays flat.

Batches are drawn ahead of timing so only the decision procedure is clocked.
"""

from __future__ import annotations

import argparse
import gc
import random
import sys
import time

from dasasap import decide, enumerate_all


def clock(batch) -> float:
    gc.disable()
    try:
        t0 = time.perf_counter()
        for s in batch:
            decide(s)
        return time.perf_counter() - t0
    finally:
        gc.enable()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=99)
    parser.add_argument(
        "--sizes",
        type=int,
        nargs="+",
        default=[10_000, 100_000, 1_000_000],
        help="batch sizes, ascending",
    )
    args = parser.parse_args(argv)

    pool = enumerate_all()
    rng = random.Random(args.seed)
    batches = [[rng.choice(pool) for _ in range(n)] for n in args.sizes]

    for s in batches[0]:  # warm caches before the first measurement
        decide(s)

    print(f"{'n':>9}  {'seconds':>8}  {'us/op':>6}")
    timings = []
    for n, batch in zip(args.sizes, batches):
        elapsed = min(clock(batch) for _ in range(3 if n < 500_000 else 1))
        timings.append(elapsed)
        print(f"{n:>9}  {elapsed:>8.3f}  {elapsed / n * 1e6:>6.1f}")

    if len(args.sizes) >= 2:
        growth = args.sizes[-1] / args.sizes[-2]
        ratio = timings[-1] / timings[-2]
        print(f"\nlast-step size growth {growth:.0f}x, time ratio {ratio:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
