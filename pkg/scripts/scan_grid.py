"""Scan a (p, c, d) grid and print how the beta bounds fare, with timing.

    python scripts/scan_grid.py --primes 2,3,5,7,11,13 --max-c 1000 --max-d 60
"""
import argparse
import time
from collections import Counter

from padic_period.theorem import scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", default="2,3,5,7,11")
    ap.add_argument("--max-c", type=int, default=100)
    ap.add_argument("--max-d", type=int, default=100)
    ap.add_argument("--signed", action="store_true")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    primes = [int(p) for p in args.primes.split(",")]
    t0 = time.perf_counter()
    r = scan(primes, args.max_c, args.max_d, signed=args.signed, workers=args.workers)
    dt = time.perf_counter() - t0

    print(f"{r.instances} instances in {dt:.1f}s")
    print("cases:", dict(sorted(r.case_counts.items())))
    print(f"violations={len(r.violations)} failures={r.failures} order_warnings={len(r.order_warnings)}")
    print(f"max preperiod={r.max_preperiod} max period={r.max_period}")
    where = Counter((p == 2, i, name) for p, _, _, i, name, _ in r.strict_warnings)
    for (is2, i, name), n in sorted(where.items()):
        print(f"  strict warning {'p=2' if is2 else 'p>2'} i={i} {name}: {n}")
    for v in r.violations[:20]:
        print("  violation", v)


if __name__ == "__main__":
    main()
