"""Run the oracle-vs-formula comparison over several primes and print a summary table.

    python scripts/verify_grid.py --primes 3 5 7 --n-max 3 --k-max 6
"""
import argparse
import time

from quadzeta.base import CaseKind, QuadraticSetup
from quadzeta.verify import verify_grid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--cross-k", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'case':<11} {'p':>3} {'checks':>7} {'failed':>7} {'seconds':>8}")
    all_ok = True
    for kind in CaseKind:
        for p in args.primes:
            t0 = time.perf_counter()
            res = verify_grid(QuadraticSetup.preset(kind, p), args.n_max, args.k_max,
                              cross_k=args.cross_k, workers=args.workers)
            dt = time.perf_counter() - t0
            fails = res.failures()
            all_ok &= not fails
            print(f"{kind.value:<11} {p:>3} {len(res.checks):>7} {len(fails):>7} {dt:>8.2f}")
            for c in fails:
                print("   ", c.line())
    print("ALL PASS" if all_ok else "MISMATCH")
    raise SystemExit(0 if all_ok else 1)


if __name__ == "__main__":
    main()
