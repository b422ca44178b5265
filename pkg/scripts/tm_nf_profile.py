"""Factor counts and lengths of NF(TM_n), with the time prepend-merge takes."""
import argparse
import time

from nyldon import nyldon_factorization, thue_morse


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=16)
    args = ap.parse_args()
    print(f"{'n':>3} {'|TM_n|':>8} {'factors':>8} {'time_ms':>9}  lengths")
    for n in range(0, args.n_max + 1):
        tm = thue_morse(n)
        t0 = time.perf_counter()
        nf = nyldon_factorization(tm)
        ms = (time.perf_counter() - t0) * 1000
        lengths = [len(f) for f in nf.factors]
        print(f"{n:>3} {len(tm):>8} {len(lengths):>8} {ms:>9.2f}  {lengths}")


if __name__ == "__main__":
    main()
