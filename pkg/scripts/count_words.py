"""Per-length Nyldon and Lyndon counts by brute force, next to the necklace formula."""
import argparse

from nyldon import Alphabet, is_lyndon, is_nyldon
from nyldon.nf import all_words
from nyldon.theorems import necklace_count


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=12)
    ap.add_argument("--alphabet", default="ab")
    args = ap.parse_args()
    alphabet = Alphabet(args.alphabet)
    print(f"{'n':>3} {'nyldon':>8} {'lyndon':>8} {'necklaces':>10}")
    for n in range(1, args.max_len + 1):
        words = list(all_words(alphabet, n))
        nyl = sum(map(is_nyldon, words))
        lyn = sum(map(is_lyndon, words))
        print(f"{n:>3} {nyl:>8} {lyn:>8} {necklace_count(n, len(alphabet)):>10}")


if __name__ == "__main__":
    main()
