"""Write the blocks A_0..A_n to a word file and print their balanced-form counts.

    python scripts/thue_morse_blocks.py --n 10 --out blocks.txt
"""

import argparse
from collections import Counter
from pathlib import Path

from nadslab.words import block_length, classify_block, thue_morse_block, write_words


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--prefix", type=int, default=1 << 16, help="prefix length scanned for block forms")
    ap.add_argument("--out", type=Path, default=Path("blocks.txt"))
    args = ap.parse_args()

    write_words(args.out, (thue_morse_block(i) for i in range(args.n + 1)))
    print(f"wrote A_0..A_{args.n} to {args.out}")
    for i in range(1, args.n + 1):
        blocks = args.prefix // (2 * block_length(i))
        counts = Counter(classify_block(i, j).value for j in range(blocks))
        print(f"n={i:2d} |A_n|={block_length(i):5d} " + " ".join(f"{k}:{v}" for k, v in sorted(counts.items())))


if __name__ == "__main__":
    main()
