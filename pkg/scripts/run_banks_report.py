"""Run the full hypotheses report at a chosen resolution and write it as JSON.

    python scripts/run_banks_report.py --resolution 6 --out report.json
"""

import argparse
import sys
import time
from pathlib import Path

from nadslab.checkers import default_block_index, verify_all
from nadslab.report import render_text, validate


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--resolution", type=int, default=6)
    ap.add_argument("--k", type=int, default=50)
    ap.add_argument("--out", type=Path, default=Path("report.json"))
    args = ap.parse_args()

    n = default_block_index(args.resolution)
    start = time.perf_counter()
    cert = verify_all(args.resolution, n, args.k)
    elapsed = time.perf_counter() - start
    validate(cert.to_dict())
    args.out.write_text(cert.to_json(), encoding="utf-8")
    print(render_text(cert))
    print(f"\nL={args.resolution} n={n} K={args.k}: {cert.verdict} in {elapsed:.2f}s, written to {args.out}")
    return 0 if cert.passed else 1


if __name__ == "__main__":
    sys.exit(main())
