"""Cross-check machine search, the canonical algorithm and basis avoidance.

    python scripts/verify_theorem.py --max-len 9 --jobs 4
"""

import argparse
import sys
import time

from twostack.verify import verify_theorem


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-len", type=int, default=8)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    t0 = time.time()
    report = verify_theorem(args.max_len, jobs=args.jobs)
    print(report.render_text())
    print(f"elapsed {time.time() - t0:.1f}s")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
