"""Compare classifier verdicts with the matrix-unit oracle on random acyclic quivers."""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracle_compare import MODULI, compare, instances  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bad = 0
    for q, deg in instances(args.count, args.seed):
        for m in MODULI:
            diff = compare(q, deg, m)
            if diff:
                bad += 1
                print(f"{q.name} degrees={deg} modulus={m}: {diff}")
    print(f"{args.count * len(MODULI)} gradings, {bad} disagreements")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
