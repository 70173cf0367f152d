"""Print one PASS/FAIL line per acceptance criterion; exit 1 if any fails."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from test_acceptance import CRITERIA, run_criterion  # noqa: E402


def main() -> int:
    failed = 0
    for num, fn, budget in CRITERIA:
        ok, line = run_criterion(num, fn, budget)
        print(line, flush=True)
        failed += not ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
