"""Run every scenario under scenarios/ through the CLI and summarise exit codes."""
import sys
from pathlib import Path

from grada import cli

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    worst = 0
    for path in sorted((ROOT / "scenarios").glob("*.json")):
        code = cli.main(["--scenario", str(path)])
        print(f"== {path.name}: exit {code}\n", flush=True)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
