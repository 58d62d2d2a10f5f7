"""Run the exact reproduction battery and write the JSON report to a file or stdout."""

from __future__ import annotations

import argparse
import sys

from symdehn.checks import BatteryConfig, run_battery
from symdehn.report import document, dumps


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", help="path of the JSON report (default: stdout)")
    ap.add_argument("--q-max", type=int, default=BatteryConfig.q_max)
    ap.add_argument("--height-bound", type=int, default=BatteryConfig.height_bound)
    ap.add_argument("--b-max", type=int, default=BatteryConfig.b_max)
    args = ap.parse_args()
    cfg = BatteryConfig(q_max=args.q_max, height_bound=args.height_bound, b_max=args.b_max)
    checks = run_battery(cfg)
    ok = all(c.passed for c in checks)
    text = dumps(document("verify-paper", {"config": cfg}, {"checks": checks, "all_passed": ok}))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
