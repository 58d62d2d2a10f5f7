"""Compare the two hexagonal families with a brute-force scan of b^2 - a^2 = 2^K 3^L."""

from __future__ import annotations

import argparse
import time

from symdehn.diophantine import hexagonal_brute_force, hexagonal_exhaustiveness, hexagonal_families_up_to_b


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b-max", type=int, default=2000)
    args = ap.parse_args()
    start = time.perf_counter()
    only_brute, only_fams = hexagonal_exhaustiveness(args.b_max)
    print(f"b <= {args.b_max}: {len(hexagonal_brute_force(args.b_max))} brute-force pairs, "
          f"{len(hexagonal_families_up_to_b(args.b_max, s_min=0))} family members")
    print(f"brute force only: {sorted(only_brute) or 'none'}")
    print(f"families only:    {sorted(only_fams) or 'none'}")
    print(f"{time.perf_counter() - start:.2f} s")
    return 0 if not only_brute and not only_fams else 1


if __name__ == "__main__":
    raise SystemExit(main())
