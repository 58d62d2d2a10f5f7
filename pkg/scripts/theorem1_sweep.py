"""Sweep every height h^2 = p/q and every ratio v = a/b and tabulate the decisive tags."""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from symdehn.dehn import case_b_grid, height_grid, triviality_verdict
from symdehn.pyramid import PyramidSpec


@dataclass(frozen=True)
class SweepConfig:
    height_bound: int = 50
    b_max: int = 64
    ns: tuple[int, ...] = (3, 4, 6)


def sweep(cfg: SweepConfig) -> dict[int, tuple[list[PyramidSpec], Counter]]:
    out = {}
    for n in cfg.ns:
        specs = [PyramidSpec.from_h2(n, h) for h in height_grid(cfg.height_bound)] + case_b_grid(n, cfg.b_max)
        trivial, tags = [], Counter()
        for spec in specs:
            rep = triviality_verdict(spec)
            tags[rep.decisive.tag.value] += 1
            if rep.trivial:
                trivial.append(spec)
        out[n] = (trivial, tags)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--height-bound", type=int, default=SweepConfig.height_bound)
    ap.add_argument("--b-max", type=int, default=SweepConfig.b_max)
    args = ap.parse_args()
    cfg = SweepConfig(args.height_bound, args.b_max)
    for n, (trivial, tags) in sweep(cfg).items():
        print(f"n = {n}: trivial at {[str(s) for s in trivial] or 'none'}")
        for tag, count in sorted(tags.items()):
            print(f"    {tag:28s} {count}")


if __name__ == "__main__":
    main()
