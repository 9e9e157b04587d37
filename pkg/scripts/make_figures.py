#!/usr/bin/env python3
"""Write the CSV series behind every reference figure and print a manifest.

Same output as `cogecon reproduce`, kept as a script so figure generation can
be driven from a scheduler or a Makefile without the CLI wrapper.
"""

import argparse
import hashlib

from cogecon.config import apply_overrides, parse_config
from cogecon.figures import FIGURE_IDS, reproduce


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", default=None, help="scenario file")
    ap.add_argument("--seed", type=int, default=None, help="master seed override")
    ap.add_argument("--out", default="out", help="output directory")
    ap.add_argument("--figures", type=int, nargs="*", default=None,
                    help="subset of figure numbers (default: all 14)")
    args = ap.parse_args()

    cfg = apply_overrides(parse_config(args.config), args.seed, args.out)
    wanted = args.figures if args.figures else sorted(FIGURE_IDS)
    for fid in wanted:
        table = reproduce(fid, cfg)
        path = table.write(cfg.out_dir)
        digest = hashlib.sha256(path.read_bytes()).hexdigest()[:12]
        rows = len(table.data)
        print(f"{path}  rows={rows:<5d} cols={len(table.columns):<2d} sha256={digest}")


if __name__ == "__main__":
    main()
