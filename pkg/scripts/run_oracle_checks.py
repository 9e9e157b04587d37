#!/usr/bin/env python3
"""Run the dual-oracle density validation over the twelve benchmark economies.

Full size (4001 FD points, 1e6 MC samples) matches the acceptance gate; use
--points/--samples to iterate faster while changing the solvers.
"""

import argparse
import sys
import time

from cogecon.errors import ValidationError
from cogecon.rng import RngSpec
from cogecon.validate import run_density_validation, benchmark_combos
from cogecon.wealth import drift_diffusion


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--points", type=int, default=4001, help="FD grid points")
    ap.add_argument("--samples", type=int, default=1_000_000, help="MC samples")
    args = ap.parse_args()

    t0 = time.perf_counter()
    failed = []
    for idx, (label, params) in enumerate(benchmark_combos()):
        law = drift_diffusion(params)
        rep = run_density_validation(law, RngSpec(args.seed, stream_id=100 + idx),
                                     label=label, n_points=args.points,
                                     n_samples=args.samples)
        verdict = "PASS" if rep.passed else "FAIL"
        print(f"{label:<42} fd {rep.fd_error:.3e}  ks {rep.ks_distance:.3e}  {verdict}")
        if not rep.passed:
            failed.append(label)
    print(f"{len(failed)} failures in {time.perf_counter() - t0:.1f}s")
    if failed:
        raise ValidationError(", ".join(failed))
    return 0


if __name__ == "__main__":
    sys.exit(main())
