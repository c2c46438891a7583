"""S4 and Hall on every catalog presentation, exhaustively on short basis
words and on seeded random samples, plus the S3 witness."""

import argparse
import time
from dataclasses import dataclass

from twoquad.catalog import presentations
from twoquad.identities import HALL, S3, S4, exhaustive_check, find_nonvanishing, randomized_suite


@dataclass
class SweepConfig:
    max_len: int = 4
    samples: int = 100
    degree: int = 6
    seed: int = 0


def run(cfg: SweepConfig) -> bool:
    ok = True
    for label, pres in presentations():
        start = time.perf_counter()
        reports = [exhaustive_check(pres, S4, cfg.max_len), exhaustive_check(pres, HALL, cfg.max_len)]
        reports += randomized_suite(pres, cfg.samples, cfg.degree, cfg.seed).reports
        ok &= all(r.passed for r in reports)
        summary = " ".join(f"{r.identity}:{r.samples - r.failures}/{r.samples}" for r in reports)
        print(f"{label:40s} {summary} {time.perf_counter() - start:.2f}s")
    witness = find_nonvanishing(presentations()[0][1], S3, 2)
    if witness is not None:
        args, value = witness
        print("S3 witness:", ", ".join(a.render() for a in args), "->", value.render())
    return ok and witness is not None


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--degree", type=int, default=SweepConfig.degree)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    raise SystemExit(0 if run(SweepConfig(samples=args.samples, degree=args.degree, seed=args.seed)) else 1)
