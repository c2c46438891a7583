"""Independence of the basis-word images and recover-after-phi round trips
over the presentation catalog."""

import argparse
import random
import time
from dataclasses import dataclass

from twoquad.catalog import presentations
from twoquad.embedding import embed
from twoquad.freealg import random_element


@dataclass
class SweepConfig:
    max_len: int = 12
    samples: int = 25
    sample_degree: int = 8
    seed: int = 0


def run(cfg: SweepConfig) -> bool:
    rng = random.Random(cfg.seed)
    ok = True
    for label, pres in presentations():
        start = time.perf_counter()
        emb = embed(pres)
        independent = emb.images_independent(cfg.max_len)
        misses = 0
        for _ in range(cfg.samples):
            e = random_element(pres, rng, cfg.sample_degree)
            misses += emb.recover(emb.phi(e), cfg.sample_degree) != e
        ok &= independent and not misses
        height = emb.tower.height
        print(f"{label:40s} height={height} independent={independent} "
              f"misses={misses}/{cfg.samples} {time.perf_counter() - start:.2f}s")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=SweepConfig.max_len)
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    cfg = SweepConfig(max_len=args.max_len, samples=args.samples, seed=args.seed)
    raise SystemExit(0 if run(cfg) else 1)
