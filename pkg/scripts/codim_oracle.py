"""Compare the codimension bound 4 deg tau against brute-force quotient
dimensions in the monomial algebra with x^2 = y^2 = 0."""

import argparse
import os
import sys
from dataclasses import dataclass, field

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "tests"))

from oracles import truncated_quotient_dims  # noqa: E402
from twoquad.center import central_in_ideal, to_rho  # noqa: E402
from twoquad.embedding import embed  # noqa: E402
from twoquad.field import BaseField  # noqa: E402
from twoquad.freealg import Presentation  # noqa: E402
from twoquad.parser import parse_element  # noqa: E402


@dataclass
class OracleConfig:
    generators: list[str] = field(default_factory=lambda: ["x*y", "y*x", "x", "y", "x+y", "x*y+y*x"])
    max_degree: int = 12


def run(cfg: OracleConfig) -> bool:
    pres = Presentation.over(BaseField(), 0, 0, 0, 0)
    emb = embed(pres)
    ok = True
    for expr in cfg.generators:
        e = parse_element(expr, pres)
        w = central_in_ideal(to_rho(e, emb), emb)
        bound = 4 * int(w.tau.degree)
        dims = truncated_quotient_dims(pres, e, cfg.max_degree)
        total = sum(dims)
        stable = dims[-1] == 0 and dims[-2] == 0
        ok &= stable and total <= bound
        print(f"{expr:10s} case={w.case:12s} tau={w.tau.render():8s} bound={bound:3d} "
              f"quotient={total:3d} per-degree={dims}")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("generators", nargs="*", default=OracleConfig().generators)
    ap.add_argument("--max-degree", type=int, default=OracleConfig.max_degree)
    args = ap.parse_args()
    raise SystemExit(0 if run(OracleConfig(args.generators, args.max_degree)) else 1)
