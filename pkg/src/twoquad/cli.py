"""Command-line front end: ``twoquad [global flags] <command> [args]``.

Exit status is 0 on success, 1 for a negative mathematical result (not in
the image, identity counterexample, failed check) and 2 for usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .center import center_coordinates, central_in_ideal, codim_upper_bound, to_rho
from .embedding import DEFAULT_DEGREE, embed
from .field import BaseField
from .freealg import Presentation
from .golden import verify_paper
from .identities import randomized_suite
from .parser import GRAMMAR, ElementSyntaxError, parse_element, parse_scalar
from .poly import Poly, PolyMatrix
from .refchecks import b0_realization_check, weiss_check

OK, NEGATIVE, USAGE = 0, 1, 2
IDENTITY_DEGREE = 6
B0_DEGREE = 10


class UsageError(Exception):
    pass


def _pair(text: str, flag: str, base: BaseField):
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{flag} expects two comma-separated values, got {text!r}")
    try:
        return [base.scalar(Fraction(p.strip())) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=argparse.SUPPRESS, help="Q or Fp:<p> (default Q)")
    common.add_argument("--rel-x", default=argparse.SUPPRESS, metavar="a,b",
                        help="x^2 + a x + b = 0 (default 0,0)")
    common.add_argument("--rel-y", default=argparse.SUPPRESS, metavar="c,d",
                        help="y^2 + c y + d = 0 (default 0,0)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--degree", type=int, default=argparse.SUPPRESS,
                        help=f"degree bound (default {DEFAULT_DEGREE}; "
                             f"{IDENTITY_DEGREE} for check-identities, {B0_DEGREE} for refcheck-b0)")

    parser = argparse.ArgumentParser(
        prog="twoquad",
        parents=[common],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="Exact computations in K<x, y | x^2 + ax + b = 0, y^2 + cy + d = 0>.",
        epilog="element grammar:\n" + GRAMMAR,
    )
    parser.add_argument("--version", action="version", version=f"twoquad {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def cmd(name, help_text, expr=True):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if expr:
            p.add_argument("expr", help="element, see the grammar in --help")
        return p

    cmd("normal-form", "normal form of an element")
    cmd("embed", "matrix image of an element")
    rec = cmd("recover", "element with a given matrix image", expr=False)
    rec.add_argument("matrix_file", help="JSON 2x2 array of coefficient lists, lowest degree first")
    cmd("center-coords", "coordinates over the center K[z] in the basis 1, x, y, xy")
    cmd("central-in-ideal", "nonzero central element in the ideal generated by an element")
    cmd("codim-bound", "upper bound on the codimension of a principal ideal")
    ci = cmd("check-identities", "seeded random check of S4 and the Hall identity", expr=False)
    ci.add_argument("--samples", type=int, default=100)
    ci.add_argument("--seed", type=int, default=0)
    cmd("verify-paper", "golden checks of the closed-form matrix identities", expr=False)
    cmd("refcheck-weiss", "check the Weiss matrices", expr=False)
    cmd("refcheck-b0", "check the 3x3 realization of K<x, y | x^2, yxy>", expr=False)
    return parser


class Context:
    def __init__(self, args):
        self.args = args
        self.base = BaseField.parse(getattr(args, "field", "Q"))
        a, b = _pair(getattr(args, "rel_x", "0,0"), "--rel-x", self.base)
        c, d = _pair(getattr(args, "rel_y", "0,0"), "--rel-y", self.base)
        self.pres = Presentation.over(self.base, a, b, c, d)
        self.json = getattr(args, "json", False)
        self._emb = None

    @property
    def emb(self):
        if self._emb is None:
            self._emb = embed(self.pres)
        return self._emb

    def degree(self, default=DEFAULT_DEGREE) -> int:
        n = getattr(self.args, "degree", default)
        if n < 0:
            raise UsageError("--degree must be non-negative")
        return n

    def element(self):
        return parse_element(self.args.expr, self.pres, self.emb.tower)

    def header(self) -> list[str]:
        tower = self.emb.tower
        return [f"field: {tower}", *tower.describe()]

    def envelope(self, **payload) -> dict:
        return {
            "command": self.args.command,
            "field": str(self.base),
            "relations": [str(v) for v in (self.pres.a, self.pres.b, self.pres.c, self.pres.d)],
            "tower": self.emb.tower.describe(),
            **payload,
        }


def _emit(ctx: Context, payload: dict, lines: list[str], out):
    if ctx.json:
        out.write(json.dumps(ctx.envelope(**payload), indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(ctx.header() + lines) + "\n")


def load_matrix(path: str, ctx: Context) -> PolyMatrix:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read matrix file: {exc}") from None
    if not (isinstance(data, list) and len(data) == 2 and all(isinstance(r, list) and len(r) == 2 for r in data)):
        raise UsageError("matrix file must hold a 2x2 array of coefficient lists")
    tower = ctx.emb.tower
    rows = []
    for r in data:
        row = []
        for entry in r:
            if not isinstance(entry, list):
                raise UsageError("each matrix entry must be a list of coefficients")
            row.append(Poly([parse_scalar(str(v), ctx.pres, tower) for v in entry]))
        rows.append(row)
    return PolyMatrix(rows)


def run(ctx: Context, out) -> int:
    cmd = ctx.args.command
    if cmd == "normal-form":
        e = ctx.element()
        _emit(ctx, {"element": e.to_json(), "text": e.render()}, [e.render()], out)
        return OK
    if cmd == "embed":
        m = ctx.emb.phi(ctx.element())
        _emit(ctx, {"matrix": m.to_json(), "text": m.render()}, [m.render()], out)
        return OK
    if cmd == "recover":
        n = ctx.degree()
        e = ctx.emb.recover(load_matrix(ctx.args.matrix_file, ctx), n)
        if e is None:
            _emit(ctx, {"degree": n, "in_image": False, "element": None},
                  [f"NotInImage (no element of degree <= {n} has this image)"], out)
            return NEGATIVE
        _emit(ctx, {"degree": n, "in_image": True, "element": e.to_json(), "text": e.render()},
              [e.render()], out)
        return OK
    if cmd == "center-coords":
        cc = center_coordinates(ctx.element(), emb=ctx.emb)
        lines = [f"h{i} = {h.render()}" for i, h in enumerate(cc)]
        _emit(ctx, {"coordinates": cc.to_json()}, lines, out)
        return OK
    if cmd in ("central-in-ideal", "codim-bound"):
        e = ctx.element()
        if e.is_zero():
            _emit(ctx, {"error": "the zero element generates the zero ideal"},
                  ["the zero element generates the zero ideal"], out)
            return NEGATIVE
        rho = to_rho(e, ctx.emb)
        if cmd == "codim-bound":
            bound = codim_upper_bound(rho, ctx.emb)
            _emit(ctx, {"rho": rho.to_json(), "bound": bound}, [str(bound)], out)
            return OK
        w = central_in_ideal(rho, ctx.emb)
        lines = [
            f"rho = ({rho})",
            f"case: {w.case}",
            f"witness: {w.commutator} = ({w.closed_form}) I",
            f"tau = {w.tau.render()}",
        ]
        _emit(ctx, {"rho": rho.to_json(), **w.to_json()}, lines, out)
        return OK
    if cmd == "check-identities":
        if ctx.args.samples < 0:
            raise UsageError("--samples must be non-negative")
        d = ctx.degree(IDENTITY_DEGREE)
        if d < 1:
            raise UsageError("--degree must be at least 1 for check-identities")
        rep = randomized_suite(ctx.pres, ctx.args.samples, d, ctx.args.seed)
        lines = [
            f"{r.identity}: {r.samples} samples, {r.failures} failures"
            + (f", first counterexample {r.first_counterexample}" if r.first_counterexample else "")
            for r in rep.reports
        ]
        _emit(ctx, rep.to_json(), lines, out)
        return OK if rep.passed else NEGATIVE
    if cmd == "verify-paper":
        board = verify_paper(ctx.pres)
        _emit(ctx, board.to_json(), board.render(), out)
        return OK if board.passed else NEGATIVE
    if cmd == "refcheck-weiss":
        rep = weiss_check(ctx.base)
        return _check_report(ctx, rep, out)
    if cmd == "refcheck-b0":
        n = ctx.degree(B0_DEGREE)
        if n < 1:
            raise UsageError("--degree must be at least 1 for refcheck-b0")
        return _check_report(ctx, b0_realization_check(n, ctx.base), out)
    raise UsageError(f"unknown command {cmd!r}")


def _check_report(ctx: Context, rep, out) -> int:
    if rep.refused:
        _emit(ctx, rep.to_json(), [f"refused: {rep.refused}"], out)
        return USAGE
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in rep.checks.items()]
    for note in rep.notes:
        if isinstance(note, str):
            lines.append(f"note: {note}")
        else:
            for reading, res in note["J readings"].items():
                lines.append(f"J = {reading}: " + ", ".join(f"{k}: {'yes' if v else 'no'}" for k, v in res.items()))
    _emit(ctx, rep.to_json(), lines, out)
    return OK if rep.passed else NEGATIVE


def _attach_values(argv: list[str]) -> list[str]:
    """Join ``--rel-x -3,2`` into ``--rel-x=-3,2`` so argparse does not
    take the negative value for an option."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--rel-x", "--rel-y") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _attach_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ctx = Context(args)
        return run(ctx, out)
    except ElementSyntaxError as exc:
        err.write(f"error: {exc}\n{exc.pointer()}\n")
        return USAGE
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
