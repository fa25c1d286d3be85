"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 inconclusive or
internal consistency error, 64 usage error.  All behaviour is set by
flags; the only file ever written is the report named by --out.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .classify import classify, verify_paper_relations
from .endos import PermEndomorphism
from .errors import (
    ConsistencyViolation,
    InconclusiveError,
    IndexOutOfRange,
    NoStabilization,
    RankUnsupported,
    UnknownFormat,
    WordError,
)
from .perms import parse_perm
from .sweep import render_sweep, sweep
from .table import build_table, render, single_row_doc
from .words import render as render_element
from .xi import xi_subspace

USAGE_ERROR = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_classify(args) -> int:
    spec = parse_perm(args.perm, rank=2)
    c = classify(spec, depth_cap=args.depth, rank_bound=args.rank_bound)
    _emit(render(single_row_doc(c), args.format), args.out)
    return 0


def _cmd_table(args) -> int:
    doc = build_table(
        depth_cap=args.depth,
        rank_bound=args.rank_bound,
        jobs=args.jobs,
        timing=args.timing,
    )
    _emit(render(doc, args.format), args.out)
    return 0


def _cmd_xi(args) -> int:
    spec = parse_perm(args.perm, rank=2)
    cert = xi_subspace(PermEndomorphism(spec))
    lines = [
        f"permutation: {spec.cycle_notation()}",
        f"chain dims: {' '.join(str(d) for d in cert.chain_dims)}",
        f"xi dim: {cert.xi.dim}",
        f"square closed: {cert.square_closed}",
        f"condition (a): {cert.condition_a}",
        f"condition (b): {cert.condition_b}",
    ]
    if cert.index:
        lines.append(f"index: {cert.index}")
    else:
        lines.append(f"index: inapplicable (failed: {', '.join(cert.index.failed)})")
    if args.show_basis:
        lines.append("basis:")
        lines.extend(f"  {render_element(b)}" for b in cert.basis_elements())
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if cert.index else 2


def _cmd_verify_paper(args) -> int:
    report = verify_paper_relations()
    lines = []
    for chk in report.checks:
        mark = "ok  " if chk.ok else "FAIL"
        detail = f"index {chk.derived_index} = {chk.direct_index}"
        if chk.derived_index is None:
            detail = f"index (direct) {chk.direct_index}"
        lines.append(f"{mark} {chk.name}  [{detail}]")
    lines.append(
        "all identities hold" if report.all_ok else "verification mismatch"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.all_ok else 1


def _cmd_sweep(args) -> int:
    rows = sweep(
        args.rank,
        order_bound=args.order_bound,
        depth=args.depth,
        limit=args.limit,
        jobs=args.jobs,
    )
    _emit(render_sweep(rows, args.format), args.out)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="o2endo", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one permutation")
    p.add_argument("--perm", required=True, help='cycles, e.g. "(12)(34)" or "id"')
    p.add_argument("--depth", type=int, default=3, help="commutant search depth")
    p.add_argument("--rank-bound", type=int, default=2, dest="rank_bound")
    p.add_argument("--format", default="markdown",
                   choices=["markdown", "csv", "json", "latex"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table", help="regenerate the full 24-row table")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--rank-bound", type=int, default=2, dest="rank_bound")
    p.add_argument("--format", default="markdown",
                   choices=["markdown", "csv", "json", "latex"])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true",
                   help="record wall time in metadata (breaks byte determinism)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("xi", help="index subspace chain for one permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--show-basis", action="store_true", dest="show_basis")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_xi)

    p = sub.add_parser("verify-paper", help="check the composition identities")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify_paper)

    p = sub.add_parser("sweep", help="coarse exhaustive sweep at rank 2 or 3")
    p.add_argument("--rank", type=int, default=3, choices=[2, 3])
    p.add_argument("--order-bound", type=int, default=4, dest="order_bound")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", default="csv", choices=["csv", "json", "markdown"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordError, UnknownFormat, RankUnsupported) as exc:
        print(f"o2endo: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (InconclusiveError, ConsistencyViolation, NoStabilization,
            IndexOutOfRange) as exc:
        print(f"o2endo: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
