"""Exhaustive coarse classification of permutation unitaries.

For each permutation of the level-r words (r = 2 or 3) the sweep
decides one of three labels:

  automorphism            rho^n = id on generators for some n <= order_bound
  reducible-witness-found nontrivial commutant element at some level <= depth
  unknown                 neither certificate exists within the bounds

Both positive labels carry checkable witnesses; "unknown" is an honest
search-bound answer, not a verdict.  No index is ever reported here:
the dimension argument behind the index computation is specific to
rank 2, so the rank-3 sweep stays purely qualitative.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from itertools import islice, permutations

from . import _accel
from .endos import NOT_FOUND_WITHIN_BOUND, _perm_order
from .errors import RankUnsupported, UnknownFormat
from .perms import PermSpec

AUTOMORPHISM = "automorphism"
REDUCIBLE = "reducible-witness-found"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class SweepRow:
    one_line: str
    cycles: str
    property: str


def _decide(images: tuple, rank: int, order_bound: int, depth: int) -> SweepRow:
    spec = PermSpec(rank, images)
    if _perm_order(spec, order_bound) is not NOT_FOUND_WITHIN_BOUND:
        prop = AUTOMORPHISM
    else:
        prop = UNKNOWN
        mapping = list(images)
        for k in range(1, depth + 1):
            _, free = _accel.commutant_labels(mapping, rank, k)
            if free > 1:
                prop = REDUCIBLE
                break
    return SweepRow(
        one_line="".join(str(v + 1) for v in images),
        cycles=spec.cycle_notation(),
        property=prop,
    )


def _decide_star(args) -> SweepRow:
    return _decide(*args)


def sweep(
    rank: int,
    order_bound: int = 4,
    depth: int = 2,
    limit: int | None = None,
    jobs: int = 1,
) -> list[SweepRow]:
    """Rows for every rank-`rank` permutation, lexicographic one-line order."""
    if rank not in (2, 3):
        raise RankUnsupported(f"sweep supports rank 2 or 3, got {rank}")
    perms = permutations(range(1 << rank))
    if limit is not None:
        perms = islice(perms, limit)
    work = ((images, rank, order_bound, depth) for images in perms)
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            return list(pool.imap(_decide_star, work, chunksize=256))
    return [_decide_star(w) for w in work]


def render_sweep(rows: list[SweepRow], format: str = "csv") -> str:
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("one_line", "cycles", "property"))
        for r in rows:
            writer.writerow((r.one_line, r.cycles, r.property))
        return buf.getvalue()
    if format == "json":
        payload = [
            {"one_line": r.one_line, "cycles": r.cycles, "property": r.property}
            for r in rows
        ]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if format == "markdown":
        lines = ["| one_line | cycles | property |", "| --- | --- | --- |"]
        lines.extend(f"| {r.one_line} | {r.cycles} | {r.property} |" for r in rows)
        return "\n".join(lines) + "\n"
    raise UnknownFormat(f"format {format!r} not in ['csv', 'json', 'markdown']")


def tally(rows: list[SweepRow]) -> dict:
    counts: dict[str, int] = {AUTOMORPHISM: 0, REDUCIBLE: 0, UNKNOWN: 0}
    for r in rows:
        counts[r.property] += 1
    return counts
