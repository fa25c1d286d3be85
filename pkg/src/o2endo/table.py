"""The 24-row classification table and its renderings.

Row order and the placement of the "(≃ …)" annotations are fixed
presentation data (the annotated member of a merged pair is not
derivable from the partition alone); the partition itself is computed,
and the frozen annotations are cross-checked against it on every
build.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from . import __version__
from .classify import Classification, classify
from .equivalence import equivalence_classes
from .errors import ConsistencyViolation, UnknownFormat
from .perms import PermSpec, parse_perm, table_order_specs
from .words import render as render_element

# annotated row -> partner row (cycle keys); "id" names the identity row
ANNOTATIONS = {
    "(134)": "(142)",
    "(243)": "(123)",
    "(1234)": "(24)",
    "(1324)": "(12)",
    "(1423)": "(34)",
    "(1432)": "(13)",
    "(12)(34)": "(13)(24)",
    "(14)(23)": "id",
}

CSV_HEADER = ("name", "image_s1", "image_s2", "property", "ht", "ht_diag", "index")


@dataclass(frozen=True)
class TableRow:
    name: str
    image_s1: str
    image_s2: str
    property: str
    ht_label: str
    ht_diag_label: str
    index: int


@dataclass(frozen=True)
class ReportDoc:
    rows: tuple[TableRow, ...]
    certificates: tuple[dict, ...]
    metadata: dict = field(default_factory=dict)


def _rho_name(cycle_key: str) -> str:
    if cycle_key == "id":
        return "ρ_id = id"
    if cycle_key.count("(") > 1:
        return f"ρ_{cycle_key}"
    return f"ρ_{cycle_key.strip('()')}"


def _partner_name(cycle_key: str) -> str:
    if cycle_key == "id":
        return "id"
    if cycle_key.count("(") > 1:
        return f"ρ_{cycle_key}"
    return f"ρ_{cycle_key.strip('()')}"


def row_name(spec: PermSpec) -> str:
    key = spec.cycle_notation()
    name = _rho_name(key)
    partner = ANNOTATIONS.get(key)
    if partner is not None:
        name += f" (≃ {_partner_name(partner)})"
    return name


def _row_from_classification(c: Classification) -> TableRow:
    from .endos import PermEndomorphism

    img1, img2 = PermEndomorphism(c.perm).generator_images()
    return TableRow(
        name=row_name(c.perm),
        image_s1=render_element(img1),
        image_s2=render_element(img2),
        property=c.property,
        ht_label=c.entropy_label,
        ht_diag_label=c.diagonal_entropy_label,
        index=c.index,
    )


def _classify_worker(args) -> Classification:
    text, depth_cap, rank_bound = args
    return classify(parse_perm(text, rank=2), depth_cap, rank_bound)


def _check_partition(classes: list[list[PermSpec]]) -> None:
    """The computed classes must merge exactly the annotated pairs."""
    merged = set()
    for cls in classes:
        if len(cls) > 2:
            raise ConsistencyViolation(
                f"equivalence class larger than any annotated pair: "
                f"{[s.cycle_notation() for s in cls]}"
            )
        if len(cls) == 2:
            merged.add(frozenset(s.cycle_notation() for s in cls))
    frozen = {frozenset((a, b)) for a, b in ANNOTATIONS.items()}
    if merged != frozen:
        raise ConsistencyViolation(
            f"computed identifications {sorted(map(sorted, merged))} differ "
            f"from the recorded annotations"
        )


def build_table(
    depth_cap: int = 3,
    rank_bound: int = 2,
    jobs: int = 1,
    timing: bool = False,
) -> ReportDoc:
    """Classify all 24 rank-2 permutations and assemble the table."""
    t0 = time.perf_counter()
    specs = table_order_specs()
    work = [(s.cycle_notation(), depth_cap, rank_bound) for s in specs]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            classifications = pool.map(_classify_worker, work)
    else:
        classifications = [_classify_worker(w) for w in work]
    classes = equivalence_classes(rank_bound)
    _check_partition(classes)
    by_key = {c.perm.cycle_notation(): c for c in classifications}
    for cls in classes:
        props = {by_key[s.cycle_notation()].property for s in cls}
        indices = {by_key[s.cycle_notation()].index for s in cls}
        if len(props) > 1 or len(indices) > 1:
            raise ConsistencyViolation(
                f"class {[s.cycle_notation() for s in cls]} mixes verdicts "
                f"{props} / indices {indices}"
            )
    rows = tuple(_row_from_classification(c) for c in classifications)
    certificates = tuple(c.to_payload() for c in classifications)
    metadata = {
        "version": __version__,
        "depth_cap": depth_cap,
        "rank_bound": rank_bound,
        "timing_seconds": round(time.perf_counter() - t0, 3) if timing else None,
    }
    return ReportDoc(rows=rows, certificates=certificates, metadata=metadata)


def single_row_doc(c: Classification) -> ReportDoc:
    """One-row document for the single-permutation report."""
    return ReportDoc(
        rows=(_row_from_classification(c),),
        certificates=(c.to_payload(),),
        metadata={"version": __version__},
    )


_MD_HEADER = (
    "| ρ_σ | ρ_σ(s_1) | ρ_σ(s_2) | property | ht(ρ_σ) | ht(ρ_σ|_D_2) | Ind(ρ_σ) |"
)


def _render_markdown(doc: ReportDoc) -> str:
    lines = [_MD_HEADER, "|" + " --- |" * 7]
    for r in doc.rows:
        lines.append(
            f"| {r.name} | {r.image_s1} | {r.image_s2} | {r.property} "
            f"| {r.ht_label} | {r.ht_diag_label} | {r.index} |"
        )
    return "\n".join(lines) + "\n"


def _render_csv(doc: ReportDoc) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in doc.rows:
        writer.writerow(
            (r.name, r.image_s1, r.image_s2, r.property, r.ht_label,
             r.ht_diag_label, r.index)
        )
    return buf.getvalue()


def _render_json(doc: ReportDoc) -> str:
    payload = {
        "metadata": doc.metadata,
        "rows": [
            {
                "name": r.name,
                "image_s1": r.image_s1,
                "image_s2": r.image_s2,
                "property": r.property,
                "ht": r.ht_label,
                "ht_diag": r.ht_diag_label,
                "index": r.index,
            }
            for r in doc.rows
        ],
        "certificates": list(doc.certificates),
    }
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def from_json(text: str) -> ReportDoc:
    payload = json.loads(text)
    rows = tuple(
        TableRow(
            name=r["name"],
            image_s1=r["image_s1"],
            image_s2=r["image_s2"],
            property=r["property"],
            ht_label=r["ht"],
            ht_diag_label=r["ht_diag"],
            index=r["index"],
        )
        for r in payload["rows"]
    )
    return ReportDoc(
        rows=rows,
        certificates=tuple(payload["certificates"]),
        metadata=payload["metadata"],
    )


def _latex_row_name(r: TableRow) -> str:
    key_part = r.name.split(" (≃ ")
    base = key_part[0]
    if base == "ρ_id = id":
        tex = "\\rho_{\\mathrm{id}} = \\mathrm{id}"
    else:
        tex = "\\rho_{" + base[len("ρ_"):] + "}"
    if len(key_part) == 2:
        partner = key_part[1].rstrip(")")
        if partner == "id":
            ptex = "\\mathrm{id}"
        else:
            ptex = "\\rho_{" + partner[len("ρ_"):] + "}"
        tex += " \\ (\\simeq " + ptex + ")"
    return tex


def _render_latex(doc: ReportDoc) -> str:
    lines = [
        "\\begin{tabular}{|c|c|c|c|c|c|c|}",
        "\\hline \\rho_{\\sigma} & \\rho_{\\sigma}(s_{1}) & \\rho_{\\sigma}(s_{2})"
        " & \\mathrm{property} & \\mathrm{ht}(\\rho_\\sigma)"
        " & \\mathrm{ht}(\\rho_\\sigma|_{\\mathcal{D}_2})"
        " & \\mathrm{Ind}(\\rho_\\sigma)\\\\",
        "\\hline",
    ]
    for r in doc.rows:
        ht = "\\log 2" if r.ht_label == "log 2" else r.ht_label
        htd = "\\log 2" if r.ht_diag_label == "log 2" else r.ht_diag_label
        lines.append(
            f"{_latex_row_name(r)} & {r.image_s1} & {r.image_s2}"
            f" & \\mathrm{{{r.property}}} & {ht} & {htd} & {r.index}\\\\"
        )
    lines.append("\\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


_RENDERERS = {
    "markdown": _render_markdown,
    "csv": _render_csv,
    "json": _render_json,
    "latex": _render_latex,
}


def render(doc: ReportDoc, format: str = "markdown") -> str:
    """Deterministic text for a report; UnknownFormat on a bad name."""
    try:
        renderer = _RENDERERS[format]
    except KeyError:
        raise UnknownFormat(
            f"format {format!r} not in {sorted(_RENDERERS)}"
        ) from None
    return renderer(doc)
