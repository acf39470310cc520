"""JSON documents for matroids, split reports and certificates; DOT for base graphs.

A matroid document carries ``"format": "matroid/v1"`` and exactly one form::

    {"format": "matroid/v1", "n": 4, "bases": [[1, 2], [1, 3]]}
    {"format": "matroid/v1", "uniform": {"n": 4, "r": 2}}
    {"format": "matroid/v1", "graphic": {"vertices": 3, "edges": [[1, 2], [2, 3]]}}
    {"format": "matroid/v1", "gf2": {"rows": ["1000111", "0101011", "0011101"]}}
    {"format": "matroid/v1", "transversal": {"n": 3, "parts": [[1, 2], [3]]}}
    {"format": "matroid/v1", "lattice_path": {"m": 3, "r": 4, "P": "EEENNNN", "Q": "NENENEN"}}
    {"format": "matroid/v1", "direct_sum": [<doc>, <doc>]}
    {"format": "matroid/v1", "relax": {"base_doc": <doc>, "set": [3, 4, 5]}}
    {"format": "matroid/v1", "catalog": "fano"}

Nested documents may omit the format tag. Elements are 1-indexed throughout.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .base_graph import BaseGraph
from .errors import ParseError
from .matroid import Matroid, direct_sum, from_bases, relax, to_tuple
from .polytope import SplitHyperplane
from .splits import Certificate, SplitCandidate, VerificationReport, split_distinctness_key
from .zoo import GraphSpec, LatticePathSpec, catalog, from_gf2_matrix, graphic, lattice_path, transversal, uniform

FORMAT = "matroid/v1"
REPORT_FORMAT = "split-report/v1"
FORMS = ("bases", "uniform", "graphic", "gf2", "transversal", "lattice_path", "direct_sum", "relax", "catalog")


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def _need(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise ParseError(f"missing field {key!r}", where)
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise ParseError(f"field {key!r} has the wrong type", f"{where}.{key}")
    return val


def _int_lists(val: Any, where: str) -> list[list[int]]:
    if not isinstance(val, list):
        raise ParseError("expected a list of integer lists", where)
    out = []
    for i, item in enumerate(val):
        if not isinstance(item, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in item):
            raise ParseError("expected a list of integers", f"{where}[{i}]")
        out.append(item)
    return out


def from_document(doc: Any, where: str = "$", *, nested: bool = False) -> Matroid:
    if not isinstance(doc, dict):
        raise ParseError("a matroid document must be a JSON object", where)
    fmt = doc.get("format")
    if fmt is None and not nested:
        raise ParseError("missing format tag", where)
    if fmt is not None and fmt != FORMAT:
        raise ParseError(f"unsupported format {fmt!r}", f"{where}.format")
    present = [k for k in FORMS if k in doc]
    if "n" in doc and "bases" not in doc:
        present.append("n")
    forms = [k for k in present if k != "n"]
    if len(forms) != 1:
        raise ParseError(f"expected exactly one form, found {forms or 'none'}", where)
    form = forms[0]
    at = f"{where}.{form}"
    if form == "bases":
        n = _need(doc, "n", int, where)
        return from_bases(n, _int_lists(doc["bases"], at))
    body = doc[form]
    if form == "uniform":
        return uniform(_need(body, "n", int, at), _need(body, "r", int, at))
    if form == "graphic":
        edges = _int_lists(_need(body, "edges", list, at), f"{at}.edges")
        return graphic(GraphSpec(_need(body, "vertices", int, at), tuple(tuple(e) for e in edges)))
    if form == "gf2":
        rows = _need(body, "rows", list, at)
        return from_gf2_matrix(rows)
    if form == "transversal":
        return transversal(_int_lists(_need(body, "parts", list, at), f"{at}.parts"), _need(body, "n", int, at))
    if form == "lattice_path":
        spec = LatticePathSpec(
            _need(body, "m", int, at), _need(body, "r", int, at), _need(body, "P", str, at), _need(body, "Q", str, at)
        )
        return lattice_path(spec)
    if form == "direct_sum":
        if not isinstance(body, list) or len(body) != 2:
            raise ParseError("direct_sum takes a list of two documents", at)
        return direct_sum(
            from_document(body[0], f"{at}[0]", nested=True), from_document(body[1], f"{at}[1]", nested=True)
        )
    if form == "relax":
        base = from_document(_need(body, "base_doc", dict, at), f"{at}.base_doc", nested=True)
        return relax(base, _need(body, "set", list, at))
    if form == "catalog":
        if not isinstance(body, str):
            raise ParseError("catalog takes a name", at)
        return catalog(body)
    raise ParseError(f"unknown form {form!r}", where)  # pragma: no cover


def parse(text: str) -> Matroid:
    return from_document(_load(text))


def to_document(M: Matroid) -> dict:
    return {"format": FORMAT, "n": M.n, "bases": [list(b) for b in M.bases]}


def serialize(M: Matroid) -> str:
    return json.dumps(to_document(M))


def digest(M: Matroid) -> str:
    return hashlib.sha256(serialize(M).encode()).hexdigest()


def export_dot(G: BaseGraph, stats: dict | None = None) -> str:
    """Undirected DOT with one node per base, labelled by its elements."""
    lines = ["graph base_graph {"]
    for key, val in (stats or {}).items():
        lines.append(f"  // {key}: {json.dumps(val)}")
    for i, b in enumerate(G.vertices):
        label = "{" + ",".join(map(str, to_tuple(b))) + "}"
        lines.append(f'  v{i} [label="{label}"];')
    for i, j in G.edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- reports ------------------------------------------------------------------


def hyperplane_doc(H: SplitHyperplane | None):
    if H is None:
        return None
    return {"coefficients": list(H.coefficients), "level": H.level}


def report_doc(report: VerificationReport) -> dict:
    return {
        "verdict": report.overall,
        "checks": report.checks,
        "hyperplane": hyperplane_doc(report.hyperplane),
        "exchange_witnesses": {
            k: None if v is None else {"B1": list(v[0]), "B2": list(v[1]), "e": v[2]}
            for k, v in report.exchange_witnesses.items()
        },
        "crossing_edge": None if report.crossing_edge is None else [list(b) for b in report.crossing_edge],
        "facet": None
        if report.facet is None
        else {
            "ok": report.facet.ok,
            "intersection_dimension": report.facet.intersection_dimension,
            "polytope_dimension": report.facet.polytope_dimension,
        },
    }


def certificate_doc(cert: Certificate) -> dict:
    return {"kind": cert.kind, "evidence": cert.evidence}


def split_report(
    M: Matroid,
    cand: SplitCandidate,
    report: VerificationReport,
    certificates: list[Certificate] = (),
) -> dict:
    gp = cand.partition
    return {
        "format": REPORT_FORMAT,
        "input_digest": digest(M),
        "matroid": to_document(M),
        "source": cand.source,
        "parts": {
            "part1": [list(b) for b in cand.part1_bases],
            "part2": [list(b) for b in cand.part2_bases],
            "intersection": [list(b) for b in cand.intersection_bases],
        },
        "good_partition": None
        if gp is None
        else {
            "E1": sorted(gp.E1),
            "E2": sorted(gp.E2),
            "r1": gp.r1,
            "r2": gp.r2,
            "a1": gp.a1,
            "a2": gp.a2,
            "p2_mode": gp.p2_mode,
        },
        "presentations": _jsonable(cand.presentations),
        "hyperplane": hyperplane_doc(cand.hyperplane or report.hyperplane),
        "verification": report_doc(report),
        "distinctness_key": _jsonable(split_distinctness_key(cand)),
        "certificates": [certificate_doc(c) for c in certificates],
    }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def parse_report(text: str) -> tuple[Matroid, list, list, SplitHyperplane | None]:
    """Matroid, both parts and the stated hyperplane from a split report."""
    doc = _load(text)
    if not isinstance(doc, dict) or doc.get("format") != REPORT_FORMAT:
        raise ParseError(f"expected format {REPORT_FORMAT!r}")
    M = from_document(_need(doc, "matroid", dict, "$"), "$.matroid")
    if doc.get("input_digest") not in (None, digest(M)):
        raise ParseError("input digest does not match the embedded matroid", "$.input_digest")
    parts = _need(doc, "parts", dict, "$")
    part1 = _int_lists(_need(parts, "part1", list, "$.parts"), "$.parts.part1")
    part2 = _int_lists(_need(parts, "part2", list, "$.parts"), "$.parts.part2")
    H = None
    if doc.get("hyperplane"):
        h = doc["hyperplane"]
        H = SplitHyperplane(tuple(h["coefficients"]), h["level"])
    return M, part1, part2, H


def parse_family(text: str) -> tuple[int, list[list[int]]]:
    """A part document: explicit-form matroid document (not validated here)."""
    doc = _load(text)
    if not isinstance(doc, dict):
        raise ParseError("a part document must be a JSON object")
    if "bases" in doc and "n" in doc:
        return doc["n"], _int_lists(doc["bases"], "$.bases")
    M = from_document(doc)
    return M.n, [list(b) for b in M.bases]
