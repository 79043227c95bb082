"""Polytope files, built-in fixtures, batch verification and reports."""

from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from .fano import PolytopeError
from .invariants import (
    ConjectureVerdict,
    InvariantReport,
    build_report,
    check_mukai,
    check_total_index_conjecture,
)

CSV_COLUMNS = (
    "name", "dim", "n_rays", "rho", "fano_index", "pseudo_index", "tau",
    "mukai_defect", "total_defect", "is_product", "factors", "certificate",
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_REJECT = 2


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class MalformedHeader(ParseError):
    pass


class RaggedRow(ParseError):
    pass


class NonIntegerEntry(ParseError):
    pass


class UnknownFixture(KeyError):
    pass


@dataclass(frozen=True)
class PolytopeRecord:
    name: str
    dim: int
    vertices: Tuple[Tuple[int, ...], ...]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if any(len(v) != self.dim for v in self.vertices):
            raise RaggedRow(f"record {self.name}: vertex rows must have length {self.dim}")


# -- parsing ---------------------------------------------------------------

def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise NonIntegerEntry(f"not an integer: {token!r}", line) from None


def _parse_plain(text: str, transpose: bool, source: str) -> List[PolytopeRecord]:
    records = []
    stem = Path(source).stem if source else "polytope"
    name = None
    lines = iter(enumerate(text.splitlines(), start=1))
    for lineno, raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*name:\s*(\S.*)$", line)
            if m:
                name = m.group(1).strip()
            continue
        header = line.split()
        if len(header) != 2:
            raise MalformedHeader(f"expected 'rows cols', got {line!r}", lineno)
        try:
            nrows, ncols = (int(x) for x in header)
        except ValueError:
            raise MalformedHeader(f"expected two integers, got {line!r}", lineno) from None
        if nrows < 1 or ncols < 1:
            raise MalformedHeader(f"nonpositive size in {line!r}", lineno)
        rows = []
        while len(rows) < nrows:
            try:
                rowno, raw = next(lines)
            except StopIteration:
                raise MalformedHeader(f"header promises {nrows} rows, found {len(rows)}",
                                      lineno) from None
            row = raw.strip()
            if not row or row.startswith("#"):
                continue
            entries = [_int(tok, rowno) for tok in row.split()]
            if len(entries) != ncols:
                raise RaggedRow(f"expected {ncols} entries, got {len(entries)}", rowno)
            rows.append(tuple(entries))
        vertices = tuple(zip(*rows)) if transpose else tuple(rows)
        records.append(PolytopeRecord(
            name=name or f"{stem}:{len(records) + 1}",
            dim=len(vertices[0]),
            vertices=vertices,
            source=source,
        ))
        name = None
    return records


def _parse_structured(text: str, transpose: bool, source: str) -> List[PolytopeRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedHeader(exc.msg, exc.lineno) from None
    if isinstance(data, dict):
        data = data.get("polytopes", [data])
    if not isinstance(data, list):
        raise MalformedHeader("expected a list of polytope records")
    records = []
    for k, entry in enumerate(data, start=1):
        label = f"record {k}"
        if not isinstance(entry, dict) or "vertices" not in entry:
            raise MalformedHeader(f"{label}: missing 'vertices'")
        rows = entry["vertices"]
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise MalformedHeader(f"{label}: 'vertices' must be a nonempty list of lists")
        for r in rows:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise NonIntegerEntry(f"{label}: not an integer: {x!r}")
        if len({len(r) for r in rows}) != 1:
            raise RaggedRow(f"{label}: rows of different lengths")
        vertices = tuple(zip(*rows)) if transpose else tuple(tuple(r) for r in rows)
        dim = entry.get("dim", len(vertices[0]))
        if dim != len(vertices[0]):
            raise RaggedRow(f"{label}: dim {dim} does not match vertex length {len(vertices[0])}")
        name = entry.get("name") or f"{Path(source).stem if source else 'polytope'}:{k}"
        records.append(PolytopeRecord(str(name), dim, vertices, source))
    return records


def parse_polytope_text(text: str, format: str = "plain", transpose: bool = False,
                        source: str = "") -> List[PolytopeRecord]:
    if format == "plain":
        return _parse_plain(text, transpose, source)
    if format == "structured":
        return _parse_structured(text, transpose, source)
    raise ValueError(f"unknown format {format!r}")


def parse_polytope_file(path, format: str = "plain", transpose: bool = False) -> List[PolytopeRecord]:
    """Read every polytope record in ``path``.

    PLAIN files hold blocks of a header line "rows cols" followed by that
    many integer rows; rows are vertices unless ``transpose`` is set, in
    which case columns are.  A comment line "# name: <label>" names the
    next block.  STRUCTURED files are JSON with name, dim and vertices.
    """
    path = Path(path)
    return parse_polytope_text(path.read_text(), format, transpose, str(path))


def format_polytope_text(records: Iterable[PolytopeRecord], format: str = "plain") -> str:
    records = list(records)
    if format == "structured":
        payload = {"polytopes": [
            {"name": r.name, "dim": r.dim, "vertices": [list(v) for v in r.vertices]}
            for r in records
        ]}
        return json.dumps(payload, indent=2) + "\n"
    if format != "plain":
        raise ValueError(f"unknown format {format!r}")
    out = []
    for r in records:
        out.append(f"# name: {r.name}")
        out.append(f"{len(r.vertices)} {r.dim}")
        out.extend(" ".join(map(str, v)) for v in r.vertices)
    return "\n".join(out) + "\n"


# -- fixtures --------------------------------------------------------------

def projective_space(d: int) -> Tuple[Tuple[int, ...], ...]:
    units = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return tuple(units) + ((-1,) * d,)


def direct_sum(*factors: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Vertices of the free sum; its face fan is the product of the fans."""
    total = sum(len(f[0]) for f in factors)
    out = []
    offset = 0
    for f in factors:
        k = len(f[0])
        for v in f:
            out.append((0,) * offset + tuple(v) + (0,) * (total - offset - k))
        offset += k
    return tuple(out)


SURFACES = {
    "P2": ((1, 0), (0, 1), (-1, -1)),
    "P1xP1": ((1, 0), (0, 1), (-1, 0), (0, -1)),
    # blow-ups of P^2 in one, two, three torus-fixed points
    "dP8": ((1, 0), (1, 1), (0, 1), (-1, -1)),
    "dP7": ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1)),
    "dP6": ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)),
}

FIXTURE_ALIASES = {"F1": "dP8", "hexagon": "dP6"}

FIXTURE_GROUPS = ("surfaces", "fano3folds")

THREEFOLD_FILE = "smooth_toric_fano_3folds.txt"


def fixture_ids() -> List[str]:
    ids = [f"P{d}" for d in range(1, 5)] + list(SURFACES)
    ids += ["P1xP1xP1", "P2xP1", "P2xP2", "P1xP1xP1xP1", "P3xP1", "P2xP1xP1"]
    return sorted(set(ids), key=lambda s: (len(s), s)) + sorted(FIXTURE_ALIASES) + list(FIXTURE_GROUPS)


def builtin_fixture(fixture_id: str) -> PolytopeRecord:
    """Hardcoded vertex data; any product 'Pa x Pb x ...' is also accepted."""
    key = FIXTURE_ALIASES.get(fixture_id, fixture_id)
    if key in SURFACES:
        vertices = SURFACES[key]
    elif re.fullmatch(r"P[1-9]\d*(xP[1-9]\d*)*", key):
        dims = [int(part[1:]) for part in key.split("x")]
        vertices = direct_sum(*(projective_space(d) for d in dims))
    else:
        raise UnknownFixture(fixture_id)
    return PolytopeRecord(fixture_id, len(vertices[0]), vertices, f"fixture:{fixture_id}")


def fixture_group(group: str) -> List[PolytopeRecord]:
    if group == "surfaces":
        return [builtin_fixture(k) for k in SURFACES]
    if group == "fano3folds":
        text = resources.files("toricindex").joinpath("data", THREEFOLD_FILE).read_text()
        return parse_polytope_text(text, source=f"fixture:{THREEFOLD_FILE}")
    raise UnknownFixture(group)


def load_fixtures(fixture_id: str) -> List[PolytopeRecord]:
    if fixture_id in FIXTURE_GROUPS:
        return fixture_group(fixture_id)
    return [builtin_fixture(fixture_id)]


# -- batch -----------------------------------------------------------------

@dataclass(frozen=True)
class BatchEntry:
    record: PolytopeRecord
    report: Optional[InvariantReport] = None
    total_verdict: Optional[ConjectureVerdict] = None
    mukai_verdict: Optional[ConjectureVerdict] = None
    error: Optional[str] = None
    error_type: Optional[str] = None

    @property
    def rejected(self) -> bool:
        return self.error is not None

    @property
    def violation(self) -> bool:
        return not self.rejected and not (self.total_verdict.ok and self.mukai_verdict.ok)


@dataclass(frozen=True)
class BatchSummary:
    checked: int = 0
    equality_cases: int = 0
    violations: int = 0
    rejects: int = 0


@dataclass(frozen=True)
class BatchReport:
    entries: Tuple[BatchEntry, ...]
    summary: BatchSummary

    @property
    def exit_code(self) -> int:
        if self.summary.violations:
            return EXIT_VIOLATION
        if self.summary.rejects:
            return EXIT_REJECT
        return EXIT_OK


def _process(record: PolytopeRecord, oracle: bool) -> BatchEntry:
    try:
        report = build_report(record.vertices, name=record.name, oracle=oracle)
    except PolytopeError as exc:
        return BatchEntry(record, error=str(exc), error_type=type(exc).__name__)
    if oracle and report.oracle_tau != report.tau:
        return BatchEntry(record, report, error=f"dynamic program gave tau={report.tau}, "
                          f"brute force gave {report.oracle_tau}", error_type="OracleMismatch")
    return BatchEntry(record, report, check_total_index_conjecture(report), check_mukai(report))


def run_batch(records: Sequence[PolytopeRecord], oracle: bool = False, jobs: int = 1) -> BatchReport:
    """Verify every record; invalid polytopes become rejects, never exceptions.

    Entries keep input order regardless of ``jobs``.
    """
    records = list(records)
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = tuple(pool.map(_process, records, [oracle] * len(records)))
    else:
        entries = tuple(_process(r, oracle) for r in records)
    summary = BatchSummary(
        checked=sum(not e.rejected for e in entries),
        equality_cases=sum(not e.rejected and e.total_verdict.equality_case for e in entries),
        violations=sum(e.violation for e in entries),
        rejects=sum(e.rejected for e in entries),
    )
    return BatchReport(entries, summary)


# -- reports ---------------------------------------------------------------

def _tuple_text(x: Sequence[int]) -> str:
    return "(" + ",".join(map(str, x)) + ")"


def _csv_row(r: InvariantReport) -> list:
    return [
        r.name, r.dim, r.n_rays, r.rho, r.fano_index, r.pseudo_index, r.tau,
        r.mukai_defect, r.total_defect, "true" if r.is_product else "false",
        "x".join(map(str, r.factors)) if r.factors else "",
        ";".join(_tuple_text(p) for p in r.certificate.parts),
    ]


def _verdict_dict(v: ConjectureVerdict) -> dict:
    return {
        "inequality_holds": v.inequality_holds,
        "equality_case": v.equality_case,
        "classifier_agrees": v.classifier_agrees,
        "violation_detail": v.violation_detail,
    }


def report_dict(r: InvariantReport) -> dict:
    return {
        "name": r.name,
        "dim": r.dim,
        "n_rays": r.n_rays,
        "rho": r.rho,
        "fano_index": r.fano_index,
        "pseudo_index": r.pseudo_index,
        "tau": r.tau,
        "certificate": [list(p) for p in r.certificate.parts],
        "mukai_defect": r.mukai_defect,
        "total_defect": r.total_defect,
        "is_product": r.is_product,
        "factors": list(r.factors) if r.factors else None,
        "basis_rays": list(r.basis_rays),
    }


def write_report(batch: BatchReport, format: str = "csv", verdicts: bool = True) -> str:
    """Serialize a batch; rejects appear only in the structured form."""
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for e in batch.entries:
            if not e.rejected:
                writer.writerow(_csv_row(e.report))
        return buf.getvalue()
    if format in ("json", "structured"):
        entries = []
        for e in batch.entries:
            if e.rejected:
                entries.append({"name": e.record.name, "source": e.record.source,
                                "error_type": e.error_type, "error": e.error})
                continue
            item = report_dict(e.report)
            if verdicts:
                item["total_index_verdict"] = _verdict_dict(e.total_verdict)
                item["mukai_verdict"] = _verdict_dict(e.mukai_verdict)
            entries.append(item)
        payload = {"entries": entries, "summary": vars(batch.summary)}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown report format {format!r}")
