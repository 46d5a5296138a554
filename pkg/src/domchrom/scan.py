"""Streamed scanning of graph6 input: per-graph checks, JSONL records,
CSV summaries, resumable checkpoints, and the minimum-order survey.

Records are written in input order even when per-graph checks fan out to a
process pool, so identical inputs yield byte-identical outputs at any job
count. Checkpoints are written atomically (write-new-then-rename) and bind
to the source via an identity string; resuming replays the aggregates and
truncates the record file to the checkpointed byte count.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Collection, Iterable, Mapping

from .enumeration import MAX_BUILTIN_ORDER, enumerate_connected
from .graph6 import Graph6Error, iter_graph6_lines, parse_graph6, to_graph6
from .graphs import Graph, GraphError, is_connected
from .invariants import compute_report, invariant_values
from .planarity import lr_is_planar
from .structure import check_theorem1, is_in_class_d3

KNOWN_CHECKS = ("invariants", "planarity", "d3-membership", "theorem1")

CONJECTURE_READING = (
    "minimum order of any D(k) graph; the literal statement quantifies only "
    "over the named constructions, for which non-existence below the bound "
    "is definitional"
)


class ScanError(GraphError):
    pass


@dataclass(frozen=True)
class ScanRecord:
    index: int
    graph6: str
    n: int
    edge_count: int
    fields: Mapping[str, object]

    def to_json_line(self) -> str:
        payload = {
            "index": self.index,
            "graph6": self.graph6,
            "n": self.n,
            "edge_count": self.edge_count,
        }
        payload.update(self.fields)
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


@dataclass
class ScanSummary:
    source_id: str
    checks: tuple[str, ...]
    total: int = 0
    skipped: list[list[int]] = field(default_factory=list)  # [record index, source line]
    dk_counts: dict[int, int] = field(default_factory=dict)
    dk_min_n: dict[int, int] = field(default_factory=dict)
    dk_first_graph6: dict[int, str] = field(default_factory=dict)

    def absorb(self, record: ScanRecord) -> None:
        self.total += 1
        dk = record.fields.get("dk")
        if dk is not None:
            dk = int(dk)
            self.dk_counts[dk] = self.dk_counts.get(dk, 0) + 1
            if dk not in self.dk_min_n or record.n < self.dk_min_n[dk]:
                self.dk_min_n[dk] = record.n
            self.dk_first_graph6.setdefault(dk, record.graph6)

    def to_csv(self) -> str:
        lines = ["k,count,min_n,first_graph6"]
        for k in sorted(self.dk_counts):
            lines.append(
                f"{k},{self.dk_counts[k]},{self.dk_min_n[k]},{self.dk_first_graph6[k]}"
            )
        lines.append(f"total,{self.total},,")
        return "\n".join(lines) + "\n"

    def to_state(self) -> dict:
        return {
            "total": self.total,
            "skipped": list(self.skipped),
            "dk_counts": {str(k): v for k, v in sorted(self.dk_counts.items())},
            "dk_min_n": {str(k): v for k, v in sorted(self.dk_min_n.items())},
            "dk_first_graph6": {
                str(k): v for k, v in sorted(self.dk_first_graph6.items())
            },
        }

    @staticmethod
    def from_state(source_id: str, checks: tuple[str, ...], state: dict) -> "ScanSummary":
        summary = ScanSummary(source_id=source_id, checks=checks)
        summary.total = state["total"]
        summary.skipped = list(state["skipped"])
        summary.dk_counts = {int(k): v for k, v in state["dk_counts"].items()}
        summary.dk_min_n = {int(k): v for k, v in state["dk_min_n"].items()}
        summary.dk_first_graph6 = dict(
            (int(k), v) for k, v in state["dk_first_graph6"].items()
        )
        return summary


@dataclass(frozen=True)
class Checkpoint:
    source_id: str
    checks: tuple[str, ...]
    last_index: int
    records_bytes: int
    summary_state: dict

    def save(self, path: str | Path) -> None:
        path = Path(path)
        payload = {
            "source_id": self.source_id,
            "checks": list(self.checks),
            "last_index": self.last_index,
            "records_bytes": self.records_bytes,
            "summary_state": self.summary_state,
        }
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")
        os.replace(tmp, path)

    @staticmethod
    def load(path: str | Path) -> "Checkpoint":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return Checkpoint(
            source_id=data["source_id"],
            checks=tuple(data["checks"]),
            last_index=data["last_index"],
            records_bytes=data["records_bytes"],
            summary_state=data["summary_state"],
        )


def source_id_for_file(path: str | Path) -> str:
    digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
    return f"file:sha256:{digest}"


def source_id_for_builtin(n: int) -> str:
    return f"builtin:n={n}"


# ---------------------------------------------------------------------------
# Per-graph evaluation (runs in worker processes)


def _evaluate(
    args: tuple[int, int, str, tuple[str, ...]]
) -> tuple[int, int, str, dict | None, str | None]:
    index, lineno, line, checks = args
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return index, lineno, line, None, str(exc)
    fields: dict[str, object] = {}
    if "invariants" in checks or "theorem1" in checks:
        values = invariant_values(g)
        fields.update(values)
        gamma, chi, chi_d = values["gamma"], values["chi"], values["chi_d"]
        fields["dk"] = gamma if gamma == chi == chi_d else None
    if "planarity" in checks:
        fields["planar"] = lr_is_planar(g)
    if "d3-membership" in checks:
        fields["d3_member"] = is_in_class_d3(g) is not None
    if "theorem1" in checks:
        if fields.get("dk") is None:
            fields["theorem1_ok"] = None
        else:
            result = check_theorem1(g)
            fields["theorem1_ok"] = bool(
                result.all_classes_dominated
                and result.every_vertex_dominates_exactly_one
            )
    return index, lineno, line, {"n": g.n, "edge_count": g.edge_count(), "fields": fields}, None


def _iter_results(payloads, jobs: int):
    if jobs <= 1:
        for item in payloads:
            yield _evaluate(item)
    else:
        with multiprocessing.Pool(processes=jobs) as pool:
            yield from pool.imap(_evaluate, payloads, chunksize=8)


# ---------------------------------------------------------------------------
# Streaming scan


def scan_stream(
    lines: Iterable[str],
    checks: Collection[str] = ("invariants",),
    out_path: str | Path | None = None,
    summary_path: str | Path | None = None,
    checkpoint_path: str | Path | None = None,
    source_id: str = "",
    strict: bool = False,
    jobs: int = 1,
    checkpoint_every: int = 256,
    records_sink: list | None = None,
) -> ScanSummary:
    """Scan a graph6 line stream, one record per graph, in input order.

    Unknown checks are rejected. Parse failures abort under strict=True,
    otherwise the record index and source line number go to the summary's
    skipped list. When a checkpoint exists for the same source, the scan
    resumes after the last completed record and reproduces the aggregates
    exactly.
    """
    checks_t = tuple(c for c in KNOWN_CHECKS if c in set(checks))
    unknown = set(checks) - set(KNOWN_CHECKS)
    if unknown:
        raise ScanError(f"unknown checks: {sorted(unknown)}")

    resume_from = -1
    summary = ScanSummary(source_id=source_id, checks=checks_t)
    records_bytes = 0
    if checkpoint_path is not None and Path(checkpoint_path).exists():
        cp = Checkpoint.load(checkpoint_path)
        if cp.source_id != source_id or cp.checks != checks_t:
            raise ScanError(
                "checkpoint does not match this source/checks: "
                f"{cp.source_id!r} vs {source_id!r}"
            )
        resume_from = cp.last_index
        records_bytes = cp.records_bytes
        summary = ScanSummary.from_state(source_id, checks_t, cp.summary_state)

    out_file = None
    if out_path is not None:
        out_path = Path(out_path)
        if resume_from >= 0:
            if not out_path.exists():
                raise ScanError(
                    f"checkpoint expects an existing record file at {out_path}"
                )
            out_file = open(out_path, "r+", encoding="utf-8")
            out_file.truncate(records_bytes)
            out_file.seek(records_bytes)
        else:
            out_file = open(out_path, "w", encoding="utf-8")
            records_bytes = 0

    def payloads():
        index = -1
        for lineno, payload in iter_graph6_lines(lines):
            index += 1
            if index <= resume_from:
                continue
            yield index, lineno, payload, checks_t

    last_index = resume_from
    try:
        for index, lineno, line, result, error in _iter_results(payloads(), jobs):
            if error is not None:
                if strict:
                    raise ScanError(f"line {lineno} (record {index}): {error}")
                summary.skipped.append([index, lineno])
                last_index = index
                continue
            record = ScanRecord(
                index=index,
                graph6=line,
                n=result["n"],
                edge_count=result["edge_count"],
                fields=result["fields"],
            )
            summary.absorb(record)
            if records_sink is not None:
                records_sink.append(record)
            if out_file is not None:
                text = record.to_json_line() + "\n"
                out_file.write(text)
                records_bytes += len(text.encode("utf-8"))
            last_index = index
            if (
                checkpoint_path is not None
                and (index + 1) % checkpoint_every == 0
            ):
                if out_file is not None:
                    out_file.flush()
                Checkpoint(
                    source_id, checks_t, last_index, records_bytes, summary.to_state()
                ).save(checkpoint_path)
    finally:
        if out_file is not None:
            out_file.close()

    if checkpoint_path is not None:
        Checkpoint(
            source_id, checks_t, last_index, records_bytes, summary.to_state()
        ).save(checkpoint_path)
    if summary_path is not None:
        Path(summary_path).write_text(summary.to_csv(), encoding="utf-8")
    return summary


# ---------------------------------------------------------------------------
# Minimum-order survey


def min_order_scan(
    k: int,
    n_max: int,
    sources: Mapping[int, Iterable[str]] | None = None,
) -> dict:
    """Smallest order carrying any D(k) graph within the scanned range.

    Orders 1..MAX_BUILTIN_ORDER come from the built-in enumeration; larger
    orders need entries in `sources` (graph6 lines, assumed to be complete
    non-isomorphic connected enumerations; disconnected lines are skipped).
    Orders with no source mark the survey partial. The adopted reading of
    the minimum-order question is carried in the output.
    """
    if k < 2:
        raise GraphError(f"survey requires k >= 2, got {k}")
    sources = sources or {}
    orders_scanned: dict[int, int] = {}
    partial_orders: list[int] = []
    witness_graph6: str | None = None
    smallest: int | None = None

    for n in range(1, n_max + 1):
        graphs: Iterable[Graph]
        if n <= MAX_BUILTIN_ORDER:
            graphs = enumerate_connected(n)
        elif n in sources:
            graphs = (parse_graph6(line) for _ln, line in iter_graph6_lines(sources[n]))
        else:
            partial_orders.append(n)
            continue
        count = 0
        hit: Graph | None = None
        for g in graphs:
            if g.n != n:
                raise ScanError(f"source for order {n} produced a graph of order {g.n}")
            if not is_connected(g):
                continue
            count += 1
            values = invariant_values(g, early_exit_k=k)
            if (
                values.get("gamma") == k
                and values.get("chi") == k
                and values.get("chi_d") == k
            ):
                hit = g
                break
        orders_scanned[n] = count
        if hit is not None:
            # re-verify through the full solvers before reporting
            report = compute_report(hit)
            if report.dk != k:
                raise AssertionError("fast path and full solvers disagree; bug")
            smallest = n
            witness_graph6 = to_graph6(hit)
            break

    return {
        "reading": CONJECTURE_READING,
        "k": k,
        "n_max": n_max,
        "smallest_order": smallest,
        "witness_graph6": witness_graph6,
        "complete": not partial_orders,
        "partial_orders": partial_orders,
        "orders_scanned": orders_scanned,
    }
