"""Analysis reports, machine-readable records, CSV output and figure data."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, fields
from typing import Iterable, Sequence

from .analysis import (EXACT_TOL, PHI, GsgVerdict, RamanujanReport,
                       classify_gsg, ramanujan_check)
from .errors import ParameterError
from .graph import Graph, comet, cycle, graph_props, path
from .search import free_tree_level_sequences, tree_from_levels, MAX_TREE_ORDER
from .spectra import (ExpansionBounds, SyncReport, adjacency_spectrum,
                      expansion_bounds, spectral_ratios, sync_ratio)

NA = "n/a"
SIG_DIGITS = 12


def fmt_float(x: float) -> float:
    """Round to 12 significant digits (stable textual form in JSON/CSV)."""
    if x == 0:
        return 0.0
    return float(f"{x:.{SIG_DIGITS}g}")


def _num(x):
    if x is None:
        return NA
    if isinstance(x, bool):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            return NA
        return fmt_float(x)
    return x


@dataclass(frozen=True)
class AnalysisReport:
    label: str
    n: int
    m: int
    is_regular: bool
    degree: int | None
    is_connected: bool
    is_bipartite: bool
    lambda1: float
    lambda2: float | None
    lambda_n: float
    w1: float | None
    w2: float | None
    gap: float | None
    bulk: float | None
    length: float | None
    gsg: GsgVerdict | None
    ramanujan: RamanujanReport | None
    sync: SyncReport | None
    expansion: ExpansionBounds | None

    def to_record(self) -> dict:
        """Flat, fixed-order record; absent analyses are marked ``"n/a"``."""
        rec = {"label": self.label}
        for name in ("n", "m", "is_regular", "degree", "is_connected", "is_bipartite",
                     "lambda1", "lambda2", "lambda_n", "w1", "w2", "gap", "bulk",
                     "length"):
            rec[name] = _num(getattr(self, name))
        g = self.gsg
        rec["gsg_deviation"] = _num(g.deviation) if g else NA
        rec["is_golden"] = g.is_golden if g else False
        rec["gsg_tol"] = _num(g.tol) if g else NA
        r = self.ramanujan
        rec["ramanujan_bound"] = _num(r.bound) if r else NA
        rec["ramanujan_lambda"] = _num(r.lambda_nontrivial) if r else NA
        rec["ramanujan_strict"] = r.strict_pass if r else NA
        rec["ramanujan_second"] = r.second_eigenvalue_pass if r else NA
        s = self.sync
        rec["sync_q"] = _num(s.q) if s else NA
        rec["sync_mu1"] = _num(s.mu1) if s else NA
        rec["sync_mu_low"] = _num(s.mu_second_smallest) if s else NA
        rec["sync_regular_identity"] = (NA if s is None or s.matches_adjacency_form is None
                                        else s.matches_adjacency_form)
        e = self.expansion
        rec["expansion_lower"] = _num(e.lower) if e else NA
        rec["expansion_upper"] = _num(e.upper) if e else NA
        return rec


def analyze_graph(g: Graph, label: str = "graph", tol: float = EXACT_TOL) -> AnalysisReport:
    props = graph_props(g)
    spec = adjacency_spectrum(g)
    ratios = spectral_ratios(spec) if g.n >= 2 else None
    gsg = classify_gsg(ratios, tol) if ratios else None
    ram = sync = exp = None
    if props.is_regular and props.is_connected and props.degree >= 1:
        ram = ramanujan_check(g, spectrum=spec)
        exp = expansion_bounds(g, spectrum=spec)
    if props.is_connected and g.n >= 2:
        sync = sync_ratio(g)
    return AnalysisReport(
        label=label, n=props.n, m=props.m, is_regular=props.is_regular,
        degree=props.degree, is_connected=props.is_connected,
        is_bipartite=props.is_bipartite, lambda1=spec.lambda1,
        lambda2=spec.lambda2 if g.n >= 2 else None, lambda_n=spec.lambda_n,
        w1=ratios.w1 if ratios else None, w2=ratios.w2 if ratios else None,
        gap=ratios.gap if ratios else None, bulk=ratios.bulk if ratios else None,
        length=ratios.length if ratios else None,
        gsg=gsg, ramanujan=ram, sync=sync, expansion=exp,
    )


def record_line(record: dict) -> str:
    """One JSON line; key order is the record's insertion order."""
    return json.dumps(record, ensure_ascii=True, separators=(", ", ": "))


def header_line(kind: str, **extra) -> str:
    return record_line({"record": "header", "kind": kind, "phi": fmt_float(PHI), **extra})


def format_table(report: AnalysisReport) -> str:
    rec = report.to_record()
    width = max(len(k) for k in rec)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in rec.items())


def records_to_csv(rows: Iterable[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        out = []
        for c in columns:
            v = row.get(c)
            if v is None or v == NA:
                out.append("")
            elif isinstance(v, float):
                out.append(repr(fmt_float(v)))
            else:
                out.append(str(v))
        writer.writerow(out)
    return buf.getvalue()


SCAN_COLUMNS = ("rank", "spec", "n", "m", "gap", "w1", "w2", "deviation", "is_golden")


def scan_rows(records) -> list[dict]:
    return [{f.name: getattr(r, f.name) for f in fields(r)} for r in records]


# --------------------------------------------------------------------------
# Figure data
# --------------------------------------------------------------------------

FIGURES = ("1a", "1b", "5", "6")


def _ratio_row(g: Graph, **extra) -> dict:
    r = spectral_ratios(adjacency_spectrum(g))
    return {**extra, "gap": r.gap, "w1": r.w1, "w2": r.w2, "phi": PHI}


def figure_data(figure: str, max_n: int) -> tuple[list[str], list[dict]]:
    """Columns and rows behind the cycle (1a), path (1b), scatter-vs-gap (5)
    and comet (6) plots."""
    if figure == "1a":
        if max_n < 3:
            raise ParameterError("figure 1a needs max_n >= 3")
        return (["n", "w1", "w2", "phi"],
                [_ratio_row(cycle(n), n=n) for n in range(3, max_n + 1)])
    if figure == "1b":
        if max_n < 2:
            raise ParameterError("figure 1b needs max_n >= 2")
        return (["n", "w1", "w2", "phi"],
                [_ratio_row(path(n), n=n) for n in range(2, max_n + 1)])
    if figure == "6":
        if max_n < 5:
            raise ParameterError("figure 6 needs max_n >= 5 (comets Cm(q,1), q >= 3)")
        return (["n", "q", "w1", "w2", "phi"],
                [_ratio_row(comet(q, 1), n=q + 2, q=q) for q in range(3, max_n - 1)])
    if figure == "5":
        if max_n < 2:
            raise ParameterError("figure 5 needs max_n >= 2")
        rows = []
        for n in range(2, min(max_n, MAX_TREE_ORDER) + 1):
            for levels in free_tree_level_sequences(n):
                label = "".join(str(x) if x < 10 else chr(87 + x) for x in levels)
                rows.append(_ratio_row(tree_from_levels(levels), group="tree", n=n,
                                       label=label))
        for label, g in _cubic_samples(max_n):
            rows.append(_ratio_row(g, group="cubic", n=g.n, label=label))
        return ["group", "label", "n", "gap", "w1", "w2", "phi"], rows
    raise ParameterError(f"unknown figure {figure!r}; choose from {', '.join(FIGURES)}")


def _cubic_samples(max_n: int):
    from .graph import generalized_petersen, moebius_ladder, named, prism

    out = []
    for n in range(4, max_n + 1, 2):
        out.append((f"moebius_ladder(n={n})", moebius_ladder(n)))
        if n >= 6:
            out.append((f"prism(n={n})", prism(n)))
    for half in range(3, max_n // 2 + 1):
        for k in range(1, (half + 1) // 2):
            out.append((f"generalized_petersen(k={k}; n={half})",
                        generalized_petersen(half, k)))
    for name in ("petersen", "heawood", "mcgee"):
        g = named(name)
        if g.n <= max_n:
            out.append((f"named(name={name})", g))
    return out
