"""Chord-sequence parsing, coefficient selection, and report serialization.

Input line format (one chord per nonempty, non-comment line):

    label: pc[,pc...]          e.g.  Cmaj: 0,4,7
    label: pc:weight,...       e.g.  CmajDbl: 0:2,4,7

`#` begins a comment.  Weights default to 1 and accumulate over repeated
pitch classes.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .core import PcDistribution, dft, magnitudes, phases
from .gestures import GesturePath, path_polyline
from .torus import (
    LocusKind,
    TorusLocus,
    TorusSelection,
    chord_locus,
    distance_table,
)


class ParseError(ValueError):
    """Malformed chord-sequence input; message carries the line number."""


@dataclass
class ChordEntry:
    label: str
    weights: dict[int, float]

    def distribution(self, modulus: int = 12) -> PcDistribution:
        values = [0j] * modulus
        for pc, w in self.weights.items():
            values[pc % modulus] += w
        return PcDistribution(modulus, tuple(values))


def parse_sequence(text: str, modulus: int = 12) -> list[ChordEntry]:
    """Parse a chord-sequence file into labelled weight maps."""
    entries: list[ChordEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected 'label: pcs', got {raw!r}")
        label, _, body = line.partition(":")
        label = label.strip()
        if not label:
            raise ParseError(f"line {lineno}: empty label")
        if label in seen:
            raise ParseError(f"line {lineno}: duplicate label {label!r}")
        weights: dict[int, float] = {}
        for item in body.split(","):
            item = item.strip()
            if not item:
                raise ParseError(f"line {lineno}: empty pitch-class entry")
            pc_text, _, w_text = item.partition(":")
            try:
                pc = int(pc_text) % modulus
            except ValueError:
                raise ParseError(
                    f"line {lineno}: bad pitch class {pc_text!r}"
                ) from None
            weight = 1.0
            if w_text:
                try:
                    weight = float(w_text)
                except ValueError:
                    raise ParseError(
                        f"line {lineno}: bad weight {w_text!r}"
                    ) from None
                if weight < 0:
                    raise ParseError(f"line {lineno}: negative weight {weight}")
            weights[pc] = weights.get(pc, 0.0) + weight
        if not weights:
            raise ParseError(f"line {lineno}: chord has no pitch classes")
        entries.append(ChordEntry(label, weights))
        seen.add(label)
    return entries


def serialize_entries(entries: Sequence[ChordEntry]) -> str:
    """Inverse of parse_sequence; parse(serialize(e)) == e."""
    lines = []
    for e in entries:
        parts = []
        for pc in sorted(e.weights):
            w = e.weights[pc]
            parts.append(str(pc) if w == 1 else f"{pc}:{w:g}")
        lines.append(f"{e.label}: {','.join(parts)}")
    return "\n".join(lines) + "\n"


def coefficient_ranking(
    chords: Sequence[PcDistribution],
) -> list[tuple[int, float]]:
    """Indices 1..c//2 ranked by the minimum magnitude over all chords."""
    if not chords:
        raise ValueError("chord list must be nonempty")
    c = chords[0].modulus
    mags = [magnitudes(dft(d)) for d in chords]
    scores = [(m, min(row[m] for row in mags)) for m in range(1, c // 2 + 1)]
    return sorted(scores, key=lambda pair: (-pair[1], pair[0]))


def recommend_selection(chords: Sequence[PcDistribution]) -> TorusSelection:
    """Torus whose two coefficients stay largest across the whole chord list."""
    ranking = coefficient_ranking(chords)
    return TorusSelection(ranking[0][0], ranking[1][0])


@dataclass
class AnalysisReport:
    modulus: int
    selection: TorusSelection
    labels: list[str]
    magnitude_rows: list[tuple[float, ...]]
    phase_rows: list[tuple[Optional[float], ...]]
    loci: list[TorusLocus]
    selection_ranking: list[tuple[int, float]]
    distances: Optional[np.ndarray] = None
    trajectories: dict[str, list[tuple[float, TorusLocus]]] = field(
        default_factory=dict
    )


def run_analysis(
    entries: Sequence[ChordEntry],
    modulus: int = 12,
    selection: Optional[TorusSelection] = None,
    include_distances: bool = False,
    path_bases: Sequence[ChordEntry] = (),
    path_resolution: int = 256,
) -> AnalysisReport:
    """Compute the full report for a chord list."""
    if not entries:
        raise ValueError("no chords to analyze")
    chords = [e.distribution(modulus) for e in entries]
    ranking = coefficient_ranking(chords)
    if selection is None:
        selection = TorusSelection(ranking[0][0], ranking[1][0])
    selection.validate_modulus(modulus)
    spectra = [dft(d) for d in chords]
    report = AnalysisReport(
        modulus=modulus,
        selection=selection,
        labels=[e.label for e in entries],
        magnitude_rows=[magnitudes(s) for s in spectra],
        phase_rows=[phases(s) for s in spectra],
        loci=[chord_locus(d, selection) for d in chords],
        selection_ranking=ranking,
    )
    if include_distances:
        report.distances = distance_table(chords, selection)
    for base in path_bases:
        path = GesturePath(base.distribution(modulus), resolution=path_resolution)
        report.trajectories[base.label] = path_polyline(path, selection)
    return report


def _fmt(x: Optional[float], degrees: bool = False) -> str:
    if x is None:
        return ""
    if degrees:
        x = math.degrees(x)
    return f"{x:.6f}"


def _locus_fields(locus: TorusLocus, degrees: bool = False) -> list[str]:
    return [
        locus.kind.value,
        _fmt(locus.angle_j, degrees),
        _fmt(locus.angle_k, degrees),
    ]


def report_csv_tables(report: AnalysisReport, degrees: bool = False) -> dict[str, str]:
    """Render the report as named CSV documents (fixed 6-decimal cells)."""
    half = report.modulus // 2
    tables: dict[str, str] = {}

    out = io.StringIO()
    out.write("label," + ",".join(f"mag_a{m}" for m in range(half + 1)) + "\n")
    for label, row in zip(report.labels, report.magnitude_rows):
        out.write(label + "," + ",".join(_fmt(v) for v in row[: half + 1]) + "\n")
    tables["magnitudes"] = out.getvalue()

    out = io.StringIO()
    out.write("label," + ",".join(f"arg_a{m}" for m in range(1, half + 1)) + "\n")
    for label, row in zip(report.labels, report.phase_rows):
        out.write(
            label
            + ","
            + ",".join(_fmt(v, degrees) for v in row[1 : half + 1])
            + "\n"
        )
    tables["phases"] = out.getvalue()

    j, k = report.selection.j, report.selection.k
    out = io.StringIO()
    out.write(f"label,kind,arg_a{j},arg_a{k}\n")
    for label, locus in zip(report.labels, report.loci):
        out.write(label + "," + ",".join(_locus_fields(locus, degrees)) + "\n")
    tables["loci"] = out.getvalue()

    if report.distances is not None:
        out = io.StringIO()
        out.write("label," + ",".join(report.labels) + "\n")
        for label, row in zip(report.labels, report.distances):
            out.write(label + "," + ",".join(_fmt(v) for v in row) + "\n")
        tables["distances"] = out.getvalue()

    for label, samples in report.trajectories.items():
        out = io.StringIO()
        out.write(f"t,arg_a{j},arg_a{k}\n")
        for t, locus in samples:
            out.write(
                _fmt(t)
                + ","
                + _fmt(locus.angle_j, degrees)
                + ","
                + _fmt(locus.angle_k, degrees)
                + "\n"
            )
        tables[f"path_{label}"] = out.getvalue()
    return tables


def report_json(report: AnalysisReport) -> str:
    """Render the report as one JSON document at full double precision."""
    doc = {
        "modulus": report.modulus,
        "selection": {
            "j": report.selection.j,
            "k": report.selection.k,
            "weight_j": report.selection.weight_j,
            "weight_k": report.selection.weight_k,
            "ranking": [
                {"coefficient": m, "min_magnitude": v}
                for m, v in report.selection_ranking
            ],
        },
        "chords": [
            {
                "label": label,
                "magnitudes": list(mags),
                "phases": list(phs),
                "locus": {
                    "kind": locus.kind.value,
                    "angle_j": locus.angle_j,
                    "angle_k": locus.angle_k,
                },
            }
            for label, mags, phs, locus in zip(
                report.labels, report.magnitude_rows, report.phase_rows, report.loci
            )
        ],
    }
    if report.distances is not None:
        doc["distances"] = {
            "labels": report.labels,
            "matrix": report.distances.tolist(),
        }
    if report.trajectories:
        doc["trajectories"] = {
            label: [
                {"t": t, "angle_j": locus.angle_j, "angle_k": locus.angle_k}
                for t, locus in samples
            ]
            for label, samples in report.trajectories.items()
        }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
