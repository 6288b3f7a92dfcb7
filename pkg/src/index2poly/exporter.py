"""Serialization: OFF geometry, delimited atlas reports, and figures.

Every number written to an OFF file is a 17-significant-digit decimal
rendering of an exact coordinate; the optional sidecar carries the exact
values themselves as (a, b, D) triples meaning a + b*sqrt(D), so nothing is
lost to rounding.  The report writer emits a versioned, byte-stable text
format (see REPORT_SCHEMA below and the README) plus a JSON twin, and the
figure renderer draws each accepted polyhedron's face boundaries to a PNG.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .enumeration import (
    ClassificationRecord,
    PipelineResult,
    RejectionRecord,
    _config_for,
    _orbit,
    word_classes,
)
from .exact import QuadExt, as_quad
from .maps import Cycle
from .seeds import Seed, seed

REPORT_SCHEMA = 1

# The key order of a record line; changing it is a schema bump.
RECORD_FIELDS = (
    "census",
    "seed",
    "lengths",
    "shape",
    "type",
    "f0",
    "f1",
    "f2",
    "orientable",
    "genus",
    "euler",
    "index",
    "orbits-rotation",
    "orbits-full",
    "planar",
    "orientation",
    "petrie-partner",
    "c-dual-partner",
)

REJECTION_FIELDS = (
    "seed",
    "lengths",
    "shape",
    "stage",
    "diagnosis",
    "claimed",
    "detail",
)

SEED_COORDINATES = "exact unit-free coordinates as constructed by index2poly.seeds"


# ---------------------------------------------------------------------------
# OFF files


def _coordinate_text(x: QuadExt) -> str:
    return format(float(x), ".17g")


def _fraction_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _triple_text(x: QuadExt) -> str:
    return f"({_fraction_text(x.a)},{_fraction_text(x.b)},{x.D})"


def off_text(s: Seed, faces: Sequence[Cycle]) -> str:
    """An OFF file for any face collection over the seed's vertices.

    The counts line is vertices, faces, edges.  Only vertices actually used
    by the faces are written, re-indexed in increasing seed order, so a
    single traced polygon exports as its own small file.
    """
    used = sorted({v for f in faces for v in f})
    new_index = {v: i for i, v in enumerate(used)}
    edges = {frozenset((f[i - 1], f[i])) for f in faces for i in range(len(f))}
    lines = ["OFF", f"{len(used)} {len(faces)} {len(edges)}"]
    for v in used:
        lines.append(" ".join(_coordinate_text(as_quad(x)) for x in s.vertices[v]))
    for f in faces:
        lines.append(" ".join([str(len(f))] + [str(new_index[v]) for v in f]))
    return "\n".join(lines) + "\n"


def exact_sidecar_text(s: Seed, faces: Sequence[Cycle]) -> str:
    """Symbolic companion to off_text: each coordinate as (a,b,D)."""
    used = sorted({v for f in faces for v in f})
    lines = ["# exact coordinates, one vertex per line: (a,b,D) means a+b*sqrt(D)"]
    for i, v in enumerate(used):
        triples = " ".join(_triple_text(as_quad(x)) for x in s.vertices[v])
        lines.append(f"{i} {triples}")
    return "\n".join(lines) + "\n"


def export_off(
    s: Seed, faces: Sequence[Cycle], path: str, sidecar: bool = False
) -> List[str]:
    """Write the OFF file (and optionally its exact sidecar); return paths."""
    written = [path]
    with open(path, "w") as fh:
        fh.write(off_text(s, faces))
    if sidecar:
        side = path + ".exact"
        with open(side, "w") as fh:
            fh.write(exact_sidecar_text(s, faces))
        written.append(side)
    return written


def parse_off(text: str) -> Tuple[List[Tuple[float, float, float]], List[Tuple[int, ...]]]:
    """Read back an OFF file: (vertex coordinates, faces as index tuples)."""
    rows = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if rows[0].strip() != "OFF":
        raise ValueError("not an OFF file")
    nv, nf, _ = (int(x) for x in rows[1].split())
    verts = [tuple(float(x) for x in ln.split()) for ln in rows[2 : 2 + nv]]
    faces = []
    for ln in rows[2 + nv : 2 + nv + nf]:
        parts = [int(x) for x in ln.split()]
        if parts[0] != len(parts) - 1:
            raise ValueError(f"face line announces {parts[0]} vertices: {ln!r}")
        faces.append(tuple(parts[1:]))
    return verts, faces  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# report


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def record_fields(rec: ClassificationRecord) -> Dict[str, str]:
    f0, f1, f2 = rec.f_vector
    return {
        "census": rec.census_label or "-",
        "seed": rec.seed,
        "lengths": rec.edge_lengths,
        "shape": rec.shape,
        "type": rec.map_type.label,
        "f0": str(f0),
        "f1": str(f1),
        "f2": str(f2),
        "orientable": _yes(rec.orientable),
        "genus": str(rec.genus),
        "euler": str(rec.map_type.euler),
        "index": str(rec.index),
        "orbits-rotation": str(rec.face_orbits_rotation),
        "orbits-full": str(rec.face_orbits_full),
        "planar": _yes(rec.planar_faces),
        "orientation": rec.orientation_type or "-",
        "petrie-partner": rec.petrie_partner or "-",
        "c-dual-partner": rec.c_dual_partner or "-",
    }


def rejection_fields(rej: RejectionRecord) -> Dict[str, str]:
    return {
        "seed": rej.seed,
        "lengths": rej.edge_lengths,
        "shape": rej.shape,
        "stage": rej.stage,
        "diagnosis": rej.diagnosis,
        "claimed": rej.claimed_diagnosis or "-",
        "detail": rej.detail or "-",
    }


def report_text(result: PipelineResult, only_accepted: bool = False) -> str:
    """The delimited atlas: versioned header, record table, rejection table."""
    lines = [
        f"index2poly-report {REPORT_SCHEMA}",
        f"tool-version: {__version__}",
        f"seed-coordinates: {SEED_COORDINATES}",
        f"mode: {result.mode}",
        f"accepted: {len(result.records)}",
        f"rejected: {len(result.rejections)}",
        "",
        "[records]",
        "# " + " | ".join(RECORD_FIELDS),
    ]
    for rec in result.records:
        fields = record_fields(rec)
        lines.append(" | ".join(fields[k] for k in RECORD_FIELDS))
    if not only_accepted:
        lines.extend(["", "[rejections]", "# " + " | ".join(REJECTION_FIELDS)])
        for rej in result.rejections:
            fields = rejection_fields(rej)
            lines.append(" | ".join(fields[k] for k in REJECTION_FIELDS))
    return "\n".join(lines) + "\n"


def report_json(result: PipelineResult, only_accepted: bool = False) -> str:
    payload = {
        "schema": REPORT_SCHEMA,
        "tool_version": __version__,
        "seed_coordinates": SEED_COORDINATES,
        "mode": result.mode,
        "records": [record_fields(r) for r in result.records],
    }
    if not only_accepted:
        payload["rejections"] = [rejection_fields(r) for r in result.rejections]
    return json.dumps(payload, indent=2) + "\n"


def export_report(
    result: PipelineResult,
    path: str,
    only_accepted: bool = False,
    as_json: bool = False,
) -> str:
    text = (
        report_json(result, only_accepted)
        if as_json
        else report_text(result, only_accepted)
    )
    with open(path, "w") as fh:
        fh.write(text)
    return path


# ---------------------------------------------------------------------------
# figures


def _slug(rec: ClassificationRecord) -> str:
    base = rec.census_label or f"{rec.seed}-{rec.edge_lengths}-{rec.shape}"
    out = []
    for ch in base.lower():
        if ch.isalnum():
            out.append(ch)
        elif ch == "*":
            out.append("s")
        elif out and out[-1] != "-":
            out.append("-")
    return "".join(out).strip("-")


def render_figures(
    records: Sequence[ClassificationRecord], outdir: str
) -> List[str]:
    """One PNG per record: the face boundaries as 3D wireframes.

    Face orbits get distinct colors, so the two-orbit polyhedra show their
    pair structure directly.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    import os

    os.makedirs(outdir, exist_ok=True)
    colors = ("tab:blue", "tab:red")
    paths = []
    for i, rec in enumerate(records):
        s = seed(rec.seed)
        fig = plt.figure(figsize=(5, 5))
        ax = fig.add_subplot(projection="3d")
        orbit_of = _face_orbit_labels(rec)
        for f, orbit in zip(rec.map.faces, orbit_of):
            pts = [tuple(float(as_quad(x)) for x in s.vertices[v]) for v in f]
            pts.append(pts[0])
            xs, ys, zs = zip(*pts)
            ax.plot(xs, ys, zs, color=colors[orbit % len(colors)], linewidth=0.8)
        verts = [tuple(float(as_quad(x)) for x in v) for v in s.vertices]
        ax.scatter(*zip(*verts), color="black", s=8)
        title = f"{rec.census_label or rec.shape}  {rec.map_type.label}"
        ax.set_title(f"{title}\n{rec.seed}, lengths {rec.edge_lengths}")
        ax.set_axis_off()
        path = os.path.join(outdir, f"{i + 1:02d}-{_slug(rec)}.png")
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        paths.append(path)
    return paths


def _face_orbit_labels(rec: ClassificationRecord) -> List[int]:
    """0/1 per face of rec.map: which shape word's orbit it belongs to."""
    if len(rec.shape_words) == 1:
        return [0] * len(rec.map.faces)
    cfg = _config_for(rec.seed, rec.edge_lengths)
    first = next(c for c in word_classes(cfg) if c.key == rec.class_keys[0])
    first_faces = set(_orbit(rec.seed, first.trace.boundary))
    return [0 if f in first_faces else 1 for f in rec.map.faces]
