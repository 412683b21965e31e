"""Geometric quality metrics: geometry count, vertex count, and the
inter-iteration scene similarity used to track how much each modeling
pass changed the scene.

Hidden objects are excluded everywhere: parking at x >= 1000 is this
system's delete, so a hidden object no longer counts as scene content.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Optional

from .scene import Scene, expected_vertex_count

# Per-pair weights: primitive identity, transform agreement, color agreement.
WEIGHT_PRIMITIVE = 0.5
WEIGHT_TRANSFORM = 0.3
WEIGHT_COLOR = 0.2
COMPONENT_TOLERANCE = 1e-6

CSV_HEADER = "iteration,geometry_count,vertex_count,similarity_to_previous"


class NoMetricsEvents(Exception):
    """Transcript carries no metrics_snapshot events."""


@dataclass(frozen=True)
class MetricsSnapshot:
    iteration: int
    geometry_count: int
    vertex_count: int
    similarity_to_previous: Optional[float] = None

    def csv_row(self) -> str:
        similarity = "" if self.similarity_to_previous is None else f"{self.similarity_to_previous:.6f}"
        return f"{self.iteration},{self.geometry_count},{self.vertex_count},{similarity}"


def geometry_count(scene: Scene) -> int:
    return len(scene.visible_objects())


def vertex_count(scene: Scene) -> int:
    return sum(expected_vertex_count(o.primitive) for o in scene.visible_objects())


def _close3(a, b) -> bool:
    return all(abs(x - y) <= COMPONENT_TOLERANCE for x, y in zip(a, b))


def _pair_score(a, b, weights: tuple[float, float, float]) -> float:
    score = 0.0
    if a.primitive == b.primitive:
        score += weights[0]
    if (
        _close3(a.transform.translation, b.transform.translation)
        and _close3(a.transform.rotation_euler, b.transform.rotation_euler)
        and _close3(a.transform.scale, b.transform.scale)
    ):
        score += weights[1]
    if _close3(a.material.base_color, b.material.base_color):
        score += weights[2]
    return score


def scene_similarity(
    a: Scene,
    b: Scene,
    weights: tuple[float, float, float] = (WEIGHT_PRIMITIVE, WEIGHT_TRANSFORM, WEIGHT_COLOR),
) -> float:
    """Name-matched weighted similarity in [0, 1]; symmetric, and 1.0 only
    when every visible object pairs up and matches on all three aspects."""
    visible_a = {o.name: o for o in a.visible_objects()}
    visible_b = {o.name: o for o in b.visible_objects()}
    if not visible_a and not visible_b:
        return 1.0
    matched = sorted(set(visible_a) & set(visible_b))
    total = sum(_pair_score(visible_a[name], visible_b[name], weights) for name in matched)
    return total * 2.0 / (len(visible_a) + len(visible_b))


def iteration_report(transcript) -> list[MetricsSnapshot]:
    """Extract the per-iteration metrics rows from a session transcript."""
    rows: list[MetricsSnapshot] = []
    for event in transcript.events:
        if event.kind != "metrics_snapshot":
            continue
        p = event.payload
        rows.append(
            MetricsSnapshot(
                iteration=p["iteration"],
                geometry_count=p["geometry_count"],
                vertex_count=p["vertex_count"],
                similarity_to_previous=p.get("similarity_to_previous"),
            )
        )
    if not rows:
        raise NoMetricsEvents("transcript contains no metrics_snapshot events")
    rows.sort(key=lambda r: r.iteration)
    return rows


def report_csv(rows: list[MetricsSnapshot]) -> str:
    out = io.StringIO()
    out.write(CSV_HEADER + "\n")
    for row in rows:
        out.write(row.csv_row() + "\n")
    return out.getvalue()
