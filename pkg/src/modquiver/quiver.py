"""Quandle coloring quivers, their module-weighted versions, and DOT output."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring, enumerate_colorings
from .diagram import LinkDiagram
from .module import QuandleModule, coloring_weight, validate_module
from .polynomial import TwoVarPolynomial
from .quandle import Quandle, QuandleError, format_map, is_endomorphism

JOBS_ENV = "MODQUIVER_JOBS"


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    label: int  # index into the quiver's endomorphism list


@dataclass(frozen=True)
class WeightedQuiver:
    colorings: tuple[Coloring, ...]
    endomorphisms: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    weights: tuple[int, ...] | None = None
    rank_weights: bool = False  # weights are Z-ranks rather than kernel sizes

    @property
    def vertex_count(self) -> int:
        return len(self.colorings)

    def successor(self, v: int, label: int = 0) -> int:
        return self.edges[v * len(self.endomorphisms) + label].target


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def coloring_quiver(
    d: LinkDiagram,
    q: Quandle,
    endos: Sequence[Sequence[int]],
    strict: bool = True,
) -> WeightedQuiver:
    """Quiver with one vertex per coloring and one edge per (coloring, map).

    With ``strict=False`` a map that is not an endomorphism is accepted as
    long as it sends every coloring of this particular diagram to another
    coloring; the result is then a property of the diagram, not an
    invariant of the link, unless the coloring set is diagram-independent
    (e.g. only constant colorings exist).
    """
    endos = tuple(tuple(f) for f in endos)
    for f in endos:
        if not is_endomorphism(q, f) and strict:
            raise QuandleError(f"{format_map(f)} is not an endomorphism")
    colorings = tuple(enumerate_colorings(d, q))
    index = {c: i for i, c in enumerate(colorings)}
    edges = []
    for v, c in enumerate(colorings):
        for k, f in enumerate(endos):
            image = tuple(f[x] for x in c)
            if image not in index:
                raise QuiverError(
                    f"{format_map(f)} sends coloring {format_map(c)} of {d.name} "
                    f"to {format_map(image)}, which is not a coloring"
                )
            edges.append(Edge(v, index[image], k))
    return WeightedQuiver(colorings, endos, tuple(edges))


def _weight_task(args):
    d, q, c, m = args
    return coloring_weight(d, q, c, m)


def module_quiver(
    d: LinkDiagram,
    q: Quandle,
    endos: Sequence[Sequence[int]],
    m: QuandleModule,
    jobs: int | None = None,
    strict: bool = True,
) -> WeightedQuiver:
    report = validate_module(q, m)
    if not report.valid:
        raise QuiverError("invalid module: " + "; ".join(str(v) for v in report.violations))
    base = coloring_quiver(d, q, endos, strict=strict)
    jobs = jobs or default_jobs()
    tasks = [(d, q, c, m) for c in base.colorings]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            weights = tuple(pool.map(_weight_task, tasks, chunksize=8))
    else:
        weights = tuple(map(_weight_task, tasks))
    return WeightedQuiver(base.colorings, base.endomorphisms, base.edges, weights,
                          rank_weights=not m.ring.finite)


def quiver_polynomial(wq: WeightedQuiver) -> TwoVarPolynomial:
    """Sum over edges of x^(source weight) y^(target weight)."""
    if wq.weights is None:
        raise QuiverError("quiver has no vertex weights")
    w = wq.weights
    return TwoVarPolynomial.from_pairs((w[e.source], w[e.target]) for e in wq.edges)


def dot_export(wq: WeightedQuiver, labels: str = "weight", name: str = "quiver") -> str:
    """Render as a DOT digraph with vertices v0, v1, ... in coloring order.

    ``labels`` picks the node label: ``weight``, ``coloring``, ``both`` or
    ``none``. Edge labels carry the endomorphism when there is more than one.
    """
    if labels not in ("weight", "coloring", "both", "none"):
        raise QuiverError(f"unknown label mode {labels!r}")
    lines = [f'digraph "{name}" {{']
    for v, c in enumerate(wq.colorings):
        parts = []
        if labels in ("coloring", "both"):
            parts.append("(" + ",".join(str(x + 1) for x in c) + ")")
        if labels in ("weight", "both") and wq.weights is not None:
            parts.append(str(wq.weights[v]))
        attr = f' [label="{" ".join(parts)}"]' if parts else ""
        lines.append(f"  v{v}{attr};")
    multi = len(wq.endomorphisms) > 1
    for e in wq.edges:
        attr = f' [label="{format_map(wq.endomorphisms[e.label])}"]' if multi else ""
        lines.append(f"  v{e.source} -> v{e.target}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cycle_structure(wq: WeightedQuiver, label: int = 0) -> list[int]:
    """Lengths of the cycles in the functional graph of one endomorphism, sorted."""
    n = wq.vertex_count
    state = [0] * n  # 0 unseen, 1 on current path, 2 done
    cycles = []
    for start in range(n):
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = wq.successor(v, label)
        if state[v] == 1:
            cycles.append(len(path) - path.index(v))
        for u in path:
            state[u] = 2
    return sorted(cycles)
