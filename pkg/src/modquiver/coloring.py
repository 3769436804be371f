"""Quandle colorings of link diagrams.

At a positive crossing the outgoing under-arc carries ``in ▷ over``; at a
negative crossing it carries ``in ▷⁻¹ over``.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Sequence

from .diagram import Crossing, LinkDiagram
from .quandle import Quandle, QuandleError, is_endomorphism

Coloring = tuple[int, ...]


def is_coloring(d: LinkDiagram, q: Quandle, colors: Sequence[int]) -> bool:
    if len(colors) != d.arc_count or any(not 0 <= c < q.order for c in colors):
        return False
    for c in d.crossings:
        table = q.op if c.sign > 0 else q.inv
        if colors[c.under_out] != table[colors[c.under_in]][colors[c.over]]:
            return False
    return True


def assignment_order(d: LinkDiagram) -> list[int]:
    """Breadth-first sweep over arcs that share a crossing, ties by arc index."""
    nbrs: list[set[int]] = [set() for _ in range(d.arc_count)]
    for c in d.crossings:
        arcs = (c.under_in, c.over, c.under_out)
        for a in arcs:
            nbrs[a].update(arcs)
    seen = [False] * d.arc_count
    order = []
    for start in range(d.arc_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            a = queue.popleft()
            order.append(a)
            for b in sorted(nbrs[a]):
                if not seen[b]:
                    seen[b] = True
                    queue.append(b)
    return order


def _search(d: LinkDiagram, q: Quandle) -> list[Coloring]:
    m = d.arc_count
    order = assignment_order(d)
    colors = [-1] * m
    at_arc: list[list[Crossing]] = [[] for _ in range(m)]
    for c in d.crossings:
        for a in {c.under_in, c.over, c.under_out}:
            at_arc[a].append(c)
    op, inv = q.op, q.inv
    found: list[Coloring] = []

    def propagate(start: int, trail: list[int]) -> bool:
        stack = [start]
        while stack:
            a = stack.pop()
            for c in at_arc[a]:
                y = colors[c.over]
                if y < 0:
                    continue
                fwd, back = (op, inv) if c.sign > 0 else (inv, op)
                x, z = colors[c.under_in], colors[c.under_out]
                if x >= 0:
                    want = fwd[x][y]
                    if z < 0:
                        colors[c.under_out] = want
                        trail.append(c.under_out)
                        stack.append(c.under_out)
                    elif z != want:
                        return False
                elif z >= 0:
                    colors[c.under_in] = back[z][y]
                    trail.append(c.under_in)
                    stack.append(c.under_in)
        return True

    def undo(trail: list[int]) -> None:
        for a in trail:
            colors[a] = -1

    def step(k: int) -> None:
        while k < m and colors[order[k]] >= 0:
            k += 1
        if k == m:
            found.append(tuple(colors))
            return
        a = order[k]
        for v in range(q.order):
            colors[a] = v
            trail = [a]
            if propagate(a, trail):
                step(k + 1)
            undo(trail)

    step(0)
    return found


def enumerate_colorings(d: LinkDiagram, q: Quandle) -> list[Coloring]:
    """Every coloring of ``d`` by ``q``, sorted lexicographically."""
    return sorted(_search(d, q))


def brute_force_colorings(d: LinkDiagram, q: Quandle) -> list[Coloring]:
    return [
        c for c in itertools.product(range(q.order), repeat=d.arc_count)
        if is_coloring(d, q, c)
    ]


def counting_invariant(d: LinkDiagram, q: Quandle) -> int:
    return len(_search(d, q))


def push_coloring(q: Quandle, colors: Sequence[int], f: Sequence[int]) -> Coloring:
    if not is_endomorphism(q, f):
        raise QuandleError(f"map {list(f)} is not an endomorphism")
    return tuple(f[c] for c in colors)
