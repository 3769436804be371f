"""Oriented link diagrams as signed crossing lists over arcs.

An arc runs from one undercrossing to the next. Each crossing records the
arc entering it from below (``under_in``), the arc passing over it, and the
arc leaving it below (``under_out``). A component that never passes under
anything is a single free-loop arc.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Iterable, Sequence


class DiagramError(ValueError):
    pass


class DiagramSyntaxError(DiagramError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Crossing:
    sign: int
    under_in: int
    over: int
    under_out: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class LinkDiagram:
    name: str
    arc_count: int
    crossings: tuple[Crossing, ...]
    loops: tuple[int, ...] = ()

    @property
    def free_loops(self) -> int:
        return len(self.loops)

    def components(self) -> list[list[int]]:
        """Arc sets of the link components, each sorted, ordered by least arc."""
        parent = list(range(self.arc_count))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for c in self.crossings:
            parent[find(c.under_in)] = find(c.under_out)
        groups: dict[int, list[int]] = {}
        for a in range(self.arc_count):
            groups.setdefault(find(a), []).append(a)
        return sorted(groups.values())

    @property
    def component_count(self) -> int:
        return len(self.components())

    def mirror(self) -> LinkDiagram:
        """Planar reflection: same arcs and roles, every sign flipped."""
        return replace(
            self,
            crossings=tuple(replace(c, sign=-c.sign) for c in self.crossings),
        )

    def reverse_components(self, mask: int) -> LinkDiagram:
        """Reverse the orientation of every component whose bit is set in ``mask``.

        Bit ``i`` refers to ``components()[i]``.
        """
        comps = self.components()
        if mask < 0 or mask >> len(comps):
            raise DiagramError(f"reversal mask {mask} exceeds {len(comps)} components")
        flipped = set()
        for i, arcs in enumerate(comps):
            if mask >> i & 1:
                flipped.update(arcs)
        out = []
        for c in self.crossings:
            under_rev = c.under_in in flipped
            over_rev = c.over in flipped
            sign = -c.sign if under_rev != over_rev else c.sign
            if under_rev:
                out.append(Crossing(sign, c.under_out, c.over, c.under_in))
            else:
                out.append(Crossing(sign, c.under_in, c.over, c.under_out))
        return replace(self, crossings=tuple(out))

    def oriented(self, mask: int = 0, mirror: bool = False) -> LinkDiagram:
        d = self.reverse_components(mask) if mask else self
        return d.mirror() if mirror else d


@dataclass
class DiagramReport:
    valid: bool
    problems: list[str] = field(default_factory=list)


def validate_diagram(d: LinkDiagram) -> DiagramReport:
    problems = []
    m = d.arc_count
    if m < 1:
        problems.append("diagram has no arcs")
    if not d.crossings and not d.loops:
        problems.append("diagram has neither crossings nor loops")
    ins = [0] * max(m, 0)
    outs = [0] * max(m, 0)
    for k, c in enumerate(d.crossings):
        for role, a in (("under_in", c.under_in), ("over", c.over), ("under_out", c.under_out)):
            if not 0 <= a < m:
                problems.append(f"crossing {k}: {role} arc {a} out of range 0..{m - 1}")
        if 0 <= c.under_in < m:
            ins[c.under_in] += 1
        if 0 <= c.under_out < m:
            outs[c.under_out] += 1
    loop_set = set()
    for a in d.loops:
        if not 0 <= a < m:
            problems.append(f"loop arc {a} out of range 0..{m - 1}")
        elif a in loop_set:
            problems.append(f"loop arc {a} listed twice")
        loop_set.add(a)
    for a in range(m):
        if a in loop_set:
            if ins[a] or outs[a]:
                problems.append(f"loop arc {a} also passes under a crossing")
            continue
        if ins[a] != 1:
            problems.append(f"arc {a} enters {ins[a]} crossings from below, expected 1")
        if outs[a] != 1:
            problems.append(f"arc {a} leaves {outs[a]} crossings from below, expected 1")
    return DiagramReport(not problems, problems)


def checked(d: LinkDiagram) -> LinkDiagram:
    report = validate_diagram(d)
    if not report.valid:
        raise DiagramError(f"invalid diagram {d.name!r}: " + "; ".join(report.problems))
    return d


# -- native text format -----------------------------------------------------

def parse_diagram(text: str) -> LinkDiagram:
    name = None
    arcs = None
    crossings = []
    loops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key == "link":
            if len(args) != 1:
                raise DiagramSyntaxError(lineno, "expected 'link <name>'")
            name = args[0]
        elif key == "arcs":
            if len(args) != 1 or not args[0].isdigit():
                raise DiagramSyntaxError(lineno, "expected 'arcs <count>'")
            arcs = int(args[0])
        elif key == "crossing":
            if len(args) != 4:
                raise DiagramSyntaxError(lineno, "expected 'crossing <+|-> <under_in> <over> <under_out>'")
            sign = {"+": 1, "-": -1}.get(args[0])
            if sign is None:
                raise DiagramSyntaxError(lineno, f"bad crossing sign {args[0]!r}")
            if not all(a.isdigit() for a in args[1:]):
                raise DiagramSyntaxError(lineno, "arc ids must be non-negative integers")
            crossings.append(Crossing(sign, *(int(a) for a in args[1:])))
        elif key == "loop":
            if len(args) != 1 or not args[0].isdigit():
                raise DiagramSyntaxError(lineno, "expected 'loop <arc>'")
            loops.append(int(args[0]))
        else:
            raise DiagramSyntaxError(lineno, f"unknown keyword {key!r}")
    if name is None:
        raise DiagramError("missing 'link' line")
    if arcs is None:
        raise DiagramError("missing 'arcs' line")
    return checked(LinkDiagram(name, arcs, tuple(crossings), tuple(loops)))


def serialize_diagram(d: LinkDiagram) -> str:
    lines = [f"link {d.name}", f"arcs {d.arc_count}"]
    for c in d.crossings:
        s = "+" if c.sign > 0 else "-"
        lines.append(f"crossing {s} {c.under_in} {c.over} {c.under_out}")
    lines += [f"loop {a}" for a in d.loops]
    return "\n".join(lines) + "\n"


# -- PD import --------------------------------------------------------------

_PD_TOKEN = re.compile(r"X\s*[\[\(]\s*([^\]\)]*)[\]\)]")


def _pd_tuples(pd_text: str) -> list[tuple[int, int, int, int]]:
    out = []
    for m in _PD_TOKEN.finditer(pd_text):
        parts = [p for p in re.split(r"[,\s]+", m.group(1).strip()) if p]
        if len(parts) != 4 or not all(p.lstrip("-").isdigit() for p in parts):
            raise DiagramError(f"malformed PD crossing {m.group(0)!r}")
        out.append(tuple(int(p) for p in parts))
    leftover = _PD_TOKEN.sub("", pd_text)
    leftover = re.sub(r"PD|[\[\]\(\),\s]", "", leftover)
    if leftover:
        raise DiagramError(f"unexpected text in PD code: {leftover[:20]!r}")
    if not out:
        raise DiagramError("empty PD code")
    return out


def pd_to_diagram(pd: Sequence[Sequence[int]], name: str = "pd") -> LinkDiagram:
    """Convert PD tuples ``(a, b, c, d)`` into a crossing-list diagram.

    ``a`` enters from below and ``c`` leaves below; the over strand runs
    ``b -> d`` (negative crossing) or ``d -> b`` (positive crossing).
    Edge numbers must run consecutively along each component.
    """
    edges = sorted({e for x in pd for e in x})
    count: dict[int, int] = {}
    for x in pd:
        for e in x:
            count[e] = count.get(e, 0) + 1
    for e, k in count.items():
        if k != 2:
            raise DiagramError(f"PD edge {e} appears {k} times, expected 2")

    parent = {e: e for e in edges}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b, c, d in pd:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    comp: dict[int, list[int]] = {}
    for e in edges:
        comp.setdefault(find(e), []).append(e)
    span = {}
    for members in comp.values():
        lo, hi = min(members), max(members)
        if members != list(range(lo, hi + 1)):
            raise DiagramError(f"PD edges {members} are not numbered consecutively")
        for e in members:
            span[e] = (lo, hi)

    def follows(p: int, q: int) -> bool:
        lo, hi = span[p]
        return q == p + 1 or (p == hi and q == lo)

    for a, _, c, _ in pd:
        if not follows(a, c):
            raise DiagramError(f"under strand {a} -> {c} is not consecutive")

    # edges already known to enter a crossing, via the under strand
    incoming = {a for a, _, _, _ in pd}
    outgoing = {c for _, _, c, _ in pd}
    direction: dict[int, int] = {}
    pending = list(range(len(pd)))
    while pending:
        progress = False
        for k in list(pending):
            _, b, _, d = pd[k]
            options = []
            if follows(b, d) and b not in incoming and d not in outgoing:
                options.append(-1)  # b -> d
            if follows(d, b) and d not in incoming and b not in outgoing:
                options.append(1)  # d -> b
            if not options:
                raise DiagramError(f"inconsistent over strand ({b}, {d}) at crossing {k}")
            if len(options) == 1:
                sign = options[0]
                direction[k] = sign
                src, dst = (b, d) if sign < 0 else (d, b)
                incoming.add(src)
                outgoing.add(dst)
                pending.remove(k)
                progress = True
        if not progress:
            raise DiagramError("ambiguous wraparound: cannot orient over strands")

    # arcs: edges glued through overcrossings
    arc_parent = {e: e for e in edges}

    def afind(a: int) -> int:
        while arc_parent[a] != a:
            arc_parent[a] = arc_parent[arc_parent[a]]
            a = arc_parent[a]
        return a

    for _, b, _, d in pd:
        arc_parent[afind(b)] = afind(d)
    roots: dict[int, int] = {}
    for e in edges:
        r = afind(e)
        if r not in roots:
            roots[r] = len(roots)
    arc = {e: roots[afind(e)] for e in edges}

    crossings = tuple(
        Crossing(direction[k], arc[a], arc[b], arc[c]) for k, (a, b, c, _) in enumerate(pd)
    )
    return checked(LinkDiagram(name, len(roots), crossings))


def parse_pd(pd_text: str, name: str = "pd") -> LinkDiagram:
    return pd_to_diagram(_pd_tuples(pd_text), name)


def format_pd(pd: Iterable[Sequence[int]]) -> str:
    return ", ".join("X[" + ",".join(str(e) for e in x) + "]" for x in pd)


# -- builtin table ------------------------------------------------------------

ALIASES = {"Hopf": "L2a1", "unknot": "0_1", "trefoil": "3_1", "figure8": "4_1"}

TABLE_LINKS = (
    "L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1",
    "L7a1", "L7a2", "L7a3", "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2",
)
BUILTIN_NAMES = ("0_1", "3_1", "4_1", "T(4,2)") + TABLE_LINKS
_FILES = {"T(4,2)": "T4_2"}

# stored alternative diagrams of the same oriented link, for invariance checks
ALTERNATIVES = {
    "0_1": ("0_1_kink_pos", "0_1_kink_neg", "0_1_kink_pair"),
    "3_1": ("3_1_r2", "3_1_kink_pos", "3_1_kink_neg"),
}


def _data_text(filename: str) -> str:
    return resources.files("modquiver").joinpath("data").joinpath("links").joinpath(filename).read_text("utf-8")


def builtin_link(name: str) -> LinkDiagram:
    key = ALIASES.get(name, name)
    known = set(BUILTIN_NAMES) | {a for alts in ALTERNATIVES.values() for a in alts}
    if key not in known:
        avail = ", ".join(list(BUILTIN_NAMES) + sorted(ALIASES))
        raise DiagramError(f"unknown link {name!r}; available: {avail}")
    return parse_diagram(_data_text(f"{_FILES.get(key, key)}.link"))


def builtin_pd(name: str) -> str | None:
    """Stored PD code for a builtin link, if one exists."""
    key = ALIASES.get(name, name)
    try:
        return _data_text(f"{_FILES.get(key, key)}.pd")
    except FileNotFoundError:
        return None
