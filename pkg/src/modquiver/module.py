"""Quandle modules, bead matrices and the one-variable module polynomial."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

from .coloring import enumerate_colorings, is_coloring
from .diagram import LinkDiagram
from .linalg import IntMatrix, kernel_count_mod_n, kernel_rank_over_z
from .polynomial import OneVarPolynomial
from .quandle import Quandle, Violation


class ModuleError(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """Z_n for ``modulus = n >= 2``, or the integers for ``modulus = None``."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None and self.modulus < 2:
            raise ModuleError(f"modulus must be at least 2, got {self.modulus}")

    @classmethod
    def parse(cls, text: str) -> Ring:
        text = text.strip()
        if text in ("Z", "ZZ"):
            return cls(None)
        if text.startswith("Z"):
            text = text[1:].lstrip("_")
        try:
            return cls(int(text))
        except ValueError:
            raise ModuleError(f"cannot parse ring {text!r}; use 'Z' or a modulus") from None

    @property
    def finite(self) -> bool:
        return self.modulus is not None

    def norm(self, x: int) -> int:
        return x % self.modulus if self.modulus else x

    def is_unit(self, x: int) -> bool:
        if self.modulus:
            return gcd(x, self.modulus) == 1
        return x in (1, -1)

    def units(self) -> list[int]:
        if self.modulus is None:
            return [-1, 1]
        return [u for u in range(self.modulus) if gcd(u, self.modulus) == 1]

    def __str__(self) -> str:
        return f"Z_{self.modulus}" if self.modulus else "Z"


@dataclass(frozen=True)
class QuandleModule:
    ring: Ring
    t: tuple[tuple[int, ...], ...]
    s: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.t)
        if len(self.s) != n or any(len(r) != n for r in self.t + self.s):
            raise ModuleError("t and s must both be square tables of the same size")
        object.__setattr__(self, "t", tuple(tuple(self.ring.norm(int(v)) for v in r) for r in self.t))
        object.__setattr__(self, "s", tuple(tuple(self.ring.norm(int(v)) for v in r) for r in self.s))

    @property
    def size(self) -> int:
        return len(self.t)

    @classmethod
    def constant(cls, ring: Ring, n: int, u: int) -> QuandleModule:
        return cls(ring, ((u,) * n,) * n, ((1 - u,) * n,) * n)

    def to_text(self) -> str:
        mod = self.ring.modulus if self.ring.finite else "Z"
        lines = [f"module {self.size} mod {mod}"]
        lines += [" ".join(str(v) for v in r) for r in self.t]
        lines += [" ".join(str(v) for v in r) for r in self.s]
        return "\n".join(lines) + "\n"


@dataclass
class ModuleReport:
    valid: bool
    violations: list[Violation] = field(default_factory=list)


def _axiom_failures(q: Quandle, m: QuandleModule) -> Iterator[Violation]:
    """Yield the first failing witness of each condition, in a fixed order."""
    R, t, s, op = m.ring, m.t, m.s, q.op
    n = q.order
    for x, y in itertools.product(range(n), repeat=2):
        if not R.is_unit(t[x][y]):
            yield Violation("unit", (x, y))
            break
    for x in range(n):
        if R.norm(t[x][x] + s[x][x]) != 1:
            yield Violation("diagonal", (x,))
            break
    checks = (
        ("t-composition", lambda x, y, z, xy, xz, yz:
            t[xy][z] * t[x][y] - t[xz][yz] * t[x][z]),
        ("ts-exchange", lambda x, y, z, xy, xz, yz:
            t[xy][z] * s[x][y] - s[xz][yz] * t[y][z]),
        ("s-composition", lambda x, y, z, xy, xz, yz:
            s[xy][z] - t[xz][yz] * s[x][z] - s[xz][yz] * s[y][z]),
    )
    for name, diff in checks:
        for x, y, z in itertools.product(range(n), repeat=3):
            if R.norm(diff(x, y, z, op[x][y], op[x][z], op[y][z])) != 0:
                yield Violation(name, (x, y, z))
                break


def validate_module(q: Quandle, m: QuandleModule) -> ModuleReport:
    if m.size != q.order:
        raise ModuleError(f"module tables are {m.size}x{m.size} but quandle has order {q.order}")
    violations = list(_axiom_failures(q, m))
    return ModuleReport(not violations, violations)


def search_modules(q: Quandle, n: int, max_results: int | None = None) -> list[QuandleModule]:
    """Backtracking search for all quandle modules over Z_n.

    Table entries are assigned t row-major, then s row-major. After each
    assignment every axiom instance whose entries are all assigned is
    checked.
    """
    ring = Ring(n)
    k = q.order
    op = q.op
    kk = k * k

    def T(a: int, b: int) -> int:
        return a * k + b

    def S(a: int, b: int) -> int:
        return kk + a * k + b

    # (kind, cells); each is checked when its last cell is assigned
    pending: list[list[tuple[str, tuple[int, ...]]]] = [[] for _ in range(2 * kk)]

    def add(kind: str, *cells: int) -> None:
        pending[max(cells)].append((kind, cells))

    for x in range(k):
        add("diag", T(x, x), S(x, x))
    for x, y, z in itertools.product(range(k), repeat=3):
        xy, xz, yz = op[x][y], op[x][z], op[y][z]
        add("tt", T(xy, z), T(x, y), T(xz, yz), T(x, z))
        add("ts", T(xy, z), S(x, y), S(xz, yz), T(y, z))
        add("ss", S(xy, z), T(xz, yz), S(x, z), S(xz, yz), S(y, z))

    val = [0] * (2 * kk)

    def holds(kind: str, c: tuple[int, ...]) -> bool:
        v = [val[i] for i in c]
        if kind == "diag":
            return (v[0] + v[1]) % n == 1
        if kind == "tt" or kind == "ts":
            return (v[0] * v[1] - v[2] * v[3]) % n == 0
        return (v[0] - v[1] * v[2] - v[3] * v[4]) % n == 0

    units = ring.units()
    results: list[QuandleModule] = []

    def step(i: int) -> bool:
        if i == 2 * kk:
            t = tuple(tuple(val[T(x, y)] for y in range(k)) for x in range(k))
            s = tuple(tuple(val[S(x, y)] for y in range(k)) for x in range(k))
            results.append(QuandleModule(ring, t, s))
            return max_results is not None and len(results) >= max_results
        for v in (units if i < kk else range(n)):
            val[i] = v
            if all(holds(kind, c) for kind, c in pending[i]) and step(i + 1):
                return True
        return False

    step(0)
    return results


def bead_matrix(d: LinkDiagram, q: Quandle, colors: Sequence[int], m: QuandleModule) -> IntMatrix:
    """Coefficient matrix of the crossing equations, one row per crossing.

    At a positive crossing with x on the incoming under-arc and y on the
    over-arc the bead equation is ``out = t[x][y] in + s[x][y] over``. A
    negative crossing uses the same relation with the two under-arcs
    swapped, so x is read from the outgoing under-arc.
    """
    if not is_coloring(d, q, colors):
        raise ModuleError(f"{[c + 1 for c in colors]} is not a coloring of {d.name}")
    R = m.ring
    rows = []
    for c in d.crossings:
        a, b = (c.under_in, c.under_out) if c.sign > 0 else (c.under_out, c.under_in)
        x, y = colors[a], colors[c.over]
        row = [0] * d.arc_count
        row[a] += m.t[x][y]
        row[c.over] += m.s[x][y]
        row[b] -= 1
        rows.append([R.norm(v) for v in row])
    return IntMatrix.from_rows(rows, d.arc_count)


def coloring_weight(d: LinkDiagram, q: Quandle, colors: Sequence[int], m: QuandleModule) -> int:
    """Kernel size of the bead matrix over a finite ring; its rank over Z."""
    mat = bead_matrix(d, q, colors, m)
    if m.ring.finite:
        return kernel_count_mod_n(mat, m.ring.modulus)
    return kernel_rank_over_z(mat)


def module_polynomial(d: LinkDiagram, q: Quandle, m: QuandleModule) -> OneVarPolynomial:
    weights = [coloring_weight(d, q, c, m) for c in enumerate_colorings(d, q)]
    return OneVarPolynomial.from_exponents(weights)


def parse_module(text: str) -> QuandleModule:
    lines = [(i + 1, ln.split("#", 1)[0].split()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, p) for i, p in lines if p]
    if not lines:
        raise ModuleError("empty module file")
    lineno, head = lines[0]
    if len(head) != 4 or head[0] != "module" or head[2] != "mod" or not head[1].isdigit():
        raise ModuleError(f"line {lineno}: expected 'module <n> mod <modulus|Z>'")
    size = int(head[1])
    ring = Ring.parse(head[3])
    body = lines[1:]
    if len(body) != 2 * size:
        raise ModuleError(f"expected {2 * size} table rows, found {len(body)}")
    rows = []
    for lineno, parts in body:
        if len(parts) != size:
            raise ModuleError(f"line {lineno}: expected {size} entries")
        try:
            row = [int(v) for v in parts]
        except ValueError:
            raise ModuleError(f"line {lineno}: non-integer entry") from None
        if ring.finite and any(not 0 <= v < ring.modulus for v in row):
            raise ModuleError(f"line {lineno}: entries must lie in 0..{ring.modulus - 1}")
        rows.append(tuple(row))
    return QuandleModule(ring, tuple(rows[:size]), tuple(rows[size:]))
