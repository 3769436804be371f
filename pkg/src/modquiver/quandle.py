"""Finite quandles stored as operation tables.

Elements are 0-based internally. Every text format and CLI surface uses
1-based elements so tables can be copied straight from printed sources.
"""

from __future__ import annotations

import itertools
from math import gcd
from dataclasses import dataclass, field
from typing import Iterator, Sequence

ENDOMORPHISM_BOUND = 8

Table = tuple[tuple[int, ...], ...]


class QuandleError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]

    def __str__(self) -> str:
        w = ",".join(str(x + 1) for x in self.witness)
        return f"{self.axiom} fails at ({w})"


@dataclass
class QuandleReport:
    is_quandle: bool
    is_kei: bool
    violations: list[Violation] = field(default_factory=list)


def _as_table(table: Sequence[Sequence[int]]) -> Table:
    n = len(table)
    out = []
    for x, row in enumerate(table):
        row = tuple(int(v) for v in row)
        if len(row) != n:
            raise QuandleError(f"row {x + 1} has {len(row)} entries, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise QuandleError(f"entry {v + 1} in row {x + 1} is out of range 1..{n}")
        out.append(row)
    return tuple(out)


def validate_quandle(table: Sequence[Sequence[int]]) -> QuandleReport:
    """Check the quandle axioms on a 0-based table.

    One witness is reported per failing axiom: the lexicographically first
    element, pair or triple on which it fails.
    """
    op = _as_table(table)
    n = len(op)
    violations = []

    for x in range(n):
        if op[x][x] != x:
            violations.append(Violation("idempotence", (x,)))
            break

    for y in range(n):
        seen: dict[int, int] = {}
        hit = None
        for x in range(n):
            z = op[x][y]
            if z in seen:
                hit = (seen[z], x, y)
                break
            seen[z] = x
        if hit:
            violations.append(Violation("right-invertibility", hit))
            break

    for x, y, z in itertools.product(range(n), repeat=3):
        if op[op[x][y]][z] != op[op[x][z]][op[y][z]]:
            violations.append(Violation("self-distributivity", (x, y, z)))
            break

    is_quandle = not violations
    is_kei = is_quandle and all(
        op[op[x][y]][y] == x for x, y in itertools.product(range(n), repeat=2)
    )
    return QuandleReport(is_quandle, is_kei, violations)


@dataclass(frozen=True, eq=False)
class Quandle:
    """A validated finite quandle.

    ``op[x][y]`` is x ▷ y and ``inv[x][y]`` is the unique z with z ▷ y = x.
    """

    op: Table
    inv: Table = field(init=False, repr=False)
    name: str = ""

    def __post_init__(self) -> None:
        op = _as_table(self.op)
        report = validate_quandle(op)
        if not report.is_quandle:
            raise QuandleError("; ".join(str(v) for v in report.violations))
        n = len(op)
        inv = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                inv[op[x][y]][y] = x
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "inv", tuple(tuple(r) for r in inv))

    @property
    def order(self) -> int:
        return len(self.op)

    def __len__(self) -> int:
        return len(self.op)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Quandle) and self.op == other.op

    def __hash__(self) -> int:
        return hash(self.op)

    @property
    def is_kei(self) -> bool:
        return self.op == self.inv

    @classmethod
    def from_one_based(cls, rows: Sequence[Sequence[int]], name: str = "") -> Quandle:
        return cls(tuple(tuple(v - 1 for v in r) for r in rows), name=name)

    def to_text(self) -> str:
        lines = [f"quandle {self.order}"]
        lines += [" ".join(str(v + 1) for v in row) for row in self.op]
        return "\n".join(lines) + "\n"


def trivial_quandle(n: int) -> Quandle:
    return Quandle(tuple(tuple(x for _ in range(n)) for x in range(n)), name=f"T{n}")


@dataclass(frozen=True, eq=False)
class GroupTable:
    mul: Table
    identity: int = field(init=False)

    def __post_init__(self) -> None:
        mul = _as_table(self.mul)
        n = len(mul)
        if n == 0:
            raise QuandleError("a group needs at least one element")
        ids = [e for e in range(n) if all(mul[e][x] == x == mul[x][e] for x in range(n))]
        if not ids:
            raise QuandleError("group table has no identity")
        e = ids[0]
        for a, b, c in itertools.product(range(n), repeat=3):
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise QuandleError(f"group table is not associative at ({a}, {b}, {c})")
        for a in range(n):
            if not any(mul[a][b] == e == mul[b][a] for b in range(n)):
                raise QuandleError(f"element {a} has no two-sided inverse")
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "identity", e)

    @property
    def order(self) -> int:
        return len(self.mul)

    def inverse(self, a: int) -> int:
        return self.mul[a].index(self.identity)

    @classmethod
    def cyclic(cls, n: int) -> GroupTable:
        return cls(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))

    @classmethod
    def symmetric(cls, k: int) -> GroupTable:
        perms = sorted(itertools.permutations(range(k)))
        index = {p: i for i, p in enumerate(perms)}
        # (p * q)(i) = p(q(i))
        return cls(tuple(
            tuple(index[tuple(p[q[i]] for i in range(k))] for q in perms) for p in perms
        ))


def core_quandle(g: GroupTable) -> Quandle:
    m = g.mul
    n = g.order
    return Quandle(tuple(
        tuple(m[m[y][g.inverse(x)]][y] for y in range(n)) for x in range(n)
    ), name="core")


def conjugation_quandle(g: GroupTable) -> Quandle:
    m = g.mul
    n = g.order
    return Quandle(tuple(
        tuple(m[m[g.inverse(y)][x]][y] for y in range(n)) for x in range(n)
    ), name="conj")


def alexander_quandle(n: int, t: int) -> Quandle:
    if n < 1 or gcd(t, n) != 1:
        raise QuandleError(f"t = {t} is not a unit mod {n}")
    return Quandle(tuple(
        tuple((t * x + (1 - t) * y) % n for y in range(n)) for x in range(n)
    ), name=f"Alex({n},{t})")


def is_endomorphism(q: Quandle, f: Sequence[int]) -> bool:
    n = q.order
    if len(f) != n or any(not 0 <= v < n for v in f):
        raise QuandleError(f"map {list(f)} is not a self-map of a {n}-element set")
    op = q.op
    return all(f[op[x][y]] == op[f[x]][f[y]] for x in range(n) for y in range(n))


def _endomorphisms(q: Quandle) -> Iterator[tuple[int, ...]]:
    n = q.order
    op = q.op
    f = [0] * n

    def extend(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(f)
            return
        for v in range(n):
            f[k] = v
            # pairs that became fully assigned (inputs and output) with k
            ok = True
            for x in range(k + 1):
                for y in range(k + 1):
                    z = op[x][y]
                    if z > k or k not in (x, y, z):
                        continue
                    if f[z] != op[f[x]][f[y]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                yield from extend(k + 1)

    yield from extend(0)


def enumerate_endomorphisms(q: Quandle, bound: int = ENDOMORPHISM_BOUND) -> list[tuple[int, ...]]:
    """All endomorphisms of ``q`` in lexicographic order of the map tuple."""
    if q.order > bound:
        raise QuandleError(f"quandle order {q.order} exceeds endomorphism search bound {bound}")
    return list(_endomorphisms(q))


def read_quandle_table(text: str) -> list[list[int]]:
    """Read the ``quandle <n>`` format into a 0-based table without validating axioms."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    numbered = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not numbered:
        raise QuandleError("empty quandle file")
    lineno, head = numbered[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "quandle" or not parts[1].isdigit():
        raise QuandleError(f"line {lineno}: expected 'quandle <n>'")
    n = int(parts[1])
    body = numbered[1:]
    if len(body) != n:
        raise QuandleError(f"expected {n} table rows, found {len(body)}")
    rows = []
    for lineno, ln in body:
        try:
            row = [int(v) - 1 for v in ln.split()]
        except ValueError:
            raise QuandleError(f"line {lineno}: non-integer entry") from None
        if len(row) != n:
            raise QuandleError(f"line {lineno}: expected {n} entries, found {len(row)}")
        rows.append(row)
    _as_table(rows)
    return rows


def parse_quandle(text: str, name: str = "") -> Quandle:
    return Quandle(tuple(tuple(r) for r in read_quandle_table(text)), name=name)


def parse_map(text: str) -> tuple[int, ...]:
    """Parse a 1-based map such as ``2,4,3,1`` or ``[2, 4, 3, 1]``."""
    body = text.strip().strip("[]")
    try:
        return tuple(int(v) - 1 for v in body.replace(",", " ").split())
    except ValueError:
        raise QuandleError(f"cannot parse map {text!r}") from None


def format_map(f: Sequence[int]) -> str:
    return "[" + ",".join(str(v + 1) for v in f) + "]"
