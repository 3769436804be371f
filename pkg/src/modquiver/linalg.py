"""Exact integer matrix algebra: Smith normal form and kernel sizes.

Everything here works on Python ints, so intermediate entry growth during
elimination is never a concern.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

BRUTE_FORCE_BOUND = 10**7


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count is required for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def reduce(self, n: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(x % n for x in self.entries))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.to_rows())


def _check_modulus(n: int) -> None:
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")


def snf_invariants(m: IntMatrix) -> list[int]:
    """Invariant factors of ``m``, padded with zeros to ``m.rows`` entries.

    Pivoting takes the nonzero entry of least absolute value in the
    remaining block, clears its row and column with Euclidean steps, and
    when the pivot fails to divide some remaining entry, adds that row to
    the pivot row and starts over.
    """
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    diag: list[int] = []
    k = 0
    while k < min(nr, nc):
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, pi, pj = best
        a[k], a[pi] = a[pi], a[k]
        for row in a:
            row[k], row[pj] = row[pj], row[k]

        while True:
            done = True
            p = a[k][k]
            for i in range(k + 1, nr):
                q = a[i][k] // p
                if q:
                    ri, rk = a[i], a[k]
                    for j in range(k, nc):
                        ri[j] -= q * rk[j]
                if a[i][k]:
                    done = False
            for j in range(k + 1, nc):
                q = a[k][j] // p
                if q:
                    for i in range(k, nr):
                        a[i][j] -= q * a[i][k]
                if a[k][j]:
                    done = False
            if not done:
                # a remainder is smaller than the pivot; move it into place
                best = None
                for i in range(k, nr):
                    v = a[i][k]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, k)
                for j in range(k, nc):
                    v = a[k][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), k, j)
                _, pi, pj = best
                a[k], a[pi] = a[pi], a[k]
                for row in a:
                    row[k], row[pj] = row[pj], row[k]
                continue
            # row and column are clear; check divisibility of the rest
            bad = None
            for i in range(k + 1, nr):
                if any(a[i][j] % p for j in range(k + 1, nc)):
                    bad = i
                    break
            if bad is None:
                break
            rk, rb = a[k], a[bad]
            for j in range(k, nc):
                rk[j] += rb[j]
        diag.append(abs(a[k][k]))
        k += 1
    return diag + [0] * (nr - len(diag))


def kernel_count_mod_n(m: IntMatrix, n: int) -> int:
    """Number of x in (Z_n)^cols with m x = 0 mod n."""
    _check_modulus(n)
    d = snf_invariants(m)
    r = min(m.rows, m.cols)
    return n ** (m.cols - r) * prod(gcd(x, n) for x in d[:r])


def kernel_rank_over_z(m: IntMatrix) -> int:
    return m.cols - sum(1 for x in snf_invariants(m) if x)


def brute_force_kernel_count(m: IntMatrix, n: int, bound: int = BRUTE_FORCE_BOUND) -> int:
    """Count kernel vectors mod ``n`` by trying every vector."""
    _check_modulus(n)
    if n ** m.cols > bound:
        raise ValueError(f"{n}^{m.cols} vectors exceeds enumeration bound {bound}")
    rows = m.to_rows()
    count = 0
    for x in itertools.product(range(n), repeat=m.cols):
        if all(sum(a * b for a, b in zip(r, x)) % n == 0 for r in rows):
            count += 1
    return count
