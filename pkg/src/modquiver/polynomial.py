"""Multiset-encoding polynomials with positive integer coefficients.

One-variable polynomials print as ``16 x^25``; two-variable ones as
``12 x^4 y^4 + 4 x^16 y^16`` with x the source weight and y the target
weight of an edge.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


@dataclass(frozen=True)
class OneVarPolynomial:
    terms: tuple[tuple[int, int], ...]  # (exponent, coefficient), exponent descending

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> OneVarPolynomial:
        for e, c in terms.items():
            if e < 0 or c < 0:
                raise ValueError(f"bad term {c} x^{e}")
        return cls(tuple(sorted(_clean(terms).items(), reverse=True)))

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> OneVarPolynomial:
        return cls.from_dict(Counter(exps))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c} x^{e}" for e, c in self.terms)

    def to_json(self) -> list[dict[str, int]]:
        return [{"exp": e, "coeff": c} for e, c in self.terms]

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class TwoVarPolynomial:
    terms: tuple[tuple[tuple[int, int], int], ...]  # ((a, b), coeff), (a, b) descending

    @classmethod
    def from_dict(cls, terms: dict[tuple[int, int], int]) -> TwoVarPolynomial:
        for (a, b), c in terms.items():
            if a < 0 or b < 0 or c < 0:
                raise ValueError(f"bad term {c} x^{a} y^{b}")
        return cls(tuple(sorted(_clean(terms).items(), reverse=True)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> TwoVarPolynomial:
        return cls.from_dict(Counter(pairs))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def at_tau_one(self) -> OneVarPolynomial:
        out: Counter = Counter()
        for (a, _), c in self.terms:
            out[a] += c
        return OneVarPolynomial.from_dict(out)

    def at_sigma_one(self) -> OneVarPolynomial:
        out: Counter = Counter()
        for (_, b), c in self.terms:
            out[b] += c
        return OneVarPolynomial.from_dict(out)

    def at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c} x^{a} y^{b}" for (a, b), c in self.terms)

    def to_json(self) -> list[dict[str, int]]:
        return [{"sigma": a, "tau": b, "coeff": c} for (a, b), c in self.terms]

    def __str__(self) -> str:
        return self.to_text()


def evaluate_polynomial(p, sigma_one: bool = False, tau_one: bool = False):
    """Substitute 1 for the chosen variables.

    Returns an int when every variable of ``p`` is substituted, otherwise a
    polynomial in the remaining variable.
    """
    if isinstance(p, OneVarPolynomial):
        return p.at_one() if sigma_one else p
    if sigma_one and tau_one:
        return p.at_one()
    if tau_one:
        return p.at_tau_one()
    if sigma_one:
        return p.at_sigma_one()
    return p


_TERM = re.compile(
    r"^(?:(\d+)\s*\*?\s*)?(?:(?:x|σ|sigma)(?:\^\{?(\d+)\}?)?)?\s*\*?\s*(?:(?:y|τ|tau)(?:\^\{?(\d+)\}?)?)?$"
)


def parse_polynomial(text: str):
    """Parse ``4 x^9 y^9 + x^9 y^3`` style text (σ/τ also accepted).

    Gives a TwoVarPolynomial if any term mentions the second variable,
    otherwise a OneVarPolynomial. A bare variable counts as exponent 1.
    """
    text = text.strip()
    if text == "0":
        return OneVarPolynomial(())
    pairs: Counter = Counter()
    two_var = False
    for raw in text.split("+"):
        term = raw.strip().replace("\\", "")
        m = _TERM.match(term)
        if not term or not m:
            raise ValueError(f"cannot parse term {raw!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        has_x = bool(re.search(r"x|σ|sigma", term))
        has_y = bool(re.search(r"y|τ|tau", term))
        a = int(m.group(2)) if m.group(2) else (1 if has_x else 0)
        b = int(m.group(3)) if m.group(3) else (1 if has_y else 0)
        two_var |= has_y
        pairs[(a, b)] += coeff
    if two_var:
        return TwoVarPolynomial.from_dict(pairs)
    return OneVarPolynomial.from_dict({a: c for (a, _), c in pairs.items()})
