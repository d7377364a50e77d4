"""Stored growth data for two worked curves and comparison against a computed report."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .curve import GrowthReport, _cyclotomic
from .exactmath.poly import Poly, parse_poly
from .numberfield import NumberField, describe, is_isomorphic
from .structures import TorsionStructure


def field_from_label(text: str) -> NumberField:
    """Parse 'Q', 'Q(sqrt(d))', 'Q(sqrt(a),sqrt(b))', 'Q(zetaN)', 'Q(a^(1/4))' or 'Q[x]/(f)'."""
    s = text.replace(" ", "").replace("√", "sqrt").replace("−", "-")
    if s == "Q":
        return NumberField.rationals()
    m = re.fullmatch(r"Q\(sqrt\((-?\d+)\)\)", s)
    if m:
        return NumberField.quadratic(int(m.group(1)))
    m = re.fullmatch(r"Q\(sqrt\((-?\d+)\),sqrt\((-?\d+)\)\)", s)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        return NumberField(Poly((Fraction((a - b) ** 2), 0, -2 * (a + b), 0, 1)))
    m = re.fullmatch(r"Q\(zeta(\d+)\)", s)
    if m:
        return NumberField(_cyclotomic(int(m.group(1))))
    m = re.fullmatch(r"Q\((-?\d+)\^\(1/4\)\)", s)
    if m:
        return NumberField(Poly((-int(m.group(1)), 0, 0, 0, 1)))
    m = re.fullmatch(r"Q\[x\]/\((.+)\)", s)
    if m:
        return NumberField(parse_poly(m.group(1)))
    raise ValueError(f"cannot parse field label {text!r}")


@dataclass
class WorkedExample:
    label: str
    pairs: list[tuple[str, TorsionStructure]] = field(default_factory=list)
    factors: dict[int, list[Poly]] = field(default_factory=dict)


def worked_examples() -> dict[str, WorkedExample]:
    text = resources.files("qtorsion").joinpath("data", "worked_examples.txt").read_text(encoding="utf-8")
    out: dict[str, WorkedExample] = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        label, kind, key, value = line.split("\t")
        ex = out.setdefault(label, WorkedExample(label))
        if kind == "pair":
            ex.pairs.append((key, TorsionStructure.parse(value)))
        elif kind == "factor":
            ex.factors.setdefault(int(key), []).append(parse_poly(value))
        else:
            raise ValueError(f"unknown record kind {kind!r}")
    return out


def _normalized(p: Poly) -> Poly:
    return p.monic()


@dataclass
class Comparison:
    missing_pairs: list[tuple[str, str]]
    extra_pairs: list[tuple[str, str]]
    missing_factors: list[tuple[int, str]]
    extra_factors: list[tuple[int, str]]

    @property
    def ok(self) -> bool:
        return not (self.missing_pairs or self.extra_pairs or self.missing_factors or self.extra_factors)

    def summary(self) -> str:
        if self.ok:
            return "exact match"
        parts = []
        for name in ("missing_pairs", "extra_pairs", "missing_factors", "extra_factors"):
            items = getattr(self, name)
            if items:
                parts.append(f"{name.replace('_', ' ')}: " + "; ".join(f"{a} {b}" for a, b in items))
        return " | ".join(parts)


def compare(report: GrowthReport, ex: WorkedExample) -> Comparison:
    """Match minimal growth fields up to isomorphism and factors up to a rational scalar."""
    computed = [(e.field, e.H) for e in report.minimal_entries()]
    unmatched = list(range(len(computed)))
    missing_pairs = []
    for lab, H in ex.pairs:
        K = field_from_label(lab)
        hit = next((i for i in unmatched if computed[i][1] == H and computed[i][0].degree == K.degree
                    and is_isomorphic(computed[i][0], K)[0]), None)
        if hit is None:
            missing_pairs.append((lab, H.ascii()))
        else:
            unmatched.remove(hit)
    extra_pairs = [(describe(computed[i][0]).ascii_label, computed[i][1].ascii()) for i in unmatched]
    missing_factors, extra_factors = [], []
    for n in sorted(set(ex.factors) | set(report.factors)):
        want = [_normalized(p) for p in ex.factors.get(n, [])]
        have = [_normalized(p) for p in report.factors.get(n, [])]
        missing_factors += [(n, p.format()) for p in want if p not in have]
        extra_factors += [(n, p.format()) for p in have if p not in want]
    return Comparison(missing_pairs, extra_pairs, missing_factors, extra_factors)
