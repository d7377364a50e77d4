"""Reference sets of torsion structures, exclusion rules and the (G, H) table.

Groups are written with the compact syntax understood by
``TorsionStructure.parse``.  Every set here is frozen data; the consistency
checks at the bottom of the module run on import.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable, Iterable

from .structures import C, TorsionStructure, element_orders, subgroup_of

__all__ = [
    "PHI1", "S_Q", "PHI_Q2", "PHI_Q3", "PHI_V4", "PHI_C4", "PHI_INF_3", "PHI_INF_4",
    "PHI_STAR_4", "PHI_INF_Q4", "PHI_STAR_4_G", "CM", "SUTHERLAND", "C15_J",
    "RULES", "TABLE1_ROWS", "TABLE1_COLUMNS", "TABLE1_STORED",
    "Verdict", "Table1", "Table1Mismatch", "rule_filter", "generate_table1",
    "compare_table1", "candidate_orders", "subgroup_of", "element_orders",
    "QuarticExample", "quartic_examples", "known_configurations", "check_consistency",
]


def _groups(text: str) -> frozenset[TorsionStructure]:
    return frozenset(TorsionStructure.parse(t) for t in text.split())


def _cyclic(ns: Iterable[int]) -> frozenset[TorsionStructure]:
    return frozenset(C(n) for n in ns)


def _two_by(a: int, ms: Iterable[int]) -> frozenset[TorsionStructure]:
    return frozenset(C(a, a * m) for m in ms)


PHI1 = _cyclic([*range(1, 11), 12]) | _two_by(2, range(1, 5))
PHI2 = (
    _cyclic([*range(1, 17), 18]) | _two_by(2, range(1, 7))
    | _groups("C3xC3 C3xC6 C4xC4")
)
PHI_INF_3 = _cyclic([*range(1, 17), 18, 20]) | _two_by(2, range(1, 8))
PHI_INF_4 = (
    _cyclic([*range(1, 19), 20, 21, 22, 24]) | _two_by(2, range(1, 10))
    | _two_by(3, range(1, 4)) | _groups("C4xC4 C4xC8 C5xC5 C6xC6")
)

# primes dividing torsion orders of rational curves over fields of degree d
S_Q = {1: frozenset({2, 3, 5, 7}), 2: frozenset({2, 3, 5, 7}),
       3: frozenset({2, 3, 5, 7, 13}), 4: frozenset({2, 3, 5, 7, 13})}

PHI_Q2 = (
    _cyclic([*range(1, 11), 12, 15, 16]) | _two_by(2, range(1, 7))
    | _groups("C3xC3 C3xC6 C4xC4")
)
PHI_Q3 = _cyclic([*range(1, 11), 12, 13, 14, 18, 21]) | _two_by(2, [1, 2, 3, 4, 7])
# Galois quartic fields: biquadratic and cyclic
PHI_V4 = (
    _cyclic([*range(1, 11), 12, 15, 16]) | _two_by(2, [1, 2, 3, 4, 5, 6, 8])
    | _groups("C3xC3 C3xC6 C4xC4 C4xC8 C6xC6")
)
PHI_C4 = (
    _cyclic([*range(1, 11), 12, 13, 15, 16]) | _two_by(2, [1, 2, 3, 4, 5, 6, 8])
    | _groups("C5xC5")
)

PHI_STAR_4 = (
    _cyclic([*range(1, 11), 12, 13, 15, 16, 20, 24]) | _two_by(2, [1, 2, 3, 4, 5, 6, 8])
    | _groups("C3xC3 C3xC6 C4xC4 C4xC8 C5xC5 C6xC6")
)
PHI_INF_Q4 = PHI_STAR_4 - {C(15)}

_EXCLUDED_FROM_INF_4 = _groups("C11 C14 C17 C18 C21 C22 C2xC14 C2xC18 C3xC9")

PHI_STAR_4_G: dict[TorsionStructure, frozenset[TorsionStructure]] = {
    TorsionStructure.parse(g): _groups(hs) for g, hs in [
        ("C1", "C1 C3 C5 C7 C9 C13 C15 C3xC3 C5xC5"),
        ("C2", "C2 C4 C6 C8 C10 C12 C16 C20 C24 C2xC2 C2xC4 C2xC6 C2xC8 C2xC10 "
               "C2xC12 C2xC16 C3xC6 C4xC4 C4xC8 C6xC6"),
        ("C3", "C3 C15 C3xC3"),
        ("C4", "C4 C8 C12 C16 C24 C2xC4 C2xC8 C2xC12 C2xC16 C4xC4 C4xC8"),
        ("C5", "C5 C15 C5xC5"),
        ("C6", "C6 C12 C24 C2xC6 C2xC12 C3xC6 C6xC6"),
        ("C7", "C7"),
        ("C8", "C8 C16 C2xC8 C2xC16 C4xC8"),
        ("C9", "C9"),
        ("C10", "C10 C20 C2xC10"),
        ("C12", "C12 C24 C2xC12"),
        ("C2xC2", "C2xC2 C2xC4 C2xC6 C2xC8 C2xC12 C2xC16 C4xC4 C4xC8"),
        ("C2xC4", "C2xC4 C2xC8 C2xC16 C4xC4 C4xC8"),
        ("C2xC6", "C2xC6 C2xC12"),
        ("C2xC8", "C2xC8 C2xC16 C4xC8"),
    ]
}

_CM_1 = _groups("C1 C2 C3 C4 C6 C2xC2")
_CM_2 = _CM_1 | _groups("C7 C10 C2xC4 C2xC6 C3xC3")
_CM_3 = _CM_1 | _groups("C9 C14")
# torsion of CM curves over fields of degree d <= 7
CM: dict[int, frozenset[TorsionStructure]] = {
    1: _CM_1,
    2: _CM_2,
    3: _CM_3,
    4: _CM_2 | _groups("C5 C8 C12 C13 C21 C2xC8 C2xC10 C3xC6 C4xC4"),
    5: _CM_1 | _groups("C11"),
    6: _CM_2 | _CM_3 | _groups("C18 C19 C26 C2xC14 C3xC6 C3xC9 C6xC6"),
    7: _CM_1,
}


@dataclass(frozen=True)
class ImageRow:
    """Mod-p image label with the degrees d0 | d1 of the fields generated by
    one point and by the full p-torsion, and the index d of the image."""

    prime: int
    label: str
    d0: int
    d1: int
    d: int


SUTHERLAND: tuple[ImageRow, ...] = tuple(ImageRow(p, lab, d0, d1, d) for p, lab, d0, d1, d in [
    (3, "3Cs.1.1", 1, 1, 2), (3, "3Cs", 1, 2, 4), (3, "3B.1.1", 1, 1, 6),
    (3, "3B.1.2", 1, 2, 6), (3, "3Ns", 2, 4, 8), (3, "3B", 1, 2, 12), (3, "3Nn", 4, 8, 16),
    (5, "5Cs.1.1", 1, 1, 4), (5, "5Cs.1.3", 1, 2, 4), (5, "5Cs.4.1", 1, 2, 8),
    (5, "5Ns.2.1", 2, 8, 16), (5, "5Cs", 1, 4, 16), (5, "5B.1.1", 1, 1, 20),
    (5, "5B.1.2", 1, 4, 20), (5, "5B.1.4", 1, 2, 20), (5, "5B.1.3", 1, 4, 20),
    (5, "5Ns", 2, 8, 32), (5, "5B.4.1", 1, 2, 40), (5, "5B.4.2", 1, 4, 40),
    (5, "5Nn", 6, 24, 48), (5, "5B", 1, 4, 80), (5, "5S4", 6, 24, 96),
])

# j-invariants of the rational curves with a C15 point over a quartic field,
# keyed by a curve realizing each one
C15_J: dict[str, Fraction] = {
    "50a1": Fraction(-5 ** 2, 2),
    "450b2": Fraction(-5 ** 2 * 241 ** 3, 2 ** 3),
    "50a3": Fraction(-5 * 29 ** 3, 2 ** 5),
    "50a4": Fraction(5 * 211 ** 3, 2 ** 15),
}


# exclusion rules ------------------------------------------------------------

def _contains(small: str, big: TorsionStructure) -> bool:
    return subgroup_of(TorsionStructure.parse(small), big)


RulePredicate = Callable[[TorsionStructure, TorsionStructure], bool]


@dataclass(frozen=True)
class Rule:
    id: str
    text: str
    rules_out: RulePredicate | None

    @property
    def executable(self) -> bool:
        return self.rules_out is not None


RULES: tuple[Rule, ...] = (
    Rule("teo-1", "G has no 2-torsion but H does",
         lambda G, H: not _contains("C2", G) and _contains("C2", H)),
    Rule("teo-2", "11 or 17 divides #H",
         lambda G, H: H.order % 11 == 0 or H.order % 17 == 0),
    Rule("teo-3", "H is C14 or C2xC14",
         lambda G, H: H in (C(14), C(2, 14))),
    Rule("teo-4", "H contains C21",
         lambda G, H: _contains("C21", H)),
    Rule("teo-5", "G contains C4 and H contains C20",
         lambda G, H: _contains("C4", G) and _contains("C20", H)),
    Rule("teo-6", "G contains C8 and H contains C24",
         lambda G, H: _contains("C8", G) and _contains("C24", H)),
    Rule("teo-7", "G contains C2xC2 and H contains C2xC10",
         lambda G, H: _contains("C2xC2", G) and _contains("C2xC10", H)),
    Rule("teo-8", "G contains C2xC4 and H contains C2xC12",
         lambda G, H: _contains("C2xC4", G) and _contains("C2xC12", H)),
    Rule("teo-9", "H is C6xC6 while G is neither C2 nor C6",
         lambda G, H: H == C(6, 6) and G not in (C(2), C(6))),
    # descent through an intermediate field; only its consequences 11 and 12 are executable
    Rule("teo-10", "torsion already grows over a proper subfield", None),
    Rule("teo-11", "H contains C18 or C3xC9",
         lambda G, H: _contains("C18", H) or _contains("C3xC9", H)),
    Rule("teo-12", "G is C3 and H contains C9",
         lambda G, H: G == C(3) and _contains("C9", H)),
)
RULES_BY_ID = {r.id: r for r in RULES}


@dataclass(frozen=True)
class Verdict:
    kind: str  # "allowed", "ruled_out" or "not_supergroup"
    rule: str | None = None

    @property
    def allowed(self) -> bool:
        return self.kind == "allowed"

    def symbol(self) -> str:
        if self.kind == "allowed":
            return "✓"
        if self.kind == "not_supergroup":
            return "-"
        return self.rule or "?"


def rule_filter(G: TorsionStructure, H: TorsionStructure) -> Verdict:
    """First rule excluding H as the torsion over a quartic field of a curve
    with rational torsion G."""
    if not subgroup_of(G, H):
        return Verdict("not_supergroup")
    for rule in RULES:
        if rule.executable and rule.rules_out(G, H):
            return Verdict("ruled_out", rule.id)
    return Verdict("allowed")


# the stored (H, G) table ----------------------------------------------

TABLE1_COLUMNS: tuple[TorsionStructure, ...] = tuple(TorsionStructure.parse(g) for g in (
    "C1 C2 C3 C4 C5 C6 C7 C8 C9 C10 C12 C2xC2 C2xC4 C2xC6 C2xC8".split()))

# cells: "ok" (realized over Q), "ok2" (over a quadratic field), "ok4" (only over
# a quartic field), "-" (G not a subgroup of H) or the number of the excluding rule
_TABLE1_TEXT = """
C1      ok - - - - - - - - - - - - - -
C2      1 ok - - - - - - - - - - - - -
C3      ok2 - ok - - - - - - - - - - - -
C4      1 ok2 - ok - - - - - - - - - - -
C5      ok2 - - - ok - - - - - - - - - -
C6      1 ok2 1 - - ok - - - - - - - - -
C7      ok2 - - - - - ok - - - - - - - -
C8      1 ok2 - ok2 - - - ok - - - - - - -
C9      ok2 - 12 - - - - - ok - - - - - -
C10     1 ok2 - - 1 - - - - ok - - - - -
C11     2 - - - - - - - - - - - - - -
C12     1 ok2 1 ok2 - ok2 - - - - ok - - - -
C13     ok4 - - - - - - - - - - - - - -
C14     1 3 - - - - 1 - - - - - - - -
C15     ok4 - ok2 - ok2 - - - - - - - - - -
C16     1 ok2 - ok4 - - - ok2 - - - - - - -
C17     2 - - - - - - - - - - - - - -
C18     1 11 1 - - 11 - - 1 - - - - - -
C20     1 ok4 - 5 1 - - - - ok4 - - - - -
C21     4 - 4 - - - 4 - - - - - - - -
C22     1 2 - - - - - - - - - - - - -
C24     1 ok4 1 ok4 - ok4 - 6 - - ok - - - -
C2xC2   1 ok2 - - - - - - - - - ok - - -
C2xC4   1 ok4 - ok2 - - - - - - - ok2 ok - -
C2xC6   1 ok2 1 - - ok2 - - - - - ok2 - ok -
C2xC8   1 ok4 - ok2 - - - ok2 - - - ok2 ok2 - ok
C2xC10  1 ok2 - - 1 - - - - ok2 - 7 - - -
C2xC12  1 ok4 1 ok2 - ok4 - - - - ok2 ok2 8 ok -
C2xC14  1 3 - - - - 3 - - - - 3 - - -
C2xC16  1 ok4 - ok4 - - - ok2 - - - ok2 ok2 - ok2
C2xC18  1 11 1 - - 11 - - 1 - - 11 - 11 -
C3xC3   ok4 - ok2 - - - - - - - - - - - -
C3xC6   1 ok4 1 - - ok2 - - - - - - - - -
C3xC9   11 - 11 - - - - - 11 - - - - - -
C4xC4   1 ok4 - ok2 - - - - - - - ok4 ok2 - -
C4xC8   1 ok4 - ok4 - - - ok4 - - - ok4 ok4 - ok4
C5xC5   ok4 - - - ok4 - - - - - - - - - -
C6xC6   1 ok4 1 - - ok4 - - - - - 9 - 9 -
"""


def _parse_table1() -> dict[TorsionStructure, dict[TorsionStructure, str]]:
    out = {}
    for line in _TABLE1_TEXT.strip().splitlines():
        head, *cells = line.split()
        if len(cells) != len(TABLE1_COLUMNS):
            raise ValueError(f"bad table row {head}")
        out[TorsionStructure.parse(head)] = dict(zip(TABLE1_COLUMNS, cells))
    return out


TABLE1_STORED = _parse_table1()
TABLE1_ROWS: tuple[TorsionStructure, ...] = tuple(TABLE1_STORED)


class Table1Mismatch(AssertionError):
    pass


@dataclass
class Table1:
    rows: tuple[TorsionStructure, ...]
    columns: tuple[TorsionStructure, ...]
    cells: dict[tuple[TorsionStructure, TorsionStructure], Verdict]

    def allowed(self, G: TorsionStructure) -> frozenset[TorsionStructure]:
        return frozenset(H for H in self.rows if self.cells[H, G].allowed)

    def render(self) -> str:
        width = 7
        head = "H \\ G".ljust(width) + "".join(g.ascii().rjust(width) for g in self.columns)
        lines = [head]
        for H in self.rows:
            cells = []
            for G in self.columns:
                v = self.cells[H, G]
                s = "ok" if v.allowed else ("-" if v.kind == "not_supergroup" else v.rule[4:])
                cells.append(s.rjust(width))
            lines.append(H.ascii().ljust(width) + "".join(cells))
        return "\n".join(lines)

    def machine_lines(self) -> list[str]:
        out = []
        for G in self.columns:
            for H in self.rows:
                v = self.cells[H, G]
                verdict = "allowed" if v.allowed else ("-" if v.kind == "not_supergroup" else v.rule)
                out.append(f"G={G.ascii()} H={H.ascii()} verdict={verdict}")
        return out


def generate_table1() -> Table1:
    """Evaluate the rule engine on every stored row and column.

    Raises Table1Mismatch when the allowed set of some column differs from
    PHI_STAR_4_G.
    """
    cells = {(H, G): rule_filter(G, H) for H in TABLE1_ROWS for G in TABLE1_COLUMNS}
    table = Table1(TABLE1_ROWS, TABLE1_COLUMNS, cells)
    for G in TABLE1_COLUMNS:
        got = table.allowed(G)
        if got != PHI_STAR_4_G[G]:
            raise Table1Mismatch(
                f"column {G.ascii()}: extra {sorted(h.ascii() for h in got - PHI_STAR_4_G[G])}, "
                f"missing {sorted(h.ascii() for h in PHI_STAR_4_G[G] - got)}")
    return table


@dataclass(frozen=True)
class CellDifference:
    H: TorsionStructure
    G: TorsionStructure
    stored: str
    computed: str
    stored_rule_applies: bool


def compare_table1(table: Table1 | None = None) -> list[CellDifference]:
    """Cells where the first firing rule differs from the stored annotation.

    A difference whose stored rule also excludes the pair is only a matter of
    which rule is cited; any other difference is a real disagreement.
    """
    table = table or generate_table1()
    out = []
    for H in table.rows:
        for G in table.columns:
            stored = TABLE1_STORED[H][G]
            v = table.cells[H, G]
            if stored.startswith("ok"):
                expected_kind, rule = "allowed", None
            elif stored == "-":
                expected_kind, rule = "not_supergroup", None
            else:
                expected_kind, rule = "ruled_out", f"teo-{stored}"
            if v.kind == expected_kind and v.rule == rule:
                continue
            applies = False
            if rule is not None:
                r = RULES_BY_ID[rule]
                applies = subgroup_of(G, H) and r.executable and r.rules_out(G, H)
            out.append(CellDifference(H, G, stored, v.symbol(), applies))
    return out


def candidate_orders(G: TorsionStructure) -> set[int]:
    """Orders of points that may appear over a quartic field when the rational
    torsion is G (1 excluded)."""
    orders: set[int] = set()
    for H in PHI_STAR_4_G[G]:
        orders |= element_orders(H)
    orders.discard(1)
    return orders


# worked examples shipped as data -------------------------------------------

@dataclass(frozen=True)
class QuarticExample:
    G: TorsionStructure
    H: TorsionStructure
    quartic: str
    label: str


def _data_lines(name: str) -> list[list[str]]:
    text = resources.files("qtorsion").joinpath("data", name).read_text(encoding="utf-8")
    return [ln.split("\t") for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def quartic_examples() -> list[QuarticExample]:
    return [QuarticExample(TorsionStructure.parse(g), TorsionStructure.parse(h), q, lab)
            for g, h, q, lab in _data_lines("quartic_examples.txt")]


def known_configurations() -> list[tuple[TorsionStructure, str, str]]:
    """(G, configuration in (n,m)^s notation, curve label) rows."""
    return [(TorsionStructure.parse(g), conf, lab)
            for g, conf, lab in _data_lines("configurations.txt")]


# consistency -----------------------------------------------------------------

def check_consistency() -> None:
    problems = []
    if PHI_STAR_4 != (PHI_INF_4 | {C(15)}) - _EXCLUDED_FROM_INF_4:
        problems.append("quartic set differs from the infinite set adjusted by the exclusions")
    union = frozenset().union(*PHI_STAR_4_G.values())
    if union != PHI_STAR_4:
        problems.append("union over G of the per-G sets differs from the quartic set")
    if set(PHI_STAR_4_G) != set(PHI1):
        problems.append("per-G table keys differ from the rational torsion list")
    for G, hs in PHI_STAR_4_G.items():
        if G not in hs or not all(subgroup_of(G, H) for H in hs):
            problems.append(f"{G.ascii()} is not contained in all of its supergroups")
    if C(15) in PHI_INF_Q4 or C(15) not in PHI_STAR_4:
        problems.append("C15 placement")
    if not PHI1 <= PHI_Q2 <= PHI2:
        problems.append("quadratic sets not nested")
    for row in SUTHERLAND:
        if row.d % row.d1 or row.d0 > row.d1:
            problems.append(f"image row {row.label}")
    for d in range(1, 8):
        if not CM[1] <= CM[d]:
            problems.append(f"CM degree {d}")
    if set(TABLE1_ROWS) - PHI_INF_4 or set(TABLE1_COLUMNS) != set(PHI1):
        problems.append("table rows or columns")
    if problems:
        raise RuntimeError("classification data inconsistent: " + "; ".join(problems))


check_consistency()
