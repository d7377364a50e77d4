"""Curve records in Cremona's allcurves format and label lookup."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .curve import EllipticCurve, SingularCurveError

FIXTURE_ENV = "QTORSION_CURVES"

_LINE = re.compile(
    r"^\s*(\d+)\s+([a-z]+)\s+(\d+)\s+\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]"
    r"(?:\s+(-?\d+))?(?:\s+(\d+))?\s*$"
)


class DatabaseError(ValueError):
    pass


@dataclass(frozen=True)
class CurveRecord:
    label: str
    conductor: int
    ainvs: tuple[int, int, int, int, int]
    rank: int | None = None
    torsion_order: int | None = None

    def curve(self) -> EllipticCurve:
        return EllipticCurve(list(self.ainvs), label=self.label)


@dataclass
class IngestResult:
    records: list[CurveRecord]
    errors: list[tuple[int, str]]


def parse_line(line: str) -> CurveRecord | None:
    """One allcurves line, or None for blank and comment lines."""
    s = line.strip()
    if not s or s.startswith("#"):
        return None
    m = _LINE.match(s)
    if not m:
        raise DatabaseError(f"unparseable line: {s!r}")
    cond, cls_id, num = m.group(1), m.group(2), m.group(3)
    ainvs = tuple(int(m.group(i)) for i in range(4, 9))
    rank = int(m.group(9)) if m.group(9) is not None else None
    tors = int(m.group(10)) if m.group(10) is not None else None
    return CurveRecord(f"{cond}{cls_id}{num}", int(cond), ainvs, rank, tors)


def ingest_text(text: str) -> IngestResult:
    records: list[CurveRecord] = []
    errors: list[tuple[int, str]] = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        try:
            rec = parse_line(line)
        except DatabaseError as exc:
            errors.append((lineno, str(exc)))
            continue
        if rec is None:
            continue
        if rec.label in seen:
            errors.append((lineno, f"duplicate label {rec.label}"))
            continue
        try:
            rec.curve()
        except SingularCurveError:
            errors.append((lineno, f"singular curve {rec.label}"))
            continue
        seen.add(rec.label)
        records.append(rec)
    return IngestResult(records, errors)


def ingest_db(path: str | os.PathLike) -> IngestResult:
    """Parse an allcurves file; malformed lines are collected with line numbers."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DatabaseError(f"cannot read {path}: {exc}") from exc
    result = ingest_text(text)
    if not result.records:
        raise DatabaseError(f"no valid curve records in {path}")
    return result


def fixture_text() -> str:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override).read_text(encoding="utf-8")
    return resources.files("qtorsion").joinpath("data", "curves.txt").read_text(encoding="utf-8")


_FIXTURE_CACHE: dict[str, dict[str, CurveRecord]] = {}


def fixture() -> dict[str, CurveRecord]:
    """Bundled curves by label (or the file named by QTORSION_CURVES)."""
    key = os.environ.get(FIXTURE_ENV, "")
    if key not in _FIXTURE_CACHE:
        _FIXTURE_CACHE[key] = {r.label: r for r in ingest_text(fixture_text()).records}
    return _FIXTURE_CACHE[key]


def resolve_curve(spec: str) -> EllipticCurve:
    """A fixture label such as '50a2' or literal a-invariants '[a1,a2,a3,a4,a6]'."""
    s = spec.strip()
    if s.startswith("["):
        parts = [p for p in s.strip("[]").split(",") if p.strip()]
        if len(parts) != 5:
            raise DatabaseError(f"expected five a-invariants, got {spec!r}")
        from fractions import Fraction

        return EllipticCurve([Fraction(p.strip()) for p in parts])
    rec = fixture().get(s)
    if rec is None:
        raise DatabaseError(f"unknown curve label {spec!r} (not in the fixture)")
    return rec.curve()
