"""Command-line interface: torsion, torsion-k, growth, scan, tables, verify."""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from . import classification as cls_
from .curve import (
    Configuration,
    EllipticCurve,
    GrowthReport,
    SporadicTorsionError,
    growth_fields,
    torsion_over_K,
    torsion_over_Q,
)
from .database import FIXTURE_ENV, CurveRecord, DatabaseError, fixture_text, ingest_db, ingest_text, resolve_curve
from .exactmath.poly import parse_poly
from .numberfield import NumberField, NumberFieldError, describe
from .structures import TorsionStructure


class Output:
    """Writes plain text or one JSON object per line."""

    def __init__(self, fmt: str, verbose: bool, stream=None):
        self.jsonl = fmt == "jsonl"
        self.verbose = verbose
        self.stream = stream or sys.stdout

    def text(self, line: str = "") -> None:
        if not self.jsonl:
            print(line, file=self.stream)

    def record(self, obj: dict) -> None:
        if self.jsonl:
            print(json.dumps(obj, ensure_ascii=False, sort_keys=False), file=self.stream)


def _curve_name(E: EllipticCurve) -> str:
    ainvs = "[" + ",".join(str(a) for a in E.ainvs) + "]"
    return f"{E.label} {ainvs}" if E.label else ainvs


# torsion ------------------------------------------------------------------


def cmd_torsion(args, out: Output) -> int:
    E = resolve_curve(args.curve)
    G, gens = torsion_over_Q(E)
    out.text(f"{_curve_name(E)}")
    out.text(f"E(Q)_tors = {G}")
    for P in gens:
        out.text(f"  generator {P!r}")
    out.record({"curve": E.label, "ainvs": [str(a) for a in E.ainvs], "field": "Q",
                "torsion": G.ascii(), "generators": [P.as_list() for P in gens]})
    return 0


def cmd_torsion_k(args, out: Output) -> int:
    E = resolve_curve(args.curve)
    K = NumberField(parse_poly(args.minpoly))
    if K.degree not in (1, 2, 4):
        raise NumberFieldError(f"field degree {K.degree} is not 1, 2 or 4")
    try:
        H, points = torsion_over_K(E, K, exhaustive=args.exhaustive)
    except SporadicTorsionError as exc:
        out.text(f"error: {exc}")
        out.record({"curve": E.label, "error": str(exc)})
        return 2
    d = describe(K)
    out.text(f"{_curve_name(E)}")
    out.text(f"E(K)_tors = {H} over K = {d.label}, defined by {K.min_poly.format()}")
    if out.verbose:
        for P in points:
            if not P.is_infinity:
                out.text(f"  {P!r}")
    rec = {"curve": E.label, "ainvs": [str(a) for a in E.ainvs], "field": d.as_dict(),
           "minpoly": K.min_poly.format(), "torsion": H.ascii()}
    if out.verbose:
        rec["points"] = [P.as_list() for P in points if not P.is_infinity]
    out.record(rec)
    return 0


# growth -------------------------------------------------------------------


def _growth_records(E: EllipticCurve, rep: GrowthReport, verbose: bool) -> list[dict]:
    conf = rep.configuration()
    recs = []
    for e in rep.entries:
        if not e.minimal and not verbose:
            continue
        recs.append({"curve": E.label, "G": rep.G.ascii(), "field": e.description.as_dict(),
                     "H": e.H.ascii(), "minimal": e.minimal})
    summary = {"curve": E.label, "G": rep.G.ascii(), "configuration": conf.notation(), "size": conf.size}
    if verbose:
        summary["factors"] = {str(n): [p.format() for p in fs] for n, fs in sorted(rep.factors.items())}
        summary["fields_examined"] = rep.fields_examined
    recs.append(summary)
    return recs


def cmd_growth(args, out: Output) -> int:
    E = resolve_curve(args.curve)
    t0 = time.perf_counter()
    rep = growth_fields(E, exhaustive=args.exhaustive)
    elapsed = time.perf_counter() - t0
    out.text(f"{_curve_name(E)}")
    out.text(f"E(Q)_tors = {rep.G}")
    if out.verbose:
        out.text("irreducible factors of degree 1, 2, 4 of the division polynomials:")
        for n in sorted(rep.factors):
            fs = rep.factors[n]
            out.text(f"  n = {n}: " + (", ".join(p.format() for p in fs) if fs else "none"))
    minimal = rep.minimal_entries()
    if not minimal:
        out.text("no growth over fields of degree 2 or 4")
    for e in rep.entries:
        if not e.minimal and not out.verbose:
            continue
        mark = "" if e.minimal else "  (not minimal)"
        d = e.description
        out.text(f"  {str(e.H):<8} over {d.label}  [{d.poly.format()}]{mark}")
    conf = rep.configuration()
    out.text(f"configuration: {conf.notation()}  (size {conf.size})")
    if out.verbose:
        out.text(f"fields examined: {rep.fields_examined}; {elapsed:.2f} s")
    for rec in _growth_records(E, rep, out.verbose):
        out.record(rec)
    return 0


# scan ---------------------------------------------------------------------


def _scan_one(rec: CurveRecord) -> dict:
    t0 = time.perf_counter()
    try:
        rep = growth_fields(rec.curve())
    except Exception as exc:  # quarantined, reported, never fatal
        return {"label": rec.label, "error": f"{type(exc).__name__}: {exc}"}
    conf = rep.configuration()
    return {
        "label": rec.label,
        "conductor": rec.conductor,
        "G": rep.G.ascii(),
        "configuration": conf.notation(),
        "size": conf.size,
        "entries": [H.ascii() for H in conf.entries],
        "seconds": round(time.perf_counter() - t0, 3),
    }


def run_scan(records: list[CurveRecord], jobs: int = 1,
             progress: Callable[[dict], None] | None = None) -> list[dict]:
    """growth_fields over every record; results come back in record order."""
    if jobs <= 1:
        results = []
        for r in records:
            results.append(_scan_one(r))
            if progress:
                progress(results[-1])
        return results
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = []
        for res in pool.map(_scan_one, records, chunksize=1):
            results.append(res)
            if progress:
                progress(res)
        return results


def fold_configurations(results: Iterable[dict]) -> dict:
    """Group curve results by (G, configuration); compare with the stored table."""
    known = [(G, Configuration.parse(G, conf).notation(), lab) for G, conf, lab in cls_.known_configurations()]
    stored = {(G, conf) for G, conf, _ in known}
    stored_by_label = {lab: (G, conf) for G, conf, lab in known}
    groups: dict[tuple[TorsionStructure, str], list[str]] = defaultdict(list)
    sizes: dict[tuple[TorsionStructure, str], int] = {}
    quarantine, differing, bad = [], [], []
    for r in results:
        if "error" in r:
            quarantine.append(r)
            continue
        G = TorsionStructure.parse(r["G"])
        key = (G, r["configuration"])
        groups[key].append(r["label"])
        sizes[key] = r["size"]
        allowed = cls_.PHI_STAR_4_G[G]
        if any(TorsionStructure.parse(h) not in allowed for h in r["entries"]):
            bad.append(r["label"])
        if r["label"] in stored_by_label:
            sG, sconf = stored_by_label[r["label"]]
            if (sG, sconf) != (G, r["configuration"]):
                differing.append((r["label"], f"{sG.ascii()} {sconf}", f"{G.ascii()} {r['configuration']}"))
    rows = []
    for (G, conf), labels in groups.items():
        rows.append({
            "G": G.ascii(),
            "configuration": conf,
            "size": sizes[(G, conf)],
            "curves": sorted(set(labels), key=_label_key),
            "status": "known" if (G, conf) in stored or conf == "-" else "new",
            "_key": Configuration.parse(G, conf).sort_key() + (conf,),
        })
    rows.sort(key=lambda r: r["_key"])
    for r in rows:
        del r["_key"]
    h = max((r["size"] for r in rows), default=0)
    witness = sorted((c for r in rows if r["size"] == h for c in r["curves"]), key=_label_key)
    return {"configurations": rows, "h": h, "h_witness": witness, "quarantine": quarantine,
            "differing": sorted(differing, key=lambda d: _label_key(d[0])), "outside_classification": bad}


def _label_key(label: str) -> tuple:
    import re

    m = re.fullmatch(r"(\d+)([a-z]+)(\d+)", label)
    return (int(m.group(1)), m.group(2), int(m.group(3))) if m else (0, label, 0)


def cmd_scan(args, out: Output) -> int:
    if args.db_file:
        ing = ingest_db(args.db_file)
    else:
        ing = ingest_text(fixture_text())
    for lineno, msg in ing.errors:
        print(f"warning: line {lineno}: {msg}", file=sys.stderr)
    # the same curve may appear twice under one label; keep the first
    records = ing.records
    if args.max_conductor is not None:
        records = [r for r in records if r.conductor < args.max_conductor]
    jobs = args.jobs if args.jobs is not None else 1

    def progress(res: dict) -> None:
        if out.verbose:
            if "error" in res:
                print(f"  {res['label']}: FAILED {res['error']}", file=sys.stderr)
            else:
                print(f"  {res['label']}: {res['G']} {res['configuration']} ({res['seconds']:.1f} s)",
                      file=sys.stderr)

    results = run_scan(records, jobs, progress)
    folded = fold_configurations(results)
    out.text(f"scanned {len(records)} curves")
    cur_G = None
    for row in folded["configurations"]:
        if row["G"] != cur_G:
            cur_G = row["G"]
            out.text(f"G = {cur_G}")
        tag = "" if row["status"] == "known" else "  [new]"
        out.text(f"  {row['configuration']:<44} size {row['size']}  {' '.join(row['curves'])}{tag}")
        out.record({"type": "configuration", **row})
    out.text(f"h_Q(4) >= {folded['h']}  (attained by {' '.join(folded['h_witness'])})")
    out.record({"type": "bound", "h": folded["h"], "witnesses": folded["h_witness"]})
    for label, stored, computed in folded["differing"]:
        out.text(f"differs from the stored row: {label}: stored {stored}, computed {computed}")
        out.record({"type": "differs", "label": label, "stored": stored, "computed": computed})
    for label in folded["outside_classification"]:
        out.text(f"outside the classification: {label}")
        out.record({"type": "outside_classification", "label": label})
    for q in folded["quarantine"]:
        out.text(f"quarantined: {q['label']}: {q['error']}")
        out.record({"type": "quarantine", **q})
    if out.verbose:
        for r in results:
            out.record({"type": "curve", **r})
    return 1 if folded["outside_classification"] else 0


# tables ---------------------------------------------------------------------


def _fmt_set(s) -> str:
    return ", ".join(H.ascii() for H in sorted(s))


def cmd_tables(args, out: Output) -> int:
    named = [
        ("Phi(1)", cls_.PHI1),
        ("Phi(2)", cls_.PHI2),
        ("Phi_inf(3)", cls_.PHI_INF_3),
        ("Phi_inf(4)", cls_.PHI_INF_4),
        ("Phi_Q(2)", cls_.PHI_Q2),
        ("Phi_Q(3)", cls_.PHI_Q3),
        ("Phi_Q(4) biquadratic", cls_.PHI_V4),
        ("Phi_Q(4) cyclic", cls_.PHI_C4),
        ("Phi*_Q(4)", cls_.PHI_STAR_4),
        ("Phi_inf_Q(4)", cls_.PHI_INF_Q4),
    ]
    for name, s in named:
        out.text(f"{name:<22} {_fmt_set(s)}")
        out.record({"type": "set", "name": name, "groups": [H.ascii() for H in sorted(s)]})
    for d in sorted(cls_.CM):
        out.text(f"{'Phi_CM(' + str(d) + ')':<22} {_fmt_set(cls_.CM[d])}")
        out.record({"type": "set", "name": f"Phi_CM({d})", "groups": [H.ascii() for H in sorted(cls_.CM[d])]})
    out.text()
    for G in sorted(cls_.PHI_STAR_4_G):
        name = f"Phi*_Q(4,{G.ascii()})"
        out.text(f"{name:<22} {_fmt_set(cls_.PHI_STAR_4_G[G])}")
        out.record({"type": "set", "name": name, "groups": [H.ascii() for H in sorted(cls_.PHI_STAR_4_G[G])]})
    table = cls_.generate_table1()
    out.text()
    out.text(table.render())
    out.text()
    for line in table.machine_lines():
        out.text(line)
    for r in cls_.RULES:
        out.record({"type": "rule", "id": r.id, "text": r.text})
    for line in table.machine_lines():
        fields = dict(kv.split("=", 1) for kv in line.split())
        out.record({"type": "cell", **fields})
    return 0


# verify ---------------------------------------------------------------------


class Checks:
    def __init__(self, out: Output):
        self.out = out
        self.results: list[tuple[str, str, str]] = []

    def add(self, name: str, status: str, detail: str = "") -> None:
        self.results.append((name, status, detail))
        self.out.text(f"{status:<7} {name}" + (f"  {detail}" if detail else ""))
        self.out.record({"check": name, "status": status, "detail": detail})

    @property
    def failed(self) -> int:
        return sum(1 for _, s, _ in self.results if s == "FAIL")


def cmd_verify(args, out: Output) -> int:
    from . import families
    from .reference import compare, worked_examples

    checks = Checks(out)

    # classification tables
    try:
        table = cls_.generate_table1()
        checks.add("G/H table allowed sets", "PASS", f"{len(cls_.TABLE1_COLUMNS)} columns")
    except cls_.Table1Mismatch as exc:
        checks.add("G/H table allowed sets", "FAIL", str(exc))
        table = None
    if table is not None:
        diffs = cls_.compare_table1(table)
        bad = [d for d in diffs if not d.stored_rule_applies]
        detail = f"{len(diffs)} cell(s) where an earlier rule also applies" if diffs else ""
        checks.add("G/H table cell annotations", "FAIL" if bad else "PASS", detail)
    union = frozenset().union(*cls_.PHI_STAR_4_G.values())
    checks.add("union of per-G sets", "PASS" if union == cls_.PHI_STAR_4 else "FAIL")
    checks.add("infinite set excludes only C15",
               "PASS" if cls_.PHI_INF_Q4 == cls_.PHI_STAR_4 - {TorsionStructure(15)} else "FAIL")

    # worked examples
    for label, ex in worked_examples().items():
        try:
            E = resolve_curve(label)
        except DatabaseError:
            checks.add(f"growth {label}", "SKIP", "missing data")
            continue
        cmp_ = compare(growth_fields(E), ex)
        checks.add(f"growth {label}", "PASS" if cmp_.ok else "FAIL", cmp_.summary())

    # quartic examples
    for row in cls_.quartic_examples():
        name = f"torsion {row.label} over {row.quartic}"
        try:
            E = resolve_curve(row.label)
        except DatabaseError:
            checks.add(name, "SKIP", "missing data")
            continue
        try:
            G, _ = torsion_over_Q(E)
            H, _ = torsion_over_K(E, NumberField(parse_poly(row.quartic)))
        except Exception as exc:
            checks.add(name, "FAIL", f"{row.label}: {type(exc).__name__}: {exc}")
            continue
        ok = G == row.G and H == row.H
        checks.add(name, "PASS" if ok else "FAIL", f"{G.ascii()} -> {H.ascii()} (expected {row.G.ascii()} -> {row.H.ascii()})")

    # C15, witnesses, Kubert families
    for rep in (families.c15_check(), families.verify_witnesses()):
        for line in rep.lines:
            checks.add(f"{rep.title}: {line.name}", "PASS" if line.ok else "FAIL", line.detail)
    params = families.random_parameters(args.kubert_samples, seed=args.seed)
    for r in families.kubert_suite(params):
        name = f"kubert {r.target} t={r.t}"
        if r.status == "ok":
            checks.add(name, "PASS", f"{r.rational.ascii()} -> {r.over_field.ascii()} over {r.field.min_poly.format()}")
        elif r.status == "degenerate":
            checks.add(name, "SKIP", "degenerate parameter")
        elif r.status == "exceptional":
            checks.add(name, "NOTE", f"exceptional parameter: rational torsion {r.rational.ascii()}")
        else:
            checks.add(name, "FAIL", "halving did not produce the doubled torsion")

    # lower bound on the number of growth fields
    try:
        E = resolve_curve("90c4")
        conf = growth_fields(E).configuration()
        checks.add("90c4 configuration size", "PASS" if conf.size == 9 else "FAIL", f"{conf.notation()} (size {conf.size})")
    except DatabaseError:
        checks.add("90c4 configuration size", "SKIP", "missing data")

    passed = sum(1 for _, s, _ in checks.results if s == "PASS")
    out.text(f"{passed} passed, {checks.failed} failed, "
             f"{sum(1 for _, s, _ in checks.results if s == 'SKIP')} skipped")
    return 1 if checks.failed else 0


# entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "jsonl"), default="text", help="output format")
    common.add_argument("--verbose", "-v", action="store_true", help="show intermediate data")

    p = argparse.ArgumentParser(
        prog="qtorsion",
        description="Torsion of rational elliptic curves over quartic fields.",
        epilog=f"Curve labels are looked up in the bundled fixture, or in the file named by ${FIXTURE_ENV}.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("torsion", parents=[common], help="torsion subgroup over Q")
    s.add_argument("curve", help="fixture label or [a1,a2,a3,a4,a6]")
    s.set_defaults(func=cmd_torsion)

    s = sub.add_parser("torsion-k", parents=[common], help="torsion subgroup over Q[x]/(f), deg f in 1, 2, 4")
    s.add_argument("curve")
    s.add_argument("minpoly", help="irreducible polynomial in x, e.g. 'x^4-5'")
    s.add_argument("--exhaustive", action="store_true", help="search every prime power, not only allowed orders")
    s.set_defaults(func=cmd_torsion_k)

    s = sub.add_parser("growth", parents=[common], help="fields of degree 2 and 4 where the torsion grows")
    s.add_argument("curve")
    s.add_argument("--exhaustive", action="store_true")
    s.set_defaults(func=cmd_growth)

    s = sub.add_parser("scan", parents=[common], help="growth configurations over a curve database")
    s.add_argument("db_file", nargs="?", help="allcurves-format file (default: the fixture)")
    s.add_argument("--max-conductor", type=int, default=None, help="only curves of conductor below N")
    s.add_argument("--jobs", "-j", type=int, default=None, help="worker processes (default 1)")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("tables", parents=[common], help="print the classification sets and the G/H table")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("verify", parents=[common], help="run the reproduction checks")
    s.add_argument("--kubert-samples", type=int, default=20)
    s.add_argument("--seed", type=int, default=2024)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.format, args.verbose)
    try:
        return args.func(args, out)
    except (DatabaseError, NumberFieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
