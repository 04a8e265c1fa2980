"""Deterministic YAML reports.

A report is a mapping with a schema version, the run configuration and a list
of sections; each section holds named pass/fail checks and free-form data.
"""
from fractions import Fraction

import yaml

SCHEMA_VERSION = 1


def plain(x):
    """Convert to YAML-safe builtins: Fractions become strings, tuples lists."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    if isinstance(x, set):
        return sorted(plain(v) for v in x)
    return str(x)


def section(name, checks, data=None):
    """checks: iterable of (name, ok) or (name, ok, detail)."""
    rows = []
    for c in checks:
        row = {"check": c[0], "ok": bool(c[1])}
        if len(c) > 2 and c[2] and not c[1]:
            row["detail"] = c[2]
        rows.append(row)
    return {"section": name, "ok": all(r["ok"] for r in rows), "checks": rows, "data": plain(data or {})}


def make_report(command, config, sections):
    ok = all(s["ok"] for s in sections)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": plain(config),
        "verdict": "PASS" if ok else "FAIL",
        "sections": sections,
    }


def render(report):
    return yaml.safe_dump(report, sort_keys=False, allow_unicode=True, width=100)


def summary_lines(report):
    out = []
    for s in report["sections"]:
        out.append("%-4s %s" % ("PASS" if s["ok"] else "FAIL", s["section"]))
        for c in s["checks"]:
            if not c["ok"]:
                out.append("       failed: %s%s" % (c["check"], (" (%s)" % c["detail"]) if "detail" in c else ""))
    return out
