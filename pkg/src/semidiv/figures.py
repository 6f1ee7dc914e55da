"""Render lab reports to files: JSON, a delimited evidence table and a
matplotlib figure summarizing the suite."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .lab import FAILED, VERIFIED, LabReport

_STATUS_COLORS = {
    VERIFIED: "#2a9d42",
    "verified-at-bound": "#e09f3e",
    FAILED: "#c1121f",
}


def evidence_rows(report: LabReport) -> list:
    """Flatten a report into (assertion, status, bound, key, value) rows."""
    rows = []
    for assertion in report.assertions:
        payload = assertion.to_dict()["evidence"]
        if not payload:
            rows.append([assertion.name, assertion.status, assertion.bound, "", ""])
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (list, dict)):
                value = json.dumps(value, sort_keys=True)
            rows.append([assertion.name, assertion.status, assertion.bound, key, value])
    return rows


def write_csv(report: LabReport, path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["assertion", "status", "bound", "evidence_key", "evidence_value"])
        writer.writerows(evidence_rows(report))


def _checked_count(assertion) -> int:
    evidence = assertion.evidence
    for key in ("checked", "families", "count", "candidate_cuts"):
        if key in evidence:
            return int(evidence[key]) or 1
    return 1


def render_figure(report: LabReport, path: Path) -> None:
    """One figure per suite: a growth curve when the evidence carries a
    series, otherwise a bar per assertion sized by checks performed."""
    series = None
    for assertion in report.assertions:
        if "counts_by_k" in assertion.evidence:
            series = assertion.evidence["counts_by_k"]
            break
    fig, ax = plt.subplots(figsize=(7, 3.6))
    if series is not None:
        ks = list(range(1, len(series) + 1))
        ax.plot(ks, series, marker="o", color="#1d6fa5")
        ax.set_xlabel("generators n/(n+1), n <= k")
        ax.set_ylabel("weak divisors of {1}")
        ax.set_xticks(ks)
        ax.grid(True, alpha=0.3)
    else:
        names = [a.name for a in report.assertions]
        sizes = [_checked_count(a) for a in report.assertions]
        colors = [_STATUS_COLORS.get(a.status, "#666666") for a in report.assertions]
        ax.barh(range(len(names)), sizes, color=colors)
        ax.set_yticks(range(len(names)))
        ax.set_yticklabels(names, fontsize=8)
        ax.invert_yaxis()
        ax.set_xlabel("checks performed")
    ax.set_title(f"lab suite: {report.suite}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report_files(report: LabReport, out_dir: Path) -> dict:
    """Write ``<suite>.json``, ``<suite>.csv`` and ``<suite>.png``; returns
    the paths keyed by format."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        "json": out_dir / f"{report.suite}.json",
        "csv": out_dir / f"{report.suite}.csv",
        "png": out_dir / f"{report.suite}.png",
    }
    with open(paths["json"], "w", encoding="utf-8") as handle:
        json.dump(report.to_dict(), handle, indent=2, sort_keys=True)
        handle.write("\n")
    write_csv(report, paths["csv"])
    render_figure(report, paths["png"])
    return paths
