"""Figures for the ``report`` command (matplotlib, Agg backend)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def tau_growth(rows, out: Path) -> Path:
    """rows: (degree, key, term count); plots max and mean P⊗P terms per degree."""
    by_deg: dict[int, list[int]] = {}
    for deg, _key, count in rows:
        by_deg.setdefault(deg, []).append(count)
    degs = sorted(by_deg)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(degs, [max(by_deg[d]) for d in degs], "o-", label="max")
    ax.plot(degs, [sum(by_deg[d]) / len(by_deg[d]) for d in degs], "s--", label="mean")
    ax.set_yscale("log")
    ax.set_xlabel("|k| + m + n")
    ax.set_ylabel("terms in τ representative")
    ax.set_xticks(degs)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def suite_overview(reports, out: Path) -> Path:
    names = [r.suite for r in reports]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3.5))
    colors = ["tab:green" if r.passed else "tab:red" for r in reports]
    ax1.bar(names, [r.cases_run for r in reports], color=colors)
    ax1.set_yscale("log")
    ax1.set_ylabel("cases")
    ax2.bar(names, [r.duration for r in reports], color=colors)
    ax2.set_ylabel("seconds")
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out
