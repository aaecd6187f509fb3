"""Render report figures to files (per-category bars, top ad domains)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _category_axes(title, ylabel):
    fig, ax = plt.subplots(figsize=(11, 4.5))
    ax.set_title(title)
    ax.set_ylabel(ylabel)
    return fig, ax


def render_figures(report: dict, out_dir: str | Path) -> list[Path]:
    """Write the standard report figures as PNG files; returns their paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    per_cat = report["perCategory"]
    cats = list(per_cat)
    x = range(len(cats))
    written = []

    def finish(fig, ax, name):
        ax.set_xticks(list(x))
        ax.set_xticklabels(cats, rotation=75, ha="right", fontsize=7)
        fig.tight_layout()
        path = out_dir / name
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    fig, ax = _category_axes("Visited pages by category", "pages")
    blocked = [per_cat[c]["pagesBlocked"] for c in cats]
    allowed = [per_cat[c]["pagesTotal"] - per_cat[c]["pagesBlocked"] for c in cats]
    ax.bar(x, allowed, label="allowed", color="#4c9f70")
    ax.bar(x, blocked, bottom=allowed, label="blocked", color="#c44e52")
    ax.legend()
    finish(fig, ax, "pages_by_category.png")

    fig, ax = _category_axes("Iframe ads by category", "ads")
    ads_blocked = [per_cat[c]["adsBlocked"] for c in cats]
    ads_allowed = [per_cat[c]["adsTotal"] - per_cat[c]["adsBlocked"] for c in cats]
    ax.bar(x, ads_allowed, label="allowed", color="#4c72b0")
    ax.bar(x, ads_blocked, bottom=ads_allowed, label="blocked", color="#c44e52")
    ax.legend()
    finish(fig, ax, "ads_by_category.png")

    fig, ax = _category_axes("Trackers per allowed page by category", "avg trackers")
    avgs = [per_cat[c]["avgTrackersPerPage"] or 0.0 for c in cats]
    stds = [per_cat[c]["stdTrackersPerPage"] or 0.0 for c in cats]
    ax.bar(x, avgs, yerr=stds, capsize=2, color="#55a868")
    finish(fig, ax, "trackers_by_category.png")

    top_ads = report["overall"]["topAdDomains"]
    if top_ads:
        fig, ax = plt.subplots(figsize=(7, max(2.5, 0.3 * len(top_ads))))
        names = [row["domain"] for row in top_ads][::-1]
        shares = [row["pctAds"] for row in top_ads][::-1]
        ax.barh(range(len(names)), shares, color="#8172b2")
        ax.set_yticks(range(len(names)))
        ax.set_yticklabels(names, fontsize=7)
        ax.set_xlabel("% of iframe ads")
        ax.set_title("Top ad domains")
        fig.tight_layout()
        path = out_dir / "top_ad_domains.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
