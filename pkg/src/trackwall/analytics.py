"""Aggregate browsing events into blocked/allowed, ad, and tracker reports.

Tracker prevalence follows the collection-side convention: blocked pages are
excluded (their later requests were never observable), and a third-party
domain counts as a tracker once it appears on three or more distinct pages
of the remaining events.  Standard deviations are population deviations.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import urlsplit

from .errors import FileUnreadable, UnknownFormat
from .events import BrowsingEvent
from .policy import BLOCK, REASON_URL

TRACKER_PAGE_THRESHOLD = 3
TOP_TRACKERS = 10
TOP_AD_DOMAINS = 40


@dataclass
class LoadResult:
    events: list[BrowsingEvent]
    skipped: int


def load_events(path: str | Path) -> LoadResult:
    """Parse an events JSONL file; malformed lines are counted and skipped."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileUnreadable(str(path)) from exc
    events, skipped = [], 0
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            events.append(BrowsingEvent.from_json_obj(json.loads(line)))
        except (ValueError, KeyError, TypeError):
            skipped += 1
    return LoadResult(events, skipped)


def _mean_std(xs: list[int]) -> tuple[float | None, float | None]:
    if not xs:
        return None, None
    mean = sum(xs) / len(xs)
    std = math.sqrt(sum((x - mean) ** 2 for x in xs) / len(xs))
    return mean, std


def _iframe_ad_domains(event: BrowsingEvent, ad_domains, suffixes):
    for url in event.iframe_urls:
        host = urlsplit(url).hostname or ""
        if not host:
            continue
        rd = suffixes.registrable_domain(host)
        if rd in ad_domains:
            yield rd


def classify_ad_iframes(event: BrowsingEvent, ad_domains, suffixes) -> tuple[int, int]:
    """(adsTotal, adsBlocked): ad iframes on the page, and how many the
    page's Block verdict suppressed."""
    total = sum(1 for _ in _iframe_ad_domains(event, ad_domains, suffixes))
    blocked = total if event.decision_verdict == BLOCK else 0
    return total, blocked


def _tracker_set(unblocked: list[BrowsingEvent]) -> tuple[set[str], dict[str, set[str]]]:
    pages_by_domain: dict[str, set[str]] = {}
    for event in unblocked:
        for domain in event.third_party_domains:
            pages_by_domain.setdefault(domain, set()).add(event.page_hash)
    trackers = {d for d, pages in pages_by_domain.items()
                if len(pages) >= TRACKER_PAGE_THRESHOLD}
    return trackers, pages_by_domain


def tracker_stats(events: list[BrowsingEvent]) -> dict:
    """Per-page tracker count statistics, overall and per category."""
    unblocked = [e for e in events if e.decision_verdict != BLOCK]
    trackers, pages_by_domain = _tracker_set(unblocked)

    def count(event):
        return len([d for d in sorted(event.third_party_domains) if d in trackers])

    overall = [count(e) for e in unblocked]
    avg, std = _mean_std(overall)
    per_category: dict[str, dict] = {}
    categories = sorted({c for e in unblocked for c in e.categories})
    for cat in categories:
        in_cat = [e for e in unblocked if cat in e.categories]
        c_avg, c_std = _mean_std([count(e) for e in in_cat])
        distinct = set()
        for e in in_cat:
            distinct.update(d for d in e.third_party_domains if d in trackers)
        per_category[cat] = {"avg": c_avg, "std": c_std, "distinct": len(distinct)}
    return {
        "avg": avg,
        "std": std,
        "distinctTrackers": len(trackers),
        "perCategory": per_category,
        "trackers": trackers,
        "pagesByDomain": pages_by_domain,
    }


def _filter_min_pages(events: list[BrowsingEvent], min_pages: int) -> list[BrowsingEvent]:
    """Drop events of users with fewer than *min_pages* events; events with
    no user tag (single-user logs) are always kept."""
    counts: dict[str, int] = {}
    for e in events:
        if e.user is not None:
            counts[e.user] = counts.get(e.user, 0) + 1
    return [e for e in events
            if e.user is None or counts[e.user] >= min_pages]


def build_report(events: list[BrowsingEvent], ad_domains, suffixes,
                 taxonomy, min_pages: int = 0) -> dict:
    """Full report over an event list; a pure function of its inputs."""
    if min_pages:
        events = _filter_min_pages(events, min_pages)
    unblocked = [e for e in events if e.decision_verdict != BLOCK]
    trackers, pages_by_domain = _tracker_set(unblocked)

    def tracker_count(event):
        return len([d for d in event.third_party_domains if d in trackers])

    avg, std = _mean_std([tracker_count(e) for e in unblocked])

    ad_totals: dict[str, int] = {}
    ads_total = ads_blocked = 0
    for event in events:
        t, b = classify_ad_iframes(event, ad_domains, suffixes)
        ads_total += t
        ads_blocked += b
        for rd in _iframe_ad_domains(event, ad_domains, suffixes):
            ad_totals[rd] = ad_totals.get(rd, 0) + 1

    per_category = {}
    for cat in taxonomy.top_categories:
        in_cat = [e for e in events if cat in e.categories]
        in_cat_unblocked = [e for e in in_cat if e.decision_verdict != BLOCK]
        c_avg, c_std = _mean_std([tracker_count(e) for e in in_cat_unblocked])
        c_ads = c_ads_blocked = 0
        for event in in_cat:
            t, b = classify_ad_iframes(event, ad_domains, suffixes)
            c_ads += t
            c_ads_blocked += b
        c_trackers = set()
        for event in in_cat_unblocked:
            c_trackers.update(d for d in event.third_party_domains if d in trackers)
        per_category[cat] = {
            "pagesTotal": len(in_cat),
            "pagesDistinct": len({e.page_hash for e in in_cat}),
            "pagesBlocked": len([e for e in in_cat if e.decision_verdict == BLOCK]),
            "adsTotal": c_ads,
            "adsBlocked": c_ads_blocked,
            "avgTrackersPerPage": c_avg,
            "stdTrackersPerPage": c_std,
            "distinctTrackers": len(c_trackers),
            "urlPolicyPages": len([e for e in in_cat if e.decision_reason == REASON_URL]),
        }

    pages_total = len(events)
    pages_blocked = len([e for e in events if e.decision_verdict == BLOCK])
    top_trackers = sorted(((d, len(pages_by_domain[d])) for d in trackers),
                          key=lambda item: (-item[1], item[0]))[:TOP_TRACKERS]
    top_ads = sorted(ad_totals.items(), key=lambda item: (-item[1], item[0]))[:TOP_AD_DOMAINS]

    return {
        "overall": {
            "pagesTotal": pages_total,
            "pagesDistinct": len({e.page_hash for e in events}),
            "pagesBlocked": pages_blocked,
            "pctPagesBlocked": (100.0 * pages_blocked / pages_total) if pages_total else 0.0,
            "adsTotal": ads_total,
            "adsBlocked": ads_blocked,
            "pctAdsBlocked": (100.0 * ads_blocked / ads_total) if ads_total else 0.0,
            "avgTrackers": avg,
            "stdTrackers": std,
            "distinctTrackers": len(trackers),
            "urlPolicyPages": len([e for e in events if e.decision_reason == REASON_URL]),
            "topTrackers": [
                {"domain": d, "pages": n,
                 "pctPages": (100.0 * n / len(unblocked)) if unblocked else 0.0}
                for d, n in top_trackers],
            "topAdDomains": [
                {"domain": d, "ads": n,
                 "pctAds": (100.0 * n / ads_total) if ads_total else 0.0}
                for d, n in top_ads],
        },
        "perCategory": per_category,
    }


def _fmt(value, digits=2):
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.{digits}f}"
    return str(value)


def render_report(report: dict, fmt: str) -> str:
    """Render as canonical JSON or as markdown tables."""
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt != "markdown-table":
        raise UnknownFormat(fmt)

    o = report["overall"]
    lines = [
        "# Browsing report",
        "",
        f"- pages: {o['pagesTotal']} total, {o['pagesDistinct']} distinct, "
        f"{o['pagesBlocked']} blocked ({_fmt(o['pctPagesBlocked'])}%)",
        f"- iframe ads: {o['adsTotal']} total, {o['adsBlocked']} blocked "
        f"({_fmt(o['pctAdsBlocked'])}%)",
        f"- trackers per allowed page: avg {_fmt(o['avgTrackers'])}, "
        f"std {_fmt(o['stdTrackers'])}, {o['distinctTrackers']} distinct",
        f"- pages decided by per-URL policy: {o['urlPolicyPages']}",
        "",
        "## Per category",
        "",
        "| category | pages | distinct | blocked | ads | ads blocked "
        "| trackers avg | trackers std | distinct trackers | per-URL pages |",
        "|---|---|---|---|---|---|---|---|---|---|",
    ]
    for cat, row in report["perCategory"].items():
        lines.append(
            f"| {cat} | {row['pagesTotal']} | {row['pagesDistinct']} "
            f"| {row['pagesBlocked']} | {row['adsTotal']} | {row['adsBlocked']} "
            f"| {_fmt(row['avgTrackersPerPage'])} | {_fmt(row['stdTrackersPerPage'])} "
            f"| {row['distinctTrackers']} | {row['urlPolicyPages']} |")
    lines += ["", "## Top ad domains", "", "| rank | domain | ads | share |", "|---|---|---|---|"]
    for i, row in enumerate(o["topAdDomains"], start=1):
        lines.append(f"| {i} | {row['domain']} | {row['ads']} | {_fmt(row['pctAds'])}% |")
    lines += ["", "## Top trackers", "", "| rank | domain | pages | share |", "|---|---|---|---|"]
    for i, row in enumerate(o["topTrackers"], start=1):
        lines.append(f"| {i} | {row['domain']} | {row['pages']} | {_fmt(row['pctPages'])}% |")
    return "\n".join(lines) + "\n"
