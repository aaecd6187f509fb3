"""Offline replay of recorded browsing over the live decision pipeline.

Each replay record describes one page load: the URL, its features (inline,
or an HTML file to extract them from), the hosts of its subresource
requests, and its iframe URLs.  Replaying emits exactly one browsing event
per well-formed record and is deterministic given the log, the policy
config, the initial registry state, and the data files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from urllib.parse import urlsplit

from .categorize import CategoryCache, PageCategorizer
from .errors import MalformedRecord, MalformedUrl
from .events import BrowsingEvent, page_hash
from .pages import PageFeatures, RawPage, extract_features, normalize_url
from .runtime import Gateway
from .trackers import should_block_request


@dataclass
class ReplayRecord:
    page: str
    html_path: str | None = None
    features: dict | None = None
    subresources: list[str] = field(default_factory=list)
    iframes: list[str] = field(default_factory=list)
    user: str | None = None


def parse_record(line: str) -> ReplayRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(str(exc)) from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("page"), str):
        raise MalformedRecord("record needs a 'page' string")
    return ReplayRecord(
        page=obj["page"],
        html_path=obj.get("html"),
        features=obj.get("features"),
        subresources=list(obj.get("subresources") or []),
        iframes=list(obj.get("iframes") or []),
        user=obj.get("user"),
    )


def _features_for(record: ReplayRecord, url: str, base_dir: Path,
                  gateway: Gateway) -> PageFeatures:
    hostname = urlsplit(url).hostname or ""
    if record.features is not None:
        inline = record.features
        return PageFeatures(
            normalized_url=url,
            hostname=hostname,
            registrable_domain=gateway.suffixes.registrable_domain(hostname),
            title=inline.get("title", ""),
            keywords=list(inline.get("keywords") or []),
            body_text=inline.get("body", ""),
            declared_category=inline.get("declaredCategory"),
        )
    if record.html_path:
        body = (base_dir / record.html_path).read_bytes()
        return extract_features(RawPage(url=url, body=body),
                                gateway.taxonomy, gateway.suffixes)
    return PageFeatures(
        normalized_url=url, hostname=hostname,
        registrable_domain=gateway.suffixes.registrable_domain(hostname))


@dataclass
class ReplayResult:
    events: list[BrowsingEvent]
    skipped: int

    def write_jsonl(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for event in self.events:
                fh.write(event.to_json_line() + "\n")


def run_replay(lines, gateway: Gateway, base_dir: str | Path = ".") -> ReplayResult:
    """Replay raw JSONL lines; malformed records are skipped and counted.

    Uses a fresh categorization cache so results depend only on the inputs,
    not on prior live traffic.  Event timestamps are the emission index.
    """
    base_dir = Path(base_dir)
    categorizer = PageCategorizer(
        gateway.taxonomy, gateway.domain_list, gateway.lexicon,
        gateway.stopwords, gateway.suffixes, alpha=gateway.categorizer.alpha,
        cache=CategoryCache(),
        overrides=gateway.policy.config.category_overrides)

    events: list[BrowsingEvent] = []
    skipped = 0
    for line in lines:
        if not line.strip():
            continue
        try:
            record = parse_record(line)
            url = normalize_url(record.page)
        except (MalformedRecord, MalformedUrl):
            skipped += 1
            continue
        features = _features_for(record, url, base_dir, gateway)
        assignment = categorizer.categorize_page(features)
        decision = gateway.policy.resolve(url, assignment)

        page_host = features.hostname
        page_rd = gateway.suffixes.registrable_domain(page_host)
        third: set[str] = set()
        blocked: set[str] = set()
        for host in record.subresources:
            rd = gateway.suffixes.registrable_domain(host)
            if rd == page_rd:
                continue
            hit = should_block_request(host, page_host, decision,
                                       gateway.registry, gateway.allowlist,
                                       gateway.suffixes)
            third.add(rd)
            if hit:
                blocked.add(rd)

        events.append(BrowsingEvent(
            timestamp=len(events),
            page_hash=page_hash(url),
            categories=list(assignment.categories),
            decision_verdict=decision.verdict,
            decision_reason=decision.reason,
            third_party_domains=third,
            blocked_domains=blocked,
            iframe_urls=list(record.iframes),
            user=record.user,
        ))
    return ReplayResult(events, skipped)


def replay_file(path: str | Path, gateway: Gateway) -> ReplayResult:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    return run_replay(lines, gateway, base_dir=path.parent)
