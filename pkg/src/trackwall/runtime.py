"""Composition root: loads data files and wires the shared stores.

A Gateway owns everything the proxy, the control API, and replay mode share:
taxonomy, lexicon, domain lists, the categorizer and its cache, the policy
store, the tracker registry, the event log, and the per-client page
contexts.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from .categorize import CategoryAssignment, CategoryCache, PageCategorizer
from .datafiles import (DEFAULT_DATA_DIR, DomainSet, load_domain_list,
                        load_lexicon, load_stopwords, load_taxonomy)
from .events import BrowsingEvent, EventLog, page_hash
from .pages import PageFeatures
from .policy import PolicyDecision, PolicyStore
from .suffixes import PublicSuffixes
from .textscore import DEFAULT_ALPHA
from .trackers import TrackerRegistry, should_block_request


@dataclass
class PageContext:
    """Per-client state for the most recent page navigation."""

    client_id: str
    page_url: str
    page_host: str
    assignment: CategoryAssignment
    decision: PolicyDecision
    event: BrowsingEvent
    started_at: float = field(default_factory=time.time)
    third_parties: dict[str, dict] = field(default_factory=dict)


class ContextMap:
    """At most one current context per client; thread-safe."""

    def __init__(self):
        self._lock = threading.RLock()
        self._by_client: dict[str, PageContext] = {}
        self._order: list[str] = []

    def install(self, ctx: PageContext) -> PageContext | None:
        """Install a new context, returning the one it replaces (if any)."""
        with self._lock:
            previous = self._by_client.get(ctx.client_id)
            self._by_client[ctx.client_id] = ctx
            if ctx.client_id in self._order:
                self._order.remove(ctx.client_id)
            self._order.append(ctx.client_id)
            return previous

    def get(self, client_id: str) -> PageContext | None:
        with self._lock:
            return self._by_client.get(client_id)

    def find_by_page(self, page_url: str) -> PageContext | None:
        with self._lock:
            for client_id in reversed(self._order):
                ctx = self._by_client[client_id]
                if ctx.page_url == page_url:
                    return ctx
            return None

    def most_recent(self) -> PageContext | None:
        with self._lock:
            return self._by_client[self._order[-1]] if self._order else None

    def all(self) -> list[PageContext]:
        with self._lock:
            return [self._by_client[c] for c in self._order]


class Gateway:
    """Shared runtime for the proxy, the control API, and replay mode."""

    def __init__(self, data_dir: str | Path | None = None,
                 policy_path: str | Path | None = None,
                 registry_path: str | Path | None = None,
                 events_path: str | Path | None = None,
                 broken_reports_path: str | Path | None = None,
                 alpha: float = DEFAULT_ALPHA):
        self.data_dir = Path(data_dir) if data_dir else DEFAULT_DATA_DIR
        self.taxonomy = load_taxonomy(self.data_dir)
        self.stopwords = load_stopwords(self.data_dir)
        self.domain_list = load_domain_list(self.data_dir, self.taxonomy)
        self.lexicon = load_lexicon(self.data_dir, self.taxonomy)
        self.suffixes = PublicSuffixes.load(self.data_dir / "public_suffix_snapshot.dat")
        self.allowlist = DomainSet(self.data_dir / "allowed_domains.txt")
        self.ad_domains = DomainSet(self.data_dir / "ad_domains.txt")

        self.policy = PolicyStore(self.taxonomy, policy_path)
        self.categorizer = PageCategorizer(
            self.taxonomy, self.domain_list, self.lexicon, self.stopwords,
            self.suffixes, alpha=alpha,
            overrides=self.policy.config.category_overrides)
        self.registry = TrackerRegistry(registry_path)
        self.events = EventLog(events_path)
        self.contexts = ContextMap()
        self.broken_reports_path = Path(broken_reports_path) if broken_reports_path else None
        self.broken_page_reports: list[dict] = []
        self.orphan_requests = 0

    # -- the decision pipeline (shared by live proxy and replay) ------------

    def decide_page(self, features: PageFeatures):
        assignment = self.categorizer.categorize_page(features)
        decision = self.policy.resolve(features.normalized_url, assignment)
        return assignment, decision

    def decide_subresource(self, request_host: str, page_host: str,
                           decision: PolicyDecision) -> bool:
        return should_block_request(request_host, page_host, decision,
                                    self.registry, self.allowlist, self.suffixes)

    def open_page_context(self, client_id: str, features: PageFeatures,
                          timestamp: float | None = None) -> PageContext:
        assignment, decision = self.decide_page(features)
        event = self.events.register(BrowsingEvent(
            timestamp=time.time() if timestamp is None else timestamp,
            page_hash=page_hash(features.normalized_url),
            categories=list(assignment.categories),
            decision_verdict=decision.verdict,
            decision_reason=decision.reason,
            iframe_urls=list(features.iframe_sources),
        ))
        ctx = PageContext(
            client_id=client_id,
            page_url=features.normalized_url,
            page_host=features.hostname,
            assignment=assignment,
            decision=decision,
            event=event,
        )
        replaced = self.contexts.install(ctx)
        if replaced is not None:
            self.events.finalize(replaced.event)
        return ctx

    def handle_context_subresource(self, ctx: PageContext, request_host: str) -> bool:
        """Run the block decision for a subresource and record it on the event."""
        blocked = self.decide_subresource(request_host, ctx.page_host, ctx.decision)
        rd = self.suffixes.registrable_domain(request_host)
        if rd != self.suffixes.registrable_domain(ctx.page_host):
            ctx.event.third_party_domains.add(rd)
            if blocked:
                ctx.event.blocked_domains.add(rd)
            ctx.third_parties[rd] = {
                "domain": rd,
                "isTracker": self.registry.is_tracker(rd),
                "blocked": blocked,
            }
        return blocked

    def report_broken_page(self, url: str, note: str = "") -> dict:
        """Record an operator report of a page broken by blocking.

        These are the review queue for allowlist additions; duplicates are
        kept on purpose.
        """
        entry = {"url": url, "note": note, "reportedAt": time.time()}
        self.broken_page_reports.append(entry)
        if self.broken_reports_path:
            with self.broken_reports_path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry, sort_keys=True) + "\n")
        return entry

    def close(self) -> None:
        self.events.close()
        self.registry.save()
