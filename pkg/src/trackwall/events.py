"""Append-only browsing events: the pseudo-anonymized analytics record.

An event carries the page-URL hash (never the URL), the categories, the
decision, third-party registrable domains, the blocked subset, and iframe
URLs.  Serialized one JSON object per line with sorted keys.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass, field
from pathlib import Path


def page_hash(normalized_url: str) -> str:
    """Stable 64-bit hex digest of the normalized URL."""
    return hashlib.blake2b(normalized_url.encode("utf-8"), digest_size=8).hexdigest()


@dataclass
class BrowsingEvent:
    timestamp: float | int
    page_hash: str
    categories: list[str]
    decision_verdict: str
    decision_reason: str
    third_party_domains: set[str] = field(default_factory=set)
    blocked_domains: set[str] = field(default_factory=set)
    iframe_urls: list[str] = field(default_factory=list)
    user: str | None = None

    def to_json_obj(self) -> dict:
        obj = {
            "timestamp": self.timestamp,
            "pageHash": self.page_hash,
            "categories": list(self.categories),
            "decisionVerdict": self.decision_verdict,
            "decisionReason": self.decision_reason,
            "thirdPartyDomains": sorted(self.third_party_domains),
            "blockedDomains": sorted(self.blocked_domains),
            "iframeUrls": list(self.iframe_urls),
        }
        if self.user is not None:
            obj["user"] = self.user
        return obj

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BrowsingEvent":
        blocked = set(obj.get("blockedDomains", []))
        third = set(obj.get("thirdPartyDomains", []))
        if not blocked <= third:
            raise ValueError("blockedDomains not a subset of thirdPartyDomains")
        if not 1 <= len(obj["categories"]) <= 3:
            raise ValueError("events carry 1-3 categories")
        return cls(
            timestamp=obj["timestamp"],
            page_hash=obj["pageHash"],
            categories=list(obj["categories"]),
            decision_verdict=obj["decisionVerdict"],
            decision_reason=obj["decisionReason"],
            third_party_domains=third,
            blocked_domains=blocked,
            iframe_urls=list(obj.get("iframeUrls", [])),
            user=obj.get("user"),
        )


class EventLog:
    """Session event list, optionally mirrored to a JSONL file.

    Events are registered when the page context is created and written out
    when finalized (context replaced, or an explicit flush), so the file
    stays append-only while in-flight events keep accumulating domains.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._lock = threading.RLock()
        self._events: list[BrowsingEvent] = []
        self._pending: set[int] = set()
        self._fh = None
        if self.path:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._fh = self.path.open("a", encoding="utf-8")

    def register(self, event: BrowsingEvent) -> BrowsingEvent:
        with self._lock:
            self._events.append(event)
            self._pending.add(id(event))
        return event

    def finalize(self, event: BrowsingEvent) -> None:
        with self._lock:
            if id(event) not in self._pending:
                return
            self._pending.discard(id(event))
            if self._fh:
                self._fh.write(event.to_json_line() + "\n")
                self._fh.flush()

    def flush(self) -> None:
        with self._lock:
            for event in self._events:
                self.finalize(event)

    def snapshot(self) -> list[BrowsingEvent]:
        with self._lock:
            return list(self._events)

    def close(self) -> None:
        self.flush()
        with self._lock:
            if self._fh:
                self._fh.close()
                self._fh = None
