"""Third-party detection and the cross-site tracker heuristic.

A third-party registrable domain becomes a "tracker" once it has been seen
on three or more distinct first-party domains.  Requests are blocked only
when all four conditions hold: the page decision is Block, the request is
third-party, its domain is not allowlisted, and it is a tracker.
Observations are recorded regardless of the blocking outcome, so evidence
accumulates even on allowed pages.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from .errors import SameParty
from .policy import PolicyDecision
from .suffixes import PublicSuffixes

TRACKER_THRESHOLD = 3


class TrackerRegistry:
    """third-party registrable domain -> set of first parties it was seen on."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._lock = threading.RLock()
        self.observations: dict[str, set[str]] = {}
        if self.path and self.path.exists():
            raw = json.loads(self.path.read_text(encoding="utf-8"))
            self.observations = {d: set(firsts) for d, firsts in raw.items()}

    def record(self, third: str, first: str) -> None:
        if third == first:
            raise SameParty(third)
        with self._lock:
            self.observations.setdefault(third, set()).add(first)

    def first_party_count(self, domain: str) -> int:
        with self._lock:
            return len(self.observations.get(domain, ()))

    def is_tracker(self, domain: str) -> bool:
        return self.first_party_count(domain) >= TRACKER_THRESHOLD

    def record_and_check(self, third: str, first: str) -> bool:
        """Atomically record the observation and report tracker status."""
        with self._lock:
            self.record(third, first)
            return len(self.observations[third]) >= TRACKER_THRESHOLD

    def reset(self) -> None:
        with self._lock:
            self.observations.clear()
            self.save()

    def save(self) -> None:
        if self.path is None:
            return
        with self._lock:
            obj = {d: sorted(firsts) for d, firsts in sorted(self.observations.items())}
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        os.replace(tmp, self.path)


def should_block_request(request_host: str, page_host: str,
                         page_decision: PolicyDecision,
                         registry: TrackerRegistry,
                         allowlist, suffixes: PublicSuffixes) -> bool:
    """Final per-request verdict; also records the cross-site observation.

    The observation is recorded whenever the request is third-party, before
    the tracker test, so a domain's third distinct first party is already
    the one that gets it blocked.
    """
    request_rd = suffixes.registrable_domain(request_host)
    page_rd = suffixes.registrable_domain(page_host)
    if request_rd == page_rd:
        return False
    tracker = registry.record_and_check(request_rd, page_rd)
    return page_decision.blocked and request_rd not in allowlist and tracker
