"""Blocking policy: blocked categories, per-URL overrides, recategorizations.

Per-URL policies prevail over category policy; a page in several categories
is blocked as soon as any of them is blocked; with an empty config nothing
is blocked.  The config persists as one human-editable JSON document written
atomically.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path

from .categorize import CategoryAssignment, MAX_CATEGORIES
from .datafiles import Taxonomy
from .errors import MalformedUrl, TooManyCategories, UnknownCategory
from .pages import normalize_url

BLOCK = "block"
ALLOW = "allow"
CLEAR = "clear"

REASON_URL = "url-override"
REASON_CATEGORY = "category-match"
REASON_DEFAULT = "default-allow"


@dataclass(frozen=True)
class PolicyDecision:
    verdict: str  # BLOCK or ALLOW
    reason: str
    matched_categories: tuple[str, ...] = ()

    @property
    def blocked(self) -> bool:
        return self.verdict == BLOCK


@dataclass
class PolicyConfig:
    blocked_categories: set[str] = field(default_factory=set)
    url_policies: dict[str, str] = field(default_factory=dict)
    category_overrides: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {
            "blockedCategories": sorted(self.blocked_categories),
            "urlPolicies": dict(sorted(self.url_policies.items())),
            "categoryOverrides": {u: list(c) for u, c in sorted(self.category_overrides.items())},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PolicyConfig":
        return cls(
            blocked_categories=set(obj.get("blockedCategories", [])),
            url_policies=dict(obj.get("urlPolicies", {})),
            category_overrides={u: tuple(c) for u, c in obj.get("categoryOverrides", {}).items()},
        )


def resolve(url: str, assignment: CategoryAssignment,
            config: PolicyConfig) -> PolicyDecision:
    """Block/Allow verdict for a page under the given config.

    Pure; the assignment is expected to have category overrides already
    applied by the categorizer.
    """
    url_verdict = config.url_policies.get(url)
    if url_verdict is not None:
        return PolicyDecision(url_verdict, REASON_URL)
    matched = tuple(c for c in assignment.categories if c in config.blocked_categories)
    if matched:
        return PolicyDecision(BLOCK, REASON_CATEGORY, matched)
    return PolicyDecision(ALLOW, REASON_DEFAULT)


class PolicyStore:
    """Thread-safe owner of the PolicyConfig with atomic persistence.

    Reads may run concurrently with a write; a reader observes either the
    old or the new config, never a partial one.
    """

    def __init__(self, taxonomy: Taxonomy, path: str | Path | None = None):
        self.taxonomy = taxonomy
        self.path = Path(path) if path else None
        self._lock = threading.RLock()
        self.config = PolicyConfig()
        if self.path and self.path.exists():
            self.config = PolicyConfig.from_json_obj(
                json.loads(self.path.read_text(encoding="utf-8")))

    # -- queries ------------------------------------------------------------

    def resolve(self, url: str, assignment: CategoryAssignment) -> PolicyDecision:
        with self._lock:
            return resolve(url, assignment, self.config)

    def blocked_categories(self) -> list[str]:
        with self._lock:
            return sorted(self.config.blocked_categories)

    def url_policy(self, url: str) -> str | None:
        with self._lock:
            return self.config.url_policies.get(url)

    def override_for(self, url: str) -> tuple[str, ...] | None:
        with self._lock:
            return self.config.category_overrides.get(url)

    # -- mutations ----------------------------------------------------------

    def set_category_blocked(self, category: str, blocked: bool) -> None:
        if category not in self.taxonomy:
            raise UnknownCategory(category)
        with self._lock:
            if blocked:
                self.config.blocked_categories.add(category)
            else:
                self.config.blocked_categories.discard(category)
            self._persist()

    def replace_blocked_categories(self, categories) -> None:
        cats = list(categories)
        for c in cats:
            if c not in self.taxonomy:
                raise UnknownCategory(c)
        with self._lock:
            self.config.blocked_categories = set(cats)
            self._persist()

    def set_url_policy(self, url: str, verdict: str) -> str:
        """Set or clear the per-URL policy; returns the normalized URL."""
        normalized = normalize_url(url)
        if verdict not in (BLOCK, ALLOW, CLEAR):
            raise ValueError(f"bad verdict {verdict!r}")
        with self._lock:
            if verdict == CLEAR:
                self.config.url_policies.pop(normalized, None)
            else:
                self.config.url_policies[normalized] = verdict
            self._persist()
        return normalized

    def set_category_override(self, url: str, categories) -> str:
        cats = tuple(categories)
        if len(cats) > MAX_CATEGORIES:
            raise TooManyCategories(f"{len(cats)} categories (max {MAX_CATEGORIES})")
        if not cats:
            raise UnknownCategory("empty category list")
        for c in cats:
            if c not in self.taxonomy:
                raise UnknownCategory(c)
        normalized = normalize_url(url)
        with self._lock:
            self.config.category_overrides[normalized] = cats
            self._persist()
        return normalized

    # -- persistence ----------------------------------------------------------

    def _persist(self) -> None:
        if self.path is None:
            return
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(self.config.to_json_obj(), indent=2, sort_keys=True) + "\n",
                       encoding="utf-8")
        os.replace(tmp, self.path)
