"""Page categorization pipeline with its bounded result cache.

Resolution order for a page: user override, cache, publisher-declared meta
tag, pre-categorized domain list, lexicon scoring, and finally the reserved
``uncategorized`` pseudo-assignment (which category policies never block).
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass

from .datafiles import DomainCategoryList, Lexicon, Taxonomy
from .errors import AllZeroScores
from .suffixes import PublicSuffixes
from .pages import PageFeatures
from .textscore import DEFAULT_ALPHA, MAX_CATEGORIES, score_terms, select_categories

CACHE_CAPACITY = 500
UNCATEGORIZED = "uncategorized"

SOURCE_CACHE = "cache"
SOURCE_DECLARED = "declared-tag"
SOURCE_DOMAIN = "domain-list"
SOURCE_LEXICON = "lexicon"
SOURCE_OVERRIDE = "user-override"
SOURCE_FALLBACK = "fallback-uncategorized"


@dataclass(frozen=True)
class CategoryAssignment:
    categories: tuple[str, ...]
    source: str

    def __post_init__(self):
        if not 1 <= len(self.categories) <= MAX_CATEGORIES:
            raise ValueError("assignment must carry 1-3 categories")
        if len(set(self.categories)) != len(self.categories):
            raise ValueError("duplicate categories in assignment")


class CategoryCache:
    """LRU map normalized URL -> CategoryAssignment, bounded capacity."""

    def __init__(self, capacity: int = CACHE_CAPACITY):
        self.capacity = capacity
        self._entries: OrderedDict[str, CategoryAssignment] = OrderedDict()
        self._lock = threading.RLock()

    def get(self, url: str) -> CategoryAssignment | None:
        with self._lock:
            hit = self._entries.get(url)
            if hit is not None:
                self._entries.move_to_end(url)
            return hit

    def put(self, url: str, assignment: CategoryAssignment) -> None:
        with self._lock:
            self._entries[url] = assignment
            self._entries.move_to_end(url)
            while len(self._entries) > self.capacity:
                self._entries.popitem(last=False)

    def invalidate(self, url: str) -> None:
        with self._lock:
            self._entries.pop(url, None)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def __contains__(self, url: str) -> bool:
        with self._lock:
            return url in self._entries


class PageCategorizer:
    """Stateful categorizer: taxonomy + data lists + cache + override store.

    ``overrides`` is the policy engine's recategorization store, shared by
    reference; it maps normalized URL -> tuple of categories.  Lexicon
    scoring runs are counted in ``scoring_invocations`` so cache behavior is
    observable.
    """

    def __init__(self, taxonomy: Taxonomy, domain_list: DomainCategoryList,
                 lexicon: Lexicon, stopwords: frozenset[str],
                 suffixes: PublicSuffixes, alpha: float = DEFAULT_ALPHA,
                 cache: CategoryCache | None = None,
                 overrides: dict[str, tuple[str, ...]] | None = None):
        self.taxonomy = taxonomy
        self.domain_list = domain_list
        self.lexicon = lexicon
        self.stopwords = stopwords
        self.suffixes = suffixes
        self.alpha = alpha
        self.cache = cache if cache is not None else CategoryCache()
        self.overrides = overrides if overrides is not None else {}
        self.scoring_invocations = 0
        self._lock = threading.RLock()

    def categorize_by_domain(self, hostname: str) -> frozenset[str] | None:
        registrable = self.suffixes.registrable_domain(hostname)
        return self.domain_list.lookup(hostname, registrable)

    def categorize_page(self, features: PageFeatures) -> CategoryAssignment:
        url = features.normalized_url
        with self._lock:
            override = self.overrides.get(url)
            if override:
                return CategoryAssignment(tuple(override), SOURCE_OVERRIDE)
            cached = self.cache.get(url)
            if cached is not None:
                return CategoryAssignment(cached.categories, SOURCE_CACHE)

            assignment = self._compute(features)
            if assignment.source != SOURCE_FALLBACK:
                self.cache.put(url, assignment)
            return assignment

    def _compute(self, features: PageFeatures) -> CategoryAssignment:
        declared = features.declared_category
        if declared and declared in self.taxonomy:
            return CategoryAssignment((declared,), SOURCE_DECLARED)

        domain_hit = self.categorize_by_domain(features.hostname)
        if domain_hit:
            return CategoryAssignment(tuple(sorted(domain_hit)[:MAX_CATEGORIES]),
                                      SOURCE_DOMAIN)

        self.scoring_invocations += 1
        scores = score_terms(features, self.lexicon, self.stopwords)
        try:
            selected = select_categories(scores, self.taxonomy, self.alpha)
        except AllZeroScores:
            return CategoryAssignment((UNCATEGORIZED,), SOURCE_FALLBACK)
        return CategoryAssignment(tuple(selected), SOURCE_LEXICON)

    def invalidate(self, url: str) -> None:
        self.cache.invalidate(url)
