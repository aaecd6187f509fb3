"""trackwall: a category-aware tracker-blocking gateway.

Classifies visited pages into interest categories, applies per-category and
per-URL blocking policies, and blocks third-party tracker connections only
on the pages the operator marked sensitive.
"""

__version__ = "0.1.0"

from .categorize import CategoryAssignment, CategoryCache, PageCategorizer
from .pages import PageFeatures, RawPage, extract_features, normalize_url
from .policy import ALLOW, BLOCK, PolicyConfig, PolicyDecision, PolicyStore, resolve
from .runtime import Gateway
from .suffixes import PublicSuffixes
from .trackers import TrackerRegistry, should_block_request

__all__ = [
    "ALLOW", "BLOCK", "CategoryAssignment", "CategoryCache", "Gateway",
    "PageCategorizer", "PageFeatures", "PolicyConfig", "PolicyDecision",
    "PolicyStore", "PublicSuffixes", "RawPage", "TrackerRegistry",
    "extract_features", "normalize_url", "resolve", "should_block_request",
    "__version__",
]
