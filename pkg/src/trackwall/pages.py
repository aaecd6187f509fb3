"""Turn a fetched document into the features the categorizer consumes.

Parsing is deliberately forgiving: features feed a statistical scorer, so a
tag-level scan with error recovery is enough.  ``extract_features`` never
raises, whatever bytes arrive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from html.parser import HTMLParser
from urllib.parse import urljoin, urlsplit, urlunsplit

from .errors import MalformedUrl

BODY_CAP = 2 * 1024 * 1024  # bytes of HTML considered per page

_DEFAULT_PORTS = {"http": 80, "https": 443}
_CATEGORY_META = "page-category"


def normalize_url(url: str) -> str:
    """Canonical form used for cache keys, policies, and hashing.

    Lowercases scheme and host, strips a default port and the fragment,
    and leaves path and query untouched.
    """
    try:
        parts = urlsplit(url)
        host = parts.hostname
        port = parts.port
    except ValueError as exc:
        raise MalformedUrl(url) from exc
    if not parts.scheme or not host:
        raise MalformedUrl(url)
    scheme = parts.scheme.lower()
    netloc = host.lower()
    if port is not None and port != _DEFAULT_PORTS.get(scheme):
        netloc = f"{netloc}:{port}"
    return urlunsplit((scheme, netloc, parts.path, parts.query, ""))


@dataclass
class RawPage:
    url: str
    content_type: str = "text/html"
    body: bytes = b""
    fetch_status: int = 200


@dataclass
class PageFeatures:
    normalized_url: str
    hostname: str
    registrable_domain: str = ""
    title: str = ""
    keywords: list[str] = field(default_factory=list)
    body_text: str = ""
    declared_category: str | None = None
    iframe_sources: list[str] = field(default_factory=list)


class _FeatureParser(HTMLParser):
    """Collects title, meta keywords/category, visible text, iframe srcs."""

    _SKIP_TEXT = {"script", "style", "noscript", "template"}

    def __init__(self, base_url: str):
        super().__init__(convert_charrefs=True)
        self.base_url = base_url
        self.title_parts: list[str] = []
        self.keywords = ""
        self.declared = None
        self.text_parts: list[str] = []
        self.iframes: list[str] = []
        self._in_title = False
        self._title_done = False
        self._skip_depth = 0

    def handle_starttag(self, tag, attrs):
        if tag in self._SKIP_TEXT:
            self._skip_depth += 1
            return
        if tag == "title" and not self._title_done:
            self._in_title = True
        elif tag == "meta":
            d = dict(attrs)
            name = (d.get("name") or "").lower()
            if name == "keywords" and not self.keywords:
                self.keywords = d.get("content") or ""
            elif name == _CATEGORY_META and self.declared is None:
                self.declared = (d.get("content") or "").strip().lower()
        elif tag == "iframe":
            src = dict(attrs).get("src")
            if src:
                self.iframes.append(urljoin(self.base_url, src))

    def handle_endtag(self, tag):
        if tag in self._SKIP_TEXT and self._skip_depth > 0:
            self._skip_depth -= 1
        elif tag == "title" and self._in_title:
            self._in_title = False
            self._title_done = True

    def handle_data(self, data):
        if self._skip_depth:
            return
        if self._in_title:
            self.title_parts.append(data)
        elif data.strip():
            self.text_parts.append(data.strip())


def extract_features(page: RawPage, taxonomy=None, suffixes=None) -> PageFeatures:
    """Best-effort extraction; non-HTML responses yield URL-only features."""
    normalized = normalize_url(page.url)
    hostname = urlsplit(normalized).hostname or ""
    features = PageFeatures(
        normalized_url=normalized,
        hostname=hostname,
        registrable_domain=suffixes.registrable_domain(hostname) if suffixes else hostname,
    )
    if "html" not in (page.content_type or "").lower():
        return features

    text = page.body[:BODY_CAP].decode("utf-8", errors="replace")
    parser = _FeatureParser(normalized)
    try:
        parser.feed(text)
        parser.close()
    except Exception:
        pass  # keep whatever was collected from the parsed prefix

    features.title = " ".join(" ".join(parser.title_parts).split())
    features.keywords = [k.strip() for k in parser.keywords.split(",") if k.strip()]
    features.body_text = " ".join(parser.text_parts)
    features.iframe_sources = list(parser.iframes)
    if parser.declared and (taxonomy is None or parser.declared in taxonomy):
        features.declared_category = parser.declared
    return features
