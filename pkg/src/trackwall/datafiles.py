"""Loaders for the plain-text data files shipped with the gateway.

All files are UTF-8 with ``#`` comment lines:

* ``taxonomy.txt``       one top-level category per line
* ``subcategories.tsv``  ``<sub>\\t<top>``
* ``domains.tsv``        ``<host>\\t<category>[,category...]``
* ``lexicon.tsv``        ``<term>\\t<idf>\\t<cat>:<weight>[,...]``
* ``stopwords.txt``      one stopword per line
* ``allowed_domains.txt``/``ad_domains.txt``  one registrable domain per line
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import FileUnreadable

DEFAULT_DATA_DIR = Path(__file__).parent / "data"


def _data_lines(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FileUnreadable(str(path)) from exc
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


@dataclass(frozen=True)
class Taxonomy:
    top_categories: tuple[str, ...]
    subcategories: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.top_categories)) != len(self.top_categories):
            raise ValueError("duplicate top-level categories")
        for sub, top in self.subcategories.items():
            if top not in self.top_categories:
                raise ValueError(f"subcategory {sub!r} maps to unknown {top!r}")

    def __contains__(self, category: str) -> bool:
        return category in self.top_categories


@dataclass(frozen=True)
class LexiconEntry:
    idf: float
    category_weights: dict[str, float]


class Lexicon:
    """Unigram/bigram term table with per-category weights."""

    def __init__(self, entries: dict[str, LexiconEntry], taxonomy: Taxonomy):
        for term, entry in entries.items():
            if not 1 <= len(term.split(" ")) <= 2:
                raise ValueError(f"term {term!r} is not a unigram or bigram")
            if entry.idf < 0:
                raise ValueError(f"negative idf for {term!r}")
            for cat, w in entry.category_weights.items():
                if cat not in taxonomy:
                    raise ValueError(f"term {term!r} references unknown category {cat!r}")
                if w <= 0:
                    raise ValueError(f"non-positive weight for {term!r}/{cat!r}")
        self.entries = entries

    def get(self, term: str) -> LexiconEntry | None:
        return self.entries.get(term)

    def __len__(self) -> int:
        return len(self.entries)


class DomainCategoryList:
    """Pre-categorized hostnames/registrable domains."""

    def __init__(self, entries: dict[str, frozenset[str]], taxonomy: Taxonomy):
        for host, cats in entries.items():
            if not cats:
                raise ValueError(f"empty category set for {host!r}")
            for cat in cats:
                if cat not in taxonomy:
                    raise ValueError(f"{host!r} references unknown category {cat!r}")
        self.entries = entries

    def lookup(self, hostname: str, registrable: str) -> frozenset[str] | None:
        """Exact hostname first, then the registrable-domain fallback."""
        hit = self.entries.get(hostname)
        if hit is None:
            hit = self.entries.get(registrable)
        return hit


class DomainSet:
    """A reloadable set of registrable domains (allowlist, ad list)."""

    def __init__(self, path: Path):
        self._path = Path(path)
        self.domains: frozenset[str] = frozenset()
        self.reload()

    def reload(self) -> None:
        domains = frozenset(_data_lines(self._path))
        if not domains:
            raise ValueError(f"{self._path} loaded empty")
        self.domains = domains

    def __contains__(self, domain: str) -> bool:
        return domain in self.domains

    def __len__(self) -> int:
        return len(self.domains)

    def __iter__(self):
        return iter(self.domains)


def load_taxonomy(data_dir: Path) -> Taxonomy:
    tops = tuple(_data_lines(data_dir / "taxonomy.txt"))
    subs = {}
    sub_path = data_dir / "subcategories.tsv"
    if sub_path.exists():
        for line in _data_lines(sub_path):
            sub, top = line.split("\t")
            subs[sub] = top
    return Taxonomy(tops, subs)


def load_stopwords(data_dir: Path) -> frozenset[str]:
    return frozenset(_data_lines(data_dir / "stopwords.txt"))


def load_domain_list(data_dir: Path, taxonomy: Taxonomy) -> DomainCategoryList:
    entries = {}
    for line in _data_lines(data_dir / "domains.tsv"):
        host, cats = line.split("\t")
        entries[host.lower()] = frozenset(cats.split(","))
    return DomainCategoryList(entries, taxonomy)


def load_lexicon(data_dir: Path, taxonomy: Taxonomy) -> Lexicon:
    entries = {}
    for line in _data_lines(data_dir / "lexicon.tsv"):
        term, idf, spec = line.split("\t")
        weights = {}
        for part in spec.split(","):
            cat, w = part.rsplit(":", 1)
            weights[cat] = float(w)
        entries[term] = LexiconEntry(float(idf), weights)
    return Lexicon(entries, taxonomy)
