"""Field-weighted n-gram scoring and threshold-based category selection.

Pages are scored by summing, over every lexicon term found in a field,
``fieldWeight * termFrequency * idf * categoryWeight``.  The categories kept
are those scoring strictly above ``alpha * (max - mean)``, capped at the
three highest.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Mapping

from .datafiles import Lexicon, Taxonomy
from .errors import AllZeroScores
from .pages import PageFeatures

DEFAULT_ALPHA = 0.3

# more descriptive fields weigh more: keywords > title > url > body
FIELD_WEIGHTS = {"url": 3.0, "title": 4.0, "keywords": 5.0, "body": 1.0}

MAX_CATEGORIES = 3

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str, stopwords: frozenset[str]) -> list[str]:
    """Lowercased alphanumeric tokens, single characters and stopwords dropped."""
    return [t for t in _TOKEN_RE.findall(text.lower())
            if len(t) >= 2 and t not in stopwords]


def ngram_counts(text: str, stopwords: frozenset[str]) -> Counter:
    """Unigram and adjacent-bigram frequencies of the filtered token stream."""
    tokens = tokenize(text, stopwords)
    counts = Counter(tokens)
    counts.update(f"{a} {b}" for a, b in zip(tokens, tokens[1:]))
    return counts


def extract_ngrams(text: str, field: str,
                   stopwords: frozenset[str]) -> list[tuple[str, float, int]]:
    """(term, fieldWeight, termFrequency) triples for one data field."""
    weight = FIELD_WEIGHTS[field]
    return [(term, weight, tf) for term, tf in ngram_counts(text, stopwords).items()]


def score_terms(features: PageFeatures, lexicon: Lexicon,
                stopwords: frozenset[str]) -> dict[str, float]:
    """Accumulate per-category scores over all four data fields.

    Terms absent from the lexicon contribute nothing; a page without any
    lexicon term scores empty.  Accumulation order is fixed (fields in
    declaration order, terms and categories sorted) so results are
    bit-for-bit reproducible.
    """
    field_texts: list[tuple[str, Iterable[str]]] = [
        ("url", [features.normalized_url]),
        ("title", [features.title]),
        ("keywords", features.keywords),
        ("body", [features.body_text]),
    ]
    scores: dict[str, float] = {}
    for field, texts in field_texts:
        weight = FIELD_WEIGHTS[field]
        texts = list(texts)
        if len(texts) == 1:
            counts = ngram_counts(texts[0], stopwords)
        else:
            counts = Counter()
            for text in texts:
                counts.update(ngram_counts(text, stopwords))
        for term in sorted(counts):
            entry = lexicon.get(term)
            if entry is None:
                continue
            for cat in sorted(entry.category_weights):
                scores[cat] = scores.get(cat, 0.0) + (
                    weight * counts[term] * entry.idf * entry.category_weights[cat])
    return scores


def select_categories(scores: Mapping[str, float], taxonomy: Taxonomy,
                      alpha: float = DEFAULT_ALPHA) -> list[str]:
    """Categories scoring strictly above ``alpha * (max - mean)``, best first.

    The mean runs over every top-level category (absent scores count as 0).
    At most three categories are returned, ties at the cut broken by
    ascending name; the top scorer always survives.

    Raises AllZeroScores when nothing scored positive.
    """
    positive = {c: s for c, s in scores.items() if s > 0.0}
    if not positive:
        raise AllZeroScores("no category scored above zero")
    maximum = max(positive.values())
    mean = sum(positive.values()) / len(taxonomy.top_categories)
    threshold = alpha * (maximum - mean)
    qualifying = sorted((c for c in positive if positive[c] > threshold),
                        key=lambda c: (-positive[c], c))
    if not qualifying:  # unreachable while threshold < maximum; kept as a guard
        best = min(positive, key=lambda c: (-positive[c], c))
        return [best]
    return qualifying[:MAX_CATEGORIES]
