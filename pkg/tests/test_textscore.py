"""N-gram extraction, field-weighted scoring, and threshold selection."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trackwall.datafiles import Lexicon, LexiconEntry, Taxonomy
from trackwall.errors import AllZeroScores
from trackwall.pages import PageFeatures
from trackwall.textscore import (FIELD_WEIGHTS, extract_ngrams, ngram_counts,
                                 score_terms, select_categories, tokenize)

STOP = frozenset({"and", "the", "of", "for"})


def brute_force_select(scores, population, alpha=0.3):
    """Independent oracle: compute T, filter, sort, truncate."""
    positive = {c: s for c, s in scores.items() if s > 0}
    maximum = max(positive.values())
    mean = sum(positive.values()) / population
    threshold = alpha * (maximum - mean)
    ranked = sorted(((c, s) for c, s in positive.items() if s > threshold),
                    key=lambda cs: (-cs[1], cs[0]))
    return [c for c, _ in ranked[:3]]


def make_taxonomy(n):
    return Taxonomy(tuple(f"cat{i:02d}" for i in range(n)))


class TestNgrams:
    def test_title_hand_trace(self):
        counts = ngram_counts("Heart Disease and Diet", STOP)
        assert counts == {"heart": 1, "disease": 1, "diet": 1,
                          "heart disease": 1, "disease diet": 1}

    def test_empty_text(self):
        assert extract_ngrams("", "body", STOP) == []

    def test_repeated_token_counting(self):
        counts = ngram_counts("cancer cancer", STOP)
        assert counts["cancer"] == 2
        assert counts["cancer cancer"] == 1

    def test_field_weight_attached(self):
        grams = dict((t, w) for t, w, _tf in extract_ngrams("solo", "title", STOP))
        assert grams["solo"] == FIELD_WEIGHTS["title"]

    def test_single_char_tokens_dropped(self):
        assert tokenize("a b xy", frozenset()) == ["xy"]

    def test_split_on_non_alphanumeric(self):
        assert tokenize("state-of_the.art", STOP) == ["state", "art"]


class TestScoreTerms:
    def _lexicon(self, taxonomy, entries):
        return Lexicon({t: LexiconEntry(idf, dict(w)) for t, (idf, w) in entries.items()},
                       taxonomy)

    def test_single_title_term(self):
        tax = Taxonomy(("health & fitness",))
        lex = self._lexicon(tax, {"diabetes": (2.0, {"health & fitness": 1.0})})
        feat = PageFeatures(normalized_url="http://x.example/", hostname="x.example",
                            title="diabetes")
        scores = score_terms(feat, lex, STOP)
        assert scores == {"health & fitness": pytest.approx(8.0)}

    def test_no_matches_gives_empty_scores(self):
        tax = Taxonomy(("a",))
        lex = self._lexicon(tax, {"term": (1.0, {"a": 1.0})})
        feat = PageFeatures(normalized_url="http://x.example/", hostname="x.example",
                            title="nothing relevant here")
        assert score_terms(feat, lex, STOP) == {}

    def test_additive_across_fields(self):
        tax = Taxonomy(("a",))
        idf, w = 2.5, 0.8
        lex = self._lexicon(tax, {"gadget": (idf, {"a": w})})
        feat = PageFeatures(normalized_url="http://x.example/", hostname="x.example",
                            title="gadget", body_text="gadget gadget gadget")
        expected = (FIELD_WEIGHTS["title"] * 1 + FIELD_WEIGHTS["body"] * 3) * idf * w
        assert score_terms(feat, lex, STOP)["a"] == pytest.approx(expected)

    def test_matches_brute_force_over_term_field_pairs(self):
        rng = random.Random(7)
        tax = make_taxonomy(6)
        vocab = [f"word{i}" for i in range(30)]
        entries = {}
        for term in vocab[:20]:
            cats = rng.sample(tax.top_categories, k=rng.randint(1, 3))
            entries[term] = (rng.uniform(0.5, 5.0),
                             {c: rng.uniform(0.2, 2.0) for c in cats})
        lex = self._lexicon(tax, entries)
        feat = PageFeatures(
            normalized_url="http://brute.example/" + "-".join(rng.choices(vocab, k=3)),
            hostname="brute.example",
            title=" ".join(rng.choices(vocab, k=8)),
            keywords=[" ".join(rng.choices(vocab, k=2)) for _ in range(3)],
            body_text=" ".join(rng.choices(vocab, k=200)),
        )
        # oracle: iterate every (field, term) pair independently
        expected = {}
        field_texts = [("url", [feat.normalized_url]), ("title", [feat.title]),
                       ("keywords", feat.keywords), ("body", [feat.body_text])]
        for field, texts in field_texts:
            for text in texts:
                for term, tf in ngram_counts(text, STOP).items():
                    if term in entries:
                        idf, weights = entries[term]
                        for c, w in weights.items():
                            expected[c] = expected.get(c, 0.0) + FIELD_WEIGHTS[field] * tf * idf * w
        got = score_terms(feat, lex, STOP)
        assert set(got) == set(expected)
        for c in expected:
            assert got[c] == pytest.approx(expected[c], rel=1e-12)

    def test_scoring_fields_separately_sums_to_joint(self):
        tax = make_taxonomy(3)
        lex = self._lexicon(tax, {"alpha": (2.0, {"cat00": 1.0}),
                                  "beta": (3.0, {"cat01": 0.5})})
        base = dict(normalized_url="http://x.example/alpha", hostname="x.example")
        joint = score_terms(PageFeatures(**base, title="alpha beta", body_text="beta"),
                            lex, STOP)
        only_title = score_terms(PageFeatures(**base, title="alpha beta"), lex, STOP)
        only_body = score_terms(PageFeatures(**base, body_text="beta"), lex, STOP)
        url_only = score_terms(PageFeatures(**base), lex, STOP)
        for cat in joint:
            summed = (only_title.get(cat, 0) + only_body.get(cat, 0)
                      - url_only.get(cat, 0))  # url contribution counted twice
            assert joint[cat] == pytest.approx(summed, rel=1e-12)


class TestSelectCategories:
    def test_dominant_score_selected_alone(self):
        tax = make_taxonomy(32)
        scores = {"cat00": 10.0, "cat01": 2.0, "cat02": 0.5}
        # T = 0.3 * (10 - 12.5/32) ~ 2.883: only the max survives
        assert select_categories(scores, tax) == ["cat00"]

    def test_all_equal_selects_all(self, toy_taxonomy):
        scores = {"a": 5.0, "b": 5.0, "c": 5.0}
        assert select_categories(scores, toy_taxonomy) == ["a", "b", "c"]

    def test_top3_cap(self):
        tax = make_taxonomy(5)
        scores = {f"cat0{i}": s for i, s in enumerate([9.0, 8.0, 7.0, 6.0, 5.0])}
        assert select_categories(scores, tax) == ["cat00", "cat01", "cat02"]

    def test_tie_at_cut_broken_lexicographically(self):
        tax = make_taxonomy(8)
        scores = {"cat03": 9.0, "cat01": 8.0, "cat02": 8.0, "cat00": 8.0}
        got = select_categories(scores, tax, alpha=0.0)
        assert got == ["cat03", "cat00", "cat01"]

    def test_all_zero_raises(self, toy_taxonomy):
        with pytest.raises(AllZeroScores):
            select_categories({"a": 0.0}, toy_taxonomy)
        with pytest.raises(AllZeroScores):
            select_categories({}, toy_taxonomy)

    def test_oracle_agreement_1000_random_vectors(self):
        tax = make_taxonomy(32)
        rng = random.Random(42)
        for _ in range(1000):
            n = rng.randint(1, 32)
            cats = rng.sample(tax.top_categories, k=n)
            scores = {c: rng.uniform(0.01, 100.0) for c in cats}
            assert select_categories(scores, tax) == brute_force_select(scores, 32)

    def test_scale_invariance(self):
        tax = make_taxonomy(32)
        rng = random.Random(99)
        for _ in range(200):
            cats = rng.sample(tax.top_categories, k=rng.randint(1, 32))
            scores = {c: float(rng.randint(1, 10 ** 6)) for c in cats}
            base = select_categories(scores, tax)
            for k in (0.1, 7, 1000):
                scaled = {c: s * k for c, s in scores.items()}
                assert select_categories(scaled, tax) == base

    @given(st.dictionaries(
        st.sampled_from([f"cat{i:02d}" for i in range(32)]),
        st.floats(min_value=0.0, max_value=1e6, allow_nan=False),
        min_size=1, max_size=32))
    @settings(max_examples=300, deadline=None)
    def test_selected_scores_exceed_threshold(self, scores):
        tax = make_taxonomy(32)
        positive = {c: s for c, s in scores.items() if s > 0}
        if not positive:
            with pytest.raises(AllZeroScores):
                select_categories(scores, tax)
            return
        got = select_categories(scores, tax)
        assert 1 <= len(got) <= 3
        threshold = 0.3 * (max(positive.values()) - sum(positive.values()) / 32)
        assert all(positive[c] > threshold for c in got)
        cutoff = min(positive[c] for c in got)
        for c, s in positive.items():
            if c not in got:
                assert s <= threshold or len(got) == 3 and s <= cutoff or (
                    s == cutoff)  # lost the lexicographic tie at the cap
