"""URL normalization and HTML feature extraction."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trackwall.errors import MalformedUrl
from trackwall.pages import BODY_CAP, RawPage, extract_features, normalize_url


class TestNormalizeUrl:
    def test_lowercases_and_strips_default_port_and_fragment(self):
        assert normalize_url("HTTP://Example.com:80/A?x=1#top") == "http://example.com/A?x=1"

    def test_already_normal(self):
        assert normalize_url("https://a.b/") == "https://a.b/"

    def test_https_default_port(self):
        assert normalize_url("https://a.b:443/x") == "https://a.b/x"

    def test_non_default_port_kept(self):
        assert normalize_url("http://a.b:8080/x") == "http://a.b:8080/x"

    def test_path_case_and_query_preserved(self):
        assert normalize_url("https://A.B/Path/UP?Q=Mixed") == "https://a.b/Path/UP?Q=Mixed"

    @pytest.mark.parametrize("bad", ["not a url", "", "/relative/only", "http://"])
    def test_malformed(self, bad):
        with pytest.raises(MalformedUrl):
            normalize_url(bad)

    @given(st.sampled_from(["http", "HTTPS", "hTTp"]),
           st.from_regex(r"[A-Za-z][A-Za-z0-9.-]{0,20}\.[a-z]{2,5}", fullmatch=True),
           st.from_regex(r"(/[A-Za-z0-9._~-]{0,8}){0,3}", fullmatch=True))
    def test_idempotent(self, scheme, host, path):
        url = f"{scheme}://{host}{path}"
        once = normalize_url(url)
        assert normalize_url(once) == once


class TestExtractFeatures:
    def test_minimal_title_page(self):
        page = RawPage(url="https://x.example/p",
                       body=b"<html><head><title>Bible study</title></head></html>")
        feat = extract_features(page)
        assert feat.title == "Bible study"
        assert feat.keywords == []
        assert feat.iframe_sources == []

    def test_relative_iframe_resolved(self):
        page = RawPage(url="https://pub.example/p",
                       body=b'<html><body><iframe src="/ad"></iframe></body></html>')
        feat = extract_features(page)
        assert feat.iframe_sources == ["https://pub.example/ad"]

    def test_all_iframe_sources_absolute(self):
        body = (b'<iframe src="//cdn.ads.example/f"></iframe>'
                b'<iframe src="https://abs.example/g"></iframe>'
                b'<iframe src="rel/h"></iframe>')
        feat = extract_features(RawPage(url="https://pub.example/dir/page", body=body))
        assert all(src.startswith("http") for src in feat.iframe_sources)
        assert len(feat.iframe_sources) == 3

    def test_keywords_comma_split(self):
        body = b'<meta name="keywords" content="health, blood pressure ,diet">'
        feat = extract_features(RawPage(url="http://k.example/", body=body))
        assert feat.keywords == ["health", "blood pressure", "diet"]

    def test_declared_category_needs_valid_name(self, shared_gateway):
        tax = shared_gateway.taxonomy
        good = b'<meta name="page-category" content="religion">'
        bad = b'<meta name="page-category" content="nonsense tag">'
        assert extract_features(RawPage(url="http://t.example/", body=good),
                                tax).declared_category == "religion"
        assert extract_features(RawPage(url="http://t.example/", body=bad),
                                tax).declared_category is None

    def test_script_and_style_stripped_from_body(self):
        body = (b"<body><script>var tracker = 1;</script>"
                b"<style>.x{color:red}</style><p>visible words</p></body>")
        feat = extract_features(RawPage(url="http://s.example/", body=body))
        assert "visible words" in feat.body_text
        assert "tracker" not in feat.body_text
        assert "color" not in feat.body_text

    def test_truncated_html_keeps_parsed_prefix(self):
        body = b"<html><title>cut off</title><p>text then <div unterminated"
        feat = extract_features(RawPage(url="http://t.example/", body=body))
        assert feat.title == "cut off"

    def test_non_html_content_yields_url_only_features(self):
        page = RawPage(url="https://img.example/x.png", content_type="image/png",
                       body=b"\x89PNG....<title>nope</title>")
        feat = extract_features(page)
        assert feat.title == ""
        assert feat.hostname == "img.example"

    def test_body_cap_applies(self):
        tail = b"<title>late title</title>"
        body = b"x" * BODY_CAP + tail
        feat = extract_features(RawPage(url="http://big.example/", body=body))
        assert feat.title == ""

    @given(st.binary(max_size=4096))
    @settings(max_examples=200, deadline=None)
    def test_never_raises_on_arbitrary_bytes(self, blob):
        feat = extract_features(RawPage(url="http://fuzz.example/x", body=blob))
        assert feat.normalized_url == "http://fuzz.example/x"

    @given(st.text(max_size=2048))
    @settings(max_examples=100, deadline=None)
    def test_never_raises_on_arbitrary_text(self, text):
        extract_features(RawPage(url="http://fuzz.example/t", body=text.encode("utf-8")))
