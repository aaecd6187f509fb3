"""Event loading, ad-iframe classification, tracker stats, and report building."""

import json
import random
import statistics

import pytest

from trackwall import analytics
from trackwall.errors import FileUnreadable, UnknownFormat
from trackwall.events import BrowsingEvent


def make_event(i, categories, verdict, third=(), blocked=(), iframes=(),
               reason=None, page=None, user=None):
    return BrowsingEvent(
        timestamp=i,
        page_hash=page or f"hash{i:04d}",
        categories=list(categories),
        decision_verdict=verdict,
        decision_reason=reason or ("category-match" if verdict == "block" else "default-allow"),
        third_party_domains=set(third),
        blocked_domains=set(blocked),
        iframe_urls=list(iframes),
        user=user,
    )


def random_log(rng, n_events=120):
    """Synthetic event list with revisits, multi-category pages, ads."""
    domains = [f"d{i}.example" for i in range(12)] + ["doubleclick.net", "adnxs.com"]
    cats = ["news", "sports", "religion", "science", "travel"]
    events = []
    for i in range(n_events):
        verdict = "block" if rng.random() < 0.3 else "allow"
        reason = rng.choice(["category-match" if verdict == "block" else "default-allow",
                             "url-override"])
        third = rng.sample(domains, k=rng.randint(0, 6))
        iframes = []
        for _ in range(rng.randint(0, 3)):
            dom = rng.choice(["ad.doubleclick.net", "tpc.googlesyndication.com",
                              "www.youtube.com", "cdn.taboola.com"])
            iframes.append(f"https://{dom}/frame")
        events.append(make_event(
            i, rng.sample(cats, k=rng.randint(1, 3)), verdict,
            third=third, blocked=[d for d in third if verdict == "block"][:2],
            iframes=iframes, reason=reason,
            page=f"hash{rng.randint(0, n_events // 3):04d}"))
    return events


def brute_force_report(events, ad_domains, suffixes, taxonomy):
    """Naive re-derivation of every report number (the oracle)."""
    from urllib.parse import urlsplit

    unblocked = [e for e in events if e.decision_verdict != "block"]
    pages = {}
    for e in unblocked:
        for d in e.third_party_domains:
            pages.setdefault(d, set()).add(e.page_hash)
    trackers = {d for d in pages if len(pages[d]) >= 3}

    def ads_of(e):
        out = []
        for url in e.iframe_urls:
            host = urlsplit(url).hostname or ""
            rd = suffixes.registrable_domain(host) if host else ""
            if rd in ad_domains:
                out.append(rd)
        return out

    def stats(sub):
        xs = [len(e.third_party_domains & trackers) for e in sub]
        if not xs:
            return None, None
        return statistics.fmean(xs), statistics.pstdev(xs)

    avg, std = stats(unblocked)
    all_ads = [a for e in events for a in ads_of(e)]
    blocked_ads = [a for e in events if e.decision_verdict == "block" for a in ads_of(e)]
    out = {
        "pagesTotal": len(events),
        "pagesBlocked": sum(1 for e in events if e.decision_verdict == "block"),
        "pagesDistinct": len({e.page_hash for e in events}),
        "adsTotal": len(all_ads),
        "adsBlocked": len(blocked_ads),
        "avgTrackers": avg,
        "stdTrackers": std,
        "distinctTrackers": len(trackers),
        "perCategory": {},
    }
    for cat in taxonomy.top_categories:
        sub = [e for e in events if cat in e.categories]
        sub_unblocked = [e for e in sub if e.decision_verdict != "block"]
        c_avg, c_std = stats(sub_unblocked)
        out["perCategory"][cat] = {
            "pagesTotal": len(sub),
            "pagesBlocked": sum(1 for e in sub if e.decision_verdict == "block"),
            "adsTotal": sum(len(ads_of(e)) for e in sub),
            "adsBlocked": sum(len(ads_of(e)) for e in sub if e.decision_verdict == "block"),
            "avgTrackersPerPage": c_avg,
            "stdTrackersPerPage": c_std,
        }
    return out


class TestLoadEvents:
    def test_empty_file(self, tmp_path):
        path = tmp_path / "events.jsonl"
        path.write_text("")
        loaded = analytics.load_events(path)
        assert loaded.events == [] and loaded.skipped == 0

    def test_corrupt_line_skipped_and_counted(self, tmp_path):
        good = make_event(0, ["news"], "allow").to_json_line()
        path = tmp_path / "events.jsonl"
        path.write_text(good + "\n{{{corrupt\n" + good + "\n")
        loaded = analytics.load_events(path)
        assert len(loaded.events) == 2 and loaded.skipped == 1

    def test_golden_fixture_count(self, fixtures_dir):
        loaded = analytics.load_events(fixtures_dir / "golden_events.jsonl")
        assert len(loaded.events) == 5000 and loaded.skipped == 0

    def test_unreadable(self, tmp_path):
        with pytest.raises(FileUnreadable):
            analytics.load_events(tmp_path / "missing.jsonl")

    def test_subset_invariant_enforced(self, tmp_path):
        obj = make_event(0, ["news"], "block").to_json_obj()
        obj["blockedDomains"] = ["not-in-third.example"]
        path = tmp_path / "events.jsonl"
        path.write_text(json.dumps(obj) + "\n")
        loaded = analytics.load_events(path)
        assert loaded.events == [] and loaded.skipped == 1


class TestClassifyAdIframes:
    def test_listed_domain_on_blocked_page(self, shared_gateway):
        e = make_event(0, ["news"], "block",
                       iframes=["https://ad.doubleclick.net/adi/1"])
        got = analytics.classify_ad_iframes(e, shared_gateway.ad_domains,
                                            shared_gateway.suffixes)
        assert got == (1, 1)

    def test_unlisted_domain(self, shared_gateway):
        e = make_event(0, ["news"], "block", iframes=["https://www.youtube.com/embed/x"])
        assert analytics.classify_ad_iframes(
            e, shared_gateway.ad_domains, shared_gateway.suffixes) == (0, 0)

    def test_two_ads_on_allowed_page(self, shared_gateway):
        e = make_event(0, ["news"], "allow",
                       iframes=["https://ad.doubleclick.net/a",
                                "https://cdn.taboola.com/b"])
        assert analytics.classify_ad_iframes(
            e, shared_gateway.ad_domains, shared_gateway.suffixes) == (2, 0)


class TestTrackerStats:
    def _tracker_events(self):
        # t.example appears on 3 distinct allowed pages -> tracker
        return [
            make_event(0, ["news"], "allow", third=["t.example"], page="p0"),
            make_event(1, ["news"], "allow", third=["t.example"], page="p1"),
            make_event(2, ["news"], "allow",
                       third=["t.example", "u.example", "v.example"], page="p2"),
        ]

    def test_single_page_stats(self):
        events = self._tracker_events()
        stats = analytics.tracker_stats(events)
        # only t.example qualifies; every page has exactly 1 tracker
        assert stats["trackers"] == {"t.example"}
        assert stats["avg"] == 3 / 3
        assert stats["std"] == 0.0

    def test_blocked_pages_excluded(self):
        events = self._tracker_events() + [
            make_event(3, ["adult"], "block", third=["t.example"], page="p3")]
        stats = analytics.tracker_stats(events)
        assert stats["avg"] == 1.0  # the blocked page does not dilute

    def test_all_pages_blocked_reports_empty(self):
        events = [make_event(0, ["adult"], "block", third=["t.example"])]
        stats = analytics.tracker_stats(events)
        assert stats["avg"] is None and stats["std"] is None
        assert stats["distinctTrackers"] == 0

    def test_matches_brute_force_on_random_logs(self, shared_gateway):
        rng = random.Random(4)
        for trial in range(10):
            events = random_log(rng)
            got = analytics.build_report(events, shared_gateway.ad_domains,
                                         shared_gateway.suffixes, shared_gateway.taxonomy)
            want = brute_force_report(events, shared_gateway.ad_domains,
                                      shared_gateway.suffixes, shared_gateway.taxonomy)
            o = got["overall"]
            assert o["pagesTotal"] == want["pagesTotal"]
            assert o["pagesBlocked"] == want["pagesBlocked"]
            assert o["pagesDistinct"] == want["pagesDistinct"]
            assert o["adsTotal"] == want["adsTotal"]
            assert o["adsBlocked"] == want["adsBlocked"]
            assert o["distinctTrackers"] == want["distinctTrackers"]
            if want["avgTrackers"] is None:
                assert o["avgTrackers"] is None
            else:
                assert o["avgTrackers"] == want["avgTrackers"]  # exact mean
                assert abs(o["stdTrackers"] - want["stdTrackers"]) <= 1e-9
            for cat, wrow in want["perCategory"].items():
                grow = got["perCategory"][cat]
                for key in ("pagesTotal", "pagesBlocked", "adsTotal", "adsBlocked"):
                    assert grow[key] == wrow[key], (trial, cat, key)
                if wrow["avgTrackersPerPage"] is not None:
                    assert grow["avgTrackersPerPage"] == wrow["avgTrackersPerPage"]
                    assert abs(grow["stdTrackersPerPage"] - wrow["stdTrackersPerPage"]) <= 1e-9


class TestBuildReport:
    def test_zero_events_all_zero(self, shared_gateway):
        report = analytics.build_report([], shared_gateway.ad_domains,
                                        shared_gateway.suffixes, shared_gateway.taxonomy)
        o = report["overall"]
        assert o["pagesTotal"] == 0 and o["pctPagesBlocked"] == 0.0
        assert o["adsTotal"] == 0 and o["pctAdsBlocked"] == 0.0
        assert o["avgTrackers"] is None

    def test_everything_blocked_is_100pct(self, shared_gateway):
        events = [make_event(i, ["adult"], "block") for i in range(5)]
        report = analytics.build_report(events, shared_gateway.ad_domains,
                                        shared_gateway.suffixes, shared_gateway.taxonomy)
        assert report["overall"]["pctPagesBlocked"] == 100.0

    def test_overall_counts_use_raw_events_not_category_sums(self, shared_gateway):
        # one multi-category page: per-category totals double-count by design
        events = [make_event(0, ["news", "sports"], "allow")]
        report = analytics.build_report(events, shared_gateway.ad_domains,
                                        shared_gateway.suffixes, shared_gateway.taxonomy)
        assert report["overall"]["pagesTotal"] == 1
        per_cat_sum = sum(r["pagesTotal"] for r in report["perCategory"].values())
        assert per_cat_sum == 2

    def test_ads_blocked_never_exceed_total_and_pct_consistent(self, shared_gateway):
        rng = random.Random(11)
        events = random_log(rng)
        report = analytics.build_report(events, shared_gateway.ad_domains,
                                        shared_gateway.suffixes, shared_gateway.taxonomy)
        total = sum(r["adsTotal"] for r in report["perCategory"].values())
        blocked = sum(r["adsBlocked"] for r in report["perCategory"].values())
        assert blocked <= total
        o = report["overall"]
        if o["adsTotal"]:
            assert abs(o["pctAdsBlocked"] - 100.0 * o["adsBlocked"] / o["adsTotal"]) <= 1e-9

    def test_pure_function(self, shared_gateway):
        events = random_log(random.Random(3))
        r1 = analytics.build_report(events, shared_gateway.ad_domains,
                                    shared_gateway.suffixes, shared_gateway.taxonomy)
        r2 = analytics.build_report(events, shared_gateway.ad_domains,
                                    shared_gateway.suffixes, shared_gateway.taxonomy)
        assert r1 == r2

    def test_min_pages_filters_light_users(self, shared_gateway):
        events = ([make_event(i, ["news"], "allow", user="heavy") for i in range(25)]
                  + [make_event(100 + i, ["news"], "allow", user="light") for i in range(3)]
                  + [make_event(200, ["news"], "allow")])  # untagged kept
        report = analytics.build_report(events, shared_gateway.ad_domains,
                                        shared_gateway.suffixes, shared_gateway.taxonomy,
                                        min_pages=20)
        assert report["overall"]["pagesTotal"] == 26

    def test_url_policy_usage_counts(self, shared_gateway):
        events = [make_event(0, ["news"], "allow", reason="url-override"),
                  make_event(1, ["news"], "allow")]
        report = analytics.build_report(events, shared_gateway.ad_domains,
                                        shared_gateway.suffixes, shared_gateway.taxonomy)
        assert report["overall"]["urlPolicyPages"] == 1
        assert report["perCategory"]["news"]["urlPolicyPages"] == 1


class TestRenderReport:
    def _report(self, shared_gateway):
        return analytics.build_report(random_log(random.Random(5)),
                                      shared_gateway.ad_domains,
                                      shared_gateway.suffixes, shared_gateway.taxonomy)

    def test_json_round_trip_lossless(self, shared_gateway):
        report = self._report(shared_gateway)
        assert json.loads(analytics.render_report(report, "json")) == report

    def test_markdown_has_one_row_per_category(self, shared_gateway):
        report = self._report(shared_gateway)
        md = analytics.render_report(report, "markdown-table")
        for cat in shared_gateway.taxonomy.top_categories:
            assert f"| {cat} |" in md

    def test_unknown_format(self, shared_gateway):
        with pytest.raises(UnknownFormat):
            analytics.render_report(self._report(shared_gateway), "xml")
