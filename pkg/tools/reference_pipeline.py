#!/usr/bin/env python3
"""Plain, self-contained reference for the replay pipeline and report.

Produces the golden event stream and golden report for the fixture log.
Deliberately shares no code with src/trackwall: everything is re-implemented
here in the most literal way so the two can be compared byte-for-byte.

Usage:
    python tools/reference_pipeline.py \
        --log tests/fixtures/replay_log.jsonl \
        --policy tests/fixtures/replay_policy.json \
        --data-dir src/trackwall/data \
        --events-out tests/fixtures/golden_events.jsonl \
        --report-out tests/fixtures/golden_report.json
"""

import argparse
import hashlib
import json
import math
import re
from collections import OrderedDict
from pathlib import Path
from urllib.parse import urlsplit, urlunsplit

ALPHA = 0.3
FIELD_WEIGHTS = {"url": 3.0, "title": 4.0, "keywords": 5.0, "body": 1.0}
CACHE_CAPACITY = 500
UNCATEGORIZED = "uncategorized"

TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


# --------------------------------------------------------------------------
# data files
# --------------------------------------------------------------------------

def read_lines(path):
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def load_data(data_dir):
    d = Path(data_dir)
    taxonomy = list(read_lines(d / "taxonomy.txt"))
    stopwords = set(read_lines(d / "stopwords.txt"))
    domains = {}
    for line in read_lines(d / "domains.tsv"):
        host, cats = line.split("\t")
        domains[host] = set(cats.split(","))
    lexicon = {}
    for line in read_lines(d / "lexicon.tsv"):
        term, idf, spec = line.split("\t")
        weights = {}
        for part in spec.split(","):
            cat, w = part.rsplit(":", 1)
            weights[cat] = float(w)
        lexicon[term] = (float(idf), weights)
    allowlist = set(read_lines(d / "allowed_domains.txt"))
    adlist = set(read_lines(d / "ad_domains.txt"))
    rules = set(read_lines(d / "public_suffix_snapshot.dat"))
    return taxonomy, stopwords, domains, lexicon, allowlist, adlist, rules


# --------------------------------------------------------------------------
# URL / domain handling
# --------------------------------------------------------------------------

def normalize_url(url):
    parts = urlsplit(url)
    if not parts.scheme or not parts.netloc:
        raise ValueError(f"malformed url: {url!r}")
    scheme = parts.scheme.lower()
    host = parts.hostname.lower() if parts.hostname else ""
    port = parts.port
    netloc = host
    if port is not None and port != {"http": 80, "https": 443}.get(scheme):
        netloc = f"{host}:{port}"
    return urlunsplit((scheme, netloc, parts.path, parts.query, ""))


def registrable_domain(host, rules):
    host = host.lower().rstrip(".")
    labels = host.split(".")
    if len(labels) < 2:
        return host
    if re.fullmatch(r"[0-9.]+", host) or ":" in host:
        return host
    # first (longest) matching rule wins; an exception rule is itself the
    # registrable domain
    best = None
    for i in range(len(labels)):
        cand = ".".join(labels[i:])
        wild = ".".join(["*"] + labels[i + 1:])
        if "!" + cand in rules:
            return cand
        if cand in rules or (wild in rules and len(labels[i:]) >= 2):
            best = len(labels[i:])
            break
    if best is None:
        best = 1  # default rule: last label is the suffix
    if best >= len(labels):
        return host
    return ".".join(labels[len(labels) - best - 1:])


# --------------------------------------------------------------------------
# categorization
# --------------------------------------------------------------------------

def tokenize(text, stopwords):
    tokens = TOKEN_RE.findall(text.lower())
    return [t for t in tokens if len(t) >= 2 and t not in stopwords]


def ngram_counts(text, stopwords):
    tokens = tokenize(text, stopwords)
    counts = {}
    for t in tokens:
        counts[t] = counts.get(t, 0) + 1
    for a, b in zip(tokens, tokens[1:]):
        bg = f"{a} {b}"
        counts[bg] = counts.get(bg, 0) + 1
    return counts


def score_features(feat, lexicon, stopwords):
    scores = {}
    field_texts = [
        ("url", [feat["url"]]),
        ("title", [feat.get("title", "")]),
        ("keywords", feat.get("keywords", [])),
        ("body", [feat.get("body", "")]),
    ]
    for field, texts in field_texts:
        fw = FIELD_WEIGHTS[field]
        counts = {}
        for text in texts:
            for term, n in ngram_counts(text, stopwords).items():
                counts[term] = counts.get(term, 0) + n
        for term in sorted(counts):
            if term not in lexicon:
                continue
            idf, weights = lexicon[term]
            for cat in sorted(weights):
                scores[cat] = scores.get(cat, 0.0) + fw * counts[term] * idf * weights[cat]
    return scores


def select_categories(scores, taxonomy):
    positive = {c: s for c, s in scores.items() if s > 0.0}
    if not positive:
        raise ValueError("all scores zero")
    mx = max(positive.values())
    mean = sum(positive.values()) / len(taxonomy)
    threshold = ALPHA * (mx - mean)
    qualifying = [c for c in positive if positive[c] > threshold]
    qualifying.sort(key=lambda c: (-positive[c], c))
    if not qualifying:
        best = sorted(positive, key=lambda c: (-positive[c], c))[0]
        return [best]
    return qualifying[:3]


def categorize(url, feat, ctx, cache):
    """Returns (categories list, source string)."""
    overrides = ctx["overrides"]
    if url in overrides:
        return list(overrides[url]), "user-override"
    if url in cache:
        cache.move_to_end(url)
        return list(cache[url]), "cache"
    declared = feat.get("declaredCategory")
    result = None
    if declared and declared in ctx["valid"]:
        result, source = [declared], "declared-tag"
    if result is None:
        host = urlsplit(url).hostname or ""
        entry = ctx["domains"].get(host)
        if entry is None:
            entry = ctx["domains"].get(registrable_domain(host, ctx["rules"]))
        if entry is not None:
            result, source = sorted(entry)[:3], "domain-list"
    if result is None:
        scores = score_features(feat, ctx["lexicon"], ctx["stopwords"])
        if any(s > 0.0 for s in scores.values()):
            result, source = select_categories(scores, ctx["taxonomy"]), "lexicon"
    if result is None:
        return [UNCATEGORIZED], "fallback-uncategorized"
    cache[url] = list(result)
    if len(cache) > CACHE_CAPACITY:
        cache.popitem(last=False)
    return result, source


# --------------------------------------------------------------------------
# policy + blocking
# --------------------------------------------------------------------------

def resolve(url, categories, policy):
    if url in policy["urlPolicies"]:
        return policy["urlPolicies"][url], "url-override", []
    matched = [c for c in categories if c in policy["blockedCategories"]]
    if matched:
        return "block", "category-match", matched
    return "allow", "default-allow", []


def replay(log_path, policy, ctx):
    registry = {}
    cache = OrderedDict()
    events = []
    skipped = 0
    for raw in Path(log_path).read_text(encoding="utf-8").splitlines():
        if not raw.strip():
            continue
        try:
            rec = json.loads(raw)
            url = normalize_url(rec["page"])
        except Exception:
            skipped += 1
            continue
        feat = dict(rec.get("features") or {})
        feat["url"] = url
        categories, _source = categorize(url, feat, ctx, cache)
        verdict, reason, _matched = resolve(url, categories, policy)

        page_rd = registrable_domain(urlsplit(url).hostname or "", ctx["rules"])
        third, blocked = set(), set()
        for host in rec.get("subresources") or []:
            rd = registrable_domain(host, ctx["rules"])
            if rd == page_rd:
                continue
            registry.setdefault(rd, set()).add(page_rd)
            third.add(rd)
            if (verdict == "block" and rd not in ctx["allowlist"]
                    and len(registry[rd]) >= 3):
                blocked.add(rd)

        ev = {
            "timestamp": len(events),
            "pageHash": hashlib.blake2b(url.encode("utf-8"), digest_size=8).hexdigest(),
            "categories": list(categories),
            "decisionVerdict": verdict,
            "decisionReason": reason,
            "thirdPartyDomains": sorted(third),
            "blockedDomains": sorted(blocked),
            "iframeUrls": list(rec.get("iframes") or []),
        }
        if rec.get("user") is not None:
            ev["user"] = rec["user"]
        events.append(ev)
    return events, skipped


# --------------------------------------------------------------------------
# report
# --------------------------------------------------------------------------

def mean_std(xs):
    if not xs:
        return None, None
    mean = sum(xs) / len(xs)
    std = math.sqrt(sum((x - mean) ** 2 for x in xs) / len(xs))
    return mean, std


def ad_counts(ev, adlist, rules):
    total = blocked = 0
    for url in ev["iframeUrls"]:
        host = urlsplit(url).hostname or ""
        if not host:
            continue
        if registrable_domain(host, rules) in adlist:
            total += 1
            if ev["decisionVerdict"] == "block":
                blocked += 1
    return total, blocked


def build_report(events, taxonomy, adlist, rules):
    unblocked = [e for e in events if e["decisionVerdict"] != "block"]
    pages_by_domain = {}
    for e in unblocked:
        for d in e["thirdPartyDomains"]:
            pages_by_domain.setdefault(d, set()).add(e["pageHash"])
    trackers = {d for d, pages in pages_by_domain.items() if len(pages) >= 3}

    def tracker_count(e):
        return len([d for d in e["thirdPartyDomains"] if d in trackers])

    overall_counts = [tracker_count(e) for e in unblocked]
    avg, std = mean_std(overall_counts)

    ad_totals = {}
    ads_total = ads_blocked = 0
    for e in events:
        t, b = ad_counts(e, adlist, rules)
        ads_total += t
        ads_blocked += b
        for url in e["iframeUrls"]:
            host = urlsplit(url).hostname or ""
            if host:
                rd = registrable_domain(host, rules)
                if rd in adlist:
                    ad_totals[rd] = ad_totals.get(rd, 0) + 1

    per_category = {}
    for cat in taxonomy:
        in_cat = [e for e in events if cat in e["categories"]]
        in_cat_unblocked = [e for e in in_cat if e["decisionVerdict"] != "block"]
        counts = [tracker_count(e) for e in in_cat_unblocked]
        c_avg, c_std = mean_std(counts)
        c_ads = c_ads_blocked = 0
        for e in in_cat:
            t, b = ad_counts(e, adlist, rules)
            c_ads += t
            c_ads_blocked += b
        c_trackers = set()
        for e in in_cat_unblocked:
            c_trackers.update(d for d in e["thirdPartyDomains"] if d in trackers)
        per_category[cat] = {
            "pagesTotal": len(in_cat),
            "pagesDistinct": len({e["pageHash"] for e in in_cat}),
            "pagesBlocked": len([e for e in in_cat if e["decisionVerdict"] == "block"]),
            "adsTotal": c_ads,
            "adsBlocked": c_ads_blocked,
            "avgTrackersPerPage": c_avg,
            "stdTrackersPerPage": c_std,
            "distinctTrackers": len(c_trackers),
            "urlPolicyPages": len([e for e in in_cat if e["decisionReason"] == "url-override"]),
        }

    pages_total = len(events)
    pages_blocked = len([e for e in events if e["decisionVerdict"] == "block"])
    top_trackers = sorted(
        ((d, len(pages_by_domain[d])) for d in trackers),
        key=lambda item: (-item[1], item[0]))[:10]
    top_ads = sorted(ad_totals.items(), key=lambda item: (-item[1], item[0]))[:40]

    return {
        "overall": {
            "pagesTotal": pages_total,
            "pagesDistinct": len({e["pageHash"] for e in events}),
            "pagesBlocked": pages_blocked,
            "pctPagesBlocked": (100.0 * pages_blocked / pages_total) if pages_total else 0.0,
            "adsTotal": ads_total,
            "adsBlocked": ads_blocked,
            "pctAdsBlocked": (100.0 * ads_blocked / ads_total) if ads_total else 0.0,
            "avgTrackers": avg,
            "stdTrackers": std,
            "distinctTrackers": len(trackers),
            "urlPolicyPages": len([e for e in events if e["decisionReason"] == "url-override"]),
            "topTrackers": [
                {"domain": d, "pages": n,
                 "pctPages": (100.0 * n / len(unblocked)) if unblocked else 0.0}
                for d, n in top_trackers],
            "topAdDomains": [
                {"domain": d, "ads": n,
                 "pctAds": (100.0 * n / ads_total) if ads_total else 0.0}
                for d, n in top_ads],
        },
        "perCategory": per_category,
    }


# --------------------------------------------------------------------------

def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--log", required=True)
    ap.add_argument("--policy", required=True)
    ap.add_argument("--data-dir", required=True)
    ap.add_argument("--events-out", required=True)
    ap.add_argument("--report-out", required=True)
    args = ap.parse_args()

    taxonomy, stopwords, domains, lexicon, allowlist, adlist, rules = load_data(args.data_dir)
    raw_policy = json.loads(Path(args.policy).read_text(encoding="utf-8"))
    policy = {
        "blockedCategories": set(raw_policy.get("blockedCategories", [])),
        "urlPolicies": dict(raw_policy.get("urlPolicies", {})),
    }
    ctx = {
        "taxonomy": taxonomy, "valid": set(taxonomy), "stopwords": stopwords,
        "domains": domains, "lexicon": lexicon, "allowlist": allowlist,
        "rules": rules,
        "overrides": {u: list(c) for u, c in raw_policy.get("categoryOverrides", {}).items()},
    }

    events, skipped = replay(args.log, policy, ctx)
    with open(args.events_out, "w", encoding="utf-8") as fh:
        for ev in events:
            fh.write(json.dumps(ev, sort_keys=True, separators=(",", ":")) + "\n")

    report = build_report(events, taxonomy, adlist, rules)
    with open(args.report_out, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(report, sort_keys=True, indent=2) + "\n")

    print(f"events: {len(events)}  skipped: {skipped}")
    print(f"pages blocked: {report['overall']['pctPagesBlocked']:.2f}%  "
          f"ads blocked: {report['overall']['pctAdsBlocked']:.2f}%  "
          f"trackers avg: {report['overall']['avgTrackers']}")


if __name__ == "__main__":
    main()
