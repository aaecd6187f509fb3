#!/usr/bin/env python3
"""Generate the synthetic ~5,000-record replay fixture and its policy file.

Seeded so the committed fixture can be reproduced exactly.  Pages are spread
over domain-list sites, lexicon-scored sites, declared-tag pages, and a few
uncategorizable ones; subresources mix cross-site trackers, allowlisted CDNs,
site-specific helper domains, and first-party statics.
"""

import json
import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
N_RECORDS = 5000
SEED = 20160111

# (site base, weight, kind, payload)
#   domain : payload = None (category comes from domains.tsv)
#   lexicon: payload = (title terms, keyword terms, body terms)
#   tagged : payload = declared category
#   bland  : payload = None (no lexicon hits -> uncategorized)
SITES = [
    ("https://techcrunch.com", 8, "domain", None),
    ("https://espn.com", 7, "domain", None),
    ("https://webmd.com", 5, "domain", None),
    ("https://biblegateway.com", 3, "domain", None),
    ("https://allrecipes.com", 4, "domain", None),
    ("https://zillow.com", 3, "domain", None),
    ("https://reuters.com", 8, "domain", None),
    ("https://imdb.com", 6, "domain", None),
    ("https://investopedia.com", 3, "domain", None),
    ("https://coursera.org", 3, "domain", None),
    ("https://tripadvisor.com", 3, "domain", None),
    ("https://politico.com", 4, "domain", None),
    ("https://vogue.com", 2, "domain", None),
    ("https://petmd.com", 2, "domain", None),
    ("https://nature.com", 4, "domain", None),
    ("https://history.com", 2, "domain", None),
    ("https://economist.com", 3, "domain", None),
    ("https://indeed.com", 2, "domain", None),
    ("https://law.com", 2, "domain", None),
    ("https://military.com", 2, "domain", None),
    ("https://parents.com", 2, "domain", None),
    ("https://houzz.com", 2, "domain", None),
    ("https://autoblog.com", 2, "domain", None),
    ("https://archdaily.com", 2, "domain", None),
    ("https://nationalgeographic.com", 2, "domain", None),
    ("https://agweb.com", 1, "domain", None),
    ("https://philosophynow.org", 1, "domain", None),
    ("https://snopes.com", 2, "domain", None),
    ("https://ravelry.com", 2, "domain", None),
    ("https://runnersworld.com", 2, "domain", None),
    ("http://healthnotes.example", 4, "lexicon",
     (["symptoms", "diagnosis"], ["health", "blood pressure"],
      ["treatment", "diabetes", "insulin", "medication", "cholesterol"])),
    ("http://gospelreader.example", 3, "lexicon",
     (["scripture", "gospel"], ["bible", "faith"],
      ["prayer", "worship", "sermon", "theology", "church"])),
    ("http://midnightcinema.example", 4, "lexicon",
     (["movie", "premiere"], ["cinema", "box office"],
      ["film", "actor", "trailer", "soundtrack", "blockbuster"])),
    ("http://pitchsidereport.example", 4, "lexicon",
     (["football", "league"], ["sports", "premier league"],
      ["soccer", "championship", "tournament", "stadium", "coach"])),
    ("http://thecodingdesk.example", 4, "lexicon",
     (["software", "programming"], ["technology", "open source"],
      ["developer", "code", "algorithm", "database", "linux"])),
    ("http://slowroastkitchen.example", 3, "lexicon",
     (["recipe", "baking"], ["cooking", "dinner ideas"],
      ["ingredients", "sauce", "dessert", "chef", "pasta"])),
    ("http://wanderfar.example", 3, "lexicon",
     (["vacation", "itinerary"], ["travel", "travel guide"],
      ["flight", "hotel", "destination", "resort", "sightseeing"])),
    ("http://civicsdaily.example", 3, "lexicon",
     (["election", "senate"], ["politics", "political party"],
      ["campaign", "candidate", "ballot", "voters", "legislation"])),
    ("http://plainmoney.example", 3, "lexicon",
     (["savings", "budget"], ["investing", "credit score"],
      ["retirement", "portfolio", "mortgage", "pension", "taxes"])),
    ("http://starfieldnotes.example", 3, "lexicon",
     (["astronomy", "telescope"], ["science", "peer review"],
      ["research", "physics", "quantum", "particle", "hypothesis"])),
    ("http://myquietworkshop.example", 2, "lexicon",
     (["woodworking", "crafts"], ["hobbies", "diy projects"],
      ["knitting", "puzzle", "photography", "chess", "origami"])),
    ("http://greenpaddock.example", 2, "lexicon",
     (["harvest", "livestock"], ["farming", "crop rotation"],
      ["tractor", "soil", "fertilizer", "cattle", "wheat"])),
    ("http://latenightlounge.example", 2, "lexicon",
     (["erotic", "explicit"], ["adult entertainment"],
      ["nudity", "nsfw", "escort", "hentai"])),
    ("http://taggedpages.example", 3, "tagged", None),
    ("http://blandcorp.example", 3, "bland", None),
]

TRACKERS = [
    "ad.doubleclick.net", "www.google-analytics.com", "connect.facebook.net",
    "sb.scorecardresearch.com", "pixel.quantserve.com", "ib.adnxs.com",
    "static.criteo.com", "script.hotjar.com", "static.chartbeat.com",
    "js-agent.newrelic.com", "logs.xiti.com", "api.amplitude.com",
    "cdn.mxpnl.com", "cdn.segment.com", "tags.bluekai.com",
    "secure.demdex.net",
]
CDNS = [
    "ssl.gstatic.com", "fonts.googleapis.com", "dx1.cloudfront.net",
    "cdn.jsdelivr.net", "maxcdn.bootstrapcdn.com", "s0.wp.com",
    "abs.twimg.com",
]
AD_IFRAMES = [
    "https://ad.doubleclick.net/adi/N4061/B2343",
    "https://tpc.googlesyndication.com/safeframe/1-0-37/html/container.html",
    "https://cdn.taboola.com/libtrc/unit/frame.html",
    "https://widgets.outbrain.com/widgetFrame.html",
    "https://ads.pubmatic.com/AdServer/frame",
    "https://secure.adnxs.com/tt?id=9917",
    "https://cas.criteo.com/delivery/afr.php",
    "https://adserver.teads.tv/frame/v2",
    "https://static.weborama.fr/frame/adperf",
    "https://s0.2mdn.net/instream/html5/frame.html",
]
OTHER_IFRAMES = [
    "https://www.youtube.com/embed/dQw4w9",
    "https://player.vimeo.com/video/76979871",
    "https://maps.google.com/maps?q=grenoble",
    "https://disqus.com/embed/comments/",
]

DECLARED_POOL = ["news", "science", "society", "religion", "travel",
                 "sports", "business"]

PATH_WORDS = ["story", "article", "post", "page", "item", "report", "view",
              "entry", "feature", "note"]


def main() -> None:
    rng = random.Random(SEED)
    OUT_DIR.mkdir(parents=True, exist_ok=True)

    # per-site page pools and helper domains
    site_pages = {}
    site_helper = {}
    for idx, (base, _w, kind, _p) in enumerate(SITES):
        n_pages = rng.randint(6, 16)
        pages = []
        for i in range(n_pages):
            word = rng.choice(PATH_WORDS)
            pages.append(f"{base}/{word}-{i}")
        site_pages[base] = pages
        site_helper[base] = f"assets.helper{idx:02d}.example"

    weights = [w for (_b, w, _k, _p) in SITES]

    records = []
    for _ in range(N_RECORDS):
        base, _w, kind, payload = rng.choices(SITES, weights=weights, k=1)[0]
        page = rng.choice(site_pages[base])
        # occasional un-normalized variants of the same page
        if rng.random() < 0.03:
            scheme, rest = page.split("://", 1)
            hostpath = rest.split("/", 1)
            hostvar = hostpath[0].upper()
            port = ":443" if scheme == "https" else ":80"
            page = f"{scheme.upper()}://{hostvar}{port}/{hostpath[1]}#frag"

        host = base.split("://", 1)[1]
        subs = [f"static.{host}", site_helper[base]]
        subs += rng.sample(TRACKERS, k=rng.randint(0, 6))
        subs += rng.sample(CDNS, k=rng.randint(0, 2))
        rng.shuffle(subs)

        iframes = rng.sample(AD_IFRAMES, k=rng.choices(
            [0, 1, 2, 3], weights=[30, 40, 20, 10], k=1)[0])
        if rng.random() < 0.25:
            iframes.append(rng.choice(OTHER_IFRAMES))

        rec = {"page": page, "subresources": subs, "iframes": iframes}

        if kind == "lexicon":
            titles, kws, bodies = payload
            title = " ".join(rng.sample(titles, k=min(2, len(titles))))
            body_terms = rng.sample(bodies, k=rng.randint(2, len(bodies)))
            body = " ".join(body_terms * rng.randint(1, 3))
            rec["features"] = {
                "title": f"{title} daily digest",
                "keywords": rng.sample(kws, k=rng.randint(1, len(kws))),
                "body": f"latest {body} roundup for readers",
            }
        elif kind == "tagged":
            rec["features"] = {
                "title": "editor desk",
                "keywords": [],
                "body": "assorted links curated by hand",
                "declaredCategory": rng.choice(DECLARED_POOL),
            }
        elif kind == "bland":
            rec["features"] = {
                "title": "zxqv plonk",
                "keywords": [],
                "body": "fwip zorple blique mandrel xylo quap",
            }
        records.append(json.dumps(rec, sort_keys=True))

    # sprinkle malformed lines (skipped by the pipeline, counted)
    malformed = ['{"noPage": true}', '{"page": "not a url"}', "{{{not json"]
    for bad in malformed:
        records.insert(rng.randrange(len(records)), bad)

    log_path = OUT_DIR / "replay_log.jsonl"
    log_path.write_text("\n".join(records) + "\n", encoding="utf-8")

    policy = {
        "blockedCategories": ["adult", "religion", "health & fitness"],
        "urlPolicies": {
            # allow on pages of blocked categories
            site_pages["https://webmd.com"][0]: "allow",
            site_pages["https://biblegateway.com"][1]: "allow",
            site_pages["http://latenightlounge.example"][0]: "allow",
            # block on pages of non-blocked categories
            site_pages["https://techcrunch.com"][0]: "block",
            site_pages["https://espn.com"][2]: "block",
            site_pages["https://imdb.com"][1]: "block",
            site_pages["http://wanderfar.example"][0]: "block",
        },
        "categoryOverrides": {
            site_pages["http://blandcorp.example"][0]: ["business"],
            site_pages["https://snopes.com"][0]: ["society"],
            site_pages["http://healthnotes.example"][0]: ["news"],
        },
    }
    policy_path = OUT_DIR / "replay_policy.json"
    policy_path.write_text(json.dumps(policy, indent=2, sort_keys=True) + "\n",
                           encoding="utf-8")
    print(f"wrote {len(records)} lines to {log_path}")
    print(f"wrote policy to {policy_path}")


if __name__ == "__main__":
    main()
