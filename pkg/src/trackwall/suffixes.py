"""Registrable-domain (eTLD+1) resolution over a bundled suffix snapshot.

The snapshot format is one rule per line: a plain suffix, a ``*.suffix``
wildcard (any single label matches the ``*``), or a ``!suffix`` exception
that beats a wildcard.  Hosts under an unlisted TLD fall back to the default
rule (the last label is the suffix).  IP literals and single-label hosts are
returned verbatim.
"""

from __future__ import annotations

import re
from pathlib import Path

_IPV4_RE = re.compile(r"[0-9.]+\Z")


class PublicSuffixes:
    """Matcher over a frozen set of suffix rules."""

    def __init__(self, rules: set[str]):
        if not rules:
            raise ValueError("empty suffix rule set")
        self._rules = frozenset(rules)

    @classmethod
    def load(cls, path: str | Path) -> "PublicSuffixes":
        rules = set()
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.strip()
            if line and not line.startswith("#"):
                rules.add(line.lower())
        return cls(rules)

    def registrable_domain(self, host: str) -> str:
        """Return the eTLD+1 of *host*.

        Single-label hosts and IP literals come back unchanged; a host that
        is itself a public suffix also comes back unchanged.
        """
        host = host.lower().rstrip(".")
        if host.startswith("["):  # bracketed IPv6, possibly with port
            return host.split("]")[0].lstrip("[")
        if ":" in host:
            head, _, tail = host.rpartition(":")
            if tail.isdigit() and ":" not in head:
                host = head  # stray port on a hostname
            else:
                return host  # bare IPv6 literal
        labels = host.split(".")
        if len(labels) < 2 or _IPV4_RE.match(host):
            return host
        suffix_len = None
        for i in range(len(labels)):
            cand = ".".join(labels[i:])
            if "!" + cand in self._rules:
                return cand
            wild = ".".join(["*"] + labels[i + 1:])
            if cand in self._rules or (len(labels[i:]) >= 2 and wild in self._rules):
                suffix_len = len(labels) - i
                break
        if suffix_len is None:
            suffix_len = 1
        if suffix_len >= len(labels):
            return host
        return ".".join(labels[len(labels) - suffix_len - 1:])

    def is_third_party(self, request_host: str, page_host: str) -> bool:
        """True iff the two hosts live under different registrable domains."""
        return self.registrable_domain(request_host) != self.registrable_domain(page_host)
