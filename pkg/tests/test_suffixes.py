"""Registrable-domain resolution against the bundled snapshot."""

import pytest

from trackwall.suffixes import PublicSuffixes


@pytest.fixture(scope="module")
def psl(tmp_path_factory):
    from trackwall.datafiles import DEFAULT_DATA_DIR
    return PublicSuffixes.load(DEFAULT_DATA_DIR / "public_suffix_snapshot.dat")


# expected values resolved by hand against the snapshot rules
CASES = [
    ("news.bbc.co.uk", "bbc.co.uk"),
    ("bbc.co.uk", "bbc.co.uk"),
    ("cdn.lemonde.fr", "lemonde.fr"),
    ("www.lemonde.fr", "lemonde.fr"),
    ("lemde.fr", "lemde.fr"),
    ("a.b.c.example.com", "example.com"),
    ("localhost", "localhost"),
    ("192.168.0.1", "192.168.0.1"),
    ("deep.sub.co.uk", "sub.co.uk"),
    ("x.unknown-tld-zone", "x.unknown-tld-zone"),
    ("y.x.unknown-tld-zone", "x.unknown-tld-zone"),
    ("WWW.EXAMPLE.COM", "example.com"),
    ("host.com.", "host.com"),
    ("site.co.nz", "site.co.nz"),
    ("shop.site.co.nz", "site.co.nz"),
]


@pytest.mark.parametrize("host,expected", CASES)
def test_registrable_domain(psl, host, expected):
    assert psl.registrable_domain(host) == expected


def test_wildcard_and_exception_rules(psl):
    # *.ck makes any single label a suffix; !www.ck is carved back out
    assert psl.registrable_domain("foo.bar.ck") == "foo.bar.ck"
    assert psl.registrable_domain("www.ck") == "www.ck"
    assert psl.registrable_domain("sub.www.ck") == "www.ck"


def test_suffix_itself_returned_verbatim(psl):
    assert psl.registrable_domain("co.uk") == "co.uk"


@pytest.mark.parametrize("host,expected", [
    ("::1", "::1"),
    ("[2001:db8::2]", "2001:db8::2"),
    ("[2001:db8::2]:8443", "2001:db8::2"),
    ("www.example.com:8080", "example.com"),
])
def test_ip_literals_and_ports(psl, host, expected):
    assert psl.registrable_domain(host) == expected


class TestThirdParty:
    def test_same_registrable_domain_is_first_party(self, psl):
        assert psl.is_third_party("static.lemonde.fr", "www.lemonde.fr") is False

    def test_content_domain_is_third_party(self, psl):
        assert psl.is_third_party("lemde.fr", "lemonde.fr") is True

    def test_distinct_domains(self, psl):
        assert psl.is_third_party("doubleclick.net", "cnn.com") is True
