"""HTTP forward proxy that enforces page decisions on live traffic.

Plain-HTTP navigations are fetched upstream, categorized, and returned
unmodified (first-party content is never altered); subsequent subresource
requests are matched to their page context and either proxied or answered
with a synthesized 403 before any upstream connection is attempted.  HTTPS
is tunneled opaquely via CONNECT: no TLS interception, only hostname-level
refusal against the current context.
"""

from __future__ import annotations

import http.client
import logging
import socket
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import urlsplit, urlunsplit

from .errors import MalformedUrl
from .pages import RawPage, extract_features, normalize_url
from .runtime import Gateway, PageContext

log = logging.getLogger("trackwall.proxy")

BLOCK_BODY = b"blocked by trackwall"
NAVIGATE_HEADER = "X-MTC-Navigate"
UPSTREAM_TIMEOUT = 15.0

_HOP_BY_HOP = {
    "connection", "keep-alive", "proxy-authenticate", "proxy-authorization",
    "proxy-connection", "te", "trailers", "transfer-encoding", "upgrade",
}


class ProxyHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    gateway: Gateway = None  # set by make_server

    # -- plumbing ------------------------------------------------------------

    def log_message(self, fmt, *args):
        log.debug("%s " + fmt, self.client_address[0], *args)

    @property
    def client_id(self) -> str:
        return self.client_address[0]

    def _send_simple(self, status: int, body: bytes,
                     content_type: str = "text/plain; charset=utf-8") -> None:
        self.send_response_only(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Connection", "close")
        self.end_headers()
        self.wfile.write(body)
        self.close_connection = True

    def _request_body(self) -> bytes:
        length = int(self.headers.get("Content-Length") or 0)
        return self.rfile.read(length) if length > 0 else b""

    def _forward_headers(self) -> dict[str, str]:
        headers = {}
        for name, value in self.headers.items():
            if name.lower() not in _HOP_BY_HOP and name.lower() != "host":
                headers[name] = value
        return headers

    def _fetch_upstream(self, url: str, method: str, body: bytes):
        parts = urlsplit(url)
        conn = http.client.HTTPConnection(parts.hostname, parts.port or 80,
                                          timeout=UPSTREAM_TIMEOUT)
        path = urlunsplit(("", "", parts.path or "/", parts.query, ""))
        try:
            conn.request(method, path, body=body or None,
                         headers=self._forward_headers())
            resp = conn.getresponse()
            data = resp.read()
            return resp.status, resp.reason, resp.getheaders(), data
        finally:
            conn.close()

    def _relay(self, status: int, reason: str, headers, body: bytes) -> None:
        self.send_response_only(status, reason)
        for name, value in headers:
            lower = name.lower()
            if lower in _HOP_BY_HOP or lower == "content-length":
                continue
            self.send_header(name, value)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        if self.command != "HEAD":
            self.wfile.write(body)

    # -- request classification ----------------------------------------------

    def _is_navigation(self) -> bool:
        if self.headers.get(NAVIGATE_HEADER) == "1":
            return True
        accept = self.headers.get("Accept", "")
        if "text/html" not in accept:
            return False
        referer = self.headers.get("Referer")
        if referer:
            try:
                if self.gateway.contexts.find_by_page(normalize_url(referer)):
                    return False
            except MalformedUrl:
                pass
        return True

    def _find_context(self) -> PageContext | None:
        referer = self.headers.get("Referer")
        if referer:
            try:
                ctx = self.gateway.contexts.find_by_page(normalize_url(referer))
                if ctx is not None:
                    return ctx
            except MalformedUrl:
                pass
        return self.gateway.contexts.get(self.client_id)

    # -- proxying ------------------------------------------------------------

    def _handle(self):
        if not self.path.lower().startswith("http://"):
            self._send_simple(400, b"absolute http:// URI required\n")
            return
        if self._is_navigation():
            self._handle_page()
        else:
            self._handle_subresource()

    def _handle_page(self):
        body = self._request_body()
        try:
            url = normalize_url(self.path)
        except MalformedUrl:
            self._send_simple(400, b"malformed url\n")
            return
        try:
            status, reason, headers, data = self._fetch_upstream(self.path, self.command, body)
        except OSError as exc:
            log.info("upstream unreachable for %s: %s", url, exc)
            self._send_simple(502, b"upstream unreachable\n")
            return

        content_type = next((v for k, v in headers if k.lower() == "content-type"),
                            "text/html")
        features = extract_features(
            RawPage(url=url, content_type=content_type, body=data, fetch_status=status),
            self.gateway.taxonomy, self.gateway.suffixes)
        self.gateway.open_page_context(self.client_id, features)
        self._relay(status, reason, headers, data)

    def _handle_subresource(self):
        try:
            url = normalize_url(self.path)
        except MalformedUrl:
            self._send_simple(400, b"malformed url\n")
            return
        host = urlsplit(url).hostname or ""
        ctx = self._find_context()
        if ctx is None:
            self.gateway.orphan_requests += 1
            log.info("orphan subresource %s from %s (fail-open)", url, self.client_id)
        else:
            if self.gateway.handle_context_subresource(ctx, host):
                self._send_simple(403, BLOCK_BODY)
                return
        body = self._request_body()
        try:
            status, reason, headers, data = self._fetch_upstream(self.path, self.command, body)
        except OSError as exc:
            log.info("upstream unreachable for %s: %s", url, exc)
            self._send_simple(502, b"upstream unreachable\n")
            return
        self._relay(status, reason, headers, data)

    do_GET = do_POST = do_HEAD = do_PUT = do_DELETE = do_OPTIONS = _handle

    # -- CONNECT tunneling -----------------------------------------------------

    def do_CONNECT(self):
        host, _, port = self.path.partition(":")
        try:
            port = int(port or 443)
        except ValueError:
            self._send_simple(400, b"bad CONNECT target\n")
            return

        ctx = self.gateway.contexts.get(self.client_id)
        if ctx is not None:
            # records the cross-site observation whatever the verdict;
            # refusal additionally requires the page decision to be Block
            if self.gateway.handle_context_subresource(ctx, host):
                self._send_simple(403, BLOCK_BODY)
                return

        try:
            upstream = socket.create_connection((host, port), timeout=UPSTREAM_TIMEOUT)
        except OSError:
            self._send_simple(502, b"upstream unreachable\n")
            return
        self.send_response_only(200, "Connection Established")
        self.end_headers()
        self._tunnel(self.connection, upstream)
        self.close_connection = True

    @staticmethod
    def _tunnel(client_sock, upstream_sock):
        def pump(src, dst):
            try:
                while True:
                    data = src.recv(65536)
                    if not data:
                        break
                    dst.sendall(data)
            except OSError:
                pass
            finally:
                try:
                    dst.shutdown(socket.SHUT_WR)
                except OSError:
                    pass

        threads = [
            threading.Thread(target=pump, args=(client_sock, upstream_sock), daemon=True),
            threading.Thread(target=pump, args=(upstream_sock, client_sock), daemon=True),
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        upstream_sock.close()


def make_server(gateway: Gateway, host: str = "127.0.0.1",
                port: int = 8118) -> ThreadingHTTPServer:
    handler = type("BoundProxyHandler", (ProxyHandler,), {"gateway": gateway})
    server = ThreadingHTTPServer((host, port), handler)
    server.daemon_threads = True
    return server
