"""Loopback control API for the console and scripts.

All endpoints speak JSON over HTTP/1.1 and share the live gateway stores,
so a policy change is visible to the very next proxy decision.  Errors use
``{"code": ..., "message": ...}`` with codes drawn from
``unknown_category``, ``malformed_url``, ``not_found``, ``invalid_body``.
The console's static bundle, when present, is served under ``/ui``.
"""

from __future__ import annotations

import json
import logging
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, unquote, urlsplit

from .analytics import build_report
from .errors import (MalformedUrl, TooManyCategories, TrackwallError,
                     UnknownCategory)
from .pages import normalize_url
from .policy import ALLOW, BLOCK, CLEAR
from .runtime import Gateway

log = logging.getLogger("trackwall.api")


class ApiError(TrackwallError):
    def __init__(self, http_status: int, code: str, message: str):
        super().__init__(message)
        self.http_status = http_status
        self.code = code
        self.message = message


class ApiHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    gateway: Gateway = None  # set by make_server
    ui_dir: Path | None = None

    def log_message(self, fmt, *args):
        log.debug(fmt, *args)

    # -- response helpers -----------------------------------------------------

    def _send_json(self, obj, status: int = 200) -> None:
        body = json.dumps(obj, sort_keys=True).encode("utf-8")
        self.send_response_only(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        if self.command != "HEAD":
            self.wfile.write(body)

    def _send_error_obj(self, err: ApiError) -> None:
        self._send_json({"code": err.code, "message": err.message}, err.http_status)

    def _read_json_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise ApiError(400, "invalid_body", "request body required")
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ApiError(400, "invalid_body", f"bad JSON: {exc}") from exc

    # -- routing ---------------------------------------------------------------

    def _dispatch(self):
        parts = urlsplit(self.path)
        path, query = parts.path, parse_qs(parts.query)
        try:
            self._route(path, query)
        except ApiError as err:
            self._send_error_obj(err)
        except UnknownCategory as exc:
            self._send_error_obj(ApiError(400, "unknown_category", str(exc)))
        except TooManyCategories as exc:
            self._send_error_obj(ApiError(400, "invalid_body", str(exc)))
        except MalformedUrl as exc:
            self._send_error_obj(ApiError(400, "malformed_url", str(exc)))
        except Exception:
            log.exception("api failure on %s %s", self.command, self.path)
            self._send_error_obj(ApiError(500, "invalid_body", "internal error"))

    do_GET = do_PUT = do_POST = do_DELETE = do_HEAD = _dispatch

    def _route(self, path: str, query: dict):
        gw = self.gateway
        if path == "/taxonomy":
            self._require("GET")
            self._send_json({
                "topCategories": list(gw.taxonomy.top_categories),
                "subcategories": dict(gw.taxonomy.subcategories),
            })
        elif path == "/policy/categories":
            self._policy_categories()
        elif path.startswith("/policy/urls/"):
            self._policy_url(unquote(path[len("/policy/urls/"):]))
        elif path == "/page/current":
            self._page_current(query)
        elif path == "/page/recategorize":
            self._require("POST")
            self._recategorize()
        elif path == "/report/broken-page":
            self._require("POST")
            self._broken_page()
        elif path == "/metrics":
            self._require("GET")
            self._send_json(build_report(gw.events.snapshot(), gw.ad_domains,
                                         gw.suffixes, gw.taxonomy))
        elif path == "/ui" or path.startswith("/ui/"):
            self._require("GET", "HEAD")
            self._serve_ui(path)
        else:
            raise ApiError(404, "not_found", f"no such endpoint: {path}")

    def _require(self, *methods: str):
        if self.command not in methods:
            raise ApiError(405, "invalid_body",
                           f"{self.command} not allowed here (use {'/'.join(methods)})")

    # -- endpoint bodies ---------------------------------------------------------

    def _policy_categories(self):
        gw = self.gateway
        if self.command == "GET":
            self._send_json(gw.policy.blocked_categories())
        elif self.command == "PUT":
            body = self._read_json_body()
            if not isinstance(body, list) or not all(isinstance(c, str) for c in body):
                raise ApiError(400, "invalid_body", "expected a JSON array of category names")
            gw.policy.replace_blocked_categories(body)
            self._send_json(gw.policy.blocked_categories())
        else:
            self._require("GET", "PUT")

    def _policy_url(self, raw_url: str):
        gw = self.gateway
        if not raw_url:
            raise ApiError(400, "malformed_url", "empty url")
        if self.command == "GET":
            url = normalize_url(raw_url)
            verdict = gw.policy.url_policy(url)
            if verdict is None:
                raise ApiError(404, "not_found", f"no per-URL policy for {url}")
            self._send_json({"url": url, "verdict": verdict})
        elif self.command == "PUT":
            body = self._read_json_body()
            verdict = body.get("verdict") if isinstance(body, dict) else None
            if verdict not in (BLOCK, ALLOW):
                raise ApiError(400, "invalid_body", 'verdict must be "block" or "allow"')
            url = gw.policy.set_url_policy(raw_url, verdict)
            self._send_json({"url": url, "verdict": verdict})
        elif self.command == "DELETE":
            url = normalize_url(raw_url)
            if gw.policy.url_policy(url) is None:
                raise ApiError(404, "not_found", f"no per-URL policy for {url}")
            gw.policy.set_url_policy(url, CLEAR)
            self._send_json({"url": url, "verdict": None})
        else:
            self._require("GET", "PUT", "DELETE")

    def _page_current(self, query: dict):
        self._require("GET")
        client = (query.get("client") or [""])[0]
        ctx = self.gateway.contexts.get(client)
        if ctx is None:
            raise ApiError(404, "not_found", f"no current page for client {client!r}")
        third = sorted(ctx.third_parties.values(), key=lambda t: t["domain"])
        self._send_json({
            "url": ctx.page_url,
            "categories": list(ctx.assignment.categories),
            "source": ctx.assignment.source,
            "verdict": ctx.decision.verdict,
            "reason": ctx.decision.reason,
            "thirdParties": third,
        })

    def _recategorize(self):
        gw = self.gateway
        body = self._read_json_body()
        url = body.get("url") if isinstance(body, dict) else None
        categories = body.get("categories") if isinstance(body, dict) else None
        if not url or not isinstance(categories, list):
            raise ApiError(400, "invalid_body", "need url and categories")
        normalized = gw.policy.set_category_override(url, categories)
        gw.categorizer.invalidate(normalized)
        self._send_json({"url": normalized, "categories": list(categories),
                         "source": "user-override"})

    def _broken_page(self):
        body = self._read_json_body()
        url = body.get("url") if isinstance(body, dict) else None
        if not url:
            raise ApiError(400, "invalid_body", "need url")
        entry = self.gateway.report_broken_page(url, body.get("note") or "")
        self._send_json(entry, status=200)

    def _serve_ui(self, path: str):
        if self.ui_dir is None:
            raise ApiError(404, "not_found", "console assets not installed")
        rel = path[len("/ui"):].lstrip("/") or "index.html"
        target = (self.ui_dir / rel).resolve()
        if not str(target).startswith(str(self.ui_dir.resolve())) or not target.is_file():
            raise ApiError(404, "not_found", path)
        body = target.read_bytes()
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self.send_response_only(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        if self.command != "HEAD":
            self.wfile.write(body)


def make_server(gateway: Gateway, host: str = "127.0.0.1", port: int = 8119,
                ui_dir: str | Path | None = None) -> ThreadingHTTPServer:
    handler = type("BoundApiHandler", (ApiHandler,), {
        "gateway": gateway,
        "ui_dir": Path(ui_dir) if ui_dir else None,
    })
    server = ThreadingHTTPServer((host, port), handler)
    server.daemon_threads = True
    return server
