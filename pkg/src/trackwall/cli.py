"""trackwall command line: the gateway, replay mode, and report rendering."""

from __future__ import annotations

import argparse
import logging
import sys
import threading
from pathlib import Path

from . import analytics, api, figures, proxy, replay
from .runtime import Gateway

log = logging.getLogger("trackwall")


def _addr(value: str) -> tuple[str, int]:
    host, _, port = value.rpartition(":")
    if not host or not port.isdigit():
        raise argparse.ArgumentTypeError(f"expected host:port, got {value!r}")
    return host, int(port)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trackwall")
    sub = parser.add_subparsers(dest="command", required=True)

    p_serve = sub.add_parser("serve", help="run the proxy gateway (or one replay pass)")
    p_serve.add_argument("--listen", type=_addr, default=("127.0.0.1", 8118),
                         metavar="ADDR:PORT", help="proxy listen address (default 127.0.0.1:8118)")
    p_serve.add_argument("--api-listen", type=_addr, default=("127.0.0.1", 8119),
                         metavar="ADDR:PORT", help="control API address (default 127.0.0.1:8119)")
    p_serve.add_argument("--data-dir", default=None, help="directory with the data files")
    p_serve.add_argument("--events-out", default=None, metavar="PATH",
                         help="JSONL browsing-event log")
    p_serve.add_argument("--policy", default=None, metavar="PATH",
                         help="policy.json location (persisted)")
    p_serve.add_argument("--registry", default=None, metavar="PATH",
                         help="tracker_registry.json location (persisted)")
    p_serve.add_argument("--reset-registry", action="store_true",
                         help="forget learned tracker observations at startup")
    p_serve.add_argument("--broken-reports", default=None, metavar="PATH",
                         help="review file for broken-page reports")
    p_serve.add_argument("--ui-dir", default=None, metavar="DIR",
                         help="static console bundle served under /ui")
    p_serve.add_argument("--replay", default=None, metavar="FILE",
                         help="replay this JSONL log instead of serving")

    p_report = sub.add_parser("report", help="aggregate an events log into a report")
    p_report.add_argument("--events", required=True, metavar="FILE")
    p_report.add_argument("--format", choices=["json", "markdown-table"], default="json")
    p_report.add_argument("--out", default=None, metavar="PATH",
                          help="write here instead of stdout")
    p_report.add_argument("--figures", default=None, metavar="DIR",
                          help="also render figures (PNG) into this directory")
    p_report.add_argument("--min-pages", type=int, default=0,
                          help="drop users with fewer events (multi-user logs)")
    p_report.add_argument("--data-dir", default=None)
    return parser


def _gateway_from(args) -> Gateway:
    return Gateway(
        data_dir=args.data_dir,
        policy_path=args.policy,
        registry_path=args.registry,
        events_path=None if args.replay else args.events_out,
        broken_reports_path=getattr(args, "broken_reports", None),
    )


def cmd_serve(args) -> int:
    gateway = _gateway_from(args)
    if args.reset_registry:
        gateway.registry.reset()

    if args.replay:
        result = replay.replay_file(args.replay, gateway)
        out = args.events_out or "-"
        if out == "-":
            for event in result.events:
                sys.stdout.write(event.to_json_line() + "\n")
        else:
            result.write_jsonl(out)
        gateway.registry.save()
        print(f"replayed {len(result.events)} records "
              f"({result.skipped} malformed skipped) -> {out}", file=sys.stderr)
        return 0

    proxy_srv = proxy.make_server(gateway, *args.listen)
    api_srv = api.make_server(gateway, *args.api_listen, ui_dir=args.ui_dir)
    threading.Thread(target=api_srv.serve_forever, daemon=True).start()
    proxy_addr, api_addr = proxy_srv.server_address, api_srv.server_address
    log.info("proxy on %s:%d, control API on %s:%d", *proxy_addr, *api_addr)
    print(f"trackwall: proxy http://{proxy_addr[0]}:{proxy_addr[1]} "
          f"API http://{api_addr[0]}:{api_addr[1]}", file=sys.stderr, flush=True)
    try:
        proxy_srv.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        proxy_srv.shutdown()
        api_srv.shutdown()
        gateway.close()
    return 0


def cmd_report(args) -> int:
    gateway = Gateway(data_dir=args.data_dir)
    loaded = analytics.load_events(args.events)
    if loaded.skipped:
        print(f"warning: skipped {loaded.skipped} malformed event lines", file=sys.stderr)
    report = analytics.build_report(loaded.events, gateway.ad_domains,
                                    gateway.suffixes, gateway.taxonomy,
                                    min_pages=args.min_pages)
    text = analytics.render_report(report, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.figures:
        written = figures.render_figures(report, args.figures)
        print("figures: " + ", ".join(str(p) for p in written), file=sys.stderr)
    return 0


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0].startswith("-"):
        argv = ["serve"] + argv  # bare flags mean "serve"
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return cmd_serve(args)
    return cmd_report(args)


if __name__ == "__main__":
    sys.exit(main())
