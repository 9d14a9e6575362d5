"""Stateless JSON-over-HTTP service backing the browser playground.

Every handler is a pure function of the request: parse, call the core
library, serialize.  Malformed input is answered with 400, domain errors
with 422; neither ever surfaces as a 500.
"""
from __future__ import annotations

import json
import mimetypes
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any, Callable
from urllib.parse import parse_qs, urlsplit

from .algebra import compose
from .core import Signature
from .decompose import greedy_decompose, linear_decompose
from .errors import DOMAIN_ERRORS, IfnError, SignatureSyntaxError
from .generators import complete_support, markov_to_integer_ifn, premier_network, random_ifn
from .matrixdoc import (
    build_analysis_report,
    build_check_report,
    canonical_json,
    document_to_network,
    document_to_rational_matrix,
    fraction_to_json,
    network_to_document,
)
from .analysis import classify_relation, is_irreducible_matrix, is_premagic
from .sigtext import parse_signature, render_path, render_signature

# service-only sanity caps so a stray request cannot pin a worker thread
MAX_NODES = 200
MAX_KAPPA = 100_000


def _require_str(body: dict[str, Any], key: str) -> str:
    value = body.get(key)
    if not isinstance(value, str):
        raise ValueError(f"field '{key}' must be a string")
    return value


def _int_param(query: dict[str, list[str]], name: str) -> int:
    values = query.get(name)
    if not values:
        raise ValueError(f"missing query parameter '{name}'")
    try:
        return int(values[0])
    except ValueError:
        raise ValueError(f"query parameter '{name}' must be an integer") from None


def _bool_param(query: dict[str, list[str]], name: str, default: bool = False) -> bool:
    values = query.get(name)
    if not values:
        return default
    text = values[0].lower()
    if text in ("1", "true", "yes"):
        return True
    if text in ("0", "false", "no"):
        return False
    raise ValueError(f"query parameter '{name}' must be a boolean")


def _handle_compose(body: dict[str, Any]) -> dict[str, Any]:
    strict = body.get("strict", False)
    if not isinstance(strict, bool):
        raise ValueError("field 'strict' must be a boolean")
    sig = parse_signature(_require_str(body, "signature"))
    net = compose(sig, strict=strict)
    return {
        "nodes": list(net.nodes),
        "matrix": net.matrix(),
        "kappa": net.total_flow(),
        "premagic": is_premagic(net),
        "irreducible": is_irreducible_matrix(net),
    }


def _handle_decompose(body: dict[str, Any]) -> dict[str, Any]:
    method = body.get("method", "greedy")
    if method not in ("greedy", "linear"):
        raise ValueError("field 'method' must be 'greedy' or 'linear'")
    net = document_to_network(body)
    if method == "greedy":
        return {"signature": render_signature(greedy_decompose(net))}
    result = linear_decompose(net)
    if isinstance(result, Signature):
        return {"signature": render_signature(result)}
    compact = all(len(n) == 1 and n.isalpha() for n in net.nodes)
    return {
        "witness": [
            {"cycle": render_path(c.nodes, compact), "weight": fraction_to_json(w)}
            for c, w in zip(result.cycles, result.weights)
        ],
        "residual": [
            {"from": src, "to": dst, "value": fraction_to_json(value)}
            for (src, dst), value in zip(result.links, result.residual)
            if value
        ],
    }


def _handle_analyze(body: dict[str, Any]) -> dict[str, Any]:
    return build_analysis_report(parse_signature(_require_str(body, "signature")))


def _handle_check(body: dict[str, Any]) -> dict[str, Any]:
    return build_check_report(document_to_network(body), extended=True)


def _handle_relate(body: dict[str, Any]) -> dict[str, Any]:
    relation = classify_relation(
        parse_signature(_require_str(body, "sig1")),
        parse_signature(_require_str(body, "sig2")),
    )
    return {"relation": relation.value}


def _handle_markov(body: dict[str, Any]) -> dict[str, Any]:
    net = markov_to_integer_ifn(document_to_rational_matrix(body))
    return network_to_document(net)


def _handle_random(query: dict[str, list[str]]) -> dict[str, Any]:
    nodes = _int_param(query, "nodes")
    kappa = _int_param(query, "kappa")
    seed = _int_param(query, "seed")
    if not 1 <= nodes <= MAX_NODES:
        raise ValueError(f"nodes must be between 1 and {MAX_NODES}")
    if kappa > MAX_KAPPA:
        raise ValueError(f"kappa must be at most {MAX_KAPPA}")
    return {"signature": render_signature(random_ifn(nodes, kappa, seed))}


def _handle_premier(query: dict[str, list[str]]) -> dict[str, Any]:
    n = _int_param(query, "complete")
    if not 1 <= n <= MAX_NODES:
        raise ValueError(f"complete must be between 1 and {MAX_NODES}")
    self_loops = _bool_param(query, "selfLoops")
    sig, net = premier_network(complete_support(n, self_loops=self_loops))
    return {
        "signature": render_signature(sig),
        "nodes": list(net.nodes),
        "matrix": net.matrix(),
    }


_POST_ROUTES: dict[str, Callable[[dict[str, Any]], dict[str, Any]]] = {
    "/api/compose": _handle_compose,
    "/api/decompose": _handle_decompose,
    "/api/analyze": _handle_analyze,
    "/api/check": _handle_check,
    "/api/relate": _handle_relate,
    "/api/markov": _handle_markov,
}

_GET_ROUTES: dict[str, Callable[[dict[str, list[str]]], dict[str, Any]]] = {
    "/api/random": _handle_random,
    "/api/premier": _handle_premier,
}


def api_response(method: str, raw_path: str, body_bytes: bytes | None) -> tuple[int, dict[str, Any]]:
    """Pure request dispatcher: (status, JSON payload); exercised directly by tests."""
    split = urlsplit(raw_path)
    path = split.path
    query = parse_qs(split.query)
    try:
        if method == "GET":
            handler = _GET_ROUTES.get(path)
            if handler is None:
                if path in _POST_ROUTES:
                    return 405, {"error": "MethodNotAllowed", "detail": f"{path} is POST-only"}
                return 404, {"error": "NotFound", "detail": f"no such endpoint: GET {path}"}
            return 200, handler(query)
        if method == "POST":
            handler = _POST_ROUTES.get(path)
            if handler is None:
                if path in _GET_ROUTES:
                    return 405, {"error": "MethodNotAllowed", "detail": f"{path} is GET-only"}
                return 404, {"error": "NotFound", "detail": f"no such endpoint: POST {path}"}
            if not body_bytes:
                raise ValueError("request body must be a JSON object")
            body = json.loads(body_bytes.decode("utf-8"))
            if not isinstance(body, dict):
                raise ValueError("request body must be a JSON object")
            return 200, handler(body)
        if path in _POST_ROUTES:
            return 405, {"error": "MethodNotAllowed", "detail": f"{path} is POST-only"}
        return 404, {"error": "NotFound", "detail": f"no such endpoint: {method} {path}"}
    except DOMAIN_ERRORS as exc:
        return 422, {"error": type(exc).__name__, "detail": str(exc)}
    except (IfnError, ValueError) as exc:
        payload: dict[str, Any] = {"error": type(exc).__name__, "detail": str(exc)}
        if isinstance(exc, SignatureSyntaxError):
            payload["position"] = exc.position
        return 400, payload
    except Exception as exc:  # pragma: no cover - genuine bugs only
        return 500, {"error": "Internal", "detail": str(exc)}


class PlaygroundServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address: tuple[str, int], static_dir: str | None = None):
        super().__init__(address, _Handler)
        self.static_dir = Path(static_dir).resolve() if static_dir else None


class _Handler(BaseHTTPRequestHandler):
    server: PlaygroundServer

    def log_message(self, format: str, *args: Any) -> None:  # keep test output clean
        pass

    def _send_cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _send_json(self, status: int, payload: dict[str, Any]) -> None:
        body = canonical_json(payload).encode("utf-8")
        self.send_response(status)
        self._send_cors()
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self._send_cors()
        self.end_headers()

    def do_GET(self) -> None:
        path = urlsplit(self.path).path
        if path.startswith("/api/"):
            status, payload = api_response("GET", self.path, None)
            self._send_json(status, payload)
            return
        if self.server.static_dir is not None:
            self._send_static(path)
            return
        self._send_json(404, {"error": "NotFound", "detail": "no static directory configured"})

    def do_POST(self) -> None:
        length = int(self.headers.get("Content-Length") or 0)
        body = self.rfile.read(length) if length else b""
        status, payload = api_response("POST", self.path, body)
        self._send_json(status, payload)

    def _send_static(self, path: str) -> None:
        root = self.server.static_dir
        assert root is not None
        target = (root / path.lstrip("/")).resolve()
        if target.is_dir():
            target = target / "index.html"
        if root not in target.parents and target != root:
            self._send_json(404, {"error": "NotFound", "detail": "path escapes static root"})
            return
        if not target.is_file():
            self._send_json(404, {"error": "NotFound", "detail": f"no such file: {path}"})
            return
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        data = target.read_bytes()
        self.send_response(200)
        self._send_cors()
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def make_server(host: str, port: int, static_dir: str | None = None) -> PlaygroundServer:
    return PlaygroundServer((host, port), static_dir=static_dir)


def run_server(host: str, port: int, static_dir: str | None = None) -> None:
    server = make_server(host, port, static_dir)
    actual_port = server.server_address[1]
    print(f"ifnkit service listening on http://{host}:{actual_port}", file=sys.stderr, flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
