"""Canonical JSON formats for instances, matchings, and certificates.

All arrays are sorted ascending and every edge is written smaller-endpoint
first, so serializing the same value always produces identical bytes
(UTF-8, LF line endings).
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import InputError
from .games import BlockCertificate, Instance
from .graphs import Graph, Matching


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _edge_list(edges) -> list[list[int]]:
    return [[u, v] for u, v in sorted(edges)]


def _load(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON for {what}: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object")
    return obj


def _parse_edges(raw, what: str) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise InputError(f"{what}.edges must be an array")
    out = []
    for e in raw:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) for x in e)
        ):
            raise InputError(f"{what} edge {e!r} must be a pair of integers")
        out.append((e[0], e[1]))
    return out


def instance_to_json(inst: Instance) -> str:
    return _dump(
        {
            "n": inst.graph.n,
            "edges": _edge_list(inst.graph.edges),
            "players": sorted(sorted(p) for p in inst.players),
        }
    )


def instance_from_json(text: str) -> Instance:
    obj = _load(text, "instance")
    if not isinstance(obj.get("n"), int):
        raise InputError("instance.n must be an integer")
    edges = _parse_edges(obj.get("edges", []), "instance")
    players_raw = obj.get("players")
    if not isinstance(players_raw, list) or not players_raw:
        raise InputError("instance.players must be a non-empty array")
    players = []
    for p in players_raw:
        if not isinstance(p, list) or not all(isinstance(x, int) for x in p):
            raise InputError(f"player {p!r} must be an array of integers")
        players.append(frozenset(p))
    return Instance(Graph(obj["n"], edges), tuple(players))


def matching_to_json(m: Matching) -> str:
    return _dump({"edges": _edge_list(m.edges)})


def matching_from_json(text: str) -> Matching:
    obj = _load(text, "matching")
    return Matching(_parse_edges(obj.get("edges", []), "matching"))


def certificate_to_json(
    core_kind: str, cert: Optional[BlockCertificate]
) -> str:
    """Verification outcome; ``kind`` names the core that was tested."""
    if cert is None:
        return _dump(
            {"verdict": "in_core", "kind": core_kind, "coalition": [], "witness": []}
        )
    return _dump(
        {
            "verdict": "blocked",
            "kind": core_kind,
            "coalition": sorted(cert.coalition),
            "witness": _edge_list(cert.witness.edges),
        }
    )


def certificate_from_json(text: str) -> dict:
    obj = _load(text, "certificate")
    if obj.get("verdict") not in ("in_core", "blocked"):
        raise InputError("certificate.verdict must be 'in_core' or 'blocked'")
    if obj.get("kind") not in ("weak", "strong"):
        raise InputError("certificate.kind must be 'weak' or 'strong'")
    coalition = obj.get("coalition", [])
    if not isinstance(coalition, list) or not all(
        isinstance(x, int) for x in coalition
    ):
        raise InputError("certificate.coalition must be an array of integers")
    return {
        "verdict": obj["verdict"],
        "kind": obj["kind"],
        "coalition": tuple(coalition),
        "witness": Matching(_parse_edges(obj.get("witness", []), "certificate")),
    }


def name_map_to_json(names: dict) -> str:
    return _dump({k: names[k] for k in sorted(names)})
