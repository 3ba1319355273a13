"""Parsing and serialization for instance files, network files and reports.

Rationals travel as strings ("3/4", "8") so nothing ever goes through a
float; integers are accepted on input for convenience.  All emitted
structures use fixed key orders, which keeps reports byte-identical for
identical inputs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .blowup import (
    BlowupSpec,
    BlowupVertex,
    CoreSatelliteSpec,
    HostGraph,
    UnbalancedSpec,
    build_blowup,
    build_core_satellite,
    build_unbalanced,
)
from .netcore import WeightedNetwork, rational


def format_rational(value: Fraction | int) -> str:
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(value: object) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, str, Fraction)):
        return rational(value)
    raise ValueError(f"not a rational: {value!r}")


# --- network files -----------------------------------------------------------


def network_to_obj(net: WeightedNetwork) -> dict:
    return {
        "vertices": list(net.vertices),
        "edges": [
            {"u": u, "v": v, "conductance": format_rational(c)}
            for u, v, c in net.edges
        ],
    }


def network_from_obj(obj: dict) -> WeightedNetwork:
    if not isinstance(obj, dict):
        raise ValueError("network file must hold an object")
    vertices = obj.get("vertices")
    edges = obj.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValueError("network needs a list of string vertex labels")
    if not isinstance(edges, list):
        raise ValueError("network edges must be a list")
    parsed = []
    for entry in edges:
        if not isinstance(entry, dict) or not {"u", "v", "conductance"} <= set(entry):
            raise ValueError(f"bad edge entry: {entry!r}")
        parsed.append((entry["u"], entry["v"], parse_rational(entry["conductance"])))
    return WeightedNetwork(vertices, parsed)


# --- instance files -----------------------------------------------------------


def _require_int(obj: dict, key: str, minimum: int | None = None) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"'{key}' must be an integer")
    if minimum is not None and value < minimum:
        raise ValueError(f"'{key}' must be at least {minimum}")
    return value


def _int_pairs(obj: dict, key: str) -> list[tuple[int, int]]:
    raw = obj.get(key, [])
    if not isinstance(raw, list):
        raise ValueError(f"'{key}' must be a list of index pairs")
    out = []
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise ValueError(f"bad index pair in '{key}': {entry!r}")
        out.append((entry[0], entry[1]))
    return out


def _int_list(obj: dict, key: str) -> list[int]:
    raw = obj.get(key)
    if not isinstance(raw, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in raw
    ):
        raise ValueError(f"'{key}' must be a list of integers")
    return list(raw)


HOST_KINDS = (
    "complete",
    "star",
    "path",
    "complete_minus_matching",
    "complete_minus_star",
    "edges",
)


def host_from_obj(obj: dict) -> tuple[HostGraph, str, dict]:
    """Parse a host description; returns (host, kind, canonical params)."""
    if not isinstance(obj, dict):
        raise ValueError("'host' must be an object")
    kind = obj.get("kind")
    if kind not in HOST_KINDS:
        raise ValueError(f"host kind must be one of {', '.join(HOST_KINDS)}")
    k = _require_int(obj, "k", 1)
    if kind == "complete":
        return HostGraph.complete(k), kind, {"kind": kind, "k": k}
    if kind == "star":
        return HostGraph.star(k), kind, {"kind": kind, "k": k}
    if kind == "path":
        return HostGraph.path(k), kind, {"kind": kind, "k": k}
    if kind == "complete_minus_matching":
        matching = _int_pairs(obj, "matching")
        host = HostGraph.complete_minus_matching(k, matching)
        return host, kind, {
            "kind": kind,
            "k": k,
            "matching": [sorted(pair) for pair in matching],
        }
    if kind == "complete_minus_star":
        d = _require_int(obj, "d", 1)
        return HostGraph.complete_minus_star(k, d), kind, {"kind": kind, "k": k, "d": d}
    edges = _int_pairs(obj, "edges")
    host = HostGraph.from_edges(k, edges)
    return host, kind, {
        "kind": kind,
        "k": k,
        "edges": [list(e) for e in host.sorted_edges()],
    }


@dataclass
class Instance:
    """One parsed instance file: a family plus its host and parameters."""

    family: str
    host: HostGraph
    host_kind: str
    host_echo: dict
    blowup: BlowupSpec | None = None
    unbalanced: UnbalancedSpec | None = None
    core: CoreSatelliteSpec | None = None

    @property
    def n(self) -> int:
        spec = self.blowup or self.unbalanced or self.core
        return spec.n

    def build(self) -> WeightedNetwork:
        if self.family == "blowup":
            return build_blowup(self.host, self.blowup)
        if self.family == "unbalanced":
            return build_unbalanced(self.host, self.unbalanced)
        return build_core_satellite(self.core)

    def all_vertices(self) -> list[BlowupVertex]:
        spec = self.blowup or self.unbalanced or self.core
        return spec.all_vertices()

    def echo(self) -> dict:
        if self.family == "blowup":
            return {
                "family": self.family,
                "host": self.host_echo,
                "t": self.blowup.t,
                "p": list(self.blowup.p),
                "q": list(self.blowup.q),
                "n": self.n,
            }
        if self.family == "unbalanced":
            return {
                "family": self.family,
                "host": self.host_echo,
                "kinds": list(self.unbalanced.kinds),
                "sizes": list(self.unbalanced.sizes),
                "n": self.n,
            }
        return {
            "family": self.family,
            "sizes": list(self.core.sizes),
            "n": self.n,
        }


def instance_from_obj(obj: dict) -> Instance:
    if not isinstance(obj, dict):
        raise ValueError("instance file must hold an object")
    family = obj.get("family")
    if family == "blowup":
        host, kind, echo = host_from_obj(obj.get("host"))
        t = _require_int(obj, "t", 1)
        p = _int_list(obj, "p")
        q = _int_list(obj, "q")
        return Instance(family, host, kind, echo, blowup=BlowupSpec(t, tuple(p), tuple(q)))
    if family == "unbalanced":
        host, kind, echo = host_from_obj(obj.get("host"))
        kinds = obj.get("kinds")
        if not isinstance(kinds, list) or not all(isinstance(x, str) for x in kinds):
            raise ValueError("'kinds' must be a list of part kinds")
        sizes = _int_list(obj, "sizes")
        return Instance(
            family, host, kind, echo,
            unbalanced=UnbalancedSpec(tuple(kinds), tuple(sizes)),
        )
    if family == "core_satellite":
        sizes = _int_list(obj, "sizes")
        core = CoreSatelliteSpec(tuple(sizes))
        host, _ = core.as_unbalanced()
        return Instance(family, host, "star", {"kind": "star", "k": core.k}, core=core)
    raise ValueError("family must be blowup, unbalanced or core_satellite")


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


# --- reports ----------------------------------------------------------------------


def render_report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def render_report_csv(report: dict) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    suites = report.get("summary", {}).get("suites")
    if suites is not None:
        writer.writerow(["suite", "instances", "checks", "failures", "skipped"])
        for suite in suites:
            writer.writerow(
                [
                    suite["name"],
                    suite["instances"],
                    suite["checks"],
                    suite["failures"],
                    suite["skipped"],
                ]
            )
        return buffer.getvalue()
    writer.writerow(["name", "class", "closed_form", "oracle", "equal"])
    for record in report.get("records", []):
        writer.writerow(
            [
                record["name"],
                record.get("class", ""),
                record["closed_form"],
                record["oracle"],
                str(record["equal"]).lower(),
            ]
        )
    return buffer.getvalue()
