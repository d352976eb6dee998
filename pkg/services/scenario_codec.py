"""
---
title: "YAML Scenario File Codec"
description: "Parses and serializes scenario files. YAML with comments, strict key checking, file units (Mbps, km, ms) and exact round-tripping of every Scenario the builders produce."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-25"
last_modified: "2026-10-13"
version: "1.0.0"
module_type: "Service Layer"
dependencies: ["math", "pathlib", "typing", "yaml", "core.errors", "core.models", "services.scenarios"]
key_classes: ["YamlScenarioCodec"]
key_functions: ["parse", "serialize", "load", "parse_scenario", "serialize_scenario"]
design_patterns: ["Codec Pattern"]
solid_principles: ["SRP - Single Responsibility Principle"]
features: ["Comments", "Unknown Key Rejection", "Line Numbers", "Field Paths", "Exact Round Trip"]
tags: ["yaml", "scenario-file", "serialization", "services"]
---

services/scenario_codec.py - YAML Scenario File Codec

File layout (see docs/scenario_format.md for the full schema):

    name: two-source-transient
    defaults: {pcr: 155.52, nrm: 32}          # optional
    nodes:
      S1: source
      SW1: switch
      D: destination
    links:
      L1: {from: S1, to: SW1, rate: 155.52, length_km: 1000.0}
    vcs:
      S1:
        route: [L1, L2, BN]
        icr: 70.0
        app_cap: unbounded                    # or a rate in Mbps
        windows: [[0.0, end]]                 # ms; "end" = until the run stops
        pcr: 155.52                           # optional

Errors:
- malformed YAML -> ScenarioSyntaxError with the 1-based line number
- unknown or missing keys, wrong types, dangling routes -> ScenarioSemanticError
  with a dotted field path such as "vcs.S2.route[1]"
"""
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from core.errors import ConfigurationError, ScenarioSemanticError, ScenarioSyntaxError
from core.models import DEFAULT_NRM, DEFAULT_PCR, LinkSpec, Node, NodeKind, Scenario, VcSpec
from services.scenarios import validate_scenario

TOP_KEYS = {"name", "defaults", "nodes", "links", "vcs"}
REQUIRED_TOP_KEYS = {"name", "nodes", "links", "vcs"}
DEFAULT_KEYS = {"pcr", "nrm"}
LINK_KEYS = {"from", "to", "rate", "length_km"}
VC_KEYS = {"route", "icr", "app_cap", "windows", "pcr"}

UNBOUNDED_WORD = "unbounded"
END_WORD = "end"


class YamlScenarioCodec:
    """YAML 시나리오 코덱 (ScenarioCodec 프로토콜 구현)"""

    def parse(self, text: str) -> Scenario:
        """시나리오 텍스트 해석

        Args:
            text: YAML 문서

        Returns:
            검증된 Scenario

        Raises:
            ScenarioSyntaxError: YAML 구문 오류
            ScenarioSemanticError: 스키마 또는 의미 오류
        """
        try:
            document = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            mark = getattr(exc, "problem_mark", None) or getattr(exc, "context_mark", None)
            line = mark.line + 1 if mark is not None else None
            problem = getattr(exc, "problem", None) or str(exc)
            raise ScenarioSyntaxError(problem, line) from exc

        if not isinstance(document, dict):
            raise ScenarioSemanticError("scenario file must be a mapping", "")
        _check_keys(document, TOP_KEYS, "", required=REQUIRED_TOP_KEYS)

        defaults = _mapping(document.get("defaults") or {}, "defaults")
        _check_keys(defaults, DEFAULT_KEYS, "defaults")

        scenario = Scenario(
            name=_text(document["name"], "name"),
            nodes=self._parse_nodes(_mapping(document["nodes"], "nodes")),
            links=self._parse_links(_mapping(document["links"], "links")),
            vcs=self._parse_vcs(_mapping(document["vcs"] or {}, "vcs")),
            pcr=_rate(defaults.get("pcr", DEFAULT_PCR), "defaults.pcr"),
            nrm=_integer(defaults.get("nrm", DEFAULT_NRM), "defaults.nrm"),
        )
        return validate_scenario(scenario)

    def serialize(self, scenario: Scenario) -> str:
        """Scenario를 YAML 텍스트로 변환"""
        document = {
            "name": scenario.name,
            "defaults": {"pcr": scenario.pcr, "nrm": scenario.nrm},
            "nodes": {node.name: node.kind.value for node in scenario.nodes},
            "links": {
                link.name: {"from": link.src, "to": link.dst,
                            "rate": link.rate, "length_km": link.length_km}
                for link in scenario.links
            },
            "vcs": {vc.name: self._vc_document(vc) for vc in scenario.vcs},
        }
        return yaml.safe_dump(document, sort_keys=False, default_flow_style=None)

    def load(self, path: Path) -> Scenario:
        """파일에서 시나리오 읽기"""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigurationError(f"cannot read scenario file {path}: {exc}") from exc
        return self.parse(text)

    # --- 내부 변환 ---

    def _parse_nodes(self, nodes: Dict[str, Any]) -> Tuple[Node, ...]:
        parsed = []
        kinds = {kind.value: kind for kind in NodeKind}
        for name, kind in nodes.items():
            if kind not in kinds:
                raise ScenarioSemanticError(
                    f"unknown node kind '{kind}' (known: {', '.join(kinds)})", f"nodes.{name}")
            parsed.append(Node(str(name), kinds[kind]))
        return tuple(parsed)

    def _parse_links(self, links: Dict[str, Any]) -> Tuple[LinkSpec, ...]:
        parsed = []
        for name, body in links.items():
            path = f"links.{name}"
            body = _mapping(body, path)
            _check_keys(body, LINK_KEYS, path, required={"from", "to"})
            parsed.append(LinkSpec(
                name=str(name),
                src=_text(body["from"], f"{path}.from"),
                dst=_text(body["to"], f"{path}.to"),
                rate=_rate(body.get("rate", DEFAULT_PCR), f"{path}.rate"),
                length_km=_rate(body.get("length_km", 1000.0), f"{path}.length_km"),
            ))
        return tuple(parsed)

    def _parse_vcs(self, vcs: Dict[str, Any]) -> Tuple[VcSpec, ...]:
        parsed = []
        for name, body in vcs.items():
            path = f"vcs.{name}"
            body = _mapping(body, path)
            _check_keys(body, VC_KEYS, path, required={"route", "icr"})
            route = body["route"]
            if not isinstance(route, list):
                raise ScenarioSemanticError("route must be a list of link names", f"{path}.route")
            pcr = body.get("pcr")
            parsed.append(VcSpec(
                name=str(name),
                route=tuple(_text(hop, f"{path}.route[{i}]") for i, hop in enumerate(route)),
                icr=_rate(body["icr"], f"{path}.icr"),
                app_cap=_rate(body.get("app_cap", UNBOUNDED_WORD), f"{path}.app_cap"),
                windows=_windows(body.get("windows", [[0.0, END_WORD]]), f"{path}.windows"),
                pcr=None if pcr is None else _rate(pcr, f"{path}.pcr"),
            ))
        return tuple(parsed)

    @staticmethod
    def _vc_document(vc: VcSpec) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "route": list(vc.route),
            "icr": vc.icr,
            "app_cap": UNBOUNDED_WORD if math.isinf(vc.app_cap) else vc.app_cap,
            "windows": [[start, END_WORD if math.isinf(stop) else stop] for start, stop in vc.windows],
        }
        if vc.pcr is not None:
            document["pcr"] = vc.pcr
        return document


def _check_keys(body: Dict[str, Any], allowed: set, path: str, required: Optional[set] = None):
    for key in body:
        if key not in allowed:
            where = f"{path}.{key}" if path else str(key)
            raise ScenarioSemanticError(f"unknown key '{key}'", where)
    for key in sorted(required or ()):
        if key not in body:
            where = f"{path}.{key}" if path else key
            raise ScenarioSemanticError(f"missing required key '{key}'", where)


def _mapping(value: Any, path: str) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise ScenarioSemanticError("expected a mapping", path)
    return value


def _text(value: Any, path: str) -> str:
    if not isinstance(value, str) or not value:
        raise ScenarioSemanticError(f"expected a non-empty name, got {value!r}", path)
    return value


def _rate(value: Any, path: str) -> float:
    if value == UNBOUNDED_WORD:
        return math.inf
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioSemanticError(f"expected a number, got {value!r}", path)
    return float(value)


def _integer(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioSemanticError(f"expected an integer, got {value!r}", path)
    return value


def _windows(value: Any, path: str) -> Tuple[Tuple[float, float], ...]:
    if not isinstance(value, list):
        raise ScenarioSemanticError("windows must be a list of [start, stop] pairs", path)
    windows: List[Tuple[float, float]] = []
    for index, pair in enumerate(value):
        where = f"{path}[{index}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ScenarioSemanticError("window must be a [start, stop] pair", where)
        start = _rate(pair[0], f"{where}[0]")
        stop = math.inf if pair[1] == END_WORD else _rate(pair[1], f"{where}[1]")
        windows.append((start, stop))
    return tuple(windows)


_DEFAULT_CODEC = YamlScenarioCodec()


def parse_scenario(text: str) -> Scenario:
    return _DEFAULT_CODEC.parse(text)


def serialize_scenario(scenario: Scenario) -> str:
    return _DEFAULT_CODEC.serialize(scenario)
