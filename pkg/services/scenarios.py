"""
---
title: "Scenario Builders and Validation"
description: "Builders for the three reference configurations (three-source fairness, 17-VC upstream bottleneck, two-source transient) and the semantic validator every scenario passes before a run."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-24"
last_modified: "2026-10-17"
version: "1.0.0"
module_type: "Service Layer"
dependencies: ["math", "typing", "core.errors", "core.models", "core.units"]
key_classes: ["ScenarioCatalog"]
key_functions: ["build_three_source", "build_upstream", "build_two_source_transient", "validate_scenario", "round_trip_time_ms"]
design_patterns: ["Builder Pattern", "Registry Pattern"]
solid_principles: ["SRP - Single Responsibility Principle", "OCP - Open/Closed Principle"]
features: ["Reference Topologies", "Semantic Validation", "Field Path Errors"]
tags: ["scenarios", "topology", "validation", "services"]
---

services/scenarios.py - Scenario Builders and Validation

All links are 155.52 Mbps and 1000 km (5 ms one way). Every switch output
port runs ABR control; source access ports do not.

three-source
    S1 -L1-> SW1 -L2-> SW2 -L3-> SW4 -BN-> D     4 links, RTT 40 ms, app_cap 10
    S2 -L4-> SW3 -L5-> SW4 -BN-> D               3 links, RTT 30 ms
    S3 -L6-> SW5 -L7-> SW4 -BN-> D               3 links, RTT 30 ms
    ICR (10, 45, 105); the shared bottleneck is port BN at SW4.

two-source-transient
    S1 -L1-> SW1 -L2-> SW3 -BN-> D               persistent
    S2 -L3-> SW2 -L4-> SW3 -BN-> D               active 60 ms .. 120 ms
    ICR (70, 70); RTT 30 ms for both.

upstream
    S1..S15 -A1..A15-> SW1 -L1-> SW2
    S2..S15 continue SW2 -X-> D1
    S1 continues SW2 -L2-> D2, joined by S16, S17 (-A16/-A17-> SW2)
    17 VCs, all unbounded, ICR 10. With 150 Mbps of ABR capacity per
    port the max-min allocation is 10 for S1..S15 and 70 for S16, S17.

Switch counts are not fixed by anything other than the stated round-trip
times and the single shared bottleneck; the arrangements above are the
smallest that satisfy both.
"""
import math
from typing import Callable, Dict, List, Sequence, Tuple

from core.errors import ConfigurationError, ScenarioSemanticError
from core.models import LinkSpec, Node, NodeKind, Scenario, VcSpec
from core.units import propagation_delay, us_to_ms

LINK_RATE = 155.52
LINK_KM = 1000.0
ALWAYS = ((0.0, math.inf),)


def _nodes(sources: Sequence[str], switches: Sequence[str], destinations: Sequence[str]) -> Tuple[Node, ...]:
    return (
        tuple(Node(name, NodeKind.SOURCE) for name in sources)
        + tuple(Node(name, NodeKind.SWITCH) for name in switches)
        + tuple(Node(name, NodeKind.DESTINATION) for name in destinations)
    )


def _link(name: str, src: str, dst: str) -> LinkSpec:
    return LinkSpec(name=name, src=src, dst=dst, rate=LINK_RATE, length_km=LINK_KM)


def build_three_source(icrs: Tuple[float, float, float] = (10.0, 45.0, 105.0)) -> Scenario:
    """소스 병목 VC 하나와 비병목 VC 둘로 구성된 공정성 시나리오

    Args:
        icrs: (S1, S2, S3) 초기 셀 속도

    Returns:
        three-source 시나리오
    """
    links = (
        _link("L1", "S1", "SW1"),
        _link("L2", "SW1", "SW2"),
        _link("L3", "SW2", "SW4"),
        _link("L4", "S2", "SW3"),
        _link("L5", "SW3", "SW4"),
        _link("L6", "S3", "SW5"),
        _link("L7", "SW5", "SW4"),
        _link("BN", "SW4", "D"),
    )
    vcs = (
        VcSpec("S1", ("L1", "L2", "L3", "BN"), icr=icrs[0], app_cap=10.0),
        VcSpec("S2", ("L4", "L5", "BN"), icr=icrs[1]),
        VcSpec("S3", ("L6", "L7", "BN"), icr=icrs[2]),
    )
    return Scenario(
        name="three-source",
        nodes=_nodes(["S1", "S2", "S3"], ["SW1", "SW2", "SW3", "SW4", "SW5"], ["D"]),
        links=links,
        vcs=vcs,
    )


def build_upstream(icr: float = 10.0) -> Scenario:
    """17개 VC 상류 병목 시나리오"""
    sources = [f"S{i}" for i in range(1, 18)]
    links: List[LinkSpec] = [_link(f"A{i}", f"S{i}", "SW1") for i in range(1, 16)]
    links += [
        _link("L1", "SW1", "SW2"),
        _link("X", "SW2", "D1"),
        _link("L2", "SW2", "D2"),
        _link("A16", "S16", "SW2"),
        _link("A17", "S17", "SW2"),
    ]
    vcs = [VcSpec("S1", ("A1", "L1", "L2"), icr=icr)]
    vcs += [VcSpec(f"S{i}", (f"A{i}", "L1", "X"), icr=icr) for i in range(2, 16)]
    vcs += [VcSpec(f"S{i}", (f"A{i}", "L2"), icr=icr) for i in (16, 17)]
    return Scenario(
        name="upstream",
        nodes=_nodes(sources, ["SW1", "SW2"], ["D1", "D2"]),
        links=tuple(links),
        vcs=tuple(vcs),
    )


def build_two_source_transient(icrs: Tuple[float, float] = (70.0, 70.0)) -> Scenario:
    """두 번째 소스가 60 ms에 시작해 120 ms에 멈추는 과도 응답 시나리오"""
    links = (
        _link("L1", "S1", "SW1"),
        _link("L2", "SW1", "SW3"),
        _link("L3", "S2", "SW2"),
        _link("L4", "SW2", "SW3"),
        _link("BN", "SW3", "D"),
    )
    vcs = (
        VcSpec("S1", ("L1", "L2", "BN"), icr=icrs[0], windows=ALWAYS),
        VcSpec("S2", ("L3", "L4", "BN"), icr=icrs[1], windows=((60.0, 120.0),)),
    )
    return Scenario(
        name="two-source-transient",
        nodes=_nodes(["S1", "S2"], ["SW1", "SW2", "SW3"], ["D"]),
        links=links,
        vcs=vcs,
    )


class ScenarioCatalog:
    """이름으로 기본 시나리오를 찾는 레지스트리"""

    def __init__(self):
        self._builders: Dict[str, Callable[[], Scenario]] = {
            "three-source": build_three_source,
            "upstream": build_upstream,
            "two-source-transient": build_two_source_transient,
        }

    def names(self) -> List[str]:
        return list(self._builders)

    def build(self, name: str) -> Scenario:
        """시나리오 생성

        Raises:
            ConfigurationError: 등록되지 않은 이름
        """
        try:
            builder = self._builders[name]
        except KeyError:
            raise ConfigurationError(
                f"unknown scenario '{name}' (known: {', '.join(self._builders)})") from None
        return builder()


def round_trip_time_ms(scenario: Scenario, vc_name: str) -> float:
    """VC 왕복 전파 지연 (ms, 큐 지연 제외)"""
    index = scenario.vc_names().index(vc_name)
    one_way = sum(propagation_delay(link.length_km) for link in scenario.route_of(index))
    return us_to_ms(2 * one_way)


def validate_scenario(scenario: Scenario) -> Scenario:
    """시나리오 의미 검증

    Returns:
        검증된 시나리오 (그대로)

    Raises:
        ScenarioSemanticError: 필드 경로와 함께 첫 번째 위반 사항
    """
    if scenario.nrm < 2:
        raise ScenarioSemanticError(f"nrm must be >= 2, got {scenario.nrm}", "defaults.nrm")
    if not scenario.pcr > 0 or math.isinf(scenario.pcr):
        raise ScenarioSemanticError(f"pcr must be positive and finite, got {scenario.pcr}", "defaults.pcr")

    nodes = {}
    for node in scenario.nodes:
        if node.name in nodes:
            raise ScenarioSemanticError(f"duplicate node '{node.name}'", f"nodes.{node.name}")
        nodes[node.name] = node

    links = {}
    for link in scenario.links:
        path = f"links.{link.name}"
        if link.name in links:
            raise ScenarioSemanticError(f"duplicate link '{link.name}'", path)
        for end, node_name in (("from", link.src), ("to", link.dst)):
            if node_name not in nodes:
                raise ScenarioSemanticError(f"unknown node '{node_name}'", f"{path}.{end}")
        if not link.rate > 0 or math.isinf(link.rate):
            raise ScenarioSemanticError(f"rate must be positive and finite, got {link.rate}", f"{path}.rate")
        if not link.length_km >= 0 or math.isinf(link.length_km):
            raise ScenarioSemanticError(f"length must be >= 0, got {link.length_km}", f"{path}.length_km")
        links[link.name] = link

    seen = set()
    for vc in scenario.vcs:
        path = f"vcs.{vc.name}"
        if vc.name in seen:
            raise ScenarioSemanticError(f"duplicate vc '{vc.name}'", path)
        seen.add(vc.name)
        _validate_route(vc, nodes, links, path)
        _validate_rates(vc, path)
        _validate_windows(vc, path)
    return scenario


def _validate_route(vc: VcSpec, nodes: Dict[str, Node], links: Dict[str, LinkSpec], path: str):
    if not vc.route:
        raise ScenarioSemanticError(f"vc {vc.name} has an empty route", f"{path}.route")
    for hop, name in enumerate(vc.route):
        if name not in links:
            raise ScenarioSemanticError(
                f"vc {vc.name} routes over missing link '{name}'", f"{path}.route[{hop}]")
    hops = [links[name] for name in vc.route]
    if nodes[hops[0].src].kind is not NodeKind.SOURCE:
        raise ScenarioSemanticError(f"vc {vc.name} must start at a source node", f"{path}.route[0]")
    if nodes[hops[-1].dst].kind is not NodeKind.DESTINATION:
        raise ScenarioSemanticError(
            f"vc {vc.name} must end at a destination node", f"{path}.route[{len(hops) - 1}]")
    for hop in range(1, len(hops)):
        previous, current = hops[hop - 1], hops[hop]
        if previous.dst != current.src:
            raise ScenarioSemanticError(
                f"vc {vc.name} route is disconnected between '{previous.name}' and '{current.name}'",
                f"{path}.route[{hop}]")
        if nodes[current.src].kind is not NodeKind.SWITCH:
            raise ScenarioSemanticError(
                f"vc {vc.name} passes through non-switch node '{current.src}'", f"{path}.route[{hop}]")


def _validate_rates(vc: VcSpec, path: str):
    if not vc.icr > 0 or math.isinf(vc.icr):
        raise ScenarioSemanticError(f"icr must be positive and finite, got {vc.icr}", f"{path}.icr")
    if not vc.app_cap > 0:
        raise ScenarioSemanticError(f"app_cap must be > 0, got {vc.app_cap}", f"{path}.app_cap")
    if vc.pcr is not None and (not vc.pcr > 0 or math.isinf(vc.pcr)):
        raise ScenarioSemanticError(f"pcr must be positive and finite, got {vc.pcr}", f"{path}.pcr")


def _validate_windows(vc: VcSpec, path: str):
    previous_stop = -math.inf
    for index, (start, stop) in enumerate(vc.windows):
        where = f"{path}.windows[{index}]"
        if not start >= 0 or math.isinf(start):
            raise ScenarioSemanticError(f"window start must be >= 0, got {start}", where)
        if not stop > start:
            raise ScenarioSemanticError(f"window stop {stop} must be after start {start}", where)
        if start < previous_stop:
            raise ScenarioSemanticError("windows must be ordered and non-overlapping", where)
        previous_stop = stop

