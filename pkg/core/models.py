"""
---
title: "Domain Models and Simulation Entities"
description: "Value types shared by every layer of the ABR simulator: cells and RM payloads, topology descriptions (nodes, links, virtual connections, scenarios) and the TraceSet a run produces."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-21"
last_modified: "2026-10-17"
version: "1.0.0"
module_type: "Core Domain Layer"
dependencies: ["dataclasses", "enum", "math", "typing", "core.errors"]
key_classes: ["CellKind", "RmPayload", "Cell", "FeedbackDecision", "NodeKind", "Node", "LinkSpec", "VcSpec", "Scenario", "TraceSet"]
key_functions: ["with_er", "route_of", "link", "series_between", "final_value"]
design_patterns: ["Value Object Pattern", "Aggregate Pattern"]
solid_principles: ["SRP - Single Responsibility Principle"]
features: ["Immutable Design", "Type Safety", "Unbounded Demand Sentinel"]
tags: ["domain-models", "cells", "topology", "traces", "core"]
---

core/models.py - Domain Models and Simulation Entities

This module holds the value objects every other layer exchanges: cells and
their RM payloads on the wire, the static description of a topology, and the
time series a run leaves behind. Nothing in it knows about the event loop or
about a particular switch algorithm.

Domain Models:

1. Cell / RmPayload (Value Objects):
   One 53-byte cell. Data cells carry no payload; forward and backward RM
   cells carry RmPayload(ccr, er).

   Behavior:
   - RmPayload.with_er() returns a lowered copy
   - Cell.is_rm tells RM cells from data cells
   - A Cell rejects a payload that does not match its kind

2. FeedbackDecision (Value Object):
   What one port did to one backward RM cell: the ER it wrote and the ER it
   computed before the min with the incoming value.

3. Scenario (Aggregate Root):
   Nodes, links and VCs of one experiment plus the defaults (PCR, Nrm).

   Behavior:
   - Name lookups for nodes and links
   - route_of() resolves a VC's link names to LinkSpec objects
   - pcr_of() applies the per-VC override
   - is_controlled() marks links whose tail node is a switch

4. TraceSet (Aggregate):
   Every time series of one run.

   Behavior:
   - record_acr() / record_port() append samples
   - series_between(), value_at() and final_value() read step functions

Units used throughout:
- Rate: Mbps (float). UNBOUNDED (+inf) marks an unconstrained demand.
- SimTime: microseconds inside the engine. Scenario descriptions keep the
  file units (ms for windows, km for lengths) so they round-trip exactly.
- VcId: position of the VC inside Scenario.vcs.

Cells and payloads are frozen dataclasses; a switch that lowers ER builds a
new payload with RmPayload.with_er() instead of mutating the old one.

Scenario is the aggregate root for a topology:
    nodes  -> Node(name, kind)
    links  -> LinkSpec(name, src, dst, rate, length_km), one direction of travel
    vcs    -> VcSpec(name, route, icr, app_cap, windows)

TraceSet collects time-stamped samples keyed by VC name (acr) or by port
name (queue, neff, fair_share, util, cells_out). Every series is a list of
(time_us, value) pairs appended in event order, hence time-sorted.

Usage Examples:
payload = RmPayload(ccr=50.0, er=155.52)
cell = Cell(vc=0, kind=CellKind.FORWARD_RM, emitted_at=0.0, seq=31, rm=payload)
lowered = payload.with_er(70.0)
"""
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

from core.errors import ContractViolationError

Rate = float
SimTime = float
VcId = int

UNBOUNDED: Rate = math.inf

# 기본 PCR (링크 속도와 동일)
DEFAULT_PCR: Rate = 155.52
DEFAULT_NRM = 32


class CellKind(Enum):
    """셀 종류"""
    DATA = "data"
    FORWARD_RM = "forward-rm"
    BACKWARD_RM = "backward-rm"


@dataclass(frozen=True)
class RmPayload:
    """RM 셀 페이로드

    Attributes:
        ccr: 소스가 선언한 현재 셀 속도 (Mbps)
        er: 명시적 속도 (Mbps), 경로를 따라 감소만 함
        ci: 혼잡 표시 플래그 (이 시뮬레이터에서는 항상 False)
        ni: 증가 금지 플래그 (항상 False)
    """
    ccr: Rate
    er: Rate
    ci: bool = False
    ni: bool = False

    def with_er(self, er: Rate) -> "RmPayload":
        """ER만 바꾼 새 페이로드 반환"""
        return replace(self, er=er)


@dataclass(frozen=True)
class Cell:
    """ATM 셀 (데이터 또는 RM)

    Attributes:
        vc: VC 식별자
        kind: 셀 종류
        emitted_at: 소스 송신 시각 (us)
        seq: 소스별 단조 증가 일련번호
        rm: RM 페이로드 (데이터 셀이면 None)
    """
    vc: VcId
    kind: CellKind
    emitted_at: SimTime
    seq: int
    rm: Optional[RmPayload] = None

    def __post_init__(self):
        if (self.rm is None) != (self.kind is CellKind.DATA):
            raise ContractViolationError(
                f"cell kind {self.kind.value} inconsistent with rm payload presence"
            )

    @property
    def is_rm(self) -> bool:
        return self.kind is not CellKind.DATA


@dataclass(frozen=True)
class FeedbackDecision:
    """스위치가 BRM 셀에 기록한 ER

    Attributes:
        er_out: BRM ER 필드에 쓴 값 (들어온 ER 이하)
        computed: 포트가 계산한 ER (min 적용 전)
    """
    er_out: Rate
    computed: Rate


class NodeKind(Enum):
    """토폴로지 노드 종류"""
    SOURCE = "source"
    SWITCH = "switch"
    DESTINATION = "destination"


@dataclass(frozen=True)
class Node:
    name: str
    kind: NodeKind


@dataclass(frozen=True)
class LinkSpec:
    """단방향 링크 정의 (역방향 RM 셀은 같은 링크를 거꾸로 사용)

    Attributes:
        name: 링크 이름
        src: 송신 측 노드 이름 (이 노드의 출력 포트가 링크를 구동)
        dst: 수신 측 노드 이름
        rate: 대역폭 (Mbps)
        length_km: 길이 (km)
    """
    name: str
    src: str
    dst: str
    rate: Rate = DEFAULT_PCR
    length_km: float = 1000.0


@dataclass(frozen=True)
class VcSpec:
    """가상 연결 정의

    Attributes:
        name: VC 이름 (예: "S1")
        route: 소스에서 목적지까지 순서대로 지나는 링크 이름
        icr: 초기 셀 속도 (Mbps)
        app_cap: 애플리케이션 상한 (UNBOUNDED면 제한 없음)
        windows: 활성 구간 목록 (시작 ms, 종료 ms), 종료가 inf면 끝까지
        pcr: VC별 PCR (None이면 시나리오 기본값)
    """
    name: str
    route: Tuple[str, ...]
    icr: Rate
    app_cap: Rate = UNBOUNDED
    windows: Tuple[Tuple[float, float], ...] = ((0.0, math.inf),)
    pcr: Optional[Rate] = None


@dataclass(frozen=True)
class Scenario:
    """시뮬레이션 시나리오 (토폴로지 + VC 집합)"""
    name: str
    nodes: Tuple[Node, ...]
    links: Tuple[LinkSpec, ...]
    vcs: Tuple[VcSpec, ...]
    pcr: Rate = DEFAULT_PCR
    nrm: int = DEFAULT_NRM

    def node(self, name: str) -> Node:
        for node in self.nodes:
            if node.name == name:
                return node
        raise KeyError(name)

    def link(self, name: str) -> LinkSpec:
        for link in self.links:
            if link.name == name:
                return link
        raise KeyError(name)

    def route_of(self, vc: VcId) -> List[LinkSpec]:
        """VC 경로의 링크 객체 목록"""
        return [self.link(name) for name in self.vcs[vc].route]

    def pcr_of(self, vc: VcId) -> Rate:
        spec = self.vcs[vc]
        return spec.pcr if spec.pcr is not None else self.pcr

    def is_controlled(self, link: LinkSpec) -> bool:
        """스위치 출력 포트가 구동하는 링크인지 (ABR 제어 대상)"""
        return self.node(link.src).kind is NodeKind.SWITCH

    def vc_names(self) -> List[str]:
        return [vc.name for vc in self.vcs]


Series = List[Tuple[SimTime, float]]


@dataclass
class TraceSet:
    """한 번의 실행에서 수집한 시계열 샘플

    Attributes:
        acr: VC 이름별 (시각 us, ACR Mbps)
        send_rate: VC 이름별 (시각 us, min(ACR, app_cap))
        queue: 포트 이름별 (시각 us, 큐 길이 cells)
        neff: 포트 이름별 (시각 us, 활성 VC 수)
        fair_share: 포트 이름별 (시각 us, FairShare Mbps)
        util: 포트 이름별 (시각 us, 직전 샘플 이후 이용률)
        cells_out: 포트 이름별 (시각 us, 누적 송신 셀 수)
        duration_us: 실행 길이 (us)
    """
    acr: Dict[str, Series] = field(default_factory=dict)
    send_rate: Dict[str, Series] = field(default_factory=dict)
    queue: Dict[str, Series] = field(default_factory=dict)
    neff: Dict[str, Series] = field(default_factory=dict)
    fair_share: Dict[str, Series] = field(default_factory=dict)
    util: Dict[str, Series] = field(default_factory=dict)
    cells_out: Dict[str, Series] = field(default_factory=dict)
    duration_us: SimTime = 0.0

    @staticmethod
    def _append(table: Dict[str, Series], key: str, time: SimTime, value: float):
        table.setdefault(key, []).append((time, value))

    def record_acr(self, vc_name: str, time: SimTime, acr: Rate, send_rate: Rate):
        self._append(self.acr, vc_name, time, acr)
        self._append(self.send_rate, vc_name, time, send_rate)

    def record_port(self, port_name: str, time: SimTime, queue: int, cells_out: int,
                    util: Optional[float] = None, neff: Optional[float] = None,
                    fair_share: Optional[Rate] = None):
        """포트 샘플 기록 (제어 포트가 아니면 neff/fair_share는 None)"""
        self._append(self.queue, port_name, time, float(queue))
        self._append(self.cells_out, port_name, time, float(cells_out))
        if util is not None:
            self._append(self.util, port_name, time, util)
        if neff is not None:
            self._append(self.neff, port_name, time, neff)
        if fair_share is not None:
            self._append(self.fair_share, port_name, time, fair_share)

    @staticmethod
    def series_between(series: Series, start: SimTime, stop: SimTime) -> List[float]:
        """[start, stop] 구간의 값 목록"""
        return [value for time, value in series if start <= time <= stop]

    @staticmethod
    def value_at(series: Series, time: SimTime) -> float:
        """time 시점에 유효한 마지막 값 (계단 함수)"""
        current = series[0][1] if series else 0.0
        for sample_time, value in series:
            if sample_time > time:
                break
            current = value
        return current

    @staticmethod
    def final_value(series: Series) -> float:
        return series[-1][1] if series else 0.0
