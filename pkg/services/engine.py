"""
---
title: "Discrete-Event ABR Network Engine"
description: "Deterministic cell-level event loop. Store-and-forward FIFO output ports with transmission and propagation delay, measurement-interval timers at every controlled port, backward RM feedback along the reverse path and trace collection."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-26"
last_modified: "2026-10-17"
version: "1.0.0"
module_type: "Service Layer"
dependencies: ["heapq", "logging", "collections", "dataclasses", "enum", "typing", "numpy", "core.config", "core.errors", "core.models", "core.units", "services.maxmin", "services.scenarios", "services.source", "services.switch"]
key_classes: ["SimulationEngine", "Port", "RunResult", "PortCounters", "FeedbackSample"]
key_functions: ["simulate", "run", "run_sweep", "network_model", "utilization"]
design_patterns: ["Event Loop", "Facade Pattern"]
solid_principles: ["SRP - Single Responsibility Principle", "DIP - Dependency Inversion Principle"]
features: ["Store-and-Forward Ports", "Deterministic Tiebreak", "Interval Timers", "Reverse-Path Feedback", "Cell Conservation", "Trace Sampling"]
tags: ["simulation", "event-loop", "engine", "services"]
---

services/engine.py - Discrete-Event ABR Network Engine

This module turns a Scenario into a running cell-level network: sources pace
cells onto links, switch output ports queue and forward them, destinations
turn forward RM cells around, and the backward RM cells carry explicit rates
back through every controlled port to the sources.

Key Responsibilities:
- Build one forward and one reverse port per link, and attach a rate
  allocator to every forward port that leaves a switch
- Run a single heapq event loop over source emissions, cell arrivals,
  interval timers, trace samples and activity-window edges
- Route backward RM cells hop by hop and audit the ER that reaches each
  source against the minimum of the ERs computed along its path
- Record ACR, queue, N_eff, FairShare and utilization samples into a TraceSet
- Expose per-port counters and a cell-conservation check on the RunResult

Architecture:
Every link has two output ports: the forward port at its tail node and a
reverse port at its head node that carries backward RM cells. Only forward
ports whose tail node is a switch run ABR control.

Cell path of a VC with route (l0, l1, ..., lk):

    source --fwd l0--> node --fwd l1--> ... --fwd lk--> destination
    source <--rev l0-- node <--rev l1-- ... <--rev lk-- destination

- A cell entering a switch for forward link li is counted by that port's
  controller before it is queued.
- A backward RM cell reaching the tail switch of li gets its ER lowered by
  the controller of the forward port of li, then continues on rev l(i-1).
- The destination turns every forward RM cell around with zero delay.

Port model: a cell queued at time t starts transmission at
max(t, busy_until) and arrives at the far node one propagation delay after
its last bit leaves. Ports keep their completion times, so queue lengths
and departures are derived without separate departure events.

Events are ordered by (time, insertion sequence). Nothing is iterated in
an order that depends on hashing, so identical inputs give identical traces.

Sampling: ACR on every change and at window edges; queue, N_eff and
FairShare at every interval end; queue, cumulative departures and
utilization on a fixed grid (100 us by default).

Usage Examples:
result = simulate(build_three_source(), SwitchConfig(), duration_us=400_000)
result.traces.acr["S2"]
result.utilization("BN", 300_000, 400_000)
assert result.conservation_holds()

Error Handling:
- ProtocolError (from the controllers) when a cell reaches a port for a VC
  that is not routed through it
- ContractViolationError when an engine instance is run a second time
- InvalidArgumentError for a negative duration, a zero sample period or a
  zero-length utilization window
- Scenario problems are rejected earlier by validate_scenario; the engine
  assumes a well-formed topology

Run-level checks kept on the result:
- cells_in == cells_out + queued on every port
- emitted == delivered + queued + in flight on the forward path, and
  turned around == received + queued + in flight on the reverse path
- feedback_mismatches counts BRM cells whose final ER differs from
  min(PCR, ER computed at each hop)

Buffers are unbounded and no cell is ever dropped.
"""
import heapq
import logging
from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum, IntEnum
from typing import Any, Deque, Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.config import SwitchConfig
from core.errors import ContractViolationError, InvalidArgumentError
from core.models import Cell, CellKind, NodeKind, Rate, Scenario, SimTime, TraceSet, VcId
from core.units import CELL_BITS, cell_transmission_time, ms_to_us, propagation_delay
from services.maxmin import NetworkModel
from services.scenarios import validate_scenario
from services.source import AbrSource, Destination
from services.switch import PortController, create_port_controller

logger = logging.getLogger(__name__)

DEFAULT_SAMPLE_PERIOD_US = 100.0
DEFAULT_FEEDBACK_SAMPLES = 256
REVERSE_SUFFIX = ":rev"


class Direction(Enum):
    FORWARD = "forward"
    REVERSE = "reverse"


class EventKind(IntEnum):
    SOURCE_EMIT = 0
    CELL_ARRIVAL = 1
    INTERVAL_END = 2
    TRACE_SAMPLE = 3
    WINDOW_EDGE = 4


@dataclass
class Port:
    """단방향 출력 포트 (저장 후 전달 FIFO)

    Attributes:
        name: 포트 이름 (순방향은 링크 이름, 역방향은 링크 이름 + ":rev")
        link_rate: 링크 속도 (Mbps)
        direction: 순방향/역방향
        transmission_time: 셀 하나 전송 시간 (us)
        propagation: 전파 지연 (us)
        controller: ABR 제어기 (제어 포트만)
        busy_until: 현재 대기열의 마지막 셀 전송 완료 시각
        completions: 아직 전송이 끝나지 않은 셀의 완료 시각
        cells_in: 누적 입력 셀 수
        cells_out: 누적 전송 완료 셀 수
        handed_off: 다음 노드에 도착한 셀 수
        max_queue: 최대 큐 길이
    """
    name: str
    link_rate: Rate
    direction: Direction
    transmission_time: SimTime
    propagation: SimTime
    controller: Optional[PortController] = None
    busy_until: SimTime = 0.0
    completions: Deque[SimTime] = field(default_factory=deque)
    cells_in: int = 0
    cells_out: int = 0
    handed_off: int = 0
    max_queue: int = 0
    interval_generation: int = 0
    sample_time: SimTime = 0.0
    sample_cells_out: int = 0

    @property
    def queued(self) -> int:
        return self.cells_in - self.cells_out

    @property
    def in_flight(self) -> int:
        return self.cells_out - self.handed_off

    def advance(self, now: SimTime):
        """now까지 전송이 끝난 셀을 대기열에서 제거"""
        while self.completions and self.completions[0] <= now:
            self.completions.popleft()
            self.cells_out += 1

    def enqueue(self, now: SimTime) -> SimTime:
        """셀 하나를 대기열에 넣고 다음 노드 도착 시각을 반환"""
        self.advance(now)
        start = max(now, self.busy_until)
        self.busy_until = start + self.transmission_time
        self.completions.append(self.busy_until)
        self.cells_in += 1
        self.max_queue = max(self.max_queue, self.queued)
        return self.busy_until + self.propagation


@dataclass(frozen=True)
class PortCounters:
    """실행 종료 시점의 포트 카운터"""
    name: str
    direction: Direction
    link_rate: Rate
    controlled: bool
    cells_in: int
    cells_out: int
    queued: int
    in_flight: int
    max_queue: int


@dataclass(frozen=True)
class FeedbackSample:
    """소스에 도착한 BRM 셀 하나의 경로 기록

    Attributes:
        vc: VC 이름
        time: 소스 도착 시각 (us)
        er_at_source: 소스가 받은 ER
        pcr: FRM이 처음 실어 보낸 ER
        computed: 역방향 경로의 각 제어 포트가 계산한 ER (지난 순서)
    """
    vc: str
    time: SimTime
    er_at_source: Rate
    pcr: Rate
    computed: Tuple[Rate, ...]

    @property
    def expected(self) -> Rate:
        return min((self.pcr,) + self.computed)


@dataclass
class RunResult:
    """한 번의 실행 결과

    Attributes:
        scenario: 실행한 시나리오
        switch_config: 스위치 설정
        traces: 수집한 트레이스
        ports: 포트 이름별 최종 카운터
        emitted: VC 이름별 송신 셀 수
        delivered: 목적지에 도착한 셀 수 (FRM 포함)
        turned_around: 목적지가 반환한 BRM 수
        brm_received: 소스가 받은 BRM 수
        feedback: 처음 몇 개 BRM의 경로 기록
        feedback_mismatches: ER이 경로 최소값과 다른 BRM 수
        events_processed: 처리한 이벤트 수
    """
    scenario: Scenario
    switch_config: SwitchConfig
    traces: TraceSet
    ports: Dict[str, PortCounters]
    emitted: Dict[str, int]
    delivered: int
    turned_around: int
    brm_received: int
    feedback: List[FeedbackSample] = field(default_factory=list)
    feedback_mismatches: int = 0
    events_processed: int = 0

    def conservation_report(self) -> Dict[str, int]:
        """순방향/역방향 셀 수지 (각 항목은 정수)"""
        forward = [p for p in self.ports.values() if p.direction is Direction.FORWARD]
        reverse = [p for p in self.ports.values() if p.direction is Direction.REVERSE]
        return {
            "injected": sum(self.emitted.values()),
            "delivered": self.delivered,
            "forward_queued": sum(p.queued for p in forward),
            "forward_in_flight": sum(p.in_flight for p in forward),
            "turned_around": self.turned_around,
            "brm_received": self.brm_received,
            "reverse_queued": sum(p.queued for p in reverse),
            "reverse_in_flight": sum(p.in_flight for p in reverse),
        }

    def conservation_holds(self) -> bool:
        report = self.conservation_report()
        forward_ok = report["injected"] == (
            report["delivered"] + report["forward_queued"] + report["forward_in_flight"])
        reverse_ok = report["turned_around"] == (
            report["brm_received"] + report["reverse_queued"] + report["reverse_in_flight"])
        ports_ok = all(p.cells_in == p.cells_out + p.queued for p in self.ports.values())
        return forward_ok and reverse_ok and ports_ok

    def utilization(self, port: str, start_us: SimTime, stop_us: SimTime) -> float:
        """구간 [start, stop]의 링크 이용률

        Args:
            port: 순방향 포트 이름 (링크 이름)
            start_us: 구간 시작 (us)
            stop_us: 구간 끝 (us)

        Returns:
            전송 셀 x 424 / (구간 길이 x 링크 속도)

        Raises:
            InvalidArgumentError: 길이 0 이하 구간, 실행 범위 밖 구간, 알 수 없는 포트
        """
        if not stop_us > start_us:
            raise InvalidArgumentError(f"utilization window must have positive length, got [{start_us}, {stop_us}]")
        if start_us < 0 or stop_us > self.traces.duration_us:
            raise InvalidArgumentError(
                f"window [{start_us}, {stop_us}] outside run [0, {self.traces.duration_us}]")
        series = self.traces.cells_out.get(port)
        if port not in self.ports or not series:
            raise InvalidArgumentError(f"no departures recorded for port '{port}'")
        times = np.array([t for t, _ in series])
        counts = np.array([c for _, c in series])
        sent = np.interp(stop_us, times, counts) - np.interp(start_us, times, counts)
        return float(sent * CELL_BITS / ((stop_us - start_us) * self.ports[port].link_rate))


@dataclass
class _Transit:
    cell: Cell
    port: Port
    hop: int
    trail: Tuple[Rate, ...] = ()


class SimulationEngine:
    """단일 스레드 이벤트 루프 (인스턴스 하나당 실행 한 번)"""

    def __init__(self, scenario: Scenario, switch_config: SwitchConfig,
                 nrm: Optional[int] = None,
                 sample_period_us: SimTime = DEFAULT_SAMPLE_PERIOD_US,
                 feedback_samples: int = DEFAULT_FEEDBACK_SAMPLES):
        """엔진 구성

        Args:
            scenario: 시나리오 (실행 전에 검증)
            switch_config: 모든 제어 포트에 적용할 설정
            nrm: 시나리오 Nrm 덮어쓰기
            sample_period_us: 트레이스 샘플 간격
            feedback_samples: 보관할 BRM 경로 기록 수

        Raises:
            ScenarioSemanticError: 잘못된 시나리오
            InvalidArgumentError: 0 이하의 샘플 간격
        """
        self.scenario = validate_scenario(scenario)
        self.switch_config = switch_config
        if not sample_period_us > 0:
            raise InvalidArgumentError(f"sample period must be > 0, got {sample_period_us}")
        self.sample_period_us = sample_period_us
        self.feedback_limit = feedback_samples
        self.nrm = nrm if nrm is not None else scenario.nrm

        self._heap: List[Tuple[SimTime, int, EventKind, Any]] = []
        self._seq = 0
        self._started = False
        self.traces = TraceSet()

        self._ports: Dict[str, Port] = {}
        self._controlled: List[Port] = []
        self._build_ports()

        self._forward: List[List[Port]] = []
        self._reverse: List[List[Port]] = []
        self._sources: List[AbrSource] = []
        self._destinations: Dict[str, Destination] = {}
        self._vc_destination: List[Destination] = []
        self._emit_generation: List[int] = []
        self._emitted: List[int] = []
        self._build_vcs()

        self._brm_received = 0
        self._turned_around = 0
        self._feedback: List[FeedbackSample] = []
        self._feedback_mismatches = 0
        self._events = 0

    # --- 구성 ---

    def _build_ports(self):
        scenario = self.scenario
        for link in scenario.links:
            tx = cell_transmission_time(link.rate)
            prop = propagation_delay(link.length_km)
            controller = None
            if scenario.is_controlled(link):
                vcs = [i for i, vc in enumerate(scenario.vcs) if link.name in vc.route]
                controller = create_port_controller(link.name, self.switch_config, link.rate, vcs)
            forward = Port(link.name, link.rate, Direction.FORWARD, tx, prop, controller)
            reverse = Port(link.name + REVERSE_SUFFIX, link.rate, Direction.REVERSE, tx, prop)
            self._ports[forward.name] = forward
            self._ports[reverse.name] = reverse
            if controller is not None:
                self._controlled.append(forward)

    def _build_vcs(self):
        scenario = self.scenario
        for index, vc in enumerate(scenario.vcs):
            self._forward.append([self._ports[name] for name in vc.route])
            self._reverse.append([self._ports[name + REVERSE_SUFFIX] for name in vc.route])
            windows = [(ms_to_us(start), ms_to_us(stop)) for start, stop in vc.windows]
            self._sources.append(AbrSource(
                vc=index, icr=vc.icr, pcr=scenario.pcr_of(index),
                app_cap=vc.app_cap, nrm=self.nrm, windows=windows))
            self._emit_generation.append(0)
            self._emitted.append(0)
        for node in scenario.nodes:
            if node.kind is NodeKind.DESTINATION:
                self._destinations[node.name] = Destination()
        for vc in scenario.vcs:
            self._vc_destination.append(self._destinations[scenario.link(vc.route[-1]).dst])

    # --- 실행 ---

    def run(self, duration_us: SimTime) -> RunResult:
        """duration_us까지 이벤트 처리

        Raises:
            ContractViolationError: 같은 엔진으로 두 번 실행
            InvalidArgumentError: 음수 실행 길이
        """
        if self._started:
            raise ContractViolationError("a SimulationEngine instance runs only once")
        if not duration_us >= 0:
            raise InvalidArgumentError(f"duration must be >= 0, got {duration_us}")
        self._started = True
        self.traces.duration_us = duration_us
        logger.info("run start: scenario=%s variant=%s duration=%.1f ms vcs=%d controlled ports=%d",
                    self.scenario.name, self.switch_config.variant.value, duration_us / 1000.0,
                    len(self._sources), len(self._controlled))

        self._schedule_initial(duration_us)
        handlers = {
            EventKind.SOURCE_EMIT: self._on_emit,
            EventKind.CELL_ARRIVAL: self._on_arrival,
            EventKind.INTERVAL_END: self._on_interval_timer,
            EventKind.TRACE_SAMPLE: self._on_sample,
            EventKind.WINDOW_EDGE: self._on_window_edge,
        }
        while self._heap and self._heap[0][0] <= duration_us:
            now, _, kind, data = heapq.heappop(self._heap)
            self._events += 1
            handlers[kind](now, data)

        result = self._finish(duration_us)
        logger.info("run end: scenario=%s events=%d injected=%d delivered=%d",
                    self.scenario.name, self._events, sum(self._emitted), result.delivered)
        return result

    def _push(self, time: SimTime, kind: EventKind, data: Any = None):
        heapq.heappush(self._heap, (time, self._seq, kind, data))
        self._seq += 1

    def _schedule_initial(self, duration_us: SimTime):
        for index, source in enumerate(self._sources):
            self._record_acr(index, 0.0)
            self._push(source.state.next_emit, EventKind.SOURCE_EMIT, (index, 0))
            for start, stop in source.state.active_windows:
                for edge in (start, stop):
                    if 0.0 < edge <= duration_us:
                        self._push(edge, EventKind.WINDOW_EDGE, index)
        for port in self._controlled:
            self._push(self.switch_config.interval_max_us, EventKind.INTERVAL_END, (port, 0))
        self._push(0.0, EventKind.TRACE_SAMPLE, 0)

    # --- 이벤트 처리 ---

    def _on_emit(self, now: SimTime, data: Tuple[VcId, int]):
        vc, generation = data
        if generation != self._emit_generation[vc]:
            return
        source = self._sources[vc]
        if not source.is_active(now):
            start = source.next_window_start(now)
            if start is not None:
                source.state.next_emit = start
                self._push(start, EventKind.SOURCE_EMIT, (vc, generation))
            return
        cell = source.emit_next(now)
        self._emitted[vc] += 1
        self._send(self._forward[vc][0], cell, 0, (), now)
        self._push(source.state.next_emit, EventKind.SOURCE_EMIT, (vc, generation))

    def _on_arrival(self, now: SimTime, transit: _Transit):
        transit.port.handed_off += 1
        if transit.cell.kind is CellKind.BACKWARD_RM:
            self._arrive_reverse(now, transit)
        else:
            self._arrive_forward(now, transit)

    def _arrive_forward(self, now: SimTime, transit: _Transit):
        cell = transit.cell
        route = self._forward[cell.vc]
        hop = transit.hop + 1
        if hop == len(route):
            destination = self._vc_destination[cell.vc]
            if cell.kind is CellKind.DATA:
                destination.absorb(cell)
            else:
                brm = destination.turn_around(cell)
                self._turned_around += 1
                self._send(self._reverse[cell.vc][transit.hop], brm, transit.hop, (), now)
            return
        port = route[hop]
        if port.controller is not None and port.controller.on_data_or_frm_cell(cell, now):
            self._close_interval(port, now)
        self._send(port, cell, hop, (), now)

    def _arrive_reverse(self, now: SimTime, transit: _Transit):
        cell = transit.cell
        hop = transit.hop
        if hop == 0:
            self._deliver_feedback(now, cell, transit.trail)
            return
        trail = transit.trail
        controller = self._forward[cell.vc][hop].controller
        if controller is not None:
            decision, payload = controller.on_brm_cell(cell.rm, cell.vc)
            cell = replace(cell, rm=payload)
            trail = trail + (decision.computed,)
        self._send(self._reverse[cell.vc][hop - 1], cell, hop - 1, trail, now)

    def _deliver_feedback(self, now: SimTime, brm: Cell, trail: Tuple[Rate, ...]):
        vc = brm.vc
        source = self._sources[vc]
        self._brm_received += 1
        sample = FeedbackSample(self.scenario.vcs[vc].name, now, brm.rm.er, source.state.pcr, trail)
        if sample.er_at_source != sample.expected:
            self._feedback_mismatches += 1
        if len(self._feedback) < self.feedback_limit:
            self._feedback.append(sample)

        if source.on_brm(brm.rm):
            self._record_acr(vc, now)
            self._emit_generation[vc] += 1
            next_emit = source.retime(now)
            self._push(next_emit, EventKind.SOURCE_EMIT, (vc, self._emit_generation[vc]))

    def _on_interval_timer(self, now: SimTime, data: Tuple[Port, int]):
        port, generation = data
        if generation == port.interval_generation:
            self._close_interval(port, now)

    def _close_interval(self, port: Port, now: SimTime):
        port.controller.end_interval(now)
        port.interval_generation += 1
        self._push(now + self.switch_config.interval_max_us, EventKind.INTERVAL_END,
                   (port, port.interval_generation))
        port.advance(now)
        self.traces.record_port(port.name, now, port.queued, port.cells_out,
                                neff=port.controller.n_eff,
                                fair_share=port.controller.fair_share)

    def _on_sample(self, now: SimTime, index: int):
        for port in self._ports.values():
            if port.direction is Direction.FORWARD:
                self._sample_port(port, now)
        following = (index + 1) * self.sample_period_us
        if following <= self.traces.duration_us:
            self._push(following, EventKind.TRACE_SAMPLE, index + 1)

    def _sample_port(self, port: Port, now: SimTime):
        port.advance(now)
        util = None
        if now > port.sample_time:
            util = (port.cells_out - port.sample_cells_out) * CELL_BITS / (
                (now - port.sample_time) * port.link_rate)
        port.sample_time = now
        port.sample_cells_out = port.cells_out
        controller = port.controller
        self.traces.record_port(
            port.name, now, port.queued, port.cells_out, util=util,
            neff=controller.n_eff if controller is not None else None,
            fair_share=controller.fair_share if controller is not None else None)

    def _on_window_edge(self, now: SimTime, vc: VcId):
        logger.debug("window edge vc=%s t=%.1f active=%s",
                     self.scenario.vcs[vc].name, now, self._sources[vc].is_active(now))
        self._record_acr(vc, now)

    # --- 도우미 ---

    def _send(self, port: Port, cell: Cell, hop: int, trail: Tuple[Rate, ...], now: SimTime):
        arrival = port.enqueue(now)
        self._push(arrival, EventKind.CELL_ARRIVAL, _Transit(cell, port, hop, trail))

    def _record_acr(self, vc: VcId, now: SimTime):
        source = self._sources[vc]
        self.traces.record_acr(self.scenario.vcs[vc].name, now, source.acr, source.sending_rate(now))

    def _finish(self, duration_us: SimTime) -> RunResult:
        for index in range(len(self._sources)):
            self._record_acr(index, duration_us)
        counters = {}
        for port in self._ports.values():
            port.advance(duration_us)
            counters[port.name] = PortCounters(
                name=port.name,
                direction=port.direction,
                link_rate=port.link_rate,
                controlled=port.controller is not None,
                cells_in=port.cells_in,
                cells_out=port.cells_out,
                queued=port.queued,
                in_flight=port.in_flight,
                max_queue=port.max_queue,
            )
        return RunResult(
            scenario=self.scenario,
            switch_config=self.switch_config,
            traces=self.traces,
            ports=counters,
            emitted={vc.name: count for vc, count in zip(self.scenario.vcs, self._emitted)},
            delivered=sum(d.delivered for d in self._destinations.values()),
            turned_around=self._turned_around,
            brm_received=self._brm_received,
            feedback=self._feedback,
            feedback_mismatches=self._feedback_mismatches,
            events_processed=self._events,
        )

    # --- 조회 ---

    def controller(self, port: str) -> Optional[PortController]:
        """포트의 ABR 제어기 (진단용)"""
        return self._ports[port].controller


def simulate(scenario: Scenario, switch_config: SwitchConfig, duration_us: SimTime,
             nrm: Optional[int] = None,
             sample_period_us: SimTime = DEFAULT_SAMPLE_PERIOD_US) -> RunResult:
    """새 엔진으로 한 번 실행"""
    engine = SimulationEngine(scenario, switch_config, nrm=nrm, sample_period_us=sample_period_us)
    return engine.run(duration_us)


def run(scenario: Scenario, switch_config: SwitchConfig, duration_us: SimTime) -> TraceSet:
    """트레이스만 필요한 경우의 단축 함수"""
    return simulate(scenario, switch_config, duration_us).traces


def run_sweep(scenario: Scenario, configs: Sequence[SwitchConfig], duration_us: SimTime,
              nrm: Optional[int] = None,
              sample_period_us: SimTime = DEFAULT_SAMPLE_PERIOD_US) -> List[RunResult]:
    """설정별로 독립된 엔진을 만들어 차례로 실행 (공유 상태 없음)"""
    return [simulate(scenario, cfg, duration_us, nrm=nrm, sample_period_us=sample_period_us)
            for cfg in configs]


def network_model(scenario: Scenario, switch_config: SwitchConfig) -> Tuple[NetworkModel, Dict[VcId, Rate]]:
    """시나리오에서 max-min 오라클 입력 생성

    제어 링크는 ABR 용량(또는 capacity_override), 제어하지 않는 링크는
    링크 속도를 용량으로 사용한다.

    Returns:
        (NetworkModel, VC별 수요 상한)
    """
    validate_scenario(scenario)
    links = []
    for link in scenario.links:
        if not scenario.is_controlled(link):
            capacity = link.rate
        elif switch_config.capacity_override is not None:
            capacity = switch_config.capacity_override
        else:
            capacity = switch_config.target_utilization * link.rate
        links.append((link.name, capacity))
    routes = {index: tuple(vc.route) for index, vc in enumerate(scenario.vcs)}
    caps = {index: min(vc.app_cap, scenario.pcr_of(index)) for index, vc in enumerate(scenario.vcs)}
    return NetworkModel(links=tuple(links), routes=routes), caps
