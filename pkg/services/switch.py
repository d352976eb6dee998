"""
---
title: "ABR Switch Port Rate Allocation"
description: "Per-output-port explicit-rate controllers. One RateAllocator implementation per variant: erica-basic, erica-fair (MaxAllocPrevious fairness step), neff-ccr and neff-measured (effective number of active VCs with CCR taken from RM cells or measured per interval)."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-23"
last_modified: "2026-10-17"
version: "1.0.0"
module_type: "Service Layer"
dependencies: ["logging", "dataclasses", "typing", "core.config", "core.errors", "core.interfaces", "core.models", "core.units", "services.maxmin"]
key_classes: ["PortControl", "PortController", "EricaBasicController", "EricaFairController", "NeffCcrController", "NeffMeasuredController"]
key_functions: ["on_data_or_frm_cell", "end_interval", "compute_er", "on_brm_cell", "create_port_controller"]
design_patterns: ["Strategy Pattern", "Template Method Pattern", "Factory Method Pattern"]
solid_principles: ["OCP - Open/Closed Principle", "LSP - Liskov Substitution Principle"]
features: ["Measurement Intervals", "Load Factor", "FairShare", "VCShare", "MaxAllocPrevious", "Effective N", "FirstCellSeen Guard", "Exponential Averaging"]
tags: ["erica", "explicit-rate", "switch", "abr", "services"]
---

services/switch.py - ABR Switch Port Rate Allocation

Key Responsibilities:
- Count forward cells per VC and close measurement intervals
- Derive ABR capacity, load factor and FairShare at every interval end
- Track activity levels and the effective number of active VCs (neff-*)
- Compute the explicit rate written into each backward RM cell

Every ABR-controlled output port owns one controller. The engine drives it:

1. on_data_or_frm_cell() for every cell entering the port in the forward
   direction. Returns True once interval_cells cells have arrived.
2. end_interval() when the interval is full or interval_max has elapsed.
3. on_brm_cell() for every backward RM cell of a VC that leaves through
   this port in the forward direction.

End of interval (all variants):
    ABR capacity = target_utilization x link rate - VBR - CBR
                   (or capacity_override when configured)
    rho          = max(rho_floor, input rate / ABR capacity)

FairShare per variant:
    erica-*  : ABR capacity / number of VCs that sent a cell this interval
    neff-*   : if VCsSeen >= N_last: N_last = max(1, N_current)
               N_current = 0; FairShare = ABR capacity / N_last
               for each VC: Activity = min(1, CCR / FairShare), N_current += Activity

Explicit rate for a backward RM cell:
    ER = min(max(FairShare, CCR / rho [, MaxAllocPrevious]), ABR capacity)
    ER_out = min(ER, ER in the cell)

erica-fair adds MaxAllocPrevious when rho <= 1 + delta. Each interval
remembers the highest basic allocation max(FairShare, VCShare) it handed
out, and that value becomes MaxAllocPrevious of the next interval. The
remembered value never includes MaxAllocPrevious itself. Tracking is per
port.

neff-ccr takes CCR from forward RM cells, so a source limited below its ACR
still looks fully active. neff-measured ignores the CCR field and measures
each VC's rate as cells x 424 / interval length.

Usage Examples:
controller = create_port_controller("SW2->D", SwitchConfig(), 155.52, vcs=[0, 1, 2])
if controller.on_data_or_frm_cell(cell, now):
    controller.end_interval(now)
decision, payload = controller.on_brm_cell(brm.rm, brm.vc)
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple, Type

from core.config import SwitchConfig, Variant
from core.errors import ProtocolError
from core.interfaces import RateAllocator
from core.models import Cell, CellKind, FeedbackDecision, Rate, RmPayload, SimTime, VcId
from core.units import rate_from_cells
from services.maxmin import activity_level

logger = logging.getLogger(__name__)


@dataclass
class PortControl:
    """출력 포트별 ABR 제어 상태

    Attributes:
        abr_capacity: ABR 용량 (Mbps)
        input_cell_count: 현재 구간 입력 셀 수
        per_vc_cell_count: 현재 구간 VC별 셀 수
        rho: 부하율
        fair_share: FairShare (Mbps)
        n_last: 직전 구간 유효 활성 VC 수 (항상 1 이상)
        n_current: 누적 중인 유효 활성 VC 수
        activity: VC별 활성도
        ccr: VC별 CCR (RM 셀 값 또는 측정값)
        first_cell_seen: VC별 첫 셀 수신 여부
        vcs_seen: 첫 셀을 보낸 VC 수
        max_alloc_previous: 직전 구간 최대 할당
        max_alloc_current: 현재 구간 최대 할당
        vbr_usage: VBR 사용량 (항상 0)
        cbr_usage: CBR 사용량 (항상 0)
        interval_start: 현재 구간 시작 시각 (us)
    """
    abr_capacity: Rate
    fair_share: Rate
    n_last: float
    interval_start: SimTime = 0.0
    input_cell_count: int = 0
    per_vc_cell_count: Dict[VcId, int] = field(default_factory=dict)
    rho: float = 1.0
    n_current: float = 0.0
    activity: Dict[VcId, float] = field(default_factory=dict)
    ccr: Dict[VcId, Rate] = field(default_factory=dict)
    first_cell_seen: Dict[VcId, bool] = field(default_factory=dict)
    vcs_seen: int = 0
    max_alloc_previous: Rate = 0.0
    max_alloc_current: Rate = 0.0
    vbr_usage: Rate = 0.0
    cbr_usage: Rate = 0.0
    input_rate: Optional[Rate] = None
    # 진단용
    intervals_completed: int = 0
    last_interval_length: float = 0.0
    last_er: Dict[VcId, Rate] = field(default_factory=dict)


class PortController(RateAllocator):
    """ERICA 계열 포트 제어기 공통 구현 (Template Method)

    변형별 차이는 _record_ccr, _refresh_fair_share, _fairness_step,
    _roll_allocation_memory 훅에서만 발생.
    """

    variant: Variant = Variant.ERICA_BASIC

    def __init__(self, name: str, config: SwitchConfig, link_rate: Rate,
                 vcs: Sequence[VcId], start: SimTime = 0.0):
        """포트 제어기 초기화

        Args:
            name: 포트 이름 (로그/트레이스 키)
            config: 스위치 설정
            link_rate: 출력 링크 속도 (Mbps)
            vcs: 이 포트를 지나도록 설정된 VC 목록
            start: 첫 측정 구간 시작 시각 (us)
        """
        self.name = name
        self.config = config
        self.link_rate = link_rate
        capacity = self._abr_capacity(vbr=0.0, cbr=0.0)
        n_setup = max(1, len(vcs))
        self.state = PortControl(
            abr_capacity=capacity,
            fair_share=capacity / n_setup,
            n_last=float(n_setup),
            n_current=float(n_setup),
            interval_start=start,
            per_vc_cell_count={vc: 0 for vc in vcs},
            activity={vc: 0.0 for vc in vcs},
            ccr={vc: 0.0 for vc in vcs},
            first_cell_seen={vc: False for vc in vcs},
            max_alloc_current=capacity / n_setup,
        )

    # --- RateAllocator ---

    def on_data_or_frm_cell(self, cell: Cell, now: SimTime) -> bool:
        state = self.state
        self._require_vc(cell.vc)
        state.input_cell_count += 1
        state.per_vc_cell_count[cell.vc] += 1
        if not state.first_cell_seen[cell.vc]:
            state.first_cell_seen[cell.vc] = True
            state.vcs_seen += 1
        if cell.kind is CellKind.FORWARD_RM:
            self._record_ccr(cell.vc, cell.rm.ccr)
        return state.input_cell_count >= self.config.interval_cells

    def end_interval(self, now: SimTime) -> None:
        """측정 구간 종료: 용량, 부하율, FairShare 갱신 후 카운터 초기화"""
        state = self.state
        state.abr_capacity = self._abr_capacity(state.vbr_usage, state.cbr_usage)
        elapsed = now - state.interval_start
        if elapsed <= 0:
            # 길이 0 구간은 무시
            return

        sample = rate_from_cells(state.input_cell_count, elapsed)
        state.input_rate = self._smooth(state.input_rate, sample)
        state.rho = max(self.config.rho_floor, state.input_rate / state.abr_capacity)

        self._refresh_fair_share(elapsed)
        self._roll_allocation_memory()

        state.input_cell_count = 0
        for vc in state.per_vc_cell_count:
            state.per_vc_cell_count[vc] = 0
        state.interval_start = now
        state.intervals_completed += 1
        state.last_interval_length = elapsed
        logger.debug("%s interval end t=%.1f rho=%.4f F=%.4f N=%.4f",
                     self.name, now, state.rho, state.fair_share, state.n_last)

    def compute_er(self, vc: VcId) -> Rate:
        state = self.state
        self._require_vc(vc)
        vc_share = state.ccr[vc] / state.rho
        base = self._fairness_step(max(state.fair_share, vc_share))
        er = min(base, state.abr_capacity)
        state.last_er[vc] = er
        return er

    def on_brm_cell(self, payload: RmPayload, vc: VcId) -> Tuple[FeedbackDecision, RmPayload]:
        computed = self.compute_er(vc)
        er_out = min(payload.er, computed)
        return FeedbackDecision(er_out=er_out, computed=computed), payload.with_er(er_out)

    # --- 조회 ---

    @property
    def n_eff(self) -> float:
        """트레이스에 기록할 활성 VC 수 (FairShare 분모)"""
        return self.state.n_last

    @property
    def fair_share(self) -> Rate:
        return self.state.fair_share

    # --- 변형별 훅 ---

    def _record_ccr(self, vc: VcId, ccr: Rate):
        """FRM 셀의 CCR 필드 기록"""
        self.state.ccr[vc] = ccr

    def _refresh_fair_share(self, elapsed: float):
        """ERICA: 구간 내 셀을 하나라도 보낸 VC 수로 FairShare 계산"""
        state = self.state
        active = sum(1 for count in state.per_vc_cell_count.values() if count > 0)
        state.n_last = float(max(1, active))
        state.n_current = float(active)
        state.fair_share = state.abr_capacity / state.n_last

    def _fairness_step(self, base: Rate) -> Rate:
        return base

    def _roll_allocation_memory(self):
        pass

    # --- 내부 도우미 ---

    def _abr_capacity(self, vbr: Rate, cbr: Rate) -> Rate:
        if self.config.capacity_override is not None:
            return self.config.capacity_override
        return self.config.target_utilization * self.link_rate - vbr - cbr

    def _smooth(self, previous: Optional[float], sample: float) -> float:
        alpha = self.config.rate_smoothing
        if alpha is None or previous is None:
            return sample
        return alpha * sample + (1.0 - alpha) * previous

    def _require_vc(self, vc: VcId):
        if vc not in self.state.per_vc_cell_count:
            raise ProtocolError(f"port {self.name} has no vc {vc}")


class EricaBasicController(PortController):
    """기본 ERICA"""
    variant = Variant.ERICA_BASIC


class EricaFairController(PortController):
    """ERICA + MaxAllocPrevious 공정성 단계"""
    variant = Variant.ERICA_FAIR

    def _fairness_step(self, base: Rate) -> Rate:
        state = self.state
        # 기록은 MaxAllocPrevious 적용 전 기본 할당만
        state.max_alloc_current = max(state.max_alloc_current, base)
        if state.rho <= 1.0 + self.config.delta:
            return max(base, state.max_alloc_previous)
        return base

    def _roll_allocation_memory(self):
        state = self.state
        state.max_alloc_previous = state.max_alloc_current
        state.max_alloc_current = state.fair_share


class NeffCcrController(PortController):
    """유효 활성 VC 수 방식, CCR은 FRM 셀 값 사용"""
    variant = Variant.NEFF_CCR

    def _refresh_fair_share(self, elapsed: float):
        state = self.state
        self._update_rates(elapsed)
        if not self.config.first_cell_guard or state.vcs_seen >= state.n_last:
            state.n_last = max(1.0, state.n_current)
        state.n_current = 0.0
        state.fair_share = state.abr_capacity / state.n_last
        for vc in state.activity:
            level = activity_level(state.ccr[vc], state.fair_share)
            state.activity[vc] = level
            state.n_current += level

    def _update_rates(self, elapsed: float):
        pass


class NeffMeasuredController(NeffCcrController):
    """유효 활성 VC 수 방식, VC 속도를 구간마다 측정"""
    variant = Variant.NEFF_MEASURED

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._measured = set()

    def _record_ccr(self, vc: VcId, ccr: Rate):
        # RM 셀의 CCR 필드는 사용하지 않음
        pass

    def _update_rates(self, elapsed: float):
        state = self.state
        for vc, count in state.per_vc_cell_count.items():
            sample = rate_from_cells(count, elapsed)
            previous = state.ccr[vc] if vc in self._measured else None
            state.ccr[vc] = self._smooth(previous, sample)
            self._measured.add(vc)


_CONTROLLERS: Dict[Variant, Type[PortController]] = {
    Variant.ERICA_BASIC: EricaBasicController,
    Variant.ERICA_FAIR: EricaFairController,
    Variant.NEFF_CCR: NeffCcrController,
    Variant.NEFF_MEASURED: NeffMeasuredController,
}


def create_port_controller(name: str, config: SwitchConfig, link_rate: Rate,
                           vcs: Sequence[VcId], start: SimTime = 0.0) -> PortController:
    """설정된 변형에 맞는 포트 제어기 생성 (팩토리 메서드)"""
    return _CONTROLLERS[config.variant](name, config, link_rate, vcs, start)
