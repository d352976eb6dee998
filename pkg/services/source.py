"""
---
title: "ABR Source and Destination Endpoints"
description: "Endpoint behavior of an ABR virtual connection: paced cell emission with an in-rate forward RM cell every Nrm cells, ACR adoption from backward RM cells (RIF = 1), and zero-delay destination turnaround."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-23"
last_modified: "2026-10-11"
version: "1.0.0"
module_type: "Service Layer"
dependencies: ["dataclasses", "typing", "core.errors", "core.models", "core.units"]
key_classes: ["SourceState", "AbrSource", "Destination"]
key_functions: ["emit_next", "on_brm", "retime", "turn_around", "is_active", "sending_rate"]
design_patterns: ["State Pattern"]
solid_principles: ["SRP - Single Responsibility Principle"]
features: ["Cell Pacing", "Nrm Cadence", "Immediate Rate Adoption", "On/Off Windows"]
tags: ["source", "destination", "abr", "services"]
---

services/source.py - ABR Source and Destination Endpoints

Source rules kept by this simulator:
- Inside an active window the source sends at min(ACR, app_cap), one cell
  every 424 / rate microseconds.
- Every Nrm-th cell is a forward RM cell carrying CCR = ACR (not the
  application-limited rate) and ER = PCR.
- On a backward RM cell: ACR = min(ER, PCR). With RIF = 1 increases are not
  rate-limited and decreases are immediate. CI/NI are never set by the
  switches and are ignored.

Out-of-rate RM cells, TBE and use-it-or-lose-it are not modeled.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from core.errors import ContractViolationError
from core.models import Cell, CellKind, Rate, RmPayload, SimTime, UNBOUNDED, VcId
from core.units import CELL_BITS


@dataclass
class SourceState:
    """VC 소스 상태

    Attributes:
        vc: VC 식별자
        acr: 허용 셀 속도 (Mbps)
        icr: 초기 셀 속도
        pcr: 최대 셀 속도
        app_cap: 애플리케이션 상한 (UNBOUNDED 가능)
        nrm: FRM 한 개당 셀 수
        cells_since_rm: 마지막 FRM 이후 보낸 셀 수
        active_windows: 활성 구간 (시작 us, 종료 us)
        next_emit: 다음 송신 예정 시각 (us)
        seq: 마지막 셀 일련번호
        rif: 속도 증가 계수 (1로 고정)
        last_emit: 마지막 송신 시각 (us)
    """
    vc: VcId
    acr: Rate
    icr: Rate
    pcr: Rate
    app_cap: Rate = UNBOUNDED
    nrm: int = 32
    cells_since_rm: int = 0
    active_windows: List[Tuple[SimTime, SimTime]] = field(default_factory=list)
    next_emit: SimTime = 0.0
    seq: int = -1
    rif: float = 1.0
    last_emit: Optional[SimTime] = None


class AbrSource:
    """ABR 소스 엔드포인트"""

    def __init__(self, vc: VcId, icr: Rate, pcr: Rate, app_cap: Rate = UNBOUNDED,
                 nrm: int = 32, windows: Optional[List[Tuple[SimTime, SimTime]]] = None):
        """소스 초기화

        Args:
            vc: VC 식별자
            icr: 초기 셀 속도 (ACR 시작값)
            pcr: 최대 셀 속도
            app_cap: 애플리케이션 상한
            nrm: FRM 간격 (셀 수)
            windows: 활성 구간 (us), None이면 항상 활성
        """
        windows = sorted(windows) if windows is not None else [(0.0, float("inf"))]
        self.state = SourceState(
            vc=vc,
            acr=min(icr, pcr),
            icr=icr,
            pcr=pcr,
            app_cap=app_cap,
            nrm=nrm,
            active_windows=list(windows),
            next_emit=windows[0][0] if windows else 0.0,
        )

    @property
    def vc(self) -> VcId:
        return self.state.vc

    @property
    def acr(self) -> Rate:
        return self.state.acr

    def sending_rate(self, now: SimTime) -> Rate:
        """현재 실제 송신 속도 (비활성이면 0)"""
        if not self.is_active(now):
            return 0.0
        return min(self.state.acr, self.state.app_cap)

    def is_active(self, now: SimTime) -> bool:
        return any(start <= now < stop for start, stop in self.state.active_windows)

    def emit_next(self, now: SimTime) -> Cell:
        """다음 셀 송신

        Args:
            now: 현재 시각 (us)

        Returns:
            데이터 셀 또는 nrm번째마다 FRM 셀

        Raises:
            ContractViolationError: 활성 구간 밖이거나 예정 시각 이전 호출
        """
        state = self.state
        if not self.is_active(now):
            raise ContractViolationError(f"vc {state.vc} emitting outside an active window at {now}")
        if now < state.next_emit:
            raise ContractViolationError(
                f"vc {state.vc} emitting at {now} before next_emit {state.next_emit}")

        state.seq += 1
        if state.cells_since_rm >= state.nrm - 1:
            payload = RmPayload(ccr=state.acr, er=state.pcr)
            cell = Cell(state.vc, CellKind.FORWARD_RM, now, state.seq, payload)
            state.cells_since_rm = 0
        else:
            cell = Cell(state.vc, CellKind.DATA, now, state.seq)
            state.cells_since_rm += 1

        state.last_emit = now
        state.next_emit = now + CELL_BITS / min(state.acr, state.app_cap)
        return cell

    def on_brm(self, payload: RmPayload) -> bool:
        """BRM 수신 시 ACR 갱신 (RIF = 1)

        Returns:
            ACR이 바뀌었으면 True
        """
        state = self.state
        new_acr = min(payload.er, state.pcr)
        changed = new_acr != state.acr
        state.acr = new_acr
        return changed

    def retime(self, now: SimTime) -> SimTime:
        """ACR 변경 후 다음 송신 시각 재계산

        마지막 송신 시각에 새 간격을 더한 값. 아직 송신 전이면 그대로 둔다.

        Returns:
            다음 송신 예정 시각 (us)
        """
        state = self.state
        if state.last_emit is not None:
            gap = CELL_BITS / min(state.acr, state.app_cap)
            state.next_emit = max(now, state.last_emit + gap)
        return state.next_emit

    def next_window_start(self, now: SimTime) -> Optional[SimTime]:
        """now 이후 처음 시작하는 활성 구간의 시작 시각 (없으면 None)"""
        for start, _ in self.state.active_windows:
            if start > now:
                return start
        return None


class Destination:
    """목적지 엔드포인트: 데이터 흡수, FRM 즉시 반환"""

    def __init__(self):
        self.delivered = 0

    def absorb(self, cell: Cell):
        self.delivered += 1

    def turn_around(self, frm: Cell) -> Cell:
        """FRM을 같은 페이로드의 BRM으로 변환

        Raises:
            ContractViolationError: FRM이 아닌 셀
        """
        if frm.kind is not CellKind.FORWARD_RM:
            raise ContractViolationError(f"cannot turn around a {frm.kind.value} cell")
        self.delivered += 1
        return Cell(frm.vc, CellKind.BACKWARD_RM, frm.emitted_at, frm.seq, frm.rm)
