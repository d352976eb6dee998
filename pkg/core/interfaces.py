"""
---
title: "Abstract Interfaces and Protocols"
description: "Contracts between the simulation engine and the pluggable parts it drives: the per-port rate allocator (one implementation per switch variant), the scenario codec and the trace exporter."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-21"
last_modified: "2026-10-09"
version: "1.0.0"
module_type: "Core Domain Layer"
dependencies: ["abc", "typing", "core.models"]
key_classes: ["RateAllocator"]
key_protocols: ["ScenarioCodec", "TraceExporter"]
key_functions: ["on_data_or_frm_cell", "end_interval", "compute_er", "on_brm_cell", "parse", "serialize", "export"]
design_patterns: ["Strategy Pattern", "Protocol Pattern"]
solid_principles: ["ISP - Interface Segregation Principle", "DIP - Dependency Inversion Principle"]
features: ["Variant Substitution", "Duck Typing"]
tags: ["interfaces", "protocols", "abstractions", "core"]
---

core/interfaces.py - Abstract Interfaces and Protocols

RateAllocator (ABC) is what the engine attaches to every ABR-controlled
output port. The four switch variants in services/switch.py subclass it, so
the engine never branches on the variant name.

ScenarioCodec and TraceExporter are Protocols: the CLI only needs objects
with the right methods, which keeps test doubles trivial to write.
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, Protocol, Tuple

from core.models import Cell, FeedbackDecision, Rate, RmPayload, Scenario, SimTime, TraceSet, VcId


class RateAllocator(ABC):
    """출력 포트 단위 명시적 속도 할당기 (Strategy)

    엔진이 포워드 셀 도착, 측정 구간 종료, BRM 통과 시 호출.
    """

    @abstractmethod
    def on_data_or_frm_cell(self, cell: Cell, now: SimTime) -> bool:
        """포워드 방향 셀 수신 처리

        Returns:
            셀 수 조건으로 측정 구간이 끝나야 하면 True
        """

    @abstractmethod
    def end_interval(self, now: SimTime) -> None:
        """측정 구간 종료 처리"""

    @abstractmethod
    def compute_er(self, vc: VcId) -> Rate:
        """VC에 줄 명시적 속도 계산"""

    @abstractmethod
    def on_brm_cell(self, payload: RmPayload, vc: VcId) -> Tuple[FeedbackDecision, RmPayload]:
        """역방향 RM 셀 ER 갱신

        Returns:
            (결정 내용, ER을 낮춘 새 페이로드)
        """


class ScenarioCodec(Protocol):
    """시나리오 텍스트 변환 프로토콜"""

    def parse(self, text: str) -> Scenario:
        ...

    def serialize(self, scenario: Scenario) -> str:
        ...


class TraceExporter(Protocol):
    """트레이스 파일 출력 프로토콜"""

    def export(self, traces: TraceSet, out_dir: Path) -> Dict[str, Path]:
        ...
