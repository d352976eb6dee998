"""
---
title: "Simulator Configuration Management"
description: "Type-safe settings for the switch algorithms and for a simulation run. Dataclasses with validated defaults; the entry point overlays environment variables and CLI flags on top of them."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-21"
last_modified: "2026-10-14"
version: "1.0.0"
module_type: "Core Domain Layer"
dependencies: ["dataclasses", "enum", "typing", "core.errors", "core.units"]
key_classes: ["Variant", "SwitchConfig", "SimulationConfig"]
key_functions: ["validate", "from_name", "with_overrides", "interval_max_us", "duration_us"]
design_patterns: ["Data Class Pattern", "Configuration Pattern"]
solid_principles: ["SRP - Single Responsibility Principle"]
features: ["Type Safety", "Validation", "Default Values", "Environment Variables"]
tags: ["configuration", "settings", "dataclass", "core"]
---

core/config.py - Simulator Configuration Management

Two dataclasses carry every tunable of a run:

SwitchConfig
- variant: erica-basic | erica-fair | neff-ccr | neff-measured
- target_utilization (0.9), delta (0.1), interval_cells (100),
  interval_max_ms (1.0), rho_floor (0.01)
- capacity_override: fixed ABR capacity in Mbps for every controlled port
- first_cell_guard: keep the FirstCellSeen/VCsSeen gate on N_last updates
- rate_smoothing: exponential averaging weight for measured rates and the
  load factor, None for raw per-interval estimates

SimulationConfig
- duration_ms (400), sample_period_ms (0.1), out_dir, log_level, nrm
  override and the nested SwitchConfig

Environment overrides are read in main.load_config():
ABRSIM_VARIANT, ABRSIM_TARGET_UTIL, ABRSIM_DELTA, ABRSIM_INTERVAL_CELLS,
ABRSIM_INTERVAL_MAX_MS, ABRSIM_DURATION_MS, ABRSIM_OUT, ABRSIM_LOG_LEVEL.

Usage Examples:
cfg = SwitchConfig(variant=Variant.NEFF_MEASURED)
cfg.validate()
short = cfg.with_overrides(interval_cells=20, interval_max_ms=0.2)
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from core.errors import ConfigurationError
from core.units import ms_to_us


class Variant(Enum):
    """스위치 알고리즘 변형"""
    ERICA_BASIC = "erica-basic"
    ERICA_FAIR = "erica-fair"
    NEFF_CCR = "neff-ccr"
    NEFF_MEASURED = "neff-measured"

    @classmethod
    def from_name(cls, name: str) -> "Variant":
        """이름으로 변형 조회

        Raises:
            ConfigurationError: 알 수 없는 이름
        """
        for variant in cls:
            if variant.value == name:
                return variant
        known = ", ".join(v.value for v in cls)
        raise ConfigurationError(f"unknown variant '{name}' (known: {known})")

    @property
    def uses_effective_n(self) -> bool:
        return self in (Variant.NEFF_CCR, Variant.NEFF_MEASURED)


@dataclass(frozen=True)
class SwitchConfig:
    """스위치 포트 제어 설정

    Attributes:
        variant: 알고리즘 변형
        target_utilization: 목표 이용률 (0, 1]
        delta: MaxAllocPrevious 적용 대역 폭
        interval_cells: 측정 구간 셀 수
        interval_max_ms: 측정 구간 최대 길이 (ms)
        rho_floor: 부하율 하한
        capacity_override: ABR 용량 고정값 (Mbps)
        first_cell_guard: FirstCellSeen/VCsSeen 초기화 가드 사용 여부
        rate_smoothing: 지수 평균 가중치 (None이면 사용 안 함)
    """
    variant: Variant = Variant.NEFF_MEASURED
    target_utilization: float = 0.9
    delta: float = 0.1
    interval_cells: int = 100
    interval_max_ms: float = 1.0
    rho_floor: float = 0.01
    capacity_override: Optional[float] = None
    first_cell_guard: bool = True
    rate_smoothing: Optional[float] = None

    def __post_init__(self):
        self.validate()

    def validate(self):
        """설정 값 검증

        Raises:
            ConfigurationError: 범위를 벗어난 값
        """
        if not 0 < self.target_utilization <= 1:
            raise ConfigurationError(
                f"target_utilization must be in (0, 1], got {self.target_utilization}")
        if self.delta < 0:
            raise ConfigurationError(f"delta must be >= 0, got {self.delta}")
        if self.interval_cells < 1:
            raise ConfigurationError(f"interval_cells must be >= 1, got {self.interval_cells}")
        if not self.interval_max_ms > 0:
            raise ConfigurationError(f"interval_max_ms must be > 0, got {self.interval_max_ms}")
        if not self.rho_floor > 0:
            raise ConfigurationError(f"rho_floor must be > 0, got {self.rho_floor}")
        if self.capacity_override is not None and not self.capacity_override > 0:
            raise ConfigurationError(
                f"capacity_override must be > 0, got {self.capacity_override}")
        if self.rate_smoothing is not None and not 0 < self.rate_smoothing <= 1:
            raise ConfigurationError(
                f"rate_smoothing must be in (0, 1], got {self.rate_smoothing}")

    @property
    def interval_max_us(self) -> float:
        return ms_to_us(self.interval_max_ms)

    def with_overrides(self, **changes) -> "SwitchConfig":
        """None이 아닌 값만 반영한 복사본"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


@dataclass(frozen=True)
class SimulationConfig:
    """실행 단위 설정

    Attributes:
        switch: 스위치 설정
        duration_ms: 시뮬레이션 길이 (ms)
        sample_period_ms: 트레이스 샘플 간격 (ms)
        nrm: 시나리오 Nrm 덮어쓰기 (None이면 시나리오 값)
        out_dir: 결과 디렉토리
        log_level: 로깅 레벨 이름
    """
    switch: SwitchConfig = field(default_factory=SwitchConfig)
    duration_ms: float = 400.0
    sample_period_ms: float = 0.1
    nrm: Optional[int] = None
    out_dir: str = "results"
    log_level: str = "INFO"

    def __post_init__(self):
        if not self.duration_ms >= 0:
            raise ConfigurationError(f"duration must be >= 0, got {self.duration_ms}")
        if not self.sample_period_ms > 0:
            raise ConfigurationError(
                f"sample period must be > 0, got {self.sample_period_ms}")
        if self.nrm is not None and self.nrm < 2:
            raise ConfigurationError(f"nrm must be >= 2, got {self.nrm}")

    @property
    def duration_us(self) -> float:
        return ms_to_us(self.duration_ms)

    @property
    def sample_period_us(self) -> float:
        return ms_to_us(self.sample_period_ms)

    def with_overrides(self, **changes) -> "SimulationConfig":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
