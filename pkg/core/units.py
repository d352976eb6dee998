"""
---
title: "Cell and Link Unit Arithmetic"
description: "Conversions between rates, cell counts and simulated time. Rates are Mbps, times are microseconds, so one Mbps is exactly one bit per microsecond."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-21"
last_modified: "2026-10-02"
version: "1.0.0"
module_type: "Core Domain Layer"
dependencies: ["math", "core.errors"]
key_functions: ["cell_transmission_time", "propagation_delay", "rate_from_cells", "ms_to_us", "us_to_ms"]
tags: ["units", "arithmetic", "core"]
---

core/units.py - Cell and Link Unit Arithmetic

Usage Examples:
cell_transmission_time(155.52)   # 2.7263... us
propagation_delay(1000)          # 5000.0 us
rate_from_cells(100, 272.63)     # ~155.52 Mbps
"""
import math

from core.errors import InvalidArgumentError

# ATM 셀 크기 53 bytes
CELL_BITS = 424

# 광섬유 전파 지연 (us/km)
PROPAGATION_US_PER_KM = 5.0

US_PER_MS = 1000.0


def cell_transmission_time(link_rate: float) -> float:
    """셀 하나의 전송 시간 계산

    Args:
        link_rate: 링크 속도 (Mbps)

    Returns:
        전송 시간 (us)

    Raises:
        InvalidArgumentError: link_rate가 0 이하이거나 유한하지 않은 경우
    """
    if not link_rate > 0 or math.isinf(link_rate):
        raise InvalidArgumentError(f"link rate must be positive and finite, got {link_rate}")
    return CELL_BITS / link_rate


def propagation_delay(length_km: float) -> float:
    """링크 길이에 따른 전파 지연 계산

    Args:
        length_km: 링크 길이 (km)

    Returns:
        전파 지연 (us)
    """
    if not length_km >= 0:
        raise InvalidArgumentError(f"link length must be non-negative, got {length_km}")
    return length_km * PROPAGATION_US_PER_KM


def rate_from_cells(cell_count: int, elapsed_us: float) -> float:
    """구간 동안 수신한 셀 수로 속도(Mbps) 추정"""
    if elapsed_us <= 0:
        raise InvalidArgumentError(f"elapsed time must be positive, got {elapsed_us}")
    return cell_count * CELL_BITS / elapsed_us


def ms_to_us(value_ms: float) -> float:
    return value_ms * US_PER_MS


def us_to_ms(value_us: float) -> float:
    return value_us / US_PER_MS
