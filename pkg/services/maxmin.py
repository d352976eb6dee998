"""
---
title: "Max-Min Fairness Mathematics"
description: "Offline fairness library used as the correctness oracle for the switch algorithms: activity levels, effective number of active VCs, the FairShare fixed-point recursion, single-link water-filling and multi-link max-min allocation with a bottleneck verifier."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-22"
last_modified: "2026-10-14"
version: "1.0.0"
module_type: "Service Layer"
dependencies: ["logging", "math", "dataclasses", "enum", "typing", "numpy", "core.errors", "core.models"]
key_classes: ["DemandProfile", "FixedPointResult", "NetworkModel", "LinkState"]
key_functions: ["activity_level", "effective_n", "neff_iterate_once", "neff_fixed_point", "neff_trajectory", "waterfill_level", "maxmin_allocate", "maxmin_verify", "bottleneck_profile", "count_overloading", "jain_index"]
design_patterns: ["Pure Function Module", "Value Object Pattern"]
solid_principles: ["SRP - Single Responsibility Principle"]
features: ["Fixed-Point Iteration", "Sort-and-Scan Water-Filling", "Progressive Filling", "Bottleneck Verification"]
tags: ["max-min", "water-filling", "fairness", "oracle", "services"]
---

services/maxmin.py - Max-Min Fairness Mathematics

Everything here is a pure function over value inputs and can be called from
any number of simulations at once.

Key Responsibilities:
- Activity level min(1, rate / FairShare) and the effective number of active
  VCs (the sum of activity levels)
- The FairShare recursion F <- C / N_eff(F), one step at a time or iterated
  to a fixed point
- Single-link water-filling: the level L with sum(min(cap_i, L)) = C
- Multi-link max-min allocation by progressive filling, and a verifier based
  on the bottleneck characterization

Fixed point and water-filling agree: F * min(1, cap / F) = min(cap, F), so
the recursion's fixed point solves sum(min(cap_i, F)) = C, which is exactly
the water-filling equation. The test suite checks this on random profiles.

Ties: a VC whose cap equals FairShare has activity exactly 1 and is counted
as overloading.

Usage Examples:
profile = DemandProfile(caps=(10.0, UNBOUNDED, UNBOUNDED), capacity=150.0)
waterfill_level(profile)                 # 70.0
neff_fixed_point(profile).n_eff          # 15/7

net = NetworkModel(links=(("L1", 100.0),), routes={0: ("L1",), 1: ("L1",)})
maxmin_allocate(net, {0: UNBOUNDED, 1: UNBOUNDED})   # {0: 50.0, 1: 50.0}
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import InvalidArgumentError
from core.models import Rate, VcId

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITER = 100


class LinkState(Enum):
    """수위 계산 결과 표시자"""
    UNSATURATED = "unsaturated"


@dataclass(frozen=True)
class DemandProfile:
    """단일 링크 수요 프로파일

    Attributes:
        caps: VC별 수요 상한 (UNBOUNDED 허용)
        capacity: 링크의 ABR 용량 (Mbps)
    """
    caps: Tuple[Rate, ...]
    capacity: Rate

    def __post_init__(self):
        object.__setattr__(self, "caps", tuple(float(c) for c in self.caps))
        if not self.capacity > 0 or math.isinf(self.capacity):
            raise InvalidArgumentError(f"capacity must be positive and finite, got {self.capacity}")
        for index, cap in enumerate(self.caps):
            if not cap >= 0:
                raise InvalidArgumentError(f"cap[{index}] must be >= 0, got {cap}")

    @property
    def is_saturated(self) -> bool:
        """수요 합이 용량 이상인지"""
        return sum(self.caps) >= self.capacity


@dataclass(frozen=True)
class FixedPointResult:
    """FairShare 고정점 반복 결과

    Attributes:
        fair_share: 마지막 FairShare (Mbps)
        n_eff: 마지막 유효 활성 VC 수
        iterations: 수행한 반복 횟수
        converged: 허용 오차 내 수렴 여부
        state: 링크가 포화되지 않았으면 LinkState.UNSATURATED
    """
    fair_share: Rate
    n_eff: float
    iterations: int
    converged: bool
    state: Union[LinkState, None] = None


@dataclass(frozen=True)
class NetworkModel:
    """다중 링크 네트워크 모델

    Attributes:
        links: (링크 ID, 용량) 순서쌍
        routes: VC별 경유 링크 ID
    """
    links: Tuple[Tuple[str, Rate], ...]
    routes: Dict[VcId, Tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        self.validate()

    def validate(self):
        """경로와 링크 정합성 검증

        Raises:
            InvalidArgumentError: 빈 경로, 존재하지 않는 링크, 잘못된 용량
        """
        known = {}
        for link_id, capacity in self.links:
            if link_id in known:
                raise InvalidArgumentError(f"duplicate link id '{link_id}'")
            if not capacity > 0:
                raise InvalidArgumentError(f"link '{link_id}' capacity must be > 0, got {capacity}")
            known[link_id] = capacity
        for vc, route in self.routes.items():
            if not route:
                raise InvalidArgumentError(f"vc {vc} has an empty route")
            for link_id in route:
                if link_id not in known:
                    raise InvalidArgumentError(f"vc {vc} references unknown link '{link_id}'")

    def capacity_of(self, link_id: str) -> Rate:
        return dict(self.links)[link_id]

    def vcs_on(self, link_id: str) -> List[VcId]:
        return [vc for vc in sorted(self.routes) if link_id in self.routes[vc]]


def activity_level(rate: Rate, fair_share: Rate) -> float:
    """VC 활성도 min(1, rate / fair_share)

    Args:
        rate: VC 속도 (Mbps)
        fair_share: FairShare (Mbps)

    Returns:
        [0, 1] 범위의 활성도

    Raises:
        InvalidArgumentError: fair_share <= 0
    """
    if not fair_share > 0:
        raise InvalidArgumentError(f"fair_share must be > 0, got {fair_share}")
    if rate >= fair_share:
        return 1.0
    return max(0.0, rate) / fair_share


def effective_n(rates: Sequence[Rate], fair_share: Rate) -> float:
    """유효 활성 VC 수 (활성도의 합)"""
    if not fair_share > 0:
        raise InvalidArgumentError(f"fair_share must be > 0, got {fair_share}")
    return math.fsum(activity_level(rate, fair_share) for rate in rates)


def neff_iterate_once(rates: Sequence[Rate], n_prev: float, capacity: Rate) -> Tuple[Rate, float]:
    """FairShare 재귀 한 단계

    Args:
        rates: 현재 VC 속도
        n_prev: 직전 유효 활성 VC 수
        capacity: ABR 용량

    Returns:
        (capacity / n_prev, 그 FairShare에서의 유효 활성 VC 수)
    """
    if not n_prev > 0:
        raise InvalidArgumentError(f"n_prev must be > 0, got {n_prev}")
    if not capacity > 0:
        raise InvalidArgumentError(f"capacity must be > 0, got {capacity}")
    fair_share = capacity / n_prev
    return fair_share, effective_n(rates, fair_share)


def _closed_loop_n(caps: Sequence[Rate], fair_share: Rate) -> float:
    # 폐루프 가정: 각 VC는 min(cap, F)로 송신
    return effective_n([min(cap, fair_share) for cap in caps], fair_share)


def neff_fixed_point(
    profile: DemandProfile,
    n0: float = 1.0,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> FixedPointResult:
    """F <- C / N_eff(F) 반복으로 FairShare 고정점 계산

    Args:
        profile: 수요 프로파일
        n0: 초기 유효 활성 VC 수 (> 0)
        tol: 상대 허용 오차
        max_iter: 최대 반복 횟수

    Returns:
        FixedPointResult (미수렴도 예외가 아닌 결과로 반환)
    """
    if not n0 > 0:
        raise InvalidArgumentError(f"n0 must be > 0, got {n0}")
    capacity = profile.capacity
    saturated = profile.is_saturated
    max_cap = max(profile.caps) if profile.caps else 0.0

    n_eff = float(n0)
    fair_share = capacity / n_eff
    iterations = 0
    while iterations < max_iter:
        fair_share = capacity / n_eff
        n_eff = _closed_loop_n(profile.caps, fair_share)
        iterations += 1
        if saturated and abs(fair_share * n_eff - capacity) <= tol * capacity:
            return FixedPointResult(fair_share, n_eff, iterations, True)
        if n_eff <= 0:
            break
        # 모든 VC가 상한 아래에 있으면 더 반복해도 F만 커짐
        if not saturated and fair_share >= max_cap:
            break

    if saturated:
        logger.warning("fixed point did not converge after %d iterations (F=%.6f)",
                       iterations, fair_share)
        return FixedPointResult(fair_share, n_eff, iterations, False)
    reported = capacity / n_eff if n_eff > 0 else capacity
    return FixedPointResult(reported, n_eff, iterations, False, LinkState.UNSATURATED)


def neff_trajectory(rates: Sequence[Rate], n0: float, capacity: Rate, steps: int) -> List[Tuple[Rate, float]]:
    """고정 속도에 대해 neff_iterate_once를 steps번 적용한 (F, N) 목록"""
    trajectory = []
    n_eff = n0
    for _ in range(steps):
        fair_share, n_eff = neff_iterate_once(rates, n_eff, capacity)
        trajectory.append((fair_share, n_eff))
        if n_eff <= 0:
            break
    return trajectory


def waterfill_level(profile: DemandProfile) -> Union[Rate, LinkState]:
    """단일 링크 수위 계산 (정렬 후 순차 탐색)

    Returns:
        sum(min(cap_i, L)) = capacity인 L, 수요 합이 용량 미만이면 LinkState.UNSATURATED
    """
    caps = np.sort(np.asarray(profile.caps, dtype=float))
    remaining = profile.capacity
    count = len(caps)
    for index, cap in enumerate(caps):
        share = remaining / (count - index)
        if cap >= share:
            return float(share)
        remaining -= cap
    return LinkState.UNSATURATED


def count_overloading(caps: Sequence[Rate], fair_share: Rate) -> int:
    """FairShare 이상인 VC 수 (동률은 과부하로 계산)"""
    return sum(1 for cap in caps if cap >= fair_share)


def count_underloading(caps: Sequence[Rate], fair_share: Rate) -> int:
    return len(caps) - count_overloading(caps, fair_share)


def maxmin_allocate(net: NetworkModel, caps: Mapping[VcId, Rate]) -> Dict[VcId, Rate]:
    """다중 링크 max-min 공정 할당 (점진적 채우기)

    전역 최소 수위 링크를 찾아 그 링크를 지나는 미고정 VC를 고정하고
    잔여 용량을 차감하는 과정을 반복.

    Args:
        net: 네트워크 모델
        caps: VC별 수요 상한

    Returns:
        VC별 할당 속도
    """
    if set(caps) != set(net.routes):
        raise InvalidArgumentError("caps and routes must name the same VCs")
    residual = {link_id: capacity for link_id, capacity in net.links}
    unfixed = set(net.routes)
    allocation: Dict[VcId, Rate] = {}

    while unfixed:
        best_level = None
        best_link = None
        for link_id, _ in net.links:
            members = [vc for vc in sorted(unfixed) if link_id in net.routes[vc]]
            if not members:
                continue
            level = waterfill_level(DemandProfile(
                caps=tuple(caps[vc] for vc in members),
                capacity=max(residual[link_id], np.finfo(float).tiny),
            ))
            if level is LinkState.UNSATURATED:
                continue
            if best_level is None or level < best_level:
                best_level, best_link = level, link_id

        if best_link is None:
            # 남은 VC는 어느 링크도 포화시키지 않음
            chosen = sorted(unfixed)
            fixed = {vc: caps[vc] for vc in chosen}
        else:
            chosen = [vc for vc in sorted(unfixed) if best_link in net.routes[vc]]
            fixed = {vc: min(caps[vc], best_level) for vc in chosen}
            logger.debug("link %s fixes %d vcs at level %.6f", best_link, len(chosen), best_level)

        for vc, rate in fixed.items():
            allocation[vc] = rate
            unfixed.discard(vc)
            for link_id in net.routes[vc]:
                residual[link_id] = max(0.0, residual[link_id] - rate)

    return {vc: allocation[vc] for vc in sorted(allocation)}


def maxmin_verify(
    net: NetworkModel,
    caps: Mapping[VcId, Rate],
    alloc: Mapping[VcId, Rate],
    eps: float = 1e-9,
) -> bool:
    """할당이 max-min 공정한지 검증 (병목 특성 이용)

    모든 링크에서 용량을 넘지 않고, 상한에 닿지 않은 VC마다 경로 위에
    자신이 최대 할당인 포화 링크가 있으면 True.
    """
    if set(alloc) != set(caps) or set(alloc) != set(net.routes):
        return False
    capacities = dict(net.links)
    loads = {link_id: 0.0 for link_id in capacities}
    peaks = {link_id: 0.0 for link_id in capacities}
    for vc, rate in alloc.items():
        if not np.isfinite(rate) or rate < -eps or rate > caps[vc] + eps * max(1.0, rate):
            return False
        for link_id in net.routes[vc]:
            loads[link_id] += rate
            peaks[link_id] = max(peaks[link_id], rate)

    slack = {link_id: eps * max(1.0, capacities[link_id]) for link_id in capacities}
    for link_id, load in loads.items():
        if load > capacities[link_id] + slack[link_id]:
            return False

    for vc, rate in alloc.items():
        if rate >= caps[vc] - eps * max(1.0, rate):
            continue
        bottlenecked = any(
            loads[link_id] >= capacities[link_id] - slack[link_id]
            and rate >= peaks[link_id] - slack[link_id]
            for link_id in net.routes[vc]
        )
        if not bottlenecked:
            return False
    return True


def bottleneck_profile(
    net: NetworkModel,
    alloc: Mapping[VcId, Rate],
    link_id: str,
    rel_tol: float = 1e-9,
) -> Optional[DemandProfile]:
    """max-min 할당에서 한 링크가 보는 단일 링크 수요 프로파일

    링크 최대 할당에 있는 VC는 이 링크가 병목이므로 UNBOUNDED,
    나머지는 다른 곳에서 정해진 할당을 상한으로 둔다.

    Returns:
        링크가 포화되어 있으면 DemandProfile, 아니면 None
    """
    capacity = net.capacity_of(link_id)
    rates = [alloc[vc] for vc in net.vcs_on(link_id) if vc in alloc]
    if not rates or math.fsum(rates) < capacity * (1.0 - rel_tol):
        return None
    level = max(rates)
    caps = tuple(math.inf if rate >= level * (1.0 - rel_tol) else rate for rate in rates)
    return DemandProfile(caps=caps, capacity=capacity)


def jain_index(values: Sequence[float]) -> float:
    """Jain 공정성 지수 (sum x)^2 / (n * sum x^2)

    Raises:
        InvalidArgumentError: 빈 입력이거나 모두 0인 경우
    """
    data = np.asarray(values, dtype=float)
    if data.size == 0:
        raise InvalidArgumentError("jain index needs at least one value")
    denominator = data.size * float(np.sum(data ** 2))
    if denominator == 0:
        raise InvalidArgumentError("jain index is undefined for all-zero input")
    return float(np.sum(data)) ** 2 / denominator
