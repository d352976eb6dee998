"""
---
title: "Run Summary Report"
description: "Builds a RunReport from a finished simulation (steady-state rates, convergence time, normalized Jain index, queue and utilization figures, max-min oracle comparison) and renders it as a plain-text report backed by pandas tables."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-29"
last_modified: "2026-10-17"
version: "1.0.0"
module_type: "Presentation Layer"
dependencies: ["logging", "dataclasses", "pathlib", "typing", "numpy", "pandas", "core.errors", "core.models", "core.units", "services.engine", "services.maxmin"]
key_classes: ["RunReport", "ReportBuilder", "ReportRenderer"]
key_functions: ["build", "render", "vc_frame", "port_frame", "write", "time_weighted_mean", "settling_time"]
design_patterns: ["Builder Pattern"]
solid_principles: ["SRP - Single Responsibility Principle"]
features: ["Time-Weighted Means", "Convergence Detection", "Normalized Jain Index", "Oracle Comparison"]
tags: ["report", "summary", "presentation", "fairness"]
---

presentation/report.py - Run Summary Report

Definitions used by ReportBuilder:

- Steady window: the last 25% of the run.
- Steady-state ACR / send rate: time-weighted mean of the step series over
  the steady window.
- Active VC: positive steady send rate.
- Convergence time: first instant after which the ACR of every active VC
  stays within 5% of its steady-state mean. None when the last sample is
  still outside the band.
- Oracle: max-min allocation of the active VCs computed on the network
  model of the scenario (controlled links at ABR capacity).
- Jain index: over send_rate / oracle for the active VCs, so a run that
  matches the max-min allocation scores 1 even when shares differ.
- Oracle N_eff: fixed point of the effective-N iteration on each saturated
  controlled port, VCs bottlenecked elsewhere entering with their oracle rate.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from core.errors import InvalidArgumentError, OutputError
from core.models import Series, SimTime, TraceSet
from core.units import US_PER_MS
from services.engine import RunResult, network_model
from services.maxmin import NetworkModel, bottleneck_profile, jain_index, maxmin_allocate, neff_fixed_point

logger = logging.getLogger(__name__)

STEADY_FRACTION = 0.25
CONVERGENCE_BAND = 0.05
REPORT_FILE = "report"


def time_weighted_mean(series: Series, start: SimTime, stop: SimTime) -> float:
    """계단 함수 시계열의 [start, stop] 시간 가중 평균

    Raises:
        InvalidArgumentError: stop < start
    """
    if stop < start:
        raise InvalidArgumentError(f"window [{start}, {stop}] is reversed")
    if not series:
        return 0.0
    if stop == start:
        return TraceSet.value_at(series, start)
    times = [start] + [t for t, _ in series if start < t < stop]
    values = [TraceSet.value_at(series, t) for t in times]
    widths = np.diff(np.append(np.asarray(times, dtype=float), stop))
    return float(np.dot(widths, values) / (stop - start))


def settling_time(series: Series, target: float, band: float = CONVERGENCE_BAND) -> Optional[SimTime]:
    """값이 target의 ±band 안에 머물기 시작한 시각

    Returns:
        마지막 이탈 이후 첫 샘플 시각, 끝까지 이탈 상태면 None
    """
    if not series:
        return None
    tolerance = band * abs(target)
    last_outside = None
    for index, (_, value) in enumerate(series):
        if abs(value - target) > tolerance:
            last_outside = index
    if last_outside is None:
        return series[0][0]
    if last_outside == len(series) - 1:
        return None
    return series[last_outside + 1][0]


@dataclass
class RunReport:
    """실행 요약

    Attributes:
        scenario: 시나리오 이름
        variant: 스위치 변형 이름
        duration_ms: 실행 길이
        window_ms: 정상 상태 평가 구간 (시작, 끝)
        steady_acr: VC별 정상 상태 평균 ACR
        steady_send_rate: VC별 정상 상태 평균 송신 속도
        oracle: 활성 VC의 max-min 할당
        convergence_ms: 수렴 시각 (None이면 미수렴)
        jain: 정규화 Jain 지수 (활성 VC가 없으면 None)
        max_queue: 제어 포트별 최대 큐 길이
        mean_utilization: 제어 포트별 정상 상태 평균 이용률
        final_neff: 제어 포트별 마지막 N_eff
        oracle_neff: 포화된 제어 포트별 고정점 N_eff
        conserved: 셀 수지 일치 여부
    """
    scenario: str
    variant: str
    duration_ms: float
    window_ms: tuple
    steady_acr: Dict[str, float] = field(default_factory=dict)
    steady_send_rate: Dict[str, float] = field(default_factory=dict)
    oracle: Dict[str, float] = field(default_factory=dict)
    convergence_ms: Optional[float] = None
    jain: Optional[float] = None
    max_queue: Dict[str, int] = field(default_factory=dict)
    mean_utilization: Dict[str, float] = field(default_factory=dict)
    final_neff: Dict[str, float] = field(default_factory=dict)
    oracle_neff: Dict[str, float] = field(default_factory=dict)
    conserved: bool = True

    @property
    def active_vcs(self) -> List[str]:
        return [name for name, rate in self.steady_send_rate.items() if rate > 0]


class ReportBuilder:
    """RunResult에서 RunReport 생성"""

    def __init__(self, steady_fraction: float = STEADY_FRACTION, band: float = CONVERGENCE_BAND):
        if not 0 < steady_fraction <= 1:
            raise InvalidArgumentError(f"steady fraction must be in (0, 1], got {steady_fraction}")
        self.steady_fraction = steady_fraction
        self.band = band

    def build(self, result: RunResult) -> RunReport:
        """요약 계산

        Args:
            result: 엔진 실행 결과

        Returns:
            RunReport
        """
        traces = result.traces
        stop = traces.duration_us
        start = stop * (1.0 - self.steady_fraction)
        report = RunReport(
            scenario=result.scenario.name,
            variant=result.switch_config.variant.value,
            duration_ms=stop / US_PER_MS,
            window_ms=(start / US_PER_MS, stop / US_PER_MS),
            conserved=result.conservation_holds(),
        )

        for name in result.scenario.vc_names():
            report.steady_acr[name] = time_weighted_mean(traces.acr.get(name, []), start, stop)
            report.steady_send_rate[name] = time_weighted_mean(traces.send_rate.get(name, []), start, stop)

        report.oracle = self._oracle(result, report.active_vcs)
        report.convergence_ms = self._convergence(traces, report)
        report.jain = self._jain(report)

        for port in (p for p in result.ports.values() if p.controlled):
            report.max_queue[port.name] = port.max_queue
            report.final_neff[port.name] = TraceSet.final_value(traces.neff.get(port.name, []))
            if stop > start:
                report.mean_utilization[port.name] = result.utilization(port.name, start, stop)
        report.oracle_neff = self._oracle_neff(result, report.oracle)
        return report

    def _oracle(self, result: RunResult, active: List[str]) -> Dict[str, float]:
        if not active:
            return {}
        names = result.scenario.vc_names()
        subnet, caps = self._active_network(result, active)
        allocation = maxmin_allocate(subnet, caps)
        return {names[i]: rate for i, rate in allocation.items()}

    @staticmethod
    def _active_network(result: RunResult, active: List[str]):
        names = result.scenario.vc_names()
        net, caps = network_model(result.scenario, result.switch_config)
        indices = [names.index(name) for name in active]
        subnet = NetworkModel(links=net.links, routes={i: net.routes[i] for i in indices})
        return subnet, {i: caps[i] for i in indices}

    def _convergence(self, traces: TraceSet, report: RunReport) -> Optional[float]:
        instants = []
        for name in report.active_vcs:
            instant = settling_time(traces.acr.get(name, []), report.steady_acr[name], self.band)
            if instant is None:
                return None
            instants.append(instant)
        if not instants:
            return None
        return max(instants) / US_PER_MS

    @staticmethod
    def _jain(report: RunReport) -> Optional[float]:
        ratios = [report.steady_send_rate[name] / report.oracle[name]
                  for name in report.active_vcs if report.oracle.get(name, 0.0) > 0]
        if not ratios:
            return None
        return jain_index(ratios)

    def _oracle_neff(self, result: RunResult, oracle: Dict[str, float]) -> Dict[str, float]:
        if not oracle:
            return {}
        names = result.scenario.vc_names()
        subnet, _ = self._active_network(result, list(oracle))
        allocation = {names.index(name): rate for name, rate in oracle.items()}
        expected = {}
        for port in (p for p in result.ports.values() if p.controlled):
            profile = bottleneck_profile(subnet, allocation, port.name)
            if profile is not None:
                expected[port.name] = neff_fixed_point(profile).n_eff
        return expected


class ReportRenderer:
    """RunReport를 텍스트로 출력"""

    def vc_frame(self, report: RunReport) -> pd.DataFrame:
        rows = []
        for name in report.steady_acr:
            rows.append({
                "vc": name,
                "steady_acr": report.steady_acr[name],
                "steady_send_rate": report.steady_send_rate[name],
                "oracle": report.oracle.get(name, float("nan")),
            })
        return pd.DataFrame(rows, columns=["vc", "steady_acr", "steady_send_rate", "oracle"])

    def port_frame(self, report: RunReport) -> pd.DataFrame:
        rows = []
        for name in report.max_queue:
            rows.append({
                "port": name,
                "max_queue": report.max_queue[name],
                "mean_util": report.mean_utilization.get(name, float("nan")),
                "final_neff": report.final_neff.get(name, float("nan")),
                "oracle_neff": report.oracle_neff.get(name, float("nan")),
            })
        return pd.DataFrame(rows, columns=["port", "max_queue", "mean_util", "final_neff", "oracle_neff"])

    def render(self, report: RunReport) -> str:
        convergence = ("not converged" if report.convergence_ms is None
                       else f"{report.convergence_ms:.3f} ms")
        jain = "n/a" if report.jain is None else f"{report.jain:.4f}"
        lines = [
            f"scenario: {report.scenario}",
            f"variant: {report.variant}",
            f"duration: {report.duration_ms:.3f} ms",
            f"steady window: {report.window_ms[0]:.3f} .. {report.window_ms[1]:.3f} ms",
            f"convergence: {convergence}",
            f"jain index (send rate / max-min share): {jain}",
            f"cell conservation: {'ok' if report.conserved else 'VIOLATED'}",
            "",
            "virtual connections (Mbps)",
            self.vc_frame(report).to_string(index=False, float_format=lambda v: f"{v:.3f}"),
            "",
            "controlled ports",
            self.port_frame(report).to_string(index=False, float_format=lambda v: f"{v:.4f}"),
        ]
        return "\n".join(lines) + "\n"

    def write(self, report: RunReport, out_dir: Path) -> Path:
        """out_dir/report 저장

        Raises:
            OutputError: 쓰기 실패
        """
        path = Path(out_dir) / REPORT_FILE
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.render(report), encoding="utf-8")
        except OSError as exc:
            raise OutputError(f"cannot write report to {path}: {exc}") from exc
        logger.info("wrote report to %s", path)
        return path
