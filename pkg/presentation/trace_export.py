"""
---
title: "Trace DataFrame Construction and CSV Export"
description: "Presentation layer services that turn a TraceSet into wide pandas DataFrames (one column per VC or port, rows on the union of sample instants) and write them as byte-stable CSV files."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-28"
last_modified: "2026-10-16"
version: "1.0.0"
module_type: "Presentation Layer"
dependencies: ["logging", "pathlib", "typing", "pandas", "core.errors", "core.models", "core.units"]
key_classes: ["TraceFrameBuilder", "CsvTraceExporter"]
key_functions: ["build", "build_all", "export"]
design_patterns: ["Builder Pattern"]
solid_principles: ["SRP - Single Responsibility Principle"]
features: ["Union Time Axis", "Forward Fill", "Fixed Float Format", "Stable Column Order"]
tags: ["dataframe", "csv", "presentation", "traces"]
---

presentation/trace_export.py - Trace DataFrame Construction and CSV Export

Files written by CsvTraceExporter (first column always time_ms):

    acr.csv         ACR per VC (Mbps)
    send_rate.csv   min(ACR, app_cap) per VC, 0 outside active windows
    queue.csv       queue length per forward port (cells)
    neff.csv        active VC count used by each controlled port
    fair_share.csv  FairShare per controlled port (Mbps)
    util.csv        utilization per forward port since the previous grid sample

Every series is a step function, so each column is forward filled onto the
union of all sample instants of that file. When several samples share a
timestamp the last one wins.
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from core.errors import OutputError
from core.models import Series, TraceSet
from core.units import US_PER_MS

logger = logging.getLogger(__name__)

TIME_COLUMN = "time_ms"
FLOAT_FORMAT = "%.6f"


class TraceFrameBuilder:
    """TraceSet을 파일별 DataFrame으로 변환"""

    def __init__(self):
        self.tables = {
            "acr": lambda traces: traces.acr,
            "send_rate": lambda traces: traces.send_rate,
            "queue": lambda traces: traces.queue,
            "neff": lambda traces: traces.neff,
            "fair_share": lambda traces: traces.fair_share,
            "util": lambda traces: traces.util,
        }

    def build(self, series_by_key: Dict[str, Series]) -> pd.DataFrame:
        """키별 시계열을 하나의 DataFrame으로 병합

        Args:
            series_by_key: 열 이름별 (시각 us, 값) 목록

        Returns:
            time_ms 열과 키별 열을 가진 DataFrame
        """
        columns: List[pd.Series] = []
        for key, series in series_by_key.items():
            if not series:
                continue
            column = pd.Series([value for _, value in series],
                               index=[time for time, _ in series], name=key, dtype="float64")
            # 같은 시각의 샘플은 마지막 값만 남김
            columns.append(column[~column.index.duplicated(keep="last")])

        if not columns:
            return pd.DataFrame({TIME_COLUMN: pd.Series(dtype="float64")})

        frame = pd.concat(columns, axis=1).sort_index().ffill()
        frame.index = frame.index / US_PER_MS
        frame.index.name = TIME_COLUMN
        return frame.reset_index()

    def build_all(self, traces: TraceSet) -> Dict[str, pd.DataFrame]:
        return {name: self.build(select(traces)) for name, select in self.tables.items()}


class CsvTraceExporter:
    """CSV 파일 출력 (TraceExporter 프로토콜 구현)"""

    def __init__(self, builder: Optional[TraceFrameBuilder] = None):
        self.builder = builder or TraceFrameBuilder()

    def export(self, traces: TraceSet, out_dir: Path) -> Dict[str, Path]:
        """트레이스를 out_dir에 CSV로 저장

        Args:
            traces: 실행 트레이스
            out_dir: 출력 디렉토리 (없으면 생성)

        Returns:
            파일 이름(확장자 제외)별 경로

        Raises:
            OutputError: 디렉토리 생성 또는 파일 쓰기 실패
        """
        out_dir = Path(out_dir)
        written = {}
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
            for name, frame in self.builder.build_all(traces).items():
                path = out_dir / f"{name}.csv"
                frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
                written[name] = path
        except OSError as exc:
            raise OutputError(f"cannot write traces to {out_dir}: {exc}") from exc

        logger.info("wrote %d trace files to %s", len(written), out_dir)
        return written
