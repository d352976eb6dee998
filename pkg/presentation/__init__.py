"""
Presentation 패키지 - CSV 트레이스와 실행 요약 출력
"""
from .report import ReportBuilder, ReportRenderer, RunReport
from .trace_export import CsvTraceExporter, TraceFrameBuilder

__all__ = [
    'ReportBuilder',
    'ReportRenderer',
    'RunReport',
    'CsvTraceExporter',
    'TraceFrameBuilder',
]
