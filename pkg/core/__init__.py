"""
Core 패키지 - 도메인 모델, 설정, 단위 계산, 예외
"""
from .config import SimulationConfig, SwitchConfig, Variant
from .errors import (
    AbrSimError,
    ConfigurationError,
    ContractViolationError,
    InvalidArgumentError,
    OutputError,
    ProtocolError,
    ScenarioSemanticError,
    ScenarioSyntaxError,
)
from .models import Cell, CellKind, LinkSpec, Node, NodeKind, RmPayload, Scenario, TraceSet, VcSpec, UNBOUNDED
from .interfaces import RateAllocator, ScenarioCodec, TraceExporter

__all__ = [
    # Config
    'SimulationConfig',
    'SwitchConfig',
    'Variant',

    # Errors
    'AbrSimError',
    'ConfigurationError',
    'ContractViolationError',
    'InvalidArgumentError',
    'OutputError',
    'ProtocolError',
    'ScenarioSemanticError',
    'ScenarioSyntaxError',

    # Models
    'Cell',
    'CellKind',
    'LinkSpec',
    'Node',
    'NodeKind',
    'RmPayload',
    'Scenario',
    'TraceSet',
    'VcSpec',
    'UNBOUNDED',

    # Interfaces
    'RateAllocator',
    'ScenarioCodec',
    'TraceExporter',
]
