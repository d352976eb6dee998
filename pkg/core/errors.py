"""
---
title: "Simulator Exception Hierarchy"
description: "Domain exceptions raised by the ABR explicit-rate simulator. A single base class lets the CLI map failures onto exit codes without catching unrelated errors."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-21"
last_modified: "2026-10-12"
version: "1.0.0"
module_type: "Core Domain Layer"
dependencies: []
key_classes: ["AbrSimError", "InvalidArgumentError", "ProtocolError", "ContractViolationError", "ConfigurationError", "ScenarioSyntaxError", "ScenarioSemanticError", "OutputError"]
design_patterns: ["Exception Hierarchy"]
solid_principles: ["SRP - Single Responsibility Principle"]
features: ["Line Number Reporting", "Field Path Reporting"]
tags: ["errors", "exceptions", "core"]
---

core/errors.py - Simulator Exception Hierarchy

Every error the simulator raises on purpose derives from AbrSimError.
The CLI layer (app.py) maps the subclasses onto process exit codes:

- ConfigurationError, ScenarioSyntaxError, ScenarioSemanticError -> 2 (usage)
- OutputError -> 3 (I/O)

Conditions that are expected outcomes rather than faults (a fixed point that
did not converge, an unsaturated link) are returned as values and never raised.
"""
from typing import Optional


class AbrSimError(Exception):
    """시뮬레이터 예외의 최상위 클래스"""


class InvalidArgumentError(AbrSimError, ValueError):
    """함수 인자가 정의역을 벗어난 경우 (예: 0 이하의 링크 속도)"""


class ProtocolError(AbrSimError):
    """스위치가 등록되지 않은 VC의 셀을 받은 경우"""


class ContractViolationError(AbrSimError):
    """호출 순서나 사전 조건 위반 (예: 활성 구간 밖에서 셀 송신)"""


class ConfigurationError(AbrSimError):
    """설정 값이나 시나리오 구성이 실행 불가능한 경우"""


class ScenarioSyntaxError(ConfigurationError):
    """시나리오 파일 구문 오류

    Attributes:
        line: 오류가 발생한 1부터 시작하는 줄 번호 (알 수 없으면 None)
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        location = f"line {line}: " if line is not None else ""
        super().__init__(f"{location}{message}")


class ScenarioSemanticError(ConfigurationError):
    """시나리오 의미 오류 (끊어진 경로, 음수 속도 등)

    Attributes:
        field_path: 문제가 된 필드 경로 (예: "vcs[2].route")
    """

    def __init__(self, message: str, field_path: str = ""):
        self.field_path = field_path
        prefix = f"{field_path}: " if field_path else ""
        super().__init__(f"{prefix}{message}")


class OutputError(AbrSimError, OSError):
    """결과 파일을 쓸 수 없는 경우"""
