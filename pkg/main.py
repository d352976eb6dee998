"""
---
title: "Main Application Entry Point"
description: "Entry point of the ABR explicit-rate simulator. Loads configuration from ABRSIM_* environment variables, builds the dependency injection container and hands the command line to AbrSimulatorApp."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-30"
last_modified: "2026-10-16"
version: "1.0.0"
module_type: "Application Entry Point"
dependencies: ["logging", "os", "sys", "pathlib", "typing"]
key_classes: ["None - functional module"]
key_functions: ["main", "load_config"]
design_patterns: ["Dependency Injection", "Factory Pattern"]
solid_principles: ["DIP - Dependency Inversion Principle"]
tags: ["entry-point", "configuration", "dependency-injection", "cli"]
---

main.py - Application Entry Point

Environment variables (command-line flags take precedence):

    ABRSIM_VARIANT          erica-basic | erica-fair | neff-ccr | neff-measured
    ABRSIM_TARGET_UTIL      target utilization, default 0.9
    ABRSIM_DELTA            MaxAllocPrevious band, default 0.1
    ABRSIM_INTERVAL_CELLS   cells per measurement interval, default 100
    ABRSIM_INTERVAL_MAX_MS  measurement interval cap in ms, default 1.0
    ABRSIM_DURATION_MS      run length in ms, default 400
    ABRSIM_OUT              output directory, default results
    ABRSIM_LOG_LEVEL        logging level name, default INFO

Usage:
    python main.py run --scenario three-source --variant neff-measured --duration 400ms --out results/
"""
import logging
import os
import sys
from pathlib import Path
from typing import Callable, List, Optional

# 프로젝트 루트를 Python 경로에 추가
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from core.config import SimulationConfig, SwitchConfig, Variant
from core.errors import ConfigurationError
from di_container import DIContainer
from app import EXIT_USAGE, AbrSimulatorApp

logger = logging.getLogger(__name__)


def _env(name: str, convert: Callable[[str], object]):
    raw = os.getenv(name)
    if raw is None or raw == "":
        return None
    try:
        return convert(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name}={raw!r} is not valid: {exc}") from exc


def load_config() -> SimulationConfig:
    """환경 변수에서 설정 로드

    Returns:
        SimulationConfig (설정되지 않은 항목은 기본값)

    Raises:
        ConfigurationError: 해석할 수 없거나 범위를 벗어난 값
    """
    variant = _env("ABRSIM_VARIANT", str)
    switch = SwitchConfig().with_overrides(
        variant=Variant.from_name(variant) if variant else None,
        target_utilization=_env("ABRSIM_TARGET_UTIL", float),
        delta=_env("ABRSIM_DELTA", float),
        interval_cells=_env("ABRSIM_INTERVAL_CELLS", int),
        interval_max_ms=_env("ABRSIM_INTERVAL_MAX_MS", float),
    )
    return SimulationConfig(switch=switch).with_overrides(
        duration_ms=_env("ABRSIM_DURATION_MS", float),
        out_dir=_env("ABRSIM_OUT", str),
        log_level=_env("ABRSIM_LOG_LEVEL", str),
    )


def main(argv: Optional[List[str]] = None) -> int:
    """메인 실행 함수

    Returns:
        프로세스 종료 코드
    """
    try:
        config = load_config()
    except ConfigurationError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE

    container = DIContainer(config)
    app = AbrSimulatorApp(container)
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
