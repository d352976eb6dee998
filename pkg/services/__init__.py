"""
Services 패키지 - 공정성 계산, 스위치/소스 동작, 시뮬레이션 엔진, 시나리오
"""
from .engine import RunResult, SimulationEngine, network_model, run, run_sweep, simulate
from .maxmin import maxmin_allocate, maxmin_verify, neff_fixed_point, waterfill_level
from .scenario_codec import YamlScenarioCodec, parse_scenario, serialize_scenario
from .scenarios import ScenarioCatalog, validate_scenario
from .switch import create_port_controller

__all__ = [
    # Engine
    'RunResult',
    'SimulationEngine',
    'network_model',
    'run',
    'run_sweep',
    'simulate',

    # Max-min oracle
    'maxmin_allocate',
    'maxmin_verify',
    'neff_fixed_point',
    'waterfill_level',

    # Scenarios
    'YamlScenarioCodec',
    'parse_scenario',
    'serialize_scenario',
    'ScenarioCatalog',
    'validate_scenario',

    # Switch
    'create_port_controller',
]
