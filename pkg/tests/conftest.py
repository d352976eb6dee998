"""Shared fixtures for the ABR simulator test suite.

Closed-loop runs are expensive (hundreds of thousands of events), so the
``closed_loop`` fixture caches every RunResult for the whole session and
the acceptance tests share them.
"""

from typing import Dict, Tuple

import pytest

from core.config import SimulationConfig, SwitchConfig, Variant
from core.models import LinkSpec, Node, NodeKind, Scenario, VcSpec
from core.units import ms_to_us
from di_container import TestDIContainer
from services.engine import RunResult, simulate
from services.scenarios import ScenarioCatalog


def single_link_scenario(icrs=(50.0, 50.0), app_caps=None, rate=155.52, length_km=10.0,
                         windows=None, name="single-link") -> Scenario:
    """Sources -> SW -> D over one controlled bottleneck link BN."""
    count = len(icrs)
    app_caps = app_caps or [float("inf")] * count
    windows = windows or [((0.0, float("inf")),)] * count
    sources = [f"S{i + 1}" for i in range(count)]
    links = [LinkSpec(f"A{i + 1}", src, "SW", rate, length_km) for i, src in enumerate(sources)]
    links.append(LinkSpec("BN", "SW", "D", rate, length_km))
    nodes = tuple(Node(s, NodeKind.SOURCE) for s in sources) + (
        Node("SW", NodeKind.SWITCH), Node("D", NodeKind.DESTINATION))
    vcs = tuple(
        VcSpec(src, (f"A{i + 1}", "BN"), icr=icrs[i], app_cap=app_caps[i], windows=windows[i])
        for i, src in enumerate(sources)
    )
    return Scenario(name=name, nodes=nodes, links=tuple(links), vcs=vcs)


@pytest.fixture(scope="session")
def single_link():
    return single_link_scenario


@pytest.fixture
def switch_config() -> SwitchConfig:
    return SwitchConfig()


@pytest.fixture
def container() -> TestDIContainer:
    return TestDIContainer()


@pytest.fixture
def catalog() -> ScenarioCatalog:
    return ScenarioCatalog()


@pytest.fixture
def short_config() -> SimulationConfig:
    return SimulationConfig(duration_ms=20.0, out_dir="unused")


@pytest.fixture(scope="session")
def closed_loop():
    """Return a function running (scenario, variant, duration) once per session."""
    cache: Dict[Tuple, RunResult] = {}
    catalog = ScenarioCatalog()

    def _run(scenario_name: str, variant: str, duration_ms: float = 400.0, **overrides) -> RunResult:
        key = (scenario_name, variant, duration_ms, tuple(sorted(overrides.items())))
        if key not in cache:
            config = SwitchConfig(variant=Variant.from_name(variant)).with_overrides(**overrides)
            cache[key] = simulate(catalog.build(scenario_name), config, ms_to_us(duration_ms))
        return cache[key]

    return _run
