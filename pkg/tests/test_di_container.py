"""Service container wiring."""

import io

from app import EXIT_OK, AbrSimulatorApp
from core.config import SimulationConfig, SwitchConfig, Variant
from di_container import DIContainer, TestDIContainer
from services.engine import SimulationEngine
from services.scenarios import build_three_source


class TestDIContainerServices:

    def test_services_are_lazy_singletons(self, container):
        assert container._scenario_catalog is None
        assert container.scenario_catalog is container.scenario_catalog
        assert container.trace_exporter is container.trace_exporter
        assert container.report_renderer is container.report_renderer

    def test_reset_drops_instances(self, container):
        first = container.scenario_codec
        container.reset()
        assert container.scenario_codec is not first

    def test_default_configs(self):
        assert DIContainer().config == SimulationConfig()
        assert TestDIContainer().config.duration_ms == 50.0

    def test_create_engine_uses_container_settings(self):
        config = SimulationConfig(switch=SwitchConfig(variant=Variant.ERICA_FAIR), nrm=8)
        engine = DIContainer(config).create_engine(build_three_source())
        assert isinstance(engine, SimulationEngine)
        assert engine.controller("BN").variant is Variant.ERICA_FAIR

    def test_create_engine_returns_fresh_engines(self, container):
        scenario = build_three_source()
        assert container.create_engine(scenario) is not container.create_engine(scenario)


class TestMockInjection:

    def test_injected_exporter_receives_traces(self, tmp_path):
        calls = []

        class RecordingExporter:
            def export(self, traces, out_dir):
                calls.append((traces.duration_us, out_dir))
                return {}

        container = TestDIContainer()
        container.inject_mock("trace_exporter", RecordingExporter())
        app = AbrSimulatorApp(container)
        app.out = io.StringIO()

        code = app.run(["run", "--scenario", "three-source", "--duration", "1ms", "--out", str(tmp_path)])
        assert code == EXIT_OK
        assert calls == [(1000.0, tmp_path)]
        assert not (tmp_path / "acr.csv").exists()
        assert (tmp_path / "report").exists()
