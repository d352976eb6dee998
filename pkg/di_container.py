"""
---
title: "Dependency Injection Container"
description: "Central container for the simulator services. Each service is created lazily on first access and shared afterwards; TestDIContainer swaps in mocks and short-run settings for tests."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-30"
last_modified: "2026-10-17"
version: "1.0.0"
module_type: "Infrastructure Layer"
dependencies: ["typing", "core.config", "core.models", "services.*", "presentation.*"]
key_classes: ["DIContainer", "TestDIContainer"]
key_functions: ["Property methods for service access", "create_engine", "reset", "inject_mock"]
design_patterns: ["Dependency Injection", "Singleton Pattern", "Factory Method Pattern", "Lazy Loading"]
solid_principles: ["DIP - Dependency Inversion Principle", "SRP - Single Responsibility Principle"]
features: ["Lazy Loading", "Singleton Management", "Mock Injection", "Fresh Engine per Run"]
tags: ["dependency-injection", "container", "singleton", "infrastructure", "testing"]
---

di_container.py - Dependency Injection Container

The container is the one place that knows how the simulator's services are
built. The CLI layer asks it for a catalog, a codec, an exporter or a
report renderer and never constructs those itself, so tests can swap any of
them out without touching app.py.

Key Responsibilities:
- Hold the SimulationConfig that main.py built from defaults and ABRSIM_*
- Create shared services lazily and keep one instance of each
- Build a fresh SimulationEngine for every run
- Drop every instance on reset()

Services managed:
- scenario_catalog: ScenarioCatalog, built-in scenarios by name
- scenario_codec: YamlScenarioCodec, scenario files
- trace_exporter: CsvTraceExporter, CSV traces
- report_builder / report_renderer: run summary

SimulationEngine is not a singleton. An engine runs exactly once, so
create_engine() is a factory method that returns a new instance each call.

Testing Support:
TestDIContainer starts from a short 50 ms configuration and accepts mocks
through inject_mock(name, obj). A mock replaces the lazily created service
of the same name, so app.py runs unchanged against it.

Usage Examples:
container = DIContainer(config)
engine = container.create_engine(container.scenario_catalog.build("three-source"))
result = engine.run(container.config.duration_us)

test_container = TestDIContainer()
test_container.inject_mock("trace_exporter", fake_exporter)
"""
from typing import Optional

from core.config import SimulationConfig, SwitchConfig
from core.models import Scenario
from presentation.report import ReportBuilder, ReportRenderer
from presentation.trace_export import CsvTraceExporter
from services.engine import SimulationEngine
from services.scenario_codec import YamlScenarioCodec
from services.scenarios import ScenarioCatalog


class DIContainer:
    """의존성 주입 컨테이너 (DIP 구현)

    서비스 객체 생성과 공유를 한곳에서 관리.
    """

    def __init__(self, config: Optional[SimulationConfig] = None):
        """컨테이너 초기화

        Args:
            config: 실행 설정 (없으면 기본값)
        """
        self.config = config or SimulationConfig()

        # 지연 로딩
        self._scenario_catalog = None
        self._scenario_codec = None
        self._trace_exporter = None
        self._report_builder = None
        self._report_renderer = None

    # --- Scenario Services ---

    @property
    def scenario_catalog(self) -> ScenarioCatalog:
        """기본 시나리오 레지스트리 (싱글톤)"""
        if self._scenario_catalog is None:
            self._scenario_catalog = ScenarioCatalog()
        return self._scenario_catalog

    @property
    def scenario_codec(self) -> YamlScenarioCodec:
        """시나리오 파일 코덱 (싱글톤)"""
        if self._scenario_codec is None:
            self._scenario_codec = YamlScenarioCodec()
        return self._scenario_codec

    # --- Presentation Services ---

    @property
    def trace_exporter(self) -> CsvTraceExporter:
        """CSV 출력기 (싱글톤)"""
        if self._trace_exporter is None:
            self._trace_exporter = CsvTraceExporter()
        return self._trace_exporter

    @property
    def report_builder(self) -> ReportBuilder:
        if self._report_builder is None:
            self._report_builder = ReportBuilder()
        return self._report_builder

    @property
    def report_renderer(self) -> ReportRenderer:
        if self._report_renderer is None:
            self._report_renderer = ReportRenderer()
        return self._report_renderer

    # --- Factory Methods ---

    def create_engine(self, scenario: Scenario,
                      switch_config: Optional[SwitchConfig] = None,
                      nrm: Optional[int] = None) -> SimulationEngine:
        """새 시뮬레이션 엔진 생성 (팩토리 메서드)

        Args:
            scenario: 실행할 시나리오
            switch_config: 스위치 설정 (없으면 컨테이너 설정)
            nrm: Nrm 덮어쓰기 (없으면 컨테이너 설정)

        Returns:
            한 번 실행할 수 있는 SimulationEngine
        """
        return SimulationEngine(
            scenario,
            switch_config or self.config.switch,
            nrm=nrm if nrm is not None else self.config.nrm,
            sample_period_us=self.config.sample_period_us,
        )

    def reset(self):
        """모든 서비스 인스턴스 초기화"""
        self._scenario_catalog = None
        self._scenario_codec = None
        self._trace_exporter = None
        self._report_builder = None
        self._report_renderer = None


class TestDIContainer(DIContainer):
    """테스트용 DI 컨테이너

    짧은 실행 길이와 모의 객체 주입을 지원.
    """

    __test__ = False

    def __init__(self, config: Optional[SimulationConfig] = None):
        super().__init__(config or SimulationConfig(duration_ms=50.0, out_dir="test-results"))

    def inject_mock(self, service_name: str, mock_object):
        """모의 객체 주입

        Args:
            service_name: 서비스 이름 (예: "trace_exporter")
            mock_object: 주입할 객체
        """
        setattr(self, f"_{service_name}", mock_object)
