"""Domain models, trace containers and configuration validation."""

import math

import pytest

from core.config import SimulationConfig, SwitchConfig, Variant
from core.errors import ConfigurationError, ContractViolationError
from core.models import Cell, CellKind, RmPayload, TraceSet
from services.scenarios import build_three_source


class TestCells:

    def test_with_er_returns_new_payload(self):
        payload = RmPayload(ccr=50.0, er=155.52)
        lowered = payload.with_er(70.0)
        assert lowered == RmPayload(ccr=50.0, er=70.0)
        assert payload.er == 155.52

    def test_data_cell_has_no_payload(self):
        cell = Cell(vc=0, kind=CellKind.DATA, emitted_at=0.0, seq=0)
        assert not cell.is_rm

    def test_rm_cell_requires_payload(self):
        with pytest.raises(ContractViolationError):
            Cell(vc=0, kind=CellKind.FORWARD_RM, emitted_at=0.0, seq=31)

    def test_data_cell_rejects_payload(self):
        with pytest.raises(ContractViolationError):
            Cell(vc=0, kind=CellKind.DATA, emitted_at=0.0, seq=0, rm=RmPayload(1.0, 1.0))


class TestScenarioQueries:

    def test_routes_and_control(self):
        scenario = build_three_source()
        assert [link.name for link in scenario.route_of(0)] == ["L1", "L2", "L3", "BN"]
        assert not scenario.is_controlled(scenario.link("L1"))
        assert scenario.is_controlled(scenario.link("BN"))
        assert scenario.vc_names() == ["S1", "S2", "S3"]

    def test_default_pcr(self):
        scenario = build_three_source()
        assert scenario.pcr_of(1) == 155.52

    def test_unknown_link(self):
        with pytest.raises(KeyError):
            build_three_source().link("nope")


class TestTraceSet:

    def test_value_at_is_step_function(self):
        series = [(0.0, 10.0), (5.0, 20.0), (9.0, 30.0)]
        assert TraceSet.value_at(series, 4.9) == 10.0
        assert TraceSet.value_at(series, 5.0) == 20.0
        assert TraceSet.value_at(series, 100.0) == 30.0

    def test_record_port_skips_missing_fields(self):
        traces = TraceSet()
        traces.record_port("L1", 0.0, queue=3, cells_out=7)
        assert traces.queue["L1"] == [(0.0, 3.0)]
        assert traces.cells_out["L1"] == [(0.0, 7.0)]
        assert "L1" not in traces.neff
        assert "L1" not in traces.util

    def test_record_acr_keeps_send_rate(self):
        traces = TraceSet()
        traces.record_acr("S1", 1.0, acr=70.0, send_rate=10.0)
        assert TraceSet.final_value(traces.acr["S1"]) == 70.0
        assert TraceSet.final_value(traces.send_rate["S1"]) == 10.0

    def test_series_between(self):
        series = [(0.0, 1.0), (1.0, 2.0), (2.0, 3.0)]
        assert TraceSet.series_between(series, 0.5, 2.0) == [2.0, 3.0]


class TestSwitchConfig:

    def test_defaults(self):
        config = SwitchConfig()
        assert config.variant is Variant.NEFF_MEASURED
        assert config.target_utilization == 0.9
        assert config.delta == 0.1
        assert config.interval_cells == 100
        assert config.interval_max_us == 1000.0
        assert config.rho_floor == 0.01
        assert config.first_cell_guard

    @pytest.mark.parametrize("changes", [
        {"target_utilization": 0.0},
        {"target_utilization": 1.1},
        {"delta": -0.1},
        {"interval_cells": 0},
        {"interval_max_ms": 0.0},
        {"capacity_override": -5.0},
        {"rate_smoothing": 1.5},
    ])
    def test_rejects_out_of_range(self, changes):
        with pytest.raises(ConfigurationError):
            SwitchConfig(**changes)

    def test_with_overrides_ignores_none(self):
        config = SwitchConfig().with_overrides(delta=None, interval_cells=20)
        assert config.delta == 0.1
        assert config.interval_cells == 20

    def test_variant_lookup(self):
        assert Variant.from_name("erica-fair") is Variant.ERICA_FAIR
        assert Variant.NEFF_CCR.uses_effective_n
        assert not Variant.ERICA_BASIC.uses_effective_n
        with pytest.raises(ConfigurationError, match="known"):
            Variant.from_name("erica-plus")


class TestSimulationConfig:

    def test_units(self):
        config = SimulationConfig(duration_ms=400.0, sample_period_ms=0.1)
        assert config.duration_us == 400000.0
        assert config.sample_period_us == pytest.approx(100.0)

    @pytest.mark.parametrize("changes", [
        {"duration_ms": -1.0},
        {"sample_period_ms": 0.0},
        {"nrm": 1},
        {"duration_ms": math.nan},
    ])
    def test_rejects_invalid(self, changes):
        with pytest.raises(ConfigurationError):
            SimulationConfig(**changes)
