"""Discrete-event engine: bookkeeping, causality, determinism and sampling."""

from dataclasses import replace

import pytest

from core.config import SwitchConfig, Variant
from core.errors import ContractViolationError, InvalidArgumentError, ScenarioSemanticError
from core.models import TraceSet
from presentation.trace_export import CsvTraceExporter
from services.engine import (
    Direction,
    SimulationEngine,
    network_model,
    run,
    run_sweep,
    simulate,
)
from services.scenarios import build_three_source


class TestBookkeeping:

    @pytest.mark.parametrize("variant", list(Variant))
    def test_cell_conservation(self, variant):
        result = simulate(build_three_source(), SwitchConfig(variant=variant), 20000.0)
        report = result.conservation_report()
        assert result.conservation_holds(), report
        assert report["injected"] > 0
        assert report["turned_around"] > 0
        for port in result.ports.values():
            assert port.cells_in == port.cells_out + port.queued
            assert port.in_flight >= 0

    def test_every_emitted_cell_enters_the_first_port(self):
        result = simulate(build_three_source(), SwitchConfig(), 10000.0)
        assert result.ports["L1"].cells_in == result.emitted["S1"]
        assert result.ports["L4"].cells_in == result.emitted["S2"]
        assert result.ports["L6"].cells_in == result.emitted["S3"]

    def test_rm_cadence(self, single_link):
        result = simulate(single_link(icrs=(50.0,)), SwitchConfig(), 10000.0)
        emitted = result.emitted["S1"]
        assert result.turned_around <= emitted // 32
        # FRMs emitted in the last ~100 us are still in flight
        assert result.turned_around >= emitted // 32 - 3

    def test_nrm_override(self, single_link):
        result = simulate(single_link(icrs=(50.0,)), SwitchConfig(), 10000.0, nrm=8)
        assert result.turned_around >= result.emitted["S1"] // 8 - 8

    def test_scenario_without_vcs(self, single_link):
        scenario = replace(single_link(), vcs=())
        result = simulate(scenario, SwitchConfig(), 1000.0)
        assert result.emitted == {}
        assert result.delivered == 0
        assert result.conservation_holds()
        assert result.traces.queue["BN"][0] == (0.0, 0.0)


class TestFeedbackCausality:

    @pytest.mark.parametrize("variant", list(Variant))
    def test_er_at_source_is_path_minimum(self, variant):
        result = simulate(build_three_source(), SwitchConfig(variant=variant), 60000.0)
        assert result.brm_received > 0
        assert result.feedback
        assert result.feedback_mismatches == 0
        for sample in result.feedback:
            assert sample.er_at_source == sample.expected
            assert sample.er_at_source <= sample.pcr

    def test_controlled_hops_on_reverse_path(self):
        result = simulate(build_three_source(), SwitchConfig(), 60000.0)
        s1 = [sample for sample in result.feedback if sample.vc == "S1"]
        s2 = [sample for sample in result.feedback if sample.vc == "S2"]
        # S1 crosses L2, L3 and BN under switch control, S2 only L5 and BN
        assert s1 and all(len(sample.computed) == 3 for sample in s1)
        assert s2 and all(len(sample.computed) == 2 for sample in s2)

    def test_no_feedback_before_first_round_trip(self):
        result = simulate(build_three_source(), SwitchConfig(), 60000.0)
        assert min(sample.time for sample in result.feedback) >= 30000.0
        first_change = [t for t, _ in result.traces.acr["S2"] if t > 0.0]
        assert first_change[0] >= 30000.0


class TestDeterminism:

    def test_identical_traces(self):
        config = SwitchConfig(variant=Variant.ERICA_FAIR)
        first = run(build_three_source(), config, 30000.0)
        second = run(build_three_source(), config, 30000.0)
        assert first == second

    def test_byte_identical_csv(self, tmp_path):
        exporter = CsvTraceExporter()
        paths = []
        for attempt in ("a", "b"):
            traces = run(build_three_source(), SwitchConfig(), 30000.0)
            paths.append(exporter.export(traces, tmp_path / attempt))
        assert set(paths[0]) == {"acr", "send_rate", "queue", "neff", "fair_share", "util"}
        for name in paths[0]:
            assert paths[0][name].read_bytes() == paths[1][name].read_bytes(), name

    def test_sweep_runs_are_independent(self):
        configs = [SwitchConfig(variant=variant) for variant in Variant]
        results = run_sweep(build_three_source(), configs, 20000.0)
        assert [r.switch_config.variant for r in results] == list(Variant)
        alone = simulate(build_three_source(), configs[2], 20000.0)
        assert results[2].traces == alone.traces


class TestEngineContract:

    def test_runs_once(self, single_link):
        engine = SimulationEngine(single_link(), SwitchConfig())
        engine.run(1000.0)
        with pytest.raises(ContractViolationError):
            engine.run(1000.0)

    def test_negative_duration(self, single_link):
        with pytest.raises(InvalidArgumentError):
            SimulationEngine(single_link(), SwitchConfig()).run(-1.0)

    def test_sample_period_must_be_positive(self, single_link):
        with pytest.raises(InvalidArgumentError):
            SimulationEngine(single_link(), SwitchConfig(), sample_period_us=0.0)

    def test_invalid_scenario(self, single_link):
        scenario = single_link()
        vcs = (replace(scenario.vcs[0], route=("A1", "Q")),) + scenario.vcs[1:]
        with pytest.raises(ScenarioSemanticError):
            SimulationEngine(replace(scenario, vcs=vcs), SwitchConfig())

    def test_controllers_only_on_switch_ports(self, single_link):
        engine = SimulationEngine(single_link(), SwitchConfig(variant=Variant.NEFF_CCR))
        assert engine.controller("BN").variant is Variant.NEFF_CCR
        assert engine.controller("A1") is None

    def test_zero_duration(self, single_link):
        result = simulate(single_link(icrs=(50.0,)), SwitchConfig(), 0.0)
        assert result.traces.acr["S1"] == [(0.0, 50.0), (0.0, 50.0)]
        assert result.conservation_holds()


class TestTraces:

    def test_acr_starts_at_icr_and_ends_at_duration(self):
        traces = run(build_three_source(), SwitchConfig(), 50000.0)
        assert traces.acr["S3"][0] == (0.0, 105.0)
        assert traces.acr["S3"][-1][0] == 50000.0
        assert traces.send_rate["S1"][0] == (0.0, 10.0)
        assert traces.duration_us == 50000.0

    def test_port_series_keys(self):
        result = simulate(build_three_source(), SwitchConfig(), 10000.0)
        traces = result.traces
        forward = {name for name, p in result.ports.items() if p.direction is Direction.FORWARD}
        controlled = {name for name, p in result.ports.items() if p.controlled}
        assert set(traces.queue) == forward
        assert set(traces.util) == forward
        assert set(traces.neff) == controlled
        assert controlled == {"L2", "L3", "L5", "L7", "BN"}

    def test_sample_grid(self):
        traces = run(build_three_source(), SwitchConfig(interval_max_ms=5.0, interval_cells=10 ** 6), 2000.0)
        times = [t for t, _ in traces.queue["BN"]]
        assert times == pytest.approx([100.0 * k for k in range(21)])

    def test_interval_samples_carry_neff(self):
        traces = run(build_three_source(), SwitchConfig(interval_max_ms=0.25), 1000.0)
        times = [t for t, _ in traces.neff["L2"]]
        assert 250.0 in times and 750.0 in times

    def test_window_edges(self, single_link):
        scenario = single_link(icrs=(50.0, 50.0), app_caps=[42.4, 42.4],
                               windows=[((0.0, float("inf")),), ((2.0, 4.0),)])
        result = simulate(scenario, SwitchConfig(), 6000.0)
        series = result.traces.send_rate["S2"]
        assert TraceSet.value_at(series, 1000.0) == 0.0
        assert TraceSet.value_at(series, 3000.0) == pytest.approx(42.4)
        assert TraceSet.value_at(series, 5000.0) == 0.0
        assert 195 <= result.emitted["S2"] <= 205


class TestUtilization:

    def test_app_limited_source(self, single_link):
        result = simulate(single_link(icrs=(100.0,), app_caps=[50.0]), SwitchConfig(), 20000.0)
        assert result.utilization("BN", 5000.0, 20000.0) == pytest.approx(50.0 / 155.52, rel=0.01)
        assert result.utilization("A1", 5000.0, 20000.0) == pytest.approx(50.0 / 155.52, rel=0.01)

    @pytest.mark.parametrize("port, start, stop", [
        ("BN", 100.0, 100.0),
        ("BN", 0.0, 99999.0),
        ("BN", -5.0, 100.0),
        ("nope", 0.0, 100.0),
    ])
    def test_invalid_windows(self, single_link, port, start, stop):
        result = simulate(single_link(), SwitchConfig(), 1000.0)
        with pytest.raises(InvalidArgumentError):
            result.utilization(port, start, stop)


class TestNetworkModel:

    def test_capacities_and_caps(self):
        net, caps = network_model(build_three_source(), SwitchConfig())
        capacities = dict(net.links)
        assert capacities["L1"] == 155.52
        assert capacities["BN"] == pytest.approx(139.968)
        assert caps == {0: 10.0, 1: 155.52, 2: 155.52}

    def test_capacity_override(self):
        net, _ = network_model(build_three_source(), SwitchConfig(capacity_override=150.0))
        assert dict(net.links)["BN"] == 150.0
