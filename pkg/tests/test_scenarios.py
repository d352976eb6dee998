"""Built-in scenarios, round-trip times and semantic validation."""

import math
from dataclasses import replace

import pytest

from core.config import SwitchConfig
from core.errors import ConfigurationError, ScenarioSemanticError
from core.models import LinkSpec, VcSpec
from services.engine import network_model
from services.maxmin import maxmin_allocate
from services.scenarios import (
    ScenarioCatalog,
    build_three_source,
    build_two_source_transient,
    build_upstream,
    round_trip_time_ms,
    validate_scenario,
)


class TestCatalog:

    def test_names(self, catalog):
        assert catalog.names() == ["three-source", "upstream", "two-source-transient"]

    def test_every_builtin_validates(self, catalog):
        for name in catalog.names():
            scenario = validate_scenario(catalog.build(name))
            assert scenario.name == name

    def test_unknown_name(self, catalog):
        with pytest.raises(ConfigurationError, match="three-source"):
            catalog.build("five-source")


class TestThreeSource:

    def test_round_trip_times(self):
        scenario = build_three_source()
        assert round_trip_time_ms(scenario, "S1") == pytest.approx(40.0)
        assert round_trip_time_ms(scenario, "S2") == pytest.approx(30.0)
        assert round_trip_time_ms(scenario, "S3") == pytest.approx(30.0)

    def test_shared_bottleneck(self):
        scenario = build_three_source()
        assert all(vc.route[-1] == "BN" for vc in scenario.vcs)
        assert scenario.vcs[0].app_cap == 10.0
        assert math.isinf(scenario.vcs[1].app_cap)

    def test_initial_rates_exceed_link(self):
        assert sum(vc.icr for vc in build_three_source().vcs) > 155.52

    def test_oracle(self):
        scenario = build_three_source()
        net, caps = network_model(scenario, SwitchConfig())
        allocation = maxmin_allocate(net, caps)
        assert allocation[0] == pytest.approx(10.0)
        assert allocation[1] == pytest.approx((139.968 - 10.0) / 2)
        assert allocation[2] == pytest.approx(allocation[1])


class TestUpstream:

    def test_shape(self):
        scenario = build_upstream()
        assert len(scenario.vcs) == 17
        assert scenario.vcs[0].route == ("A1", "L1", "L2")
        assert sum("L1" in vc.route for vc in scenario.vcs) == 15
        assert sum("L2" in vc.route for vc in scenario.vcs) == 3

    def test_oracle_with_capacity_override(self):
        scenario = build_upstream()
        net, caps = network_model(scenario, SwitchConfig(capacity_override=150.0))
        allocation = maxmin_allocate(net, caps)
        for vc in range(15):
            assert allocation[vc] == pytest.approx(10.0)
        assert allocation[15] == pytest.approx(70.0)
        assert allocation[16] == pytest.approx(70.0)


class TestTransient:

    def test_windows(self):
        scenario = build_two_source_transient()
        assert scenario.vcs[1].windows == ((60.0, 120.0),)
        assert round_trip_time_ms(scenario, "S1") == pytest.approx(30.0)
        assert round_trip_time_ms(scenario, "S2") == pytest.approx(30.0)


class TestValidation:

    def _with_vc(self, scenario, index, **changes):
        vcs = list(scenario.vcs)
        vcs[index] = replace(vcs[index], **changes)
        return replace(scenario, vcs=tuple(vcs))

    def test_missing_link(self):
        scenario = self._with_vc(build_three_source(), 1, route=("L4", "L9", "BN"))
        with pytest.raises(ScenarioSemanticError) as info:
            validate_scenario(scenario)
        assert info.value.field_path == "vcs.S2.route[1]"

    def test_disconnected_route(self):
        scenario = self._with_vc(build_three_source(), 1, route=("L4", "L7", "BN"))
        with pytest.raises(ScenarioSemanticError, match="disconnected"):
            validate_scenario(scenario)

    def test_route_must_reach_destination(self):
        scenario = self._with_vc(build_three_source(), 1, route=("L4", "L5"))
        with pytest.raises(ScenarioSemanticError, match="destination"):
            validate_scenario(scenario)

    def test_empty_route(self):
        scenario = self._with_vc(build_three_source(), 0, route=())
        with pytest.raises(ScenarioSemanticError, match="empty"):
            validate_scenario(scenario)

    @pytest.mark.parametrize("changes, field", [
        ({"icr": 0.0}, "icr"),
        ({"icr": math.inf}, "icr"),
        ({"app_cap": -1.0}, "app_cap"),
        ({"pcr": 0.0}, "pcr"),
        ({"pcr": math.inf}, "pcr"),
        ({"windows": ((10.0, 5.0),)}, "windows[0]"),
        ({"windows": ((0.0, 50.0), (40.0, 60.0))}, "windows[1]"),
        ({"windows": ((-1.0, 5.0),)}, "windows[0]"),
    ])
    def test_bad_vc_fields(self, changes, field):
        scenario = self._with_vc(build_three_source(), 2, **changes)
        with pytest.raises(ScenarioSemanticError) as info:
            validate_scenario(scenario)
        assert info.value.field_path == f"vcs.S3.{field}"

    def test_bad_link_rate(self):
        scenario = build_three_source()
        links = (LinkSpec("L1", "S1", "SW1", rate=0.0),) + scenario.links[1:]
        with pytest.raises(ScenarioSemanticError) as info:
            validate_scenario(replace(scenario, links=links))
        assert info.value.field_path == "links.L1.rate"

    def test_unknown_node(self):
        scenario = build_three_source()
        links = scenario.links + (LinkSpec("Z", "SW9", "D"),)
        with pytest.raises(ScenarioSemanticError) as info:
            validate_scenario(replace(scenario, links=links))
        assert info.value.field_path == "links.Z.from"

    def test_duplicate_vc(self):
        scenario = build_three_source()
        vcs = scenario.vcs + (VcSpec("S1", ("L1", "L2", "L3", "BN"), icr=5.0),)
        with pytest.raises(ScenarioSemanticError, match="duplicate"):
            validate_scenario(replace(scenario, vcs=vcs))

    def test_nrm_floor(self):
        with pytest.raises(ScenarioSemanticError):
            validate_scenario(replace(build_three_source(), nrm=1))

    @pytest.mark.parametrize("pcr", [0.0, math.inf])
    def test_default_pcr_must_be_finite(self, pcr):
        with pytest.raises(ScenarioSemanticError) as info:
            validate_scenario(replace(build_three_source(), pcr=pcr))
        assert info.value.field_path == "defaults.pcr"

    def test_scenario_without_vcs(self):
        scenario = replace(build_three_source(), vcs=())
        assert validate_scenario(scenario) is scenario
