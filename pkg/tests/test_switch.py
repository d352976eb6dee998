"""Per-port explicit-rate controllers for the four switch variants."""

import numpy as np
import pytest

from core.config import SwitchConfig, Variant
from core.errors import ProtocolError
from core.models import Cell, CellKind, RmPayload
from core.units import cell_transmission_time
from services.maxmin import DemandProfile, waterfill_level
from services.switch import (
    EricaBasicController,
    EricaFairController,
    NeffCcrController,
    NeffMeasuredController,
    create_port_controller,
)

LINK = 155.52


def _data(vc, seq=0):
    return Cell(vc=vc, kind=CellKind.DATA, emitted_at=0.0, seq=seq)


def _frm(vc, ccr, seq=31):
    return Cell(vc=vc, kind=CellKind.FORWARD_RM, emitted_at=0.0, seq=seq, rm=RmPayload(ccr=ccr, er=LINK))


def _controller(variant, vcs=(0, 1, 2), **changes):
    config = SwitchConfig(variant=variant).with_overrides(**changes)
    return create_port_controller("BN", config, LINK, list(vcs))


def _feed(controller, counts, start, elapsed, ccrs=None):
    """Deliver per-VC cell counts spread over one interval, then close it."""
    now = start
    for vc, count in counts.items():
        for seq in range(count):
            controller.on_data_or_frm_cell(_data(vc, seq), now)
    if ccrs:
        for vc, ccr in ccrs.items():
            controller.on_data_or_frm_cell(_frm(vc, ccr), now)
    controller.end_interval(start + elapsed)
    return start + elapsed


class TestFactory:

    @pytest.mark.parametrize("variant, cls", [
        (Variant.ERICA_BASIC, EricaBasicController),
        (Variant.ERICA_FAIR, EricaFairController),
        (Variant.NEFF_CCR, NeffCcrController),
        (Variant.NEFF_MEASURED, NeffMeasuredController),
    ])
    def test_variant_mapping(self, variant, cls):
        controller = _controller(variant)
        assert type(controller) is cls
        assert controller.variant is variant

    def test_initial_state(self):
        controller = _controller(Variant.NEFF_MEASURED)
        assert controller.state.abr_capacity == pytest.approx(139.968)
        assert controller.state.n_last == 3.0
        assert controller.fair_share == pytest.approx(139.968 / 3)

    def test_capacity_override(self):
        controller = _controller(Variant.NEFF_CCR, capacity_override=150.0)
        assert controller.state.abr_capacity == 150.0

    def test_port_without_vcs(self):
        controller = _controller(Variant.ERICA_BASIC, vcs=())
        assert controller.state.n_last == 1.0


class TestCellArrival:

    def test_first_cell_seen(self):
        controller = _controller(Variant.NEFF_CCR)
        controller.on_data_or_frm_cell(_data(2), 0.0)
        assert controller.state.first_cell_seen[2]
        assert controller.state.vcs_seen == 1
        controller.on_data_or_frm_cell(_data(2, 1), 1.0)
        assert controller.state.vcs_seen == 1

    def test_neff_ccr_reads_ccr_field(self):
        controller = _controller(Variant.NEFF_CCR)
        controller.on_data_or_frm_cell(_frm(0, 50.0), 0.0)
        assert controller.state.ccr[0] == 50.0

    def test_neff_measured_ignores_ccr_field(self):
        controller = _controller(Variant.NEFF_MEASURED)
        controller.on_data_or_frm_cell(_frm(0, 50.0), 0.0)
        assert controller.state.ccr[0] == 0.0

    def test_interval_full_signal(self):
        controller = _controller(Variant.ERICA_BASIC, interval_cells=3)
        assert not controller.on_data_or_frm_cell(_data(0, 0), 0.0)
        assert not controller.on_data_or_frm_cell(_data(0, 1), 0.0)
        assert controller.on_data_or_frm_cell(_data(0, 2), 0.0)

    def test_unknown_vc(self):
        controller = _controller(Variant.ERICA_BASIC)
        with pytest.raises(ProtocolError):
            controller.on_data_or_frm_cell(_data(9), 0.0)
        with pytest.raises(ProtocolError):
            controller.compute_er(9)


class TestEndInterval:

    def test_load_factor_at_link_rate(self):
        controller = _controller(Variant.ERICA_BASIC)
        elapsed = 100 * cell_transmission_time(LINK)
        _feed(controller, {0: 100}, 0.0, elapsed)
        state = controller.state
        assert state.abr_capacity == pytest.approx(139.968)
        assert state.input_rate == pytest.approx(155.52)
        assert state.rho == pytest.approx(1.0 / 0.9)
        assert state.input_cell_count == 0
        assert all(count == 0 for count in state.per_vc_cell_count.values())
        assert state.interval_start == pytest.approx(elapsed)

    def test_idle_interval_hits_rho_floor(self):
        controller = _controller(Variant.ERICA_BASIC)
        _feed(controller, {}, 0.0, 1000.0)
        assert controller.state.rho == 0.01
        assert controller.state.n_last == 1.0
        assert controller.fair_share == pytest.approx(139.968)

    def test_zero_length_interval_is_skipped(self):
        controller = _controller(Variant.ERICA_BASIC)
        controller.on_data_or_frm_cell(_data(0), 0.0)
        controller.end_interval(0.0)
        assert controller.state.input_cell_count == 1
        assert controller.state.intervals_completed == 0

    def test_erica_counts_vcs_with_cells(self):
        controller = _controller(Variant.ERICA_FAIR)
        _feed(controller, {0: 1, 2: 5}, 0.0, 500.0)
        assert controller.n_eff == 2.0
        assert controller.fair_share == pytest.approx(139.968 / 2)

    def test_neff_ccr_stable_allocation(self):
        """CCRs (10, 70, 70) at 150 Mbps stay at F = 70, N = 15/7."""
        controller = _controller(Variant.NEFF_CCR, capacity_override=150.0)
        start = _feed(controller, {0: 1, 1: 1, 2: 1}, 0.0, 500.0, ccrs={0: 10.0, 1: 70.0, 2: 70.0})
        controller.state.n_last = 15.0 / 7.0
        controller.state.n_current = 15.0 / 7.0
        _feed(controller, {0: 1, 1: 1, 2: 1}, start, 500.0)
        assert controller.fair_share == pytest.approx(70.0)
        assert controller.state.n_current == pytest.approx(15.0 / 7.0)

    def test_neff_activity_sum(self):
        controller = _controller(Variant.NEFF_CCR, capacity_override=150.0)
        _feed(controller, {0: 1, 1: 1, 2: 1}, 0.0, 500.0, ccrs={0: 10.0, 1: 50.0, 2: 90.0})
        state = controller.state
        assert state.fair_share == pytest.approx(50.0)
        assert state.n_current == pytest.approx(sum(state.activity.values()))
        assert state.n_current == pytest.approx(2.2)
        assert all(0.0 <= level <= 1.0 for level in state.activity.values())

    def test_first_cell_guard_holds_n_last(self):
        controller = _controller(Variant.NEFF_CCR, capacity_override=150.0)
        _feed(controller, {0: 1}, 0.0, 500.0, ccrs={0: 10.0})
        # only one of three VCs seen so N_last keeps the setup value
        assert controller.state.n_last == 3.0

    def test_guard_disabled(self):
        controller = _controller(Variant.NEFF_CCR, capacity_override=150.0, first_cell_guard=False)
        start = _feed(controller, {0: 1}, 0.0, 500.0, ccrs={0: 10.0})
        _feed(controller, {0: 1}, start, 500.0)
        assert controller.state.n_last == 1.0

    def test_neff_measured_rate_estimate(self):
        controller = _controller(Variant.NEFF_MEASURED, vcs=(0, 1))
        _feed(controller, {0: 10, 1: 50}, 0.0, 424.0)
        assert controller.state.ccr[0] == pytest.approx(10.0)
        assert controller.state.ccr[1] == pytest.approx(50.0)

    def test_measured_rate_smoothing(self):
        controller = _controller(Variant.NEFF_MEASURED, vcs=(0,), rate_smoothing=0.5)
        start = _feed(controller, {0: 10}, 0.0, 424.0)
        _feed(controller, {0: 30}, start, 424.0)
        assert controller.state.ccr[0] == pytest.approx(20.0)

    def test_n_last_never_below_one(self):
        rng = np.random.default_rng(42)
        for variant in Variant:
            controller = _controller(variant)
            now = 0.0
            for _ in range(50):
                counts = {vc: int(rng.integers(0, 40)) for vc in range(3)}
                ccrs = {vc: float(rng.uniform(0.0, 155.52)) for vc in range(3)}
                now = _feed(controller, counts, now, float(rng.uniform(50.0, 1000.0)), ccrs)
                assert controller.state.n_last >= 1.0
                assert controller.state.vcs_seen == sum(controller.state.first_cell_seen.values())


class TestComputeEr:

    def _primed(self, variant, fair_share, rho, ccr, max_alloc_previous=0.0):
        controller = _controller(variant, capacity_override=150.0)
        state = controller.state
        state.fair_share = fair_share
        state.rho = rho
        state.ccr[1] = ccr
        state.max_alloc_previous = max_alloc_previous
        return controller

    def test_vc_share_dominates(self):
        controller = self._primed(Variant.ERICA_BASIC, 50.0, 1.2, 90.0)
        assert controller.compute_er(1) == pytest.approx(75.0)

    def test_all_terms_equal(self):
        controller = self._primed(Variant.ERICA_BASIC, 50.0, 1.0, 50.0)
        assert controller.compute_er(1) == pytest.approx(50.0)

    def test_erica_fair_uses_max_alloc_previous(self):
        controller = self._primed(Variant.ERICA_FAIR, 50.0, 1.0, 60.0, max_alloc_previous=90.0)
        assert controller.compute_er(1) == pytest.approx(90.0)
        assert controller.state.max_alloc_current == pytest.approx(60.0)

    def test_remembered_allocation_does_not_ratchet(self):
        controller = self._primed(Variant.ERICA_FAIR, 50.0, 1.0, 60.0, max_alloc_previous=90.0)
        now = 0.0
        for _ in range(5):
            assert controller.compute_er(1) == pytest.approx(max(60.0, controller.state.max_alloc_previous))
            for vc in (0, 1, 2):
                controller.state.per_vc_cell_count[vc] = 1
            controller.state.input_cell_count = 3
            now += 1000.0
            controller.end_interval(now)
            controller.state.rho = 1.0
        # one interval later the memory holds only basic allocations
        assert controller.state.max_alloc_previous == pytest.approx(60.0)

    def test_overload_memory_tracks_basic_allocation(self):
        controller = self._primed(Variant.ERICA_FAIR, 50.0, 1.5, 90.0, max_alloc_previous=120.0)
        assert controller.compute_er(1) == pytest.approx(60.0)
        assert controller.state.max_alloc_current == pytest.approx(60.0)

    def test_erica_basic_stays_stuck(self):
        controller = self._primed(Variant.ERICA_BASIC, 50.0, 1.0, 60.0, max_alloc_previous=90.0)
        assert controller.compute_er(1) == pytest.approx(60.0)

    def test_erica_fair_outside_band(self):
        controller = self._primed(Variant.ERICA_FAIR, 50.0, 1.5, 60.0, max_alloc_previous=90.0)
        assert controller.compute_er(1) == pytest.approx(50.0)

    def test_capped_at_abr_capacity(self):
        controller = self._primed(Variant.ERICA_BASIC, 50.0, 0.01, 60.0)
        assert controller.compute_er(1) == pytest.approx(150.0)

    def test_max_alloc_roll_over(self):
        controller = self._primed(Variant.ERICA_FAIR, 50.0, 1.0, 60.0)
        controller.compute_er(1)
        controller.state.input_cell_count = 1
        controller.end_interval(1000.0)
        assert controller.state.max_alloc_previous == pytest.approx(60.0)
        assert controller.state.max_alloc_current == controller.state.fair_share


class TestBackwardRm:

    @pytest.mark.parametrize("incoming, expected", [(155.52, 70.0), (40.0, 40.0), (70.0, 70.0)])
    def test_er_only_decreases(self, incoming, expected):
        controller = _controller(Variant.ERICA_BASIC, capacity_override=150.0)
        controller.state.fair_share = 70.0
        controller.state.rho = 1.0
        decision, payload = controller.on_brm_cell(RmPayload(ccr=10.0, er=incoming), 1)
        assert decision.computed == pytest.approx(70.0)
        assert decision.er_out == pytest.approx(expected)
        assert payload.er == decision.er_out
        assert payload.ccr == 10.0

    def test_er_bounded_on_random_state(self):
        rng = np.random.default_rng(42)
        for variant in Variant:
            controller = _controller(variant)
            now = 0.0
            for _ in range(30):
                counts = {vc: int(rng.integers(0, 60)) for vc in range(3)}
                now = _feed(controller, counts, now, float(rng.uniform(100.0, 1000.0)),
                            {vc: float(rng.uniform(1.0, 155.52)) for vc in range(3)})
                for vc in range(3):
                    incoming = float(rng.uniform(1.0, 155.52))
                    decision, _ = controller.on_brm_cell(RmPayload(ccr=1.0, er=incoming), vc)
                    assert 0.0 < decision.er_out <= min(incoming, controller.state.abr_capacity) + 1e-12


class TestSymmetricLoadAgreement:
    """Identical persistent sources lead every variant to capacity / N."""

    def test_open_loop_fixed_point(self):
        capacity = 139.968
        expected = waterfill_level(DemandProfile(caps=(float("inf"),) * 3, capacity=capacity))
        for variant in Variant:
            controller = _controller(variant)
            now = 0.0
            rate = expected
            for _ in range(40):
                elapsed = 1000.0
                cells = int(round(rate * elapsed / 424.0))
                now = _feed(controller, {0: cells, 1: cells, 2: cells}, now, elapsed,
                            {vc: rate for vc in range(3)})
                rate = controller.compute_er(0)
            assert controller.fair_share == pytest.approx(expected, rel=0.05), variant
