"""
---
title: "Command-Line Application Layer"
description: "argparse front end of the ABR simulator. Subcommands run (simulate a scenario and write CSV traces plus a report), validate (check a scenario file) and oracle (print the max-min allocation). Maps domain errors onto exit codes."
architect: "ABR Simulator Team"
authors: ["ABR Simulator Team"]
reviewed_by: "ABR Simulator Team"
created_date: "2026-09-30"
last_modified: "2026-10-17"
version: "1.0.0"
module_type: "Presentation Layer"
dependencies: ["argparse", "logging", "re", "sys", "pathlib", "typing", "core.config", "core.errors", "core.models", "services.engine", "services.maxmin", "services.scenarios", "di_container"]
key_classes: ["AbrSimulatorApp"]
key_functions: ["run", "build_parser", "parse_duration_ms"]
design_patterns: ["Command Pattern", "Facade Pattern"]
solid_principles: ["SRP - Single Responsibility Principle", "DIP - Dependency Inversion Principle"]
features: ["Subcommands", "Duration Units", "Exit Codes", "Log Level Flag"]
tags: ["cli", "argparse", "presentation", "entry"]
---

app.py - Command-Line Application Layer

    run       --scenario NAME | --file PATH  [switch flags] --duration 400ms --out DIR
    validate  --scenario NAME | --file PATH
    oracle    --scenario NAME | --file PATH  [switch flags]

Switch flags: --variant, --target-util, --delta, --interval-cells,
--interval-max, --capacity-override, --nrm. Durations accept "400ms",
"0.4s", "250us" or a plain number of milliseconds.

Exit codes:
    0  success
    2  usage, configuration or scenario error
    3  output could not be written
"""
import argparse
import logging
import re
import sys
from pathlib import Path
from typing import List, Optional

from core.config import Variant
from core.errors import ConfigurationError, InvalidArgumentError, OutputError
from core.models import Scenario
from di_container import DIContainer
from services.engine import network_model
from services.maxmin import LinkState, bottleneck_profile, maxmin_allocate, neff_fixed_point, waterfill_level
from services.scenarios import round_trip_time_ms, validate_scenario

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
_DURATION = re.compile(r"^\s*(?P<value>\d+(?:\.\d*)?|\.\d+)\s*(?P<unit>ms|s|us)?\s*$")
_UNIT_TO_MS = {"ms": 1.0, None: 1.0, "s": 1000.0, "us": 0.001}


def parse_duration_ms(text: str) -> float:
    """"400ms", "0.4s", "250us", "400" 형식을 ms로 변환

    Raises:
        argparse.ArgumentTypeError: 해석할 수 없는 값
    """
    match = _DURATION.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"invalid duration '{text}' (use e.g. 400ms, 0.4s or 400)")
    return float(match.group("value")) * _UNIT_TO_MS[match.group("unit")]


class AbrSimulatorApp:
    """ABR 시뮬레이터 CLI 애플리케이션"""

    def __init__(self, container: DIContainer):
        """애플리케이션 초기화

        Args:
            container: 서비스 컨테이너
        """
        self.container = container
        self.out = sys.stdout

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="abrsim",
            description="Cell-level simulator for ATM ABR explicit-rate switch algorithms.",
        )
        commands = parser.add_subparsers(dest="command", required=True)

        source = argparse.ArgumentParser(add_help=False)
        group = source.add_mutually_exclusive_group(required=True)
        group.add_argument("--scenario", help=f"built-in scenario ({', '.join(self.container.scenario_catalog.names())})")
        group.add_argument("--file", type=Path, help="YAML scenario file")
        source.add_argument("--log-level", type=str.upper, default=None,
                            choices=["DEBUG", "INFO", "WARNING", "ERROR"])

        switch = argparse.ArgumentParser(add_help=False)
        switch.add_argument("--variant", choices=[v.value for v in Variant])
        switch.add_argument("--target-util", type=float, help="target utilization in (0, 1]")
        switch.add_argument("--delta", type=float, help="MaxAllocPrevious band")
        switch.add_argument("--interval-cells", type=int, help="cells per measurement interval")
        switch.add_argument("--interval-max", type=parse_duration_ms, help="measurement interval cap")
        switch.add_argument("--capacity-override", type=float, help="fixed ABR capacity in Mbps")
        switch.add_argument("--nrm", type=int, help="cells per forward RM cell")

        run = commands.add_parser("run", parents=[source, switch], help="simulate and write traces")
        run.add_argument("--duration", type=parse_duration_ms, help="run length (default 400ms)")
        run.add_argument("--out", type=Path, help="output directory for the CSV traces and the text report file named report")
        run.set_defaults(handler=self._cmd_run)

        validate = commands.add_parser("validate", parents=[source], help="check a scenario")
        validate.set_defaults(handler=self._cmd_validate)

        oracle = commands.add_parser("oracle", parents=[source, switch], help="print the max-min allocation")
        oracle.set_defaults(handler=self._cmd_oracle)
        return parser

    def run(self, argv: Optional[List[str]] = None) -> int:
        """명령 실행

        Args:
            argv: 명령행 인자 (None이면 sys.argv)

        Returns:
            종료 코드
        """
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_OK if not exc.code else EXIT_USAGE
        try:
            self._configure_logging(args.log_level or self.container.config.log_level)
            return args.handler(args)
        except OutputError as exc:
            logger.error("%s", exc)
            return EXIT_IO
        except (ConfigurationError, InvalidArgumentError) as exc:
            logger.error("%s", exc)
            return EXIT_USAGE

    # --- 명령 ---

    def _cmd_run(self, args: argparse.Namespace) -> int:
        config = self.container.config
        scenario = self._load_scenario(args)
        switch_config = self._switch_config(args)
        duration_ms = args.duration if args.duration is not None else config.duration_ms
        out_dir = args.out if args.out is not None else Path(config.out_dir)
        config = config.with_overrides(switch=switch_config, duration_ms=duration_ms, nrm=args.nrm)

        engine = self.container.create_engine(scenario, switch_config, nrm=config.nrm)
        result = engine.run(config.duration_us)

        self.container.trace_exporter.export(result.traces, out_dir)
        report = self.container.report_builder.build(result)
        self.container.report_renderer.write(report, out_dir)
        self.out.write(self.container.report_renderer.render(report))
        return EXIT_OK

    def _cmd_validate(self, args: argparse.Namespace) -> int:
        scenario = self._load_scenario(args)
        self.out.write(f"{scenario.name}: ok ({len(scenario.nodes)} nodes, "
                       f"{len(scenario.links)} links, {len(scenario.vcs)} vcs)\n")
        for vc in scenario.vcs:
            self.out.write(f"  {vc.name}: {' -> '.join(vc.route)} "
                           f"rtt {round_trip_time_ms(scenario, vc.name):.3f} ms\n")
        return EXIT_OK

    def _cmd_oracle(self, args: argparse.Namespace) -> int:
        scenario = self._load_scenario(args)
        net, caps = network_model(scenario, self._switch_config(args))
        allocation = maxmin_allocate(net, caps)

        for index, rate in allocation.items():
            self.out.write(f"{scenario.vcs[index].name} {rate:.6f}\n")
        for link in scenario.links:
            if not scenario.is_controlled(link):
                continue
            profile = bottleneck_profile(net, allocation, link.name)
            if profile is None:
                logger.warning("link %s is not saturated by the max-min allocation", link.name)
                self.out.write(f"link {link.name} unsaturated\n")
                continue
            level = waterfill_level(profile)
            if level is LinkState.UNSATURATED:
                self.out.write(f"link {link.name} unsaturated\n")
                continue
            n_eff = neff_fixed_point(profile).n_eff
            self.out.write(f"link {link.name} level {level:.6f} neff {n_eff:.6f}\n")
        return EXIT_OK

    # --- 도우미 ---

    def _load_scenario(self, args: argparse.Namespace) -> Scenario:
        if args.file is not None:
            return self.container.scenario_codec.load(args.file)
        return validate_scenario(self.container.scenario_catalog.build(args.scenario))

    def _switch_config(self, args: argparse.Namespace):
        variant = Variant.from_name(args.variant) if args.variant else None
        return self.container.config.switch.with_overrides(
            variant=variant,
            target_utilization=args.target_util,
            delta=args.delta,
            interval_cells=args.interval_cells,
            interval_max_ms=args.interval_max,
            capacity_override=args.capacity_override,
        )

    @staticmethod
    def _configure_logging(level_name: str):
        level = logging.getLevelName(level_name.upper())
        if not isinstance(level, int):
            raise ConfigurationError(f"unknown log level '{level_name}'")
        logging.basicConfig(level=level, format=LOG_FORMAT)
        logging.getLogger().setLevel(level)
