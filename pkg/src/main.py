import argparse
import json
import sys

from cli.config_parser import parse_config
from cli.runner import run, SUBCOMMANDS
from model.errors import SimulationError, ConfigError
from util.logger import get_logger, set_log_level

"""
시뮬레이터의 엔트리포인트입니다.
src 디렉터리에서 실행하세요.

EX) python3 main.py plos-sweep --out ./output/plos.csv --plot
    python3 main.py power-sweep --config my_study.yaml --env urban --m 16
    python3 main.py presets
"""

cli_logger = get_logger(name='cli')

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']


class ArgumentParser(argparse.ArgumentParser):
    # 사용법 오류도 한 줄짜리 JSON 에러로 보고
    def error(self, message: str):
        raise ConfigError(f"{self.prog}: {message}")


def get_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="YAML config file (sections: environment, link, pathloss, array, sweep, coverage)")
    common.add_argument("--out", metavar="PATH", help="output CSV path (default: $TUAV_SIM_OUTPUT_DIR/<subcommand>.csv)")
    common.add_argument("--env", metavar="NAME", action="append", help="environment name, repeatable")
    common.add_argument("--seed", type=int, help="user placement seed")
    common.add_argument("--no-beam", action="store_true", help="disable beamforming")
    common.add_argument("--m", type=int, help="array element count")
    common.add_argument("--phi", type=float, metavar="DEG", help="steering angle in degrees")
    common.add_argument("--plot", action="store_true", help="also write a plotting script next to the CSV")
    common.add_argument("--workers", type=int, default=1, help="threads used to evaluate sweep points")
    common.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="log level written to stderr")

    parser = ArgumentParser(description="Tethered-UAV air-to-ground link and beamforming simulator",
                            formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for subcommand in SUBCOMMANDS:
        subparsers.add_parser(subcommand, parents=[common])
    return parser


def flag_overrides(args: argparse.Namespace) -> dict:
    overrides = {}
    if args.out is not None:
        overrides['output_path'] = args.out
    if args.seed is not None:
        overrides['seed'] = args.seed
    if args.env:
        overrides['sweep'] = {'plos': {'envs': args.env}, 'power': {'envs': args.env}}
        overrides['coverage'] = {'envs': args.env}
    if args.no_beam:
        overrides.setdefault('sweep', {}).setdefault('power', {})['beam_on_off'] = False
        overrides.setdefault('coverage', {})['beam'] = False
    if args.m is not None:
        overrides.setdefault('array', {})['m'] = args.m
    if args.phi is not None:
        overrides.setdefault('array', {})['phi_deg'] = args.phi
    return overrides


def main(argv: list[str] | None = None) -> int:
    try:
        args = get_parser().parse_args(argv)
        if args.log_level:
            set_log_level(args.log_level)

        text = ""
        if args.config:
            try:
                with open(args.config, encoding='UTF-8') as config_file:
                    text = config_file.read()
            except OSError as e:
                raise ConfigError(f"cannot read config file: {e.strerror} ({args.config})")
        config = parse_config(text, flag_overrides(args))
        return run(args.subcommand, config, plot=args.plot, workers=args.workers)
    except SimulationError as e:
        print(json.dumps({"error": e.code, "message": str(e)}), file=sys.stderr)
        return e.exit_code
    except Exception as e:
        cli_logger.debug("처리되지 않은 예외", exc_info=True)
        print(json.dumps({"error": SimulationError.code, "message": str(e)}), file=sys.stderr)
        return SimulationError.exit_code


if __name__ == "__main__":
    sys.exit(main())
