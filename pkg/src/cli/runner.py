from config.config import default_output_path
from model.config_models import RunConfig
from model.domain_models import CoverageEllipse, UavPose
from model.errors import ConfigError
from model.result_models import PlosRow, PowerRow, NoBeamPowerRow, CoverageRow, SteeringRow
from simulator.environments import PRESETS, resolve
from simulator.scenario import run_plos_sweep, run_power_sweep, place_users, coverage_report, best_steering
from cli.csv_writer import write_rows
from cli.plot_script import write_plot_script
from util.logger import get_logger
from util.utils import sweep_grid, format_float

SUBCOMMANDS = ['plos-sweep', 'power-sweep', 'coverage', 'best-steering', 'presets']

cli_logger = get_logger(name='cli')


def presets_lines() -> list[str]:
    return [f"{env.name} a={format_float(env.a)} b={format_float(env.b)} "
            f"eta_los_db={format_float(env.eta_los_db)} eta_nlos_db={format_float(env.eta_nlos_db)}"
            for env in PRESETS.values()]


def _coverage_setup(config: RunConfig):
    section = config.coverage
    region = CoverageEllipse(a_i=section.semi_major_m, b_i=section.semi_minor_m)
    field = place_users(section.n_users, region, config.seed)
    uav = UavPose(h=section.altitude_m)
    envs = [resolve(name, config.environment) for name in sorted(set(section.envs))]
    return field, uav, envs


def _coverage_rows(config: RunConfig) -> list[CoverageRow]:
    field, uav, envs = _coverage_setup(config)
    beam = config.array if config.coverage.beam else None
    rows = []

    for env in envs:
        report = coverage_report(field, uav, config.link, config.pathloss, env, beam, config.coverage.min_rate_bps)
        cli_logger.info(f"[{env.name}] 커버리지 {report.covered_count}/{report.total}")
        for idx, (user, result) in enumerate(zip(field.users, report.per_user)):
            rows.append(CoverageRow(user_id=idx,
                                    env=env.name,
                                    x_m=user.x,
                                    y_m=user.y,
                                    distance_m=result.distance_m,
                                    theta_deg=result.theta_deg,
                                    plos=result.plos,
                                    prx_dbm=result.prx_dbm,
                                    snr_db=result.snr_db,
                                    rate_bps=result.rate_bps,
                                    covered=int(result.rate_bps >= report.min_rate_bps)))
    return rows


def _steering_rows(config: RunConfig, workers: int) -> list[SteeringRow]:
    field, uav, envs = _coverage_setup(config)
    section = config.coverage
    phi_grid = sweep_grid(section.phi_start, section.phi_stop, section.phi_step)
    rows = []

    for env in envs:
        scan = []
        best_phi, best_report = best_steering(field, uav, config.link, config.pathloss, env, config.array.m, phi_grid,
                                              section.min_rate_bps, config.array.gain_model, workers,
                                              on_evaluated=lambda phi, report: scan.append((phi, report)))
        cli_logger.info(f"[{env.name}] 최적 조향각 {best_phi}도, 커버 {best_report.covered_count}/{best_report.total}")
        for phi, report in scan:
            rows.append(SteeringRow(env=env.name,
                                    phi_deg=phi,
                                    covered_count=report.covered_count,
                                    total=report.total,
                                    selected=int(phi == best_phi)))
    return rows


def run(subcommand: str, config: RunConfig, plot: bool = False, workers: int = 1) -> int:
    """
    하위 명령을 실행하고 결과 CSV를 저장합니다.
    계산이 모두 끝난 뒤에 파일을 씁니다.

    :param subcommand: plos-sweep, power-sweep, coverage, best-steering, presets
    :param config: 검증된 실행 설정
    :param plot: True면 CSV 옆에 플롯 스크립트도 생성
    :param workers: 스윕 동시 평가 스레드 수
    :return: 종료 코드
    """
    if subcommand not in SUBCOMMANDS:
        raise ConfigError(f"unknown subcommand '{subcommand}' (valid: {', '.join(SUBCOMMANDS)})")

    if subcommand == 'presets':
        for line in presets_lines():
            print(line)
        return 0

    cli_logger.info(f"{subcommand} 실행")
    if subcommand == 'plos-sweep':
        rows, row_cls = run_plos_sweep(config.sweep.plos, config.environment, workers), PlosRow
    elif subcommand == 'power-sweep':
        rows = run_power_sweep(config.sweep.power, config.link, config.pathloss, config.array,
                               config.environment, workers)
        row_cls = PowerRow if config.sweep.power.beam_on_off else NoBeamPowerRow
    elif subcommand == 'coverage':
        rows, row_cls = _coverage_rows(config), CoverageRow
    else:
        rows, row_cls = _steering_rows(config, workers), SteeringRow

    path = write_rows(rows, row_cls, config.output_path or default_output_path(subcommand))
    cli_logger.info(f"CSV 저장: {path} ({len(rows)}행)")

    if plot:
        script_path = write_plot_script(subcommand, path)
        cli_logger.info(f"플롯 스크립트 저장: {script_path}")
    return 0
