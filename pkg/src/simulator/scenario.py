import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable

import numpy as np

from model.domain_models import (SweepSpec, LinkParams, PathLossParams, ArrayConfig, Environment, UavPose,
                                 GroundPoint, CoverageEllipse, UserField, CoverageReport)
from model.errors import ConfigError
from model.result_models import PlosRow, PowerRow, NoBeamPowerRow
from simulator.channel import p_los
from simulator.environments import resolve
from simulator.linkbudget import link_result
from util.logger import get_logger
from util.utils import sweep_grid

scenario_logger = get_logger(name='scenario')


def _evaluate(func: Callable, points: Iterable, workers: int) -> list:
    # map은 입력 순서대로 결과를 돌려주므로 워커 수와 무관하게 행 순서가 같다
    points = list(points)
    if workers <= 1:
        return [func(point) for point in points]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, points))


def _resolve_envs(spec: SweepSpec, custom: Environment | None) -> list[Environment]:
    names = sorted(set(spec.envs))
    return [resolve(name, custom) for name in names]


def run_plos_sweep(spec: SweepSpec, custom: Environment | None = None, workers: int = 1) -> list[PlosRow]:
    """
    환경별로 고각 격자 위의 LoS 확률을 계산합니다.
    행은 (환경 이름, 고각) 순으로 정렬됩니다.

    :param spec: kind가 plos_vs_elevation인 스윕 명세
    :param custom: 설정 파일에서 정의한 사용자 환경
    :param workers: 동시 평가 스레드 수
    :return: PlosRow 목록
    """
    if spec.kind != 'plos_vs_elevation':
        raise ConfigError(f"sweep.kind must be plos_vs_elevation (got {spec.kind})")

    scenario_logger.info("LoS 확률 스윕 시작")
    envs = _resolve_envs(spec, custom)
    thetas = sweep_grid(spec.start, spec.stop, spec.step)
    points = [(env, theta) for env in envs for theta in thetas]

    rows = _evaluate(lambda point: PlosRow(theta_deg=point[1], env=point[0].name, plos=p_los(point[1], point[0])),
                     points, workers)
    scenario_logger.info(f"LoS 확률 스윕 완료: {len(rows)}행")
    return rows


def _sweep_geometry(spec: SweepSpec, distance: float) -> tuple[UavPose, GroundPoint]:
    if spec.distance_mode == 'ground':
        return UavPose(h=spec.fixed_altitude_m), GroundPoint(x=distance, y=0.0)

    theta = math.radians(spec.fixed_elevation_deg)
    return UavPose(h=distance * math.sin(theta)), GroundPoint(x=distance * math.cos(theta), y=0.0)


def run_power_sweep(spec: SweepSpec,
                    lp: LinkParams,
                    plp: PathLossParams,
                    beam: ArrayConfig,
                    custom: Environment | None = None,
                    workers: int = 1) -> list[PowerRow | NoBeamPowerRow]:
    """
    거리별 수신 전력을 빔포밍 유무로 계산합니다.
    ground 모드는 고정 고도에서 수평 거리를 바꾸고, slant 모드는 고정 고각에서 경사 거리를 바꿉니다.
    빔은 각 사용자의 고각으로 조향(주빔)됩니다.
    """
    if spec.kind != 'power_vs_distance':
        raise ConfigError(f"sweep.kind must be power_vs_distance (got {spec.kind})")

    scenario_logger.info(f"수신 전력 스윕 시작 (mode={spec.distance_mode}, beam={spec.beam_on_off})")
    envs = _resolve_envs(spec, custom)
    distances = sweep_grid(spec.start, spec.stop, spec.step)

    def evaluate_point(point: tuple[Environment, float]):
        env, distance = point
        uav, user = _sweep_geometry(spec, distance)
        nobeam = link_result(uav, user, lp, plp, env)

        if not spec.beam_on_off:
            return NoBeamPowerRow(distance_m=distance,
                                  env=env.name,
                                  theta_deg=nobeam.theta_deg,
                                  prx_nobeam_dbm=nobeam.prx_dbm,
                                  snr_nobeam_db=nobeam.snr_db,
                                  rate_nobeam_bps=nobeam.rate_bps)

        steered = ArrayConfig(m=beam.m, phi_deg=nobeam.theta_deg, gain_model=beam.gain_model)
        beamed = link_result(uav, user, lp, plp, env, steered)
        return PowerRow(distance_m=distance,
                        env=env.name,
                        theta_deg=nobeam.theta_deg,
                        prx_nobeam_dbm=nobeam.prx_dbm,
                        prx_beam_dbm=beamed.prx_dbm,
                        snr_beam_db=beamed.snr_db,
                        rate_beam_bps=beamed.rate_bps)

    rows = _evaluate(evaluate_point, [(env, distance) for env in envs for distance in distances], workers)
    scenario_logger.info(f"수신 전력 스윕 완료: {len(rows)}행")
    return rows


def place_users(n: int, region: CoverageEllipse, seed: int) -> UserField:
    """
    타원 영역 안에 n명의 사용자를 균일하게 배치합니다.
    외접 직사각형에서 뽑은 뒤 타원 밖의 점을 버리는 기각 표본추출이며,
    난수 생성기는 numpy PCG64(seed)입니다. 같은 seed면 좌표가 비트 단위로 같습니다.
    """
    if n < 0:
        raise ConfigError(f"n_users must be >= 0 (got {n})")

    rng = np.random.Generator(np.random.PCG64(seed))
    xs: list[float] = []
    ys: list[float] = []

    while len(xs) < n:
        batch = 2 * (n - len(xs)) + 16
        x = rng.uniform(-region.a_i, region.a_i, size=batch)
        y = rng.uniform(-region.b_i, region.b_i, size=batch)
        inside = (x / region.a_i) ** 2 + (y / region.b_i) ** 2 <= 1
        xs.extend(x[inside].tolist())
        ys.extend(y[inside].tolist())

    users = [GroundPoint(x=x, y=y) for x, y in zip(xs[:n], ys[:n])]
    return UserField(users=users, seed=seed, region=region)


def coverage_report(field: UserField,
                    uav: UavPose,
                    lp: LinkParams,
                    plp: PathLossParams,
                    env: Environment,
                    beam: ArrayConfig | None,
                    min_rate_bps: float) -> CoverageReport:
    per_user = [link_result(uav, user, lp, plp, env, beam) for user in field.users]
    covered = sum(1 for result in per_user if result.rate_bps >= min_rate_bps)

    return CoverageReport(covered_count=covered,
                          total=len(per_user),
                          min_rate_bps=min_rate_bps,
                          per_user=per_user)


def steering_scan(field: UserField,
                  uav: UavPose,
                  lp: LinkParams,
                  plp: PathLossParams,
                  env: Environment,
                  m: int,
                  phi_grid: list[float],
                  min_rate_bps: float,
                  gain_model: str = 'directivity',
                  workers: int = 1) -> list[tuple[float, CoverageReport]]:
    """
    조향각 격자의 각 각도에서 커버리지 보고서를 계산합니다.
    """
    if len(phi_grid) == 0:
        raise ConfigError("coverage.phi grid must not be empty")

    def evaluate_phi(phi: float):
        beam = ArrayConfig(m=m, phi_deg=phi, gain_model=gain_model)
        return phi, coverage_report(field, uav, lp, plp, env, beam, min_rate_bps)

    return _evaluate(evaluate_phi, phi_grid, workers)


def select_best(scan: list[tuple[float, CoverageReport]]) -> tuple[float, CoverageReport]:
    # 커버 수 최대, 동률이면 |phi| 최소, 그다음 phi 최소
    return min(scan, key=lambda item: (-item[1].covered_count, abs(item[0]), item[0]))


def best_steering(field: UserField,
                  uav: UavPose,
                  lp: LinkParams,
                  plp: PathLossParams,
                  env: Environment,
                  m: int,
                  phi_grid: list[float],
                  min_rate_bps: float,
                  gain_model: str = 'directivity',
                  workers: int = 1,
                  on_evaluated: Callable[[float, CoverageReport], None] | None = None) -> tuple[float, CoverageReport]:
    """
    최소 요구 전송률을 만족하는 사용자 수가 최대가 되는 조향각을 격자 전수 탐색으로 찾습니다.

    :param on_evaluated: 격자 순서대로 (조향각, 커버리지 보고서)를 받는 콜백
    :return: (선택된 조향각, 해당 커버리지 보고서)
    """
    scenario_logger.info(f"조향각 탐색 시작: {len(phi_grid)}개 격자점, {len(field.users)}명")
    scan = steering_scan(field, uav, lp, plp, env, m, phi_grid, min_rate_bps, gain_model, workers)
    if on_evaluated is not None:
        for scanned_phi, scanned_report in scan:
            on_evaluated(scanned_phi, scanned_report)

    phi, report = select_best(scan)
    scenario_logger.info(f"조향각 선택: {phi}도, 커버 {report.covered_count}/{report.total}")
    return phi, report
