import math

from model.domain_models import LinkParams, PathLossParams, Environment, UavPose, GroundPoint, ArrayConfig, LinkResult
from simulator.beamforming import beamforming_gain_db
from simulator.channel import mean_path_loss_db, p_los
from simulator.geometry import slant_distance, elevation_angle_deg

# 1 Hz 대역폭, 290 K 기준 열잡음 전력 밀도(dBm/Hz)
THERMAL_NOISE_DBM_HZ = -174.0


def noise_power_dbm(lp: LinkParams) -> float:
    return THERMAL_NOISE_DBM_HZ + 10 * math.log10(lp.b_hz) + lp.nf_db


def received_power_dbm(uav: UavPose,
                       user: GroundPoint,
                       lp: LinkParams,
                       plp: PathLossParams,
                       env: Environment,
                       beam: ArrayConfig | None = None) -> float:
    """
    수신 전력(dBm) = 송신 전력 + 송수신 안테나 이득 + 빔포밍 이득 - 평균 경로 손실
    빔포밍 이득은 사용자의 고각을 관측각으로 사용합니다.
    빔 패턴 null이면 -inf를 반환합니다.

    :param beam: None이면 빔포밍 없이 계산
    """
    antenna_gain_db = lp.gt_dbi + lp.gr_dbi if lp.include_antenna_gains else 0.0
    beam_gain_db = 0.0
    if beam is not None:
        beam_gain_db = beamforming_gain_db(elevation_angle_deg(uav, user), beam)
        if math.isinf(beam_gain_db):
            return beam_gain_db

    return lp.pt_dbm + antenna_gain_db + beam_gain_db - mean_path_loss_db(uav, user, plp, env, lp.f_hz)


def snr_db(prx_dbm: float, lp: LinkParams) -> float:
    return prx_dbm - noise_power_dbm(lp)


def rate_bps(snr: float, lp: LinkParams) -> float:
    # 섀넌 용량, 마진 없음
    if math.isinf(snr) and snr < 0:
        return 0.0
    return lp.b_hz * math.log2(1 + 10 ** (snr / 10))


def link_result(uav: UavPose,
                user: GroundPoint,
                lp: LinkParams,
                plp: PathLossParams,
                env: Environment,
                beam: ArrayConfig | None = None) -> LinkResult:
    theta = elevation_angle_deg(uav, user)
    prx = received_power_dbm(uav, user, lp, plp, env, beam)
    snr = snr_db(prx, lp)

    return LinkResult(prx_dbm=prx,
                      snr_db=snr,
                      rate_bps=rate_bps(snr, lp),
                      plos=p_los(theta, env),
                      distance_m=slant_distance(uav, user),
                      theta_deg=theta)
