import math
from abc import ABCMeta, abstractmethod

from model.domain_models import Environment, PathLossParams, UavPose, GroundPoint
from simulator.geometry import slant_distance, elevation_angle_deg
from model.errors import DomainError

SPEED_OF_LIGHT = 299792458.0
DEFAULT_CARRIER_HZ = 2.4e9


class PathLossModel(metaclass=ABCMeta):
    """
    거리 d에서의 기준 채널 이득(초과 손실 적용 전, 선형)을 계산하는 백엔드입니다.
    """
    def __new__(cls, *args, **kwargs):
        if not hasattr(cls, 'instance'):
            cls.instance = super().__new__(cls)
        return cls.instance

    @abstractmethod
    def reference_gain(self, d: float, alpha: float, f_hz: float) -> float:
        pass


class ExponentPathLoss(PathLossModel):
    # d = 1 m에서 이득 1
    def reference_gain(self, d: float, alpha: float, f_hz: float) -> float:
        return d ** (-alpha)


class FsplPathLoss(PathLossModel):
    # 자유 공간 손실, alpha는 2로 고정
    def reference_gain(self, d: float, alpha: float, f_hz: float) -> float:
        return (SPEED_OF_LIGHT / (4 * math.pi * f_hz * d)) ** 2


_BACKENDS = {
    'exponent': ExponentPathLoss,
    'fspl': FsplPathLoss,
}


def get_backend(model: str) -> PathLossModel:
    return _BACKENDS[model]()


def db_to_linear(value_db: float) -> float:
    return 10 ** (value_db / 10)


def p_los(theta_deg: float, env: Environment) -> float:
    """
    고각 theta(도)에서의 LoS 확률입니다.

    :param theta_deg: 0~90도 고각, 범위를 벗어나면 DomainError
    :param env: 전파 환경
    :return: (0, 1) 범위의 확률
    """
    if not 0 <= theta_deg <= 90:
        raise DomainError(f"elevation angle out of range (theta_deg={theta_deg}, expected [0, 90])")

    return 1 / (1 + env.a * math.exp(-env.b * (theta_deg - env.a)))


def p_nlos(theta_deg: float, env: Environment) -> float:
    return 1 - p_los(theta_deg, env)


def _branch_gain(d: float, p: PathLossParams, eta_db: float, f_hz: float) -> float:
    if not d > 0:
        raise DomainError(f"nonpositive distance (d={d})")

    return get_backend(p.model).reference_gain(d, p.alpha, f_hz) * db_to_linear(-eta_db)


def gain_los(d: float, p: PathLossParams, env: Environment, f_hz: float = DEFAULT_CARRIER_HZ) -> float:
    return _branch_gain(d, p, env.eta_los_db, f_hz)


def gain_nlos(d: float, p: PathLossParams, env: Environment, f_hz: float = DEFAULT_CARRIER_HZ) -> float:
    return _branch_gain(d, p, env.eta_nlos_db, f_hz)


def mean_gain(uav: UavPose,
              user: GroundPoint,
              p: PathLossParams,
              env: Environment,
              f_hz: float = DEFAULT_CARRIER_HZ) -> float:
    """
    LoS 확률로 가중한 평균 채널 이득(선형)입니다.
    averaging이 linear이면 두 분기 이득의 가중 평균,
    db이면 두 분기 dB 값의 가중 평균을 선형으로 되돌린 값입니다.
    """
    d = slant_distance(uav, user)
    theta = elevation_angle_deg(uav, user)
    weight = p_los(theta, env)

    g_los = gain_los(d, p, env, f_hz)
    g_nlos = gain_nlos(d, p, env, f_hz)

    if p.averaging == 'linear':
        return weight * g_los + (1 - weight) * g_nlos

    mean_db = weight * 10 * math.log10(g_los) + (1 - weight) * 10 * math.log10(g_nlos)
    return db_to_linear(mean_db)


def mean_path_loss_db(uav: UavPose,
                      user: GroundPoint,
                      p: PathLossParams,
                      env: Environment,
                      f_hz: float = DEFAULT_CARRIER_HZ) -> float:
    return -10 * math.log10(mean_gain(uav, user, p, env, f_hz))
