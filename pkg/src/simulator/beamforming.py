import math

import numpy as np

from model.domain_models import ArrayConfig
from model.errors import DomainError

"""
반파장 간격 균일 선형 배열(ULA)의 배열 계수와 빔포밍 이득입니다.
고각 단면만 다루며, 소자 간격은 반파장으로 고정됩니다.
"""

# 패턴 null에서의 이득(dB) 표식
NULL_GAIN_DB = -math.inf

_SINGULAR_EPS = 1e-12
# 이 값 미만의 배열 이득은 부동소수점 오차 안의 null로 취급
_NULL_EPS = 1e-20


def _check_angle(theta_deg: float):
    if not -90 <= theta_deg <= 90:
        raise DomainError(f"observation angle out of range (theta_deg={theta_deg}, expected [-90, 90])")


def array_response(u: float, m: int) -> float:
    """
    u = sin(theta) - sin(phi)에 대한 부호 있는 정규화 진폭
    sin(M*pi/2*u) / (M*sin(pi/2*u))를 반환합니다.
    주빔(u=0)과 격자엽(|u|=2)에서는 극한값을 사용합니다.
    """
    denominator = math.sin(math.pi / 2 * u)
    if abs(u) < _SINGULAR_EPS or abs(abs(u) - 2) < _SINGULAR_EPS:
        # 극한: cos(M*pi/2*u) / cos(pi/2*u)
        return math.cos(m * math.pi / 2 * u) / math.cos(math.pi / 2 * u)

    return math.sin(m * math.pi / 2 * u) / (m * denominator)


def array_factor(theta_deg: float, cfg: ArrayConfig) -> float:
    """
    관측각 theta에서의 정규화 전력 배열 이득(0~1)입니다.

    :param theta_deg: 관측각(도), [-90, 90]
    :param cfg: 배열 설정(소자 수, 조향각)
    :return: |a(theta)^H w(phi)|^2 / M^2
    """
    _check_angle(theta_deg)

    u = math.sin(math.radians(theta_deg)) - math.sin(math.radians(cfg.phi_deg))
    if abs(u) < _SINGULAR_EPS or abs(abs(u) - 2) < _SINGULAR_EPS:
        return 1.0

    return min(1.0, array_response(u, cfg.m) ** 2)


def array_factor_oracle(theta_deg: float, cfg: ArrayConfig) -> float:
    """
    조향 벡터와 배열 응답 벡터의 M항 복소 내적으로 배열 이득을 직접 계산합니다.
    닫힌 식(array_factor) 검증용입니다.
    """
    _check_angle(theta_deg)

    n = np.arange(cfg.m)
    steering = np.exp(1j * np.pi * n * math.sin(math.radians(cfg.phi_deg)))
    response = np.exp(1j * np.pi * n * math.sin(math.radians(theta_deg)))

    return float(np.abs(np.vdot(response, steering)) ** 2 / cfg.m ** 2)


def beamforming_gain_db(theta_deg: float, cfg: ArrayConfig) -> float:
    """
    directivity 모델은 총 방사 전력을 보존(주빔 이득 M),
    coherent 모델은 소자별 전력의 동위상 결합(주빔 이득 M^2)입니다.
    정확한 null에서는 NULL_GAIN_DB를 반환합니다.
    """
    af = array_factor(theta_deg, cfg)
    if af < _NULL_EPS:
        return NULL_GAIN_DB

    scale = cfg.m if cfg.gain_model == 'directivity' else cfg.m ** 2
    return 10 * math.log10(scale * af)
