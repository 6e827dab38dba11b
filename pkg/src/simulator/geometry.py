import math

from model.domain_models import CoverageEllipse, GroundPoint, UavPose, FootprintParams
from model.errors import DomainError


def boundary_x(e: CoverageEllipse, y_i: float) -> tuple[float, float]:
    """
    타원 커버리지 경계에서 y_i에 대응하는 두 x 좌표(+, -)를 반환합니다.

    :param e: 커버리지 타원
    :param y_i: 경계 위 점의 y 좌표(m)
    :return: (+x, -x)
    """
    if abs(y_i) > e.b_i:
        raise DomainError(f"point outside ellipse extent (|y_i|={abs(y_i)} > b_i={e.b_i})")

    x = e.a_i * math.sqrt(1 - y_i ** 2 / e.b_i ** 2)
    return x, -x


def contains(e: CoverageEllipse, p: GroundPoint, center: UavPose) -> bool:
    # 경계 포함
    return ((p.x - center.x) / e.a_i) ** 2 + ((p.y - center.y) / e.b_i) ** 2 <= 1


def boundary_distance(e: CoverageEllipse,
                      ellipse_param: tuple[float, float],
                      user: GroundPoint) -> float:
    """
    타원 경계 파라미터 (x_i, y_i)와 사용자 사이의 거리입니다.
    두 평면 항 모두 타원 파라미터를 쓰는 원래 식 그대로 계산합니다.
    채널 계산에는 slant_distance를 사용하세요.
    """
    x_i, y_i = ellipse_param
    if abs(x_i) > e.a_i or abs(y_i) > e.b_i:
        raise DomainError(f"ellipse parameter outside extent (x_i={x_i}, y_i={y_i})")

    dx = user.x - e.a_i * math.sqrt(1 - y_i ** 2 / e.b_i ** 2)
    dy = user.y - e.b_i * math.sqrt(1 - x_i ** 2 / e.a_i ** 2)
    return math.sqrt(dx ** 2 + dy ** 2 + user.z ** 2)


def planar_offset(uav: UavPose, user: GroundPoint) -> float:
    return math.hypot(user.x - uav.x, user.y - uav.y)


def slant_distance(uav: UavPose, user: GroundPoint) -> float:
    return math.hypot(planar_offset(uav, user), uav.h)


def elevation_angle_deg(uav: UavPose, user: GroundPoint) -> float:
    """
    지상 사용자에서 본 UAV의 고각(도)입니다. 천저(nadir)에서 90도입니다.
    """
    d = slant_distance(uav, user)
    if d <= 0:
        raise DomainError("undefined elevation angle (uav and user coincide)")

    return math.degrees(math.asin(min(1.0, uav.h / d)))


def elevation_footprint(p: FootprintParams) -> float:
    """
    유효 안테나 높이 h_n, 경계 수평 거리 r_k, 고각 빔폭 beta_k(라디안)에 대한
    고각 풋프린트를 계산합니다.

    :param p: 풋프린트 파라미터
    :return: 풋프린트(m)
    """
    if not 0 < p.beta_k < math.pi / 2:
        raise DomainError(f"beam width out of range (beta_k={p.beta_k} rad, expected (0, pi/2))")

    tan_beta = math.tan(p.beta_k)
    return (p.h_n ** 2 + p.r_k ** 2) * tan_beta / (p.h_n + p.r_k * tan_beta)
