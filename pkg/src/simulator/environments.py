from types import MappingProxyType

from model.domain_models import Environment
from model.errors import UnknownEnvironmentError, InvalidEnvironmentError

"""
네 가지 전파 환경 프리셋(시뮬레이션 파라미터 표)과 사용자 정의 환경 검증을 담당합니다.
eta 값은 dB 단위의 초과 손실로 해석하며, 선형 변환은 channel 모듈에서 수행합니다.
"""

PRESETS = MappingProxyType({
    'urban': Environment(name='urban', a=9.61, b=0.16, eta_los_db=1.0, eta_nlos_db=20.0),
    'suburban': Environment(name='suburban', a=4.88, b=0.43, eta_los_db=1.0, eta_nlos_db=21.0),
    'dense-urban': Environment(name='dense-urban', a=12.08, b=0.11, eta_los_db=1.6, eta_nlos_db=23.0),
    'highrise-urban': Environment(name='highrise-urban', a=15.05, b=0.08, eta_los_db=2.3, eta_nlos_db=34.0),
})

PRESET_NAMES = list(PRESETS.keys())


def preset(name: str) -> Environment:
    """
    이름으로 환경 프리셋을 조회합니다.

    :param name: urban, suburban, dense-urban, highrise-urban 중 하나
    :return: 불변 Environment
    """
    try:
        return PRESETS[name]
    except KeyError:
        raise UnknownEnvironmentError(name, PRESET_NAMES) from None


def validate(env: Environment) -> Environment:
    violations = []

    if not env.a > 0:
        violations.append(f"a must be > 0 (got {env.a})")
    if not env.b > 0:
        violations.append(f"b must be > 0 (got {env.b})")
    if not env.eta_los_db >= 0:
        violations.append(f"eta_los_db must be >= 0 (got {env.eta_los_db})")
    if not env.eta_nlos_db >= env.eta_los_db:
        violations.append(f"eta_nlos_db < eta_los_db (eta_nlos_db={env.eta_nlos_db}, eta_los_db={env.eta_los_db})")

    if violations:
        raise InvalidEnvironmentError(violations)
    return env


def resolve(name: str, custom: Environment | None = None) -> Environment:
    """
    프리셋 또는 설정 파일에서 정의한 사용자 환경을 이름으로 찾습니다.
    """
    if custom is not None and custom.name == name:
        return validate(custom)
    if name in PRESETS:
        return PRESETS[name]

    valid_names = PRESET_NAMES + ([custom.name] if custom is not None else [])
    raise UnknownEnvironmentError(name, valid_names)
