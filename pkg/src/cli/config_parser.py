import copy

import yaml
from pydantic import ValidationError

from config.config import default_config
from model.config_models import RunConfig, SECTION_MODELS
from model.errors import ConfigError
from simulator.environments import PRESETS, validate, resolve
from util.utils import nearest_key
from util.logger import get_logger

cli_logger = get_logger(name='cli')

_BOUND_MESSAGES = {
    'greater_than': ('>', 'gt'),
    'greater_than_equal': ('>=', 'ge'),
    'less_than': ('<', 'lt'),
    'less_than_equal': ('<=', 'le'),
}


def _merge(base: dict, override: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _load_document(text: str) -> dict:
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        where = f"line {mark.line + 1}" if mark is not None else "unknown line"
        problem = getattr(e, 'problem', None) or str(e)
        raise ConfigError(f"config parse error at {where}: {problem}") from None

    if document is None:
        return {}
    if not isinstance(document, dict):
        raise ConfigError("config parse error at line 1: top level must be a mapping of sections")

    for section, value in document.items():
        if section in SECTION_MODELS and section != '' and value is not None and not isinstance(value, dict):
            raise ConfigError(f"config parse error in section '{section}': expected a mapping")
    return {key: value for key, value in document.items() if value is not None}


def _describe(error: dict) -> str:
    loc = [str(part) for part in error['loc']]
    field = '.'.join(loc)
    ctx = error.get('ctx', {})

    if error['type'] == 'extra_forbidden':
        section = '.'.join(loc[:-1])
        model = SECTION_MODELS.get(section)
        suggestion = nearest_key(loc[-1], list(model.model_fields)) if model is not None else None
        where = f"in {section}" if section else "at top level"
        hint = f" (did you mean '{suggestion}'?)" if suggestion else ""
        return f"unknown key '{loc[-1]}' {where}{hint}"

    if error['type'] in _BOUND_MESSAGES:
        symbol, key = _BOUND_MESSAGES[error['type']]
        return f"{field} must be {symbol} {ctx[key]}"

    if error['type'] == 'literal_error':
        return f"{field} must be one of {ctx['expected']}"

    if error['type'] == 'missing':
        return f"{field} is required"

    if error['type'] == 'too_short':
        return f"{field} must not be empty"

    if error['type'] == 'value_error':
        return f"{field}: {ctx['error']}" if field else str(ctx['error'])

    return f"{field}: {error['msg']}"


def _check_environments(config: RunConfig):
    custom = config.environment
    if custom is not None:
        validate(custom)
        if custom.name in PRESETS and PRESETS[custom.name] != custom:
            raise ConfigError(f"environment.name '{custom.name}' is a preset; custom environments need a new name")

    for name in config.sweep.plos.envs + config.sweep.power.envs + config.coverage.envs:
        resolve(name, custom)


def parse_config(text: str, overrides: dict | None = None) -> RunConfig:
    """
    YAML 설정 문서를 읽어 검증된 RunConfig를 만듭니다.
    우선순위는 overrides(명령행 플래그) > 설정 파일 > 기본값이며,
    알 수 없는 키는 모두 에러입니다.

    :param text: YAML 설정 문서, 빈 문자열이면 기본값
    :param overrides: 설정 파일과 같은 구조의 덮어쓰기 딕셔너리
    :return: RunConfig
    """
    document = _load_document(text)
    merged = _merge(default_config, document)
    if overrides:
        merged = _merge(merged, overrides)

    try:
        config = RunConfig.model_validate(merged)
    except ValidationError as e:
        raise ConfigError("; ".join(_describe(error) for error in e.errors())) from None

    _check_environments(config)
    cli_logger.info("설정 검증 완료")
    return config
