class SimulationError(Exception):
    """
    시뮬레이터 전체의 기본 예외입니다.
    CLI는 이 예외를 잡아 code/exit_code로 한 줄짜리 에러를 출력합니다.
    """
    code = "runtime_error"
    exit_code = 3


class ConfigError(SimulationError):
    code = "config_error"
    exit_code = 2


class UnknownEnvironmentError(ConfigError):
    def __init__(self, name: str, valid_names: list[str]):
        self.name = name
        self.valid_names = valid_names
        super().__init__(f"unknown environment '{name}' (valid: {', '.join(valid_names)})")


class InvalidEnvironmentError(ConfigError):
    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


class DomainError(SimulationError, ValueError):
    code = "domain_error"
