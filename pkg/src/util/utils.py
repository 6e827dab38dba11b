import difflib
import math

import numpy as np


def sweep_grid(start: float, stop: float, step: float) -> list[float]:
    # EX) (0, 90, 5) -> [0, 5, ..., 90], stop 포함
    # 누적 반올림으로 마지막 점이 stop을 넘지 않도록 자른다
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [float(v) for v in np.minimum(start + np.arange(count) * step, stop)]


def nearest_key(key: str, valid_keys: list[str]) -> str | None:
    matches = difflib.get_close_matches(key, valid_keys, n=1, cutoff=0.0)
    return matches[0] if matches else None


def format_float(value: float) -> str:
    """
    CSV와 표준 출력에 쓰는 부동소수점 표기입니다.
    유효숫자 6자리, 이진값 기준 정확 반올림(동률이면 짝수), 로케일 무관.
    """
    if math.isinf(value):
        return '-inf' if value < 0 else 'inf'
    return f'{value:.6g}'
