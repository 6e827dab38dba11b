import inspect
import os

import pandas as pd

from util.utils import format_float


def columns_of(row_cls: type) -> list[str]:
    # 행 DTO 생성자의 인자 순서가 곧 CSV 열 순서
    return [name for name in inspect.signature(row_cls).parameters]


def write_rows(rows: list, row_cls: type, path: str) -> str:
    """
    행 DTO 목록을 CSV로 저장합니다.
    쉼표 구분, LF 줄바꿈, 소수점은 항상 '.', 실수는 유효숫자 6자리입니다.

    :param rows: row_cls 인스턴스 목록
    :param row_cls: 행 DTO 클래스(열 순서 결정)
    :param path: 출력 경로
    :return: 저장한 경로
    """
    frame = pd.DataFrame([row.__dict__ for row in rows], columns=columns_of(row_cls))

    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)

    frame.to_csv(path, index=False, lineterminator='\n', float_format=format_float, encoding='utf-8')
    return path
