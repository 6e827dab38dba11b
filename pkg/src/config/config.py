import os

import yaml

_CONFIG_DIR = os.path.dirname(os.path.abspath(__file__))

with open(os.path.join(_CONFIG_DIR, "simulation_config.yaml"), encoding='UTF-8') as yml:
    default_config = yaml.full_load(yml)

# 출력 파일 기본 디렉터리
OUTPUT_DIR_ENV = "TUAV_SIM_OUTPUT_DIR"


def default_output_path(subcommand: str) -> str:
    return os.path.join(os.environ.get(OUTPUT_DIR_ENV, "."), f"{subcommand}.csv")
