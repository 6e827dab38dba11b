from pydantic import BaseModel, ConfigDict, Field, model_validator

from model.domain_models import Environment, LinkParams, PathLossParams, ArrayConfig, SweepSpec


class SectionModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')


class SweepSection(SectionModel):
    plos: SweepSpec
    power: SweepSpec


class CoverageSection(SectionModel):
    envs: list[str] = Field(min_length=1)
    n_users: int = Field(ge=0)
    semi_major_m: float = Field(gt=0)
    semi_minor_m: float = Field(gt=0)
    altitude_m: float = Field(gt=0)
    min_rate_bps: float = Field(ge=0)
    beam: bool = True
    phi_start: float = Field(ge=-90, le=90)
    phi_stop: float = Field(ge=-90, le=90)
    phi_step: float = Field(gt=0)

    @model_validator(mode='after')
    def check_phi_grid(self):
        if self.phi_start > self.phi_stop:
            raise ValueError(f"phi_start must be <= phi_stop (phi_start={self.phi_start}, phi_stop={self.phi_stop})")
        return self


class RunConfig(SectionModel):
    """
    실행 설정 전체입니다. 기본값 YAML, 사용자 설정 파일, 명령행 플래그 순으로 덮어써서 만듭니다.
    """
    environment: Environment | None = None
    link: LinkParams
    pathloss: PathLossParams
    array: ArrayConfig
    sweep: SweepSection
    coverage: CoverageSection
    output_path: str | None = None
    seed: int = Field(ge=0, lt=2 ** 64)


# 설정 파일의 섹션 경로 -> 해당 섹션 모델 (알 수 없는 키 안내용)
SECTION_MODELS = {
    '': RunConfig,
    'environment': Environment,
    'link': LinkParams,
    'pathloss': PathLossParams,
    'array': ArrayConfig,
    'sweep': SweepSection,
    'sweep.plos': SweepSpec,
    'sweep.power': SweepSpec,
    'coverage': CoverageSection,
}
