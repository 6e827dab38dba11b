from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ValueModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')


class Environment(ValueModel):
    """
    전파 환경 프리셋입니다.
    a, b는 LoS 확률 S-커브의 파라미터, eta 값은 LoS/NLoS 링크의 초과 손실(dB)입니다.
    불변 조건 검사는 environments.validate가 담당합니다.
    """
    name: str
    a: float
    b: float
    eta_los_db: float
    eta_nlos_db: float


class CoverageEllipse(ValueModel):
    a_i: float = Field(gt=0)
    b_i: float = Field(gt=0)


class GroundPoint(ValueModel):
    x: float
    y: float
    z: float = Field(default=0.0, ge=0)


class UavPose(ValueModel):
    x: float = 0.0
    y: float = 0.0
    h: float = Field(gt=0)


class FootprintParams(ValueModel):
    # beta_k는 라디안, 범위 검사는 geometry.elevation_footprint에서 수행
    h_n: float = Field(gt=0)
    r_k: float = Field(ge=0)
    beta_k: float


class PathLossParams(ValueModel):
    alpha: float = Field(default=2.0, ge=1)
    model: Literal['exponent', 'fspl'] = 'fspl'
    averaging: Literal['linear', 'db'] = 'linear'


class ArrayConfig(ValueModel):
    m: int = Field(default=8, ge=1)
    phi_deg: float = Field(default=0.0, ge=-90, le=90)
    gain_model: Literal['directivity', 'coherent'] = 'directivity'


class LinkParams(ValueModel):
    pt_dbm: float = 20.0
    gt_dbi: float = 10.0
    gr_dbi: float = 10.0
    f_hz: float = Field(default=2.4e9, gt=0)
    b_hz: float = Field(default=10e6, gt=0)
    nf_db: float = Field(default=5.0, ge=0)
    include_antenna_gains: bool = True


class LinkResult(ValueModel):
    prx_dbm: float
    snr_db: float
    rate_bps: float = Field(ge=0)
    plos: float = Field(ge=0, le=1)
    distance_m: float
    theta_deg: float


class SweepSpec(ValueModel):
    kind: Literal['plos_vs_elevation', 'power_vs_distance']
    envs: list[str] = Field(min_length=1)
    start: float
    stop: float
    step: float = Field(gt=0)
    fixed_altitude_m: float = Field(default=100.0, gt=0)
    beam_on_off: bool = True
    distance_mode: Literal['ground', 'slant'] = 'ground'
    fixed_elevation_deg: float = Field(default=30.0, gt=0, le=90)

    @model_validator(mode='after')
    def check_bounds(self):
        if self.start >= self.stop:
            raise ValueError(f"start must be < stop (start={self.start}, stop={self.stop})")
        if self.kind == 'plos_vs_elevation' and not (0 <= self.start and self.stop <= 90):
            raise ValueError(f"elevation bounds must lie within [0, 90] (start={self.start}, stop={self.stop})")
        if self.kind == 'power_vs_distance':
            if self.start < 0:
                raise ValueError(f"start must be >= 0 (start={self.start})")
            if self.distance_mode == 'slant' and self.start <= 0:
                raise ValueError(f"slant sweeps need start > 0 (start={self.start})")
        return self


class UserField(ValueModel):
    users: list[GroundPoint]
    seed: int = Field(ge=0, lt=2 ** 64)
    region: CoverageEllipse

    @model_validator(mode='after')
    def check_inside(self):
        for idx, user in enumerate(self.users):
            if (user.x / self.region.a_i) ** 2 + (user.y / self.region.b_i) ** 2 > 1:
                raise ValueError(f"user {idx} lies outside the coverage ellipse")
        return self


class CoverageReport(ValueModel):
    covered_count: int = Field(ge=0)
    total: int = Field(ge=0)
    min_rate_bps: float
    per_user: list[LinkResult]

    @model_validator(mode='after')
    def check_counts(self):
        if self.total != len(self.per_user):
            raise ValueError("total must equal the number of per-user results")
        recount = sum(1 for result in self.per_user if result.rate_bps >= self.min_rate_bps)
        if self.covered_count != recount:
            raise ValueError("covered_count disagrees with per-user rates")
        return self
