import os

"""
CSV를 다시 그리는 독립 실행 플롯 스크립트를 생성합니다.
시뮬레이터 자체는 그래픽 라이브러리에 의존하지 않으며,
생성된 스크립트만 matplotlib과 pandas를 사용합니다.
"""

_HEADER = '''import sys

import matplotlib.pyplot as plt
import pandas as pd

frame = pd.read_csv({csv_path!r})
'''

_BODIES = {
    'plos-sweep': '''
fig, ax = plt.subplots()
for env, group in frame.groupby("env"):
    ax.plot(group["theta_deg"], group["plos"], marker="o", label=env)
ax.set_xlabel("Elevation angle (deg)")
ax.set_ylabel("LoS probability")
ax.grid(True)
ax.legend()
''',
    'power-sweep': '''
envs = sorted(frame["env"].unique())
fig, axes = plt.subplots(len(envs), 1, sharex=True, squeeze=False, figsize=(6, 3 * len(envs)))
for ax, env in zip(axes[:, 0], envs):
    group = frame[frame["env"] == env]
    ax.plot(group["distance_m"], group["prx_nobeam_dbm"], label="without beamforming")
    if "prx_beam_dbm" in group:
        ax.plot(group["distance_m"], group["prx_beam_dbm"], label="with beamforming")
    ax.set_title(env)
    ax.set_ylabel("Received power (dBm)")
    ax.grid(True)
    ax.legend()
axes[-1, 0].set_xlabel("Distance (m)")
''',
    'coverage': '''
fig, ax = plt.subplots()
for covered, group in frame.groupby("covered"):
    ax.scatter(group["x_m"], group["y_m"], s=12, label="covered" if covered else "not covered")
ax.set_xlabel("x (m)")
ax.set_ylabel("y (m)")
ax.set_aspect("equal")
ax.legend()
''',
    'best-steering': '''
fig, ax = plt.subplots()
for env, group in frame.groupby("env"):
    ax.plot(group["phi_deg"], group["covered_count"], label=env)
    best = group[group["selected"] == 1]
    ax.scatter(best["phi_deg"], best["covered_count"], marker="*", s=120)
ax.set_xlabel("Steering angle (deg)")
ax.set_ylabel("Covered users")
ax.grid(True)
ax.legend()
''',
}

_FOOTER = '''
fig.tight_layout()
fig.savefig(sys.argv[1] if len(sys.argv) > 1 else {png_path!r})
'''


def plot_script_path(csv_path: str) -> str:
    stem, _ = os.path.splitext(csv_path)
    return f"{stem}_plot.py"


def render_plot_script(subcommand: str, csv_path: str) -> str:
    stem, _ = os.path.splitext(csv_path)
    return (_HEADER.format(csv_path=csv_path)
            + _BODIES[subcommand]
            + _FOOTER.format(png_path=f"{stem}.png"))


def write_plot_script(subcommand: str, csv_path: str) -> str:
    path = plot_script_path(csv_path)
    with open(path, 'w', encoding='utf-8', newline='\n') as script:
        script.write(render_plot_script(subcommand, csv_path))
    return path
