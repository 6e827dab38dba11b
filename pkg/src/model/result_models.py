class PlosRow:
    def __init__(self, theta_deg: float, env: str, plos: float):
        self.theta_deg = theta_deg
        self.env = env
        self.plos = plos


class PowerRow:
    def __init__(self,
                 distance_m: float,
                 env: str,
                 theta_deg: float,
                 prx_nobeam_dbm: float,
                 prx_beam_dbm: float,
                 snr_beam_db: float,
                 rate_beam_bps: float):
        self.distance_m = distance_m
        self.env = env
        self.theta_deg = theta_deg
        self.prx_nobeam_dbm = prx_nobeam_dbm
        self.prx_beam_dbm = prx_beam_dbm
        self.snr_beam_db = snr_beam_db
        self.rate_beam_bps = rate_beam_bps


class NoBeamPowerRow:
    def __init__(self,
                 distance_m: float,
                 env: str,
                 theta_deg: float,
                 prx_nobeam_dbm: float,
                 snr_nobeam_db: float,
                 rate_nobeam_bps: float):
        self.distance_m = distance_m
        self.env = env
        self.theta_deg = theta_deg
        self.prx_nobeam_dbm = prx_nobeam_dbm
        self.snr_nobeam_db = snr_nobeam_db
        self.rate_nobeam_bps = rate_nobeam_bps


class CoverageRow:
    def __init__(self,
                 user_id: int,
                 env: str,
                 x_m: float,
                 y_m: float,
                 distance_m: float,
                 theta_deg: float,
                 plos: float,
                 prx_dbm: float,
                 snr_db: float,
                 rate_bps: float,
                 covered: int):
        self.user_id = user_id
        self.env = env
        self.x_m = x_m
        self.y_m = y_m
        self.distance_m = distance_m
        self.theta_deg = theta_deg
        self.plos = plos
        self.prx_dbm = prx_dbm
        self.snr_db = snr_db
        self.rate_bps = rate_bps
        self.covered = covered


class SteeringRow:
    def __init__(self, env: str, phi_deg: float, covered_count: int, total: int, selected: int):
        self.env = env
        self.phi_deg = phi_deg
        self.covered_count = covered_count
        self.total = total
        self.selected = selected
