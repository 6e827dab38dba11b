import unittest

from cli.config_parser import parse_config
from model.errors import ConfigError, InvalidEnvironmentError, UnknownEnvironmentError


class TestParseConfig(unittest.TestCase):
    def test_empty_document_gives_defaults(self):
        config = parse_config("")
        self.assertIsNone(config.environment)
        self.assertEqual(config.coverage.envs, ['urban'])
        self.assertEqual((config.link.pt_dbm, config.link.gt_dbi, config.link.gr_dbi), (20, 10, 10))
        self.assertEqual((config.link.f_hz, config.link.b_hz, config.link.nf_db), (2.4e9, 10e6, 5))
        self.assertEqual((config.pathloss.alpha, config.pathloss.model, config.pathloss.averaging),
                         (2, 'fspl', 'linear'))
        self.assertEqual((config.array.m, config.array.phi_deg, config.array.gain_model), (8, 0, 'directivity'))
        self.assertEqual(config.sweep.plos.kind, 'plos_vs_elevation')
        self.assertEqual((config.sweep.plos.start, config.sweep.plos.stop, config.sweep.plos.step), (0, 90, 5))
        self.assertEqual(config.sweep.power.kind, 'power_vs_distance')
        self.assertEqual(config.coverage.n_users, 100)
        self.assertEqual(config.coverage.min_rate_bps, 1e6)

    def test_partial_section_keeps_other_defaults(self):
        config = parse_config("link:\n  pt_dbm: 30\narray:\n  m: 16\n")
        self.assertEqual(config.link.pt_dbm, 30)
        self.assertEqual(config.link.b_hz, 10e6)
        self.assertEqual(config.array.m, 16)
        self.assertEqual(config.array.gain_model, 'directivity')

    def test_unknown_key_names_nearest_key(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config("link:\n  bandwith: 20e6\n")
        self.assertIn("bandwith", str(ctx.exception))
        self.assertIn("b_hz", str(ctx.exception))

    def test_unknown_section(self):
        with self.assertRaisesRegex(ConfigError, "unknown key 'pathlos' at top level"):
            parse_config("pathlos:\n  alpha: 3\n")

    def test_bound_violation(self):
        with self.assertRaisesRegex(ConfigError, "b_hz must be > 0"):
            parse_config("link:\n  b_hz: -1\n")
        with self.assertRaisesRegex(ConfigError, "array.m must be >= 1"):
            parse_config("array:\n  m: 0\n")

    def test_enum_violation(self):
        with self.assertRaisesRegex(ConfigError, "pathloss.model must be one of"):
            parse_config("pathloss:\n  model: hata\n")

    def test_sweep_bounds(self):
        with self.assertRaisesRegex(ConfigError, "start must be < stop"):
            parse_config("sweep:\n  plos:\n    start: 50\n    stop: 40\n")

    def test_yaml_syntax_error_names_line(self):
        with self.assertRaisesRegex(ConfigError, "line 3"):
            parse_config("link:\n  pt_dbm: 20\n  gt_dbi: 10: 5\n")

    def test_section_must_be_mapping(self):
        with self.assertRaisesRegex(ConfigError, "section 'link'"):
            parse_config("link: 5\n")

    def test_custom_environment(self):
        config = parse_config("environment:\n"
                              "  name: campus\n  a: 7.0\n  b: 0.2\n  eta_los_db: 0.5\n  eta_nlos_db: 15\n"
                              "sweep:\n  plos:\n    envs: [campus, urban]\n")
        self.assertEqual(config.environment.name, 'campus')
        self.assertEqual(config.sweep.plos.envs, ['campus', 'urban'])

    def test_custom_environment_needs_all_fields(self):
        with self.assertRaisesRegex(ConfigError, "environment.eta_nlos_db is required"):
            parse_config("environment:\n  name: campus\n  a: 7.0\n  b: 0.2\n  eta_los_db: 0.5\n")

    def test_custom_environment_is_validated(self):
        with self.assertRaisesRegex(InvalidEnvironmentError, "b must be > 0"):
            parse_config("environment:\n  name: flat\n  a: 7.0\n  b: 0\n  eta_los_db: 0.5\n  eta_nlos_db: 15\n")

    def test_presets_cannot_be_redefined(self):
        with self.assertRaisesRegex(ConfigError, "is a preset"):
            parse_config("environment:\n  name: urban\n  a: 9.61\n  b: 0.16\n  eta_los_db: 1\n  eta_nlos_db: 25\n")

    def test_unknown_environment_reference(self):
        with self.assertRaises(UnknownEnvironmentError):
            parse_config("coverage:\n  envs: [rural]\n")

    def test_overrides_take_precedence(self):
        config = parse_config("array:\n  m: 4\nseed: 3\n", {'array': {'m': 16}, 'seed': 42})
        self.assertEqual(config.array.m, 16)
        self.assertEqual(config.seed, 42)

    def test_overrides_are_validated(self):
        with self.assertRaisesRegex(ConfigError, "array.phi_deg must be <= 90"):
            parse_config("", {'array': {'phi_deg': 120}})


if __name__ == '__main__':
    unittest.main()
