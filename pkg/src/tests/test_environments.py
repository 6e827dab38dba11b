import unittest

from model.domain_models import Environment
from model.errors import UnknownEnvironmentError, InvalidEnvironmentError, ConfigError
from simulator import environments


class TestEnvironments(unittest.TestCase):
    def test_preset_table_values(self):
        urban = environments.preset('urban')
        self.assertEqual((urban.a, urban.b, urban.eta_los_db, urban.eta_nlos_db), (9.61, 0.16, 1, 20))

        suburban = environments.preset('suburban')
        self.assertEqual((suburban.a, suburban.b, suburban.eta_los_db, suburban.eta_nlos_db), (4.88, 0.43, 1, 21))

        dense = environments.preset('dense-urban')
        self.assertEqual((dense.a, dense.b, dense.eta_los_db, dense.eta_nlos_db), (12.08, 0.11, 1.6, 23))

        highrise = environments.preset('highrise-urban')
        self.assertEqual((highrise.a, highrise.b, highrise.eta_los_db, highrise.eta_nlos_db), (15.05, 0.08, 2.3, 34))

    def test_presets_are_constant(self):
        self.assertIs(environments.preset('urban'), environments.preset('urban'))
        self.assertEqual(environments.preset('urban'), environments.preset('urban'))
        with self.assertRaises(Exception):
            environments.preset('urban').a = 1.0

    def test_unknown_preset_lists_valid_names(self):
        with self.assertRaises(UnknownEnvironmentError) as ctx:
            environments.preset('rural')
        self.assertIsInstance(ctx.exception, ConfigError)
        for name in ('urban', 'suburban', 'dense-urban', 'highrise-urban'):
            self.assertIn(name, str(ctx.exception))

    def test_all_presets_validate(self):
        for name in environments.PRESET_NAMES:
            env = environments.preset(name)
            self.assertIs(environments.validate(env), env)

    def test_validate_reports_each_violation(self):
        with self.assertRaisesRegex(InvalidEnvironmentError, "b must be > 0"):
            environments.validate(Environment(name='flat', a=9.61, b=0, eta_los_db=1, eta_nlos_db=20))

        with self.assertRaisesRegex(InvalidEnvironmentError, "eta_nlos_db < eta_los_db"):
            environments.validate(Environment(name='swapped', a=9.61, b=0.16, eta_los_db=1, eta_nlos_db=0.5))

        with self.assertRaises(InvalidEnvironmentError) as ctx:
            environments.validate(Environment(name='broken', a=-1, b=-1, eta_los_db=-2, eta_nlos_db=-3))
        self.assertEqual(len(ctx.exception.violations), 4)
        self.assertIn("a must be > 0 (got -1", str(ctx.exception))

    def test_resolve_custom_environment(self):
        campus = Environment(name='campus', a=7.0, b=0.2, eta_los_db=0.5, eta_nlos_db=15)
        self.assertIs(environments.resolve('campus', campus), campus)
        self.assertIs(environments.resolve('urban', campus), environments.preset('urban'))

        with self.assertRaisesRegex(UnknownEnvironmentError, "campus"):
            environments.resolve('harbour', campus)


if __name__ == '__main__':
    unittest.main()
