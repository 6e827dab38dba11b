import math
import unittest

from model.domain_models import CoverageEllipse, GroundPoint, UavPose, FootprintParams
from model.errors import DomainError
from simulator import geometry


class TestEllipse(unittest.TestCase):
    def setUp(self):
        self.ellipse = CoverageEllipse(a_i=100, b_i=50)
        self.origin = UavPose(x=0, y=0, h=100)

    def test_boundary_x(self):
        self.assertEqual(geometry.boundary_x(self.ellipse, 0), (100, -100))
        self.assertEqual(geometry.boundary_x(self.ellipse, 50), (0, 0))

        plus, minus = geometry.boundary_x(self.ellipse, 30)
        self.assertAlmostEqual(plus, 80, delta=1e-9)
        self.assertAlmostEqual(minus, -80, delta=1e-9)

    def test_boundary_x_satisfies_ellipse_equation(self):
        for step in range(-50, 51):
            y = step * 1.0
            for x in geometry.boundary_x(self.ellipse, y):
                value = x ** 2 / 100 ** 2 + y ** 2 / 50 ** 2
                self.assertAlmostEqual(value, 1.0, delta=1e-12)

    def test_boundary_x_outside_extent(self):
        with self.assertRaisesRegex(DomainError, "point outside ellipse extent"):
            geometry.boundary_x(self.ellipse, 50.5)

    def test_contains(self):
        self.assertTrue(geometry.contains(self.ellipse, GroundPoint(x=0, y=0), self.origin))
        self.assertTrue(geometry.contains(self.ellipse, GroundPoint(x=100, y=0), self.origin))
        self.assertFalse(geometry.contains(self.ellipse, GroundPoint(x=90, y=40), self.origin))
        self.assertTrue(geometry.contains(self.ellipse, GroundPoint(x=110, y=10), UavPose(x=20, y=10, h=50)))

    def test_boundary_distance(self):
        self.assertEqual(geometry.boundary_distance(self.ellipse, (0, 0), GroundPoint(x=100, y=50, z=80)), 80)
        self.assertEqual(geometry.boundary_distance(self.ellipse, (0, 0), GroundPoint(x=100, y=50, z=0)), 0)
        self.assertAlmostEqual(geometry.boundary_distance(self.ellipse, (60, 30), GroundPoint(x=0, y=0, z=100)),
                               math.sqrt(18000), delta=1e-9)
        self.assertAlmostEqual(math.sqrt(18000), 134.164, delta=1e-3)

    def test_boundary_distance_outside_extent(self):
        with self.assertRaisesRegex(DomainError, "ellipse parameter outside extent"):
            geometry.boundary_distance(self.ellipse, (101, 0), GroundPoint(x=0, y=0))
        with self.assertRaisesRegex(DomainError, "ellipse parameter outside extent"):
            geometry.boundary_distance(self.ellipse, (0, -51), GroundPoint(x=0, y=0))


class TestSlantGeometry(unittest.TestCase):
    def test_slant_distance(self):
        self.assertEqual(geometry.slant_distance(UavPose(h=100), GroundPoint(x=0, y=0)), 100)
        self.assertAlmostEqual(geometry.slant_distance(UavPose(h=100), GroundPoint(x=30, y=40)),
                               111.803, delta=1e-3)
        self.assertEqual(geometry.slant_distance(UavPose(x=10, y=10, h=100), GroundPoint(x=10, y=10)), 100)

    def test_planar_offset(self):
        self.assertEqual(geometry.planar_offset(UavPose(h=100), GroundPoint(x=30, y=40)), 50)
        self.assertEqual(geometry.planar_offset(UavPose(x=10, y=10, h=100), GroundPoint(x=10, y=10)), 0)
        uav, user = UavPose(x=-20, y=5, h=60), GroundPoint(x=70, y=-35)
        self.assertAlmostEqual(geometry.slant_distance(uav, user) ** 2,
                               geometry.planar_offset(uav, user) ** 2 + 60 ** 2, delta=1e-6)

    def test_slant_distance_translation_invariant(self):
        for shift in (-250.0, 0.0, 13.5, 1000.0):
            moved = geometry.slant_distance(UavPose(x=shift, y=-shift, h=80), GroundPoint(x=30 + shift, y=40 - shift))
            self.assertAlmostEqual(moved, geometry.slant_distance(UavPose(h=80), GroundPoint(x=30, y=40)), delta=1e-9)
            self.assertGreaterEqual(moved, 80)

    def test_elevation_angle(self):
        uav = UavPose(h=100)
        self.assertEqual(geometry.elevation_angle_deg(uav, GroundPoint(x=0, y=0)), 90)
        self.assertAlmostEqual(geometry.elevation_angle_deg(uav, GroundPoint(x=100, y=0)), 45, delta=1e-9)
        self.assertAlmostEqual(geometry.elevation_angle_deg(uav, GroundPoint(x=173.2050808, y=0)), 30, delta=1e-6)

    def test_elevation_angle_decreases_with_offset(self):
        uav = UavPose(h=100)
        angles = [geometry.elevation_angle_deg(uav, GroundPoint(x=offset * 10.0, y=0)) for offset in range(101)]
        for near, far in zip(angles, angles[1:]):
            self.assertGreater(near, far)
        self.assertLess(angles[-1], 90)

    def test_elevation_angles_of_swapped_legs_are_complementary(self):
        for h, r in ((100, 50), (30, 400), (1, 1), (250, 249)):
            first = geometry.elevation_angle_deg(UavPose(h=h), GroundPoint(x=r, y=0))
            second = geometry.elevation_angle_deg(UavPose(h=r), GroundPoint(x=h, y=0))
            self.assertAlmostEqual(first + second, 90, delta=1e-9)

    def test_coincident_points_have_no_elevation(self):
        degenerate = UavPose.model_construct(x=0.0, y=0.0, h=0.0)
        with self.assertRaisesRegex(DomainError, "undefined elevation angle"):
            geometry.elevation_angle_deg(degenerate, GroundPoint(x=0, y=0))


class TestElevationFootprint(unittest.TestCase):
    def test_footprint_values(self):
        self.assertAlmostEqual(geometry.elevation_footprint(FootprintParams(h_n=100, r_k=0, beta_k=math.pi / 4)),
                               100, places=9)
        self.assertAlmostEqual(geometry.elevation_footprint(FootprintParams(h_n=100, r_k=100, beta_k=math.pi / 4)),
                               100, places=9)
        self.assertAlmostEqual(geometry.elevation_footprint(FootprintParams(h_n=100, r_k=0, beta_k=math.pi / 6)),
                               57.735, delta=1e-3)

    def test_footprint_beam_width_out_of_range(self):
        for beta in (math.pi / 2, 2.0, 0.0, -0.1):
            with self.assertRaisesRegex(DomainError, "beam width out of range"):
                geometry.elevation_footprint(FootprintParams(h_n=100, r_k=10, beta_k=beta))

    def test_footprint_vanishes_with_beam_width(self):
        values = [geometry.elevation_footprint(FootprintParams(h_n=100, r_k=50, beta_k=10.0 ** -k)) for k in range(1, 9)]
        for wider, narrower in zip(values, values[1:]):
            self.assertGreater(wider, narrower)
        self.assertLess(values[-1], 1e-4)


if __name__ == '__main__':
    unittest.main()
