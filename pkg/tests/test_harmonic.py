import unittest
import warnings

import numpy

from valencelab.constants import SENSE_PRESERVING, SENSE_REVERSING, ROOT_TOL
from valencelab.contour import Box, Circle
from valencelab.exceptions import (ContourTooClose, NonConvergence,
                                   SingularZeroDetected)
from valencelab.extremal import StandardRationalMap
from valencelab.harmonic import HarmonicInstance, Eliminant, HarmonicZero
from valencelab.harmonic import eliminant, solve_fixed_points, newton_polish
from valencelab.harmonic import grid_oracle, winding_number
from valencelab.harmonic import default_box, large_circle
from valencelab.harmonic import _eliminant_values, _interpolated_eliminant
from valencelab.utils import hausdorff_distance
from valencelab.valence import count_in_region, pole_data

from .constants import EXTREMAL2, EXTREMAL3, EXTREMAL2_POLES
from .constants import FAR_TARGET, CUBE_POLE, FLAT_ZERO


def random_map(rng):
    n = rng.randint(2, 5)
    coeffs = rng.uniform(-2, 2, size=n + 1)
    coeffs[-1] = rng.choice([-1, 1]) * rng.uniform(0.5, 2)
    c = complex(*rng.uniform(-2, 2, size=2))
    return StandardRationalMap(c, coeffs)


def zero_box(zeros, pad=1.):
    zeros = numpy.array([z.location for z in zeros])
    low = complex(zeros.real.min() - pad, zeros.imag.min() - pad)
    high = complex(zeros.real.max() + pad, zeros.imag.max() + pad)
    return Box.from_corners(low, high)


class HarmonicInstanceTest(unittest.TestCase):

    def test_identity_hook(self):
        h = HarmonicInstance(None)
        self.assertEqual(complex(h(2 + 1j)), 2 + 1j)
        self.assertEqual(complex(h.zbar(2.)), 0)

    def test_matches_map(self):
        h = HarmonicInstance(EXTREMAL2)
        z = 0.2 - 0.4j
        self.assertEqual(h(z), EXTREMAL2.harmonic(z))
        self.assertAlmostEqual(h.multiplier(z), abs(EXTREMAL2.r_prime(z)))

    def test_target(self):
        h = HarmonicInstance(EXTREMAL2, w=2.)
        z = 0.2 - 0.4j
        expected = z - 10 - 2 / numpy.conj(EXTREMAL2.p(z))
        self.assertAlmostEqual(h(z), expected)

    def test_bad_map(self):
        with self.assertRaises(ValueError):
            HarmonicInstance([1, 2, 3])


class EliminantTest(unittest.TestCase):

    def test_degree_bound(self):
        self.assertEqual(eliminant(EXTREMAL2).degree(), 5)
        self.assertTrue(eliminant(EXTREMAL3).degree() <= 10)

    def test_type(self):
        elim = eliminant(EXTREMAL2, tol=1e-7)
        self.assertIsInstance(elim, Eliminant)
        self.assertEqual(elim.spurious_filter_tol, 1e-7)
        with self.assertRaises(ValueError):
            Eliminant([1, 1], spurious_filter_tol=0.)
        with self.assertRaises(ValueError):
            Eliminant([1, 1], root_tol=-1.)

    def test_root_tol(self):
        elim = eliminant(EXTREMAL2, root_tol=1e-6)
        self.assertEqual(elim.root_tol, 1e-6)
        self.assertEqual(eliminant(EXTREMAL2).root_tol, ROOT_TOL)
        self.assertIn("root_tol=1e-06", repr(elim))
        self.assertEqual(len(elim.roots()), 5)
        with self.assertRaises(ValueError):
            solve_fixed_points(EXTREMAL2, root_tol=0.)

    def test_pointwise_values(self):
        elim = eliminant(EXTREMAL3)
        z = numpy.array([0.5 + 0.5j, -1.2, 3j])
        try:
            numpy.testing.assert_allclose(elim.poly(z),
                                          _eliminant_values(EXTREMAL3, z),
                                          rtol=1e-8)
        except AssertionError as e:
            self.fail(e)

    def test_interpolation_matches(self):
        elim = eliminant(EXTREMAL2)
        interp = _interpolated_eliminant(EXTREMAL2, 5)
        scale = numpy.abs(elim.poly.coeffs).max()
        self.assertTrue(interp.allclose(elim.poly, rtol=1e-8,
                                        atol=1e-10 * scale))

    def test_conjugate_symmetric_roots(self):
        found = eliminant(EXTREMAL2).roots()
        self.assertTrue(hausdorff_distance(found, found.conj()) < 1e-9)

    def test_contains_zeros(self):
        found = eliminant(EXTREMAL3).roots()
        for zero in solve_fixed_points(EXTREMAL3):
            self.assertTrue(numpy.abs(found - zero.location).min() < 1e-6)


class NewtonPolishTest(unittest.TestCase):

    def test_converges(self):
        z, converged = newton_polish(EXTREMAL2, 1.05 + 0.02j)
        self.assertTrue(converged)
        self.assertAlmostEqual(z, 1., places=10)

    def test_identity_hook(self):
        z, converged = newton_polish(HarmonicInstance(None), 0.3 - 0.1j)
        self.assertTrue(converged)
        self.assertEqual(z, 0)

    def test_no_iterations(self):
        z, converged = newton_polish(EXTREMAL2, 1.5, max_iter=0)
        self.assertFalse(converged)
        self.assertEqual(z, 1.5)


class SolveFixedPointsTest(unittest.TestCase):

    def test_quadratic_extremal(self):
        zeros = solve_fixed_points(EXTREMAL2)
        self.assertEqual(len(zeros), 5)
        orientations = [z.orientation for z in zeros]
        self.assertEqual(orientations.count(SENSE_PRESERVING), 2)
        self.assertEqual(orientations.count(SENSE_REVERSING), 3)
        for z in zeros:
            self.assertIsInstance(z, HarmonicZero)
            self.assertEqual(z.order, 1)
            self.assertTrue(abs(EXTREMAL2.harmonic(z.location)) <= 1e-9)
            self.assertEqual(z.jacobian, 1 - z.multiplier ** 2)

    def test_cubic_extremal(self):
        zeros = solve_fixed_points(EXTREMAL3)
        self.assertEqual(len(zeros), 8)
        preserving = [z for z in zeros if z.orientation == SENSE_PRESERVING]
        self.assertEqual(len(preserving), 3)

    def test_superattracting_zero(self):
        zeros = solve_fixed_points(EXTREMAL3)
        for x in (-1., 1.):
            match = [z for z in zeros if abs(z.location - x) < 1e-8]
            self.assertEqual(len(match), 1)
            self.assertTrue(match[0].multiplier < 1e-6)

    def test_sorted(self):
        zeros = solve_fixed_points(EXTREMAL3)
        keys = [(z.location.real, z.location.imag) for z in zeros]
        self.assertEqual(keys, sorted(keys))

    def test_conjugation_symmetry(self):
        found = numpy.array([z.location for z in
                             solve_fixed_points(EXTREMAL3)])
        self.assertTrue(hausdorff_distance(found, found.conj()) < 1e-9)

    def test_far_target(self):
        zeros = solve_fixed_points(FAR_TARGET)
        found = numpy.array([z.location for z in zeros])
        self.assertTrue(numpy.abs(found - 10).min() < 0.02)
        oracle = grid_oracle(FAR_TARGET, Box(0j, 12.), resolution=600)
        self.assertEqual(len(oracle), len(found))
        self.assertTrue(hausdorff_distance(oracle, found) < 1e-6)

    def test_valence_bound(self):
        # real p of degree 2 to 4 and |c| <= 3
        rng = numpy.random.RandomState(11)
        checked = 0
        while checked < 200:
            rmap = random_map(rng)
            self.assertTrue(abs(rmap.c) <= 3)
            self.assertTrue(rmap.p.is_real())
            try:
                zeros = solve_fixed_points(rmap)
            except SingularZeroDetected:
                continue
            self.assertTrue(len(zeros) <= 3 * rmap.n - 1)
            checked += 1

    def test_singular(self):
        with self.assertRaises(SingularZeroDetected):
            solve_fixed_points(EXTREMAL2, singular=2.)


class GridOracleTest(unittest.TestCase):

    def test_identity_hook(self):
        found = grid_oracle(None, Box(0.1 + 0.05j, 1.), resolution=64)
        self.assertEqual(len(found), 1)
        self.assertAlmostEqual(found[0], 0, places=12)

    def test_excluded(self):
        found = grid_oracle(None, Box(5 + 5j, 1.), resolution=64)
        self.assertEqual(len(found), 0)

    def test_resolution(self):
        with self.assertRaises(ValueError):
            grid_oracle(None, Box(), resolution=10)

    def test_matches_solver(self):
        for rmap in (EXTREMAL2, EXTREMAL3):
            zeros = solve_fixed_points(rmap)
            found = grid_oracle(rmap, zero_box(zeros), resolution=500)
            expected = numpy.array([z.location for z in zeros])
            self.assertEqual(len(found), len(expected))
            self.assertTrue(hausdorff_distance(found, expected) < 1e-6)

    def test_oracle_matches_solver_random(self):
        rng = numpy.random.RandomState(3)
        checked = 0
        while checked < 20:
            rmap = random_map(rng)
            try:
                zeros = solve_fixed_points(rmap)
            except SingularZeroDetected:
                continue
            expected = numpy.array([z.location for z in zeros])
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                found = grid_oracle(rmap)
            self.assertEqual(len(found), len(expected))
            self.assertTrue(hausdorff_distance(found, expected) < 1e-6)
            checked += 1

    def test_default_box(self):
        box = default_box(EXTREMAL2)
        self.assertEqual(box.center, 10)
        for z in solve_fixed_points(EXTREMAL2):
            self.assertTrue(box.contains(z.location))


class WindingNumberTest(unittest.TestCase):

    def test_large_circle(self):
        for rmap in (EXTREMAL2, EXTREMAL3, FAR_TARGET):
            self.assertEqual(winding_number(rmap, large_circle(rmap)), 1)

    def test_identity_hook(self):
        self.assertEqual(winding_number(None, Circle(0j, 1.)), 1)
        self.assertEqual(winding_number(None, Circle(3j, 1.)), 0)

    def test_pole(self):
        circle = Circle(EXTREMAL2_POLES[1], 0.1)
        self.assertEqual(winding_number(EXTREMAL2, circle), 1)

    def test_multiple_pole(self):
        self.assertEqual(winding_number(CUBE_POLE, Circle(0j, 0.1)), 3)

    def test_zeros(self):
        for z in solve_fixed_points(EXTREMAL2):
            count = winding_number(EXTREMAL2, Circle(z.location, 1e-3))
            if z.orientation == SENSE_PRESERVING:
                self.assertEqual(count, 1)
            else:
                self.assertEqual(count, -1)

    def test_flat_zero(self):
        self.assertEqual(winding_number(FLAT_ZERO, Circle(0j, 0.05)), 1)

    def test_box(self):
        zeros = solve_fixed_points(EXTREMAL2)
        poles = pole_data(EXTREMAL2)
        # the poles 1 +- 3.32i are outside the smaller box
        for pad, expected in ((2., -1), (4., 1)):
            box = zero_box(zeros, pad=pad)
            n_plus, n_minus, p_minus = count_in_region(zeros, poles, box)
            self.assertEqual(n_plus - n_minus + p_minus, expected)
            self.assertEqual(winding_number(EXTREMAL2, box), expected)

    def test_sample_doubling(self):
        for rmap in (EXTREMAL2, EXTREMAL3):
            circle = Circle(0j, 2.5)
            self.assertEqual(
                winding_number(rmap, circle, initial_samples=64),
                winding_number(rmap, circle, initial_samples=128))

    def test_too_close(self):
        with self.assertRaises(ContourTooClose):
            winding_number(None, Circle(1., 1.))
        with self.assertRaises(ContourTooClose):
            winding_number(EXTREMAL2, Circle(EXTREMAL2_POLES[0] + 0.5, 0.5))

    def test_budget(self):
        with self.assertRaises(NonConvergence):
            winding_number(EXTREMAL2, large_circle(EXTREMAL2),
                           initial_samples=4, max_samples=4)


if __name__ == '__main__':
    unittest.main()
