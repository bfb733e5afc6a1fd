import unittest

import numpy

from valencelab.utils import get_dict_func_getter
from valencelab.utils import complex_to_pair, pair_to_complex
from valencelab.utils import pairs_to_array, array_to_pairs
from valencelab.utils import unit_roots, hausdorff_distance


class UtilsTest(unittest.TestCase):

    def test_get_dict_func_getter(self):
        f = get_dict_func_getter({'norm': lambda x: x})
        self.assertAlmostEqual(f('norm')(3), 3)

    def test_get_dict_func_getter_fails(self):
        f = get_dict_func_getter({}, 'seed')
        with self.assertRaises(KeyError):
            f('not_real')

    def test_get_dict_func_getter_callable(self):
        f = get_dict_func_getter({})
        self.assertAlmostEqual(f(lambda x: x)(3), 3)

    def test_complex_to_pair(self):
        self.assertEqual(complex_to_pair(1 - 2j), [1., -2.])
        self.assertEqual(complex_to_pair(3), [3., 0.])
        self.assertEqual(complex_to_pair(numpy.complex128(0.5j)), [0., 0.5])

    def test_pair_to_complex(self):
        self.assertEqual(pair_to_complex([1, -2]), 1 - 2j)
        self.assertEqual(pair_to_complex((0., 0.5)), 0.5j)

    def test_pair_to_complex_invalid(self):
        for value in ([1], [1, 2, 3], "ab", None, ["x", 1]):
            with self.assertRaises(ValueError):
                pair_to_complex(value)

    def test_pairs_arrays(self):
        values = numpy.array([1 + 1j, -2, 0.25j])
        pairs = array_to_pairs(values)
        self.assertEqual(pairs, [[1., 1.], [-2., 0.], [0., 0.25]])
        try:
            numpy.testing.assert_array_equal(pairs_to_array(pairs), values)
        except AssertionError as e:
            self.fail(e)
        self.assertEqual(array_to_pairs(2j), [[0., 2.]])
        self.assertEqual(len(pairs_to_array([])), 0)

    def test_unit_roots(self):
        values = unit_roots(4)
        try:
            numpy.testing.assert_allclose(values, [1, 1j, -1, -1j],
                                          atol=1e-15)
            numpy.testing.assert_allclose(values ** 4, numpy.ones(4),
                                          atol=1e-14)
            numpy.testing.assert_allclose(unit_roots(2, numpy.pi / 2),
                                          [1j, -1j], atol=1e-15)
        except AssertionError as e:
            self.fail(e)

    def test_hausdorff_distance(self):
        self.assertEqual(hausdorff_distance([0, 1], [0, 1]), 0.)
        self.assertAlmostEqual(hausdorff_distance([0], [0, 3j]), 3.)
        self.assertAlmostEqual(hausdorff_distance([0, 1], [1.5]), 1.5)
        self.assertEqual(hausdorff_distance([], []), 0.)
        self.assertEqual(hausdorff_distance([], [1]), numpy.inf)
        self.assertEqual(hausdorff_distance(2j, [2j]), 0.)


if __name__ == '__main__':
    unittest.main()
