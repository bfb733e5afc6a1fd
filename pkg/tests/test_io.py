import json
import os
import shutil
import tempfile
import unittest
from io import StringIO

import numpy

from valencelab.exceptions import Exhausted
from valencelab.io import Instance, read_file_data, read_json_data
from valencelab.io import write_instance, write_report, write_failure
from valencelab.io import failure_record
from valencelab.valence import ValenceReport, valence_report

from .constants import EXTREMAL2, GEYER2, DELTA


class InstanceTest(unittest.TestCase):

    def test_to_json(self):
        data = Instance(EXTREMAL2, DELTA, GEYER2).to_json()
        self.assertEqual(data["version"], 1)
        self.assertEqual(data["kind"], "instance")
        self.assertEqual(data["n"], 2)
        self.assertEqual(data["c"], [10., 0.])
        self.assertEqual(data["delta"], [DELTA, 0.])
        self.assertEqual(data["expected_total"], 5)
        self.assertEqual(len(data["p_coeffs"]), 3)
        self.assertEqual(data["geyer"]["critical_points"], [[1., 0.]])
        self.assertEqual(data["geyer"]["coeffs"],
                         [[2., 0.], [-2., 0.], [1., 0.]])

    def test_from_json(self):
        instance = Instance.from_json(
            Instance(EXTREMAL2, DELTA, GEYER2).to_json())
        self.assertEqual(instance.map.c, EXTREMAL2.c)
        self.assertEqual(instance.delta, DELTA)
        self.assertEqual(instance.expected_total, 5)
        try:
            numpy.testing.assert_array_equal(instance.map.p.coeffs,
                                             EXTREMAL2.p.coeffs)
            numpy.testing.assert_array_equal(
                instance.geyer.critical_points, [1.])
        except AssertionError as e:
            self.fail(e)

    def test_no_geyer(self):
        data = Instance(EXTREMAL2).to_json()
        self.assertIsNone(data["geyer"])
        self.assertEqual(data["delta"], [0., 0.])
        self.assertIsNone(Instance.from_json(data).geyer)

    def test_degree_mismatch(self):
        data = Instance(EXTREMAL2).to_json()
        data["n"] = 3
        with self.assertRaises(ValueError):
            Instance.from_json(data)


class WriteReadTest(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def path(self, name):
        return os.path.join(self.tmpdir, name)

    def write_raw(self, name, data):
        path = self.path(name)
        with open(path, 'w') as f:
            json.dump(data, f)
        return path

    def test_instance_round_trip(self):
        path = self.path("instance.json")
        write_instance(Instance(EXTREMAL2, DELTA, GEYER2), path)
        instance = read_file_data(path)
        self.assertIsInstance(instance, Instance)
        self.assertEqual(instance.to_json(),
                         Instance(EXTREMAL2, DELTA, GEYER2).to_json())

    def test_deterministic_bytes(self):
        a = StringIO()
        b = StringIO()
        write_instance(Instance(EXTREMAL2, DELTA, GEYER2), a)
        write_instance(Instance(EXTREMAL2, DELTA, GEYER2), b)
        self.assertEqual(a.getvalue(), b.getvalue())
        self.assertTrue(a.getvalue().endswith("}\n"))
        keys = list(json.loads(a.getvalue()).keys())
        self.assertEqual(keys, sorted(keys))

    def test_report_round_trip(self):
        report = valence_report(EXTREMAL2, delta=DELTA)
        path = self.path("report.json")
        write_report(report, path)
        other = read_file_data(path)
        self.assertIsInstance(other, ValenceReport)
        self.assertEqual(other.to_json(), report.to_json())
        with open(path, 'r') as f:
            self.assertEqual(read_json_data(f).total, 5)

    def test_failure(self):
        error = Exhausted("No delta certified.")
        data = failure_record("perturb", error)
        self.assertEqual(data, {
            "version": 1,
            "kind": "failure",
            "stage": "perturb",
            "error": "Exhausted",
            "message": "No delta certified.",
        })
        path = self.path("failure.json")
        write_failure("perturb", error, path)
        self.assertEqual(read_file_data(path), data)

    def test_failure_plain_error(self):
        data = failure_record("construct", ValueError("bad"))
        self.assertEqual(data["error"], "ValueError")

    def test_malformed(self):
        path = self.path("broken.json")
        with open(path, 'w') as f:
            f.write("{not json")
        with self.assertRaises(ValueError):
            read_file_data(path)

    def test_not_an_object(self):
        path = self.write_raw("list.json", [1, 2])
        with self.assertRaises(ValueError):
            read_file_data(path)

    def test_bad_version(self):
        data = Instance(EXTREMAL2).to_json()
        data["version"] = 2
        with self.assertRaises(ValueError):
            read_file_data(self.write_raw("v2.json", data))

    def test_bad_kind(self):
        data = Instance(EXTREMAL2).to_json()
        data["kind"] = "molecule"
        with self.assertRaises(ValueError):
            read_file_data(self.write_raw("kind.json", data))

    def test_missing_field(self):
        data = Instance(EXTREMAL2).to_json()
        del data["c"]
        with self.assertRaises(ValueError):
            read_file_data(self.write_raw("missing.json", data))

    def test_unknown_extension(self):
        with self.assertRaises(ValueError):
            read_file_data(self.path("instance.xyz"))


if __name__ == '__main__':
    unittest.main()
