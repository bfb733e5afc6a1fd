"""
Reading and writing instance, report and failure documents.

All documents are JSON with sorted keys and a fixed indent, so the same data
always gives the same bytes. Complex numbers are stored as [re, im] pairs.
"""
import json

from .constants import SCHEMA_VERSION
from .extremal import GeyerPolynomial, StandardRationalMap
from .polycore import ComplexPolynomial
from .utils import (complex_to_pair, pair_to_complex, pairs_to_array,
                    array_to_pairs)
from .valence import ValenceReport


__all__ = ("Instance", "read_file_data", "read_json_data", "write_instance",
           "write_report", "write_failure", "failure_record")


class Instance(object):
    """
    A persisted rational map together with how it was built.

    Parameters
    ----------
    map : StandardRationalMap
        The map c + 1/p.

    delta : complex, default=0
        The perturbation parameter (0 when the map was given directly).

    geyer : GeyerPolynomial, default=None
        The polynomial the map was perturbed from.
    """
    def __init__(self, map, delta=0j, geyer=None):
        self.map = map
        self.delta = complex(delta)
        self.geyer = geyer

    @property
    def expected_total(self):
        return 3 * self.map.n - 1

    def __repr__(self):
        return "Instance(map=%r, delta=%r, geyer=%r)" % (self.map, self.delta,
                                                         self.geyer)

    def to_json(self):
        geyer = None
        if self.geyer is not None:
            geyer = {
                "coeffs": array_to_pairs(self.geyer.poly.coeffs),
                "critical_points": array_to_pairs(
                    self.geyer.critical_points),
            }
        return {
            "version": SCHEMA_VERSION,
            "kind": "instance",
            "n": self.map.n,
            "c": complex_to_pair(self.map.c),
            "delta": complex_to_pair(self.delta),
            "p_coeffs": array_to_pairs(self.map.p.coeffs),
            "geyer": geyer,
            "expected_total": self.expected_total,
        }

    @classmethod
    def from_json(cls, data):
        p = ComplexPolynomial(pairs_to_array(data["p_coeffs"]))
        if p.degree() != data["n"]:
            raise ValueError("n=%r does not match the degree of p (%d)."
                             % (data["n"], p.degree()))
        geyer = None
        if data.get("geyer") is not None:
            geyer = GeyerPolynomial(
                pairs_to_array(data["geyer"]["coeffs"]),
                pairs_to_array(data["geyer"]["critical_points"]))
        return cls(StandardRationalMap(pair_to_complex(data["c"]), p),
                   pair_to_complex(data["delta"]), geyer)


def failure_record(stage, error):
    """
    Build the machine-readable description of a failed stage.

    Parameters
    ----------
    stage : str
        The pipeline stage that failed.

    error : Exception
        The error raised.
    """
    return {
        "version": SCHEMA_VERSION,
        "kind": "failure",
        "stage": stage,
        "error": getattr(error, "kind", type(error).__name__),
        "message": str(error),
    }


def dumps(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _write(data, f):
    text = dumps(data)
    try:
        f.write(text)
    except AttributeError:
        with open(f, 'w') as out_file:
            out_file.write(text)


def write_instance(instance, f):
    _write(instance.to_json(), f)


def write_report(report, f):
    _write(report.to_json(), f)


def write_failure(stage, error, f):
    _write(failure_record(stage, error), f)


PARSERS = {
    "instance": Instance.from_json,
    "report": ValenceReport.from_json,
    "failure": dict,
}


def read_json_data(f):
    """
    Load a document and build the object it describes.

    Parameters
    ----------
    f : str or file descriptor
        A path or an open file.

    Returns
    -------
    obj : Instance, ValenceReport or dict
        Failure records are returned as plain dicts.

    Raises
    ------
    ValueError
        If the document is not valid JSON or does not follow a known schema.
    """
    try:
        data = json.load(f)
    except AttributeError:
        with open(f, 'r') as in_file:
            data = json.load(in_file)
    if not isinstance(data, dict):
        raise ValueError("Expected a JSON object.")
    if data.get("version") != SCHEMA_VERSION:
        raise ValueError("Unsupported document version %r."
                         % data.get("version"))
    kind = data.get("kind")
    if kind not in PARSERS:
        raise ValueError("Unknown document kind %r." % kind)
    try:
        return PARSERS[kind](data)
    except (KeyError, TypeError) as e:
        raise ValueError("Malformed %s document: %s" % (kind, e))


def read_file_data(path):
    """
    Determine the file type and call the correct parser.

    The accepted file types are .json documents.

    Parameters
    ----------
    path : str
        A path to a file to read
    """
    end = path.split('.')[-1]
    mapping = {
        'json': read_json_data,
    }
    if end in mapping:
        return mapping[end](path)
    else:
        raise ValueError("Unknown file type")
