"""
A collection of assorted utility functions.
"""
import importlib
import json

import numpy


def get_dict_func_getter(d, label=''):
    def func(key):
        try:
            if callable(key):
                return key
            return d[key]
        except KeyError:
            msg = "The value '%s' is not a valid %s type."
            raise KeyError(msg % (key, label))
    return func


def complex_to_pair(z):
    """
    Convert a complex number to a json friendly [re, im] list.
    """
    z = complex(z)
    return [float(z.real), float(z.imag)]


def pair_to_complex(pair):
    """
    Convert an [re, im] pair back to a complex number.

    Raises
    ------
    ValueError
        If the value is not a pair of two numbers.
    """
    try:
        re, im = pair
        return complex(float(re), float(im))
    except (TypeError, ValueError):
        raise ValueError("Expected an [re, im] pair, got %r." % (pair, ))


def pairs_to_array(pairs):
    return numpy.array([pair_to_complex(x) for x in pairs], dtype=complex)


def array_to_pairs(values):
    return [complex_to_pair(x) for x in numpy.atleast_1d(values)]


def unit_roots(count, offset=0.):
    """
    The count-th roots of unity, rotated by offset radians.

    Parameters
    ----------
    count : int
        The number of points.

    offset : float, default=0.
        A rotation applied to all the points.

    Returns
    -------
    values : numpy.array, shape=(count, )
        The points on the unit circle.
    """
    angles = 2 * numpy.pi * numpy.arange(count) / count + offset
    return numpy.exp(1j * angles)


def hausdorff_distance(a, b):
    """
    Compute the Hausdorff distance between two finite sets of complex points.

    Two empty sets have distance 0, an empty and a nonempty set have
    distance inf.
    """
    a = numpy.atleast_1d(numpy.asarray(a, dtype=complex))
    b = numpy.atleast_1d(numpy.asarray(b, dtype=complex))
    if not len(a) and not len(b):
        return 0.
    if not len(a) or not len(b):
        return numpy.inf
    dist = numpy.abs(a[:, None] - b[None, :])
    return max(dist.min(axis=1).max(), dist.min(axis=0).max())


def _load_record(data):
    """
    Load a record object

    Parameters
    ----------
    data : dict
        A dictionary of values to load as a record.

    Returns
    -------
    obj : BaseRecord
        The record object.
    """
    module, klass = data["record"].rsplit('.', 1)
    m = importlib.import_module(module)
    cls = getattr(m, klass)
    parameters = {}
    for key, value in data["parameters"].items():
        if isinstance(value, dict) and set(value.keys()) == {"record",
                                                             "parameters"}:
            value = _load_record(value)
        parameters[key] = value
    return cls(**parameters)


def load_json(f):
    """
    Load a record object from a json file

    Parameters
    ----------
    f : str or file descriptor
        The path to load the data from or a file descriptor to read it from.

    Returns
    -------
    obj : BaseRecord
        The record object.
    """
    try:
        data = json.load(f)
    except AttributeError:
        with open(f, 'r') as in_file:
            data = json.load(in_file)
    return _load_record(data)
