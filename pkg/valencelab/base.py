"""
Base classes shared by the configuration and record objects.

This module holds the parameter handling that every configuration object uses
and the (optionally parallel) map used by the sweeping stages.
"""
import inspect
import json
import multiprocessing

from pathos.multiprocessing import ProcessingPool as Pool


def parallel_map(f, seq, n_jobs=1):
    """
    Parallel implementation of map.

    Parameters
    ----------
    f : callable
        A function to map to all the values in 'seq'

    seq : iterable
        An iterable of values to process with 'f'

    n_jobs : int, default=1
        Specifies the number of processes to create. Positive numbers specify
        a specific amount, and numbers less than 1 will use the number of
        cores the computer has.

    Returns
    -------
    results : list, shape=[len(seq)]
        The evaluated values, in the order of 'seq'.
    """
    seq = list(seq)
    if n_jobs < 1:
        n_jobs = multiprocessing.cpu_count()
    elif n_jobs == 1:
        return list(map(f, seq))

    pool = Pool(n_jobs)
    results = list(pool.map(f, seq))
    # Closing/joining is not really allowed because pathos sees pools as
    # lasting for the duration of the program.
    return results


class BaseRecord(object):
    """
    A base class for parameter objects.

    Subclasses store every constructor argument as an attribute of the same
    name. That is enough to get a readable repr, parameter access and a json
    round trip.
    """
    def _get_param_names(self):
        sig = inspect.signature(type(self).__init__)
        return [x for x in sig.parameters if x != "self"]

    def _get_param_strings(self):
        args = self._get_param_names()
        values = [getattr(self, x) for x in args]
        return ["%s=%r" % (x, y) for x, y in zip(args, values)]

    def __repr__(self):
        name = type(self).__name__
        params = self._get_param_strings()
        return "%s(%s)" % (name, ', '.join(params))

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self.get_params() == other.get_params()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def set_params(self, **kwargs):
        """
        Set the parameter values.

        Parameters
        ----------
            kwargs : kwargs
                Key value pairs to set for the parameters. Keys that are not
                valid parameters will be ignored.
        """
        names = self._get_param_names()
        for key, value in kwargs.items():
            if key in names:
                setattr(self, key, value)
        return self

    def get_params(self):
        """
        Get a dictionary of all the parameters.

        Returns
        -------
            params : dict
                A dictionary of all the parameters.
        """
        args = self._get_param_names()
        return {key: getattr(self, key) for key in args}

    def to_json(self):
        """
        Return the object as a json compatible dict.

        Returns
        -------
        data : dict
            The json data
        """
        full_name = self.__module__ + '.' + self.__class__.__name__
        params = {}
        for key, value in self.get_params().items():
            try:
                params[key] = value.to_json()
            except AttributeError:
                if isinstance(value, tuple):
                    value = list(value)
                params[key] = value
        return {
            "record": full_name,
            "parameters": params,
        }

    def save_json(self, f):
        """
        Save the object in a json file

        Parameters
        ----------
        f : str or file descriptor
            The path to save the data or a file descriptor to save it to.
        """
        data = self.to_json()
        try:
            json.dump(data, f, sort_keys=True, indent=2)
        except AttributeError:
            with open(f, 'w') as out_file:
                json.dump(data, out_file, sort_keys=True, indent=2)
