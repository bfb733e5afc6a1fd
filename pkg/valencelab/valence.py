"""
Counting and certification of the zeros of H.

Zeros are split by orientation, the poles of H (the zeros of p) are
collected, and the counts are checked against the argument principle for
harmonic functions: the winding of H along a curve equals
N_+ - N_- - (P_+ - P_-) over the enclosed zeros and poles. The poles of H are
all sense-reversing, so P_+ = 0 and P_- = n.
"""
import logging

import numpy

from .base import parallel_map
from .constants import (SCHEMA_VERSION, ROOT_TOL, SOLVE_TOL, SINGULAR_JACOBIAN,
                        ORBIT_MAX_ITER, ORBIT_TOL, ORBIT_WINDOW,
                        ATTRACTING_MARGIN, SENSE_PRESERVING, SENSE_REVERSING)
from .contour import Box
from .exceptions import (ValenceError, Inconsistent, Inconclusive,
                         ContourTooClose, NonConvergence)
from .extremal import StandardRationalMap
from .harmonic import (HarmonicInstance, HarmonicZero, solve_fixed_points,
                       winding_number, large_circle, _classify)
from .polycore import ComplexPolynomial, roots
from .utils import (complex_to_pair, pair_to_complex, pairs_to_array,
                    array_to_pairs)


__all__ = ("PoleData", "ValenceReport", "OrbitDiagnostic", "classify_zero",
           "pole_data", "count_in_region", "argument_principle_check",
           "valence_report", "orbit_of_infinity", "openness_sweep",
           "count_attracting_fixed_points", "quadrant_check")

logger = logging.getLogger(__name__)

POLE_MERGE_RADIUS = 1e-4
QUADRANT_CLEARANCE = 1e-4
QUADRANT_OFFSETS = (0.11 + 0.07j, -0.13 + 0.17j, 0.05 - 0.19j, -0.17 - 0.03j)


class PoleData(object):
    """
    The poles of H with their orders.

    Parameters
    ----------
    poles : list of (complex, int)
        Pole locations and orders.
    """
    orientation = SENSE_REVERSING

    def __init__(self, poles):
        self.poles = [(complex(z), int(k)) for z, k in poles]

    @property
    def total_order(self):
        return sum(k for _, k in self.poles)

    @property
    def locations(self):
        return numpy.array([z for z, _ in self.poles], dtype=complex)

    def __repr__(self):
        return "PoleData(poles=%r)" % (self.poles, )


class ValenceReport(object):
    """
    The verified zero count of one instance.

    Parameters
    ----------
    n : int
        The degree of p.

    n_plus, n_minus : int
        The number of sense-preserving and sense-reversing zeros.

    p_plus, p_minus : int
        The total order of sense-preserving and sense-reversing poles.

    total : int
        n_plus + n_minus.

    winding_large_circle : int
        The winding of H along the large circle.

    extremal : bool
        total == 3n - 1.

    zeros : list of HarmonicZero

    delta_used : complex
        The perturbation parameter the instance came from (0 if unknown).

    c : complex
        The value r(infinity).

    p : ComplexPolynomial, default=None
        The polynomial, kept for serialization.
    """
    def __init__(self, n, n_plus, n_minus, p_plus, p_minus, total,
                 winding_large_circle, extremal, zeros, delta_used, c,
                 p=None):
        self.n = int(n)
        self.n_plus = int(n_plus)
        self.n_minus = int(n_minus)
        self.p_plus = int(p_plus)
        self.p_minus = int(p_minus)
        self.total = int(total)
        self.winding_large_circle = int(winding_large_circle)
        self.extremal = bool(extremal)
        self.zeros = list(zeros)
        self.delta_used = complex(delta_used)
        self.c = complex(c)
        self.p = None if p is None else ComplexPolynomial(p)

    def __repr__(self):
        return ("ValenceReport(n=%d, n_plus=%d, n_minus=%d, p_plus=%d, "
                "p_minus=%d, total=%d, winding_large_circle=%d, "
                "extremal=%r)" % (self.n, self.n_plus, self.n_minus,
                                  self.p_plus, self.p_minus, self.total,
                                  self.winding_large_circle, self.extremal))

    def check(self):
        """
        Raise Inconsistent if the report violates one of its identities.
        """
        if self.total != self.n_plus + self.n_minus:
            raise Inconsistent("total=%d but n_plus + n_minus=%d"
                               % (self.total, self.n_plus + self.n_minus),
                               self)
        expected = self.n_plus - self.n_minus - (self.p_plus - self.p_minus)
        if self.winding_large_circle != expected:
            raise Inconsistent("Large circle winding %d, argument principle "
                               "gives %d" % (self.winding_large_circle,
                                             expected), self)
        if self.extremal != (self.total == 3 * self.n - 1):
            raise Inconsistent("extremal flag does not match total=%d"
                               % self.total, self)
        return self

    def to_json(self):
        coeffs = [] if self.p is None else array_to_pairs(self.p.coeffs)
        return {
            "version": SCHEMA_VERSION,
            "kind": "report",
            "n": self.n,
            "c": complex_to_pair(self.c),
            "delta": complex_to_pair(self.delta_used),
            "p_coeffs": coeffs,
            "zeros": [z.to_json() for z in self.zeros],
            "counts": {
                "n_plus": self.n_plus,
                "n_minus": self.n_minus,
                "p_plus": self.p_plus,
                "p_minus": self.p_minus,
                "total": self.total,
            },
            "winding": self.winding_large_circle,
            "extremal": self.extremal,
        }

    @classmethod
    def from_json(cls, data):
        if data.get("version") != SCHEMA_VERSION:
            raise ValueError("Unsupported report version %r."
                             % data.get("version"))
        counts = data["counts"]
        p = pairs_to_array(data["p_coeffs"]) if data["p_coeffs"] else None
        return cls(data["n"], counts["n_plus"], counts["n_minus"],
                   counts["p_plus"], counts["p_minus"], counts["total"],
                   data["winding"], data["extremal"],
                   [HarmonicZero.from_json(x) for x in data["zeros"]],
                   pair_to_complex(data["delta"]),
                   pair_to_complex(data["c"]), p)


class OrbitDiagnostic(object):
    """
    The forward orbit of infinity under conj(r).

    Parameters
    ----------
    orbit : array-like of complex
        The iterates, starting with conj(c).

    limit : complex
        The last iterate.

    multiplier : float
        |r'(limit)| on convergence; the product of |r'| over the cycle when
        a cycle is detected.

    periodic_detected : bool
        Whether the orbit revisited an earlier point without converging.
    """
    def __init__(self, orbit, limit, multiplier, periodic_detected):
        self.orbit = numpy.asarray(orbit, dtype=complex)
        self.limit = complex(limit)
        self.multiplier = float(multiplier)
        self.periodic_detected = bool(periodic_detected)

    @property
    def iterations(self):
        return len(self.orbit)

    def __repr__(self):
        return ("OrbitDiagnostic(limit=%r, multiplier=%r, "
                "periodic_detected=%r, iterations=%d)"
                % (self.limit, self.multiplier, self.periodic_detected,
                   self.iterations))

    def to_json(self):
        return {
            "limit": complex_to_pair(self.limit),
            "multiplier": self.multiplier,
            "periodic_detected": self.periodic_detected,
            "iterations": self.iterations,
        }


def classify_zero(map, z, tol=SOLVE_TOL, singular=SINGULAR_JACOBIAN):
    """
    Classify a refined zero of H.

    Parameters
    ----------
    map : StandardRationalMap
        The map c + 1/p.

    z : complex
        A zero of H, |H(z)| <= 1e-8 (1 + |z|).

    Returns
    -------
    zero : HarmonicZero
        jacobian = 1 - |r'(z)|**2; sense-preserving zeros are exactly the
        attracting fixed points of conj(r).

    Raises
    ------
    SingularZeroDetected
        If |jacobian| < singular.
    """
    instance = HarmonicInstance(map)
    residual = abs(complex(instance(z)))
    if not residual <= 1e-8 * (1 + abs(z)):
        raise ValueError("%r is not a zero of H (|H|=%.3e)." % (z, residual))
    return _classify(instance, complex(z), tol, singular)


def pole_data(map):
    """
    Collect the zeros of p, which are the poles of H.
    """
    found = roots(map.p)
    return PoleData(found.clusters(POLE_MERGE_RADIUS))


def count_in_region(zeros, poles, region):
    """
    Sum the orders of zeros and poles inside a region.

    Returns
    -------
    n_plus : int

    n_minus : int

    p_minus : int
    """
    n_plus = sum(z.order for z in zeros
                 if z.orientation == SENSE_PRESERVING and
                 region.contains(z.location))
    n_minus = sum(z.order for z in zeros
                  if z.orientation == SENSE_REVERSING and
                  region.contains(z.location))
    p_minus = sum(k for x, k in poles.poles if region.contains(x))
    return int(n_plus), int(n_minus), int(p_minus)


def argument_principle_check(map, zeros, region, poles=None):
    """
    Compare the winding of H along a region boundary with the enclosed
    counts.

    Parameters
    ----------
    map : StandardRationalMap

    zeros : list of HarmonicZero
        All zeros of H.

    region : Contour

    poles : PoleData, default=None
        Computed from map when not given.

    Returns
    -------
    holds : bool
        Whether winding == N_+ - N_- - (0 - P_-) over the region.
    """
    if any(z.orientation not in (SENSE_PRESERVING, SENSE_REVERSING)
           for z in zeros if region.contains(z.location)):
        raise ValueError("Region contains a singular zero.")
    if poles is None:
        poles = pole_data(map)
    winding = winding_number(map, region)
    n_plus, n_minus, p_minus = count_in_region(zeros, poles, region)
    return winding == n_plus - n_minus + p_minus


def _quadrant_box(map, points):
    """
    A box around every zero and pole whose quadrant edges stay as far from
    the points as QUADRANT_OFFSETS allow.
    """
    radius = large_circle(map).radius
    best = None
    for offset in QUADRANT_OFFSETS:
        box = Box(offset * radius / 10., radius)
        if len(points):
            gap = min(q.min_distance(points).min() for q in box.subdivide())
        else:
            gap = numpy.inf
        if best is None or gap > best[1]:
            best = (box, gap)
    return best


def quadrant_check(map, zeros, poles=None, clearance=QUADRANT_CLEARANCE):
    """
    Check the argument principle separately on the four quadrants of a box
    that holds every zero and pole.

    Parameters
    ----------
    map : StandardRationalMap

    zeros : list of HarmonicZero
        All zeros of H.

    poles : PoleData, default=None
        Computed from map when not given.

    clearance : float, default=QUADRANT_CLEARANCE
        Quadrants whose edges pass closer than clearance times the box size
        to a zero or pole are skipped.

    Returns
    -------
    checked : int
        The number of quadrants where the identity was checked.

    Raises
    ------
    Inconsistent
        If a quadrant winding disagrees with its counts.
    """
    if poles is None:
        poles = pole_data(map)
    points = numpy.concatenate([
        numpy.array([z.location for z in zeros], dtype=complex),
        poles.locations])
    box, _ = _quadrant_box(map, points)
    margin = clearance * box.half_width
    checked = 0
    for quadrant in box.subdivide():
        if len(points) and quadrant.min_distance(points).min() < margin:
            logger.debug("Skipping quadrant %r", quadrant)
            continue
        try:
            holds = argument_principle_check(map, zeros, quadrant, poles)
        except (ContourTooClose, NonConvergence) as e:
            logger.debug("Skipping quadrant %r: %s", quadrant, e)
            continue
        if not holds:
            raise Inconsistent("Argument principle fails on quadrant %r."
                               % quadrant)
        checked += 1
    return checked


def valence_report(map, tol=SOLVE_TOL, delta=0j, singular=SINGULAR_JACOBIAN,
                   root_tol=ROOT_TOL):
    """
    Solve, classify and count the zeros of H and verify the result.

    Parameters
    ----------
    map : StandardRationalMap

    tol : float, default=SOLVE_TOL
        The zero solver tolerance.

    delta : complex, default=0
        Recorded as the perturbation parameter of the instance.

    singular : float, default=SINGULAR_JACOBIAN
        Zeros with |jacobian| below this raise SingularZeroDetected.

    root_tol : float, default=ROOT_TOL
        The eliminant root finder tolerance.

    Returns
    -------
    report : ValenceReport

    Raises
    ------
    Inconsistent
        If the counts violate the argument principle or each other.
    """
    if not isinstance(map, StandardRationalMap):
        raise ValueError("Expected a StandardRationalMap, got %r." % map)
    zeros = solve_fixed_points(map, tol=tol, singular=singular,
                               root_tol=root_tol)
    poles = pole_data(map)
    winding = winding_number(map, large_circle(map))
    n_plus = sum(z.order for z in zeros if z.orientation == SENSE_PRESERVING)
    n_minus = sum(z.order for z in zeros
                  if z.orientation == SENSE_REVERSING)
    total = n_plus + n_minus
    report = ValenceReport(map.n, n_plus, n_minus, 0, poles.total_order,
                           total, winding, total == 3 * map.n - 1, zeros,
                           delta, map.c, map.p)
    logger.info("n=%d: %d sense-preserving, %d sense-reversing zeros",
                map.n, n_plus, n_minus)
    return report.check()


def count_attracting_fixed_points(map, tol=SOLVE_TOL,
                                  margin=ATTRACTING_MARGIN,
                                  singular=SINGULAR_JACOBIAN):
    """
    The number of attracting fixed points of conj(r); at most n.
    """
    zeros = solve_fixed_points(map, tol=tol, singular=singular)
    return sum(1 for z in zeros if z.multiplier < 1 - margin)


def orbit_of_infinity(map, max_iter=ORBIT_MAX_ITER, tol=ORBIT_TOL,
                      window=ORBIT_WINDOW):
    """
    Follow the orbit of infinity under conj(r).

    Parameters
    ----------
    map : StandardRationalMap

    max_iter : int, default=ORBIT_MAX_ITER
        At least 100.

    tol : float, default=ORBIT_TOL
        Convergence and revisit radius.

    window : int, default=ORBIT_WINDOW
        How many earlier iterates are checked for a revisit.

    Returns
    -------
    diagnostic : OrbitDiagnostic

    Raises
    ------
    Inconclusive
        If the orbit neither converges nor cycles within max_iter.
    """
    if max_iter < 100:
        raise ValueError("max_iter must be >= 100, got %r." % max_iter)
    z = numpy.conj(map.c)
    orbit = [z]
    for _ in range(1, max_iter):
        pz = map.p(z)
        if pz == 0:
            # infinity is hit again: the orbit is a cycle through infinity
            orbit.append(complex(numpy.inf, 0))
            return OrbitDiagnostic(orbit, numpy.inf, 0., True)
        znew = numpy.conj(map.c + 1. / pz)
        orbit.append(znew)
        if abs(znew - z) < tol:
            multiplier = abs(map.r_prime(znew))
            return OrbitDiagnostic(orbit, znew, multiplier, False)
        start = max(0, len(orbit) - 2 - window)
        earlier = numpy.array(orbit[start:-2], dtype=complex)
        if len(earlier):
            dist = numpy.abs(earlier - znew)
            j = int(dist.argmin())
            if dist[j] < tol:
                cycle = numpy.array(orbit[start + j:-1], dtype=complex)
                spread = numpy.abs(cycle[:, None] - cycle[None, :]).max()
                if spread > numpy.sqrt(tol):
                    multiplier = numpy.prod(numpy.abs(map.r_prime(cycle)))
                    return OrbitDiagnostic(orbit, znew, multiplier, True)
        z = znew
    raise Inconclusive("Orbit of infinity unresolved after %d iterations."
                       % max_iter)


def _retains(map, c, target, tol, singular):
    try:
        report = valence_report(StandardRationalMap(c, map.p), tol=tol,
                                singular=singular)
    except ValenceError as e:
        logger.debug("c=%r failed: %s", c, e)
        return False
    return report.total == target


def openness_sweep(map, radius, samples, rng_seed=0, n_jobs=1, rings=4,
                   tol=SOLVE_TOL, singular=SINGULAR_JACOBIAN):
    """
    The fraction of nearby c values whose map still has 3n - 1 zeros.

    Parameters
    ----------
    map : StandardRationalMap
        A certified extremal map.

    radius : float
        The largest perturbation of c.

    samples : int
        The number of perturbed values.

    rng_seed : int, default=0
        Seed for the angular jitter.

    n_jobs : int, default=1
        Processes used to run the samples.

    rings : int, default=4
        The number of concentric circles the samples are spread over.

    Returns
    -------
    fraction : float
        Failures count as not retained.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative, got %r." % radius)
    if samples < 1:
        raise ValueError("samples must be positive, got %r." % samples)
    if radius == 0:
        return 1.
    rng = numpy.random.RandomState(rng_seed)
    index = numpy.arange(samples)
    radii = radius * (1 + index % rings) / float(rings)
    angles = 2 * numpy.pi * (index + rng.uniform(0, 1, samples)) / samples
    values = map.c + radii * numpy.exp(1j * angles)
    target = 3 * map.n - 1

    def run(c):
        return _retains(map, c, target, tol, singular)

    results = parallel_map(run, values, n_jobs)
    fraction = sum(results) / float(samples)
    logger.info("Openness sweep radius %g: %d/%d retained", radius,
                sum(results), samples)
    return fraction
