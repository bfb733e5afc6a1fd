"""
Zeros of the harmonic function H(z) = z - conj(c) - 1/conj(p(z)).

The zeros are the fixed points of the anti-rational map conj(c + 1/p(z)).
They are found as roots of a complexified eliminant polynomial, screened,
and polished by Newton's method on the two real equations Re H = Im H = 0.
A brute force grid search and argument winding numbers are provided as
independent checks.
"""
import logging
import warnings

import numpy
from scipy.ndimage import minimum_filter

from .constants import (ROOT_TOL, SOLVE_TOL, SINGULAR_JACOBIAN,
                        CONTOUR_MARGIN, WINDING_INITIAL_SAMPLES,
                        WINDING_MAX_SAMPLES, ELIMINANT_DYNAMIC_RANGE,
                        NEWTON_MAX_ITER, GRID_RESOLUTION, COEFF_TRIM,
                        SENSE_PRESERVING, SENSE_REVERSING,
                        ORIENTATION_TO_SIGN)
from .contour import Box, Circle
from .exceptions import (NonConvergence, ContourTooClose,
                         SingularZeroDetected)
from .extremal import StandardRationalMap
from .polycore import ComplexPolynomial, roots, cluster_roots
from .utils import complex_to_pair, pair_to_complex, unit_roots


__all__ = ("HarmonicInstance", "Eliminant", "HarmonicZero", "eliminant",
           "solve_fixed_points", "newton_polish", "grid_oracle",
           "winding_number", "default_box", "large_circle")

logger = logging.getLogger(__name__)


class HarmonicInstance(object):
    """
    The function H_w(z) = z - conj(c) - conj(w)/conj(p(z)).

    Parameters
    ----------
    map : StandardRationalMap or None
        The rational map c + 1/p. None gives the degenerate H(z) = z.

    w : complex, default=1.
        The target; the fixed point equation uses w = 1.
    """
    def __init__(self, map, w=1.):
        if map is not None and not isinstance(map, StandardRationalMap):
            raise ValueError("Expected a StandardRationalMap, got %r." % map)
        self.map = map
        self.w = complex(w)

    def __repr__(self):
        return "HarmonicInstance(map=%r, w=%r)" % (self.map, self.w)

    def __call__(self, z):
        if self.map is None:
            return numpy.asarray(z, dtype=complex) + 0j
        with numpy.errstate(divide='ignore', invalid='ignore'):
            return self.map.harmonic(z, self.w)

    def zbar(self, z):
        if self.map is None:
            return numpy.zeros_like(numpy.asarray(z, dtype=complex))
        with numpy.errstate(divide='ignore', invalid='ignore'):
            return self.map.harmonic_zbar(z, self.w)

    def multiplier(self, z):
        return numpy.abs(self.zbar(z))

    def pole_distance(self, z):
        """
        |p(z)|, which vanishes at the poles of H (inf for the H(z) = z hook).
        """
        if self.map is None:
            return numpy.full(numpy.shape(z), numpy.inf)
        return numpy.abs(self.map.p(z))


def _as_instance(obj):
    if isinstance(obj, HarmonicInstance):
        return obj
    return HarmonicInstance(obj)


class Eliminant(object):
    """
    A polynomial whose roots contain every zero of H.

    Parameters
    ----------
    poly : ComplexPolynomial
        The eliminant, of degree at most n**2 + 1.

    spurious_filter_tol : float
        The tolerance used to screen its roots.

    root_tol : float, default=ROOT_TOL
        The tolerance its roots are computed with.
    """
    def __init__(self, poly, spurious_filter_tol=SOLVE_TOL,
                 root_tol=ROOT_TOL):
        self.poly = ComplexPolynomial(poly)
        if spurious_filter_tol <= 0 or root_tol <= 0:
            raise ValueError("Tolerances must be positive.")
        self.spurious_filter_tol = spurious_filter_tol
        self.root_tol = root_tol

    def __repr__(self):
        return "Eliminant(poly=%r, spurious_filter_tol=%r, root_tol=%r)" % (
            self.poly, self.spurious_filter_tol, self.root_tol)

    def degree(self):
        return self.poly.degree()

    def roots(self):
        if self.poly.degree() < 1:
            return numpy.zeros(0, dtype=complex)
        return roots(self.poly, tol=self.root_tol).roots


def _dynamic_range(poly):
    mags = numpy.abs(poly.coeffs)
    # rounding-level entries are ignored
    mags = mags[mags > numpy.finfo(float).eps * mags.max()]
    if not len(mags):
        return 1.
    return mags.max() / mags.min()


def _eliminant_values(map, u):
    """
    Evaluate the eliminant pointwise, without expanding any polynomial.
    """
    b = map.p.conj_coeffs().coeffs
    n = map.n
    pu = map.p(u)
    s = map.c * pu + 1
    acc = numpy.full_like(pu, b[n])
    for k in range(n - 1, -1, -1):
        acc = acc * s + b[k] * pu ** (n - k)
    return acc * (u - numpy.conj(map.c)) - pu ** n


def _interpolated_eliminant(map, degree):
    count = degree + 1
    radius = max(map.p.fujiwara_bound(), 1.)
    nodes = radius * unit_roots(count)
    values = _eliminant_values(map, nodes)
    coeffs = numpy.fft.fft(values) / count
    coeffs /= radius ** numpy.arange(count)
    return ComplexPolynomial(coeffs)


def eliminant(map, tol=SOLVE_TOL, root_tol=ROOT_TOL):
    """
    Build the eliminant of the system p(u) (v - c) = 1, conj(p)(v) (u -
    conj(c)) = 1.

    Substituting v = c + 1/p(u) and clearing p(u)**n gives

        E(u) = Q(u) (u - conj(c)) - p(u)**n,

    Q(u) = sum_k conj(b_k) (c p(u) + 1)**k p(u)**(n - k),

    where b_k are the coefficients of p.

    Parameters
    ----------
    map : StandardRationalMap
        The map c + 1/p with deg p = n >= 2.

    tol : float, default=SOLVE_TOL
        Stored as the spurious root screening tolerance.

    root_tol : float, default=ROOT_TOL
        Passed on to the root finder.

    Returns
    -------
    elim : Eliminant
        deg E <= n**2 + 1.
    """
    p = map.p
    n = map.n
    b = p.conj_coeffs().coeffs
    powers = [ComplexPolynomial([1.])]
    for _ in range(n):
        powers.append(powers[-1] * p)
    s = p * map.c + 1.
    acc = ComplexPolynomial([b[n]])
    for k in range(n - 1, -1, -1):
        acc = acc * s + powers[n - k] * b[k]
    linear = ComplexPolynomial([-numpy.conj(map.c), 1.])
    poly = (acc * linear - powers[n]).trim(COEFF_TRIM)

    if _dynamic_range(poly) > ELIMINANT_DYNAMIC_RANGE:
        warnings.warn("Eliminant coefficients span %.1e; re-deriving them by "
                      "interpolation." % _dynamic_range(poly))
        poly = _interpolated_eliminant(map, n * n + 1).trim(COEFF_TRIM)
    return Eliminant(poly, tol, root_tol)


class HarmonicZero(object):
    """
    A classified zero of H.

    Parameters
    ----------
    location : complex
        The zero.

    orientation : str
        One of 'sense_preserving', 'sense_reversing' or 'singular'.

    order : int
        The order of the zero (1 for simple zeros).

    jacobian : float
        1 - multiplier**2.

    multiplier : float
        |r'(location)|.
    """
    def __init__(self, location, orientation, order, jacobian, multiplier):
        if orientation not in ORIENTATION_TO_SIGN:
            raise ValueError("Unknown orientation %r." % orientation)
        if int(order) < 1:
            raise ValueError("order must be positive, got %r." % order)
        self.location = complex(location)
        self.orientation = orientation
        self.order = int(order)
        self.jacobian = float(jacobian)
        self.multiplier = float(multiplier)

    def __repr__(self):
        return ("HarmonicZero(location=%r, orientation=%r, order=%d, "
                "jacobian=%r, multiplier=%r)"
                % (self.location, self.orientation, self.order,
                   self.jacobian, self.multiplier))

    @property
    def sign(self):
        return ORIENTATION_TO_SIGN[self.orientation]

    def to_json(self):
        return {
            "z": complex_to_pair(self.location),
            "orientation": self.orientation,
            "order": self.order,
            "jacobian": self.jacobian,
            "multiplier": self.multiplier,
        }

    @classmethod
    def from_json(cls, data):
        return cls(pair_to_complex(data["z"]), data["orientation"],
                   data["order"], data["jacobian"], data["multiplier"])


def newton_polish(instance, z0, tol=SOLVE_TOL, max_iter=NEWTON_MAX_ITER):
    """
    Damped Newton iteration on the real system Re H = Im H = 0.

    With H_z = 1 and B = H_zbar, the linearization H + dz + B conj(dz) = 0
    solves to dz = (-H + B conj(H)) / (1 - |B|**2).

    Parameters
    ----------
    instance : HarmonicInstance or StandardRationalMap
        The function to find a zero of.

    z0 : complex
        The starting point.

    tol : float, default=SOLVE_TOL
        A result counts as converged when |H| <= tol (1 + |z|).

    max_iter : int, default=NEWTON_MAX_ITER
        The iteration budget.

    Returns
    -------
    z : complex
        The final iterate.

    converged : bool
        Whether |H(z)| <= tol (1 + |z|).
    """
    instance = _as_instance(instance)
    eps = numpy.finfo(float).eps
    z = complex(z0)
    f = complex(instance(z))
    if not numpy.isfinite(f):
        return z, False
    for _ in range(max_iter):
        B = complex(instance.zbar(z))
        den = 1 - abs(B) ** 2
        if den == 0 or not numpy.isfinite(den):
            break
        dz = (-f + B * f.conjugate()) / den
        t = 1.
        while t > 2. ** -12:
            znew = z + t * dz
            fnew = complex(instance(znew))
            if numpy.isfinite(fnew) and abs(fnew) < abs(f):
                break
            t /= 2.
        else:
            break
        step = abs(t * dz)
        z, f = znew, fnew
        if step <= 4 * eps * (1 + abs(z)) or abs(f) <= eps * (1 + abs(z)):
            break
    return z, bool(abs(f) <= tol * (1 + abs(z)))


def _local_order(instance, z, radius):
    try:
        count = winding_number(instance, Circle(z, radius),
                               margin=CONTOUR_MARGIN * radius)
    except (ContourTooClose, NonConvergence) as e:
        warnings.warn("Could not measure the order of the zero at %r: %s"
                      % (z, e))
        return 1
    return max(1, abs(count))


def _classify(instance, z, tol=SOLVE_TOL, singular=SINGULAR_JACOBIAN):
    """
    Classify a refined zero by the sign of its Jacobian.
    """
    multiplier = float(instance.multiplier(z))
    jacobian = 1 - multiplier ** 2
    if abs(jacobian) < singular:
        raise SingularZeroDetected(z, jacobian)
    orientation = SENSE_PRESERVING if jacobian > 0 else SENSE_REVERSING
    order = _local_order(instance, z, 10 * numpy.sqrt(tol))
    return HarmonicZero(z, orientation, order, jacobian, multiplier)


def _merge(points, radius):
    return numpy.array([x for x, _ in cluster_roots(points, radius)],
                       dtype=complex)


def solve_fixed_points(map, tol=SOLVE_TOL, singular=SINGULAR_JACOBIAN,
                       root_tol=ROOT_TOL):
    """
    Find and classify every zero of H.

    Parameters
    ----------
    map : StandardRationalMap
        The map c + 1/p, deg p >= 2.

    tol : float, default=SOLVE_TOL
        Screening and acceptance tolerance. Duplicates closer than sqrt(tol)
        are merged.

    singular : float, default=SINGULAR_JACOBIAN
        Zeros with |jacobian| below this raise SingularZeroDetected.

    root_tol : float, default=ROOT_TOL
        The eliminant root finder tolerance.

    Returns
    -------
    zeros : list of HarmonicZero
        Sorted by real then imaginary part.

    Raises
    ------
    SingularZeroDetected
        If a zero is numerically neutral.
    """
    instance = HarmonicInstance(map)
    elim = eliminant(map, tol, root_tol)
    candidates = elim.roots()
    logger.debug("Eliminant of degree %d for n=%d", elim.degree(), map.n)

    with numpy.errstate(divide='ignore', invalid='ignore'):
        pu = map.p(candidates)
        screen = numpy.abs(numpy.conj(candidates) - map.c - 1. / pu)
        slope = numpy.abs(map.r_prime(candidates))
    bound = (numpy.sqrt(tol) * (1 + numpy.abs(candidates)) *
             (1 + numpy.where(numpy.isfinite(slope), slope, 0)))
    keep = numpy.isfinite(screen) & (screen <= bound)

    found = []
    for u in candidates[keep]:
        z, converged = newton_polish(instance, u, tol=tol)
        if converged:
            found.append(z)
        else:
            logger.debug("Discarding eliminant root %r", u)
    logger.debug("%d of %d eliminant roots are genuine", len(found),
                 len(candidates))
    merged = _merge(found, numpy.sqrt(tol))
    return [_classify(instance, z, tol, singular) for z in merged]


def default_box(map):
    """
    The search box: centred at conj(c), half-width 4 (1 + |c| + R) with R
    the Fujiwara root bound of p.
    """
    if map is None:
        return Box(0j, 1.)
    half = 4 * (1 + abs(map.c) + map.p.fujiwara_bound())
    return Box(numpy.conj(map.c), half)


def large_circle(map):
    radius = 10 * (1 + abs(map.c) + map.p.fujiwara_bound())
    return Circle(0j, radius)


def grid_oracle(map, box=None, resolution=GRID_RESOLUTION, tol=SOLVE_TOL):
    """
    Brute force zero search on a grid.

    Parameters
    ----------
    map : StandardRationalMap, HarmonicInstance or None
        The function to search; None is the H(z) = z hook.

    box : Box, default=None
        The region to search. Defaults to default_box(map).

    resolution : int, default=GRID_RESOLUTION
        Grid nodes per side, at least 64.

    tol : float, default=SOLVE_TOL
        Acceptance tolerance for polished zeros.

    Returns
    -------
    zeros : numpy.array of complex
        Deduplicated zeros inside the box, sorted by real then imaginary
        part.
    """
    if resolution < 64:
        raise ValueError("resolution must be >= 64, got %r." % resolution)
    instance = _as_instance(map)
    if box is None:
        box = default_box(instance.map)
    nodes = box.grid(resolution)
    h = box.spacing(resolution)
    with numpy.errstate(divide='ignore', invalid='ignore', over='ignore'):
        mags = numpy.abs(instance(nodes))
        slope = instance.multiplier(nodes)
    mags[~numpy.isfinite(mags)] = numpy.inf
    slope[~numpy.isfinite(slope)] = numpy.inf
    # a zero within a cell lies within h of some node
    threshold = 2 * h * (1 + slope)
    local_min = mags == minimum_filter(mags, size=3, mode='nearest')
    seeds = nodes[(mags <= threshold) & (local_min | (mags <= h))]
    logger.debug("Grid oracle polishing %d seeds", len(seeds))

    found = []
    for z0 in seeds:
        z, converged = newton_polish(instance, z0, tol=tol)
        if converged and box.contains(z):
            found.append(z)
    return _merge(found, numpy.sqrt(tol))


def winding_number(map, contour, margin=CONTOUR_MARGIN,
                   initial_samples=WINDING_INITIAL_SAMPLES,
                   max_samples=WINDING_MAX_SAMPLES):
    """
    The winding number of H along a contour.

    The argument of H is tracked along the contour. Intervals where the
    phase advances by pi/2 or more are bisected until none are left.

    Parameters
    ----------
    map : StandardRationalMap, HarmonicInstance or None
        The function.

    contour : Contour
        A positively oriented curve.

    margin : float, default=CONTOUR_MARGIN
        |H| and |p| must stay above this on the samples.

    initial_samples : int, default=WINDING_INITIAL_SAMPLES

    max_samples : int, default=WINDING_MAX_SAMPLES

    Returns
    -------
    winding : int

    Raises
    ------
    ContourTooClose
        If a sample comes within margin of a zero or pole.

    NonConvergence
        If the sample budget is exhausted.
    """
    instance = _as_instance(map)

    def sample(ts):
        points = contour.point(ts)
        values = numpy.asarray(instance(points), dtype=complex)
        with numpy.errstate(invalid='ignore'):
            bad = ~(numpy.abs(values) >= margin)
            bad |= ~(instance.pole_distance(points) >= margin)
        if bad.any():
            where = points[numpy.flatnonzero(bad)[0]]
            raise ContourTooClose("Contour passes within %.1e of a zero or "
                                  "pole of H near %r." % (margin, where))
        return values

    ts = numpy.linspace(0., 1., initial_samples + 1)
    values = sample(ts)
    values[-1] = values[0]
    while True:
        increments = numpy.angle(values[1:] / values[:-1])
        wide = numpy.abs(increments) >= numpy.pi / 2
        if not wide.any():
            return int(numpy.round(increments.sum() / (2 * numpy.pi)))
        if len(ts) > max_samples:
            raise NonConvergence("Winding number did not resolve with %d "
                                 "samples." % len(ts))
        idx = numpy.flatnonzero(wide)
        mids = (ts[idx] + ts[idx + 1]) / 2.
        mid_values = sample(mids)
        ts = numpy.insert(ts, idx + 1, mids)
        values = numpy.insert(values, idx + 1, mid_values)
