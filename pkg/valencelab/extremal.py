"""
Construction of extremal instances.

The pipeline starts from a real polynomial whose conjugate has n - 1 fixed
critical points (a Geyer polynomial), post-composes it with a Moebius map
that pulls the superattracting point at infinity to a finite attracting one,
and rewrites the result as r(z) = c + 1/p(z). A Blaschke product sandbox
models the same perturbation on the unit disc.
"""
import logging

import numpy
from scipy.optimize import brentq, root

from .base import parallel_map
from .constants import (GEYER_TOL, GEYER_MIN_SEPARATION, GEYER_RESTARTS,
                        GEYER_RESTART_SEED, ATTRACTING_MARGIN,
                        DELTA_SCHEDULE, SOLVE_TOL, SINGULAR_JACOBIAN,
                        ROOT_TOL)
from .exceptions import (ValenceError, Unrealizable, NonConvergence,
                         Exhausted, OutOfRegime)
from .polycore import ComplexPolynomial, roots
from .utils import get_dict_func_getter, unit_roots


__all__ = ("GeyerPolynomial", "StandardRationalMap", "MoebiusParam",
           "FixedPointCertificate", "geyer_from_critical_points",
           "geyer_solve", "geyer_from_ladder", "seed_ladder",
           "moebius_apply", "perturb_to_standard_form", "delta_search",
           "blaschke", "blaschke_derivative", "blaschke_fixed_point",
           "blaschke_inclusions", "admissible_radius")

logger = logging.getLogger(__name__)

CONJ_TOL = 1e-9


class GeyerPolynomial(object):
    """
    A real polynomial p whose conjugate fixes its n - 1 critical points.

    Parameters
    ----------
    poly : ComplexPolynomial
        The polynomial, with real coefficients.

    critical_points : array-like, shape=(n - 1, )
        The critical points z_j; p'(z_j) = 0 and p(z_j) = conj(z_j). The set
        is closed under conjugation.
    """
    def __init__(self, poly, critical_points):
        self.poly = ComplexPolynomial(poly)
        values = numpy.asarray(critical_points, dtype=complex)
        self.critical_points = values[numpy.lexsort((values.imag,
                                                     values.real))]

    @property
    def n(self):
        return self.poly.degree()

    def __repr__(self):
        return "GeyerPolynomial(poly=%r, critical_points=%r)" % (
            self.poly, self.critical_points.tolist())

    def residuals(self):
        """
        Independently re-evaluate the defining equations.

        Returns
        -------
        critical : float
            max |p'(z_j)|

        fixed : float
            max |p(z_j) - conj(z_j)|
        """
        z = self.critical_points
        critical = numpy.abs(self.poly.derivative()(z)).max()
        fixed = numpy.abs(self.poly(z) - z.conj()).max()
        return float(critical), float(fixed)

    def check(self, tol=GEYER_TOL):
        """
        Check every invariant of the type.

        Raises
        ------
        ValueError
            Naming the first invariant that fails.
        """
        if not (numpy.isfinite(self.poly.coeffs).all() and
                numpy.isfinite(self.critical_points).all()):
            raise ValueError("Geyer polynomial has non-finite values.")
        if not self.poly.is_real():
            raise ValueError("Geyer polynomial must have real coefficients.")
        if len(self.critical_points) != self.n - 1:
            raise ValueError("Expected %d critical points, got %d."
                             % (self.n - 1, len(self.critical_points)))
        _split_conjugate(self.critical_points)
        if _min_separation(self.critical_points) <= tol:
            raise ValueError("Critical points are not distinct.")
        critical, fixed = self.residuals()
        if not (critical <= tol and fixed <= tol):
            raise ValueError("Residuals (%.3e, %.3e) exceed %.1e."
                             % (critical, fixed, tol))
        return self


class MoebiusParam(object):
    """
    The parameter delta of M_delta(w) = (w + delta) / (1 + delta w).

    Parameters
    ----------
    delta : complex
        Must satisfy |delta| < 1.
    """
    def __init__(self, delta):
        delta = complex(delta)
        if not abs(delta) < 1:
            raise ValueError("|delta| must be < 1, got %r." % delta)
        self.delta = delta

    def __repr__(self):
        return "MoebiusParam(delta=%r)" % (self.delta, )

    def __call__(self, w):
        return moebius_apply(self, w)


class StandardRationalMap(object):
    """
    A rational map in the form r(z) = c + 1/p(z).

    Parameters
    ----------
    c : complex
        The value r(infinity).

    p : ComplexPolynomial or array-like
        A polynomial of degree n >= 2.

    Notes
    -----
    r has a critical point of degree n - 1 at infinity. Fixed points of the
    anti-map conj(r) are the zeros of H(z) = z - conj(c) - 1/conj(p(z)).
    """
    def __init__(self, c, p):
        self.c = complex(c)
        self.p = ComplexPolynomial(p)
        if self.p.degree() < 2:
            raise ValueError("p must have degree >= 2, got %d."
                             % self.p.degree())
        self._dp = self.p.derivative()

    @classmethod
    def from_geyer(cls, geyer, delta):
        poly = geyer.poly if isinstance(geyer, GeyerPolynomial) else geyer
        return perturb_to_standard_form(poly, delta)

    @property
    def n(self):
        return self.p.degree()

    def __repr__(self):
        return "StandardRationalMap(c=%r, p=%r)" % (self.c, self.p)

    def r(self, z):
        return self.c + 1. / self.p(z)

    def r_prime(self, z):
        pz = self.p(z)
        return -self._dp(z) / (pz * pz)

    def anti(self, z):
        return numpy.conj(self.r(z))

    def harmonic(self, z, w=1.):
        return z - numpy.conj(self.c) - numpy.conj(w / self.p(z))

    def harmonic_zbar(self, z, w=1.):
        """
        The Wirtinger derivative dH/dzbar; dH/dz is identically 1.
        """
        pz = self.p(z)
        return numpy.conj(w * self._dp(z) / (pz * pz))

    def critical_points(self):
        """
        The finite critical points of r (the zeros of p').
        """
        return roots(self._dp).roots


class FixedPointCertificate(object):
    """
    The outcome of a successful delta search step.

    Parameters
    ----------
    delta : complex
        The certified parameter.

    attracting : array-like
        The attracting fixed points of conj(r).

    multipliers : array-like
        |r'| at each attracting fixed point.

    total : int
        The number of zeros of H found.
    """
    def __init__(self, delta, attracting, multipliers, total):
        self.delta = complex(delta)
        self.attracting = numpy.asarray(attracting, dtype=complex)
        self.multipliers = numpy.asarray(multipliers, dtype=float)
        self.total = int(total)

    def __repr__(self):
        return ("FixedPointCertificate(delta=%r, attracting=%d, total=%d)"
                % (self.delta, len(self.attracting), self.total))


def _min_separation(points):
    points = numpy.asarray(points, dtype=complex)
    if len(points) < 2:
        return numpy.inf
    dist = numpy.abs(points[:, None] - points[None, :])
    numpy.fill_diagonal(dist, numpy.inf)
    return dist.min()


def _split_conjugate(points, tol=CONJ_TOL):
    """
    Split a conjugation-closed set into real points and upper half plane
    representatives.

    Returns
    -------
    reals : numpy.array of float

    uppers : numpy.array of complex
        One point of each conjugate pair, with positive imaginary part.

    Raises
    ------
    ValueError
        If the set is not closed under conjugation.
    """
    points = numpy.atleast_1d(numpy.asarray(points, dtype=complex))
    scale = tol * (1 + numpy.abs(points).max()) if len(points) else tol
    is_real = numpy.abs(points.imag) <= scale
    reals = numpy.sort(points[is_real].real)
    uppers = points[points.imag > scale]
    lowers = points[points.imag < -scale]
    if len(uppers) != len(lowers):
        raise ValueError("Point set is not closed under conjugation.")
    for z in uppers:
        if numpy.abs(lowers - z.conjugate()).min() > scale:
            raise ValueError("Point set is not closed under conjugation.")
    uppers = uppers[numpy.argsort(uppers.real)]
    return reals, uppers


def _join_conjugate(reals, uppers):
    uppers = numpy.asarray(uppers, dtype=complex)
    return numpy.concatenate([numpy.asarray(reals, dtype=complex), uppers,
                              uppers.conj()])


def _is_odd_symmetric(points, tol=CONJ_TOL):
    points = numpy.asarray(points, dtype=complex)
    scale = tol * (1 + numpy.abs(points).max())
    return all(numpy.abs(points + z).min() <= scale for z in points)


def _antiderivative_of_critical(points):
    """
    P with P' = prod(z - z_j) and P(0) = 0, rounded to real coefficients.
    """
    prod = ComplexPolynomial.from_roots(points)
    return ComplexPolynomial(prod.coeffs.real).antiderivative()


def _fit_affine(points, n):
    """
    Least squares real (a, d) for a P(z_j) + d = conj(z_j).
    """
    reals, uppers = _split_conjugate(points)
    points = _join_conjugate(reals, uppers)
    P = _antiderivative_of_critical(points)
    values = P(numpy.concatenate([reals, uppers]).astype(complex))
    targets = numpy.concatenate([reals, uppers]).astype(complex).conj()
    rows = [[v.real, 1.] for v in values] + [[v.imag, 0.] for v in values]
    rhs = [t.real for t in targets] + [t.imag for t in targets]
    M = numpy.array(rows)
    rhs = numpy.array(rhs)
    if numpy.linalg.matrix_rank(M) < 2:
        # Only the scale is free; fix a monic leading coefficient.
        M = numpy.vstack([M, [1., 0.]])
        rhs = numpy.append(rhs, float(n))
    (a, d), _, _, _ = numpy.linalg.lstsq(M, rhs, rcond=None)
    poly = ComplexPolynomial((a * P + d).coeffs.real)
    residual = numpy.abs(poly(points) - points.conj()).max()
    return a, d, poly, points, float(residual)


def geyer_from_critical_points(points, tol=GEYER_TOL):
    """
    Build a Geyer polynomial directly from its critical points.

    With p'(z) = a prod(z - z_j) and p = a P + d, the conditions
    p(z_j) = conj(z_j) are linear in the real unknowns (a, d).

    Parameters
    ----------
    points : array-like of complex
        n - 1 distinct points, closed under conjugation.

    tol : float, default=GEYER_TOL
        The largest accepted residual.

    Returns
    -------
    geyer : GeyerPolynomial

    Raises
    ------
    Unrealizable
        If no real (a, d) solves the system to within tol.
    """
    points = numpy.atleast_1d(numpy.asarray(points, dtype=complex))
    if not len(points):
        raise ValueError("At least one critical point is needed.")
    if _min_separation(points) <= tol:
        raise ValueError("Critical points must be distinct.")
    n = len(points) + 1
    a, d, poly, points, residual = _fit_affine(points, n)
    if residual > tol * (1 + numpy.abs(points).max()):
        raise Unrealizable(residual)
    return GeyerPolynomial(poly, points)


def _pin_seed(reals, uppers):
    """
    Translate a seed so that its real point nearest 1 sits at 1.

    Returns the remaining real points and the translated pairs.
    """
    idx = int(numpy.argmin(numpy.abs(reals - 1.)))
    shift = 1. - reals[idx]
    return numpy.delete(reals, idx) + shift, uppers + shift


def _affine_start(points, scale, sign):
    """
    Least squares d for a fixed a = sign * scale.
    """
    P = _antiderivative_of_critical(points)
    a = sign * scale
    return a, float(numpy.mean((points.conj() - a * P(points)).real))


def geyer_solve(n, seed_points, tol=GEYER_TOL,
                min_separation=GEYER_MIN_SEPARATION):
    """
    Solve for a Geyer polynomial with the critical points as unknowns.

    The unknowns are the real critical points, the conjugate pairs (one
    representative each), and the real numbers a, d of p = a P + d. Two
    normalizations remove the real affine freedom z -> s z + t. For seeds
    symmetric under z -> -z the sum of the critical points stays 0 and
    a**2 = (n/2)**2. Otherwise the real critical point nearest 1 is pinned
    at z = 1 (the seed is translated first) and a**2 = n**2, so p is monic
    up to sign. A seed without real points keeps the sum of its real parts.

    Parameters
    ----------
    n : int
        The degree, n >= 2.

    seed_points : array-like of complex
        n - 1 starting points, closed under conjugation.

    tol : float, default=GEYER_TOL
        Tolerance on the residuals of the result.

    min_separation : float, default=GEYER_MIN_SEPARATION
        Smallest accepted distance between two critical points, and from a
        conjugate pair to the real axis.

    Returns
    -------
    geyer : GeyerPolynomial

    Raises
    ------
    NonConvergence
        If the solve fails or the result does not pass the invariants.
    """
    if n < 2:
        raise ValueError("n must be >= 2, got %r." % n)
    seed_points = numpy.atleast_1d(numpy.asarray(seed_points, dtype=complex))
    if len(seed_points) != n - 1:
        raise ValueError("Expected %d seed points, got %d."
                         % (n - 1, len(seed_points)))
    reals, uppers = _split_conjugate(seed_points)
    symmetric = _is_odd_symmetric(_join_conjugate(reals, uppers))
    pinned = bool(len(reals)) and not symmetric
    if pinned:
        reals, uppers = _pin_seed(reals, uppers)
        pins = numpy.ones(1)
    else:
        pins = numpy.zeros(0)
    k = len(reals)
    m = len(uppers)
    scale = n / 2. if symmetric else float(n)
    start = _join_conjugate(numpy.concatenate([pins, reals]), uppers)
    target_sum = float(start.real.sum())

    def unpack(x):
        return x[:k], x[k:k + m] + 1j * x[k + m:k + 2 * m], x[-2], x[-1]

    def build(x):
        xr, xu, a, d = unpack(x)
        xr = numpy.concatenate([pins, xr])
        crit = _join_conjugate(xr, xu)
        P = _antiderivative_of_critical(crit)
        return ComplexPolynomial((a * P + d).coeffs.real), xr, xu, crit, a

    def residual(x):
        poly, xr, xu, crit, a = build(x)
        fixed_real = (poly(xr.astype(complex)) - xr).real
        fixed_pair = poly(xu) - xu.conj()
        norms = [(a * a - scale * scale) / scale]
        if not pinned:
            norms.append(crit.real.sum() - target_sum)
        return numpy.concatenate([fixed_real, fixed_pair.real,
                                  fixed_pair.imag, norms])

    def accept(x):
        poly, xr, xu, crit, a = build(x)
        geyer = GeyerPolynomial(poly, crit)
        geyer.check(tol)
        if len(xu) and numpy.abs(xu.imag).min() <= min_separation:
            raise ValueError("A conjugate pair collapsed onto the real axis.")
        if _min_separation(crit) <= min_separation:
            raise ValueError("Critical points are closer than %.1e."
                             % min_separation)
        return geyer

    a_fit, _, _, _, _ = _fit_affine(start, n)
    sign = 1. if a_fit >= 0 else -1.
    error = None
    for s in (sign, -sign):
        a0, d0 = _affine_start(start, scale, s)
        x0 = numpy.concatenate([reals, uppers.real, uppers.imag, [a0, d0]])
        for method in ('hybr', 'lm'):
            with numpy.errstate(all='ignore'):
                result = root(residual, x0, method=method,
                              options={'xtol': 1e-15})
            try:
                return accept(result.x)
            except ValueError as e:
                error = e
    raise NonConvergence("Geyer solve from %r failed: %s"
                         % (seed_points.tolist(), error))


def _roots_of_unity_seeds(n):
    return [s * unit_roots(n - 1) for s in (1., 0.8, 1.25, 1.5)]


def _real_spread_seeds(n):
    if n == 2:
        return [numpy.array([1.]), numpy.array([-1.])]
    return [s * numpy.linspace(-1, 1, n - 1) for s in (1., 1.5)]


def _conjugate_pair_seeds(n):
    m, k = divmod(n - 1, 2)
    seeds = []
    for height in (0.6, 0.9, 1.2):
        for offset in (-0.5, 0., 0.5):
            for spread in (0.5, 1.):
                xs = numpy.linspace(-spread, spread, m) + offset
                uppers = xs + 1j * height * (1 + 0.1 * numpy.arange(m))
                reals = numpy.ones(k)
                seeds.append(_join_conjugate(reals, uppers))
    return seeds


def _real_counts(n):
    """
    The possible numbers of real critical points of a degree n Geyer
    polynomial; at most two of them can be real fixed points.
    """
    return [k for k in (0, 1, 2) if (n - 1 - k) % 2 == 0]


def _random_seeds(n, count=GEYER_RESTARTS, seed=GEYER_RESTART_SEED):
    """
    Random restarts, drawn from a fixed stream.

    The first real point is 1; pairs are drawn from the upper half plane.
    """
    rng = numpy.random.RandomState(seed)
    counts = _real_counts(n)
    seeds = []
    for i in range(count):
        k = counts[i % len(counts)]
        m = (n - 1 - k) // 2
        reals = numpy.concatenate([numpy.ones(min(k, 1)),
                                   rng.uniform(-2., 0.5, size=max(k - 1, 0))])
        uppers = (rng.uniform(-1.5, 1.5, size=m) +
                  1j * rng.uniform(0.2, 1.6, size=m))
        seeds.append(_join_conjugate(reals, uppers))
    return seeds


SEED_STRATEGIES = {
    'roots_of_unity': _roots_of_unity_seeds,
    'real_spread': _real_spread_seeds,
    'conjugate_pairs': _conjugate_pair_seeds,
    'random': _random_seeds,
}
get_seed_function = get_dict_func_getter(SEED_STRATEGIES, label='seed')

DEFAULT_LADDER = ('roots_of_unity', 'real_spread', 'conjugate_pairs',
                  'random')


def seed_ladder(n, strategies=DEFAULT_LADDER):
    """
    Iterate over seed point sets for geyer_solve.

    Parameters
    ----------
    n : int
        The degree.

    strategies : iterable of str or callable
        The seed families to use, in order. Strings are keys of
        SEED_STRATEGIES; callables take n and return a list of seeds.

    Yields
    ------
    name : str

    points : numpy.array of complex
    """
    for strategy in strategies:
        func = get_seed_function(strategy)
        name = strategy if isinstance(strategy, str) else func.__name__
        for points in func(n):
            yield name, numpy.asarray(points, dtype=complex)


def geyer_from_ladder(n, strategies=DEFAULT_LADDER, tol=GEYER_TOL):
    """
    Run geyer_solve over the seed ladder and return the first success.

    Raises
    ------
    NonConvergence
        If no seed leads to a valid Geyer polynomial.
    """
    tried = 0
    for name, points in seed_ladder(n, strategies):
        tried += 1
        try:
            geyer = geyer_solve(n, points, tol=tol)
        except (NonConvergence, ValueError) as e:
            logger.debug("Seed %s %r failed: %s", name, points.tolist(), e)
            continue
        logger.info("Geyer polynomial of degree %d from %s seed.", n, name)
        return geyer
    raise NonConvergence("No seed out of %d produced a degree %d Geyer "
                         "polynomial." % (tried, n))


def moebius_apply(m, w):
    """
    Apply M_delta(w) = (w + delta) / (1 + delta w) on the Riemann sphere.

    Parameters
    ----------
    m : MoebiusParam or complex
        The parameter delta.

    w : complex or array-like
        Points, where numpy.inf stands for infinity.

    Returns
    -------
    values : complex or numpy.array
        Images; infinity is returned as complex(inf, 0).
    """
    delta = m.delta if isinstance(m, MoebiusParam) else complex(m)
    scalar = numpy.ndim(w) == 0
    w = numpy.atleast_1d(numpy.asarray(w, dtype=complex))
    at_inf = numpy.isinf(w)
    den = 1 + delta * w
    with numpy.errstate(divide='ignore', invalid='ignore'):
        out = (w + delta) / den
    out[den == 0] = complex(numpy.inf, 0)
    out[at_inf] = 1. / delta if delta != 0 else complex(numpy.inf, 0)
    if scalar:
        return complex(out[0])
    return out


def perturb_to_standard_form(p, delta):
    """
    Rewrite M_delta o p as c + 1/p_delta.

    Parameters
    ----------
    p : ComplexPolynomial
        A polynomial of degree >= 2.

    delta : MoebiusParam or complex
        0 < |delta| < 1.

    Returns
    -------
    map : StandardRationalMap
        c = 1/delta and p_delta = delta (1 + delta p) / (delta**2 - 1).
    """
    if not isinstance(delta, MoebiusParam):
        delta = MoebiusParam(delta)
    d = delta.delta
    if d == 0:
        raise ValueError("delta must be nonzero.")
    p = ComplexPolynomial(p)
    if p.degree() < 2:
        raise ValueError("p must have degree >= 2.")
    p_delta = (p * d + 1.) * (d / (d * d - 1.))
    return StandardRationalMap(1. / d, p_delta)


def _certify(poly, delta, margin, tol, singular, root_tol):
    from .harmonic import solve_fixed_points

    n = poly.degree()
    rmap = perturb_to_standard_form(poly, delta)
    try:
        zeros = solve_fixed_points(rmap, tol=tol, singular=singular,
                                   root_tol=root_tol)
    except ValenceError as e:
        logger.debug("delta=%r rejected: %s", delta, e)
        return None
    attracting = [z for z in zeros if z.multiplier < 1 - margin]
    if len(attracting) != n or len(zeros) != 3 * n - 1:
        logger.debug("delta=%r: %d attracting, %d zeros", delta,
                     len(attracting), len(zeros))
        return None
    cert = FixedPointCertificate(delta,
                                 [z.location for z in attracting],
                                 [z.multiplier for z in attracting],
                                 len(zeros))
    return MoebiusParam(delta), rmap, cert


def delta_search(g, schedule=DELTA_SCHEDULE, margin=ATTRACTING_MARGIN,
                 tol=SOLVE_TOL, n_jobs=1, singular=SINGULAR_JACOBIAN,
                 root_tol=ROOT_TOL):
    """
    Walk down a delta schedule until the perturbation certifies.

    Parameters
    ----------
    g : GeyerPolynomial
        The polynomial to perturb.

    schedule : sequence of float, default=DELTA_SCHEDULE
        Strictly decreasing positive values.

    margin : float, default=ATTRACTING_MARGIN
        A fixed point counts as attracting when |r'| < 1 - margin.

    tol : float, default=SOLVE_TOL
        The zero solver tolerance.

    n_jobs : int, default=1
        Number of processes used to try schedule entries concurrently. The
        largest certified delta is returned either way.

    singular : float, default=SINGULAR_JACOBIAN
        A delta whose map has a zero with |jacobian| below this is rejected.

    root_tol : float, default=ROOT_TOL
        The eliminant root finder tolerance.

    Returns
    -------
    param : MoebiusParam

    map : StandardRationalMap

    certificate : FixedPointCertificate

    Raises
    ------
    Exhausted
        If no delta in the schedule certifies.
    """
    schedule = [float(x) for x in schedule]
    if not schedule:
        raise ValueError("The delta schedule is empty.")
    if min(schedule) <= 0 or any(x <= y for x, y in zip(schedule,
                                                        schedule[1:])):
        raise ValueError("The delta schedule must be positive and strictly "
                         "decreasing.")
    g.check()
    poly = g.poly

    def attempt(delta):
        return _certify(poly, delta, margin, tol, singular, root_tol)

    if n_jobs == 1:
        for delta in schedule:
            found = attempt(delta)
            if found is not None:
                return found
    else:
        for found in parallel_map(attempt, schedule, n_jobs):
            if found is not None:
                return found
    raise Exhausted("No delta down to %.3e certified %d attracting fixed "
                    "points." % (schedule[-1], g.n))


def blaschke(n, delta, z):
    """
    B_delta(z) = (z**n + delta) / (1 + delta z**n).
    """
    zn = numpy.asarray(z) ** n
    return (zn + delta) / (1 + delta * zn)


def blaschke_derivative(n, delta, z):
    z = numpy.asarray(z)
    zn = z ** n
    return n * z ** (n - 1) * (1 - delta * delta) / (1 + delta * zn) ** 2


def _regime_bound(n):
    return (n - 1.) / (n + 1.)


def _check_regime(n, delta):
    if n < 2:
        raise ValueError("n must be >= 2, got %r." % n)
    if abs(delta) >= _regime_bound(n):
        raise OutOfRegime("|delta|=%g is not below (n-1)/(n+1)=%g."
                          % (abs(delta), _regime_bound(n)))


def blaschke_fixed_point(n, delta):
    """
    The fixed point of B_delta inside (-1, 1) and its multiplier.

    Parameters
    ----------
    n : int
        The degree, n >= 2.

    delta : float
        Real, |delta| < (n - 1)/(n + 1).

    Returns
    -------
    x_star : float
        The unique fixed point in (-1, 1).

    multiplier : float
        B_delta'(x_star); |multiplier| < 1, and nonzero when delta != 0.

    Raises
    ------
    OutOfRegime
        If |delta| >= (n - 1)/(n + 1).
    """
    delta = float(delta)
    _check_regime(n, delta)
    if delta == 0:
        return 0., 0.

    def g(x):
        return float(blaschke(n, delta, x)) - x

    # g(0) = delta, and inside the regime g has the opposite sign just
    # inside the boundary fixed point (+1 or -1) on the same side.
    side = 1. if delta > 0 else -1.
    edge = None
    for k in range(1, 60):
        x = side * (1 - 2. ** -k)
        if numpy.sign(g(x)) == -numpy.sign(delta):
            edge = x
            break
    if edge is None:
        raise OutOfRegime("No sign change found for delta=%g." % delta)
    lo, hi = sorted((0., edge))
    x_star = brentq(g, lo, hi, xtol=1e-16, rtol=4 * numpy.finfo(float).eps,
                    maxiter=500)
    return x_star, float(blaschke_derivative(n, delta, x_star))


def blaschke_inclusions(n, delta, r, samples=720):
    """
    Check D_delta within D(0, r) within D(0, r**(1/n)) on a boundary grid.

    D_delta is the image of D(0, r) under B_delta.
    """
    if not 0 < r < 1:
        return False
    boundary = r * unit_roots(samples)
    image = blaschke(n, delta, boundary)
    return bool(numpy.abs(image).max() < r < r ** (1. / n))


def admissible_radius(n, delta, max_power=40):
    """
    Find r close to 1 for which blaschke_inclusions holds.

    Raises
    ------
    OutOfRegime
        If delta is outside the regime or no radius is found.
    """
    _check_regime(n, delta)
    for k in range(1, max_power):
        r = 1 - 2. ** -k
        if blaschke_inclusions(n, delta, r):
            return r
    raise OutOfRegime("No admissible radius for n=%d, delta=%g." % (n, delta))
