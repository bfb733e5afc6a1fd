"""
Dense complex polynomials and a simultaneous root finder.

Every other module builds on the objects here. Coefficients are stored in
ascending order, so ``coeffs[k]`` multiplies ``z**k``; this is the order
``numpy.polynomial.polynomial`` uses, which does the arithmetic.
"""

import numpy
from numpy.polynomial import polynomial as npoly
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial.distance import cdist

from .constants import ROOT_TOL, ROOT_MAX_ITER, COEFF_TRIM
from .exceptions import NonConvergence
from .utils import unit_roots


__all__ = ("ComplexPolynomial", "RootSet", "evaluate", "derivative",
           "compose", "conj_coeffs", "roots", "fujiwara_bound",
           "cluster_roots")


class ComplexPolynomial(object):
    """
    An immutable dense polynomial over the complex numbers.

    Parameters
    ----------
    coeffs : array-like
        The coefficients in ascending order. Trailing exact zeros are
        dropped; the zero polynomial is stored as a single zero entry.
    """
    # numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, coeffs):
        if isinstance(coeffs, ComplexPolynomial):
            coeffs = coeffs.coeffs
        values = numpy.array(coeffs, dtype=complex).reshape(-1)
        nonzero = numpy.flatnonzero(values)
        if len(nonzero):
            values = values[:nonzero[-1] + 1].copy()
        else:
            values = numpy.zeros(1, dtype=complex)
        values.flags.writeable = False
        self._coeffs = values

    @classmethod
    def from_roots(cls, values, leading=1.):
        """
        Build the polynomial leading * prod(z - root).
        """
        values = numpy.atleast_1d(numpy.asarray(values, dtype=complex))
        return cls(leading * npoly.polyfromroots(values))

    @classmethod
    def monomial(cls, k, coefficient=1.):
        values = numpy.zeros(k + 1, dtype=complex)
        values[k] = coefficient
        return cls(values)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def leading(self):
        return self._coeffs[-1]

    @property
    def is_zero(self):
        return len(self._coeffs) == 1 and self._coeffs[0] == 0

    def degree(self):
        return len(self._coeffs) - 1

    def __len__(self):
        return len(self._coeffs)

    def __repr__(self):
        return "ComplexPolynomial(%r)" % (self._coeffs.tolist(), )

    def __call__(self, z):
        value = npoly.polyval(z, self._coeffs)
        if numpy.ndim(value) == 0:
            return numpy.complex128(value)
        return value

    eval = __call__

    def derivative(self):
        if self.degree() < 1:
            return ComplexPolynomial([0])
        return ComplexPolynomial(npoly.polyder(self._coeffs))

    def antiderivative(self):
        """
        The antiderivative with zero constant term.
        """
        return ComplexPolynomial(npoly.polyint(self._coeffs))

    def compose(self, inner):
        """
        Return self(inner(z)) using nested (Horner) multiplication.
        """
        inner = _as_poly(inner)
        result = ComplexPolynomial([self._coeffs[-1]])
        for coefficient in self._coeffs[-2::-1]:
            result = result * inner + coefficient
        return result

    def conj_coeffs(self):
        return ComplexPolynomial(self._coeffs.conj())

    def __neg__(self):
        return ComplexPolynomial(-self._coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        return ComplexPolynomial(npoly.polyadd(self._coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        return ComplexPolynomial(npoly.polysub(self._coeffs, other.coeffs))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if numpy.isscalar(other):
            return ComplexPolynomial(self._coeffs * other)
        other = _as_poly(other)
        return ComplexPolynomial(npoly.polymul(self._coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not numpy.isscalar(other):
            raise ValueError("Polynomials can only be divided by scalars.")
        return ComplexPolynomial(self._coeffs / other)

    def __pow__(self, k):
        if int(k) != k or k < 0:
            raise ValueError("Only nonnegative integer powers are allowed.")
        result = ComplexPolynomial([1])
        base = self
        k = int(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def norm1(self):
        return float(numpy.abs(self._coeffs).sum())

    def trim(self, rel=COEFF_TRIM):
        """
        Drop trailing coefficients that are negligible relative to the
        largest one.
        """
        mags = numpy.abs(self._coeffs)
        keep = numpy.flatnonzero(mags > rel * mags.max()) if mags.max() else []
        if not len(keep):
            return ComplexPolynomial([0])
        return ComplexPolynomial(self._coeffs[:keep[-1] + 1])

    def allclose(self, other, rtol=1e-9, atol=1e-12):
        other = _as_poly(other)
        size = max(len(self), len(other))
        a = numpy.zeros(size, dtype=complex)
        b = numpy.zeros(size, dtype=complex)
        a[:len(self)] = self._coeffs
        b[:len(other)] = other.coeffs
        return bool(numpy.allclose(a, b, rtol=rtol, atol=atol))

    def is_real(self, tol=1e-12):
        scale = max(numpy.abs(self._coeffs).max(), 1.)
        return bool(numpy.abs(self._coeffs.imag).max() <= tol * scale)

    def fujiwara_bound(self):
        return fujiwara_bound(self)


def _as_poly(value):
    if isinstance(value, ComplexPolynomial):
        return value
    return ComplexPolynomial(numpy.atleast_1d(value))


def evaluate(poly, z):
    """
    Evaluate a polynomial with Horner's scheme.

    Parameters
    ----------
    poly : ComplexPolynomial
        The polynomial.

    z : complex or array of complex
        The evaluation point(s).

    Returns
    -------
    value : complex or array of complex
        The polynomial values.
    """
    return _as_poly(poly)(z)


def derivative(poly):
    return _as_poly(poly).derivative()


def compose(outer, inner):
    return _as_poly(outer).compose(inner)


def conj_coeffs(poly):
    return _as_poly(poly).conj_coeffs()


def fujiwara_bound(poly):
    r"""
    Fujiwara's bound on the moduli of the roots of a polynomial.

    .. math::

        |z| \le 2 \max\left( \left|\frac{a_{n-1}}{a_n}\right|, \ldots,
            \left|\frac{a_1}{a_n}\right|^{1/(n-1)},
            \left|\frac{a_0}{2 a_n}\right|^{1/n} \right)

    Parameters
    ----------
    poly : ComplexPolynomial or array-like
        The polynomial (ascending coefficients).

    Returns
    -------
    bound : float
        An upper bound on the modulus of every root (0 for constants).
    """
    coeffs = _as_poly(poly).coeffs
    deg = len(coeffs) - 1
    if deg < 1:
        return 0.
    ratios = numpy.abs(coeffs[:-1] / coeffs[-1])
    ratios[0] /= 2.
    # ratios[k] multiplies z**k, so it is raised to 1 / (deg - k)
    powers = 1. / (deg - numpy.arange(deg))
    return float(2 * (ratios ** powers).max())


class RootSet(object):
    """
    The roots of a polynomial together with their backward errors.

    Parameters
    ----------
    roots : array-like, shape=(degree, )
        The computed roots; multiple roots appear as clustered entries.

    residuals : array-like, shape=(degree, )
        The normalized residuals |p(root)| / sum(|a_k| |root|**k).

    tol : float
        The tolerance the roots were computed with.
    """
    def __init__(self, roots, residuals, tol=ROOT_TOL):
        self.roots = numpy.asarray(roots, dtype=complex)
        self.residuals = numpy.asarray(residuals, dtype=float)
        self.tol = tol

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def max_residual(self):
        return float(self.residuals.max()) if len(self.residuals) else 0.

    def clusters(self, radius=None):
        """
        Group nearby roots.

        Parameters
        ----------
        radius : float, default=None
            Roots closer than this are merged. Defaults to sqrt(tol).

        Returns
        -------
        groups : list of (complex, int)
            The cluster centres and their multiplicities.
        """
        if radius is None:
            radius = numpy.sqrt(self.tol)
        return cluster_roots(self.roots, radius)


def cluster_roots(points, radius):
    """
    Single linkage clustering of complex points.

    Parameters
    ----------
    points : array-like of complex
        The points to group.

    radius : float
        Points within this distance of each other end up in the same group.

    Returns
    -------
    groups : list of (complex, int)
        The mean of each group and its size, sorted by real then imaginary
        part.
    """
    points = numpy.atleast_1d(numpy.asarray(points, dtype=complex))
    if not len(points):
        return []
    coords = numpy.column_stack([points.real, points.imag])
    adjacency = csr_matrix(cdist(coords, coords) <= radius)
    count, labels = connected_components(adjacency, directed=False)
    groups = []
    for i in range(count):
        members = points[labels == i]
        groups.append((complex(members.mean()), len(members)))
    groups.sort(key=lambda x: (x[0].real, x[0].imag))
    return groups


def _backward_error(coeffs, values):
    scale = npoly.polyval(numpy.abs(values), numpy.abs(coeffs))
    residual = numpy.abs(npoly.polyval(values, coeffs))
    with numpy.errstate(divide='ignore', invalid='ignore'):
        out = residual / scale
    out[scale == 0] = 0.
    return out


def _aberth(coeffs, tol, max_iter):
    """
    Aberth-Ehrlich iteration for a polynomial with nonzero constant term.

    All roots are updated simultaneously from the previous iterate, so the
    result only depends on the inputs.
    """
    deg = len(coeffs) - 1
    if deg == 1:
        return numpy.array([-coeffs[0] / coeffs[1]])

    deriv = npoly.polyder(coeffs)
    abs_coeffs = numpy.abs(coeffs)
    radius = fujiwara_bound(coeffs)
    z = radius * unit_roots(deg, offset=0.4)
    kicks = 1e-8 * unit_roots(deg, offset=1.1)
    for _ in range(max_iter):
        pz = npoly.polyval(z, coeffs)
        dpz = npoly.polyval(z, deriv)
        scale = npoly.polyval(numpy.abs(z), abs_coeffs)
        small = numpy.abs(pz) <= tol * scale
        with numpy.errstate(divide='ignore', invalid='ignore'):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            numpy.fill_diagonal(diff, numpy.inf)
            repulsion = (1. / diff).sum(axis=1)
            step = ratio / (1. - ratio * repulsion)
        bad = ~numpy.isfinite(step)
        step[bad] = kicks[bad] * (1 + numpy.abs(z[bad]))
        step[small] = 0.
        done = small | (numpy.abs(step) <= tol * (1 + numpy.abs(z)))
        z = z - step
        if done.all():
            return z
    raise NonConvergence("Aberth iteration did not converge in %d steps."
                         % max_iter)


def roots(poly, tol=ROOT_TOL, max_iter=ROOT_MAX_ITER):
    """
    Compute all the roots of a polynomial.

    Parameters
    ----------
    poly : ComplexPolynomial or array-like
        The polynomial, degree >= 1.

    tol : float, default=ROOT_TOL
        Relative tolerance for both the per-root correction and the
        backward error.

    max_iter : int, default=ROOT_MAX_ITER
        The iteration budget.

    Returns
    -------
    result : RootSet
        deg(poly) roots with their normalized residuals.

    Raises
    ------
    ValueError
        If the polynomial is constant.

    NonConvergence
        If the iteration budget is exhausted.
    """
    poly = _as_poly(poly)
    if poly.degree() < 1:
        raise ValueError("Can not find roots of a constant polynomial.")

    coeffs = poly.coeffs
    # z**k factors are split off so they come out exact
    shift = numpy.flatnonzero(coeffs)[0]
    reduced = coeffs[shift:]
    reduced = reduced / numpy.abs(reduced).max()
    if len(reduced) > 1:
        found = _aberth(reduced, tol, max_iter)
    else:
        found = numpy.zeros(0, dtype=complex)
    values = numpy.concatenate([numpy.zeros(shift, dtype=complex), found])
    order = numpy.lexsort((values.imag, values.real))
    values = values[order]
    return RootSet(values, _backward_error(coeffs, values), tol)
