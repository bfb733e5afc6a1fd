"""
Closed curves used for winding numbers and rectangular search regions.

Every contour is parametrized by t in [0, 1) and runs counter-clockwise.
"""
import numpy

from .base import BaseRecord


__all__ = ("Contour", "Circle", "Box")


class Contour(BaseRecord):
    """
    A positively oriented Jordan curve.
    """
    def point(self, t):
        raise NotImplementedError

    def contains(self, z):
        raise NotImplementedError

    def min_distance(self, z):
        """
        Distance from z (scalar or array) to the curve itself.
        """
        raise NotImplementedError

    def samples(self, count):
        return self.point(numpy.arange(count) / float(count))


class Circle(Contour):
    """
    A circle.

    Parameters
    ----------
    center : complex, default=0
        The centre of the circle.

    radius : float, default=1.
        The radius, must be positive.
    """
    def __init__(self, center=0j, radius=1.):
        if radius <= 0:
            raise ValueError("radius must be positive, got %r." % radius)
        self.center = complex(center)
        self.radius = float(radius)

    def point(self, t):
        return self.center + self.radius * numpy.exp(2j * numpy.pi *
                                                     numpy.asarray(t))

    def contains(self, z):
        return numpy.abs(numpy.asarray(z) - self.center) < self.radius

    def min_distance(self, z):
        return numpy.abs(numpy.abs(numpy.asarray(z) - self.center) -
                         self.radius)


class Box(Contour):
    """
    An axis aligned rectangle.

    Parameters
    ----------
    center : complex, default=0
        The centre of the rectangle.

    half_width : float, default=1.
        Half of the extent along the real axis.

    half_height : float, default=None
        Half of the extent along the imaginary axis. Defaults to half_width,
        giving a square.
    """
    def __init__(self, center=0j, half_width=1., half_height=None):
        if half_height is None:
            half_height = half_width
        if half_width <= 0 or half_height <= 0:
            raise ValueError("Box extents must be positive.")
        self.center = complex(center)
        self.half_width = float(half_width)
        self.half_height = float(half_height)

    @classmethod
    def from_corners(cls, low, high):
        low = complex(low)
        high = complex(high)
        return cls(center=(low + high) / 2.,
                   half_width=abs(high.real - low.real) / 2.,
                   half_height=abs(high.imag - low.imag) / 2.)

    @property
    def low(self):
        return self.center - complex(self.half_width, self.half_height)

    @property
    def high(self):
        return self.center + complex(self.half_width, self.half_height)

    def point(self, t):
        t = numpy.mod(numpy.asarray(t, dtype=float), 1.)
        w = 2 * self.half_width
        h = 2 * self.half_height
        s = t * 2 * (w + h)
        low = self.low
        # bottom, right, top, left
        return numpy.select(
            [s < w, s < w + h, s < 2 * w + h],
            [low + s,
             low + w + 1j * (s - w),
             low + w + 1j * h - (s - w - h)],
            low + 1j * (h - (s - 2 * w - h)))

    def contains(self, z):
        d = numpy.asarray(z) - self.center
        return ((numpy.abs(d.real) < self.half_width) &
                (numpy.abs(d.imag) < self.half_height))

    def min_distance(self, z):
        d = numpy.asarray(z) - self.center
        dx = numpy.abs(d.real) - self.half_width
        dy = numpy.abs(d.imag) - self.half_height
        outside = numpy.hypot(numpy.maximum(dx, 0), numpy.maximum(dy, 0))
        inside = numpy.minimum(numpy.maximum(dx, dy), 0)
        return numpy.abs(outside + inside)

    def subdivide(self):
        """
        Split the box into its four quadrants.

        Returns
        -------
        boxes : list of Box
            The quadrants in the order lower-left, lower-right, upper-right,
            upper-left.
        """
        hw = self.half_width / 2.
        hh = self.half_height / 2.
        offsets = [complex(-hw, -hh), complex(hw, -hh),
                   complex(hw, hh), complex(-hw, hh)]
        return [Box(self.center + x, hw, hh) for x in offsets]

    def grid(self, resolution):
        """
        A resolution x resolution lattice of points covering the box.

        Returns
        -------
        nodes : numpy.array, shape=(resolution, resolution)
            Complex grid nodes; rows follow the imaginary axis.
        """
        xs = numpy.linspace(self.low.real, self.high.real, resolution)
        ys = numpy.linspace(self.low.imag, self.high.imag, resolution)
        X, Y = numpy.meshgrid(xs, ys)
        return X + 1j * Y

    def spacing(self, resolution):
        return (max(2 * self.half_width, 2 * self.half_height) /
                (resolution - 1))
