"""
SVG pictures of a valence report.
"""
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy  # noqa: E402

from .constants import SENSE_PRESERVING  # noqa: E402


__all__ = ("plot_report", )


def plot_report(report, poles, circle, f):
    """
    Draw zeros, poles, c, conj(c) and the large circle to an SVG file.

    Sense-preserving zeros are filled, sense-reversing zeros are hollow and
    poles are crosses.

    Parameters
    ----------
    report : ValenceReport
        The report to draw.

    poles : PoleData
        The poles of H.

    circle : Circle
        The certification circle.

    f : str or file descriptor
        Where to write the SVG.
    """
    plt.rcParams["svg.hashsalt"] = "valencelab"
    fig, ax = plt.subplots(figsize=(6, 6))
    zeros = numpy.array([z.location for z in report.zeros], dtype=complex)
    preserving = numpy.array([z.orientation == SENSE_PRESERVING
                              for z in report.zeros], dtype=bool)
    if len(zeros):
        ax.scatter(zeros[preserving].real, zeros[preserving].imag, s=40,
                   color="tab:blue", label="sense-preserving zero")
        ax.scatter(zeros[~preserving].real, zeros[~preserving].imag, s=40,
                   facecolors="none", edgecolors="tab:red",
                   label="sense-reversing zero")
    locations = poles.locations
    ax.scatter(locations.real, locations.imag, marker="x", color="black",
               label="pole")
    ax.scatter([report.c.real], [report.c.imag], marker="s",
               color="tab:green", label="c")
    ax.scatter([report.c.real], [-report.c.imag], marker="D",
               color="tab:olive", label="conj(c)")
    boundary = circle.samples(512)
    boundary = numpy.append(boundary, boundary[:1])
    ax.plot(boundary.real, boundary.imag, color="gray", linewidth=0.8)
    ax.set_aspect("equal")
    ax.set_title("n=%d, %d zeros (%d+, %d-)" % (report.n, report.total,
                                                  report.n_plus,
                                                  report.n_minus))
    ax.legend(loc="upper right", fontsize="small")
    fig.savefig(f, format="svg", metadata={"Date": None})
    plt.close(fig)
