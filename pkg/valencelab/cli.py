"""
Command line interface.

Every pipeline stage can be run on its own: ``construct`` runs the whole
pipeline and writes an instance, a report and optionally an SVG; the other
commands work on a single stage or on a saved instance.
"""
import json
import logging
import os

import click

from .base import BaseRecord
from .constants import DEFAULT_TOLERANCES, DELTA_SCHEDULE, EXIT_CODES
from .exceptions import ValenceError, Inconsistent
from .extremal import (SEED_STRATEGIES, DEFAULT_LADDER,
                       geyer_from_critical_points,
                       geyer_from_ladder, perturb_to_standard_form,
                       delta_search, blaschke_fixed_point, admissible_radius)
from .harmonic import large_circle, solve_fixed_points
from .io import (Instance, read_file_data, write_instance, write_report,
                 write_failure, failure_record, dumps)
from .valence import (valence_report, pole_data, argument_principle_check,
                      orbit_of_infinity, openness_sweep, quadrant_check)


logger = logging.getLogger(__name__)

EXPLICIT = 'explicit'


class CountMismatch(ValenceError):
    """A verified zero count differs from the expected one."""


class RunConfig(BaseRecord):
    """
    The settings of one pipeline run.

    Parameters
    ----------
    n : int
        The degree, n >= 2.

    seed_strategy : str, default='roots_of_unity'
        'roots_of_unity', 'real_spread', 'conjugate_pairs', 'random' or
        'explicit'. The other seed families are tried after it.

    explicit_points : list, default=None
        [re, im] pairs of the prescribed critical points, required for the
        'explicit' strategy.

    delta_schedule : list, default=DELTA_SCHEDULE
        Strictly decreasing positive values of delta to try.

    tolerances : dict, default=None
        Overrides for DEFAULT_TOLERANCES.

    output_dir : str, default='.'
        Where the artifacts are written.

    emit_svg : bool, default=False
        Whether to draw the report.

    rng_seed : int, default=0
        Seed of the openness sweep.

    sweep_radius : float, default=1e-6
        Largest perturbation of c in the openness sweep (0 disables it).

    sweep_samples : int, default=8
        Number of perturbed values in the openness sweep.

    n_jobs : int, default=1
        Processes used by the delta search and the sweep.
    """
    def __init__(self, n, seed_strategy='roots_of_unity',
                 explicit_points=None, delta_schedule=DELTA_SCHEDULE,
                 tolerances=None, output_dir='.', emit_svg=False, rng_seed=0,
                 sweep_radius=1e-6, sweep_samples=8, n_jobs=1):
        if int(n) != n or n < 2:
            raise ValueError("n must be an integer >= 2, got %r." % n)
        if seed_strategy != EXPLICIT and seed_strategy not in SEED_STRATEGIES:
            raise ValueError("Unknown seed strategy %r." % seed_strategy)
        if seed_strategy == EXPLICIT:
            if not explicit_points or len(explicit_points) != n - 1:
                raise ValueError("The explicit strategy needs %d points."
                                 % (n - 1))
        schedule = [float(x) for x in delta_schedule]
        if not schedule or min(schedule) <= 0 or any(
                x <= y for x, y in zip(schedule, schedule[1:])):
            raise ValueError("delta_schedule must be positive and strictly "
                             "decreasing.")
        tols = dict(DEFAULT_TOLERANCES)
        unknown = set(tolerances or {}) - set(tols)
        if unknown:
            raise ValueError("Unknown tolerances: %s" % sorted(unknown))
        tols.update(tolerances or {})
        if any(not value > 0 for value in tols.values()):
            raise ValueError("Tolerances must be positive.")

        self.n = int(n)
        self.seed_strategy = seed_strategy
        self.explicit_points = (None if explicit_points is None else
                                [list(x) for x in explicit_points])
        self.delta_schedule = schedule
        self.tolerances = tols
        self.output_dir = output_dir
        self.emit_svg = bool(emit_svg)
        self.rng_seed = int(rng_seed)
        self.sweep_radius = float(sweep_radius)
        self.sweep_samples = int(sweep_samples)
        self.n_jobs = int(n_jobs)

    def points(self):
        return [complex(*x) for x in self.explicit_points or []]


def exit_code_for(error):
    if isinstance(error, CountMismatch):
        return EXIT_CODES['verification_mismatch']
    if isinstance(error, ValenceError):
        return EXIT_CODES['numerical_failure']
    return EXIT_CODES['usage']


def build_geyer(config):
    if config.seed_strategy == EXPLICIT:
        return geyer_from_critical_points(config.points(),
                                          tol=config.tolerances['geyer'])
    strategies = [config.seed_strategy] + [
        x for x in DEFAULT_LADDER if x != config.seed_strategy]
    return geyer_from_ladder(config.n, strategies,
                             tol=config.tolerances['geyer'])


def run_pipeline(config):
    """
    Construct, perturb, count and check one extremal instance.

    Parameters
    ----------
    config : RunConfig

    Returns
    -------
    code : int
        0 when the instance is certified extremal.

    artifacts : dict
        Paths of the written files, keyed by 'instance', 'report', 'svg' or
        'failure'.
    """
    tols = config.tolerances
    if not os.path.isdir(config.output_dir):
        os.makedirs(config.output_dir)
    artifacts = {}

    def path(name):
        return os.path.join(config.output_dir, name)

    stage = 'construct'
    try:
        geyer = build_geyer(config)
        stage = 'perturb'
        param, rmap, cert = delta_search(geyer, config.delta_schedule,
                                         margin=tols['margin'],
                                         tol=tols['solve'],
                                         n_jobs=config.n_jobs,
                                         singular=tols['singular'],
                                         root_tol=tols['root'])
        instance = Instance(rmap, param.delta, geyer)
        artifacts['instance'] = path('instance.json')
        write_instance(instance, artifacts['instance'])

        stage = 'report'
        report = valence_report(rmap, tol=tols['solve'], delta=param.delta,
                                singular=tols['singular'],
                                root_tol=tols['root'])
        artifacts['report'] = path('report.json')
        write_report(report, artifacts['report'])
        if config.emit_svg:
            from .plot import plot_report
            artifacts['svg'] = path('report.svg')
            plot_report(report, pole_data(rmap), large_circle(rmap),
                        artifacts['svg'])
        if not report.extremal:
            raise CountMismatch("Found %d zeros, expected %d."
                                % (report.total, 3 * config.n - 1))

        stage = 'orbit'
        orbit = orbit_of_infinity(rmap, tol=tols['orbit'])
        if orbit.periodic_detected or not 0 < orbit.multiplier < 1:
            raise Inconsistent("Orbit of infinity: %r" % orbit)

        stage = 'sweep'
        if config.sweep_radius > 0:
            fraction = openness_sweep(rmap, config.sweep_radius,
                                      config.sweep_samples,
                                      rng_seed=config.rng_seed,
                                      n_jobs=config.n_jobs,
                                      tol=tols['solve'],
                                      singular=tols['singular'])
            logger.info("Openness sweep retained %.3f", fraction)
    except ValueError as e:
        logger.error("Stage %s failed: %s", stage, e)
        artifacts['failure'] = path('failure.json')
        write_failure(stage, e, artifacts['failure'])
        return exit_code_for(e), artifacts
    return EXIT_CODES['success'], artifacts


def verify_file(path, tol=DEFAULT_TOLERANCES['solve'],
                singular=DEFAULT_TOLERANCES['singular'],
                root_tol=DEFAULT_TOLERANCES['root']):
    """
    Re-solve a saved instance from scratch.

    The argument principle is checked on the large circle and again on the
    quadrants of a box around the zeros and poles.

    Returns
    -------
    code : int
        0 if every report identity and the argument principle hold and the
        zero count matches; 4 if only the count differs; 3 on a numerical
        failure; 2 if the file can not be parsed.
    """
    try:
        instance = read_file_data(path)
    except (IOError, ValueError) as e:
        logger.error("Could not read %s: %s", path, e)
        return EXIT_CODES['usage']
    if not isinstance(instance, Instance):
        logger.error("%s does not hold an instance.", path)
        return EXIT_CODES['usage']
    try:
        report = valence_report(instance.map, tol=tol, delta=instance.delta,
                                singular=singular, root_tol=root_tol)
        if not argument_principle_check(instance.map, report.zeros,
                                        large_circle(instance.map)):
            raise Inconsistent("Argument principle fails on the large "
                               "circle.", report)
        checked = quadrant_check(instance.map, report.zeros)
        logger.info("Argument principle holds on %d of 4 quadrants.",
                    checked)
    except ValenceError as e:
        logger.error("Verification of %s failed: %s", path, e)
        return EXIT_CODES['numerical_failure']
    if report.total != instance.expected_total:
        logger.error("%s: %d zeros, expected %d", path, report.total,
                     instance.expected_total)
        return EXIT_CODES['verification_mismatch']
    return EXIT_CODES['success']


def _parse_points(value):
    try:
        return [complex(x.strip()) for x in value.split(',') if x.strip()]
    except ValueError:
        raise click.BadParameter("Could not parse points %r." % value)


def _parse_schedule(value):
    try:
        return [float(x) for x in value.split(',') if x.strip()]
    except ValueError:
        raise click.BadParameter("Could not parse schedule %r." % value)


def _load_instance(path):
    try:
        instance = read_file_data(path)
    except ValueError as e:
        raise click.UsageError("Could not read %s: %s" % (path, e))
    if not isinstance(instance, Instance):
        raise click.UsageError("%s does not hold an instance." % path)
    return instance


def _fail(ctx, stage, error):
    click.echo(dumps(failure_record(stage, error)), err=True, nl=False)
    ctx.exit(exit_code_for(error))


@click.group()
@click.option("--verbose", is_flag=True, help="Log progress at debug level.")
def main(verbose):
    """Construct and certify extremal logharmonic polynomials."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s")


@main.command()
@click.option("--n", "n", type=click.IntRange(min=2), required=True,
              help="Degree of p.")
@click.option("--seed-strategy",
              type=click.Choice(sorted(SEED_STRATEGIES) + [EXPLICIT]),
              default='roots_of_unity', show_default=True)
@click.option("--points", default=None,
              help="Critical points for the explicit strategy, "
                   "e.g. '1,-0.5+0.8j,-0.5-0.8j'.")
@click.option("--schedule", default=None,
              help="Comma separated decreasing delta values.")
@click.option("--tol", type=float, default=None,
              help="Zero solver tolerance.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed of the openness sweep.")
@click.option("--out", default=".", show_default=True,
              help="Output directory.")
@click.option("--svg", is_flag=True, help="Also write report.svg.")
@click.option("--sweep-radius", type=float, default=1e-6, show_default=True)
@click.option("--sweep-samples", type=int, default=8, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.pass_context
def construct(ctx, n, seed_strategy, points, schedule, tol, seed, out, svg,
              sweep_radius, sweep_samples, jobs):
    """Run the whole pipeline for degree N."""
    explicit = None
    if points is not None:
        explicit = [[x.real, x.imag] for x in _parse_points(points)]
    try:
        config = RunConfig(
            n, seed_strategy=seed_strategy, explicit_points=explicit,
            delta_schedule=(_parse_schedule(schedule) if schedule
                            else DELTA_SCHEDULE),
            tolerances=None if tol is None else {'solve': tol},
            output_dir=out, emit_svg=svg, rng_seed=seed,
            sweep_radius=sweep_radius, sweep_samples=sweep_samples,
            n_jobs=jobs)
    except ValueError as e:
        raise click.UsageError(str(e))
    code, artifacts = run_pipeline(config)
    for key in sorted(artifacts):
        click.echo("%s: %s" % (key, artifacts[key]))
    ctx.exit(code)


@main.command()
@click.option("--n", "n", type=click.IntRange(min=2), default=None)
@click.option("--points", default=None,
              help="Prescribed critical points instead of a seed search.")
@click.option("--delta", type=float, required=True)
@click.option("--json", "json_out", default="-", show_default=True,
              help="Where to write the instance.")
@click.pass_context
def perturb(ctx, n, points, delta, json_out):
    """Build a Geyer polynomial and perturb it by DELTA."""
    if points is None and n is None:
        raise click.UsageError("Give --n or --points.")
    try:
        if points is not None:
            geyer = geyer_from_critical_points(_parse_points(points))
        else:
            geyer = geyer_from_ladder(n)
        rmap = perturb_to_standard_form(geyer.poly, delta)
    except ValenceError as e:
        _fail(ctx, 'perturb', e)
    except ValueError as e:
        raise click.UsageError(str(e))
    with click.open_file(json_out, 'w') as f:
        write_instance(Instance(rmap, delta, geyer), f)


@main.command()
@click.argument("instance_path", type=click.Path(exists=True))
@click.option("--tol", type=float, default=DEFAULT_TOLERANCES['solve'],
              show_default=True)
@click.pass_context
def solve(ctx, instance_path, tol):
    """List the zeros of H for a saved instance."""
    instance = _load_instance(instance_path)
    try:
        zeros = solve_fixed_points(instance.map, tol=tol)
    except ValenceError as e:
        _fail(ctx, 'solve', e)
    click.echo(json.dumps([z.to_json() for z in zeros], sort_keys=True,
                          indent=2))


@main.command()
@click.argument("instance_path", type=click.Path(exists=True))
@click.pass_context
def verify(ctx, instance_path):
    """Re-verify a saved instance; the exit code tells the outcome."""
    code = verify_file(instance_path)
    click.echo(EXIT_CODES.inverse[code])
    ctx.exit(code)


@main.command()
@click.argument("instance_path", type=click.Path(exists=True))
@click.option("--json", "json_out", default="-", show_default=True)
@click.option("--svg", "svg_out", default=None)
@click.option("--tol", type=float, default=DEFAULT_TOLERANCES['solve'],
              show_default=True)
@click.pass_context
def report(ctx, instance_path, json_out, svg_out, tol):
    """Write the valence report of a saved instance."""
    instance = _load_instance(instance_path)
    try:
        result = valence_report(instance.map, tol=tol, delta=instance.delta)
    except ValenceError as e:
        _fail(ctx, 'report', e)
    with click.open_file(json_out, 'w') as f:
        write_report(result, f)
    if svg_out is not None:
        from .plot import plot_report
        plot_report(result, pole_data(instance.map),
                    large_circle(instance.map), svg_out)


@main.command()
@click.argument("instance_path", type=click.Path(exists=True))
@click.option("--radius", type=float, default=1e-6, show_default=True)
@click.option("--samples", type=click.IntRange(min=1), default=8,
              show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
def sweep(instance_path, radius, samples, seed, jobs):
    """Fraction of nearby c keeping 3n - 1 zeros."""
    instance = _load_instance(instance_path)
    fraction = openness_sweep(instance.map, radius, samples, rng_seed=seed,
                              n_jobs=jobs)
    click.echo("%.6f" % fraction)


@main.command()
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option("--delta", type=float, required=True)
@click.pass_context
def blaschke(ctx, n, delta):
    """Fixed point and multiplier of (x**n + delta)/(1 + delta x**n)."""
    try:
        x_star, multiplier = blaschke_fixed_point(n, delta)
        radius = admissible_radius(n, delta)
    except ValenceError as e:
        _fail(ctx, 'blaschke', e)
    click.echo(dumps({"x_star": x_star, "multiplier": multiplier,
                      "radius": radius}), nl=False)
