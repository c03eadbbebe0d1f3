import argparse
import configparser
import logging
import sys

from certified_simplex.src.certified_simplex import CertifiedSimplex, to_certificate
from certified_simplex.src.errors import CertificateError, PolyhedraError
from certified_simplex.src.hull import InHull
from certified_simplex.src.ratlin import Matrix, dot, format_rational
from certified_simplex.src.results import Infeasible, Optimal
from certified_simplex.src.utils.config_parser import Options
from certified_simplex.src.utils.lp_format import format_cert, format_points, parse_vector

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


def _values(v) -> str:
    return ' '.join(format_rational(q) for q in v.entries)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='certified-simplex',
        description='Exact rational simplex method with checkable certificates.'
    )
    parser.add_argument('--config', default='config.ini', help='Path to the config file')
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')
    parser.add_argument('--no-verify', action='store_true', help='Do not re-check certificates before reporting them')
    commands = parser.add_subparsers(dest='command', required=True)

    solve = commands.add_parser('solve', help='Solve an LP file and print its certificate')
    solve.add_argument('lp')
    solve.add_argument('-o', '--output', help='Write the certificate to this file')

    feasible = commands.add_parser('feasible', help='Decide whether the polyhedron of an LP file is empty')
    feasible.add_argument('lp')
    feasible.add_argument('-o', '--output', help='Write the certificate to this file')

    vertices = commands.add_parser('vertices', help='Print the basic points of the polyhedron')
    vertices.add_argument('lp')
    vertices.add_argument('--bases', action='store_true', help='Precede each point with its basis rows')

    for name, help_text in (('hull-member', 'Test membership in the convex hull of a point cloud'),
                            ('separate', 'Separate a point from the convex hull of a point cloud')):
        command = commands.add_parser(name, help=help_text)
        command.add_argument('points')
        command.add_argument('--point', required=True, help='Space-separated rationals, e.g. "4 3/2"')

    minkowski = commands.add_parser('minkowski', help='Compare a bounded polyhedron with the hull of its vertices')
    minkowski.add_argument('lp')
    minkowski.add_argument('--samples', type=int, help='Number of random sample points')
    minkowski.add_argument('--seed', type=int, help='Seed of the sample generator')

    check = commands.add_parser('check', help='Verify a certificate file against an LP file')
    check.add_argument('lp')
    check.add_argument('cert')
    return parser


def _run(solver: CertifiedSimplex, args) -> int:
    if args.command == 'solve':
        lp = solver.load_lp(args.lp)
        result = solver.solve(lp)
        text = format_cert(to_certificate(result))
        if args.output:
            solver.write_text(args.output, text)
            print(f'status {result.status}')
        else:
            print(text, end='')
        if isinstance(result, Optimal):
            print(f'value {format_rational(dot(lp.c, result.x))}')
        return EXIT_OK

    if args.command == 'feasible':
        outcome = solver.feasibility(solver.load_lp(args.lp))
        if isinstance(outcome, Infeasible):
            print('infeasible')
            print(f'd {_values(outcome.d)}'.rstrip())
        else:
            print('feasible')
            print(f'x {_values(outcome)}'.rstrip())
        if args.output:
            solver.write_text(args.output, format_cert(to_certificate(outcome)))
        return EXIT_OK

    if args.command == 'vertices':
        lp = solver.load_lp(args.lp)
        pairs = solver.vertices(lp)
        V = Matrix.from_columns([point for _, point in pairs], lp.n)
        comments = ['basis ' + ' '.join(str(i) for i in basis) for basis, _ in pairs] if args.bases else None
        print(format_points(V, comments), end='')
        return EXIT_OK

    if args.command in ('hull-member', 'separate'):
        V = solver.load_points(args.points)
        x = parse_vector(args.point, V.rows)
        if args.command == 'hull-member':
            print('member' if solver.hull_member(V, x) else 'not-member')
        else:
            cvec = solver.separate(V, x)
            print('in-hull' if isinstance(cvec, InHull) else f'separator {_values(cvec)}')
        return EXIT_OK

    if args.command == 'minkowski':
        count, mismatch = solver.minkowski(solver.load_lp(args.lp), args.samples, args.seed)
        if mismatch is not None:
            print(f'minkowski mismatch at {_values(mismatch)}')
            return EXIT_FAILED
        print(f'minkowski holds on {count} samples')
        return EXIT_OK

    # check
    ok = solver.check(solver.load_lp(args.lp), solver.load_cert(args.cert))
    print('verified' if ok else 'verification failed')
    return EXIT_OK if ok else EXIT_FAILED


def main(argv=None) -> int:
    """
    Main function for the certified_simplex utility.
    """
    args = _build_parser().parse_args(argv)
    try:
        options = Options(args.config)
    except (PolyhedraError, ValueError, configparser.Error) as e:
        logger.error(f'Invalid config file "{args.config}": {e}')
        return EXIT_INPUT_ERROR

    solver = CertifiedSimplex(
        verify_certificates=options.verify_certificates and not args.no_verify,
        progress=options.progress,
        debug=options.debug or args.debug,
        samples=options.samples,
        sample_low=options.sample_low,
        sample_high=options.sample_high,
        sample_denominator=options.sample_denominator,
        seed=options.seed,
    )

    try:
        return _run(solver, args)
    except CertificateError as e:
        solver.logger.error(str(e))
        print('verification failed')
        return EXIT_FAILED
    except (PolyhedraError, OSError) as e:
        solver.logger.error(str(e))
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
