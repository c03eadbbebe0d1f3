"""
The certified_simplex module provides the CertifiedSimplex class
for solving, checking and analysing linear programs read from text files.
"""

import os
import logging
import random
from fractions import Fraction
from typing import List, Optional, Tuple, Union

import coloredlogs

from .certcheck import (check_feasible_point, check_infeasible, check_optimal, check_result,
                        check_separation, check_unbounded)
from .errors import CertificateError
from .hull import InHull, is_in_convex_hull, minkowski_mismatch, sample_points, separation_hyperplane, vertex_bases
from .polyhedron import LinearProgram
from .ratlin import Matrix, dot
from .results import Infeasible, Optimal, SimplexResult, Unbounded
from .simplex import feasible_point, infeasibility_certificate, simplex
from .utils.lp_format import Certificate, parse_cert, parse_lp, parse_points


def to_certificate(result: Union[SimplexResult, Matrix]) -> Certificate:
    """Certificate file contents for a simplex result, or for a bare feasible point."""
    if isinstance(result, Optimal):
        return Certificate(result.status, x=result.x, u=result.u)
    if isinstance(result, Unbounded):
        return Certificate(result.status, x=result.x, d=result.d)
    if isinstance(result, Infeasible):
        return Certificate(result.status, d=result.d)
    return Certificate('not-applicable', x=result)


class CertifiedSimplex:
    """
    Class for solving linear programs ``minimize <c, x> subject to A x >= b``
    with exact rationals and checked certificates.

    Example:
    ```
    solver = CertifiedSimplex(debug=True)
    lp = solver.load_lp('fig1.lp')
    result = solver.solve(lp)
    solver.write_text('fig1.cert', format_cert(to_certificate(result)))
    ```
    """

    def __init__(
        self, verify_certificates: bool = True, progress: bool = False, debug: bool = False,
        samples: int = 50, sample_low=-2, sample_high=10, sample_denominator: int = 4, seed: int = 0
    ):
        """
        Initialize the CertifiedSimplex object.

        :param verify_certificates: Re-check every certificate before returning it.
        :param progress: Show tqdm progress bars for long enumerations.
        :param debug: Flag indicating whether to enable debug logging.
        :param samples: Number of sample points used by :meth:`minkowski`.
        :param sample_low: Smallest sample coordinate.
        :param sample_high: Largest sample coordinate.
        :param sample_denominator: Samples lie on the grid of step ``1 / sample_denominator``.
        :param seed: Seed of the sample generator.
        """
        self.verify_certificates = verify_certificates
        self.progress = progress
        self.debug = debug
        self.samples = samples
        self.sample_low = Fraction(sample_low)
        self.sample_high = Fraction(sample_high)
        self.sample_denominator = sample_denominator
        self.seed = seed

        self.logger = self._setup_logging()

    def _setup_logging(self) -> logging.Logger:
        """
        Setup logging with coloredlogs.

        :return: Configured logger instance.
        """
        level = logging.DEBUG if self.debug else logging.INFO
        logging.basicConfig(level=level)
        coloredlogs.install(level=level)
        return logging.getLogger(__name__)

    def _read(self, path: str) -> str:
        if not os.path.exists(path):
            self.logger.error(f'Path "{path}" does not exist.')
            raise FileNotFoundError(f'The specified input file "{path}" does not exist.')
        with open(path, encoding='utf-8') as f:
            return f.read()

    def _verified(self, ok: bool, what: str) -> None:
        if self.verify_certificates and not ok:
            self.logger.error(f'Certificate check failed for {what}')
            raise CertificateError(f'the {what} certificate does not verify')

    def load_lp(self, path: str) -> LinearProgram:
        lp = parse_lp(self._read(path))
        self.logger.debug(f'Loaded a {lp.m}x{lp.n} program from {path}')
        return lp

    def load_points(self, path: str) -> Matrix:
        V = parse_points(self._read(path))
        self.logger.debug(f'Loaded {V.cols} points in dimension {V.rows} from {path}')
        return V

    def load_cert(self, path: str) -> Certificate:
        return parse_cert(self._read(path))

    def solve(self, lp: LinearProgram) -> SimplexResult:
        """
        Solve the program.

        :return: ``Infeasible``, ``Unbounded`` or ``Optimal`` with its certificate.
        :raises CertificateError: If verification is on and the certificate fails.
        """
        result = simplex(lp.A, lp.b, lp.c)
        self._verified(check_result(lp.A, lp.b, lp.c, result), result.status)
        if isinstance(result, Optimal):
            self.logger.info(f'Optimal value {dot(lp.c, result.x)}')
        else:
            self.logger.info(f'Program is {result.status}')
        return result

    def feasibility(self, lp: LinearProgram) -> Union[Matrix, Infeasible]:
        """A point of the polyhedron, or ``Infeasible`` with its Farkas certificate."""
        x = feasible_point(lp.A, lp.b)
        if x is not None:
            self._verified(check_feasible_point(lp.A, lp.b, x), 'feasible point')
            self.logger.info('Polyhedron is nonempty')
            return x
        d = infeasibility_certificate(lp.A, lp.b)
        self._verified(check_infeasible(lp.A, lp.b, d), 'infeasibility')
        self.logger.info('Polyhedron is empty')
        return Infeasible(d)

    def vertices(self, lp: LinearProgram) -> List[Tuple[Tuple[int, ...], Matrix]]:
        """Feasible bases with their basic points, in lexicographic order of the bases."""
        pairs = vertex_bases(lp.A, lp.b, self.progress)
        self.logger.info(f'{len(pairs)} feasible bases')
        return pairs

    def hull_member(self, V: Matrix, x: Matrix) -> bool:
        return is_in_convex_hull(V, x)

    def separate(self, V: Matrix, x: Matrix) -> Union[Matrix, InHull]:
        """A separating vector ``cvec`` for ``x`` and the columns of ``V``, or ``InHull``."""
        cvec = separation_hyperplane(V, x)
        if not isinstance(cvec, InHull):
            self._verified(check_separation(V, x, cvec), 'separation')
        return cvec

    def minkowski(self, lp: LinearProgram, samples: int = None, seed: int = None) -> Tuple[int, Optional[Matrix]]:
        """
        Compare the polyhedron with the hull of its basic points on random samples.

        :return: The number of samples and the first mismatching sample, or None.
        :raises NotBounded: If the polyhedron is unbounded.
        """
        samples = self.samples if samples is None else samples
        seed = self.seed if seed is None else seed
        xs = sample_points(
            lp.n, samples, self.sample_low, self.sample_high, self.sample_denominator, random.Random(seed)
        )
        self.logger.info(f'Checking {samples} samples in [{self.sample_low}, {self.sample_high}]^{lp.n} ...')
        return samples, minkowski_mismatch(lp.A, lp.b, xs, self.progress)

    def check(self, lp: LinearProgram, cert: Certificate) -> bool:
        """Verify a certificate file against the program it claims to describe."""
        try:
            if cert.status == 'optimal':
                return check_optimal(lp.A, lp.b, lp.c, cert.x, cert.u)
            if cert.status == 'unbounded':
                return check_unbounded(lp.A, lp.b, lp.c, cert.x, cert.d)
            if cert.status == 'infeasible':
                return check_infeasible(lp.A, lp.b, cert.d)
            return cert.x is not None and check_feasible_point(lp.A, lp.b, cert.x)
        except ValueError as e:
            # Vectors of the wrong length
            self.logger.warning(f'Certificate does not match the program: {e}')
            return False

    def write_text(self, path: str, text: str) -> str:
        """
        Write ``text`` to ``path``.

        :return: The absolute path of the written file.
        """
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        self.logger.info(f'Saved {path}')
        return os.path.abspath(path)
