"""Unit-root eigenvectors of 2x2 p-adic matrices with one unit and one non-unit eigenvalue."""
import logging
from functools import reduce

import numpy as np

from dworkhg.config import DEFAULT_EIGEN_METHOD, EigenMethods
from dworkhg.exceptions import InternalConsistencyError
from dworkhg.padic.number import PadicNum

logger = logging.getLogger(__name__)


def determinant(M: np.ndarray) -> PadicNum:
    return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]


def chain_product(matrices: list[np.ndarray]) -> np.ndarray:
    """Ordered product M_0 M_1 ... M_(m-1) of object arrays of p-adic numbers."""
    return reduce(np.matmul, matrices)


def _newton_unit_root(trace: PadicNum, det: PadicNum, n: int) -> PadicNum:
    """The unit root of x^2 - trace*x + det, Hensel-lifted from x = trace."""
    x = trace
    for _ in range(2 * n.bit_length() + 4):
        fx = x * x - trace * x + det
        if fx.with_precision(n).is_zero:
            break
        x = x - fx / (x * 2 - trace)
    return x


def _power_iterate(M: np.ndarray, n: int, slope: int) -> np.ndarray:
    """M^k e_j for the basis vector e_j giving the best second coordinate, k = ceil(n/slope) + 1."""
    steps = -(-n // max(slope, 1)) + 1
    power = reduce(np.matmul, [M] * steps)
    columns = [power[:, 0], power[:, 1]]
    return min(columns, key=lambda column: column[1].v)


def unit_eigen(
    M: np.ndarray, n: int, method: EigenMethods | str = DEFAULT_EIGEN_METHOD
) -> tuple[PadicNum, tuple[PadicNum, PadicNum]]:
    """Unit eigenvalue and its eigenvector, normalized to second coordinate -1.

    Args:
        M: 2x2 object array whose trace is a unit and whose determinant is divisible by p.
        n: Precision exponent of the result.
        method: "newton" solves the characteristic quadratic, "power" iterates M.

    Returns:
        The pair (lambda, (v1, -1)) with M v = lambda v mod p^n.

    Raises:
        InternalConsistencyError: The matrix or its unit eigenvector is degenerate.
    """
    trace = M[0, 0] + M[1, 1]
    det = determinant(M)
    if not trace.is_unit:
        raise InternalConsistencyError(f"degenerate-matrix: trace {trace!r} is not a unit")
    if not det.is_zero and det.v < 1:
        raise InternalConsistencyError(f"degenerate-matrix: determinant {det!r} is a unit")

    if method == EigenMethods.NEWTON:
        lam = _newton_unit_root(trace, det, n)
        other = det / lam
        # columns of M - other*I span the unit eigenspace
        candidates = [(M[0, 0] - other, M[1, 0]), (M[0, 1], M[1, 1] - other)]
        first, second = min(candidates, key=lambda column: column[1].v)
    elif method == EigenMethods.POWER:
        slope = det.v if not det.is_zero else n
        first, second = _power_iterate(M, n, slope)
        lam = None
    else:
        raise ValueError(f"Unsupported eigenvector method: {method}")

    if not second.is_unit:
        raise InternalConsistencyError(f"degenerate-eigenvector: second coordinate {second!r} is not a unit")
    v1 = -first / second
    minus_one = PadicNum.from_int(v1.p, -1, n)
    if lam is None:
        lam = -(M[1, 0] * v1 - M[1, 1])

    residual = (M[0, 0] * v1 - M[0, 1] - lam * v1, M[1, 0] * v1 - M[1, 1] + lam)
    if not all(r.with_precision(n).is_zero for r in residual):
        raise InternalConsistencyError(f"Eigenvector residual {residual!r} does not vanish mod p^{n}")
    logger.debug(f"Unit eigenvalue {lam!r} with eigenvector ({v1!r}, -1)")
    return lam.with_precision(n), (v1.with_precision(n), minus_one)
