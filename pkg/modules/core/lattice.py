"""
Cell-parameter conversion, positive-definiteness and the GL_n(Z) action
"""
import logging
import math
from fractions import Fraction

import numpy as np

from modules.core import linalg
from modules.core.models import CellParameters, SymMat3, sym_from_matrix
from modules.core.numeric import get_numeric, is_exact, to_scalar
from modules.shared.errors import NonPositiveDefinite

logger = logging.getLogger(__name__)

# cos(60 deg) = 0.5000000000000001 in binary; snapping to 12 decimals recovers 1/2
COSINE_DECIMALS = 12


def _cos_degrees(angle):
    value = math.cos(math.radians(float(angle)))
    if is_exact():
        return Fraction(str(round(value, COSINE_DECIMALS)))
    return value


def gram_from_cell(cell: CellParameters) -> SymMat3:
    a, b, c = (to_scalar(x) for x in cell.lengths())
    cos_alpha, cos_beta, cos_gamma = (_cos_degrees(x) for x in cell.angles())
    gram = SymMat3(a * a, b * b, c * c, a * b * cos_gamma, a * c * cos_beta, b * c * cos_alpha)
    if not is_positive_definite(gram):
        raise NonPositiveDefinite(f"cell {cell} does not define a positive-definite Gram matrix")
    return gram


def cell_from_gram(gram: SymMat3) -> CellParameters:
    require_positive_definite(gram)
    m = np.array([[float(x) for x in row] for row in gram.rows])
    lengths = np.sqrt(np.diag(m))
    cosines = [m[1, 2] / (lengths[1] * lengths[2]),
               m[0, 2] / (lengths[0] * lengths[2]),
               m[0, 1] / (lengths[0] * lengths[1])]
    angles = np.degrees(np.arccos(np.clip(cosines, -1.0, 1.0)))
    return CellParameters(*(float(x) for x in lengths), *(float(x) for x in angles))


def is_positive_definite(gram) -> bool:
    num = get_numeric()
    return all(num.positive(m) for m in gram.leading_minors())


def require_positive_definite(gram):
    if not is_positive_definite(gram):
        raise NonPositiveDefinite(f"matrix {gram.entries()} is not positive-definite")
    return gram


def apply_unimodular(g, gram):
    """g S g^T; the rows of g are the new basis vectors"""
    if g.n != gram.n:
        raise ValueError(f"dimension mismatch: {g.n}x{g.n} transform on a rank-{gram.n} form")
    rows = linalg.mat_mul(linalg.mat_mul(g.rows, gram.rows), linalg.transpose(g.rows))
    return sym_from_matrix(rows)


def transform_rows(rows, gram):
    """Gram matrix of the (not necessarily unimodular) basis given by rows"""
    return sym_from_matrix(linalg.mat_mul(linalg.mat_mul(rows, gram.rows), linalg.transpose(rows)))
