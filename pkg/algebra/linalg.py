"""
Rank decisions for coordinate vectors over A = Z[v, v^-1].

A family of vectors over A is linearly independent as soon as its
coordinate matrix has full rank after sending v to some unit of a prime
field: a nonzero maximal minor specialises to a nonzero value. When every
evaluation point drops rank the answer is settled by exact elimination
over the fraction field Q(v), after multiplying each row by a power of v.
"""

import logging
from typing import Dict, Hashable, List, Mapping, Sequence

from sympy import Add, Integer, symbols
from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from algebra.ring import LaurentPoly

logger = logging.getLogger(__name__)

PRIME = 2_147_483_647
EVALUATION_POINTS = (3, 7, 1_000_003)

_v = symbols("v")
POLY_RING = ZZ[_v]

Vector = Mapping[Hashable, LaurentPoly]


def coordinate_rows(vectors: Sequence[Vector]) -> tuple:
    """Support columns (deterministically ordered) and the rows as dicts."""
    columns = sorted({key for vec in vectors for key in vec}, key=repr)
    return columns, [dict(vec) for vec in vectors]


def rank_at(vectors: Sequence[Vector], v: int, prime: int = PRIME) -> int:
    """Rank of the coordinate matrix with v specialised to v mod prime."""
    if not vectors:
        return 0
    columns, rows = coordinate_rows(vectors)
    if not columns:
        return 0
    field = GF(prime)
    matrix = DomainMatrix(
        [[field(row[c].evaluate_mod(v, prime)) if c in row else field.zero for c in columns] for row in rows],
        (len(rows), len(columns)),
        field,
    )
    return matrix.rank()


def _as_polynomial(entry: LaurentPoly, shift: int):
    return POLY_RING.from_sympy(Add(*[Integer(c) * _v ** (e + shift) for e, c in entry.terms()]))


def exact_rank(vectors: Sequence[Vector]) -> int:
    """Rank over A, computed in Q(v); row scaling by v^k is a unit and keeps the rank."""
    if not vectors:
        return 0
    columns, rows = coordinate_rows(vectors)
    if not columns:
        return 0
    entries = []
    for row in rows:
        low = min((e for poly in row.values() for e, _ in poly.terms()), default=0)
        entries.append([_as_polynomial(row[c], -low) if c in row else POLY_RING.zero for c in columns])
    matrix = DomainMatrix(entries, (len(rows), len(columns)), POLY_RING)
    return matrix.convert_to(POLY_RING.get_field()).rank()


def is_independent(vectors: Sequence[Vector]) -> bool:
    """True if the vectors are A-linearly independent."""
    if not vectors:
        return True
    for v in EVALUATION_POINTS:
        rank = rank_at(vectors, v)
        if rank == len(vectors):
            return True
        logger.debug(f"rank {rank} < {len(vectors)} at v={v}")
    if len({key for vec in vectors for key in vec}) < len(vectors):
        logger.warning(f"{len(vectors)} vectors span fewer coordinates than their number")
        return False
    rank = exact_rank(vectors)
    if rank == len(vectors):
        logger.info(f"{len(vectors)} vectors independent over A; every evaluation point was a root")
        return True
    logger.warning(f"{len(vectors)} vectors have rank {rank} over A")
    return False


def specialised_matrix(matrix: List[List[LaurentPoly]]) -> List[List[int]]:
    """Entrywise value at v = 1."""
    return [[entry.specialize_one() for entry in row] for row in matrix]


def matrices_to_json(matrices: Dict[int, List[List[LaurentPoly]]]) -> Dict[str, List[List[List[List[int]]]]]:
    return {str(s): [[entry.to_json() for entry in row] for row in matrix] for s, matrix in sorted(matrices.items())}
