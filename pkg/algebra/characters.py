"""
Character oracle at v = 1.

The character table of S_m is built by brute force from tabloid counts
and Kostka numbers, independently of any KL data. Matrices of T_s on a
module factor, specialised at v = 1, are checked against it class by
class. Above CHARACTER_RANK the table is not built and the check reports
itself as skipped.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, eye
from sympy.utilities.iterables import multiset_permutations

from algebra.linalg import specialised_matrix
from algebra.ring import LaurentPoly
from algebra.symgroup import Permutation
from algebra.tableaux import hook_length_count, kostka_number, partitions_of

logger = logging.getLogger(__name__)

CHARACTER_RANK = 5

Matrices = Dict[int, List[List[LaurentPoly]]]


def cycle_type(w: Permutation) -> Tuple[int, ...]:
    seen = set()
    lengths = []
    for start in range(1, w.rank + 1):
        if start in seen:
            continue
        size = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = w(i)
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


def class_representative(rho: Sequence[int]) -> Permutation:
    """A permutation with cycles (1..rho_1)(rho_1+1..) and so on."""
    images = []
    start = 1
    for size in rho:
        images.extend(range(start + 1, start + size))
        images.append(start)
        start += size
    return Permutation(images)


def permutation_character(nu: Sequence[int], w: Permutation) -> int:
    """Number of row-tabloids of shape nu fixed by w."""
    labels = [i for i, part in enumerate(nu) for _ in range(part)]
    fixed = 0
    for word in multiset_permutations(labels):
        if all(word[i - 1] == word[w(i) - 1] for i in range(1, w.rank + 1)):
            fixed += 1
    return fixed


_character_tables: Dict[int, Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]]] = {}


def specht_character_table(m: int) -> Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]]:
    """chi^lambda(rho) for partitions lambda and cycle types rho of m, from tabloid counts and Kostka numbers."""
    if m in _character_tables:
        return _character_tables[m]
    shapes = partitions_of(m)
    reps = [class_representative(rho) for rho in shapes]
    pi = Matrix([[permutation_character(nu, w) for w in reps] for nu in shapes])
    kostka = Matrix([[kostka_number(lam, nu) for nu in shapes] for lam in shapes])
    chars = kostka.T.inv() * pi
    table = {lam: {rho: int(chars[i, j]) for j, rho in enumerate(shapes)} for i, lam in enumerate(shapes)}
    _character_tables[m] = table
    return table


def specialized_trace(matrices: Dict[int, List[List[LaurentPoly]]], word: Sequence[int], size: Optional[int] = None) -> int:
    """Trace at v = 1 of M_{i1} M_{i2} ... for a word (i1, i2, ...)."""
    if size is None:
        size = len(next(iter(matrices.values())))
    product = eye(size)
    for s in word:
        product = product * Matrix(specialised_matrix(matrices[s]))
    return int(product.trace())


def character_check(matrices: Matrices, shape: Sequence[int]) -> Tuple[List[str], bool]:
    """(problems, checked): traces of the factor at v = 1 against chi^shape.

    checked is False when sum(shape) exceeds CHARACTER_RANK; no problems are
    reported in that case.
    """
    shape = tuple(shape)
    m = sum(shape)
    if m > CHARACTER_RANK:
        logger.debug(f"character check for {shape} skipped above rank {CHARACTER_RANK}")
        return [], False
    if not matrices:
        return [], True
    size = len(next(iter(matrices.values())))
    if size != hook_length_count(shape):
        return [f"factor has dimension {size}, chi^{shape} has degree {hook_length_count(shape)}"], True
    table = specht_character_table(m)
    problems = []
    for rho in partitions_of(m):
        word = class_representative(rho).reduced_word()
        trace = specialized_trace(matrices, word, size)
        if trace != table[shape][rho]:
            problems.append(f"trace on class {rho} is {trace}, chi^{shape} gives {table[shape][rho]}")
    return problems, True
