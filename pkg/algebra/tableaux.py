"""
Compositions, partitions, diagrams and tableaux.

Covers the combinatorics the Hecke algebra side leans on: conjugates and
dominance, the special diagrams of a pair of compositions, Robinson-Schensted
row insertion (and its reverse), corners of Young diagrams, standard and
typed tableau enumeration.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from algebra.errors import PreconditionError
from algebra.symgroup import Permutation

logger = logging.getLogger(__name__)

Node = Tuple[int, int]


# ----------------------------------------------------------------------
# Compositions and partitions
# ----------------------------------------------------------------------

def composition(parts: Iterable[int]) -> Tuple[int, ...]:
    """Validate a composition: a non-empty tuple of positive integers."""
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise PreconditionError(f"not a composition: {parts}")
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and all(p > 0 for p in parts)


def partition(parts: Iterable[int]) -> Tuple[int, ...]:
    parts = composition(parts)
    if not is_partition(parts):
        raise PreconditionError(f"not a partition: {parts}")
    return parts


def conjugate(parts: Sequence[int]) -> Tuple[int, ...]:
    """lambda'_j = #{i : lambda_i >= j}; always a partition."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, max(parts) + 1))


def sorted_partition(parts: Sequence[int]) -> Tuple[int, ...]:
    """lambda'': the decreasing rearrangement of lambda."""
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """a is dominated by b (prefix sums of a never exceed those of b)."""
    if sum(a) != sum(b):
        raise PreconditionError(f"dominance needs equal totals: {tuple(a)} vs {tuple(b)}")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def dominance_lt(a: Sequence[int], b: Sequence[int]) -> bool:
    return tuple(a) != tuple(b) and dominance_leq(a, b)


def partitions_of(m: int) -> List[Tuple[int, ...]]:
    """All partitions of m in reverse lexicographic order, (m) first."""
    out: List[Tuple[int, ...]] = []

    def build(remaining: int, cap: int, prefix: Tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            build(remaining - part, part, prefix + (part,))

    build(m, m, ())
    return out


def compositions_of(m: int) -> List[Tuple[int, ...]]:
    """All compositions of m in lexicographic order."""
    if m == 0:
        return [()]
    out = []
    for first in range(1, m + 1):
        for rest in compositions_of(m - first):
            out.append((first,) + rest)
    return sorted(out)


def hook_length_count(shape: Sequence[int]) -> int:
    """f^lambda, the number of standard tableaux of shape lambda."""
    shape = sorted_partition(shape)
    if not shape:
        return 1
    cols = conjugate(shape)
    hooks = 1
    for r, row_len in enumerate(shape):
        for c in range(row_len):
            hooks *= (row_len - c - 1) + (cols[c] - r - 1) + 1
    return factorial(sum(shape)) // hooks


def add_box(shape: Sequence[int], node: Node) -> Tuple[int, ...]:
    r, _ = node
    parts = list(shape)
    if r > len(parts):
        parts.append(1)
    else:
        parts[r - 1] += 1
    return tuple(parts)


def remove_box(shape: Sequence[int], node: Node) -> Tuple[int, ...]:
    r, _ = node
    parts = list(shape)
    parts[r - 1] -= 1
    return tuple(p for p in parts if p > 0)


# ----------------------------------------------------------------------
# Diagrams
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Diagram:
    """A finite set of nodes (row, column), both indexed from 1."""

    nodes: FrozenSet[Node]

    @classmethod
    def young(cls, shape: Sequence[int]) -> "Diagram":
        return cls(frozenset((r + 1, c + 1) for r, length in enumerate(shape) for c in range(length)))

    @property
    def size(self) -> int:
        return len(self.nodes)

    def row_composition(self) -> Tuple[int, ...]:
        rows = max((r for r, _ in self.nodes), default=0)
        return tuple(sum(1 for r, _ in self.nodes if r == i) for i in range(1, rows + 1))

    def column_composition(self) -> Tuple[int, ...]:
        cols = max((c for _, c in self.nodes), default=0)
        return tuple(sum(1 for _, c in self.nodes if c == j) for j in range(1, cols + 1))

    def is_principal(self) -> bool:
        return all(self.row_composition()) and all(self.column_composition())

    def is_young(self) -> bool:
        rows = self.row_composition()
        return is_partition(rows) and self == Diagram.young(rows)

    def sorted_nodes(self) -> List[Node]:
        """Nodes in row-major order."""
        return sorted(self.nodes, key=node_order_key)

    def rows(self) -> List[List[Node]]:
        count = max((r for r, _ in self.nodes), default=0)
        return [sorted(n for n in self.nodes if n[0] == r) for r in range(1, count + 1)]

    def columns(self) -> List[List[Node]]:
        count = max((c for _, c in self.nodes), default=0)
        return [sorted(n for n in self.nodes if n[1] == c) for c in range(1, count + 1)]

    def to_json(self) -> List[List[int]]:
        return [list(n) for n in sorted(self.nodes)]


def node_order_key(node: Node) -> Tuple[int, int]:
    """(i, j) < (i', j') iff i < i', or i = i' and j < j'."""
    return (node[0], node[1])


def special_diagram(lam: Sequence[int], mu: Sequence[int]) -> Diagram:
    """The unique principal diagram with row-composition lam and column-composition mu."""
    lam = composition(lam)
    mu = composition(mu)
    if sorted_partition(lam) != conjugate(mu):
        raise PreconditionError("lambda''=mu' required")
    young_cols = conjugate(sorted_partition(lam))
    # Young column c goes to some position p with mu_p equal to its length.
    free: Dict[int, List[int]] = {}
    for p, size in enumerate(mu, start=1):
        free.setdefault(size, []).append(p)
    column_of: Dict[int, int] = {}
    for c, size in enumerate(young_cols, start=1):
        column_of[c] = free[size].pop(0)
    nodes = frozenset((r, column_of[c]) for r, row_len in enumerate(lam, start=1) for c in range(1, row_len + 1))
    diagram = Diagram(nodes)
    if diagram.row_composition() != lam or diagram.column_composition() != mu:
        raise PreconditionError(f"no special diagram for lambda={lam}, mu={mu}")
    return diagram


def w_of_diagram(diagram: Diagram) -> Permutation:
    """w_D with t^D w_D = t_D: row-reading filling mapped to column-reading filling."""
    by_rows = [n for row in diagram.rows() for n in row]
    by_cols = [n for col in diagram.columns() for n in col]
    t_upper = {n: i for i, n in enumerate(by_rows, start=1)}
    t_lower = {n: i for i, n in enumerate(by_cols, start=1)}
    images = [0] * diagram.size
    for n in diagram.nodes:
        images[t_upper[n] - 1] = t_lower[n]
    return Permutation(images)


# ----------------------------------------------------------------------
# Tableaux
# ----------------------------------------------------------------------

class StandardTableau:
    """A filling of a Young diagram given by its rows; entries need not be 1..m."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows: Tuple[Tuple[int, ...], ...] = tuple(r for r in (tuple(x) for x in rows) if r)
        self._hash = hash(self.rows)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> List[int]:
        return [x for r in self.rows for x in r]

    def node_of(self, value: int) -> Node:
        for r, row in enumerate(self.rows, start=1):
            if value in row:
                return (r, row.index(value) + 1)
        raise KeyError(value)

    def entry(self, node: Node) -> int:
        return self.rows[node[0] - 1][node[1] - 1]

    def column(self, j: int) -> List[int]:
        return [row[j - 1] for row in self.rows if len(row) >= j]

    def is_standard(self) -> bool:
        if not is_partition(self.shape):
            return False
        if sorted(self.entries()) != list(range(1, self.size + 1)):
            return False
        for row in self.rows:
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                return False
        for r in range(len(self.rows) - 1):
            if any(self.rows[r][c] >= self.rows[r + 1][c] for c in range(len(self.rows[r + 1]))):
                return False
        return True

    def with_entry(self, node: Node, value: int) -> "StandardTableau":
        r, c = node
        rows = [list(row) for row in self.rows]
        if r > len(rows):
            rows.append([])
        if len(rows[r - 1]) != c - 1:
            raise PreconditionError(f"node {node} is not an outer corner of shape {self.shape}")
        rows[r - 1].append(value)
        return StandardTableau(rows)

    def relabel(self, w: Permutation) -> "StandardTableau":
        """Replace each entry i by i.w."""
        return StandardTableau([[w(x) for x in row] for row in self.rows])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"StandardTableau({[list(r) for r in self.rows]})"

    def pretty(self) -> str:
        width = max((len(str(x)) for x in self.entries()), default=1)
        return "\n".join(" ".join(str(x).ljust(width) for x in row) for row in self.rows)

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


def _row_insert(rows: List[List[int]], value: int) -> Node:
    """Row-insert value; return the node added to the shape."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([value])
            return (r + 1, 1)
        row = rows[r]
        bump_at = next((k for k, x in enumerate(row) if x > value), None)
        if bump_at is None:
            row.append(value)
            return (r + 1, len(row))
        row[bump_at], value = value, row[bump_at]
        r += 1


@lru_cache(maxsize=None)
def rs_insert(w: Permutation) -> Tuple[StandardTableau, StandardTableau]:
    """Robinson-Schensted row insertion of the one-line form, left to right."""
    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for step, value in enumerate(w.images, start=1):
        r, _ = _row_insert(p_rows, value)
        if r > len(q_rows):
            q_rows.append([])
        q_rows[r - 1].append(step)
    return StandardTableau(p_rows), StandardTableau(q_rows)


def p_tableau(w: Permutation) -> StandardTableau:
    return rs_insert(w)[0]


def q_tableau(w: Permutation) -> StandardTableau:
    return rs_insert(w)[1]


def rs_shape(w: Permutation) -> Tuple[int, ...]:
    return rs_insert(w)[0].shape


def reverse_bump(tableau: StandardTableau, node: Node) -> Tuple[int, StandardTableau]:
    """Reverse row insertion starting from the inner corner node.

    Returns the entry ejected from the first row and the remaining tableau.
    """
    rows = [list(r) for r in tableau.rows]
    r, c = node
    if len(rows[r - 1]) != c or (r < len(rows) and len(rows[r]) >= c):
        raise PreconditionError(f"node {node} is not an inner corner of shape {tableau.shape}")
    value = rows[r - 1].pop()
    for k in range(r - 2, -1, -1):
        row = rows[k]
        # largest entry smaller than value
        idx = max(i for i, x in enumerate(row) if x < value)
        row[idx], value = value, row[idx]
    return value, StandardTableau(rows)


def rs_reverse_insert(p: StandardTableau, q: StandardTableau) -> Permutation:
    """The unique w with P(w) = p and Q(w) = q."""
    if p.shape != q.shape:
        raise PreconditionError(f"shape mismatch: {p.shape} vs {q.shape}")
    m = p.size
    images = [0] * m
    for step in range(m, 0, -1):
        node = q.node_of(step)
        value, p = reverse_bump(p, node)
        rows = [list(r) for r in q.rows]
        rows[node[0] - 1].pop()
        q = StandardTableau(rows)
        images[step - 1] = value
    return Permutation(images)


def corners(shape: Sequence[int]) -> Tuple[List[Node], List[Node]]:
    """Inner (removable) and outer (addable) corners, each sorted by the node order."""
    shape = tuple(shape)
    inner = [
        (r, shape[r - 1])
        for r in range(1, len(shape) + 1)
        if r == len(shape) or shape[r] < shape[r - 1]
    ]
    outer = [(1, (shape[0] if shape else 0) + 1)]
    outer += [(r + 1, shape[r] + 1) for r in range(1, len(shape)) if shape[r] < shape[r - 1]]
    outer.append((len(shape) + 1, 1))
    outer = sorted(set(outer), key=node_order_key)
    return sorted(inner, key=node_order_key), outer


@lru_cache(maxsize=None)
def standard_tableaux(shape: Tuple[int, ...]) -> Tuple[StandardTableau, ...]:
    """All standard tableaux of a partition shape, by placing m, m-1, ... at inner corners."""
    m = sum(shape)
    if m == 0:
        return (StandardTableau([]),)
    out = []
    for node in corners(shape)[0]:
        smaller = remove_box(shape, node)
        for t in standard_tableaux(smaller):
            out.append(t.with_entry(node, m))
    return tuple(sorted(out, key=lambda t: t.rows))


# ----------------------------------------------------------------------
# Tableaux with repeated entries
# ----------------------------------------------------------------------

class TypedTableau:
    """A Young-shaped filling by symbols 1..r with symbol i used mu_i times."""

    __slots__ = ("rows", "type")

    def __init__(self, rows: Iterable[Iterable[int]], mu: Sequence[int]):
        self.rows: Tuple[Tuple[int, ...], ...] = tuple(r for r in (tuple(x) for x in rows) if r)
        self.type: Tuple[int, ...] = composition(mu)
        counts = [0] * len(self.type)
        for row in self.rows:
            for x in row:
                if not 1 <= x <= len(self.type):
                    raise PreconditionError(f"symbol {x} outside 1..{len(self.type)}")
                counts[x - 1] += 1
        if tuple(counts) != self.type:
            raise PreconditionError(f"tableau {self.rows} does not have type {self.type}")

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def column(self, j: int) -> List[int]:
        return [row[j - 1] for row in self.rows if len(row) >= j]

    def is_c_semistandard(self) -> bool:
        """Rows strictly increasing, columns weakly increasing downwards."""
        if not is_partition(self.shape):
            return False
        for row in self.rows:
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                return False
        for r in range(len(self.rows) - 1):
            if any(self.rows[r][c] > self.rows[r + 1][c] for c in range(len(self.rows[r + 1]))):
                return False
        return True

    def is_semistandard(self) -> bool:
        """Rows weakly increasing, columns strictly increasing downwards."""
        if not is_partition(self.shape):
            return False
        for row in self.rows:
            if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
                return False
        for r in range(len(self.rows) - 1):
            if any(self.rows[r][c] >= self.rows[r + 1][c] for c in range(len(self.rows[r + 1]))):
                return False
        return True

    def column_word(self) -> Tuple[int, ...]:
        """Columns left to right, each read bottom to top."""
        width = self.shape[0] if self.rows else 0
        word: List[int] = []
        for j in range(1, width + 1):
            word.extend(reversed(self.column(j)))
        return tuple(word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TypedTableau) and (self.rows, self.type) == (other.rows, other.type)

    def __hash__(self) -> int:
        return hash((self.rows, self.type))

    def __repr__(self) -> str:
        return f"TypedTableau({[list(r) for r in self.rows]}, mu={self.type})"

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


def _strips(shape: Tuple[int, ...], count: int, vertical: bool, bound: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Shapes nu containing `shape`, inside `bound`, with nu/shape a vertical (or horizontal) strip of size count."""
    rows = max(len(bound), len(shape) + count)
    base = list(shape) + [0] * (rows - len(shape))
    cap = list(bound) + [0] * (rows - len(bound))

    def extend(r: int, left: int, acc: List[int]) -> Iterator[Tuple[int, ...]]:
        if r == rows:
            if left == 0:
                yield tuple(p for p in acc if p > 0)
            return
        max_add = 1 if vertical else left
        for add in range(0, min(max_add, left) + 1):
            new = base[r] + add
            if new > cap[r]:
                break
            if r > 0 and new > acc[r - 1]:
                break
            if not vertical and r > 0 and new > base[r - 1]:
                break
            yield from extend(r + 1, left - add, acc + [new])

    yield from extend(0, count, [])


def _tableaux_by_strips(lam: Tuple[int, ...], mu: Tuple[int, ...], vertical: bool) -> List[TypedTableau]:
    results: List[TypedTableau] = []

    def build(i: int, shape: Tuple[int, ...], fill: Dict[Node, int]) -> None:
        if i == len(mu):
            if shape == lam:
                rows = [[fill[(r, c)] for c in range(1, length + 1)] for r, length in enumerate(lam, start=1)]
                results.append(TypedTableau(rows, mu))
            return
        for nxt in _strips(shape, mu[i], vertical, lam):
            new_fill = dict(fill)
            for r, length in enumerate(nxt, start=1):
                old = shape[r - 1] if r <= len(shape) else 0
                for c in range(old + 1, length + 1):
                    new_fill[(r, c)] = i + 1
            build(i + 1, nxt, new_fill)

    build(0, (), {})
    return sorted(results, key=lambda t: t.rows)


def c_semistandard_tableaux(lam: Sequence[int], mu: Sequence[int]) -> List[TypedTableau]:
    """c-semistandard lambda-tableaux of type mu: each symbol fills a vertical strip."""
    lam = partition(lam)
    mu = composition(mu)
    if sum(lam) != sum(mu):
        return []
    return _tableaux_by_strips(lam, mu, vertical=True)


def semistandard_tableaux(lam: Sequence[int], mu: Sequence[int]) -> List[TypedTableau]:
    """Semistandard lambda-tableaux of type mu: each symbol fills a horizontal strip."""
    lam = partition(lam)
    mu = composition(mu)
    if sum(lam) != sum(mu):
        return []
    return _tableaux_by_strips(lam, mu, vertical=False)


def kostka_number(lam: Sequence[int], mu: Sequence[int]) -> int:
    return len(semistandard_tableaux(lam, mu))
