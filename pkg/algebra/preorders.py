"""
Kazhdan-Lusztig Preorders and Cells

The right preorder is the reflexive-transitive closure of the relation
x <-_s y (C'_x occurs in C'_y T_s). Cells are the strongly connected
components of that graph. The left preorder is transported through
inversion, and the two-sided preorder is reachability in the union of
both graphs.

Usage:
    from algebra.preorders import get_cell_structure

    cells = get_cell_structure(4)
    cells.right_cell_of(w), cells.leq_right(x, y)
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from algebra.hecke import (
    Basis,
    bar_involution,
    c_basis_element,
    c_structure_constants_by_expansion,
    c_structure_constants_right,
    cprime_basis_element,
    j_involution,
    structure_constants_right,
    structure_constants_right_by_expansion,
    t_element,
    t_multiply,
    to_basis,
)
from algebra.kl import KLTable, get_kl_table
from algebra.schemas import CellDump, CellStructureDump, ClaimReport
from algebra.symgroup import (
    Permutation,
    all_permutations,
    bruhat_leq,
    compose,
    coset_reps_star,
    generators_of,
    split_left_coset,
)
from algebra.tableaux import dominance_leq, p_tableau, q_tableau, rs_shape

logger = logging.getLogger(__name__)

Cell = FrozenSet[Permutation]

MAX_COUNTEREXAMPLES = 20


def _sort_key(w: Permutation) -> Tuple[int, Tuple[int, ...]]:
    return (w.length(), w.images)


def _ordered_cells(components: Iterable[Iterable[Permutation]]) -> List[Cell]:
    """Cells ordered by their lexicographically first element."""
    cells = [frozenset(c) for c in components]
    return sorted(cells, key=lambda c: min(w.images for w in c))


def _reachability(graph: nx.DiGraph, cells: List[Cell]) -> Tuple[Dict[Permutation, int], Dict[int, FrozenSet[int]]]:
    """Index each element by its cell and record, per cell, every cell reachable from it."""
    index = {w: k for k, cell in enumerate(cells) for w in cell}
    dag = nx.DiGraph()
    dag.add_nodes_from(range(len(cells)))
    for a, b in graph.edges():
        if index[a] != index[b]:
            dag.add_edge(index[a], index[b])
    below: Dict[int, FrozenSet[int]] = {}
    for k in reversed(list(nx.topological_sort(dag))):
        reach = {k}
        for child in dag.successors(k):
            reach |= below[child]
        below[k] = frozenset(reach)
    return index, below


@dataclass
class CellStructure:
    """Left, right and two-sided cells of S_m with their preorders."""

    m: int
    right_cells: List[Cell]
    left_cells: List[Cell]
    two_sided_cells: List[Cell]
    _right_index: Dict[Permutation, int] = field(repr=False)
    _right_below: Dict[int, FrozenSet[int]] = field(repr=False)
    _two_index: Dict[Permutation, int] = field(repr=False)
    _two_below: Dict[int, FrozenSet[int]] = field(repr=False)

    # ------------------------------------------------------------------
    # Preorders
    # ------------------------------------------------------------------

    def leq_right(self, x: Permutation, y: Permutation) -> bool:
        return self._right_index[x] in self._right_below[self._right_index[y]]

    def leq_left(self, x: Permutation, y: Permutation) -> bool:
        return self.leq_right(x.inverse(), y.inverse())

    def leq_two_sided(self, x: Permutation, y: Permutation) -> bool:
        return self._two_index[x] in self._two_below[self._two_index[y]]

    def same_right_cell(self, x: Permutation, y: Permutation) -> bool:
        return self._right_index[x] == self._right_index[y]

    def same_two_sided_cell(self, x: Permutation, y: Permutation) -> bool:
        return self._two_index[x] == self._two_index[y]

    # ------------------------------------------------------------------
    # Cells and order ideals
    # ------------------------------------------------------------------

    def right_cell_of(self, w: Permutation) -> Cell:
        return self.right_cells[self._right_index[w]]

    def left_cell_of(self, w: Permutation) -> Cell:
        return frozenset(x.inverse() for x in self.right_cell_of(w.inverse()))

    def two_sided_cell_of(self, w: Permutation) -> Cell:
        return self.two_sided_cells[self._two_index[w]]

    def down_set_right(self, w: Permutation) -> FrozenSet[Permutation]:
        """{x : x <=_R w}, the index set of the C-basis of M_w."""
        out = set()
        for k in self._right_below[self._right_index[w]]:
            out |= self.right_cells[k]
        return frozenset(out)

    def strict_down_set_right(self, w: Permutation) -> FrozenSet[Permutation]:
        """{x : x <_R w}, the index set of the C-basis of the hat module."""
        return self.down_set_right(w) - self.right_cell_of(w)

    def shape_of(self, cell: Iterable[Permutation]) -> Tuple[int, ...]:
        return rs_shape(next(iter(cell)))

    # ------------------------------------------------------------------
    # Cross-checks
    # ------------------------------------------------------------------

    def rs_agreement(self) -> List[str]:
        """Cells that differ from the Robinson-Schensted fibres."""
        problems = []
        checks = (
            ("right", self.right_cells, q_tableau),
            ("left", self.left_cells, p_tableau),
            ("two-sided", self.two_sided_cells, rs_shape),
        )
        for name, cells, key in checks:
            fibres: Dict[object, set] = {}
            for w in all_permutations(self.m):
                fibres.setdefault(key(w), set()).add(w)
            expected = {frozenset(f) for f in fibres.values()}
            for cell in cells:
                if cell not in expected:
                    problems.append(f"{name} cell {sorted(str(w) for w in cell)} is not an RS fibre")
            if len(cells) != len(expected):
                problems.append(f"{len(cells)} {name} cells, {len(expected)} RS fibres")
        return problems

    def dominance_agreement(self) -> List[str]:
        """Pairs of two-sided cells whose order disagrees with dominance of shapes."""
        problems = []
        reps = [min(cell, key=_sort_key) for cell in self.two_sided_cells]
        for a in reps:
            for b in reps:
                by_cells = self.leq_two_sided(a, b)
                by_shapes = dominance_leq(rs_shape(a), rs_shape(b))
                if by_cells != by_shapes:
                    problems.append(
                        f"cell of shape {rs_shape(a)} <=_LR {rs_shape(b)} is {by_cells}, dominance says {by_shapes}"
                    )
        return problems

    def to_dump(self) -> CellStructureDump:
        def dump(cells: List[Cell]) -> List[CellDump]:
            return [
                CellDump(elements=[w.to_json() for w in sorted(c, key=lambda w: w.images)], shape=list(self.shape_of(c)))
                for c in cells
            ]

        rs_problems = self.rs_agreement()
        order_problems = self.dominance_agreement()
        return CellStructureDump(
            m=self.m,
            right_cells=dump(self.right_cells),
            left_cells=dump(self.left_cells),
            two_sided_cells=dump(self.two_sided_cells),
            rs_agreement=not rs_problems,
            dominance_agreement=not order_problems,
            problems=rs_problems + order_problems,
        )


def right_graph(m: int, kl: KLTable) -> nx.DiGraph:
    """Edge y -> x whenever C'_x occurs in C'_y T_s for some s."""
    graph = nx.DiGraph()
    graph.add_nodes_from(all_permutations(m))
    for y in all_permutations(m):
        for s in generators_of(m):
            for x in structure_constants_right(y, s, kl):
                if x != y:
                    graph.add_edge(y, x)
    return graph


def preorders_and_cells(m: int, kl: KLTable) -> CellStructure:
    """Build the cell structure of S_m from the structure constants in kl."""
    started = time.time()
    right = right_graph(m, kl)
    right_cells = _ordered_cells(nx.strongly_connected_components(right))
    right_index, right_below = _reachability(right, right_cells)

    left = nx.relabel_nodes(right, {w: w.inverse() for w in right.nodes}, copy=True)
    left_cells = _ordered_cells(frozenset(w.inverse() for w in c) for c in right_cells)

    both = nx.compose(right, left)
    two_cells = _ordered_cells(nx.strongly_connected_components(both))
    two_index, two_below = _reachability(both, two_cells)

    logger.info(
        f"Cells of S_{m}: {len(right_cells)} right, {len(left_cells)} left, "
        f"{len(two_cells)} two-sided in {time.time() - started:.2f}s"
    )
    return CellStructure(
        m=m,
        right_cells=right_cells,
        left_cells=left_cells,
        two_sided_cells=two_cells,
        _right_index=right_index,
        _right_below=right_below,
        _two_index=two_index,
        _two_below=two_below,
    )


_structures: Dict[int, CellStructure] = {}


def get_cell_structure(m: int, force: bool = False, cache_dir: Optional[str] = None) -> CellStructure:
    """Memoised cell structure for S_m."""
    if m not in _structures:
        _structures[m] = preorders_and_cells(m, get_kl_table(m, force=force, cache_dir=cache_dir))
    return _structures[m]


def clear_memo() -> None:
    _structures.clear()


# ----------------------------------------------------------------------
# Parabolic verifications
# ----------------------------------------------------------------------

def _note(bucket: List[str], message: str) -> None:
    if len(bucket) < MAX_COUNTEREXAMPLES:
        bucket.append(message)


def verify_parabolic_compatibility(n: int, force: bool = False) -> List[ClaimReport]:
    """Constants of S_n agree inside S_{n+1}; x ~_LR y and x <=_R y force x ~_R y in S_{n+1}."""
    small = get_kl_table(n, force=force)
    big = get_kl_table(n + 1, force=force)
    bad: List[str] = []
    checked = 0
    for y in all_permutations(n):
        for s in generators_of(n):
            checked += 1
            inside = {x.embed(n + 1): c for x, c in structure_constants_right(y, s, small).items()}
            outside = structure_constants_right(y.embed(n + 1), s, big)
            if inside != outside:
                _note(bad, f"alpha[{y}, T_{s}] differs between S_{n} and S_{n + 1}")
    reports = [
        ClaimReport(
            claim=f"structure constants of S_{n} are unchanged in S_{n + 1}",
            checked=checked,
            passed=not bad,
            counterexamples=bad,
        )
    ]

    cells = get_cell_structure(n + 1, force=force)
    bad = []
    checked = 0
    reps = [min(c, key=_sort_key) for c in cells.right_cells]
    for x in reps:
        for y in reps:
            checked += 1
            if cells.same_two_sided_cell(x, y) and cells.leq_right(x, y) and not cells.same_right_cell(x, y):
                _note(bad, f"{x} ~_LR {y} and {x} <=_R {y} but not {x} ~_R {y}")
    reports.append(
        ClaimReport(
            claim=f"x ~_LR y and x <=_R y imply x ~_R y in S_{n + 1}",
            checked=checked,
            passed=not bad,
            counterexamples=bad,
        )
    )
    for report in reports:
        logger.info(f"{report.claim}: {'ok' if report.passed else 'FAILED'} ({report.checked} checked)")
    return reports


def _check_expansion(
    expansion: Dict[Permutation, object],
    leading: Dict[Permutation, object],
    y: Permutation,
    v: Permutation,
    n: int,
    cells: CellStructure,
    small_cells: CellStructure,
    label: str,
    bad: List[str],
) -> None:
    yv = compose(y, v.embed(n + 1))
    seen_leading = set()
    for w, c in expansion.items():
        _, d, u = split_left_coset(w)
        u = u.restrict(n)
        if d == y:
            seen_leading.add(u)
            if leading.get(u) != c:
                _note(bad, f"{label}: coefficient of {w} in {yv} is {c}, S_{n} gives {leading.get(u)}")
            if not small_cells.leq_right(u, v):
                _note(bad, f"{label}: leading term {u} is not <=_R' {v}")
            continue
        if not (bruhat_leq(d, y) and d != y):
            _note(bad, f"{label}: term {w} of {yv} has coset {d} not below {y}")
        if not small_cells.leq_two_sided(u, v):
            _note(bad, f"{label}: term {w} of {yv} has {u} not <=_LR' {v}")
        if not cells.leq_right(w, yv):
            _note(bad, f"{label}: term {w} is not <=_R {yv}")
    missing = set(leading) - seen_leading
    if missing:
        _note(bad, f"{label}: {yv} lacks leading terms for {sorted(str(u) for u in missing)}")


def verify_parabolic_expansion(n: int, force: bool = False) -> List[ClaimReport]:
    """Expand C'_{yv} T_s and C_{yv} T_s in S_{n+1} for y in X*, v in S_n, s in S_n.

    The terms with coset part y carry exactly the S_n constants; every other
    term xu has x < y, u <=_LR' v and xu <=_R yv.
    """
    small = get_kl_table(n, force=force)
    big = get_kl_table(n + 1, force=force)
    cells = get_cell_structure(n + 1, force=force)
    small_cells = get_cell_structure(n, force=force)

    bad_prime: List[str] = []
    bad_c: List[str] = []
    checked = 0
    for y in coset_reps_star(n):
        for v in all_permutations(n):
            yv = compose(y, v.embed(n + 1))
            for s in generators_of(n):
                checked += 1
                _check_expansion(
                    structure_constants_right_by_expansion(yv, s, big),
                    structure_constants_right(v, s, small),
                    y, v, n, cells, small_cells, f"C'[{yv}]T_{s}", bad_prime,
                )
                _check_expansion(
                    c_structure_constants_by_expansion(yv, s, big),
                    c_structure_constants_right(v, s, small),
                    y, v, n, cells, small_cells, f"C[{yv}]T_{s}", bad_c,
                )

    bad_j: List[str] = []
    checked_j = 0
    for v in all_permutations(n):
        for s in generators_of(n):
            checked_j += 1
            h = j_involution(t_element(Permutation.generator(n, s)))
            twisted = to_basis(t_multiply(cprime_basis_element(v, small), h), Basis.CPRIME, small).coeffs
            direct = c_structure_constants_by_expansion(v, s, small)
            lv = v.length()
            predicted = {
                u: (a.bar() * (-1 if (u.length() - lv) % 2 else 1)) for u, a in twisted.items()
            }
            if predicted != direct:
                _note(bad_j, f"lambda[{v}, T_{s}] differs from the signed bar of alpha[{v}, j(T_{s})]")

    reports = [
        ClaimReport(
            claim=f"C' expansion over X* of S_{n + 1}: leading block from S_{n}, remainder strictly lower",
            checked=checked,
            passed=not bad_prime,
            counterexamples=bad_prime,
        ),
        ClaimReport(
            claim=f"C expansion over X* of S_{n + 1}: leading block from S_{n}, remainder strictly lower",
            checked=checked,
            passed=not bad_c,
            counterexamples=bad_c,
        ),
        ClaimReport(
            claim=f"lambda = (-1)^(l(u)-l(v)) bar(alpha o j) in S_{n}",
            checked=checked_j,
            passed=not bad_j,
            counterexamples=bad_j,
        ),
    ]
    for report in reports:
        logger.info(f"{report.claim}: {'ok' if report.passed else 'FAILED'} ({report.checked} checked)")
    return reports


def kl_invariants_report(m: int, force: bool = False) -> List[ClaimReport]:
    """Defining properties of the KL table and bar invariance of every C_y and C'_y."""
    kl = get_kl_table(m, force=force)
    problems = kl.violations()
    bad: List[str] = []
    for y in all_permutations(m):
        for name, element in (("C", c_basis_element(y, kl)), ("C'", cprime_basis_element(y, kl))):
            if bar_involution(element) != element:
                _note(bad, f"{name}[{y}] is not bar-invariant")
    return [
        ClaimReport(
            claim=f"P_yy = 1 and deg P_xy <= (l(y)-l(x)-1)/2 in S_{m}",
            checked=len(kl),
            passed=not problems,
            counterexamples=problems[:MAX_COUNTEREXAMPLES],
        ),
        ClaimReport(
            claim=f"C_y and C'_y are bar-invariant in S_{m}",
            checked=2 * len(all_permutations(m)),
            passed=not bad,
            counterexamples=bad,
        ),
    ]

