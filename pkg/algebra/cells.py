"""
Cell Modules, Induction and Restriction

Right cells of S_n and S_{n+1} are compared through their recording
tableaux: inducing a cell adds the entry n+1 at an outer corner, and
restricting a cell reverse-inserts from an inner corner. The filtration
builders realise the resulting chains of right ideals in the C basis and
check, layer by layer, that each is closed under the generators and that
each factor carries the character of its expected shape.

Usage:
    from algebra.cells import induce_cell, induced_cell_filtration

    decomposition = induce_cell(cell)
    report = induced_cell_filtration(cell)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from algebra.characters import character_check
from algebra.errors import PreconditionError
from algebra.hecke import c_structure_constants_right
from algebra.kl import KLTable, get_kl_table
from algebra.linalg import matrices_to_json
from algebra.preorders import CellStructure, get_cell_structure
from algebra.ring import LaurentPoly, ZERO
from algebra.schemas import (
    DecompositionFactor,
    DecompositionReport,
    FiltrationLayer,
    FiltrationReport,
)
from algebra.symgroup import (
    Permutation,
    bruhat_leq,
    compose,
    coset_reps_prime,
    generators_of,
    split_left_coset,
    x_cycle,
)
from algebra.tableaux import (
    Node,
    StandardTableau,
    corners,
    dominance_lt,
    hook_length_count,
    q_tableau,
    reverse_bump,
    rs_reverse_insert,
    standard_tableaux,
)

logger = logging.getLogger(__name__)

Cell = FrozenSet[Permutation]
Matrices = Dict[int, List[List[LaurentPoly]]]


def _sort_key(w: Permutation) -> Tuple[int, Tuple[int, ...]]:
    return (w.length(), w.images)


def recording_tableau(cell: Iterable[Permutation]) -> StandardTableau:
    """The common Q tableau of a right cell."""
    tableaux = {q_tableau(w) for w in cell}
    if len(tableaux) != 1:
        raise PreconditionError("elements do not share a recording tableau; not a right cell")
    return tableaux.pop()


def right_cell_of_tableau(tableau: StandardTableau) -> Cell:
    """{w : Q(w) = tableau}."""
    return frozenset(rs_reverse_insert(p, tableau) for p in standard_tableaux(tableau.shape))


@dataclass(frozen=True)
class CellModuleBasis:
    """Index sets of the C bases of M_w and of its hat submodule."""

    cell: Cell
    down_set: FrozenSet[Permutation]
    strict_down_set: FrozenSet[Permutation]


def cell_module_basis(w: Permutation, cells: CellStructure) -> CellModuleBasis:
    return CellModuleBasis(
        cell=cells.right_cell_of(w),
        down_set=cells.down_set_right(w),
        strict_down_set=cells.strict_down_set_right(w),
    )


# ----------------------------------------------------------------------
# Decompositions
# ----------------------------------------------------------------------

@dataclass
class InductionFactor:
    corner: Node
    tableau: StandardTableau
    cell: Cell

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.tableau.shape


@dataclass
class InductionDecomposition:
    """A right cell C of S_n and the cells of S_{n+1} making up C X'."""

    source_cell: Cell
    source_tableau: StandardTableau
    factors: List[InductionFactor]
    problems: List[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.problems

    def to_report(self) -> DecompositionReport:
        return DecompositionReport(
            kind="induce",
            source_rank=self.source_tableau.size,
            source_cell_shape=list(self.source_tableau.shape),
            source_tableau=self.source_tableau.to_json(),
            factors=[
                DecompositionFactor(
                    corner=list(f.corner), shape=list(f.shape), cell_size=len(f.cell), tableau=f.tableau.to_json()
                )
                for f in self.factors
            ],
            verified=self.verified,
            problems=self.problems,
        )


@dataclass
class RestrictionFactor:
    corner: Node
    removed_entry: int
    d_k: Permutation
    tableau: StandardTableau
    cell: Cell

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.tableau.shape

    def translate(self) -> Cell:
        """d_k C_k inside S_{n+1}."""
        m = self.d_k.rank
        return frozenset(compose(self.d_k, u.embed(m)) for u in self.cell)


@dataclass
class RestrictionDecomposition:
    """A right cell C of S_{n+1} written as the disjoint union of the d_k C_k."""

    source_cell: Cell
    source_tableau: StandardTableau
    factors: List[RestrictionFactor]
    problems: List[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.problems

    def to_report(self) -> DecompositionReport:
        return DecompositionReport(
            kind="restrict",
            source_rank=self.source_tableau.size,
            source_cell_shape=list(self.source_tableau.shape),
            source_tableau=self.source_tableau.to_json(),
            factors=[
                DecompositionFactor(
                    corner=list(f.corner),
                    shape=list(f.shape),
                    cell_size=len(f.cell),
                    tableau=f.tableau.to_json(),
                    d_k=f.d_k.to_json(),
                    removed_entry=f.removed_entry,
                )
                for f in self.factors
            ],
            verified=self.verified,
            problems=self.problems,
        )


def induce_cell(cell: Iterable[Permutation]) -> InductionDecomposition:
    """Split C X' into the right cells C_k of S_{n+1}, one per outer corner k."""
    cell = frozenset(cell)
    source = recording_tableau(cell)
    n = source.size
    _, outer = corners(source.shape)
    factors = [
        InductionFactor(corner=k, tableau=source.with_entry(k, n + 1), cell=right_cell_of_tableau(source.with_entry(k, n + 1)))
        for k in outer
    ]
    problems: List[str] = []

    translates = {compose(c.embed(n + 1), x) for c in cell for x in coset_reps_prime(n)}
    union: Set[Permutation] = set()
    total = 0
    for f in factors:
        union |= f.cell
        total += len(f.cell)
    if union != translates:
        problems.append(f"C X' has {len(translates)} elements, the union of the C_k has {len(union)}")
    if total != len(union):
        problems.append("the cells C_k overlap")
    for a, b in zip(factors, factors[1:]):
        if not dominance_lt(b.shape, a.shape):
            problems.append(f"shape {b.shape} at {b.corner} is not strictly below {a.shape} at {a.corner}")
    expected = (n + 1) * hook_length_count(source.shape)
    if sum(hook_length_count(f.shape) for f in factors) != expected:
        problems.append(f"factor dimensions do not add up to {expected}")

    logger.debug(f"induce {source.rows}: shapes {[f.shape for f in factors]}, problems={len(problems)}")
    return InductionDecomposition(source_cell=cell, source_tableau=source, factors=factors, problems=problems)


def restrict_cell(cell: Iterable[Permutation]) -> RestrictionDecomposition:
    """Write C as the disjoint union of d_k C_k, one per inner corner k."""
    cell = frozenset(cell)
    source = recording_tableau(cell)
    n = source.size - 1
    if n < 1:
        raise PreconditionError("restriction needs a cell of S_m with m >= 2")
    inner, _ = corners(source.shape)
    factors = []
    for k in inner:
        removed, rest = reverse_bump(source, k)
        d_k = x_cycle(n, removed).inverse()
        tableau = rest.relabel(d_k)
        factors.append(
            RestrictionFactor(corner=k, removed_entry=removed, d_k=d_k, tableau=tableau, cell=right_cell_of_tableau(tableau))
        )
    problems: List[str] = []

    union: Set[Permutation] = set()
    total = 0
    for f in factors:
        translated = f.translate()
        union |= translated
        total += len(translated)
    if union != cell:
        problems.append(f"C has {len(cell)} elements, the union of the d_k C_k has {len(union)}")
    if total != len(union):
        problems.append("the translates d_k C_k overlap")
    for a, b in zip(factors, factors[1:]):
        if not dominance_lt(a.shape, b.shape):
            problems.append(f"shape {a.shape} at {a.corner} is not strictly below {b.shape} at {b.corner}")
        if not bruhat_leq(a.d_k, b.d_k):
            problems.append(f"d_k = {a.d_k} at {a.corner} is not Bruhat below {b.d_k} at {b.corner}")
    for w in cell:
        _, d, u = split_left_coset(w)
        if not any(d == f.d_k and u.restrict(n) in f.cell for f in factors):
            problems.append(f"{w} = {d} * {u} does not match any factor")
            break
    if sum(hook_length_count(f.shape) for f in factors) != hook_length_count(source.shape):
        problems.append(f"factor dimensions do not add up to {hook_length_count(source.shape)}")

    logger.debug(f"restrict {source.rows}: shapes {[f.shape for f in factors]}, problems={len(problems)}")
    return RestrictionDecomposition(source_cell=cell, source_tableau=source, factors=factors, problems=problems)


# ----------------------------------------------------------------------
# Cell representations
# ----------------------------------------------------------------------

def ordered(cell: Iterable[Permutation]) -> List[Permutation]:
    return sorted(cell, key=_sort_key)


def cell_representation(
    cell: Iterable[Permutation],
    kl: KLTable,
    cells: CellStructure,
    generators: Optional[Sequence[int]] = None,
) -> Tuple[Matrices, List[str]]:
    """Matrices of T_s on S_C = M_C / hat M_C with respect to {C_w + hat M_C}.

    Rows are indexed by w and columns by u, both in ordered(cell); row w
    holds the coordinates of C_w T_s. Every term outside the cell must lie in
    the hat module, otherwise a problem is reported.
    """
    basis = ordered(cell)
    members = set(basis)
    lower = cells.strict_down_set_right(basis[0])
    generators = generators_of(kl.m) if generators is None else generators
    problems: List[str] = []
    matrices: Matrices = {}
    for s in generators:
        rows = []
        for w in basis:
            product = c_structure_constants_right(w, s, kl)
            for u in product:
                if u not in members and u not in lower:
                    problems.append(f"C[{w}] T_{s} has a term C[{u}] outside M_C")
            rows.append([product.get(u, ZERO) for u in basis])
        matrices[s] = rows
    return matrices, problems


def _closure_problems(support: Set[Permutation], generators: Sequence[int], kl: KLTable, label: str) -> List[str]:
    """Terms of C_w T_s leaving the span of {C_w : w in support}."""
    problems = []
    for w in sorted(support, key=_sort_key):
        for s in generators:
            for u in c_structure_constants_right(w, s, kl):
                if u not in support:
                    problems.append(f"{label}: C[{w}] T_{s} has C[{u}] outside the layer")
                    return problems
    return problems


def _layer_matrices(
    index: Sequence[Permutation],
    generators: Sequence[int],
    kl: KLTable,
) -> Matrices:
    """Matrices of T_s on L_j / L_{j-1}: coordinates on index, terms in the lower layers dropped."""
    matrices: Matrices = {}
    for s in generators:
        matrices[s] = [
            [c_structure_constants_right(w, s, kl).get(u, ZERO) for u in index]
            for w in index
        ]
    return matrices


# ----------------------------------------------------------------------
# Filtrations
# ----------------------------------------------------------------------

def induced_cell_filtration(cell: Iterable[Permutation], force: bool = False) -> FiltrationReport:
    """Chain L_0 <= L_1 <= ... <= L_p of M_C H in H(S_{n+1}).

    L_0 is spanned by C_{y x} with y <_R' C and x in X'; L_j adds the cells
    C_k in reverse corner order, so the factor shapes increase in dominance.
    """
    cell = frozenset(cell)
    decomposition = induce_cell(cell)
    n = decomposition.source_tableau.size
    small_cells = get_cell_structure(n, force=force)
    kl = get_kl_table(n + 1, force=force)
    generators = generators_of(n + 1)
    problems = list(decomposition.problems)

    sample = next(iter(cell))
    base = {compose(y.embed(n + 1), x) for y in small_cells.strict_down_set_right(sample) for x in coset_reps_prime(n)}
    full = {compose(y.embed(n + 1), x) for y in small_cells.down_set_right(sample) for x in coset_reps_prime(n)}
    problems += _closure_problems(base, generators, kl, "L_0")

    support = set(base)
    layers: List[FiltrationLayer] = []
    for factor in reversed(decomposition.factors):
        support |= factor.cell
        closure = _closure_problems(support, generators, kl, f"layer at {factor.corner}")
        index = ordered(factor.cell)
        layer_matrices = _layer_matrices(index, generators, kl)
        character_problems, checked = character_check(layer_matrices, factor.shape)
        isomorphic = checked and not closure and not character_problems
        problems += closure + [f"layer at {factor.corner}: {p}" for p in character_problems]
        layers.append(
            FiltrationLayer(
                corner=list(factor.corner),
                shape=list(factor.shape),
                cell_size=len(factor.cell),
                cell=[w.to_json() for w in index],
                closure_verified=not closure,
                isomorphism_verified=isomorphic,
                character_skipped=not checked,
                matrices=matrices_to_json(layer_matrices),
            )
        )
    if support != full:
        problems.append(f"top of the chain has {len(support)} basis elements, M_C H has {len(full)}")

    logger.info(f"induced filtration of {decomposition.source_tableau.rows}: {len(layers)} layers, {len(problems)} problems")
    return FiltrationReport(
        kind="induce",
        source_rank=n,
        source_cell_shape=list(decomposition.source_tableau.shape),
        base_size=len(base),
        factors=layers,
        verified=not problems,
        problems=problems,
    )


def restricted_cell_filtration(cell: Iterable[Permutation], force: bool = False) -> FiltrationReport:
    """Chain of H(S_n)-submodules of M_C between hat M_C and M_C, one layer per inner corner.

    Layer j adds d_j C_j; the map C_u + hat M_{C_j} -> C_{d_j u} + L_{j-1}
    must carry the S_n representation of C_j onto the factor.
    """
    cell = frozenset(cell)
    decomposition = restrict_cell(cell)
    n = decomposition.source_tableau.size - 1
    kl = get_kl_table(n + 1, force=force)
    cells = get_cell_structure(n + 1, force=force)
    small_kl = get_kl_table(n, force=force)
    small_cells = get_cell_structure(n, force=force)
    generators = generators_of(n)
    problems = list(decomposition.problems)

    sample = next(iter(cell))
    base = set(cells.strict_down_set_right(sample))
    problems += _closure_problems(base, generators, kl, "L_0")

    support = set(base)
    layers: List[FiltrationLayer] = []
    for factor in decomposition.factors:
        support |= factor.translate()
        closure = _closure_problems(support, generators, kl, f"layer at {factor.corner}")
        index = ordered(factor.cell)
        translated = [compose(factor.d_k, u.embed(n + 1)) for u in index]
        layer_matrices = _layer_matrices(translated, generators, kl)
        cell_matrices, cell_problems = cell_representation(factor.cell, small_kl, small_cells, generators)
        character_problems, checked = character_check(layer_matrices, factor.shape)
        isomorphic = not cell_problems and layer_matrices == cell_matrices and not character_problems
        if not isomorphic:
            problems.append(f"factor at {factor.corner} does not afford the S_{n} representation of its cell")
        problems += character_problems
        problems += closure
        problems += _support_problems(factor, index, generators, kl, small_kl, small_cells)
        layers.append(
            FiltrationLayer(
                corner=list(factor.corner),
                shape=list(factor.shape),
                cell_size=len(factor.cell),
                cell=[w.to_json() for w in translated],
                d_k=factor.d_k.to_json(),
                closure_verified=not closure,
                isomorphism_verified=isomorphic,
                character_skipped=not checked,
                matrices=matrices_to_json(layer_matrices),
            )
        )
    if support != set(cells.down_set_right(sample)):
        problems.append("top of the chain is not M_C")

    logger.info(f"restricted filtration of {decomposition.source_tableau.rows}: {len(layers)} layers, {len(problems)} problems")
    return FiltrationReport(
        kind="restrict",
        source_rank=n + 1,
        source_cell_shape=list(decomposition.source_tableau.shape),
        base_size=len(base),
        factors=layers,
        verified=not problems,
        problems=problems,
    )


def _support_problems(
    factor: RestrictionFactor,
    index: Sequence[Permutation],
    generators: Sequence[int],
    kl: KLTable,
    small_kl: KLTable,
    small_cells: CellStructure,
) -> List[str]:
    """C_{d v} T_s: terms with coset d carry the S_n constants on u <=_R' v; the rest have a coset below d."""
    n = small_kl.m
    problems = []
    for v in index:
        dv = compose(factor.d_k, v.embed(n + 1))
        for s in generators:
            leading = c_structure_constants_right(v, s, small_kl)
            for w, c in c_structure_constants_right(dv, s, kl).items():
                _, d, u = split_left_coset(w)
                u = u.restrict(n)
                if d == factor.d_k:
                    if leading.get(u, ZERO) != c or not small_cells.leq_right(u, v):
                        problems.append(f"C[{dv}] T_{s}: term C[{w}] breaks the leading block")
                elif not (bruhat_leq(d, factor.d_k) and d != factor.d_k):
                    problems.append(f"C[{dv}] T_{s}: term C[{w}] has coset {d} not below {factor.d_k}")
    return problems
