"""
Sequences of Type mu, Pairs of Partitions and Unions of Left Cells

A sequence of type mu = (mu_1, ..., mu_r) uses symbol i exactly mu_i
times. Substituting the runs d(i) for the symbols gives a bijection onto
L(mu) = X_J^-1 w_J, the elements below w_J(mu) in the left preorder. The
good/bad quality of the entries defines the sharp partition, and the sets
L(mu; lambda) and L(lambda, mu) cut out by it are unions of left cells.

Left cells are taken from the closure computation up to CLOSURE_RANK and
from Robinson-Schensted insertion tableaux above it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import zip_longest
from math import factorial
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from algebra.errors import PreconditionError, VerificationError
from algebra.preorders import CellStructure, get_cell_structure
from algebra.schemas import ClaimReport
from algebra.symgroup import (
    Permutation,
    all_permutations,
    compose,
    coset_reps_star,
    j_of_composition,
    parabolic,
    prefixes,
)
from algebra.tableaux import (
    StandardTableau,
    TypedTableau,
    c_semistandard_tableaux,
    composition,
    conjugate,
    is_partition,
    kostka_number,
    p_tableau,
    partitions_of,
    rs_shape,
)

logger = logging.getLogger(__name__)

CLOSURE_RANK = 5
MAX_COUNTEREXAMPLES = 20

Element = FrozenSet[Permutation]


def d_mu(mu: Sequence[int], i: int) -> Tuple[int, ...]:
    """The decreasing run mu_1+...+mu_i, ..., mu_1+...+mu_{i-1}+1."""
    mu = composition(mu)
    if not 1 <= i <= len(mu):
        raise PreconditionError(f"d({i}) undefined for mu={mu}")
    start = sum(mu[:i])
    return tuple(range(start, start - mu[i - 1], -1))


def preceq(a: Sequence[int], b: Sequence[int]) -> bool:
    """a_i <= b_i for all i, padding the shorter with zeros."""
    return all(x <= y for x, y in zip_longest(a, b, fillvalue=0))


def _strip(parts: Sequence[int]) -> Tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@dataclass(frozen=True)
class TypedSequence:
    """A word in the symbols 1..r using symbol i exactly mu_i times."""

    symbols: Tuple[int, ...]
    mu: Tuple[int, ...]

    def __post_init__(self):
        counts = [self.symbols.count(i) for i in range(1, len(self.mu) + 1)]
        if tuple(counts) != tuple(self.mu) or len(self.symbols) != sum(self.mu):
            raise PreconditionError(f"{self.symbols} does not have type {self.mu}")

    def quality(self) -> Tuple[bool, ...]:
        """Good/bad flag per entry: every 1 is good; an i+1 is good iff strictly more good i's than good (i+1)'s precede it."""
        good = [0] * (len(self.mu) + 1)
        flags = []
        for sym in self.symbols:
            ok = sym == 1 or good[sym - 1] > good[sym]
            if ok:
                good[sym] += 1
            flags.append(ok)
        return tuple(flags)

    def sharp(self) -> Tuple[int, ...]:
        """Number of good i's for each i, trailing zeros dropped."""
        counts = [0] * len(self.mu)
        for sym, ok in zip(self.symbols, self.quality()):
            if ok:
                counts[sym - 1] += 1
        return _strip(counts)

    def __str__(self) -> str:
        return "".join(str(s) for s in self.symbols)


def typed_sequences(mu: Sequence[int]) -> List[TypedSequence]:
    """All of R(mu) in lexicographic order."""
    mu = composition(mu)
    letters = [i for i, part in enumerate(mu, start=1) for _ in range(part)]
    return [TypedSequence(tuple(word), mu) for word in multiset_permutations(letters)]


def w_of_sequence(t: TypedSequence) -> Permutation:
    """Replace the i's, left to right, by the members of d(i) in order."""
    runs = {i: list(d_mu(t.mu, i)) for i in range(1, len(t.mu) + 1)}
    return Permutation([runs[sym].pop(0) for sym in t.symbols])


def sequence_of_permutation(w: Permutation, mu: Sequence[int]) -> TypedSequence:
    """Inverse of w_of_sequence on L(mu)."""
    mu = composition(mu)
    block = {}
    for i in range(1, len(mu) + 1):
        for value in d_mu(mu, i):
            block[value] = i
    t = TypedSequence(tuple(block[v] for v in w.images), mu)
    if w_of_sequence(t) != w:
        raise PreconditionError(f"{w} is not in L({mu})")
    return t


def quality_and_sharp(t: TypedSequence) -> Tuple[Tuple[bool, ...], Tuple[int, ...]]:
    flags = t.quality()
    sharp = t.sharp()
    if not is_partition(sharp) or not preceq(sharp, t.mu):
        raise VerificationError(f"sharp partition {sharp} of {t} is not a partition below {t.mu}")
    return flags, sharp


@dataclass(frozen=True)
class PairOfPartitions:
    """lambda_{i+1} <= lambda_i <= mu_i for all i; lambda may be empty."""

    lam: Tuple[int, ...]
    mu: Tuple[int, ...]

    def __post_init__(self):
        lam = _strip(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", composition(self.mu))
        if any(x < 0 for x in lam) or any(lam[k + 1] > lam[k] for k in range(len(lam) - 1)):
            raise PreconditionError(f"lambda={lam} is not weakly decreasing and non-negative")
        if not preceq(lam, self.mu):
            raise PreconditionError(f"lambda={lam} is not below mu={self.mu}")

    @property
    def m(self) -> int:
        return sum(self.mu)


def pairs_for(mu: Sequence[int]) -> List[PairOfPartitions]:
    """Every lambda making (lambda, mu) a pair of partitions."""
    mu = composition(mu)
    found: List[Tuple[int, ...]] = []

    def build(i: int, cap: int, prefix: Tuple[int, ...]) -> None:
        if i == len(mu):
            found.append(prefix)
            return
        for part in range(min(cap, mu[i]), -1, -1):
            build(i + 1, part, prefix + (part,))

    build(0, max(mu), ())
    return sorted({PairOfPartitions(lam, mu) for lam in found}, key=lambda p: p.lam, reverse=True)


def l_mu(mu: Sequence[int]) -> Element:
    """L(mu) = {x^-1 w_J : x in X_J}."""
    mu = composition(mu)
    data = parabolic(sum(mu), j_of_composition(mu))
    return frozenset(compose(x.inverse(), data.longest) for x in data.coset_reps)


def has_decreasing_runs(w: Permutation, mu: Sequence[int]) -> bool:
    """Each d(i) occurs as a decreasing subsequence of the one-line form."""
    for i in range(1, len(mu) + 1):
        positions = [w.position(v) for v in d_mu(mu, i)]
        if positions != sorted(positions):
            return False
    return True


# ----------------------------------------------------------------------
# Left cells
# ----------------------------------------------------------------------

def left_cells(m: int, cells: Optional[CellStructure] = None) -> Dict[Permutation, Element]:
    """Left cell of every element of S_m."""
    if cells is None and m <= CLOSURE_RANK:
        cells = get_cell_structure(m)
    if cells is not None:
        return {w: cell for cell in cells.left_cells for w in cell}
    fibres: Dict[StandardTableau, set] = {}
    for w in all_permutations(m):
        fibres.setdefault(p_tableau(w), set()).add(w)
    return {w: frozenset(f) for f in fibres.values() for w in f}


def is_union_of_left_cells(elements: Element, index: Dict[Permutation, Element]) -> bool:
    return all(index[w] <= elements for w in elements)


# ----------------------------------------------------------------------
# c-semistandard tableaux
# ----------------------------------------------------------------------

def ptableau_shortcut(tableau: TypedTableau) -> StandardTableau:
    """Replace symbol i, from the bottom row to the top, by the members of d(i) in order."""
    runs = {i: list(d_mu(tableau.type, i)) for i in range(1, len(tableau.type) + 1)}
    rows: List[List[int]] = [[] for _ in tableau.rows]
    for r in range(len(tableau.rows) - 1, -1, -1):
        rows[r] = [runs[sym].pop(0) for sym in tableau.rows[r]]
    return StandardTableau(rows)


def word_and_ptableau(tableau: TypedTableau) -> Tuple[TypedSequence, StandardTableau]:
    """The column word of T and P_T = P(w(word)); the row-by-row shortcut must agree."""
    if not tableau.is_c_semistandard():
        raise PreconditionError(f"{tableau} is not c-semistandard")
    t = TypedSequence(tableau.column_word(), tuple(tableau.type))
    p = p_tableau(w_of_sequence(t))
    if ptableau_shortcut(tableau) != p:
        raise VerificationError(f"shortcut P_T differs from insertion for {tableau}")
    return t, p


def c_semistandard_of_type(mu: Sequence[int]) -> List[TypedTableau]:
    """T_c(mu): c-semistandard tableaux of type mu over all shapes."""
    mu = composition(mu)
    return [T for lam in partitions_of(sum(mu)) for T in c_semistandard_tableaux(lam, mu)]


def _diagonal_counts(tableau: TypedTableau) -> Tuple[int, ...]:
    """Number of i's in column i, for i = 1..r."""
    return tuple(tableau.column(i).count(i) for i in range(1, len(tableau.type) + 1))


# ----------------------------------------------------------------------
# Cell unions
# ----------------------------------------------------------------------

@dataclass
class CellUnion:
    pair: PairOfPartitions
    exact: Element
    at_least: Element
    cells: List[Element]
    problems: List[str] = field(default_factory=list)


def cell_union_sets(pair: PairOfPartitions, cells: Optional[CellStructure] = None) -> CellUnion:
    """L(mu; lambda) and L(lambda, mu), each checked to be a union of left cells."""
    index = left_cells(pair.m, cells)
    exact = set()
    at_least = set()
    by_sharp: Dict[Tuple[int, ...], set] = {}
    for t in typed_sequences(pair.mu):
        w = w_of_sequence(t)
        sharp = t.sharp()
        by_sharp.setdefault(sharp, set()).add(w)
        if sharp == pair.lam:
            exact.add(w)
        if preceq(pair.lam, sharp):
            at_least.add(w)
    exact = frozenset(exact)
    at_least = frozenset(at_least)
    problems = []
    if not is_union_of_left_cells(exact, index):
        problems.append(f"L({pair.mu}; {pair.lam}) is not a union of left cells")
    if not is_union_of_left_cells(at_least, index):
        problems.append(f"L({pair.lam}, {pair.mu}) is not a union of left cells")
    pieces = set()
    for nu, members in by_sharp.items():
        if preceq(pair.lam, nu) and preceq(nu, pair.mu):
            pieces |= members
    if pieces != at_least:
        problems.append(f"L({pair.lam}, {pair.mu}) is not the union of the L({pair.mu}; nu) above lambda")
    found = sorted({index[w] for w in at_least}, key=lambda c: min(w.images for w in c))
    return CellUnion(pair=pair, exact=exact, at_least=at_least, cells=found, problems=problems)


@dataclass
class CellUnionDescription:
    exact: List[StandardTableau]
    at_least: List[StandardTableau]
    problems: List[str] = field(default_factory=list)


def describe_cell_union(pair: PairOfPartitions) -> CellUnionDescription:
    """Insertion tableaux P_T of the left cells in L(mu; lambda) and L(lambda, mu).

    T runs over T_c(mu) with exactly (resp. at least) lambda_i copies of i
    in column i; the description is compared with the sequence definition.
    """
    exact: List[StandardTableau] = []
    at_least: List[StandardTableau] = []
    for tableau in c_semistandard_of_type(pair.mu):
        _, p = word_and_ptableau(tableau)
        counts = _diagonal_counts(tableau)
        if _strip(counts) == pair.lam:
            exact.append(p)
        if preceq(pair.lam, counts):
            at_least.append(p)
    union = cell_union_sets(pair)
    problems = list(union.problems)
    if {p_tableau(w) for w in union.exact} != set(exact):
        problems.append(f"tableaux with exactly lambda_i i's in column i miss L({pair.mu}; {pair.lam})")
    if {p_tableau(w) for w in union.at_least} != set(at_least):
        problems.append(f"tableaux with at least lambda_i i's in column i miss L({pair.lam}, {pair.mu})")
    return CellUnionDescription(
        exact=sorted(exact, key=lambda p: p.rows),
        at_least=sorted(at_least, key=lambda p: p.rows),
        problems=problems,
    )


# ----------------------------------------------------------------------
# Claims
# ----------------------------------------------------------------------

def _report(claim: str, checked: int, bad: List[str], mu=None, lam=None, experimental: bool = False) -> ClaimReport:
    report = ClaimReport(
        mu=list(mu) if mu is not None else None,
        lam=list(lam) if lam is not None else None,
        claim=claim,
        checked=checked,
        passed=not bad,
        experimental=experimental,
        counterexamples=bad[:MAX_COUNTEREXAMPLES],
    )
    level = logging.WARNING if bad and experimental else logging.INFO
    logger.log(level, f"{claim} mu={mu} lambda={lam}: {'ok' if report.passed else 'counterexamples'} ({checked} checked)")
    return report


def verify_sequence_bijection(mu: Sequence[int], cells: Optional[CellStructure] = None) -> ClaimReport:
    """R(mu) -> L(mu) is a bijection, and L(mu) is cut out by the decreasing runs and by <=_L w_J."""
    mu = composition(mu)
    m = sum(mu)
    bad: List[str] = []
    sequences = typed_sequences(mu)
    images = [w_of_sequence(t) for t in sequences]
    target = l_mu(mu)
    multinomial = factorial(m)
    for part in mu:
        multinomial //= factorial(part)
    if len(sequences) != multinomial or len(target) != multinomial:
        bad.append(f"|R(mu)|={len(sequences)}, |L(mu)|={len(target)}, multinomial={multinomial}")
    if len(set(images)) != len(images):
        bad.append("w(t) is not injective")
    if set(images) != target:
        bad.append("image of w(t) differs from X_J^-1 w_J")
    by_runs = frozenset(w for w in all_permutations(m) if has_decreasing_runs(w, mu))
    if by_runs != target:
        bad.append("decreasing-run description differs from X_J^-1 w_J")
    if cells is not None or m <= CLOSURE_RANK:
        cells = cells or get_cell_structure(m)
        top = parabolic(m, j_of_composition(mu)).longest
        below = frozenset(w for w in all_permutations(m) if cells.leq_left(w, top))
        if below != target:
            bad.append("{w <=_L w_J} differs from X_J^-1 w_J")
    for t, w in zip(sequences, images):
        if sequence_of_permutation(w, mu) != t:
            bad.append(f"cannot recover {t} from {w}")
            break
    return _report("w(t) is a bijection R(mu) -> L(mu)", len(sequences), bad, mu=mu)


def count_cells_and_tableaux(mu: Sequence[int], lam: Sequence[int]) -> Tuple[int, int]:
    """(left cells of shape lambda inside L(mu), c-semistandard lambda-tableaux of type mu)."""
    mu = composition(mu)
    lam = tuple(lam)
    insertion = {p_tableau(w) for w in l_mu(mu) if rs_shape(w) == lam}
    return len(insertion), len(c_semistandard_tableaux(lam, mu))


def verify_kostka_cell_count(mu: Sequence[int], lam: Optional[Sequence[int]] = None) -> ClaimReport:
    """Cells of each shape in L(mu) = c-semistandard count = semistandard count of the conjugate shape.

    Also: T -> P_T is injective and its image is exactly the insertion
    tableaux occurring in L(mu).
    """
    mu = composition(mu)
    shapes = [tuple(lam)] if lam is not None else partitions_of(sum(mu))
    bad: List[str] = []
    for shape in shapes:
        cells_count, tableaux_count = count_cells_and_tableaux(mu, shape)
        transpose = kostka_number(conjugate(shape), mu)
        if not cells_count == tableaux_count == transpose:
            bad.append(f"shape {shape}: {cells_count} cells, {tableaux_count} c-semistandard, {transpose} semistandard'")
    if lam is None:
        ps = [word_and_ptableau(T)[1] for T in c_semistandard_of_type(mu)]
        if len(set(ps)) != len(ps):
            bad.append("T -> P_T is not injective")
        if set(ps) != {p_tableau(w) for w in l_mu(mu)}:
            bad.append("P_T do not exhaust the insertion tableaux of L(mu)")
    return _report("left cells in L(mu) are counted by c-semistandard tableaux", len(shapes), bad, mu=mu, lam=lam)


def verify_column_criterion(mu: Sequence[int]) -> ClaimReport:
    """sharp(t) = lambda iff column i of P(w(t)) holds exactly lambda_i members of d(i),
    and those are the smallest lambda_i members, in the top lambda_i rows."""
    mu = composition(mu)
    r = len(mu)
    bad: List[str] = []
    sequences = typed_sequences(mu)
    for t in sequences:
        _, sharp = quality_and_sharp(t)
        p = p_tableau(w_of_sequence(t))
        counts = []
        for i in range(1, r + 1):
            run = d_mu(mu, i)
            members = [x for x in p.column(i) if x in run]
            counts.append(len(members))
            want = sharp[i - 1] if i <= len(sharp) else 0
            if len(members) == want and want:
                if sorted(members) != sorted(run)[:want]:
                    bad.append(f"{t}: column {i} holds {members}, not the smallest {want} of d({i})")
                if any(p.node_of(x)[0] > want for x in members):
                    bad.append(f"{t}: members of d({i}) sit below row {want}")
        if _strip(counts) != sharp:
            bad.append(f"{t}: sharp {sharp} but column counts {tuple(counts)}")
    return _report("sharp partition read off the columns of P(w(t))", len(sequences), bad, mu=mu)


def verify_ptableau_shortcut(mu: Sequence[int]) -> ClaimReport:
    mu = composition(mu)
    bad: List[str] = []
    tableaux = c_semistandard_of_type(mu)
    for T in tableaux:
        try:
            word_and_ptableau(T)
        except VerificationError as e:
            bad.append(str(e))
    return _report("P_T by substitution equals P_T by insertion", len(tableaux), bad, mu=mu)


def verify_cell_unions(mu: Sequence[int], cells: Optional[CellStructure] = None) -> ClaimReport:
    """Every pair (lambda, mu): both sets are unions of left cells, and the tableau description matches."""
    mu = composition(mu)
    bad: List[str] = []
    pairs = pairs_for(mu)
    for pair in pairs:
        union = cell_union_sets(pair, cells)
        bad += union.problems
        bad += [p for p in describe_cell_union(pair).problems if p not in union.problems]
    return _report("L(mu; lambda) and L(lambda, mu) are unions of left cells", len(pairs), bad, mu=mu)


def verify_prefix_monotonicity(mu: Sequence[int]) -> List[ClaimReport]:
    """sharp(t) <= sharp(t') whenever d is a prefix of e; hence T(lambda) is prefix-closed."""
    mu = composition(mu)
    data = parabolic(sum(mu), j_of_composition(mu))
    top = data.longest
    sharp_of: Dict[Permutation, Tuple[int, ...]] = {
        e: sequence_of_permutation(compose(e.inverse(), top), mu).sharp() for e in data.coset_reps
    }
    bad: List[str] = []
    checked = 0
    for e in data.coset_reps:
        for d in prefixes(e):
            checked += 1
            if d not in sharp_of:
                bad.append(f"prefix {d} of {e} is not a coset representative")
            elif not preceq(sharp_of[e], sharp_of[d]):
                bad.append(f"e={e}: sharp {sharp_of[e]} not below sharp {sharp_of[d]} of prefix {d}")
    reports = [_report("sharp partitions grow along prefixes", checked, bad, mu=mu)]

    bad = []
    pairs = pairs_for(mu)
    for pair in pairs:
        members = {e for e, sharp in sharp_of.items() if preceq(pair.lam, sharp)}
        for e in members:
            missing = [d for d in prefixes(e) if d not in members]
            if missing:
                bad.append(f"lambda={pair.lam}: prefix {missing[0]} of {e} leaves L(lambda, mu)")
    reports.append(_report("{e : e^-1 w_J in L(lambda, mu)} is prefix-closed", len(pairs), bad, mu=mu))
    return reports


def verify_special_cases(mu: Sequence[int], cells: Optional[CellStructure] = None) -> List[ClaimReport]:
    """L(mu, mu) is the left cell of w_J(mu) for a partition mu; L(lambda, mu) = X* C when mu ends in 1."""
    mu = composition(mu)
    m = sum(mu)
    reports = []
    if not is_partition(mu):
        return reports
    index = left_cells(m, cells)
    top = parabolic(m, j_of_composition(mu)).longest
    union = cell_union_sets(PairOfPartitions(mu, mu), cells)
    bad = [] if union.at_least == index[top] else [f"L({mu}, {mu}) is not the left cell of {top}"]
    reports.append(_report("L(mu, mu) is the left cell of w_J(mu)", 1, bad, mu=mu, lam=mu))

    if m > 1 and len(mu) > 1 and mu[-1] == 1:
        lam = mu[:-1]
        small_index = left_cells(m - 1)
        small_top = parabolic(m - 1, j_of_composition(lam)).longest
        translates = frozenset(compose(d, c.embed(m)) for d in coset_reps_star(m - 1) for c in small_index[small_top])
        union = cell_union_sets(PairOfPartitions(lam, mu), cells)
        bad = [] if union.at_least == translates else [f"L({lam}, {mu}) differs from X* C"]
        reports.append(_report("L(lambda, mu) = X* C when mu ends in a part 1", 1, bad, mu=mu, lam=lam))
    return reports


def explore_downward_closure(mu: Sequence[int], lam: Sequence[int], cells: Optional[CellStructure] = None) -> ClaimReport:
    """Open question: is L(mu) minus L(lambda, mu) closed downwards under <=_L?"""
    pair = PairOfPartitions(tuple(lam), composition(mu))
    cells = cells or get_cell_structure(pair.m)
    complement = l_mu(pair.mu) - cell_union_sets(pair, cells).at_least
    bad: List[str] = []
    for y in sorted(complement, key=lambda w: w.images):
        below = frozenset(x.inverse() for x in cells.down_set_right(y.inverse()))
        escaped = sorted(below - complement, key=lambda w: w.images)
        if escaped:
            bad.append(f"{escaped[0]} <=_L {y} but lies in L(lambda, mu)")
    return _report(
        "L(mu) minus L(lambda, mu) is closed downwards under <=_L (open question)",
        len(complement),
        bad,
        mu=pair.mu,
        lam=pair.lam,
        experimental=True,
    )
