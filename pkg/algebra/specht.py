"""
Specht Modules and Specht Filtrations

S^lambda is realised inside H as the image of M_{w_J(mu)} under
theta: h -> x_lambda T_{w_E} h, where E is the special diagram of
(lambda, mu). Its C-basis is {theta(C_w) : w ~_R w_J(mu)}. The induced and
restricted modules are filtered by transporting the cell decompositions
through theta; closure of every layer is certified by an exact identity
theta(C_w) T_s = sum of lambda-constants times theta(C_u) over the layer.

A brute-force character table at v = 1 serves as an independent oracle
for the factors.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from algebra.cells import (
    RestrictionFactor,
    cell_representation,
    induce_cell,
    ordered,
    restrict_cell,
)
from algebra.errors import VerificationError
from algebra.hecke import (
    Basis,
    HeckeElement,
    c_basis_element,
    c_structure_constants_right,
    cprime_basis_element,
    right_multiples,
)
from algebra.kl import KLTable, get_kl_table
from algebra.characters import character_check
from algebra.linalg import is_independent, matrices_to_json
from algebra.preorders import get_cell_structure
from algebra.ring import ZERO, LaurentPoly, v_power
from algebra.schemas import ClaimReport, SpechtFiltrationReport, SpechtLayer
from algebra.symgroup import (
    Permutation,
    compose,
    coset_reps_prime,
    generators_of,
    j_of_composition,
    parabolic,
)
from algebra.tableaux import (
    Diagram,
    add_box,
    composition,
    compositions_of,
    conjugate,
    corners,
    dominance_lt,
    hook_length_count,
    remove_box,
    sorted_partition,
    special_diagram,
    w_of_diagram,
)

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 20


# ----------------------------------------------------------------------
# x_lambda, y_lambda and theta
# ----------------------------------------------------------------------

def x_y_elements(lam: Sequence[int], m: int, kl: Optional[KLTable] = None) -> Tuple[HeckeElement, HeckeElement]:
    """x_lambda = sum T_w and y_lambda = sum (-q)^(-l(w)) T_w over W_J(lambda).

    With a KL table the sums are checked against v^l(w_J) C'_{w_J} and
    (-v^-1)^l(w_J) C_{w_J}.
    """
    lam = composition(lam)
    if sum(lam) != m:
        raise VerificationError(f"{lam} is not a composition of {m}")
    data = parabolic(m, j_of_composition(lam))
    x = HeckeElement({w: 1 for w in data.subgroup}, Basis.T, m)
    y = HeckeElement(
        {w: LaurentPoly.monomial(-2 * w.length(), -1 if w.length() % 2 else 1) for w in data.subgroup},
        Basis.T,
        m,
    )
    if kl is not None:
        top = data.longest
        ell = top.length()
        if cprime_basis_element(top, kl).scale(v_power(ell)) != x:
            raise VerificationError(f"x_{lam} differs from v^{ell} C'[{top}]")
        sign = -1 if ell % 2 else 1
        if c_basis_element(top, kl).scale(v_power(-ell) * sign) != y:
            raise VerificationError(f"y_{lam} differs from (-v^-1)^{ell} C[{top}]")
    return x, y


class ThetaMap:
    """h -> g h for a fixed T-basis element g, evaluated on C-basis elements."""

    def __init__(self, g: HeckeElement, kl: KLTable):
        if g.rank != kl.m:
            raise VerificationError(f"generator lives in S_{g.rank}, KL table in S_{kl.m}")
        self.g = g
        self.kl = kl
        self._products: Dict[Permutation, HeckeElement] = {}
        self._images: Dict[Permutation, HeckeElement] = {}

    def of_t(self, xs: Iterable[Permutation]) -> Dict[Permutation, HeckeElement]:
        missing = [x for x in xs if x not in self._products]
        if missing:
            self._products.update(right_multiples(self.g, missing))
        return self._products

    def __call__(self, w: Permutation) -> HeckeElement:
        if w not in self._images:
            c_w = c_basis_element(w, self.kl)
            products = self.of_t(c_w.coeffs)
            out: Dict[Permutation, LaurentPoly] = {}
            for x, a in c_w.coeffs.items():
                for z, b in products[x].coeffs.items():
                    out[z] = out.get(z, ZERO) + a * b
            self._images[w] = HeckeElement(out, Basis.T, self.g.rank)
        return self._images[w]


@dataclass
class SpechtModule:
    """S^lambda with its C-basis {x_lambda T_{w_E} C_w : w ~_R w_J(mu)}."""

    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    m: int
    diagram: Diagram
    w_E: Permutation
    cell: List[Permutation]
    theta: ThetaMap
    independent: bool = False
    problems: List[str] = field(default_factory=list)

    @property
    def expected_size(self) -> int:
        return hook_length_count(sorted_partition(self.lam))

    def basis(self) -> Dict[Permutation, HeckeElement]:
        return {w: self.theta(w) for w in self.cell}


def generator_element(lam: Sequence[int], w_E: Permutation, kl: KLTable) -> HeckeElement:
    """x_lambda T_{w_E}."""
    x, _ = x_y_elements(lam, w_E.rank, kl)
    return right_multiples(x, [w_E])[w_E]


def specht_basis(lam: Sequence[int], mu: Sequence[int], kl: Optional[KLTable] = None, strict: bool = True, force: bool = False) -> SpechtModule:
    """Build S^lambda for lambda'' = mu' and check its C-basis.

    The basis must be A-linearly independent, of size f^{lambda''}, and theta
    must vanish on every C_w with w <_R w_J(mu).
    """
    lam = composition(lam)
    mu = composition(mu)
    diagram = special_diagram(lam, mu)
    m = sum(lam)
    kl = kl or get_kl_table(m, force=force)
    cells = get_cell_structure(m, force=force)
    w_E = w_of_diagram(diagram)
    top = parabolic(m, j_of_composition(mu)).longest
    theta = ThetaMap(generator_element(lam, w_E, kl), kl)
    cell = ordered(cells.right_cell_of(top))
    module = SpechtModule(lam=lam, mu=mu, m=m, diagram=diagram, w_E=w_E, cell=cell, theta=theta)

    if len(cell) != module.expected_size:
        module.problems.append(f"basis has {len(cell)} elements, f^{sorted_partition(lam)} = {module.expected_size}")
    module.independent = is_independent([theta(w).coeffs for w in cell])
    if not module.independent:
        module.problems.append("basis elements are not linearly independent")
    for w in sorted(cells.strict_down_set_right(top), key=lambda w: (w.length(), w.images)):
        if not theta(w).is_zero():
            module.problems.append(f"x_lambda T_w_E C[{w}] is not zero although {w} <_R {top}")
            break
    logger.info(f"S^{lam} from mu={mu}: {len(cell)} basis elements, {len(module.problems)} problems")
    if strict and module.problems:
        raise VerificationError("; ".join(module.problems))
    return module


def kernel_identity(lam: Sequence[int], mu: Sequence[int], force: bool = False) -> ClaimReport:
    """x_lambda T_{w_E} C_{y x} = 0 for y <_R' C and x in X', inside S_{n+1}."""
    lam = composition(lam)
    mu = composition(mu)
    n = sum(lam)
    diagram = special_diagram(lam, mu)
    big = get_kl_table(n + 1, force=force)
    small_kl = get_kl_table(n, force=force)
    small_cells = get_cell_structure(n, force=force)
    g = generator_element(lam, w_of_diagram(diagram), small_kl).embed(n + 1)
    theta = ThetaMap(g, big)
    top = parabolic(n, j_of_composition(mu)).longest
    bad: List[str] = []
    checked = 0
    for y in sorted(small_cells.strict_down_set_right(top), key=lambda w: w.images):
        for x in coset_reps_prime(n):
            checked += 1
            w = compose(y.embed(n + 1), x)
            if not theta(w).is_zero() and len(bad) < MAX_COUNTEREXAMPLES:
                bad.append(f"x_lambda T_w_E C[{w}] != 0")
    return ClaimReport(
        mu=list(mu),
        lam=list(lam),
        claim="hat M_C H lies in the kernel of theta",
        checked=checked,
        passed=not bad,
        counterexamples=bad,
    )


# ----------------------------------------------------------------------
# Filtrations
# ----------------------------------------------------------------------

def branching_oracle(shape: Sequence[int], kind: str) -> List[Tuple[int, ...]]:
    """Shapes obtained by adding (induce) or removing (restrict) one box, sorted."""
    inner, outer = corners(shape)
    if kind == "induce":
        found = [add_box(shape, k) for k in outer]
    else:
        found = [remove_box(shape, k) for k in inner]
    return sorted(found)


def _closure_by_witness(
    theta: ThetaMap,
    layer: Sequence[Permutation],
    support: Set[Permutation],
    kernel: Set[Permutation],
    generators: Sequence[int],
) -> List[str]:
    """Check theta(C_w) T_s = sum_{u in support} lambda_{w,s,u} theta(C_u) exactly."""
    problems = []
    for w in layer:
        image = theta(w)
        for s in generators:
            constants = c_structure_constants_right(w, s, theta.kl)
            stray = [u for u in constants if u not in support and u not in kernel]
            if stray:
                problems.append(f"C[{w}] T_{s} reaches C[{stray[0]}] outside the layer")
                continue
            rhs = HeckeElement.zero(theta.g.rank)
            for u, c in constants.items():
                if u in support:
                    rhs = rhs + theta(u).scale(c)
            if image.times_generator(s) != rhs:
                problems.append(f"theta(C[{w}]) T_{s} is not the predicted combination")
    return problems


def _chain_problems(shapes: List[Tuple[int, ...]], oracle: List[Tuple[int, ...]]) -> List[str]:
    problems = []
    for a, b in zip(shapes, shapes[1:]):
        if not dominance_lt(a, b):
            problems.append(f"factor shapes {a} and {b} are not strictly increasing in dominance")
    if sorted(shapes) != oracle:
        problems.append(f"factor shapes {sorted(shapes)} differ from the branching rule {oracle}")
    return problems


def induced_specht_filtration(lam: Sequence[int], mu: Sequence[int], force: bool = False) -> SpechtFiltrationReport:
    """Specht filtration of S^lambda H for lambda, mu compositions of n, inside H(S_{n+1})."""
    lam = composition(lam)
    mu = composition(mu)
    n = sum(lam)
    module = specht_basis(lam, mu, get_kl_table(n, force=force), strict=False, force=force)
    big = get_kl_table(n + 1, force=force)
    cells = get_cell_structure(n + 1, force=force)
    small_cells = get_cell_structure(n, force=force)
    theta = ThetaMap(module.theta.g.embed(n + 1), big)
    problems = list(module.problems)

    decomposition = induce_cell(module.cell)
    problems += decomposition.problems
    top = parabolic(n, j_of_composition(mu)).longest
    kernel = {compose(y.embed(n + 1), x) for y in small_cells.strict_down_set_right(top) for x in coset_reps_prime(n)}

    everything = [w for f in decomposition.factors for w in ordered(f.cell)]
    expected = (n + 1) * module.expected_size
    if len(everything) != expected:
        problems.append(f"basis of S^lambda H has {len(everything)} elements, expected {expected}")
    independent = is_independent([theta(w).coeffs for w in everything])
    if not independent:
        problems.append("basis of S^lambda H is not linearly independent")

    generators = generators_of(n + 1)
    support: Set[Permutation] = set()
    chain: List[SpechtLayer] = []
    shapes: List[Tuple[int, ...]] = []
    for factor in reversed(decomposition.factors):
        index = ordered(factor.cell)
        support |= factor.cell
        closure = _closure_by_witness(theta, index, support, kernel, generators)
        matrices, cell_problems = cell_representation(factor.cell, big, cells, generators)
        character_problems, checked = character_check(matrices, factor.shape)
        isomorphic = not cell_problems and not character_problems
        problems += closure + cell_problems + character_problems
        shapes.append(factor.shape)
        chain.append(
            SpechtLayer(
                corner=list(factor.corner),
                shape=list(factor.shape),
                size=len(index),
                spanning_set=[w.to_json() for w in index],
                closure_verified=not closure,
                isomorphism_verified=isomorphic,
                character_skipped=not checked,
                matrices=matrices_to_json(matrices),
            )
        )
    oracle = branching_oracle(sorted_partition(lam), "induce")
    problems += _chain_problems(shapes, oracle)

    logger.info(f"induced Specht filtration lambda={lam} mu={mu}: {[list(s) for s in shapes]}, {len(problems)} problems")
    return SpechtFiltrationReport(
        kind="induce",
        lam=list(lam),
        mu=list(mu),
        ambient_rank=n + 1,
        diagram=module.diagram.to_json(),
        w_E=module.w_E.to_json(),
        basis_size=len(everything),
        expected_basis_size=expected,
        independent=independent,
        chain=chain,
        branching_oracle=[list(s) for s in oracle],
        verified=not problems,
        problems=problems,
    )


def restricted_specht_filtration(lam: Sequence[int], mu: Sequence[int], force: bool = False) -> SpechtFiltrationReport:
    """Specht filtration of S^lambda restricted to H(S_n), for lambda, mu compositions of n+1."""
    lam = composition(lam)
    mu = composition(mu)
    m = sum(lam)
    n = m - 1
    kl = get_kl_table(m, force=force)
    cells = get_cell_structure(m, force=force)
    small_kl = get_kl_table(n, force=force)
    small_cells = get_cell_structure(n, force=force)
    module = specht_basis(lam, mu, kl, strict=False, force=force)
    theta = module.theta
    problems = list(module.problems)

    decomposition = restrict_cell(module.cell)
    problems += decomposition.problems
    top = parabolic(m, j_of_composition(mu)).longest
    kernel = set(cells.strict_down_set_right(top))

    generators = generators_of(n)
    support: Set[Permutation] = set()
    chain: List[SpechtLayer] = []
    shapes: List[Tuple[int, ...]] = []
    for factor in decomposition.factors:
        index = ordered(factor.cell)
        translated = [compose(factor.d_k, u.embed(m)) for u in index]
        support |= set(translated)
        closure = _closure_by_witness(theta, translated, support, kernel, generators)
        matrices, cell_problems = cell_representation(factor.cell, small_kl, small_cells, generators)
        layer_problems = _restricted_layer_problems(factor, translated, matrices, kl, generators)
        character_problems, checked = character_check(matrices, factor.shape)
        isomorphic = not cell_problems and not layer_problems and not character_problems
        problems += closure + cell_problems + layer_problems + character_problems
        shapes.append(factor.shape)
        chain.append(
            SpechtLayer(
                corner=list(factor.corner),
                shape=list(factor.shape),
                size=len(index),
                spanning_set=[w.to_json() for w in translated],
                d_k=factor.d_k.to_json(),
                closure_verified=not closure,
                isomorphism_verified=isomorphic,
                character_skipped=not checked,
                matrices=matrices_to_json(matrices),
            )
        )
    oracle = branching_oracle(sorted_partition(lam), "restrict")
    problems += _chain_problems(shapes, oracle)

    logger.info(f"restricted Specht filtration lambda={lam} mu={mu}: {[list(s) for s in shapes]}, {len(problems)} problems")
    return SpechtFiltrationReport(
        kind="restrict",
        lam=list(lam),
        mu=list(mu),
        ambient_rank=m,
        diagram=module.diagram.to_json(),
        w_E=module.w_E.to_json(),
        basis_size=len(module.cell),
        expected_basis_size=module.expected_size,
        independent=module.independent,
        chain=chain,
        branching_oracle=[list(s) for s in oracle],
        verified=not problems,
        problems=problems,
    )


def _restricted_layer_problems(
    factor: RestrictionFactor,
    translated: List[Permutation],
    matrices: Dict[int, List[List[LaurentPoly]]],
    kl: KLTable,
    generators: Sequence[int],
) -> List[str]:
    """The factor matrices on {C_{d u}} agree with the S_n cell representation."""
    problems = []
    for s in generators:
        for row, w in enumerate(translated):
            constants = c_structure_constants_right(w, s, kl)
            got = [constants.get(u, ZERO) for u in translated]
            if got != matrices[s][row]:
                problems.append(f"row of C[{w}] T_{s} differs from the S_{kl.m - 1} cell module at {factor.corner}")
    return problems


def admissible_pairs(m: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All (lambda, mu) compositions of m with lambda'' = mu'."""
    comps = compositions_of(m)
    return [(lam, mu) for lam in comps for mu in comps if sorted_partition(lam) == conjugate(mu)]

