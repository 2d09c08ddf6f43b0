"""
Pydantic Schemas for Reports

Structured, versioned JSON surface of every command: KL tables, cell
structures, induction/restriction decompositions, filtration reports and
claim verifications.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1

OneLine = List[int]
Poly = List[List[int]]


# =============================================================================
# Hecke algebra dumps
# =============================================================================

class KLEntry(BaseModel):
    """One Kazhdan-Lusztig polynomial"""
    x: OneLine = Field(description="One-line form of x")
    y: OneLine = Field(description="One-line form of y")
    p: Poly = Field(description="P_{x,y} as [[v-exponent, coefficient], ...]")


class KLTableDump(BaseModel):
    """Full or partial KL table of S_m"""
    schema_version: int = Field(default=SCHEMA_VERSION)
    m: int = Field(description="Rank")
    polys: List[KLEntry] = Field(default_factory=list)


class HeckeTerm(BaseModel):
    w: OneLine
    c: Poly


class HeckeElementDump(BaseModel):
    """A Hecke algebra element in a named basis"""
    schema_version: int = Field(default=SCHEMA_VERSION)
    basis: str = Field(description="T, Ttilde, C or Cprime")
    m: int
    label: Optional[str] = Field(default=None, description="What the element is, e.g. C[2,1,3]")
    terms: List[HeckeTerm] = Field(default_factory=list)


class CellDump(BaseModel):
    elements: List[OneLine] = Field(description="Sorted one-line forms")
    shape: List[int] = Field(description="Common RS shape")


class CellStructureDump(BaseModel):
    """Left, right and two-sided cells of S_m"""
    schema_version: int = Field(default=SCHEMA_VERSION)
    m: int
    right_cells: List[CellDump] = Field(default_factory=list)
    left_cells: List[CellDump] = Field(default_factory=list)
    two_sided_cells: List[CellDump] = Field(default_factory=list)
    rs_agreement: bool = Field(description="Closure cells coincide with RS fibres")
    dominance_agreement: bool = Field(description="Two-sided order coincides with dominance")
    problems: List[str] = Field(default_factory=list)


# =============================================================================
# Cell decompositions and filtrations
# =============================================================================

class DecompositionFactor(BaseModel):
    corner: List[int] = Field(description="Node (row, column)")
    shape: List[int]
    cell_size: int
    tableau: List[List[int]] = Field(description="Recording tableau of the factor cell")
    d_k: Optional[OneLine] = Field(default=None, description="Coset representative (restriction only)")
    removed_entry: Optional[int] = Field(default=None, description="i(k) (restriction only)")


class DecompositionReport(BaseModel):
    """Induction or restriction of a right cell"""
    schema_version: int = Field(default=SCHEMA_VERSION)
    kind: str = Field(description="induce or restrict")
    source_rank: int
    source_cell_shape: List[int]
    source_tableau: List[List[int]]
    factors: List[DecompositionFactor] = Field(default_factory=list)
    verified: bool
    problems: List[str] = Field(default_factory=list)


class FiltrationLayer(BaseModel):
    """One factor L_j / L_{j-1} of a verified chain"""
    corner: List[int]
    shape: List[int]
    cell_size: int
    cell: List[OneLine] = Field(description="Index set of the factor's canonical basis")
    d_k: Optional[OneLine] = Field(default=None)
    closure_verified: bool
    isomorphism_verified: bool
    character_skipped: bool = Field(default=False, description="True when the v = 1 character check was not run (rank above the oracle bound)")
    matrices: Dict[str, List[List[Poly]]] = Field(
        default_factory=dict,
        description="Generator index -> matrix of T_s on the factor (rows act on the right)",
    )


class FiltrationReport(BaseModel):
    """Cell-module filtration of an induced or restricted cell module"""
    schema_version: int = Field(default=SCHEMA_VERSION)
    kind: str = Field(description="induce or restrict")
    source_rank: int
    source_cell_shape: List[int]
    base_size: int = Field(description="Size of the C-basis of L_0")
    factors: List[FiltrationLayer] = Field(default_factory=list)
    verified: bool
    problems: List[str] = Field(default_factory=list)


class SpechtLayer(BaseModel):
    corner: List[int]
    shape: List[int] = Field(description="nu^(i)")
    size: int
    spanning_set: List[OneLine] = Field(description="w with x_lambda T_{w_E} C_w spanning the layer")
    d_k: Optional[OneLine] = Field(default=None)
    closure_verified: bool
    isomorphism_verified: bool
    character_skipped: bool = Field(default=False, description="True when the v = 1 character check was not run (rank above the oracle bound)")
    matrices: Dict[str, List[List[Poly]]] = Field(default_factory=dict)


class SpechtFiltrationReport(BaseModel):
    """Explicit Specht filtration of an induced or restricted Specht module"""
    schema_version: int = Field(default=SCHEMA_VERSION)
    kind: str = Field(description="induce or restrict")
    lam: List[int] = Field(alias="lambda")
    mu: List[int]
    ambient_rank: int
    diagram: List[List[int]] = Field(description="Nodes of the special diagram E")
    w_E: OneLine
    basis_size: int
    expected_basis_size: int
    independent: bool
    chain: List[SpechtLayer] = Field(default_factory=list)
    branching_oracle: List[List[int]] = Field(default_factory=list)
    verified: bool
    problems: List[str] = Field(default_factory=list)

    model_config = {"populate_by_name": True}


# =============================================================================
# Claims
# =============================================================================

class ClaimReport(BaseModel):
    """Outcome of checking one stated claim exhaustively"""
    schema_version: int = Field(default=SCHEMA_VERSION)
    mu: Optional[List[int]] = Field(default=None)
    lam: Optional[List[int]] = Field(default=None, alias="lambda")
    claim: str
    checked: int = Field(description="Number of instances examined")
    passed: bool
    experimental: bool = Field(default=False, description="Open question; never affects exit status")
    counterexamples: List[str] = Field(default_factory=list)

    model_config = {"populate_by_name": True}


class SelftestReport(BaseModel):
    """Aggregated results of the acceptance suites"""
    schema_version: int = Field(default=SCHEMA_VERSION)
    max_rank: int
    seed: int
    suites: Dict[str, List[ClaimReport]] = Field(default_factory=dict)
    passed: bool
