# app.py
"""
Command-line front end: compute, verify and export KL polynomials, cells,
cell and Specht filtrations, and the pair-of-partitions claims.

Exit codes: 0 when every proven claim verified, 1 on a verification
failure, 2 on a usage error.
"""

import argparse
import logging
import os
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from algebra.errors import PreconditionError, RankBoundError, VerificationError
from settings.kl_cache import clear_cache
from settings.settings import RunConfig, check_rank, get_log_level
from utils.helpers import dump_json, parse_permutation
from utils.report_loader import render_report

logger = logging.getLogger("app")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# Lazy loading functions; the algebra modules build large tables on first use
def lazy_import_kl():
    import algebra.kl as kl
    return kl

def lazy_import_hecke():
    import algebra.hecke as hecke
    return hecke

def lazy_import_preorders():
    import algebra.preorders as preorders
    return preorders

def lazy_import_cells():
    import algebra.cells as cells
    return cells

def lazy_import_specht():
    import algebra.specht as specht
    return specht

def lazy_import_pairparts():
    import algebra.pairparts as pairparts
    return pairparts

def lazy_import_orchestrator():
    import verification.orchestrator as orchestrator
    return orchestrator


def emit(cfg: RunConfig, template: str, data, **context) -> None:
    """Write a report to stdout as JSON or through its text template."""
    if cfg.format == "json":
        sys.stdout.write(dump_json(data))
    else:
        sys.stdout.write(render_report(template, **context))


def _claims_status(claims) -> int:
    return EXIT_OK if all(c.passed for c in claims if not c.experimental) else EXIT_FAILED


# =============================================================================
# Commands
# =============================================================================

def cmd_klpoly(cfg: RunConfig) -> int:
    """P_{x,y} for one pair, or the whole table with --all."""
    from algebra.schemas import KLEntry, KLTableDump

    kl = lazy_import_kl().get_kl_table(cfg.m, force=cfg.force, cache_dir=cfg.cache_dir)
    if cfg.all:
        entries = [KLEntry(x=x.to_json(), y=y.to_json(), p=kl.p(x, y).to_json()) for x, y, _ in kl.pairs()]
    else:
        if cfg.x is None or cfg.y is None:
            raise PreconditionError("klpoly needs --x and --y, or --all")
        x = parse_permutation(cfg.x, cfg.m)
        y = parse_permutation(cfg.y, cfg.m)
        entries = [KLEntry(x=x.to_json(), y=y.to_json(), p=kl.p(x, y).to_json())]
    report = KLTableDump(m=cfg.m, polys=entries)
    emit(cfg, "klpoly", report, report=report.model_dump(mode="json"))
    return EXIT_OK


def cmd_cbasis(cfg: RunConfig) -> int:
    """C_y or C'_y expanded in the T-basis."""
    from algebra.schemas import HeckeElementDump, HeckeTerm

    hecke = lazy_import_hecke()
    if cfg.y is None:
        raise PreconditionError("cbasis needs --y")
    kl = lazy_import_kl().get_kl_table(cfg.m, force=cfg.force, cache_dir=cfg.cache_dir)
    y = parse_permutation(cfg.y, cfg.m)
    if cfg.basis == "C":
        element, label = hecke.c_basis_element(y, kl), f"C[{y}]"
    else:
        element, label = hecke.cprime_basis_element(y, kl), f"C'[{y}]"
    report = HeckeElementDump(
        basis=element.basis.value,
        m=cfg.m,
        label=label,
        terms=[HeckeTerm(w=w.to_json(), c=c.to_json()) for w, c in element.items()],
    )
    emit(cfg, "cbasis", report, report=report.model_dump(mode="json"))
    return EXIT_OK


def cmd_cells(cfg: RunConfig) -> int:
    """Left, right and two-sided cells, flagged against RS fibres and dominance."""
    cells = lazy_import_preorders().get_cell_structure(cfg.m, force=cfg.force, cache_dir=cfg.cache_dir)
    report = cells.to_dump()
    emit(cfg, "cells", report, report=report.model_dump(mode="json"))
    return EXIT_OK if report.rs_agreement and report.dominance_agreement else EXIT_FAILED


def _right_cell_of(cfg: RunConfig):
    if cfg.w is None:
        raise PreconditionError("a cell is named by a representative --w")
    w = parse_permutation(cfg.w, cfg.m)
    check_rank(w.rank, cfg.force)
    cells = lazy_import_preorders().get_cell_structure(w.rank, force=cfg.force, cache_dir=cfg.cache_dir)
    return cells.right_cell_of(w)


def _decomposition_command(cfg: RunConfig, decompose: Callable, filtrate: Callable) -> int:
    cell = _right_cell_of(cfg)
    report = decompose(cell).to_report()
    emit(cfg, "decomposition", report, report=report.model_dump(mode="json"))
    ok = report.verified
    if cfg.filtration:
        filtration = filtrate(cell, force=cfg.force)
        emit(cfg, "filtration", filtration, report=filtration.model_dump(mode="json"))
        ok = ok and filtration.verified
    return EXIT_OK if ok else EXIT_FAILED


def cmd_induce_cell(cfg: RunConfig) -> int:
    cells = lazy_import_cells()
    return _decomposition_command(cfg, cells.induce_cell, cells.induced_cell_filtration)


def cmd_restrict_cell(cfg: RunConfig) -> int:
    cells = lazy_import_cells()
    return _decomposition_command(cfg, cells.restrict_cell, cells.restricted_cell_filtration)


def cmd_filtrate(cfg: RunConfig) -> int:
    """Specht filtration of an induced (--n) or restricted (--m) Specht module."""
    specht = lazy_import_specht()
    if cfg.lam is None or cfg.mu is None:
        raise PreconditionError("filtrate needs --lambda and --mu")
    size = sum(cfg.lam)
    if sum(cfg.mu) != size:
        raise PreconditionError(f"lambda and mu must have the same size, got {size} and {sum(cfg.mu)}")
    if cfg.subcommand == "induce":
        if cfg.n is not None and cfg.n != size:
            raise PreconditionError(f"lambda is a composition of {size}, not of n={cfg.n}")
        check_rank(size + 1, cfg.force)
        report = specht.induced_specht_filtration(cfg.lam, cfg.mu, force=cfg.force)
    else:
        rank = cfg.m if cfg.m is not None else cfg.n
        if rank is not None and rank != size:
            raise PreconditionError(f"lambda is a composition of {size}, not of m={rank}")
        check_rank(size, cfg.force)
        report = specht.restricted_specht_filtration(cfg.lam, cfg.mu, force=cfg.force)
    emit(cfg, "specht_filtration", report, report=report.model_dump(mode="json", by_alias=True))
    return EXIT_OK if report.verified else EXIT_FAILED


def _pair_claims(cfg: RunConfig, mu, pairparts) -> List:
    claims = [pairparts.verify_sequence_bijection(mu), pairparts.verify_column_criterion(mu)]
    claims.append(pairparts.verify_kostka_cell_count(mu, cfg.lam))
    claims.append(pairparts.verify_ptableau_shortcut(mu))
    claims.append(pairparts.verify_cell_unions(mu))
    claims += pairparts.verify_prefix_monotonicity(mu)
    claims += pairparts.verify_special_cases(mu)
    return claims


def _explore_claims(cfg: RunConfig, mu, pairparts) -> List:
    if cfg.lam is not None:
        return [pairparts.explore_downward_closure(mu, cfg.lam)]
    return [pairparts.explore_downward_closure(pair.mu, pair.lam) for pair in pairparts.pairs_for(mu)]


def cmd_pairs(cfg: RunConfig) -> int:
    """Pair-of-partitions claims for one mu, or for every composition of --m."""
    from algebra.tableaux import compositions_of

    pairparts = lazy_import_pairparts()
    if cfg.mu is not None:
        mus = [cfg.mu]
    elif cfg.m is not None:
        mus = compositions_of(cfg.m)
    else:
        raise PreconditionError("pairs needs --mu or --m")
    for mu in mus:
        check_rank(sum(mu), cfg.force)
    if cfg.lam is not None:
        if cfg.mu is None:
            raise PreconditionError("--lambda needs --mu")
        if cfg.subcommand == "explore":
            pairparts.PairOfPartitions(cfg.lam, cfg.mu)

    claims: List = []
    for mu in mus:
        if cfg.subcommand == "verify":
            claims += _pair_claims(cfg, mu, pairparts)
            if cfg.experimental:
                claims += _explore_claims(cfg, mu, pairparts)
        else:
            claims += _explore_claims(cfg, mu, pairparts)
    emit(cfg, "claims", claims, claims=[c.model_dump(mode="json", by_alias=True) for c in claims])
    return _claims_status(claims)


def cmd_selftest(cfg: RunConfig) -> int:
    """Acceptance suites up to --m (default 4)."""
    max_rank = cfg.m if cfg.m is not None else 4
    report = lazy_import_orchestrator().run_selftest(
        max_rank=max_rank, seed=cfg.seed, force=cfg.force, experimental=cfg.experimental
    )
    emit(cfg, "selftest", report, report=report.model_dump(mode="json", by_alias=True))
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "klpoly": cmd_klpoly,
    "cbasis": cmd_cbasis,
    "cells": cmd_cells,
    "induce-cell": cmd_induce_cell,
    "restrict-cell": cmd_restrict_cell,
    "filtrate": cmd_filtrate,
    "pairs": cmd_pairs,
    "selftest": cmd_selftest,
}


# =============================================================================
# Argument parsing
# =============================================================================

def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--cache-dir", dest="cache_dir", default=None, help="KL table cache (default $HECKE_CACHE_DIR)")
    parser.add_argument("--force", action="store_true", help="override the rank safety bound")
    parser.add_argument("--clear-cache", dest="clear_cache", action="store_true", help="delete cached KL tables before running")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke-cells",
        description="Kazhdan-Lusztig cells and Specht filtrations of Hecke algebras of symmetric groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("klpoly", help="Kazhdan-Lusztig polynomials")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--all", action="store_true")
    _common(p)

    p = sub.add_parser("cbasis", help="C_y or C'_y in the T-basis")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--basis", choices=["C", "Cprime"], default="C")
    _common(p)

    p = sub.add_parser("cells", help="left, right and two-sided cells")
    p.add_argument("--m", type=int, required=True)
    _common(p)

    for name in ("induce-cell", "restrict-cell"):
        p = sub.add_parser(name, help=f"{name.split('-')[0]} the right cell of --w")
        p.add_argument("--w", required=True, help="representative of the cell, one-line form")
        p.add_argument("--m", type=int)
        p.add_argument("--filtration", action="store_true", help="also verify the cell-module filtration")
        _common(p)

    p = sub.add_parser("filtrate", help="Specht filtrations")
    p.add_argument("subcommand", choices=["induce", "restrict"])
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    _common(p)

    p = sub.add_parser("pairs", help="pairs of partitions and unions of left cells")
    p.add_argument("subcommand", choices=["verify", "explore"])
    p.add_argument("--m", type=int)
    p.add_argument("--mu")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--experimental", action="store_true", help="also run the open downward-closure check")
    _common(p)

    p = sub.add_parser("selftest", help="acceptance suites")
    p.add_argument("--m", "--max-rank", dest="m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--experimental", action="store_true")
    _common(p)
    return parser


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else get_log_level(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    options = {k: v for k, v in vars(args).items() if v is not None}
    if "cache_dir" in options:
        os.environ["HECKE_CACHE_DIR"] = options["cache_dir"]

    try:
        cfg = RunConfig(**options)
        if cfg.clear_cache:
            removed = clear_cache(cfg.cache_dir)
            logger.info(f"removed {removed} cached KL tables from {cfg.cache_dir}")
        return COMMANDS[cfg.command](cfg)
    except (PreconditionError, RankBoundError, ValidationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        logger.error(f"verification failed: {e}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
