"""
Kazhdan-Lusztig polynomials of S_m.

P_{x,y} is stored as a tuple of integer coefficients in q (index k holds
the coefficient of q^k). The table is built by the standard recursion on
a right descent s of y, with z = ys:

    P_{x,y} = q^(1-c) P_{xs,z} + q^c P_{x,z}
              - sum_{z' < z, z's < z'} mu(z', z) q^((l(y)-l(z'))/2) P_{x,z'}

where c = 1 if xs < x and 0 otherwise.

Usage:
    from algebra.kl import get_kl_table

    kl = get_kl_table(4)
    print(kl.p(x, y), kl.mu(x, y))
"""

from __future__ import annotations

import logging
import time
from typing import Any, Dict, Iterable, List, Optional, Tuple

from algebra.ring import LaurentPoly
from algebra.symgroup import Permutation, by_length

logger = logging.getLogger(__name__)

QPoly = Tuple[int, ...]


def _trim(coeffs: List[int]) -> QPoly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add_into(acc: List[int], poly: QPoly, shift: int = 0, scale: int = 1) -> None:
    need = len(poly) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(poly):
        acc[k + shift] += scale * c


class KLTable:
    """All P_{x,y} for x <= y in S_m, with the derived mu-coefficients."""

    def __init__(self, m: int, columns: Dict[Permutation, Dict[Permutation, QPoly]]):
        self.m = m
        self._columns = columns
        self._mu_lists: Dict[Permutation, List[Tuple[Permutation, int]]] = {}

    # ------------------------------------------------------------------

    def p_coeffs(self, x: Permutation, y: Permutation) -> QPoly:
        return self._columns[y].get(x, ())

    def p(self, x: Permutation, y: Permutation) -> LaurentPoly:
        """P_{x,y} as an element of A (q^k becomes v^(2k)); zero unless x <= y."""
        return LaurentPoly.from_q_coefficients(self.p_coeffs(x, y))

    def lower_interval(self, y: Permutation) -> Dict[Permutation, QPoly]:
        """{x: P_{x,y}} over the Bruhat interval [e, y]."""
        return self._columns[y]

    def bruhat_leq(self, x: Permutation, y: Permutation) -> bool:
        return x in self._columns[y]

    def mu(self, x: Permutation, y: Permutation) -> int:
        """Coefficient of q^((l(y)-l(x)-1)/2) in P_{x,y} for x < y; zero otherwise."""
        gap = y.length() - x.length()
        if gap <= 0 or gap % 2 == 0:
            return 0
        coeffs = self.p_coeffs(x, y)
        k = (gap - 1) // 2
        return coeffs[k] if k < len(coeffs) else 0

    def mu_list(self, y: Permutation) -> List[Tuple[Permutation, int]]:
        """All (z, mu(z, y)) with z < y and mu(z, y) != 0."""
        if y not in self._mu_lists:
            self._mu_lists[y] = sorted(
                ((z, self.mu(z, y)) for z in self._columns[y] if z != y and self.mu(z, y)),
                key=lambda item: (item[0].length(), item[0].images),
            )
        return self._mu_lists[y]

    def elements(self) -> List[Permutation]:
        return sorted(self._columns, key=lambda w: (w.length(), w.images))

    def pairs(self) -> Iterable[Tuple[Permutation, Permutation, QPoly]]:
        for y in self.elements():
            for x in sorted(self._columns[y], key=lambda w: (w.length(), w.images)):
                yield x, y, self._columns[y][x]

    def __len__(self) -> int:
        return sum(len(col) for col in self._columns.values())

    # ------------------------------------------------------------------

    def violations(self) -> List[str]:
        """Defining properties that fail: P_{y,y}=1 and the degree bound."""
        problems = []
        for x, y, coeffs in self.pairs():
            if x == y:
                if coeffs != (1,):
                    problems.append(f"P_{{{x},{y}}} = {coeffs}, expected 1")
                continue
            if not coeffs:
                problems.append(f"P_{{{x},{y}}} stored as zero")
                continue
            bound = (y.length() - x.length() - 1) / 2
            if len(coeffs) - 1 > bound:
                problems.append(f"deg P_{{{x},{y}}} = {len(coeffs) - 1} exceeds {bound}")
        return problems

    def to_json(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "polys": [
                {"x": x.to_json(), "y": y.to_json(), "p": LaurentPoly.from_q_coefficients(c).to_json()}
                for x, y, c in self.pairs()
            ],
        }

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> "KLTable":
        m = int(payload["m"])
        columns: Dict[Permutation, Dict[Permutation, QPoly]] = {}
        for entry in payload["polys"]:
            x = Permutation(entry["x"])
            y = Permutation(entry["y"])
            poly = LaurentPoly.from_json(entry["p"])
            coeffs = [0] * (poly.degree() // 2 + 1) if poly else []
            for exp, c in poly.terms():
                if exp < 0 or exp % 2:
                    raise ValueError(f"P_{{{x},{y}}} is not a polynomial in q")
                coeffs[exp // 2] = c
            columns.setdefault(y, {})[x] = _trim(coeffs)
        table = cls(m, columns)
        if len(columns) != len(by_length(m)) or any(y.rank != m for y in columns):
            raise ValueError(f"table does not cover S_{m}")
        return table


def compute_kl_table(m: int) -> KLTable:
    """Run the recursion over S_m in order of length."""
    started = time.time()
    columns: Dict[Permutation, Dict[Permutation, QPoly]] = {}
    table = KLTable(m, columns)
    for y in by_length(m):
        if y.length() == 0:
            columns[y] = {y: (1,)}
            continue
        s = min(y.right_descents())
        z = y.times_generator(s)
        below_z = columns[z]
        candidates = set(below_z)
        candidates.update(x.times_generator(s) for x in below_z)
        corrections = [(zp, mu) for zp, mu in table.mu_list(z) if zp.is_right_descent(s)]
        ly = y.length()
        column: Dict[Permutation, QPoly] = {}
        for x in candidates:
            xs = x.times_generator(s)
            acc: List[int] = []
            if x.is_right_descent(s):
                _add_into(acc, below_z.get(xs, ()))
                _add_into(acc, below_z.get(x, ()), shift=1)
            else:
                _add_into(acc, below_z.get(xs, ()), shift=1)
                _add_into(acc, below_z.get(x, ()))
            for zp, mu in corrections:
                p = columns[zp].get(x)
                if p:
                    _add_into(acc, p, shift=(ly - zp.length()) // 2, scale=-mu)
            poly = _trim(acc)
            if poly:
                column[x] = poly
        columns[y] = column
    logger.info(
        f"KL table for S_{m} built: {sum(len(c) for c in columns.values())} pairs "
        f"in {time.time() - started:.2f}s"
    )
    return table


_tables: Dict[int, KLTable] = {}


def get_kl_table(
    m: int,
    force: bool = False,
    cache_dir: Optional[str] = None,
    use_disk: bool = True,
) -> KLTable:
    """Memoised KL table for S_m, read from or written to the disk cache."""
    from settings.kl_cache import load_kl_payload, save_kl_payload
    from settings.settings import check_rank

    if m in _tables:
        return _tables[m]
    check_rank(m, force)
    table = None
    if use_disk:
        payload = load_kl_payload(m, cache_dir)
        if payload is not None:
            try:
                table = KLTable.from_json(payload)
                problems = table.violations()
                if problems:
                    logger.warning(f"cached KL table for S_{m} fails {len(problems)} checks; recomputing")
                    table = None
            except (KeyError, TypeError, ValueError) as e:
                logger.warning(f"cached KL table for S_{m} is malformed ({e}); recomputing")
                table = None
    if table is None:
        table = compute_kl_table(m)
        if use_disk:
            save_kl_payload(m, table.to_json(), cache_dir)
    _tables[m] = table
    return table


def clear_memo() -> None:
    _tables.clear()
