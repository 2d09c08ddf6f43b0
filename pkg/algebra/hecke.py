"""
The Iwahori-Hecke algebra H of S_m over A = Z[v, v^-1], v = q^(1/2).

Elements are finitely supported maps Permutation -> LaurentPoly tagged
with the basis they are written in:

- T:      the standard basis, (T_s + 1)(T_s - q) = 0
- Ttilde: T~_w = v^(-l(w)) T_w
- C:      C_y = sum_x (-1)^(l(y)-l(x)) v^(l(y)-2l(x)) P_{x,y}(q^-1) T_x
- Cprime: C'_y = v^(-l(y)) sum_x P_{x,y}(q) T_x

Multiplication happens in the T basis; the other bases are reached by
exact unitriangular conversion along the Bruhat order.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from algebra.errors import PreconditionError, RankMismatchError
from algebra.kl import KLTable
from algebra.ring import ONE, Q, Q_INV, V, ZERO, LaurentPoly, Scalar
from algebra.symgroup import Permutation

logger = logging.getLogger(__name__)


class Basis(str, Enum):
    T = "T"
    TTILDE = "Ttilde"
    C = "C"
    CPRIME = "Cprime"


class HeckeElement:
    """An immutable element of H written in one of the four bases."""

    __slots__ = ("basis", "rank", "coeffs")

    def __init__(
        self,
        coeffs: Mapping[Permutation, Scalar],
        basis: Basis = Basis.T,
        rank: Optional[int] = None,
    ):
        clean: Dict[Permutation, LaurentPoly] = {}
        for w, c in coeffs.items():
            c = LaurentPoly.coerce(c)
            if c:
                clean[w] = c
        ranks = {w.rank for w in clean}
        if rank is None:
            if len(ranks) != 1:
                raise PreconditionError("rank of an empty or mixed element must be given")
            rank = ranks.pop()
        elif ranks and ranks != {rank}:
            raise RankMismatchError(f"coefficients indexed by S_{sorted(ranks)} in an S_{rank} element")
        self.basis = Basis(basis)
        self.rank = rank
        self.coeffs = clean

    @classmethod
    def zero(cls, rank: int, basis: Basis = Basis.T) -> "HeckeElement":
        return cls({}, basis, rank)

    @classmethod
    def basis_element(cls, w: Permutation, basis: Basis = Basis.T) -> "HeckeElement":
        return cls({w: ONE}, basis, w.rank)

    @classmethod
    def one(cls, rank: int) -> "HeckeElement":
        return cls.basis_element(Permutation.identity(rank))

    # ------------------------------------------------------------------

    def coefficient(self, w: Permutation) -> LaurentPoly:
        return self.coeffs.get(w, ZERO)

    def support(self) -> List[Permutation]:
        return sorted(self.coeffs, key=lambda w: (w.length(), w.images))

    def items(self) -> List[Tuple[Permutation, LaurentPoly]]:
        return [(w, self.coeffs[w]) for w in self.support()]

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "HeckeElement") -> None:
        if self.rank != other.rank:
            raise RankMismatchError(f"H(S_{self.rank}) and H(S_{other.rank}) elements do not combine")
        if self.basis != other.basis:
            raise PreconditionError(f"basis mismatch: {self.basis.value} vs {other.basis.value}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(out, self.basis, self.rank)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement({w: -c for w, c in self.coeffs.items()}, self.basis, self.rank)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, a: Scalar) -> "HeckeElement":
        a = LaurentPoly.coerce(a)
        return HeckeElement({w: a * c for w, c in self.coeffs.items()}, self.basis, self.rank)

    def __rmul__(self, a: Scalar) -> "HeckeElement":
        return self.scale(a)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return t_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return (self.rank, self.basis, self.coeffs) == (other.rank, other.basis, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.rank, self.basis, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"HeckeElement({self.basis.value}, S_{self.rank}, {len(self.coeffs)} terms)"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{self.basis.value}[{w}]" for w, c in self.items())

    # ------------------------------------------------------------------
    # Generator actions in the T basis
    # ------------------------------------------------------------------

    def times_generator(self, s: int) -> "HeckeElement":
        """h T_s for h in the T basis."""
        self._require_t()
        out: Dict[Permutation, LaurentPoly] = {}
        for w, c in self.coeffs.items():
            ws = w.times_generator(s)
            if w.is_right_descent(s):
                out[ws] = out.get(ws, ZERO) + Q * c
                out[w] = out.get(w, ZERO) + (Q - 1) * c
            else:
                out[ws] = out.get(ws, ZERO) + c
        return HeckeElement(out, Basis.T, self.rank)

    def generator_times(self, s: int) -> "HeckeElement":
        """T_s h for h in the T basis."""
        self._require_t()
        out: Dict[Permutation, LaurentPoly] = {}
        for w, c in self.coeffs.items():
            sw = w.generator_times(s)
            if w.is_left_descent(s):
                out[sw] = out.get(sw, ZERO) + Q * c
                out[w] = out.get(w, ZERO) + (Q - 1) * c
            else:
                out[sw] = out.get(sw, ZERO) + c
        return HeckeElement(out, Basis.T, self.rank)

    def _require_t(self) -> None:
        if self.basis != Basis.T:
            raise PreconditionError(f"operation needs the T basis, got {self.basis.value}")

    def embed(self, m: int) -> "HeckeElement":
        """Image under H(S_k) -> H(S_m)."""
        return HeckeElement({w.embed(m): c for w, c in self.coeffs.items()}, self.basis, m)

    def specialize_one(self) -> Dict[Permutation, int]:
        return {w: c.specialize_one() for w, c in self.coeffs.items() if c.specialize_one()}

    def to_json(self) -> Dict[str, object]:
        return {
            "basis": self.basis.value,
            "m": self.rank,
            "terms": [{"w": w.to_json(), "c": c.to_json()} for w, c in self.items()],
        }


# ----------------------------------------------------------------------
# Products
# ----------------------------------------------------------------------

def right_multiples(a: HeckeElement, targets: Iterable[Permutation]) -> Dict[Permutation, HeckeElement]:
    """{y: a T_y} for every y in targets, sharing work along reduced-word prefixes."""
    a._require_t()
    memo: Dict[Permutation, HeckeElement] = {Permutation.identity(a.rank): a}

    def product(y: Permutation) -> HeckeElement:
        stack = [y]
        while stack:
            top = stack[-1]
            if top in memo:
                stack.pop()
                continue
            s = min(top.right_descents())
            prev = top.times_generator(s)
            if prev in memo:
                memo[top] = memo[prev].times_generator(s)
                stack.pop()
            else:
                stack.append(prev)
        return memo[y]

    return {y: product(y) for y in targets}


def t_multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """The product a b of two T-basis elements."""
    if a.rank != b.rank:
        raise RankMismatchError(f"cannot multiply H(S_{a.rank}) by H(S_{b.rank})")
    a._require_t()
    b._require_t()
    partials = right_multiples(a, b.coeffs)
    out: Dict[Permutation, LaurentPoly] = {}
    for y, c in b.coeffs.items():
        for w, d in partials[y].coeffs.items():
            out[w] = out.get(w, ZERO) + c * d
    return HeckeElement(out, Basis.T, a.rank)


def t_element(w: Permutation) -> HeckeElement:
    return HeckeElement.basis_element(w, Basis.T)


def t_word(m: int, word: Iterable[int]) -> HeckeElement:
    """T_{s_{i1}} T_{s_{i2}} ... as a T-basis element."""
    h = HeckeElement.one(m)
    for i in word:
        h = h.times_generator(i)
    return h


# ----------------------------------------------------------------------
# Kazhdan-Lusztig bases
# ----------------------------------------------------------------------

_c_cache: Dict[Tuple[int, Permutation], HeckeElement] = {}
_cprime_cache: Dict[Tuple[int, Permutation], HeckeElement] = {}


def c_basis_element(y: Permutation, kl: KLTable) -> HeckeElement:
    """C_y written in the T basis."""
    key = (id(kl), y)
    if key not in _c_cache:
        ly = y.length()
        out = {}
        for x, coeffs in kl.lower_interval(y).items():
            lx = x.length()
            # P_{x,y}(q^-1) times the sign and v-power
            sign = -1 if (ly - lx) % 2 else 1
            out[x] = LaurentPoly({ly - 2 * lx - 2 * k: sign * c for k, c in enumerate(coeffs)})
        _c_cache[key] = HeckeElement(out, Basis.T, kl.m)
    return _c_cache[key]


def cprime_basis_element(y: Permutation, kl: KLTable) -> HeckeElement:
    """C'_y written in the T basis."""
    key = (id(kl), y)
    if key not in _cprime_cache:
        ly = y.length()
        out = {
            x: LaurentPoly({2 * k - ly: c for k, c in enumerate(coeffs)})
            for x, coeffs in kl.lower_interval(y).items()
        }
        _cprime_cache[key] = HeckeElement(out, Basis.T, kl.m)
    return _cprime_cache[key]


def clear_caches() -> None:
    _c_cache.clear()
    _cprime_cache.clear()
    _bar_t_cache.clear()
    _lambda_cache.clear()


def _expand(h: HeckeElement, kl: Optional[KLTable]) -> HeckeElement:
    """Rewrite h in the T basis."""
    if h.basis == Basis.T:
        return h
    if h.basis == Basis.TTILDE:
        return HeckeElement({w: c.shift(-w.length()) for w, c in h.coeffs.items()}, Basis.T, h.rank)
    if kl is None:
        raise PreconditionError(f"converting from {h.basis.value} needs a KL table")
    element = c_basis_element if h.basis == Basis.C else cprime_basis_element
    out: Dict[Permutation, LaurentPoly] = {}
    for y, a in h.coeffs.items():
        for x, c in element(y, kl).coeffs.items():
            out[x] = out.get(x, ZERO) + a * c
    return HeckeElement(out, Basis.T, h.rank)


def to_basis(h: HeckeElement, target: Basis, kl: Optional[KLTable] = None) -> HeckeElement:
    """Exact change of basis."""
    target = Basis(target)
    if h.basis == target:
        return h
    t_form = _expand(h, kl)
    if target == Basis.T:
        return t_form
    if target == Basis.TTILDE:
        return HeckeElement({w: c.shift(w.length()) for w, c in t_form.coeffs.items()}, Basis.TTILDE, h.rank)
    if kl is None:
        raise PreconditionError(f"converting to {target.value} needs a KL table")
    element = c_basis_element if target == Basis.C else cprime_basis_element
    remaining = dict(t_form.coeffs)
    out: Dict[Permutation, LaurentPoly] = {}
    while remaining:
        # a longest element of the support only receives its own leading term
        y = max(remaining, key=lambda w: (w.length(), w.images))
        a = remaining[y].shift(y.length())
        out[y] = a
        for x, c in element(y, kl).coeffs.items():
            left = remaining.get(x, ZERO) - a * c
            if left:
                remaining[x] = left
            else:
                remaining.pop(x, None)
    return HeckeElement(out, target, h.rank)


# ----------------------------------------------------------------------
# Involutions
# ----------------------------------------------------------------------

_bar_t_cache: Dict[Permutation, HeckeElement] = {}


def _bar_of_t(y: Permutation) -> HeckeElement:
    """bar(T_y) = T_{y^-1}^-1, the product of T_s^-1 along a reduced word of y."""
    if y in _bar_t_cache:
        return _bar_t_cache[y]
    if y.length() == 0:
        result = HeckeElement.basis_element(y)
    else:
        s = max(y.right_descents())
        prev = _bar_of_t(y.times_generator(s))
        # h T_s^-1 = q^-1 h T_s + (q^-1 - 1) h
        result = prev.times_generator(s).scale(Q_INV) + prev.scale(Q_INV - 1)
    _bar_t_cache[y] = result
    return result


def bar_involution(h: HeckeElement) -> HeckeElement:
    """sum a_y T_y -> sum bar(a_y) T_{y^-1}^-1, in the T basis."""
    h._require_t()
    out: Dict[Permutation, LaurentPoly] = {}
    for y, a in h.coeffs.items():
        abar = a.bar()
        for x, c in _bar_of_t(y).coeffs.items():
            out[x] = out.get(x, ZERO) + abar * c
    return HeckeElement(out, Basis.T, h.rank)


def j_involution(h: HeckeElement) -> HeckeElement:
    """sum a_y T_y -> sum bar(a_y) (-q^-1)^l(y) T_y."""
    h._require_t()
    out = {}
    for y, a in h.coeffs.items():
        ly = y.length()
        sign = -1 if ly % 2 else 1
        out[y] = a.bar().shift(-2 * ly) * sign
    return HeckeElement(out, Basis.T, h.rank)


# ----------------------------------------------------------------------
# Structure constants for right multiplication by T_s
# ----------------------------------------------------------------------

def structure_constants_right(y: Permutation, s: int, kl: KLTable) -> Dict[Permutation, LaurentPoly]:
    """alpha_{y,T_s,x}: C'_y T_s = sum_x alpha_{y,T_s,x} C'_x."""
    if y.is_right_descent(s):
        return {y: Q}
    out = {y.times_generator(s): V, y: LaurentPoly.constant(-1)}
    for z, mu in kl.mu_list(y):
        if z.is_right_descent(s):
            out[z] = out.get(z, ZERO) + V * mu
    return {x: c for x, c in out.items() if c}


def structure_constants_right_by_expansion(y: Permutation, s: int, kl: KLTable) -> Dict[Permutation, LaurentPoly]:
    """The same constants obtained by multiplying out in the T basis and converting back."""
    product = cprime_basis_element(y, kl).times_generator(s)
    return dict(to_basis(product, Basis.CPRIME, kl).coeffs)


_lambda_cache: Dict[Tuple[int, Permutation, int], Dict[Permutation, LaurentPoly]] = {}


def c_structure_constants_right(y: Permutation, s: int, kl: KLTable) -> Dict[Permutation, LaurentPoly]:
    """lambda_{y,T_s,u}: C_y T_s = sum_u lambda_{y,T_s,u} C_u.

    lambda_{y,T_s,u} = (-1)^(l(u)-l(y)+1) q bar(alpha_{y,T_s,u}).
    """
    key = (id(kl), y, s)
    if key not in _lambda_cache:
        ly = y.length()
        out = {}
        for u, alpha in structure_constants_right(y, s, kl).items():
            sign = -1 if (u.length() - ly + 1) % 2 else 1
            out[u] = (Q * alpha.bar()) * sign
        _lambda_cache[key] = out
    return _lambda_cache[key]


def c_structure_constants_by_expansion(y: Permutation, s: int, kl: KLTable) -> Dict[Permutation, LaurentPoly]:
    product = c_basis_element(y, kl).times_generator(s)
    return dict(to_basis(product, Basis.C, kl).coeffs)
