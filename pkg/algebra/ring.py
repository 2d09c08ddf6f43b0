"""
Laurent polynomials in v = q^(1/2) with integer coefficients.

The coefficient ring A = Z[v, v^-1] of the Hecke algebra. Exponents are
stored in units of v, so q^k is v^(2k).

Usage:
    from algebra.ring import LaurentPoly, V, Q

    p = (V + V.inverse_monomial()) ** 2
    print(p.bar())
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Tuple, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An element of Z[v, v^-1], stored as a sparse exponent -> coefficient map."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[int, int] | Iterable[Tuple[int, int]] | None = None):
        clean: Dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, coeff in items:
                if coeff:
                    clean[exp] = clean.get(exp, 0) + coeff
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_q_coefficients(cls, coeffs: Iterable[int]) -> "LaurentPoly":
        """Build sum_k coeffs[k] q^k."""
        return cls({2 * k: c for k, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, value: Scalar) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def terms(self) -> List[Tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = out.get(exp, 0) + coeff
            if total:
                out[exp] = total
            else:
                out.pop(exp, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return _wrap({exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return _wrap({exp: coeff * other for exp, coeff in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            (oexp, ocoeff), = other._terms.items()
            return _wrap({exp + oexp: coeff * ocoeff for exp, coeff in self._terms.items()})
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = e1 + e2
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int) or exponent < 0:
            if isinstance(exponent, int) and self.is_monomial():
                (exp, coeff), = self._terms.items()
                if abs(coeff) == 1:
                    return LaurentPoly({exp * exponent: coeff ** (-exponent)})
            raise ValueError("only non-negative powers (or powers of unit monomials) are defined")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if not k:
            return self
        return _wrap({exp + k: coeff for exp, coeff in self._terms.items()})

    # ------------------------------------------------------------------
    # Involutions and specialisations
    # ------------------------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The ring involution v -> v^-1."""
        return _wrap({-exp: coeff for exp, coeff in self._terms.items()})

    def specialize_one(self) -> int:
        """Value at v = 1."""
        return sum(self._terms.values())

    def evaluate_mod(self, v: int, prime: int) -> int:
        """Value at v (a unit mod prime) reduced mod prime."""
        total = 0
        for exp, coeff in self._terms.items():
            total += coeff * pow(v, exp, prime)
        return total % prime

    # ------------------------------------------------------------------
    # Equality, hashing, rendering
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (exp, coeff) in enumerate(self.terms()):
            sign = "-" if coeff < 0 else "+"
            body = f"{abs(coeff)}*v^{exp}"
            if i == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms()!r})"

    def to_json(self) -> List[List[int]]:
        return [[exp, coeff] for exp, coeff in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls([(int(exp), int(coeff)) for exp, coeff in data])


def _wrap(terms: Dict[int, int]) -> LaurentPoly:
    """Build a LaurentPoly from a dict already known to hold no zero coefficients."""
    poly = LaurentPoly.__new__(LaurentPoly)
    poly._terms = terms
    poly._hash = None
    return poly


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)
Q = LaurentPoly.monomial(2)
Q_INV = LaurentPoly.monomial(-2)


def v_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)


def q_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(2 * k)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def specialize_one(a: LaurentPoly) -> int:
    return a.specialize_one()
