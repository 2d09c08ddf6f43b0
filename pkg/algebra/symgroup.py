"""
Symmetric groups S_m acting on the right of {1, ..., m}.

A permutation is stored in one-line form: images[i-1] is i.w. Products
are right actions, so i.(a*b) = (i.a).b. Right multiplication by s_i
swaps the values i and i+1; left multiplication by s_i swaps the
positions i and i+1.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from algebra.errors import PreconditionError, RankMismatchError

logger = logging.getLogger(__name__)


class Permutation:
    """A bijection of {1..m}, hashable and immutable."""

    __slots__ = ("images", "_hash", "_length", "_positions")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PreconditionError(f"not a permutation of 1..{len(images)}: {images}")
        self.images: Tuple[int, ...] = images
        self._hash = hash(images)
        self._length = None
        self._positions = None

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        """Build from images already known to form a permutation."""
        w = cls.__new__(cls)
        w.images = images
        w._hash = hash(images)
        w._length = None
        w._positions = None
        return w

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @classmethod
    def generator(cls, m: int, i: int) -> "Permutation":
        """The simple transposition s_i = (i, i+1) in S_m."""
        if not 1 <= i < m:
            raise PreconditionError(f"s_{i} is not a simple reflection of S_{m}")
        images = list(range(1, m + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @classmethod
    def from_word(cls, m: int, word: Iterable[int]) -> "Permutation":
        """The product s_{w1} s_{w2} ... in S_m."""
        w = cls.identity(m)
        for i in word:
            w = w.times_generator(i)
        return w

    # ------------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def position(self, value: int) -> int:
        """The point mapped to value (i.e. value . w^-1)."""
        if self._positions is None:
            pos = [0] * len(self.images)
            for idx, val in enumerate(self.images):
                pos[val - 1] = idx + 1
            self._positions = tuple(pos)
        return self._positions[value - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        self.position(1)
        return Permutation._trusted(self._positions)

    def length(self) -> int:
        """Number of inversions."""
        if self._length is None:
            imgs = self.images
            self._length = sum(
                1
                for a in range(len(imgs))
                for b in range(a + 1, len(imgs))
                if imgs[a] > imgs[b]
            )
        return self._length

    def is_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w): the value i+1 appears before the value i."""
        return self.position(i + 1) < self.position(i)

    def is_left_descent(self, i: int) -> bool:
        """l(s_i w) < l(w): a descent at position i."""
        return self.images[i - 1] > self.images[i]

    def right_descents(self) -> FrozenSet[int]:
        return frozenset(i for i in range(1, self.rank) if self.is_right_descent(i))

    def left_descents(self) -> FrozenSet[int]:
        return frozenset(i for i in range(1, self.rank) if self.is_left_descent(i))

    def times_generator(self, i: int) -> "Permutation":
        """w s_i: swap the values i and i+1."""
        swap = {i: i + 1, i + 1: i}
        return Permutation._trusted(tuple(swap.get(x, x) for x in self.images))

    def generator_times(self, i: int) -> "Permutation":
        """s_i w: swap the entries in positions i and i+1."""
        imgs = list(self.images)
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return Permutation._trusted(tuple(imgs))

    def reduced_word(self) -> Tuple[int, ...]:
        """A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}."""
        word: List[int] = []
        w = self
        while True:
            descents = w.right_descents()
            if not descents:
                break
            i = min(descents)
            word.append(i)
            w = w.times_generator(i)
        return tuple(reversed(word))

    def embed(self, m: int) -> "Permutation":
        """The image of w under S_k -> S_m fixing k+1..m."""
        if m < self.rank:
            raise RankMismatchError(f"cannot embed S_{self.rank} into S_{m}")
        return Permutation(self.images + tuple(range(self.rank + 1, m + 1)))

    def restrict(self, m: int) -> "Permutation":
        """Inverse of embed; w must fix m+1..rank."""
        if any(self.images[k] != k + 1 for k in range(m, self.rank)):
            raise PreconditionError(f"{self} does not lie in S_{m}")
        return Permutation(self.images[:m])

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return (len(self.images), self.images) < (len(other.images), other.images)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def to_json(self) -> List[int]:
        return list(self.images)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a*b with i.(a*b) = (i.a).b."""
    if a.rank != b.rank:
        raise RankMismatchError(f"S_{a.rank} and S_{b.rank} elements cannot be composed")
    bi = b.images
    return Permutation._trusted(tuple(bi[x - 1] for x in a.images))


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


def length(w: Permutation) -> int:
    return w.length()


def right_descents(w: Permutation) -> FrozenSet[int]:
    return w.right_descents()


def left_descents(w: Permutation) -> FrozenSet[int]:
    return w.left_descents()


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """Bruhat order by the tableau criterion on sorted prefixes."""
    if x.rank != y.rank:
        raise RankMismatchError(f"S_{x.rank} and S_{y.rank} elements are incomparable")
    if x.length() > y.length():
        return False
    if x == y:
        return True
    xs, ys = x.images, y.images
    for k in range(1, x.rank):
        a = sorted(xs[:k])
        b = sorted(ys[:k])
        if any(p > r for p, r in zip(a, b)):
            return False
    return True


@lru_cache(maxsize=None)
def all_permutations(m: int) -> Tuple[Permutation, ...]:
    """All of S_m in lexicographic order of one-line forms."""
    return tuple(Permutation(p) for p in itertools.permutations(range(1, m + 1)))


def by_length(m: int) -> List[Permutation]:
    """S_m sorted by length, ties broken lexicographically."""
    return sorted(all_permutations(m), key=lambda w: (w.length(), w.images))


def longest_element(m: int) -> Permutation:
    return Permutation(range(m, 0, -1))


# ----------------------------------------------------------------------
# Parabolic subgroups and distinguished coset representatives
# ----------------------------------------------------------------------

def parabolic_blocks(m: int, J: Iterable[int]) -> Tuple[Tuple[int, int], ...]:
    """Maximal position intervals [a, b] whose generators s_a .. s_{b-1} lie in J."""
    J = set(J)
    blocks = []
    start = 1
    for i in range(1, m + 1):
        if i == m or i not in J:
            blocks.append((start, i))
            start = i + 1
    return tuple(blocks)


@dataclass(frozen=True)
class ParabolicData:
    """W_J, its longest element w_J and the right-coset representatives X_J."""

    m: int
    J: FrozenSet[int]
    subgroup: Tuple[Permutation, ...]
    longest: Permutation
    coset_reps: Tuple[Permutation, ...]

    def is_coset_rep(self, x: Permutation) -> bool:
        return not (x.left_descents() & self.J)


@lru_cache(maxsize=None)
def parabolic(m: int, J: FrozenSet[int]) -> ParabolicData:
    """Parabolic data for W_J <= S_m; the coset reps x satisfy l(ux) = l(u) + l(x)."""
    J = frozenset(J)
    if any(not 1 <= i < m for i in J):
        raise PreconditionError(f"J={sorted(J)} is not a subset of the generators of S_{m}")
    blocks = parabolic_blocks(m, J)

    def in_subgroup(w: Permutation) -> bool:
        return all(a <= w(i) <= b for a, b in blocks for i in range(a, b + 1))

    subgroup = tuple(w for w in all_permutations(m) if in_subgroup(w))
    longest_images: List[int] = []
    for a, b in blocks:
        longest_images.extend(range(b, a - 1, -1))
    longest = Permutation(longest_images)
    reps = tuple(w for w in all_permutations(m) if not (w.left_descents() & J))
    logger.debug(f"parabolic S_{m} J={sorted(J)}: |W_J|={len(subgroup)}, |X_J|={len(reps)}")
    return ParabolicData(m=m, J=J, subgroup=subgroup, longest=longest, coset_reps=reps)


def factor_through_parabolic(w: Permutation, J: Iterable[int]) -> Tuple[Permutation, Permutation]:
    """Write w = u x with u in W_J and x in X_J."""
    blocks = parabolic_blocks(w.rank, J)
    imgs = list(w.images)
    for a, b in blocks:
        imgs[a - 1:b] = sorted(imgs[a - 1:b])
    x = Permutation(imgs)
    u = compose(w, x.inverse())
    return u, x


def j_of_composition(parts: Sequence[int]) -> FrozenSet[int]:
    """J(mu) = S minus {s_{mu_1}, s_{mu_1+mu_2}, ...}."""
    m = sum(parts)
    cuts = set(itertools.accumulate(parts))
    return frozenset(i for i in range(1, m) if i not in cuts)


def prefixes(e: Permutation) -> FrozenSet[Permutation]:
    """All d with e = d (d^-1 e) and l(e) = l(d) + l(d^-1 e)."""
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in w.right_descents():
                d = w.times_generator(i)
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    return frozenset(seen)


def x_cycle(n: int, i: int) -> Permutation:
    """x_i = s_n s_{n-1} ... s_i in S_{n+1}, the cycle i -> i+1 -> ... -> n+1 -> i."""
    if not 1 <= i <= n + 1:
        raise PreconditionError(f"x_{i} undefined for S_{n + 1}")
    return Permutation.from_word(n + 1, range(n, i - 1, -1))


def coset_reps_prime(n: int) -> Tuple[Permutation, ...]:
    """X' = {x_1, ..., x_{n+1}}: distinguished reps of S_n \\ S_{n+1}."""
    return tuple(x_cycle(n, i) for i in range(1, n + 2))


def coset_reps_star(n: int) -> Tuple[Permutation, ...]:
    """X* = {x^-1 : x in X'}: distinguished reps of S_{n+1} / S_n."""
    return tuple(x.inverse() for x in coset_reps_prime(n))


def split_left_coset(w: Permutation) -> Tuple[int, Permutation, Permutation]:
    """Write w in S_{n+1} as d u with d = x_i^-1 in X* and u in S_n (embedded).

    Returns (i, d, u). The index i is the position of n+1 in w.
    """
    n = w.rank - 1
    i = w.position(n + 1)
    d = x_cycle(n, i).inverse()
    u = compose(x_cycle(n, i), w)
    return i, d, u


def generators_of(m: int) -> Tuple[int, ...]:
    return tuple(range(1, m))


def coset_rep_x_star(n: int) -> Tuple[Tuple[Permutation, ...], Tuple[Permutation, ...]]:
    """(X', X*) for S_n <= S_{n+1}, both indexed by i = 1..n+1."""
    return coset_reps_prime(n), coset_reps_star(n)
