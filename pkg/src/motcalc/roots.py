"""Finite root systems and minimal parabolic coset representatives.

Simple roots are numbered 1..rank following Bourbaki:

    A_n  1 - 2 - ... - n
    B_n  1 - 2 - ... - (n-1) => n        (alpha_n short)
    C_n  1 - 2 - ... - (n-1) <= n        (alpha_n long)
    D_n  1 - 2 - ... - (n-2) - (n-1)
                            \\- n
    E_n  1 - 3 - 4 - 5 - ... - n,  2 attached to 4
    F_4  1 - 2 => 3 - 4                  (alpha_1, alpha_2 long)
    G_2  1 <= 2                          (alpha_1 short)

``cartan[i][j] = <alpha_i^vee, alpha_j>``.  A parabolic is given by the set of
simple roots generating its Levi factor: the empty set is a Borel, the full
set is the whole group.

W/W_P is enumerated as the W-orbit of ``rho_P = sum of omega_i, i not in the
Levi``, by breadth-first search in exact integer fundamental-weight
coordinates.  The BFS depth of an orbit point is the length of its minimal
coset representative.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .errors import DomainError, InvariantViolation, OrbitCapExceeded
from .tate import TateMotive

DEFAULT_MAX_ORBIT = 10_000_000
MAX_ORBIT_ENV = "MOTCALC_MAX_ORBIT"

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def validate_type(type_letter, rank):
    if not isinstance(type_letter, str) or len(type_letter) != 1:
        raise DomainError(f"type letter must be one of A-G, got {type_letter!r}")
    letter = type_letter.upper()
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise DomainError(f"rank must be an integer, got {rank!r}")
    if letter in _MIN_RANK:
        if rank < _MIN_RANK[letter]:
            raise DomainError(f"{letter}_n requires n >= {_MIN_RANK[letter]}, got {letter}_{rank}")
    elif letter in _EXCEPTIONAL:
        if rank not in _EXCEPTIONAL[letter]:
            allowed = ", ".join(f"{letter}_{k}" for k in _EXCEPTIONAL[letter])
            raise DomainError(f"no finite type {letter}_{rank}; valid: {allowed}")
    else:
        raise DomainError(f"type letter must be one of A-G, got {type_letter!r}")
    return letter, rank


def classical_positive_root_count(letter, rank):
    if letter == "A":
        return rank * (rank + 1) // 2
    if letter in "BC":
        return rank * rank
    if letter == "D":
        return rank * (rank - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[letter, rank]


def cartan_matrix(type_letter, rank):
    letter, n = validate_type(type_letter, rank)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, ij=-1, ji=-1):
        # 1-based node labels
        a[i - 1][j - 1] = ij
        a[j - 1][i - 1] = ji

    if letter in "ABCD":
        chain = n if letter in "ABC" else n - 1
        for i in range(1, chain):
            bond(i, i + 1)
        if letter == "B":
            bond(n - 1, n, -1, -2)
        elif letter == "C":
            bond(n - 1, n, -2, -1)
        elif letter == "D":
            bond(n - 2, n)
    elif letter == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif letter == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    else:
        bond(1, 2, -3, -1)
    return tuple(tuple(row) for row in a)


def positive_roots(cartan) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, ordered by height.

    Uses root strings: for a root beta and simple alpha_i, with p the largest
    k such that beta - k alpha_i is a root, beta + alpha_i is a root iff
    p - <beta, alpha_i^vee> > 0.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    ordered = list(simple)
    layer = simple
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in found:
                        break
                    p += 1
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort()
        ordered.extend(nxt)
        layer = nxt
    return ordered


def _order_from_heights(roots):
    # |W| = prod over positive roots of (ht + 1) / ht
    acc = Fraction(1)
    for beta in roots:
        h = sum(beta)
        acc *= Fraction(h + 1, h)
    if acc.denominator != 1:
        raise InvariantViolation(f"height product {acc} is not an integer")
    return acc.numerator


def _submatrix(cartan, idx):
    return tuple(tuple(cartan[i][j] for j in idx) for i in idx)


@dataclass(frozen=True)
class RootSystem:
    type_letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    num_positive_roots: int

    @cached_property
    def positive_roots(self):
        return positive_roots(self.cartan)

    @cached_property
    def alpha_weights(self):
        """Row j: simple root alpha_j in fundamental-weight coordinates."""
        return np.array(self.cartan, dtype=np.int64).T.copy()

    @property
    def name(self):
        return f"{self.type_letter}{self.rank}"

    def __str__(self):
        return f"{self.type_letter}_{self.rank}"


def build_root_system(type_letter, rank) -> RootSystem:
    letter, n = validate_type(type_letter, rank)
    cartan = cartan_matrix(letter, n)
    count = len(positive_roots(cartan))
    expected = classical_positive_root_count(letter, n)
    if count != expected:
        raise InvariantViolation(f"{letter}_{n}: generated {count} positive roots, expected {expected}")
    return RootSystem(letter, n, cartan, count)


@dataclass(frozen=True)
class ParabolicSpec:
    levi_simple_roots: frozenset = frozenset()

    def __init__(self, levi_simple_roots: Iterable[int] = ()):
        levi = frozenset(levi_simple_roots)
        for i in levi:
            if isinstance(i, bool) or not isinstance(i, int):
                raise DomainError(f"simple root index must be an integer, got {i!r}")
        object.__setattr__(self, "levi_simple_roots", levi)

    def validate(self, rs: RootSystem) -> "ParabolicSpec":
        bad = sorted(i for i in self.levi_simple_roots if not 1 <= i <= rs.rank)
        if bad:
            raise DomainError(f"simple root indices {bad} out of range 1..{rs.rank} for {rs}")
        return self

    def crossed(self, rs):
        """0-based indices of simple roots not in the Levi."""
        return [i for i in range(rs.rank) if i + 1 not in self.levi_simple_roots]

    @classmethod
    def maximal(cls, rs, node):
        """Maximal parabolic: every simple root except ``node`` in the Levi."""
        return cls(i for i in range(1, rs.rank + 1) if i != node)

    @classmethod
    def full(cls, rs):
        return cls(range(1, rs.rank + 1))


@dataclass(frozen=True)
class CosetLengthProfile:
    lengths: dict = field(hash=False)
    total: int
    dimension: int

    def counts(self) -> list[int]:
        return [self.lengths.get(k, 0) for k in range(self.dimension + 1)]

    def is_palindromic(self):
        c = self.counts()
        return c == c[::-1]


def resolve_max_orbit(max_orbit=None) -> int:
    """Explicit argument, then ``MOTCALC_MAX_ORBIT``, then the default."""
    if max_orbit is None:
        env = os.environ.get(MAX_ORBIT_ENV, "").strip()
        if env:
            try:
                max_orbit = int(env.replace("_", ""))
            except ValueError:
                raise DomainError(f"{MAX_ORBIT_ENV} must be an integer, got {env!r}") from None
        else:
            max_orbit = DEFAULT_MAX_ORBIT
    if max_orbit < 1:
        raise DomainError(f"orbit cap must be positive, got {max_orbit}")
    return max_orbit


def levi_positive_roots(rs: RootSystem, p: ParabolicSpec):
    idx = sorted(i - 1 for i in p.validate(rs).levi_simple_roots)
    return positive_roots(_submatrix(rs.cartan, idx)) if idx else []


def parabolic_dimension(rs: RootSystem, p: ParabolicSpec) -> int:
    """dim G/P = |positive roots| - |positive roots of the Levi|."""
    return rs.num_positive_roots - len(levi_positive_roots(rs, p))


def estimated_orbit_size(rs: RootSystem, p: ParabolicSpec) -> int:
    """|W| / |W_P| from root heights, without enumerating anything."""
    return _order_from_heights(rs.positive_roots) // _order_from_heights(levi_positive_roots(rs, p))


def orbit_levels(rs: RootSystem, p: ParabolicSpec, max_orbit=None, use_numba=None) -> Iterator[np.ndarray]:
    """Yield the orbit of rho_P one BFS level at a time.

    Level k holds the weights w(rho_P) with l(w) = k for w in W^P, as an
    ``(count, rank)`` int64 array.
    """
    p.validate(rs)
    cap = resolve_max_orbit(max_orbit)
    estimate = estimated_orbit_size(rs, p)
    if estimate > cap:
        raise OrbitCapExceeded(estimate, cap)
    rho = np.zeros((1, rs.rank), dtype=np.int64)
    rho[0, p.crossed(rs)] = 1
    alpha = rs.alpha_weights
    level = rho
    seen = 0
    while len(level):
        seen += len(level)
        if seen > cap:
            raise OrbitCapExceeded(seen, cap)
        yield level
        level = _kernels.next_level(level, alpha, use_numba)


def coset_lengths(rs: RootSystem, p: ParabolicSpec, max_orbit=None, use_numba=None) -> CosetLengthProfile:
    lengths = {}
    for k, level in enumerate(orbit_levels(rs, p, max_orbit, use_numba)):
        lengths[k] = len(level)
    total = sum(lengths.values())
    dim = parabolic_dimension(rs, p)
    if max(lengths) != dim:
        raise InvariantViolation(f"{rs} levi={sorted(p.levi_simple_roots)}: longest length {max(lengths)} != dim {dim}")
    return CosetLengthProfile(lengths, total, dim)


def weyl_order(rs: RootSystem, max_orbit=None, use_numba=None) -> int:
    return coset_lengths(rs, ParabolicSpec(), max_orbit, use_numba).total


def gp_motive(rs: RootSystem, p: ParabolicSpec, max_orbit=None, use_numba=None) -> TateMotive:
    return TateMotive(coset_lengths(rs, p, max_orbit, use_numba).lengths)
