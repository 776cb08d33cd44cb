"""Fibre descriptions and their pure Tate motives.

Surface syntax (one fibre per string)::

    P n                         projective space P^n
    Gr d n                      Grassmannian of d-planes in k^n
    GP <letter> <rank> levi=1,3 homogeneous space G/P, Levi simple roots listed
    cells d1,d2,...             explicit cellular variety with those cell dims
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import roots
from .errors import DomainError, ParseError
from .tate import TateMotive, direct_sum, rank, twist, unit

__all__ = [
    "ProjectiveSpace",
    "Grassmannian",
    "Homogeneous",
    "ExplicitCellular",
    "fibre_motive",
    "fibre_dimension",
    "parse_fibre",
    "format_fibre",
]


def _pos_int(value, what):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{what} must be a positive integer, got {value!r}")
    return value


@dataclass(frozen=True)
class ProjectiveSpace:
    n: int

    def __post_init__(self):
        _pos_int(self.n, "projective space dimension")


@dataclass(frozen=True)
class Grassmannian:
    """Gr(d, n); d = 0 and d = n are allowed and describe a point."""

    d: int
    n: int

    def __post_init__(self):
        _pos_int(self.n, "Grassmannian ambient dimension")
        if isinstance(self.d, bool) or not isinstance(self.d, int) or not 0 <= self.d <= self.n:
            raise DomainError(f"Grassmannian needs 0 <= d <= n, got d={self.d!r}, n={self.n}")


@dataclass(frozen=True)
class Homogeneous:
    type_letter: str
    rank: int
    levi: frozenset = frozenset()

    def __post_init__(self):
        letter, _ = roots.validate_type(self.type_letter, self.rank)
        object.__setattr__(self, "type_letter", letter)
        p = roots.ParabolicSpec(self.levi)
        object.__setattr__(self, "levi", p.levi_simple_roots)
        p.validate(self.root_system())

    def root_system(self):
        return _root_system(self.type_letter, self.rank)

    def parabolic(self):
        return roots.ParabolicSpec(self.levi)


@dataclass(frozen=True)
class ExplicitCellular:
    cells: tuple

    def __post_init__(self):
        cells = tuple(self.cells)
        if not cells:
            raise DomainError("explicit cellular fibre needs at least one cell")
        for c in cells:
            if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                raise DomainError(f"cell dimensions must be nonnegative integers, got {c!r}")
        object.__setattr__(self, "cells", cells)


@lru_cache(maxsize=None)
def _root_system(letter, rank):
    return roots.build_root_system(letter, rank)


@lru_cache(maxsize=None)
def grassmannian_motive(d: int, n: int) -> TateMotive:
    """Motive of Gr(d, n) from [n, d] = L^(n-d) [n-1, d-1] + [n-1, d]."""
    if d < 0 or d > n:
        raise DomainError(f"Grassmannian needs 0 <= d <= n, got d={d}, n={n}")
    if d == 0 or d == n:
        return unit()
    return direct_sum(twist(grassmannian_motive(d - 1, n - 1), n - d), grassmannian_motive(d, n - 1))


def fibre_motive(f, max_orbit=None) -> TateMotive:
    if isinstance(f, ProjectiveSpace):
        return TateMotive({i: 1 for i in range(f.n + 1)})
    if isinstance(f, Grassmannian):
        return grassmannian_motive(f.d, f.n)
    if isinstance(f, Homogeneous):
        return roots.gp_motive(f.root_system(), f.parabolic(), max_orbit)
    if isinstance(f, ExplicitCellular):
        counts = {}
        for c in f.cells:
            counts[c] = counts.get(c, 0) + 1
        return TateMotive(counts)
    raise DomainError(f"not a fibre description: {f!r}")


def fibre_dimension(f) -> int:
    if isinstance(f, ProjectiveSpace):
        return f.n
    if isinstance(f, Grassmannian):
        return f.d * (f.n - f.d)
    if isinstance(f, Homogeneous):
        return roots.parabolic_dimension(f.root_system(), f.parabolic())
    if isinstance(f, ExplicitCellular):
        return max(f.cells)
    raise DomainError(f"not a fibre description: {f!r}")


def cell_count(f, max_orbit=None) -> int:
    return rank(fibre_motive(f, max_orbit))


_INT = re.compile(r"\d+")


def parse_fibre(text: str):
    """Parse one fibre descriptor. Raises ParseError with a 1-based column."""

    tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", text)]
    if not tokens:
        raise ParseError("empty fibre descriptor", 1, 1)
    col, head = tokens[0]
    kind = head.lower()

    def integer(i, what):
        if i >= len(tokens):
            raise ParseError(f"missing {what}", 1, len(text) + 1)
        c, tok = tokens[i]
        if not _INT.fullmatch(tok):
            raise ParseError(f"expected {what}, got {tok!r}", 1, c)
        return int(tok)

    def no_more(i):
        if len(tokens) > i:
            c, tok = tokens[i]
            raise ParseError(f"unexpected token {tok!r}", 1, c)

    try:
        if kind == "p":
            n = integer(1, "projective dimension")
            no_more(2)
            return ProjectiveSpace(n)
        if kind == "gr":
            d = integer(1, "subspace dimension d")
            n = integer(2, "ambient dimension n")
            no_more(3)
            return Grassmannian(d, n)
        if kind == "gp":
            if len(tokens) < 2:
                raise ParseError("missing type letter", 1, len(text) + 1)
            letter = tokens[1][1]
            r = integer(2, "rank")
            levi = ()
            if len(tokens) > 3:
                c, tok = tokens[3]
                if not tok.lower().startswith("levi="):
                    raise ParseError(f"expected levi=<list>, got {tok!r}", 1, c)
                levi = _int_list(tok[5:], c + 5, allow_empty=True)
                no_more(4)
            return Homogeneous(letter, r, frozenset(levi))
        if kind == "cells":
            if len(tokens) < 2:
                raise ParseError("missing cell list", 1, len(text) + 1)
            c, tok = tokens[1]
            cells = _int_list(tok, c, allow_empty=False)
            no_more(2)
            return ExplicitCellular(tuple(cells))
    except DomainError as exc:
        raise ParseError(str(exc), 1, col) from None
    raise ParseError(f"unknown fibre kind {head!r} (expected P, Gr, GP or cells)", 1, col)


def _int_list(tok, col, allow_empty):
    if tok == "":
        if allow_empty:
            return []
        raise ParseError("empty list", 1, col)
    out = []
    offset = 0
    for part in tok.split(","):
        if not _INT.fullmatch(part):
            raise ParseError(f"expected a nonnegative integer, got {part!r}", 1, col + offset)
        out.append(int(part))
        offset += len(part) + 1
    return out


def format_fibre(f) -> str:
    """Canonical surface syntax; ``parse_fibre(format_fibre(f)) == f``."""
    if isinstance(f, ProjectiveSpace):
        return f"P {f.n}"
    if isinstance(f, Grassmannian):
        return f"Gr {f.d} {f.n}"
    if isinstance(f, Homogeneous):
        return f"GP {f.type_letter} {f.rank} levi={','.join(map(str, sorted(f.levi)))}"
    if isinstance(f, ExplicitCellular):
        return "cells " + ",".join(map(str, f.cells))
    raise DomainError(f"not a fibre description: {f!r}")
