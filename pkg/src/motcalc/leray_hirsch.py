"""Motives and Chow ranks of iterated fibre-bundle towers.

For a tower ``X = X_k -> ... -> X_1 -> Y`` whose fibres are pure Tate with
Poincare duality, the motive of ``X`` is the tensor product of the base motive
with every fibre motive, and Chow ranks (also higher Chow ranks, one q-slice at
a time) are the convolution of the base ranks with each fibre's multiplicity
vector.  Only free ranks are tracked: torsion in the base is not modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .cellular import fibre_motive
from .errors import DomainError, UnsupportedOperation
from .tate import TateMotive, tensor, unit

__all__ = [
    "Point",
    "TateBase",
    "FreeChowBase",
    "TowerSpec",
    "RankTable",
    "CKComponent",
    "base_chow_ranks",
    "convolve",
    "tower_motive",
    "tower_chow_ranks",
    "higher_chow_table",
    "ck_assemble",
    "point_components",
]


def _nonneg(value, what):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise DomainError(f"{what} must be a nonnegative integer, got {value!r}")
    return value


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class TateBase:
    motive: TateMotive


@dataclass(frozen=True)
class FreeChowBase:
    """Base known only through the free ranks of CH^p, p = 0..dim."""

    ranks: tuple
    dim: int

    def __post_init__(self):
        ranks = tuple(_nonneg(r, "Chow rank") for r in self.ranks)
        _nonneg(self.dim, "base dimension")
        if len(ranks) != self.dim + 1:
            raise DomainError(f"base of dimension {self.dim} needs {self.dim + 1} Chow ranks, got {len(ranks)}")
        object.__setattr__(self, "ranks", ranks)


@dataclass(frozen=True)
class TowerSpec:
    base: Point | TateBase | FreeChowBase = Point()
    fibres: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "fibres", tuple(self.fibres))


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def base_chow_ranks(base) -> list[int]:
    if isinstance(base, Point):
        return [1]
    if isinstance(base, TateBase):
        return base.motive.coefficients()
    if isinstance(base, FreeChowBase):
        return list(base.ranks)
    raise DomainError(f"not a base description: {base!r}")


def tower_motive(t: TowerSpec, max_orbit=None) -> TateMotive:
    if isinstance(t.base, FreeChowBase):
        raise UnsupportedOperation(
            "a base given only by Chow ranks has no motive here; use tower_chow_ranks instead"
        )
    m = unit() if isinstance(t.base, Point) else t.base.motive
    for f in t.fibres:
        m = tensor(m, fibre_motive(f, max_orbit))
    return m


def tower_chow_ranks(t: TowerSpec, max_orbit=None) -> list[int]:
    """Ranks of CH^p of the total space, indexed by p."""
    ranks = base_chow_ranks(t.base)
    for f in t.fibres:
        ranks = convolve(ranks, fibre_motive(f, max_orbit).coefficients())
    return ranks


class RankTable:
    """Immutable bigraded table (p, q) -> rank of CH^p(-, q); zeros are dropped."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int] = None):
        acc = {}
        for key, r in (entries or {}).items():
            try:
                p, q = key
            except (TypeError, ValueError):
                raise DomainError(f"rank table keys must be (p, q) pairs, got {key!r}") from None
            _nonneg(p, "p")
            _nonneg(q, "q")
            _nonneg(r, f"rank at (p={p}, q={q})")
            if r:
                acc[p, q] = r
        object.__setattr__(self, "_entries", tuple(sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0]))))

    def __setattr__(self, name, value):
        raise AttributeError("RankTable is immutable")

    @classmethod
    def from_chow_ranks(cls, ranks, q=0):
        return cls({(p, q): r for p, r in enumerate(ranks)})

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def items(self):
        """Entries row-major: ascending q, then ascending p."""
        return self._entries

    def __getitem__(self, key):
        return self.entries.get(tuple(key), 0)

    def q_values(self):
        return sorted({q for (_, q), _ in self._entries})

    def slice(self, q) -> list[int]:
        """Dense ranks in p at fixed q (trailing zeros trimmed)."""
        row = {p: r for (p, qq), r in self._entries if qq == q}
        if not row:
            return []
        return [row.get(p, 0) for p in range(max(row) + 1)]

    def __eq__(self, other):
        if not isinstance(other, RankTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return "RankTable({%s})" % ", ".join(f"({p},{q}): {r}" for (p, q), r in self._entries)


def higher_chow_table(base_table: RankTable, fibres, max_orbit=None) -> RankTable:
    """CH^p(X, q) = sum_i CH^(p-i)(Y, q) (x) CH_i(F), applied fibre by fibre."""
    table = base_table
    for f in fibres:
        fvec = fibre_motive(f, max_orbit).coefficients()
        out = {}
        for (p, q), r in table.items():
            for i, m in enumerate(fvec):
                if m:
                    out[p + i, q] = out.get((p + i, q), 0) + r * m
        table = RankTable(out)
    return table


@dataclass(frozen=True)
class CKComponent:
    label: str
    weight: int
    chow_ranks: tuple

    def __post_init__(self):
        object.__setattr__(self, "chow_ranks", tuple(self.chow_ranks))


def point_components():
    return [CKComponent("h0", 0, (1,))]


def ck_assemble(base_components, f, max_orbit=None) -> list[CKComponent]:
    """Tensor each Chow-Kunneth component of the base with the fibre's Tate summands.

    A summand ``L^n`` of multiplicity ``m`` yields ``m`` components per base
    component, each of weight ``w + 2n`` with Chow ranks shifted up by ``n``.
    Repeated summands are labelled ``label⊗L^n[k]``, k = 1..m.
    """
    out = []
    for comp in base_components:
        for n, m in fibre_motive(f, max_orbit).terms():
            ranks = (0,) * n + tuple(comp.chow_ranks)
            base_label = f"{comp.label}⊗L^{n}"
            for k in range(1, m + 1):
                label = base_label if m == 1 else f"{base_label}[{k}]"
                out.append(CKComponent(label, comp.weight + 2 * n, ranks))
    out.sort(key=lambda c: (c.weight, c.label))
    return out
