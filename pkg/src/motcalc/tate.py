"""Pure Tate motives as graded multiplicity vectors.

A pure Tate motive ``⊕_n 1(-n)^{m_n}`` is determined by its multiplicities,
so it is stored as a sparse map ``n -> m_n`` and behaves like the polynomial
``Σ m_n L^n`` in the Lefschetz motive ``L = 1(-1)``.  Direct sum adds
coefficients, tensor product multiplies polynomials.  Multiplicities are
Python ints, so nothing ever overflows.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import DomainError

__all__ = [
    "TateMotive",
    "unit",
    "zero",
    "lefschetz",
    "direct_sum",
    "tensor",
    "twist",
    "rank",
    "chow_rank",
    "is_self_dual",
    "render",
]


def _check_int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{what} must be an integer, got {value!r}")
    return value


class TateMotive:
    """Immutable finitely supported map twist -> multiplicity.

    Zero multiplicities are dropped on construction, so equality and hashing
    are structural on the normalized terms.
    """

    __slots__ = ("_terms",)

    def __init__(self, mult: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = mult.items() if isinstance(mult, Mapping) else mult
        acc: dict[int, int] = {}
        for n, m in items:
            _check_int(n, "twist index")
            _check_int(m, "multiplicity")
            if n < 0:
                raise DomainError(f"negative twist {n}: only effective motives are supported")
            if m < 0:
                raise DomainError(f"negative multiplicity {m} at twist {n}")
            if m:
                acc[n] = acc.get(n, 0) + m
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    def __setattr__(self, name, value):
        raise AttributeError("TateMotive is immutable")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> TateMotive:
        """Build from a dense vector whose k-th entry is the multiplicity of L^k."""
        return cls(enumerate(coeffs))

    @property
    def mult(self) -> dict[int, int]:
        return dict(self._terms)

    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coefficients(self) -> list[int]:
        """Dense multiplicity vector ``[m_0, ..., m_top]``; empty for the zero motive."""
        if not self._terms:
            return []
        out = [0] * (self._terms[-1][0] + 1)
        for n, m in self._terms:
            out[n] = m
        return out

    @property
    def top_twist(self) -> int:
        """Largest twist with nonzero multiplicity, -1 for the zero motive."""
        return self._terms[-1][0] if self._terms else -1

    def __getitem__(self, n: int) -> int:
        return dict(self._terms).get(n, 0)

    def __eq__(self, other):
        if not isinstance(other, TateMotive):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, TateMotive):
            return NotImplemented
        return direct_sum(self, other)

    def __mul__(self, other):
        if not isinstance(other, TateMotive):
            return NotImplemented
        return tensor(self, other)

    def __repr__(self):
        return "TateMotive({%s})" % ", ".join(f"{n}: {m}" for n, m in self._terms)

    def __str__(self):
        return render(self)


def unit() -> TateMotive:
    return TateMotive({0: 1})


def zero() -> TateMotive:
    return TateMotive()


def lefschetz() -> TateMotive:
    return TateMotive({1: 1})


def direct_sum(a: TateMotive, b: TateMotive) -> TateMotive:
    return TateMotive(a.terms() + b.terms())


def tensor(a: TateMotive, b: TateMotive) -> TateMotive:
    acc: dict[int, int] = {}
    for i, x in a.terms():
        for j, y in b.terms():
            acc[i + j] = acc.get(i + j, 0) + x * y
    return TateMotive(acc)


def twist(a: TateMotive, k: int) -> TateMotive:
    """Tensor with ``1(-k)``: shift every twist index up by ``k``."""
    _check_int(k, "twist amount")
    if k < 0:
        raise DomainError(f"twist amount must be nonnegative, got {k}")
    return TateMotive((n + k, m) for n, m in a.terms())


def rank(a: TateMotive) -> int:
    return sum(m for _, m in a.terms())


def chow_rank(a: TateMotive, p: int) -> int:
    return a[p]


def is_self_dual(a: TateMotive, d: int) -> bool:
    if a.top_twist > d:
        return False
    mult = a.mult
    return all(mult.get(n, 0) == mult.get(d - n, 0) for n in range(d + 1))


def render(a: TateMotive) -> str:
    """Polynomial rendering in ascending powers, e.g. ``1 + 2·L^2 + L^4``."""
    if not a:
        return "0"
    parts = []
    for n, m in a.terms():
        if n == 0:
            parts.append(str(m))
            continue
        power = "L" if n == 1 else f"L^{n}"
        parts.append(power if m == 1 else f"{m}·{power}")
    return " + ".join(parts)
