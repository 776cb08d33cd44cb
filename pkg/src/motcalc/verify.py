"""Brute-force oracles and cross-check suites.

Every oracle here is computed without touching the code path it is compared
against: partitions are listed exhaustively, Gaussian binomials come from
their own recurrence, permutation lengths from counting inversions, product
cells from pairwise sums, Weyl group orders from closed forms.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from . import roots
from .cellular import ExplicitCellular, Grassmannian, ProjectiveSpace, fibre_dimension, fibre_motive
from .errors import DomainError
from .leray_hirsch import Point, TowerSpec, tower_chow_ranks, tower_motive
from .tate import TateMotive, is_self_dual, rank, tensor, unit

DEFAULT_SEED = 20240607
SUITES = ("grassmann", "duality", "flags", "kunneth", "weyl-orders", "tower")
MAX_PERMUTATION_N = 9


@dataclass(frozen=True)
class CellModel:
    cells: tuple

    def __post_init__(self):
        cells = tuple(self.cells)
        if not cells:
            raise DomainError("a cell model needs at least one cell")
        if any(isinstance(c, bool) or not isinstance(c, int) or c < 0 for c in cells):
            raise DomainError(f"cell dimensions must be nonnegative integers: {cells!r}")
        object.__setattr__(self, "cells", cells)


def _counts(values) -> TateMotive:
    acc = {}
    for v in values:
        acc[v] = acc.get(v, 0) + 1
    return TateMotive(acc)


def partitions_in_box(d: int, w: int) -> TateMotive:
    """Weight profile of all partitions fitting in a d x w box, listed one by one."""
    if d < 0 or w < 0:
        raise DomainError(f"box sides must be nonnegative, got {d} x {w}")
    # a multiset of d parts from 0..w is exactly one partition with <= d parts <= w
    return _counts(sum(parts) for parts in itertools.combinations_with_replacement(range(w + 1), d))


def gaussian_binomial(n: int, d: int) -> TateMotive:
    if d < 0 or n < 0 or d > n:
        raise DomainError(f"gaussian binomial needs 0 <= d <= n, got n={n}, d={d}")
    return TateMotive.from_coefficients(_qbinom(n, d))


@lru_cache(maxsize=None)
def _qbinom(n, d):
    # G(n, d) = G(n-1, d-1) + q^d G(n-1, d)
    if d == 0 or d == n:
        return (1,)
    left = _qbinom(n - 1, d - 1)
    right = _qbinom(n - 1, d)
    out = [0] * max(len(left), len(right) + d)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + d] += c
    return tuple(out)


def permutation_length_profile(n: int) -> TateMotive:
    if n < 1 or n > MAX_PERMUTATION_N:
        raise DomainError(f"permutation profile is exhaustive and needs 1 <= n <= {MAX_PERMUTATION_N}, got {n}")
    return _counts(
        sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        for perm in itertools.permutations(range(n))
    )


def kunneth_cells(a: CellModel, b: CellModel) -> TateMotive:
    return _counts(x + y for x in a.cells for y in b.cells)


def classical_weyl_order(letter: str, rank: int) -> int:
    letter, n = roots.validate_type(letter, rank)
    if letter == "A":
        return factorial(n + 1)
    if letter in "BC":
        return 2**n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[letter, n]


def all_types(max_rank):
    """Every valid (letter, rank) with rank <= max_rank, in a fixed order."""
    out = []
    for letter in "ABCDEFG":
        for r in range(1, max_rank + 1):
            try:
                roots.validate_type(letter, r)
            except DomainError:
                continue
            out.append((letter, r))
    return out


@dataclass(frozen=True)
class CaseResult:
    suite: str
    case_id: str
    passed: bool
    detail: str = ""

    def line(self):
        return f"{self.suite} {self.case_id} {'PASS' if self.passed else 'FAIL'} {self.detail}".rstrip()


@dataclass
class Report:
    suite: str
    bound: int
    seed: int
    cases: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    def failures(self):
        return [c for c in self.cases if not c.passed]

    def lines(self):
        return [c.line() for c in self.cases]

    def summary(self):
        fails = self.failures()
        return {
            "suite": self.suite,
            "bound": self.bound,
            "seed": self.seed,
            "cases": len(self.cases),
            "passed": len(self.cases) - len(fails),
            "failed": len(fails),
            "status": "PASS" if not fails else "FAIL",
            "skipped": list(self.skipped),
            "failures": [{"case": c.case_id, "detail": c.detail} for c in fails],
        }

    def render(self):
        return "\n".join(self.lines() + [json.dumps(self.summary(), sort_keys=True)])


def _cmp(suite, case_id, **values):
    """One case: PASS iff all named values are equal; detail lists them on failure."""
    vals = list(values.values())
    ok = all(v == vals[0] for v in vals[1:])
    if ok:
        return CaseResult(suite, case_id, True, str(vals[0]))
    return CaseResult(suite, case_id, False, "; ".join(f"{k}={v!r}" for k, v in values.items()))


def _suite_grassmann(bound, rng, max_orbit, rep):
    for n in range(2, bound + 1):
        rs = roots.build_root_system("A", n - 1)
        for d in range(1, n):
            p = roots.ParabolicSpec.maximal(rs, d)
            rep.cases.append(
                _cmp(
                    "grassmann",
                    f"Gr({d:02d},{n:02d})",
                    constructor=fibre_motive(Grassmannian(d, n)),
                    partitions=partitions_in_box(d, n - d),
                    qbinomial=gaussian_binomial(n, d),
                    weyl=roots.gp_motive(rs, p, max_orbit),
                )
            )


def _suite_duality(bound, rng, max_orbit, rep):
    cap = roots.resolve_max_orbit(max_orbit)
    for letter, r in all_types(bound):
        rs = roots.build_root_system(letter, r)
        for size in range(r + 1):
            for levi in itertools.combinations(range(1, r + 1), size):
                p = roots.ParabolicSpec(levi)
                cid = f"{letter}{r}:levi={','.join(map(str, levi)) or '-'}"
                if roots.estimated_orbit_size(rs, p) > cap:
                    rep.skipped.append(cid)
                    continue
                prof = roots.coset_lengths(rs, p, cap)
                m = TateMotive(prof.lengths)
                ok = prof.is_palindromic() and is_self_dual(m, prof.dimension)
                rep.cases.append(CaseResult("duality", cid, ok, f"dim={prof.dimension} counts={prof.counts()}"))


def _suite_flags(bound, rng, max_orbit, rep):
    if bound > MAX_PERMUTATION_N:
        raise DomainError(f"flags suite enumerates permutations; bound must be <= {MAX_PERMUTATION_N}")
    for n in range(1, bound + 1):
        if n == 1:
            weyl = unit()
        else:
            weyl = roots.gp_motive(roots.build_root_system("A", n - 1), roots.ParabolicSpec(), max_orbit)
        rep.cases.append(_cmp("flags", f"n={n:02d}", permutations=permutation_length_profile(n), weyl=weyl))


def _random_cells(rng, max_cells, max_dim):
    return CellModel(tuple(rng.randint(0, max_dim) for _ in range(rng.randint(1, max_cells))))


def _suite_kunneth(bound, rng, max_orbit, rep):
    for k in range(100):
        a = _random_cells(rng, bound, bound)
        b = _random_cells(rng, bound, bound)
        ta = fibre_motive(ExplicitCellular(a.cells))
        tb = fibre_motive(ExplicitCellular(b.cells))
        rep.cases.append(_cmp("kunneth", f"pair-{k:03d}", cells=kunneth_cells(a, b), tensor=tensor(ta, tb)))


def _suite_weyl_orders(bound, rng, max_orbit, rep):
    cap = roots.resolve_max_orbit(max_orbit)
    for letter, r in all_types(bound):
        cid = f"{letter}{r}"
        expected = classical_weyl_order(letter, r)
        if expected > cap:
            rep.skipped.append(cid)
            continue
        rs = roots.build_root_system(letter, r)
        rep.cases.append(_cmp("weyl-orders", cid, enumerated=roots.weyl_order(rs, cap), closed_form=expected))


def random_fibre(rng, max_p=4, max_n=6, max_cells=8, max_cell_dim=6):
    kind = rng.randrange(3)
    if kind == 0:
        return ProjectiveSpace(rng.randint(1, max_p))
    if kind == 1:
        n = rng.randint(2, max_n)
        return Grassmannian(rng.randint(1, n - 1), n)
    return ExplicitCellular(tuple(rng.randint(0, max_cell_dim) for _ in range(rng.randint(1, max_cells))))


def _suite_tower(bound, rng, max_orbit, rep):
    for k in range(50):
        fibres = [random_fibre(rng, max_p=bound, max_n=bound + 2) for _ in range(rng.randint(0, 3))]
        t = TowerSpec(Point(), fibres)
        m = tower_motive(t, max_orbit)
        stepwise = unit()
        for f in fibres:
            stepwise = tensor(stepwise, fibre_motive(f, max_orbit))
        # fold in reverse order: the tensor is commutative, and regrouping must not matter
        regrouped = unit()
        for f in reversed(fibres):
            regrouped = tensor(fibre_motive(f, max_orbit), regrouped)
        prod = 1
        for f in fibres:
            prod *= rank(fibre_motive(f, max_orbit))
        ranks = tower_chow_ranks(t, max_orbit)
        ok = m == stepwise == regrouped and ranks == m.coefficients() and rank(m) == prod == sum(ranks)
        dims_ok = m.top_twist == sum(fibre_dimension(f) for f in fibres)
        detail = f"fibres={len(fibres)} rank={rank(m)}"
        if not (ok and dims_ok):
            detail += f" motive={m!r} stepwise={stepwise!r} ranks={ranks} product={prod}"
        rep.cases.append(CaseResult("tower", f"tower-{k:03d}", ok and dims_ok, detail))


_RUNNERS = {
    "grassmann": _suite_grassmann,
    "duality": _suite_duality,
    "flags": _suite_flags,
    "kunneth": _suite_kunneth,
    "weyl-orders": _suite_weyl_orders,
    "tower": _suite_tower,
}


def run_suite(name: str, bound: int, seed: int = DEFAULT_SEED, max_orbit=None) -> Report:
    if name not in _RUNNERS:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise DomainError(f"bound must be a positive integer, got {bound!r}")
    rep = Report(name, bound, seed)
    _RUNNERS[name](bound, random.Random(seed), max_orbit, rep)
    rep.cases.sort(key=lambda c: c.case_id)
    rep.skipped.sort()
    return rep
