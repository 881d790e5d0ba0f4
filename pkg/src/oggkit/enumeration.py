"""Bounded enumeration of posets, structures, and grid fuzzy subsets,
plus deterministic counterexample hunting over the claim registry.

Everything here is labeled enumeration: no isomorphism reduction unless
``dedup`` is requested.  Streams are duplicate-free, exhaustive within
bounds, and emitted in a documented canonical order, so two runs with the
same bounds produce identical sequences and identical hunt results.

Default caps are small (n <= 4, k <= 2) because the table space grows as
n^(n*n*k).  The OGGKIT_MAX_N environment variable or ``allow_large=True``
raises them.
"""

from __future__ import annotations

import itertools
import os
import string
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceededError, IncompatibleError, InternalInconsistencyError
from .fileformat import parse_fuzzy, parse_structure, serialize_fuzzy, serialize_structure
from .fuzzy import FuzzySubset, as_grade
from .structures import OrderedGammaGroupoid, is_gamma_semigroup, validate_structure
from .theorems import (
    CLAIM_ORDER,
    KIND_BY_LEVEL_CLAIM,
    ClaimReport,
    level_characterization,
    verify_product_claim,
)

DEFAULT_MAX_N = 4
DEFAULT_MAX_K = 2
MAX_FUZZY_STREAM = 10_000_000


def _max_n() -> int:
    env = os.environ.get("OGGKIT_MAX_N")
    if env is not None:
        try:
            return max(DEFAULT_MAX_N, int(env))
        except ValueError:
            raise CapExceededError(f"OGGKIT_MAX_N={env!r} is not an integer") from None
    return DEFAULT_MAX_N


def _check_n(n: int, allow_large: bool) -> None:
    if n < 1:
        raise CapExceededError("carrier size must be at least 1")
    cap = _max_n()
    if not allow_large and n > cap:
        raise CapExceededError(
            f"carrier size {n} exceeds the cap {cap}; set OGGKIT_MAX_N or allow_large=True"
        )


def default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"x{i}" for i in range(n))


def default_gammas(k: int) -> tuple[str, ...]:
    if k == 1:
        return ("g",)
    return tuple(f"g{i + 1}" for i in range(k))


@dataclass(frozen=True)
class EnumBounds:
    """Search bounds: carrier size, gamma count, grade grid, order source.

    order_mode is "all" (every labeled poset), "trivial" (equality order
    only), or an explicit iterable of generator pairs (a fixed order).
    The grid must be an ascending run of rationals in [0, 1] containing
    both endpoints.
    """

    n: int
    k: int = 1
    grid: tuple[Fraction, ...] = (Fraction(0), Fraction(1, 2), Fraction(1))
    assoc_only: bool = False
    order_mode: object = "all"
    allow_large: bool = False
    dedup: bool = False

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be at least 1")
        grid = tuple(sorted({as_grade(v) for v in self.grid}))
        if not grid or grid[0] != 0 or grid[-1] != 1:
            raise ValueError("grid must contain 0 and 1")
        object.__setattr__(self, "grid", grid)
        if isinstance(self.order_mode, str):
            if self.order_mode not in ("all", "trivial"):
                raise ValueError('order_mode must be "all", "trivial", or explicit pairs')
        else:
            object.__setattr__(
                self, "order_mode", frozenset((a, b) for a, b in self.order_mode)
            )


def enumerate_posets(
    n: int, *, names: tuple[str, ...] | None = None, allow_large: bool = False
) -> Iterator[frozenset[tuple[str, str]]]:
    """All labeled partial orders on n elements, each exactly once.

    Emitted as full reflexive relations, sorted by their sorted pair list
    (so the equality order, having the fewest pairs, comes first).
    """
    _check_n(n, allow_large)
    names = names or default_names(n)
    if len(names) != n:
        raise ValueError("names must match n")
    arrows = [(i, j) for i in range(n) for j in range(n) if i != j]
    found: list[list[tuple[int, int]]] = []
    for mask in range(1 << len(arrows)):
        rel = {arrows[b] for b in range(len(arrows)) if mask >> b & 1}
        if any((j, i) in rel for (i, j) in rel):
            continue
        if any(
            (i, k) not in rel
            for (i, j) in rel
            for (j2, k) in rel
            if j == j2 and i != k
        ):
            continue
        found.append(sorted(rel))
    found.sort()
    for strict in found:
        yield frozenset(
            [(names[i], names[j]) for i, j in strict]
            + [(x, x) for x in names]
        )


def trivial_order(names: Iterable[str]) -> frozenset[tuple[str, str]]:
    return frozenset((x, x) for x in names)


def enumerate_structures(bounds: EnumBounds) -> Iterator[OrderedGammaGroupoid]:
    """Every valid structure within bounds, each exactly once.

    Canonical order: poset index first (see enumerate_posets), then table
    cells lexicographically; cells are ordered (gamma, row, column) and
    cell values ascend in carrier order.  Compatibility with the order
    prunes candidates; assoc_only additionally keeps only structures whose
    operations satisfy the mixed associativity law.
    """
    _check_n(bounds.n, bounds.allow_large)
    if not bounds.allow_large and bounds.k > DEFAULT_MAX_K:
        raise CapExceededError(
            f"gamma count {bounds.k} exceeds the cap {DEFAULT_MAX_K}; use allow_large=True"
        )
    names = default_names(bounds.n)
    gammas = default_gammas(bounds.k)

    if bounds.order_mode == "trivial":
        posets: list[frozenset] = [trivial_order(names)]
    elif bounds.order_mode == "all":
        posets = list(enumerate_posets(bounds.n, names=names, allow_large=bounds.allow_large))
    else:
        posets = [bounds.order_mode]

    cells = [(g, x, y) for g in gammas for x in names for y in names]
    for poset in posets:
        for assignment in itertools.product(names, repeat=len(cells)):
            table = {
                (x, g, y): value for (g, x, y), value in zip(cells, assignment)
            }
            try:
                G = validate_structure(names, gammas, table, poset)
            except IncompatibleError:
                continue
            if bounds.assoc_only and not is_gamma_semigroup(G).passed:
                continue
            if bounds.dedup and not _is_canonical_labeling(G):
                continue
            yield G


def _relabeled(G: OrderedGammaGroupoid, perm: tuple[int, ...]) -> OrderedGammaGroupoid:
    rename = {G.carrier[i]: G.carrier[perm[i]] for i in range(len(G.carrier))}
    table = {
        (rename[x], g, rename[y]): rename[r] for (x, g, y), r in G.op.items()
    }
    order = [(rename[a], rename[b]) for a, b in G.order]
    return validate_structure(G.carrier, G.gammas, table, order)


def _is_canonical_labeling(G: OrderedGammaGroupoid) -> bool:
    """Keep one representative per relabeling class: the one whose
    serialization is minimal over all carrier permutations."""
    own = serialize_structure(G)
    n = len(G.carrier)
    for perm in itertools.permutations(range(n)):
        if serialize_structure(_relabeled(G, perm)) < own:
            return False
    return True


def enumerate_fuzzy(
    G: OrderedGammaGroupoid, grid: Iterable[object]
) -> Iterator[FuzzySubset]:
    """All |grid|^|M| grade assignments, lexicographic in carrier order."""
    grid = tuple(sorted({as_grade(v) for v in grid}))
    if not grid:
        raise ValueError("grid must be nonempty")
    n = len(G.carrier)
    if len(grid) ** n > MAX_FUZZY_STREAM:
        raise CapExceededError(
            f"{len(grid)}^{n} fuzzy subsets exceed the stream cap {MAX_FUZZY_STREAM}"
        )
    for combo in itertools.product(grid, repeat=n):
        yield FuzzySubset(zip(G.carrier, combo))


@dataclass(frozen=True)
class Counterexample:
    """A refuting instance, with serializations that reproduce it."""

    claim: str
    structure: OrderedGammaGroupoid
    mu: FuzzySubset
    sigma: FuzzySubset | None
    report: ClaimReport
    structure_text: str
    mu_text: str
    sigma_text: str | None

    @property
    def witness(self) -> str:
        for v in self.report.verdicts:
            if v.failed:
                return v.witness
        raise InternalInconsistencyError("counterexample without failing verdict")


@dataclass(frozen=True)
class NotFound:
    """Search exhausted with no violation; counts the instances tried."""

    claim: str
    searched: int


def _run_claim(claim, G, mu, sigma):
    if claim in KIND_BY_LEVEL_CLAIM:
        return level_characterization(G, mu, KIND_BY_LEVEL_CLAIM[claim])
    return verify_product_claim(claim, G, mu, sigma)


def hunt(claim: str, bounds: EnumBounds) -> Counterexample | NotFound:
    """First instance, in canonical order, whose hypotheses hold and whose
    conclusion fails; or NotFound with the exhausted search-space size.

    Square claims range sigma over the grid independently of mu (sigma is
    the inner loop).  Every counterexample is round-tripped through the
    text formats and re-verified before being returned.
    """
    if claim not in CLAIM_ORDER:
        raise ValueError(f"unknown claim {claim!r}; registry: {', '.join(CLAIM_ORDER)}")
    two_sided = claim not in KIND_BY_LEVEL_CLAIM
    searched = 0
    for G in enumerate_structures(bounds):
        mus = list(enumerate_fuzzy(G, bounds.grid))
        for mu in mus:
            for sigma in mus if two_sided else (None,):
                searched += 1
                report = _run_claim(claim, G, mu, sigma)
                if report.failed:
                    return _certified(claim, G, mu, sigma, report)
    return NotFound(claim, searched)


def _certified(claim, G, mu, sigma, report) -> Counterexample:
    s_text = serialize_structure(G)
    mu_text = serialize_fuzzy(mu)
    sigma_text = serialize_fuzzy(sigma) if sigma is not None else None
    G2 = parse_structure(s_text)
    mu2 = parse_fuzzy(mu_text, carrier=G2.carrier)
    sigma2 = parse_fuzzy(sigma_text, carrier=G2.carrier) if sigma_text else None
    replay = _run_claim(claim, G2, mu2, sigma2)
    if not replay.failed or replay != report:
        raise InternalInconsistencyError(
            f"counterexample for {claim} did not reproduce after round-trip"
        )
    return Counterexample(claim, G, mu, sigma, report, s_text, mu_text, sigma_text)
