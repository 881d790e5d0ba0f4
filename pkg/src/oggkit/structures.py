"""Finite ordered Gamma-groupoids and crisp subset predicates.

A structure is a finite carrier of named elements, a list of gamma labels,
one total operation table per gamma, and a partial order.  The order is
supplied as generator pairs; ``validate_structure`` closes them reflexively
and transitively, then checks antisymmetry and two-sided compatibility of
the order with every operation (a <= b forces a.g.c <= b.g.c and
c.g.a <= c.g.b for all c and g).

Closure of each table is guaranteed by construction (every table cell is a
carrier element), and well-definedness is automatic for a table, so neither
is a runtime check.

All predicates return a :class:`Verdict`.  Failing verdicts carry the
lexicographically first violating tuple, scanned in carrier order and gamma
order, so outputs are deterministic and suitable for golden tests.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import (
    BadNameError,
    EmptySubsetError,
    IncompatibleError,
    NotAntisymmetricError,
    TableIncompleteError,
    UnknownElementError,
)

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"

# Hand-authored names use the plain grammar; the extended one additionally
# admits "(x,y)" names generated for direct squares, which must re-validate
# and round-trip through the same machinery.
NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")
EXTENDED_NAME_RE = re.compile(r"[A-Za-z0-9_(),]+\Z")


@dataclass(frozen=True)
class Verdict:
    """Outcome of one predicate or claim check.

    ``witness`` is present exactly when ``status`` is "fail" and names the
    first violating tuple, e.g. ``(b,g,a)`` or ``(x<=y)``.
    """

    claim: str
    status: str
    witness: str | None = None

    def __post_init__(self):
        if self.status not in (PASS, FAIL, VACUOUS):
            raise ValueError(f"bad status {self.status!r}")
        if (self.witness is not None) != (self.status == FAIL):
            raise ValueError("witness must be present iff status is 'fail'")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def tuple_witness(*parts: str) -> str:
    return "(" + ",".join(parts) + ")"


def order_witness(lower: str, upper: str) -> str:
    return f"({lower}<={upper})"


@dataclass(frozen=True)
class OrderedGammaGroupoid:
    """A validated structure.  Treat instances as immutable.

    ``op`` maps (element, gamma, element) to an element; ``order`` is the
    full reflexive-transitive-closed relation as (lower, upper) pairs.
    """

    carrier: tuple[str, ...]
    gammas: tuple[str, ...]
    op: dict[tuple[str, str, str], str] = field(hash=False)
    order: frozenset[tuple[str, str]]

    def value(self, x: str, gamma: str, y: str) -> str:
        return self.op[(x, gamma, y)]

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.order

    def strict_pairs(self) -> list[tuple[str, str]]:
        """Comparable pairs (a, b) with a <= b and a != b, in carrier order."""
        return [
            (a, b)
            for a in self.carrier
            for b in self.carrier
            if a != b and (a, b) in self.order
        ]

    def raw_parts(self):
        """The pieces accepted by validate_structure (for re-validation)."""
        return self.carrier, self.gammas, dict(self.op), set(self.order)

    def __repr__(self):
        return (
            f"OrderedGammaGroupoid(carrier={self.carrier!r}, "
            f"gammas={self.gammas!r}, |order|={len(self.order)})"
        )


def _check_names(kind: str, names: Sequence[str]) -> tuple[str, ...]:
    if not names:
        raise BadNameError(f"no {kind} declared")
    seen = set()
    for name in names:
        if not isinstance(name, str) or not EXTENDED_NAME_RE.match(name):
            raise BadNameError(f"bad {kind} name {name!r}")
        if name in seen:
            raise BadNameError(f"duplicate {kind} name {name!r}")
        seen.add(name)
    return tuple(names)


def _close_order(
    carrier: tuple[str, ...], pairs: Iterable[tuple[str, str]]
) -> frozenset[tuple[str, str]]:
    """Reflexive-transitive closure, then antisymmetry check."""
    index = {name: i for i, name in enumerate(carrier)}
    n = len(carrier)
    succ = [1 << i for i in range(n)]
    for a, b in pairs:
        if a not in index:
            raise UnknownElementError(f"order pair uses unknown element {a!r}")
        if b not in index:
            raise UnknownElementError(f"order pair uses unknown element {b!r}")
        succ[index[a]] |= 1 << index[b]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = succ[i]
            m = acc
            while m:
                j = (m & -m).bit_length() - 1
                acc |= succ[j]
                m &= m - 1
            if acc != succ[i]:
                succ[i] = acc
                changed = True
    for i in range(n):
        for j in range(i + 1, n):
            if succ[i] >> j & 1 and succ[j] >> i & 1:
                raise NotAntisymmetricError(
                    f"order cycle: {carrier[i]} <= {carrier[j]} <= {carrier[i]}"
                )
    return frozenset(
        (carrier[i], carrier[j])
        for i in range(n)
        for j in range(n)
        if succ[i] >> j & 1
    )


def validate_structure(
    carrier: Sequence[str],
    gammas: Sequence[str],
    table: Mapping[tuple[str, str, str], str],
    order_pairs: Iterable[tuple[str, str]] = (),
) -> OrderedGammaGroupoid:
    """Validate raw pieces into a structure, or raise a ValidationError.

    The order is closed before antisymmetry and compatibility are checked.
    Validating the parts of an already valid structure returns an equal
    structure (the closure is idempotent).
    """
    carrier = _check_names("element", carrier)
    gammas = _check_names("gamma", gammas)
    elements = set(carrier)
    labels = set(gammas)

    for (x, g, y), r in table.items():
        if x not in elements or y not in elements:
            raise UnknownElementError(f"table entry ({x},{g},{y}) uses unknown element")
        if g not in labels:
            raise UnknownElementError(f"table entry ({x},{g},{y}) uses unknown gamma")
        if r not in elements:
            raise UnknownElementError(f"table result {r!r} at ({x},{g},{y}) is not a carrier element")
    op: dict[tuple[str, str, str], str] = {}
    for x in carrier:
        for g in gammas:
            for y in carrier:
                try:
                    op[(x, g, y)] = table[(x, g, y)]
                except KeyError:
                    raise TableIncompleteError(f"missing table entry ({x},{g},{y})") from None

    order = _close_order(carrier, order_pairs)

    for a in carrier:
        for b in carrier:
            if a == b or (a, b) not in order:
                continue
            for c in carrier:
                for g in gammas:
                    p, q = op[(a, g, c)], op[(b, g, c)]
                    if (p, q) not in order:
                        raise IncompatibleError(
                            f"{a} <= {b} but {a} {g} {c} = {p} is not <= "
                            f"{b} {g} {c} = {q} (right multiplication by {c})"
                        )
                    p, q = op[(c, g, a)], op[(c, g, b)]
                    if (p, q) not in order:
                        raise IncompatibleError(
                            f"{a} <= {b} but {c} {g} {a} = {p} is not <= "
                            f"{c} {g} {b} = {q} (left multiplication by {c})"
                        )

    return OrderedGammaGroupoid(carrier, gammas, op, order)


def _subset(G: OrderedGammaGroupoid, members: Iterable[str]) -> tuple[str, ...]:
    """Normalize a subset to carrier order, rejecting unknown names."""
    elements = set(G.carrier)
    got = set()
    for m in members:
        if m not in elements:
            raise UnknownElementError(f"subset member {m!r} is not in the carrier")
        got.add(m)
    return tuple(x for x in G.carrier if x in got)


def is_gamma_semigroup(G: OrderedGammaGroupoid) -> Verdict:
    """Does a.g.(b.h.c) == (a.g.b).h.c hold for all triples and label pairs?"""
    op = G.op
    for a in G.carrier:
        for g in G.gammas:
            for b in G.carrier:
                for h in G.gammas:
                    for c in G.carrier:
                        if op[(op[(a, g, b)], h, c)] != op[(a, g, op[(b, h, c)])]:
                            return Verdict(
                                "gamma-semigroup", FAIL, tuple_witness(a, g, b, h, c)
                            )
    return Verdict("gamma-semigroup", PASS)


def is_left_ideal(G: OrderedGammaGroupoid, members: Iterable[str]) -> Verdict:
    """Nonempty A with M.Gamma.A inside A and A downward closed."""
    A = _subset(G, members)
    if not A:
        raise EmptySubsetError("ideals are nonempty; got the empty subset")
    in_A = set(A)
    op = G.op
    for m in G.carrier:
        for g in G.gammas:
            for a in A:
                if op[(m, g, a)] not in in_A:
                    return Verdict("left-ideal", FAIL, tuple_witness(m, g, a))
    return _down_closed(G, in_A, "left-ideal")


def is_right_ideal(G: OrderedGammaGroupoid, members: Iterable[str]) -> Verdict:
    """Nonempty A with A.Gamma.M inside A and A downward closed."""
    A = _subset(G, members)
    if not A:
        raise EmptySubsetError("ideals are nonempty; got the empty subset")
    in_A = set(A)
    op = G.op
    for a in A:
        for g in G.gammas:
            for m in G.carrier:
                if op[(a, g, m)] not in in_A:
                    return Verdict("right-ideal", FAIL, tuple_witness(a, g, m))
    return _down_closed(G, in_A, "right-ideal")


def _down_closed(G: OrderedGammaGroupoid, in_A: set[str], claim: str) -> Verdict:
    for b in G.carrier:
        if b in in_A:
            continue
        for a in G.carrier:
            if a != b and a in in_A and G.leq(b, a):
                return Verdict(claim, FAIL, order_witness(b, a))
    return Verdict(claim, PASS)


def is_ideal(G: OrderedGammaGroupoid, members: Iterable[str]) -> Verdict:
    """Both a left and a right ideal; witness comes from the left side first."""
    A = _subset(G, members)
    left = is_left_ideal(G, A)
    if left.failed:
        return Verdict("ideal", FAIL, left.witness)
    right = is_right_ideal(G, A)
    if right.failed:
        return Verdict("ideal", FAIL, right.witness)
    return Verdict("ideal", PASS)


def is_prime_subset(G: OrderedGammaGroupoid, members: Iterable[str]) -> Verdict:
    """Every product landing in T has a factor in T; empty T passes vacuously."""
    T = set(_subset(G, members))
    op = G.op
    for a in G.carrier:
        for g in G.gammas:
            for b in G.carrier:
                if op[(a, g, b)] in T and a not in T and b not in T:
                    return Verdict("prime", FAIL, tuple_witness(a, g, b))
    return Verdict("prime", PASS)


def is_semiprime_subset(G: OrderedGammaGroupoid, members: Iterable[str]) -> Verdict:
    """Every square landing in T has its base in T; empty T passes vacuously."""
    T = set(_subset(G, members))
    op = G.op
    for a in G.carrier:
        for g in G.gammas:
            if op[(a, g, a)] in T and a not in T:
                return Verdict("semiprime", FAIL, tuple_witness(a, g))
    return Verdict("semiprime", PASS)
