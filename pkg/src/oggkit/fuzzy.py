"""Exact-rational fuzzy subsets, fuzzy ideal predicates, and level cuts.

Grades are :class:`fractions.Fraction` values in [0, 1].  Binary floats are
rejected everywhere: every predicate below hinges on exact <= / >=
comparisons, and rounding would fabricate witnesses.  Accepted grade
spellings are Fractions, ints, and strings "p" or "p/q".

Witnesses follow the same convention as the crisp predicates: the
lexicographically first violating tuple in (x, gamma, y) scan order, with
the absorption/product condition checked before the order condition.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from fractions import Fraction

from .errors import (
    CarrierMismatchError,
    InternalInconsistencyError,
    ThresholdOutOfRangeError,
    UnknownElementError,
)
from .structures import (
    FAIL,
    PASS,
    VACUOUS,
    OrderedGammaGroupoid,
    Verdict,
    order_witness,
    tuple_witness,
)

GRADE_RE = re.compile(r"\d+(/\d+)?\Z")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_grade(text: str) -> Fraction:
    """Parse "p" or "p/q" into a Fraction in [0, 1]; decimals are rejected."""
    if not GRADE_RE.match(text):
        raise ValueError(f"grade must be 'p' or 'p/q', got {text!r}")
    try:
        value = Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"grade {text!r} has a zero denominator") from None
    if not ZERO <= value <= ONE:
        raise ValueError(f"grade {text} is outside [0, 1]")
    return value


def as_grade(value) -> Fraction:
    """Coerce an exact grade representation; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("grades must be rationals, not bools")
    if isinstance(value, float):
        raise TypeError(f"refusing float grade {value!r}; pass a Fraction or 'p/q' string")
    if isinstance(value, str):
        return parse_grade(value)
    if isinstance(value, int):
        value = Fraction(value)
    if not isinstance(value, Fraction):
        raise TypeError(f"cannot interpret {value!r} as a grade")
    if not ZERO <= value <= ONE:
        raise ValueError(f"grade {value} is outside [0, 1]")
    return value


class FuzzySubset:
    """A total mapping from a carrier to exact rational grades in [0, 1]."""

    __slots__ = ("_grades",)

    def __init__(self, grades: Mapping[str, object] | Iterable[tuple[str, object]]):
        items = grades.items() if isinstance(grades, Mapping) else grades
        out: dict[str, Fraction] = {}
        for name, value in items:
            if name in out:
                raise ValueError(f"duplicate grade for {name!r}")
            out[name] = as_grade(value)
        if not out:
            raise ValueError("a fuzzy subset needs a nonempty carrier")
        self._grades = out

    @classmethod
    def constant(cls, carrier: Iterable[str], value) -> "FuzzySubset":
        c = as_grade(value)
        return cls((x, c) for x in carrier)

    @classmethod
    def characteristic(cls, carrier: Iterable[str], members: Iterable[str]) -> "FuzzySubset":
        """The 0/1 indicator of a crisp subset of the carrier."""
        carrier = tuple(carrier)
        members = set(members)
        unknown = members - set(carrier)
        if unknown:
            raise UnknownElementError(f"members not in carrier: {sorted(unknown)}")
        return cls((x, ONE if x in members else ZERO) for x in carrier)

    @property
    def carrier(self) -> tuple[str, ...]:
        return tuple(self._grades)

    def __getitem__(self, name: str) -> Fraction:
        return self._grades[name]

    def items(self):
        return self._grades.items()

    def __eq__(self, other):
        if not isinstance(other, FuzzySubset):
            return NotImplemented
        return self._grades == other._grades

    def __hash__(self):
        return hash(frozenset(self._grades.items()))

    def __repr__(self):
        inner = ", ".join(f"{x}: {v}" for x, v in self._grades.items())
        return f"FuzzySubset({{{inner}}})"


def level_cut(mu: FuzzySubset, t) -> frozenset[str]:
    """The set of elements whose grade is >= t (exact comparison)."""
    if isinstance(t, float) or isinstance(t, bool):
        raise ThresholdOutOfRangeError(f"threshold must be an exact rational, got {t!r}")
    if isinstance(t, (str, int)):
        try:
            t = Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise ThresholdOutOfRangeError(f"threshold {t!r} is not a rational") from None
    if not isinstance(t, Fraction):
        raise ThresholdOutOfRangeError(f"threshold must be an exact rational, got {t!r}")
    if not ZERO <= t <= ONE:
        raise ThresholdOutOfRangeError(f"threshold {t} is outside [0, 1]")
    return frozenset(x for x, v in mu.items() if v >= t)


def membership_image(mu: FuzzySubset) -> list[Fraction]:
    """The distinct grade values, ascending.

    Level cuts are constant between consecutive image values, so these
    thresholds (plus anything above the maximum) decide every "for all t"
    quantification over cuts.
    """
    return sorted({v for _, v in mu.items()})


def _check_carrier(G: OrderedGammaGroupoid, mu: FuzzySubset) -> None:
    if set(mu.carrier) != set(G.carrier):
        raise CarrierMismatchError(
            f"fuzzy subset over {sorted(mu.carrier)} does not match carrier {sorted(G.carrier)}"
        )


def _order_condition(G: OrderedGammaGroupoid, mu: FuzzySubset) -> str | None:
    """First witness against 'x <= y implies mu(x) >= mu(y)', if any."""
    for x, y in G.strict_pairs():
        if mu[x] < mu[y]:
            return order_witness(x, y)
    return None


def is_fuzzy_left_ideal(G: OrderedGammaGroupoid, mu: FuzzySubset) -> Verdict:
    """mu(x.g.y) >= mu(y) for all x, g, y, and mu antitone along the order."""
    _check_carrier(G, mu)
    op = G.op
    for x in G.carrier:
        for g in G.gammas:
            for y in G.carrier:
                if mu[op[(x, g, y)]] < mu[y]:
                    return Verdict("fuzzy-left-ideal", FAIL, tuple_witness(x, g, y))
    w = _order_condition(G, mu)
    if w is not None:
        return Verdict("fuzzy-left-ideal", FAIL, w)
    return Verdict("fuzzy-left-ideal", PASS)


def is_fuzzy_right_ideal(G: OrderedGammaGroupoid, mu: FuzzySubset) -> Verdict:
    """mu(x.g.y) >= mu(x) for all x, g, y, and mu antitone along the order."""
    _check_carrier(G, mu)
    op = G.op
    for x in G.carrier:
        for g in G.gammas:
            for y in G.carrier:
                if mu[op[(x, g, y)]] < mu[x]:
                    return Verdict("fuzzy-right-ideal", FAIL, tuple_witness(x, g, y))
    w = _order_condition(G, mu)
    if w is not None:
        return Verdict("fuzzy-right-ideal", FAIL, w)
    return Verdict("fuzzy-right-ideal", PASS)


def is_fuzzy_ideal(G: OrderedGammaGroupoid, mu: FuzzySubset) -> Verdict:
    """Both a fuzzy left and a fuzzy right ideal.

    Evaluated twice on every call: once as the left/right conjunction and
    once through the equivalent max form mu(x.g.y) >= max(mu(x), mu(y)).
    The two routes can only disagree through an implementation bug, which
    is surfaced as InternalInconsistencyError.
    """
    _check_carrier(G, mu)
    left = is_fuzzy_left_ideal(G, mu)
    right = left if left.failed else is_fuzzy_right_ideal(G, mu)
    failed = left.failed or right.failed

    op = G.op
    max_route_ok = all(
        mu[op[(x, g, y)]] >= max(mu[x], mu[y])
        for x in G.carrier
        for g in G.gammas
        for y in G.carrier
    ) and _order_condition(G, mu) is None
    if max_route_ok == failed:
        raise InternalInconsistencyError(
            "left/right conjunction and max characterization disagree"
        )

    if left.failed:
        return Verdict("fuzzy-ideal", FAIL, left.witness)
    if right.failed:
        return Verdict("fuzzy-ideal", FAIL, right.witness)
    return Verdict("fuzzy-ideal", PASS)


def is_fuzzy_prime(G: OrderedGammaGroupoid, mu: FuzzySubset) -> Verdict:
    """mu(x.g.y) <= max(mu(x), mu(y)) for all x, g, y; no order condition."""
    _check_carrier(G, mu)
    op = G.op
    for x in G.carrier:
        for g in G.gammas:
            for y in G.carrier:
                if mu[op[(x, g, y)]] > max(mu[x], mu[y]):
                    return Verdict("fuzzy-prime", FAIL, tuple_witness(x, g, y))
    return Verdict("fuzzy-prime", PASS)


def is_fuzzy_semiprime(G: OrderedGammaGroupoid, mu: FuzzySubset) -> Verdict:
    """mu(x) >= mu(x.g.x) for all x and g."""
    _check_carrier(G, mu)
    op = G.op
    for x in G.carrier:
        for g in G.gammas:
            if mu[x] < mu[op[(x, g, x)]]:
                return Verdict("fuzzy-semiprime", FAIL, tuple_witness(x, g))
    return Verdict("fuzzy-semiprime", PASS)


def prime_ideal_equality(G: OrderedGammaGroupoid, mu: FuzzySubset) -> Verdict:
    """For a fuzzy prime ideal, mu(x.g.y) == max(mu(x), mu(y)) everywhere.

    The equality follows from the two defining inequalities, so a fail here
    indicates a bug; inputs that are not fuzzy prime ideals give 'vacuous'.
    """
    _check_carrier(G, mu)
    if not (is_fuzzy_ideal(G, mu).passed and is_fuzzy_prime(G, mu).passed):
        return Verdict("prime-ideal-equality", VACUOUS)
    op = G.op
    for x in G.carrier:
        for g in G.gammas:
            for y in G.carrier:
                if mu[op[(x, g, y)]] != max(mu[x], mu[y]):
                    return Verdict("prime-ideal-equality", FAIL, tuple_witness(x, g, y))
    return Verdict("prime-ideal-equality", PASS)
