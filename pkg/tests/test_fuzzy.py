import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oggkit.errors import (
    CarrierMismatchError,
    ThresholdOutOfRangeError,
    UnknownElementError,
)
from oggkit.fixtures import S1, S2, S3, S4, MU1
from oggkit.fuzzy import (
    FuzzySubset,
    as_grade,
    is_fuzzy_ideal,
    is_fuzzy_left_ideal,
    is_fuzzy_prime,
    is_fuzzy_right_ideal,
    is_fuzzy_semiprime,
    level_cut,
    membership_image,
    parse_grade,
    prime_ideal_equality,
)
from oggkit.structures import is_ideal, is_left_ideal, is_prime_subset, is_right_ideal, is_semiprime_subset

HALF = Fraction(1, 2)


def fz(**grades):
    return FuzzySubset(grades)


# --- grades ----------------------------------------------------------------


def test_parse_grade():
    assert parse_grade("1/2") == HALF
    assert parse_grade("1") == 1
    assert parse_grade("2/4") == HALF  # lowest terms
    for bad in ("0.5", "-1/2", "3/2", "a", "1/0"):
        with pytest.raises(ValueError):
            parse_grade(bad)


def test_as_grade_refuses_floats():
    with pytest.raises(TypeError):
        as_grade(0.5)
    with pytest.raises(ValueError):
        as_grade(Fraction(3, 2))


def test_fuzzy_subset_basics():
    mu = fz(a="1/2", b=1)
    assert mu["a"] == HALF and mu["b"] == 1
    assert mu.carrier == ("a", "b")
    assert mu == FuzzySubset({"a": HALF, "b": Fraction(1)})


# --- level cuts -------------------------------------------------------------


def test_level_cut_examples():
    mu = fz(a="1/2", b="3/4")
    assert level_cut(mu, "3/5") == {"b"}
    assert level_cut(mu, 0) == {"a", "b"}
    assert level_cut(mu, 1) == frozenset()


def test_level_cut_threshold_errors():
    mu = fz(a="1/2", b="3/4")
    for bad in ("3/2", -1, 0.25):
        with pytest.raises(ThresholdOutOfRangeError):
            level_cut(mu, bad)


def test_membership_image_examples():
    assert membership_image(fz(a="1/2", b="3/4")) == [HALF, Fraction(3, 4)]
    assert membership_image(FuzzySubset.constant(("a", "b"), "1/3")) == [Fraction(1, 3)]
    assert membership_image(MU1) == [0, 1]


grades = st.fractions(min_value=0, max_value=1, max_denominator=8)


@given(st.tuples(grades, grades), grades, grades)
def test_cut_antitone(pair, t1, t2):
    mu = FuzzySubset({"a": pair[0], "b": pair[1]})
    lo, hi = min(t1, t2), max(t1, t2)
    assert level_cut(mu, hi) <= level_cut(mu, lo)
    assert level_cut(mu, 0) == set(mu.carrier)


@given(st.lists(grades, min_size=3, max_size=3), grades)
def test_cut_step_function(values, t):
    mu = FuzzySubset({"a": values[0], "b": values[1], "c": values[2]})
    image = membership_image(mu)
    above = [s for s in image if s >= t]
    if above:
        assert level_cut(mu, t) == level_cut(mu, min(above))
    else:
        assert level_cut(mu, t) == frozenset()


# --- fuzzy predicates --------------------------------------------------------


def test_fuzzy_left_ideal_examples():
    v = is_fuzzy_left_ideal(S2, MU1)
    assert v.failed and v.witness == "(b,g,a)"  # mu(b g a) = mu(b) = 0 < mu(a)
    for G in (S1, S2, S3, S4):
        assert is_fuzzy_left_ideal(G, FuzzySubset.constant(G.carrier, "1/2")).passed
    assert is_fuzzy_left_ideal(S3, fz(**{"0": "1", "1": "1/2"})).passed


def test_fuzzy_right_ideal_examples():
    for combo in itertools.product(("0", "1/2", "1"), repeat=2):
        mu = FuzzySubset({"a": combo[0], "b": combo[1]})
        assert is_fuzzy_right_ideal(S2, mu).passed  # x g y = x
    v = is_fuzzy_right_ideal(S4, fz(**{"0": "1", "1": "0"}))
    assert v.failed and v.witness == "(0,g,0)"


def test_fuzzy_order_condition_witness():
    # Constant products keep condition (1) alive; 0 <= 1 with mu(0) < mu(1)
    # must be reported as the order-condition witness.
    mu = fz(**{"0": "0", "1": "1"})
    v = is_fuzzy_left_ideal(S3, mu)
    assert v.failed and v.witness == "(0,g,1)"  # condition (1) fires first
    bottom = FuzzySubset({"0": "1", "1": "1"})
    assert is_fuzzy_left_ideal(S3, bottom).passed


def test_fuzzy_ideal_examples():
    assert is_fuzzy_ideal(S1, MU1).passed
    for G in (S1, S2, S3, S4):
        assert is_fuzzy_ideal(G, FuzzySubset.constant(G.carrier, "1/3")).passed
    v = is_fuzzy_ideal(S3, fz(**{"0": "0", "1": "1"}))
    assert v.failed and v.witness == "(0,g,1)"


def test_fuzzy_ideal_routes_agree(corpus_n2):
    # Three-way agreement: the two-sided conjunction, the max route inside
    # is_fuzzy_ideal (which raises on disagreement), and the one-sided calls.
    grid = ("0", "1/2", "1")
    for G in corpus_n2:
        for combo in itertools.product(grid, repeat=2):
            mu = FuzzySubset(dict(zip(G.carrier, combo)))
            both = is_fuzzy_left_ideal(G, mu).passed and is_fuzzy_right_ideal(G, mu).passed
            assert is_fuzzy_ideal(G, mu).passed == both


def test_fuzzy_prime_examples():
    assert is_fuzzy_prime(S1, MU1).passed
    assert is_fuzzy_prime(S2, FuzzySubset.constant(("a", "b"), "2/3")).passed
    v = is_fuzzy_prime(S4, fz(**{"0": "0", "1": "1"}))
    assert v.failed and v.witness == "(0,g,0)"


def test_fuzzy_semiprime_examples():
    assert is_fuzzy_semiprime(S1, FuzzySubset.constant(("a", "b"), "1/4")).passed
    assert is_fuzzy_semiprime(S1, MU1).passed
    v = is_fuzzy_semiprime(S4, fz(**{"0": "0", "1": "1"}))
    assert v.failed and v.witness == "(0,g)"


def test_prime_ideal_equality():
    assert prime_ideal_equality(S1, MU1).passed
    for G in (S1, S2, S3, S4):
        assert prime_ideal_equality(G, FuzzySubset.constant(G.carrier, "1/2")).passed
    assert prime_ideal_equality(S2, MU1).status == "vacuous"


def test_carrier_mismatch():
    mu = fz(a="1", b="0")
    with pytest.raises(CarrierMismatchError):
        is_fuzzy_left_ideal(S3, mu)


def test_characteristic_validates_members():
    with pytest.raises(UnknownElementError):
        FuzzySubset.characteristic(("a", "b"), ["z"])


# --- characteristic-function bridge -----------------------------------------

BRIDGE = [
    (is_left_ideal, is_fuzzy_left_ideal, True),
    (is_right_ideal, is_fuzzy_right_ideal, True),
    (is_ideal, is_fuzzy_ideal, True),
    (is_prime_subset, is_fuzzy_prime, False),
    (is_semiprime_subset, is_fuzzy_semiprime, False),
]


def test_characteristic_bridge_on_fixtures():
    for G in (S1, S2, S3, S4):
        for r in range(len(G.carrier) + 1):
            for A in itertools.combinations(G.carrier, r):
                chi = FuzzySubset.characteristic(G.carrier, A)
                for crisp, fuzzy_pred, needs_nonempty in BRIDGE:
                    if needs_nonempty and not A:
                        continue
                    assert crisp(G, A).passed == fuzzy_pred(G, chi).passed
