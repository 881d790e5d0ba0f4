import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oggkit.errors import CarrierMismatchError, SizeLimitError
from oggkit.fixtures import S1, S3, MU1
from oggkit.fuzzy import FuzzySubset, level_cut, membership_image
from oggkit.product import direct_square, fuzzy_product, pair_name
from oggkit.structures import validate_structure


def test_pair_name():
    assert pair_name("a", "b") == "(a,b)"
    assert pair_name("(a,b)", "c") == "((a,b),c)"


def test_square_of_s1_componentwise():
    sq = direct_square(S1)
    assert len(sq.carrier) == 4
    # (a,b) g (b,a) = (a g b, b g a) = (a,a)
    assert sq.value("(a,b)", "g", "(b,a)") == "(a,a)"


def test_square_of_trivial_order_is_trivial():
    sq = direct_square(S1)
    assert sq.order == frozenset((x, x) for x in sq.carrier)


def test_square_of_s3_componentwise_order():
    sq = direct_square(S3)
    assert sq.leq("(0,1)", "(1,1)")
    assert sq.leq("(0,0)", "(0,1)")
    assert not sq.leq("(0,1)", "(1,0)")
    assert not sq.leq("(1,0)", "(0,1)")


def test_square_revalidates_over_corpus(corpus_n2):
    # The construction claim: the square is itself a valid structure.  The
    # call already re-validates; also confirm idempotence of the validation.
    for G in corpus_n2:
        sq = direct_square(G)
        assert validate_structure(*sq.raw_parts()) == sq


def test_size_limit():
    with pytest.raises(SizeLimitError):
        direct_square(S1, max_elements=3)


def test_fuzzy_product_examples():
    prod = fuzzy_product(MU1, MU1)
    assert prod[pair_name("a", "b")] == 0
    assert prod[pair_name("a", "a")] == 1
    sigma = FuzzySubset({"a": "1/3", "b": "2/3"})
    lifted = fuzzy_product(FuzzySubset.constant(("a", "b"), 1), sigma)
    for x in ("a", "b"):
        for y in ("a", "b"):
            assert lifted[pair_name(x, y)] == sigma[y]


def test_fuzzy_product_carrier_mismatch():
    with pytest.raises(CarrierMismatchError):
        fuzzy_product(MU1, FuzzySubset({"0": 1, "1": 0}))


grades = st.fractions(min_value=0, max_value=1, max_denominator=6)
pairs = st.tuples(grades, grades)


@given(pairs, pairs, grades)
def test_product_of_cuts_identity(mg, sg, t):
    mu = FuzzySubset({"a": mg[0], "b": mg[1]})
    sigma = FuzzySubset({"a": sg[0], "b": sg[1]})
    prod = fuzzy_product(mu, sigma)
    expected = {
        pair_name(x, y)
        for x in level_cut(mu, t)
        for y in level_cut(sigma, t)
    }
    assert level_cut(prod, t) == expected


@given(pairs, pairs, pairs)
def test_product_monotone_in_each_argument(mg, mg2, sg):
    mu = FuzzySubset({"a": mg[0], "b": mg[1]})
    bigger = FuzzySubset({"a": max(mg[0], mg2[0]), "b": max(mg[1], mg2[1])})
    sigma = FuzzySubset({"a": sg[0], "b": sg[1]})
    small, large = fuzzy_product(mu, sigma), fuzzy_product(bigger, sigma)
    assert all(small[p] <= large[p] for p in small.carrier)


def test_product_of_cuts_at_image_values():
    mu = FuzzySubset({"a": "1/2", "b": "3/4"})
    sigma = FuzzySubset({"a": "1/4", "b": "1"})
    prod = fuzzy_product(mu, sigma)
    for t in sorted(set(membership_image(mu) + membership_image(sigma))):
        assert level_cut(prod, t) == {
            pair_name(x, y) for x in level_cut(mu, t) for y in level_cut(sigma, t)
        }
