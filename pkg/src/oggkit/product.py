"""Direct squares M x M and the pairwise-min fuzzy cartesian product.

The square's operation acts componentwise and its order is the
componentwise order; the construction is fed back through
``validate_structure``, so "the square is again a valid structure" is
checked on every call rather than assumed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import CarrierMismatchError, SizeLimitError
from .fuzzy import FuzzySubset
from .structures import OrderedGammaGroupoid, validate_structure

DEFAULT_MAX_ELEMENTS = 256


def pair_name(x: str, y: str) -> str:
    """The square's element name for the ordered pair (x, y).

    Base names never contain parentheses or commas, so the textual pairing
    is collision-free; nested pairs stay unambiguous because parentheses
    balance.
    """
    return f"({x},{y})"


@lru_cache(maxsize=64)
def direct_square(
    G: OrderedGammaGroupoid, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> OrderedGammaGroupoid:
    """The structure on all ordered pairs of G's carrier.

    op((a,b), g, (c,d)) = (a.g.c, b.g.d) and (a,b) <= (c,d) iff a <= c and
    b <= d.  Raises SizeLimitError when |M|^2 would exceed max_elements.
    """
    n = len(G.carrier)
    if n * n > max_elements:
        raise SizeLimitError(
            f"square would have {n * n} elements, above the cap of {max_elements}"
        )
    carrier = [pair_name(x, y) for x in G.carrier for y in G.carrier]
    table = {}
    for x1 in G.carrier:
        for y1 in G.carrier:
            a = pair_name(x1, y1)
            for g in G.gammas:
                for x2 in G.carrier:
                    for y2 in G.carrier:
                        table[(a, g, pair_name(x2, y2))] = pair_name(
                            G.op[(x1, g, x2)], G.op[(y1, g, y2)]
                        )
    pairs = [
        (pair_name(a, c), pair_name(b, d))
        for (a, b) in G.order
        for (c, d) in G.order
    ]
    return validate_structure(carrier, G.gammas, table, pairs)


def fuzzy_product(mu: FuzzySubset, sigma: FuzzySubset) -> FuzzySubset:
    """grade(x, y) = min(mu(x), sigma(y)) over the square's carrier."""
    if set(mu.carrier) != set(sigma.carrier):
        raise CarrierMismatchError(
            f"products need a shared carrier: {sorted(mu.carrier)} vs {sorted(sigma.carrier)}"
        )
    grades: list[tuple[str, Fraction]] = []
    for x in mu.carrier:
        for y in mu.carrier:
            grades.append((pair_name(x, y), min(mu[x], sigma[y])))
    return FuzzySubset(grades)
