"""Tiny canonical structures whose every claim is checkable by hand.

S1 "join"      M={a,b}, a.g.a=a, a.g.b=a, b.g.a=a, b.g.b=b, equality order
S2 "left-zero" M={a,b}, x.g.y=x, equality order
S3 "chain-min" M={0,1}, x.g.y=min(x,y), 0 <= 1
S4 "const-top" M={0,1}, x.g.y=1, equality order

MU1 grades a at 1 and b at 0 (over the S1/S2 carrier); ANTITONE grades
0 at 1 and 1 at 1/2 (over the S3/S4 carrier).
"""

from fractions import Fraction

from .fuzzy import FuzzySubset
from .structures import validate_structure


def _two(carrier, cells, pairs=()):
    x, y = carrier
    table = {
        (x, "g", x): cells[0],
        (x, "g", y): cells[1],
        (y, "g", x): cells[2],
        (y, "g", y): cells[3],
    }
    return validate_structure(carrier, ("g",), table, pairs)


S1 = _two(("a", "b"), ("a", "a", "a", "b"))
S2 = _two(("a", "b"), ("a", "a", "b", "b"))
S3 = _two(("0", "1"), ("0", "0", "0", "1"), pairs=[("0", "1")])
S4 = _two(("0", "1"), ("1", "1", "1", "1"))

MU1 = FuzzySubset({"a": 1, "b": 0})
ANTITONE = FuzzySubset({"0": Fraction(1), "1": Fraction(1, 2)})

ALL_STRUCTURES = {"s1": S1, "s2": S2, "s3": S3, "s4": S4}
