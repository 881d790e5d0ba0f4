"""The claim registry and its verification engine.

Claims T4..T10 relate a fuzzy predicate to the same predicate on level
cuts; each is checked as a biconditional and reported as two verdicts,
``<claim>.forward`` (fuzzy side implies every cut passes) and
``<claim>.converse`` (every cut passes implies the fuzzy side).  A
direction whose antecedent is false holds vacuously and reports "pass";
forward failures carry a witness of the form ``t=<t> <tuple>``.

"For every t" is decided over the finitely many grade values actually
attained (see membership_image), because cuts are constant between
consecutive image values.  Subset-kind claims additionally probe one
threshold above the maximum grade, where the cut is empty and vacuously
prime or semiprime; ideal-kind claims skip empty cuts, since ideals are
nonempty by definition.

Claims T11..C18 are conditionals about the direct square: hypotheses on
(mu, sigma) are checked first and failures make the verdict "vacuous";
otherwise the conclusion is evaluated on the square, never masked by the
hypothesis check.  Hypotheses and conclusions reuse the fuzzy and crisp
predicates verbatim; nothing here re-implements a predicate.

The registry is closed: L13, T14, and the prime branch of C18 are checked
exactly as stated even though small instances refute them (the pairwise
min of two products does not commute with max), so expect honest "fail"
verdicts there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import structures as st
from .errors import CarrierMismatchError
from .fuzzy import (
    FuzzySubset,
    is_fuzzy_ideal,
    is_fuzzy_left_ideal,
    is_fuzzy_prime,
    is_fuzzy_right_ideal,
    is_fuzzy_semiprime,
    level_cut,
    membership_image,
)
from .product import direct_square, fuzzy_product
from .structures import FAIL, PASS, VACUOUS, OrderedGammaGroupoid, Verdict

LEVEL_KINDS = (
    "left",
    "right",
    "ideal",
    "prime-subset",
    "semiprime-subset",
    "prime-ideal",
    "semiprime-ideal",
)

LEVEL_CLAIM_BY_KIND = {
    "left": "T4",
    "right": "T5",
    "ideal": "T6",
    "prime-subset": "L7",
    "prime-ideal": "T8",
    "semiprime-subset": "L9",
    "semiprime-ideal": "T10",
}
KIND_BY_LEVEL_CLAIM = {c: k for k, c in LEVEL_CLAIM_BY_KIND.items()}

# Claims in registry (= report) order, ascending by number.
CLAIM_ORDER = (
    "T4", "T5", "T6", "L7", "T8", "L9", "T10",
    "T11", "T12", "L13", "T14", "L15", "T16", "C17", "C18",
)

PRODUCT_CLAIMS = ("T11", "T12", "L13", "T14", "L15", "T16", "C17", "C18")

# Sub-claims whose stated conclusion is refuted by small instances.
KNOWN_REFUTED = ("L13", "T14", "C18.prime")

CLAIM_SUMMARIES = {
    "T4": "fuzzy left ideal iff every attained-level cut is a left ideal",
    "T5": "fuzzy right ideal iff every attained-level cut is a right ideal",
    "T6": "fuzzy ideal iff every attained-level cut is an ideal",
    "L7": "fuzzy prime subset iff every level cut is a prime subset",
    "T8": "fuzzy prime ideal iff every attained-level cut is a prime ideal",
    "L9": "fuzzy semiprime subset iff every level cut is a semiprime subset",
    "T10": "fuzzy semiprime ideal iff every attained-level cut is a semiprime ideal",
    "T11": "product of fuzzy left (right) ideals is a fuzzy left (right) ideal of the square",
    "T12": "product of fuzzy ideals is a fuzzy ideal of the square",
    "L13": "product of fuzzy prime subsets is a fuzzy prime subset of the square",
    "T14": "product of fuzzy prime ideals is a fuzzy prime ideal of the square",
    "L15": "product of fuzzy semiprime subsets is a fuzzy semiprime subset of the square",
    "T16": "product of fuzzy semiprime ideals is a fuzzy semiprime ideal of the square",
    "C17": "nonempty cuts of a product of fuzzy left/right/two-sided ideals are ideals of that kind",
    "C18": "nonempty cuts of a product of fuzzy prime (semiprime) ideals are prime (semiprime) ideals",
}


@dataclass(frozen=True)
class ClaimReport:
    """All verdicts for one registry claim on one instance."""

    claim: str
    verdicts: tuple[Verdict, ...]

    def __post_init__(self):
        if not self.verdicts:
            raise ValueError("a claim report needs at least one verdict")

    @property
    def failed(self) -> bool:
        return any(v.failed for v in self.verdicts)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def _require_claim(claim: str) -> None:
    if claim not in CLAIM_ORDER:
        raise ValueError(f"unknown claim {claim!r}; registry: {', '.join(CLAIM_ORDER)}")


def _fuzzy_side(G, mu, kind) -> Verdict:
    if kind == "left":
        return is_fuzzy_left_ideal(G, mu)
    if kind == "right":
        return is_fuzzy_right_ideal(G, mu)
    if kind == "ideal":
        return is_fuzzy_ideal(G, mu)
    if kind == "prime-subset":
        return is_fuzzy_prime(G, mu)
    if kind == "semiprime-subset":
        return is_fuzzy_semiprime(G, mu)
    if kind == "prime-ideal":
        v = is_fuzzy_ideal(G, mu)
        return v if v.failed else is_fuzzy_prime(G, mu)
    if kind == "semiprime-ideal":
        v = is_fuzzy_ideal(G, mu)
        return v if v.failed else is_fuzzy_semiprime(G, mu)
    raise ValueError(f"unknown kind {kind!r}; kinds: {', '.join(LEVEL_KINDS)}")


def _crisp_side(G, cut, kind) -> Verdict:
    if kind == "left":
        return st.is_left_ideal(G, cut)
    if kind == "right":
        return st.is_right_ideal(G, cut)
    if kind == "ideal":
        return st.is_ideal(G, cut)
    if kind == "prime-subset":
        return st.is_prime_subset(G, cut)
    if kind == "semiprime-subset":
        return st.is_semiprime_subset(G, cut)
    if kind == "prime-ideal":
        v = st.is_ideal(G, cut)
        return v if v.failed else st.is_prime_subset(G, cut)
    if kind == "semiprime-ideal":
        v = st.is_ideal(G, cut)
        return v if v.failed else st.is_semiprime_subset(G, cut)
    raise ValueError(f"unknown kind {kind!r}")


def _thresholds(mu: FuzzySubset, kind: str) -> list[Fraction]:
    ts = membership_image(mu)
    # Cuts at attained values are nonempty.  Subset kinds also probe one
    # threshold above the maximum, where the cut is empty.
    if kind in ("prime-subset", "semiprime-subset") and ts[-1] < 1:
        ts = ts + [(ts[-1] + 1) / 2]
    return ts


def level_characterization(
    G: OrderedGammaGroupoid, mu: FuzzySubset, kind: str
) -> ClaimReport:
    """Check 'fuzzy <kind> iff every level cut satisfies the crisp <kind>'."""
    if kind not in LEVEL_KINDS:
        raise ValueError(f"unknown kind {kind!r}; kinds: {', '.join(LEVEL_KINDS)}")
    claim = LEVEL_CLAIM_BY_KIND[kind]
    fuzzy = _fuzzy_side(G, mu, kind)

    # Cuts at attained thresholds are nonempty; the extra subset-kind
    # threshold yields the empty cut, which is vacuously prime/semiprime.
    cut_failure: tuple[Fraction, str] | None = None
    for t in _thresholds(mu, kind):
        v = _crisp_side(G, level_cut(mu, t), kind)
        if v.failed:
            cut_failure = (t, v.witness)
            break

    if fuzzy.passed and cut_failure is not None:
        t, w = cut_failure
        forward = Verdict(f"{claim}.forward", FAIL, f"t={t} {w}")
    else:
        forward = Verdict(f"{claim}.forward", PASS)
    if cut_failure is None and fuzzy.failed:
        converse = Verdict(f"{claim}.converse", FAIL, fuzzy.witness)
    else:
        converse = Verdict(f"{claim}.converse", PASS)
    return ClaimReport(claim, (forward, converse))


def _hyp_left(G, f):
    return is_fuzzy_left_ideal(G, f).passed


def _hyp_right(G, f):
    return is_fuzzy_right_ideal(G, f).passed


def _hyp_ideal(G, f):
    return is_fuzzy_ideal(G, f).passed


def _hyp_prime_subset(G, f):
    return is_fuzzy_prime(G, f).passed


def _hyp_semiprime_subset(G, f):
    return is_fuzzy_semiprime(G, f).passed


def _hyp_prime_ideal(G, f):
    return is_fuzzy_ideal(G, f).passed and is_fuzzy_prime(G, f).passed


def _hyp_semiprime_ideal(G, f):
    return is_fuzzy_ideal(G, f).passed and is_fuzzy_semiprime(G, f).passed


def verify_product_claim(
    claim: str,
    G: OrderedGammaGroupoid,
    mu: FuzzySubset,
    sigma: FuzzySubset | None = None,
) -> ClaimReport:
    """Check one square claim (T11..C18) on (G, mu, sigma).

    sigma defaults to mu.  Sub-claims report separately: T11 and C17 split
    into left/right (C17 also two-sided), C18 into prime/semiprime.
    """
    _require_claim(claim)
    if claim not in PRODUCT_CLAIMS:
        raise ValueError(f"{claim} is a level claim; use level_characterization")
    if sigma is None:
        sigma = mu
    if set(mu.carrier) != set(G.carrier) or set(sigma.carrier) != set(G.carrier):
        raise CarrierMismatchError("fuzzy subsets must grade the structure's carrier")

    square = None
    prod = None

    def conclusion_env():
        nonlocal square, prod
        if square is None:
            square = direct_square(G)
            prod = fuzzy_product(mu, sigma)
        return square, prod

    def simple(token, hyp, fuzzy_checks, cut_checks=()):
        if not (hyp(G, mu) and hyp(G, sigma)):
            return Verdict(token, VACUOUS)
        sq, pr = conclusion_env()
        for check in fuzzy_checks:
            v = check(sq, pr)
            if v.failed:
                return Verdict(token, FAIL, v.witness)
        if cut_checks:
            for t in membership_image(pr):
                cut = level_cut(pr, t)
                for check in cut_checks:
                    v = check(sq, cut)
                    if v.failed:
                        return Verdict(token, FAIL, f"t={t} {v.witness}")
        return Verdict(token, PASS)

    if claim == "T11":
        verdicts = (
            simple("T11.left", _hyp_left, (is_fuzzy_left_ideal,)),
            simple("T11.right", _hyp_right, (is_fuzzy_right_ideal,)),
        )
    elif claim == "T12":
        verdicts = (simple("T12", _hyp_ideal, (is_fuzzy_ideal,)),)
    elif claim == "L13":
        verdicts = (simple("L13", _hyp_prime_subset, (is_fuzzy_prime,)),)
    elif claim == "T14":
        verdicts = (
            simple("T14", _hyp_prime_ideal, (is_fuzzy_ideal, is_fuzzy_prime)),
        )
    elif claim == "L15":
        verdicts = (simple("L15", _hyp_semiprime_subset, (is_fuzzy_semiprime,)),)
    elif claim == "T16":
        verdicts = (
            simple("T16", _hyp_semiprime_ideal, (is_fuzzy_ideal, is_fuzzy_semiprime)),
        )
    elif claim == "C17":
        verdicts = (
            simple("C17.left", _hyp_left, (), (st.is_left_ideal,)),
            simple("C17.right", _hyp_right, (), (st.is_right_ideal,)),
            simple("C17.ideal", _hyp_ideal, (), (st.is_ideal,)),
        )
    else:  # C18
        verdicts = (
            simple("C18.prime", _hyp_prime_ideal, (), (st.is_ideal, st.is_prime_subset)),
            simple(
                "C18.semiprime",
                _hyp_semiprime_ideal,
                (),
                (st.is_ideal, st.is_semiprime_subset),
            ),
        )
    return ClaimReport(claim, verdicts)


def verify_claim(
    claim: str,
    G: OrderedGammaGroupoid,
    mu: FuzzySubset,
    sigma: FuzzySubset | None = None,
) -> ClaimReport:
    """Dispatch one registry claim to the right checker."""
    _require_claim(claim)
    if claim in KIND_BY_LEVEL_CLAIM:
        return level_characterization(G, mu, KIND_BY_LEVEL_CLAIM[claim])
    return verify_product_claim(claim, G, mu, sigma)


def verify_all(
    G: OrderedGammaGroupoid,
    mu: FuzzySubset,
    sigma: FuzzySubset | None = None,
) -> list[ClaimReport]:
    """Run every registry claim on the instance, in registry order."""
    return [verify_claim(c, G, mu, sigma) for c in CLAIM_ORDER]
