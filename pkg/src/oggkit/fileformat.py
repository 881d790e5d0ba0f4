"""The "ogg 1" and "fuzzy 1" text formats.

Both are line-oriented: '#' starts a comment, tokens are whitespace
separated, blank lines are ignored.  parse -> serialize -> parse is the
identity on the parsed value.

Structure documents::

    ogg 1
    elements: a b
    gammas: g
    table g:            # one block per gamma; |M| rows of |M| names;
    a a                 # row i, column j is op(element_i, g, element_j)
    a b
    order:              # zero or more "x <= y" lines; reflexive pairs
    a <= b              # are implicit and the closure is taken
    end

Fuzzy documents::

    fuzzy 1
    over: a b           # must equal the structure's carrier when paired
    a 1                 # exactly one "element p/q" line per element;
    b 1/2               # grades are exact rationals, decimals rejected
    end

Grammar violations raise ParseError with the offending line number;
documents that parse but fail the structural axioms raise the usual
validation errors.
"""

from __future__ import annotations

from .errors import CarrierMismatchError, ParseError
from .fuzzy import FuzzySubset, parse_grade
from .structures import OrderedGammaGroupoid, validate_structure


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = body.split()
        if tokens:
            out.append((lineno, tokens))
    return out


class _Cursor:
    def __init__(self, text: str):
        self.rows = _lines(text)
        self.pos = 0

    def peek(self) -> tuple[int, list[str]] | None:
        return self.rows[self.pos] if self.pos < len(self.rows) else None

    def take(self, what: str) -> tuple[int, list[str]]:
        row = self.peek()
        if row is None:
            last = self.rows[-1][0] if self.rows else 1
            raise ParseError(last, f"unexpected end of document, expected {what}")
        self.pos += 1
        return row

    def expect_done(self) -> None:
        row = self.peek()
        if row is not None:
            raise ParseError(row[0], f"unexpected content after 'end': {' '.join(row[1])}")


def _expect_header(cur: _Cursor, name: str) -> None:
    lineno, tokens = cur.take(f"header '{name} 1'")
    if tokens != [name, "1"]:
        raise ParseError(lineno, f"expected header '{name} 1', got {' '.join(tokens)!r}")


def _expect_names(cur: _Cursor, keyword: str) -> tuple[int, list[str]]:
    lineno, tokens = cur.take(f"'{keyword}:' line")
    if tokens[0] != f"{keyword}:":
        raise ParseError(lineno, f"expected '{keyword}:', got {tokens[0]!r}")
    if len(tokens) == 1:
        raise ParseError(lineno, f"'{keyword}:' needs at least one name")
    return lineno, tokens[1:]


def parse_structure(text: str) -> OrderedGammaGroupoid:
    """Parse and validate an "ogg 1" document."""
    cur = _Cursor(text)
    _expect_header(cur, "ogg")
    eline, elements = _expect_names(cur, "elements")
    if len(set(elements)) != len(elements):
        raise ParseError(eline, "duplicate element name")
    gline, gammas = _expect_names(cur, "gammas")
    if len(set(gammas)) != len(gammas):
        raise ParseError(gline, "duplicate gamma name")
    known = set(elements)

    tables: dict[str, dict[tuple[str, str, str], str]] = {}
    while True:
        row = cur.peek()
        if row is None or row[1][0] != "table":
            break
        lineno, tokens = cur.take("table block")
        if len(tokens) != 2 or not tokens[1].endswith(":"):
            raise ParseError(lineno, "table block starts with 'table <gamma>:'")
        g = tokens[1][:-1]
        if g not in gammas:
            raise ParseError(lineno, f"table for unknown gamma {g!r}")
        if g in tables:
            raise ParseError(lineno, f"duplicate table for gamma {g!r}")
        block: dict[tuple[str, str, str], str] = {}
        for i, x in enumerate(elements):
            rline, rtokens = cur.take(f"row {i + 1} of table {g}")
            if rtokens[0] == "table" or rtokens == ["order:"] or rtokens == ["end"]:
                raise ParseError(rline, f"table {g}: missing row {i + 1}")
            if len(rtokens) != len(elements):
                raise ParseError(
                    rline, f"table {g}: row {i + 1} needs {len(elements)} entries"
                )
            for j, y in enumerate(elements):
                r = rtokens[j]
                if r not in known:
                    raise ParseError(rline, f"table {g}: unknown element {r!r} in row {i + 1}")
                block[(x, g, y)] = r
        tables[g] = block
    missing = [g for g in gammas if g not in tables]
    if missing:
        row = cur.peek()
        lineno = row[0] if row else (cur.rows[-1][0] if cur.rows else 1)
        raise ParseError(lineno, f"missing table for gamma {missing[0]!r}")

    lineno, tokens = cur.take("'order:' line")
    if tokens != ["order:"]:
        raise ParseError(lineno, f"expected 'order:', got {' '.join(tokens)!r}")
    pairs: list[tuple[str, str]] = []
    while True:
        lineno, tokens = cur.take("order pair or 'end'")
        if tokens == ["end"]:
            break
        if len(tokens) != 3 or tokens[1] != "<=":
            raise ParseError(lineno, f"expected '<x> <= <y>' or 'end', got {' '.join(tokens)!r}")
        x, y = tokens[0], tokens[2]
        if x not in known:
            raise ParseError(lineno, f"order pair uses unknown element {x!r}")
        if y not in known:
            raise ParseError(lineno, f"order pair uses unknown element {y!r}")
        pairs.append((x, y))
    cur.expect_done()

    table = {}
    for block in tables.values():
        table.update(block)
    return validate_structure(elements, gammas, table, pairs)


def serialize_structure(G: OrderedGammaGroupoid) -> str:
    """Canonical "ogg 1" text: tables in gamma order, strict order pairs
    sorted by carrier position."""
    out = ["ogg 1"]
    out.append("elements: " + " ".join(G.carrier))
    out.append("gammas: " + " ".join(G.gammas))
    for g in G.gammas:
        out.append(f"table {g}:")
        for x in G.carrier:
            out.append(" ".join(G.op[(x, g, y)] for y in G.carrier))
    out.append("order:")
    for a, b in G.strict_pairs():
        out.append(f"{a} <= {b}")
    out.append("end")
    return "\n".join(out) + "\n"


def parse_fuzzy(text: str, carrier=None) -> FuzzySubset:
    """Parse a "fuzzy 1" document.

    When ``carrier`` is given, the document's 'over:' list must equal it,
    in order; a mismatch raises CarrierMismatchError.
    """
    cur = _Cursor(text)
    _expect_header(cur, "fuzzy")
    oline, over = _expect_names(cur, "over")
    if len(set(over)) != len(over):
        raise ParseError(oline, "duplicate element in 'over:'")
    if carrier is not None and tuple(over) != tuple(carrier):
        raise CarrierMismatchError(
            f"'over:' lists {' '.join(over)} but the structure carrier is {' '.join(carrier)}"
        )
    grades: dict[str, object] = {}
    while True:
        lineno, tokens = cur.take("grade line or 'end'")
        if tokens == ["end"]:
            break
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected '<element> <p/q>', got {' '.join(tokens)!r}")
        name, raw = tokens
        if name not in set(over):
            raise ParseError(lineno, f"grade for unknown element {name!r}")
        if name in grades:
            raise ParseError(lineno, f"duplicate grade for {name!r}")
        try:
            grades[name] = parse_grade(raw)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    cur.expect_done()
    missing = [x for x in over if x not in grades]
    if missing:
        last = cur.rows[-1][0]
        raise ParseError(last, f"missing grade for {missing[0]!r}")
    return FuzzySubset((x, grades[x]) for x in over)


def serialize_fuzzy(mu: FuzzySubset) -> str:
    out = ["fuzzy 1"]
    out.append("over: " + " ".join(mu.carrier))
    for x, v in mu.items():
        out.append(f"{x} {v}")
    out.append("end")
    return "\n".join(out) + "\n"
