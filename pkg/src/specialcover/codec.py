"""Text grammar for formulas and decompositions.

ASCII rendering of the alphabet::

    x1.<bin>   positive literal        x0.<bin>   negative literal
    e.<bin>    element                 ~          empty component
    *          clause / pair separator #          component separator
    ,          list separator inside a clause or component

``<bin>`` is a canonical binary index: MSB first, no leading zeros, >= 1.

    formula   := clause ('*' clause)*
    clause    := literal (',' literal)*
    decomp    := pair ('*' pair)*
    pair      := component '#' component
    component := '~' | element (',' element)*

Both recognizers compute n and m from the content. A formula must use
exactly the variable indices 1..n; element indices are arbitrary positive
integers.
"""
from __future__ import annotations

from typing import NamedTuple, Optional, Union

from .core import BlockPair, CnfFormula, Decomposition

LITERAL = "literal"
ELEMENT = "element"
STAR = "star"
BOX = "box"
EPSILON = "epsilon"
COMMA = "comma"

EPSILON_TEXT = "~"
SENTINEL = "~#~"

Text = Union[str, bytes, bytearray]


class ParseError(ValueError):
    """Input rejected by a recognizer.

    ``rule`` names the failed condition; ``check`` is the recognizer stage
    (``"i"`` structure, ``"ii"`` per-clause or element-count, ``"iii"``
    variable-count or per-pair conditions); ``offset`` is a byte offset.
    """

    def __init__(self, message: str, offset: int, rule: str, check: str):
        super().__init__(f"{message} (offset {offset})")
        self.reason = message
        self.offset = offset
        self.rule = rule
        self.check = check


class Token(NamedTuple):
    kind: str
    offset: int
    text: str
    polarity: Optional[int] = None
    index: Optional[int] = None


_SINGLE = {"*": STAR, "#": BOX, "~": EPSILON, ",": COMMA}


def _as_str(text: Text) -> str:
    if isinstance(text, (bytes, bytearray)):
        for pos, byte in enumerate(text):
            if byte > 127:
                raise ParseError(f"non-ASCII byte 0x{byte:02x}", pos, "grammar", "i")
        return bytes(text).decode("ascii")
    for pos, ch in enumerate(text):
        if ord(ch) > 127:
            raise ParseError(f"non-ASCII character {ch!r}", pos, "grammar", "i")
    return text


def _read_index(s: str, pos: int, start: int) -> tuple[int, int]:
    end = pos
    while end < len(s) and s[end] in "01":
        end += 1
    if end == pos:
        raise ParseError("expected binary index", pos, "grammar", "i")
    if s[pos] == "0":
        raise ParseError("binary index has a leading zero", pos, "grammar", "i")
    return int(s[pos:end], 2), end


def tokenize(text: Text) -> list[Token]:
    s = _as_str(text)
    out: list[Token] = []
    pos = 0
    while pos < len(s):
        ch = s[pos]
        start = pos
        if ch in _SINGLE:
            out.append(Token(_SINGLE[ch], pos, ch))
            pos += 1
        elif ch == "x":
            if pos + 2 >= len(s) or s[pos + 1] not in "01" or s[pos + 2] != ".":
                raise ParseError("malformed literal, expected x0. or x1.", pos, "grammar", "i")
            index, pos = _read_index(s, pos + 3, start)
            out.append(Token(LITERAL, start, s[start:pos], int(s[start + 1]), index))
        elif ch == "e":
            if pos + 1 >= len(s) or s[pos + 1] != ".":
                raise ParseError("malformed element, expected e.", pos, "grammar", "i")
            index, pos = _read_index(s, pos + 2, start)
            out.append(Token(ELEMENT, start, s[start:pos], None, index))
        else:
            raise ParseError(f"unexpected character {ch!r}", pos, "grammar", "i")
    return out


def _end_offset(tokens: list[Token]) -> int:
    if not tokens:
        return 0
    last = tokens[-1]
    return last.offset + len(last.text)


def _split(tokens: list[Token], sep: str) -> list[tuple[int, list[Token]]]:
    """Split on ``sep`` tokens; each chunk carries the offset where it starts."""
    chunks: list[tuple[int, list[Token]]] = []
    current: list[Token] = []
    start = 0
    for tok in tokens:
        if tok.kind == sep:
            chunks.append((start, current))
            current = []
            start = tok.offset + 1
        else:
            current.append(tok)
    chunks.append((start, current))
    return chunks


def _comma_list(chunk: list[Token], item: str, start: int, what: str) -> list[Token]:
    """Items of an ``item (',' item)*`` list; raises on any other shape."""
    items = []
    expect_item = True
    for tok in chunk:
        if expect_item:
            if tok.kind != item:
                raise ParseError(f"expected {item} in {what}, got {tok.text!r}", tok.offset, "grammar", "i")
            items.append(tok)
        elif tok.kind != COMMA:
            raise ParseError(f"expected ',' in {what}, got {tok.text!r}", tok.offset, "grammar", "i")
        expect_item = not expect_item
    if expect_item and chunk:
        raise ParseError(f"trailing ',' in {what}", chunk[-1].offset, "grammar", "i")
    return items


def parse_cnf(text: Text) -> CnfFormula:
    """Recognize a formula string and return the formula it encodes."""
    tokens = tokenize(text)
    raw = []
    for k, (start, chunk) in enumerate(_split(tokens, STAR)):
        if not chunk:
            raise ParseError(f"clause {k + 1} is empty", start, "empty-clause", "ii")
        raw.append(_comma_list(chunk, LITERAL, start, f"clause {k + 1}"))

    indices: dict[int, Token] = {}
    clauses = []
    for k, lits in enumerate(raw):
        seen: dict[int, Token] = {}
        for tok in lits:
            prev = seen.get(tok.index)
            if prev is not None:
                if prev.polarity == tok.polarity:
                    raise ParseError(
                        f"clause {k + 1} repeats literal {tok.text}", tok.offset, "duplicate-literal", "ii"
                    )
                raise ParseError(
                    f"clause {k + 1} contains x{tok.index} and its negation",
                    tok.offset,
                    "complementary-literals",
                    "ii",
                )
            seen[tok.index] = tok
            indices.setdefault(tok.index, tok)
        clauses.append(tuple(t.index if t.polarity else -t.index for t in lits))

    n = len(indices)
    for index in sorted(indices):
        if index > n:
            tok = indices[index]
            raise ParseError(
                f"variable index {index} exceeds the {n} distinct indices used",
                tok.offset,
                "variable-count",
                "iii",
            )
    return CnfFormula(tuple(clauses), n)


def parse_decomp(text: Text) -> Decomposition:
    """Recognize a decomposition string and return the decomposition it encodes."""
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty input, expected at least one pair", 0, "grammar", "i")
    parsed = []
    for k, (start, chunk) in enumerate(_split(tokens, STAR)):
        boxes = [t for t in chunk if t.kind == BOX]
        if len(boxes) != 1:
            where = boxes[1].offset if len(boxes) > 1 else (chunk[0].offset if chunk else start)
            raise ParseError(f"pair {k + 1} needs exactly one '#'", where, "grammar", "i")
        cut = chunk.index(boxes[0])
        sides = []
        for part, part_start in ((chunk[:cut], start), (chunk[cut + 1:], boxes[0].offset + 1)):
            if not part:
                raise ParseError(f"pair {k + 1} has a missing component", part_start, "grammar", "i")
            if part[0].kind == EPSILON:
                if len(part) != 1:
                    raise ParseError(
                        f"pair {k + 1}: '~' must stand alone", part[1].offset, "grammar", "i"
                    )
                sides.append(None)
            else:
                sides.append(_comma_list(part, ELEMENT, part_start, f"pair {k + 1}"))
        parsed.append((k, boxes[0], sides))

    pairs = []
    for k, box, sides in parsed:
        comps = []
        for side in sides:
            members: dict[int, Token] = {}
            for tok in side or ():
                if tok.index in members:
                    raise ParseError(
                        f"pair {k + 1}: element {tok.text} repeated in one component",
                        tok.offset,
                        "duplicate-element",
                        "iii",
                    )
                members[tok.index] = tok
            comps.append(members)
        if sides[0] is None and sides[1] is None:
            raise ParseError(f"pair {k + 1}: both components empty", box.offset, "double-epsilon", "iii")
        shared = comps[0].keys() & comps[1].keys()
        if shared:
            tok = comps[1][min(shared, key=lambda i: comps[1][i].offset)]
            raise ParseError(f"pair {k + 1}: components not disjoint", tok.offset, "overlap", "iii")
        pairs.append(BlockPair(frozenset(comps[0]), frozenset(comps[1])))
    return Decomposition.from_pairs(pairs)


def _bin(i: int) -> str:
    return format(i, "b")


def serialize_cnf(f: CnfFormula) -> str:
    return "*".join(
        ",".join(f"x{1 if l > 0 else 0}.{_bin(abs(l))}" for l in sorted(c, key=abs)) for c in f.clauses
    )


def _component(members) -> str:
    if not members:
        return EPSILON_TEXT
    return ",".join(f"e.{_bin(e)}" for e in sorted(members))


def serialize_decomp(d: Decomposition) -> str:
    return "*".join(f"{_component(p.first)}#{_component(p.second)}" for p in d.pairs)


def measure_length(text: Text) -> int:
    """Token length: literals, elements, '~', '#' and '*'; commas are not counted."""
    return sum(1 for t in tokenize(text) if t.kind != COMMA)


def detect_kind(text: Text) -> Optional[str]:
    """``"cnf"`` for a leading literal, ``"decomp"`` for a leading element or '~'."""
    s = text.decode("ascii", "replace") if isinstance(text, (bytes, bytearray)) else text
    if s.startswith("x"):
        return "cnf"
    if s.startswith(("e", "~")):
        return "decomp"
    return None
