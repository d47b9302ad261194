"""Noncommutative propositional terms and the two Penrose theories.

Terms are built from generators with connectives ``;`` (sequential
conjunction, "and then"), ``+`` (disjunction), ``*`` (temporal dual)
and the constants ``true`` (the multiplicative unit e, distinct from
``top``), ``false`` and ``top``.

Generators come in two concrete notations for the same underlying
(level, tile) data:

* tile notation  ``<n L|`` / ``<n S|`` with temporal duals ``|n L>`` /
  ``|n S>`` -- observations on a tiling;
* sequence notation ``(s_n=0)`` / ``(s_n=1)`` -- assertions about a
  0/1 sequence, where bit 0 stands for tile L and bit 1 for tile S.
  Sequence-notation generators have no primitive dual; their reversal
  is written with ``*``.

``instantiate_pent`` emits the tiling theory's axiom schemas up to a
truncation level, ``instantiate_pens`` the sequence theory's, and
``rename_pent_to_pens`` is the structure-preserving translation from
the former to the latter.
"""

from __future__ import annotations

from dataclasses import dataclass


TILES = ("L", "S")


def bit_of_tile(tile: str) -> int:
    return 0 if tile == "L" else 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# Abstract syntax
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    """A primitive proposition: observation of tile ``tile`` at ``level``.

    ``daggered`` marks the temporal dual (only in tile notation);
    ``seq_notation`` selects the (s_n=b) spelling.
    """

    level: int
    tile: str
    daggered: bool = False
    seq_notation: bool = False

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"negative generator level: {self.level}")
        if self.tile not in TILES:
            raise ValueError(f"tile must be L or S, got {self.tile!r}")
        if self.daggered and self.seq_notation:
            raise ValueError("sequence-notation generators have no primitive dual")


class Term:
    """Base class for term nodes; all nodes are immutable and hashable."""

    __slots__ = ()


@dataclass(frozen=True)
class Gen(Term):
    gen: Generator


@dataclass(frozen=True)
class Unit(Term):
    pass


@dataclass(frozen=True)
class Bottom(Term):
    pass


@dataclass(frozen=True)
class Top(Term):
    pass


@dataclass(frozen=True)
class Mul(Term):
    """Sequential product of two or more factors; never nests a Mul."""

    factors: tuple[Term, ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise ValueError("Mul needs at least two factors")
        if any(isinstance(f, Mul) for f in self.factors):
            raise ValueError("Mul factors must be flattened")


@dataclass(frozen=True)
class Join(Term):
    """Disjunction of two or more distinct terms; never nests a Join."""

    terms: frozenset[Term]

    def __post_init__(self):
        if len(self.terms) < 2:
            raise ValueError("Join needs at least two distinct terms")
        if any(isinstance(t, Join) for t in self.terms):
            raise ValueError("Join members must be flattened")


@dataclass(frozen=True)
class Star(Term):
    arg: Term


UNIT = Unit()
BOTTOM = Bottom()
TOP = Top()


def gen(level: int, tile: str, daggered: bool = False, seq_notation: bool = False) -> Gen:
    return Gen(Generator(level, tile, daggered, seq_notation))


def mul(factors) -> Term:
    """Smart product: flattens nested products; empty product is ``true``."""
    flat: list[Term] = []
    for f in factors:
        if isinstance(f, Mul):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if not flat:
        return UNIT
    if len(flat) == 1:
        return flat[0]
    return Mul(tuple(flat))


def join(terms) -> Term:
    """Smart disjunction: flattens, deduplicates; empty join is ``false``."""
    flat: set[Term] = set()
    for t in terms:
        if isinstance(t, Join):
            flat |= t.terms
        else:
            flat.add(t)
    if not flat:
        return BOTTOM
    if len(flat) == 1:
        return next(iter(flat))
    return Join(frozenset(flat))


def star(t: Term) -> Term:
    return Star(t)


@dataclass(frozen=True)
class Sequent:
    """A named axiom ``lhs |- rhs``."""

    name: str
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{self.lhs_text()} |- {self.rhs_text()}"

    def lhs_text(self) -> str:
        return print_term(self.lhs)

    def rhs_text(self) -> str:
        return print_term(self.rhs)


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

# Precedence, loosest to tightest: join < mul < star < atom.


def print_term(t: Term) -> str:
    """Canonical concrete syntax; ``parse_term`` inverts it exactly."""
    return _print(t, 0)


def _print(t: Term, level: int) -> str:
    # level: 0 = join context, 1 = mul context, 2 = star/atom context
    if isinstance(t, Gen):
        g = t.gen
        if g.seq_notation:
            return f"(s_{g.level}={bit_of_tile(g.tile)})"
        if g.daggered:
            return f"|{g.level} {g.tile}>"
        return f"<{g.level} {g.tile}|"
    if isinstance(t, Unit):
        return "true"
    if isinstance(t, Bottom):
        return "false"
    if isinstance(t, Top):
        return "top"
    if isinstance(t, Star):
        return _print(t.arg, 2) + "*"
    if isinstance(t, Mul):
        text = " ; ".join(_print(f, 1) for f in t.factors)
        return f"({text})" if level >= 2 else text
    if isinstance(t, Join):
        text = " + ".join(sorted(_print(m, 1) for m in t.terms))
        return f"({text})" if level >= 1 else text
    raise TypeError(f"not a term: {t!r}")


def print_sequent(s: Sequent) -> str:
    return str(s)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    column: int


_SIMPLE = {
    "<": "langle",
    ">": "rangle",
    "(": "lparen",
    ")": "rparen",
    "+": "plus",
    ";": "semi",
    "*": "star",
    "=": "equals",
    "_": "underscore",
}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            col += 1
            i += 1
            continue
        if c == "|":
            if i + 1 < len(text) and text[i + 1] == "-":
                tokens.append(_Token("turnstile", "|-", line, col))
                i += 2
                col += 2
                continue
            tokens.append(_Token("pipe", "|", line, col))
            i += 1
            col += 1
            continue
        if c in _SIMPLE:
            tokens.append(_Token(_SIMPLE[c], c, line, col))
            i += 1
            col += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("nat", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(_Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {what}, got {tok.text or 'end of input'!r}", tok.line, tok.column)
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    def parse_term(self) -> Term:
        t = self.parse_join()
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.column)
        return t

    def parse_sequent(self) -> tuple[Term, Term]:
        lhs = self.parse_join()
        self.expect("turnstile", "'|-'")
        rhs = self.parse_join()
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.column)
        return lhs, rhs

    def parse_join(self) -> Term:
        parts = [self.parse_mul()]
        while self.peek().kind == "plus":
            self.next()
            parts.append(self.parse_mul())
        return join(parts) if len(parts) > 1 else parts[0]

    def parse_mul(self) -> Term:
        parts = [self.parse_star()]
        while self.peek().kind == "semi":
            self.next()
            parts.append(self.parse_star())
        return mul(parts) if len(parts) > 1 else parts[0]

    def parse_star(self) -> Term:
        t = self.parse_atom()
        while self.peek().kind == "star":
            self.next()
            t = Star(t)
        return t

    def parse_atom(self) -> Term:
        tok = self.peek()
        if tok.kind == "langle":
            return self.parse_forward_gen()
        if tok.kind == "pipe":
            return self.parse_backward_gen()
        if tok.kind == "lparen":
            if self.peek(1).kind == "ident" and self.peek(1).text == "s" and self.peek(2).kind in ("nat", "underscore"):
                return self.parse_seq_gen()
            self.next()
            t = self.parse_join()
            self.expect("rparen", "')'")
            return t
        if tok.kind == "ident":
            self.next()
            if tok.text in ("e", "true"):
                return UNIT
            if tok.text == "false":
                return BOTTOM
            if tok.text == "top":
                return TOP
            raise ParseError(f"unknown keyword {tok.text!r}", tok.line, tok.column)
        raise ParseError(f"expected a term, got {tok.text or 'end of input'!r}", tok.line, tok.column)

    def parse_level(self) -> int:
        tok = self.expect("nat", "a level (natural number)")
        return int(tok.text)

    def parse_tile(self) -> str:
        tok = self.expect("ident", "a tile letter L or S")
        if tok.text not in TILES:
            raise ParseError(f"tile must be L or S, got {tok.text!r}", tok.line, tok.column)
        return tok.text

    def parse_forward_gen(self) -> Term:
        self.expect("langle", "'<'")
        level = self.parse_level()
        tile = self.parse_tile()
        self.expect("pipe", "'|'")
        return gen(level, tile)

    def parse_backward_gen(self) -> Term:
        self.expect("pipe", "'|'")
        level = self.parse_level()
        tile = self.parse_tile()
        self.expect("rangle", "'>'")
        return gen(level, tile, daggered=True)

    def parse_seq_gen(self) -> Term:
        self.expect("lparen", "'('")
        self.expect("ident", "'s'")
        if self.peek().kind == "underscore":
            self.next()
        level = self.parse_level()
        self.expect("equals", "'='")
        tok = self.expect("nat", "a bit 0 or 1")
        if tok.text not in ("0", "1"):
            raise ParseError(f"bit must be 0 or 1, got {tok.text!r}", tok.line, tok.column)
        self.expect("rparen", "')'")
        return gen(level, TILES[int(tok.text)], seq_notation=True)


def parse_term(text: str) -> Term:
    """Parse a term; products are flattened and disjunctions deduplicated."""
    return _Parser(text).parse_term()


def parse_sequent(text: str, name: str = "") -> Sequent:
    lhs, rhs = _Parser(text).parse_sequent()
    return Sequent(name, lhs, rhs)


def parse_theory_file(text: str) -> list[Sequent]:
    """One named sequent per line, ``name : lhs |- rhs``; blank lines skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, body = line.partition(":")
        if not sep:
            raise ParseError("missing ':' between name and sequent", lineno, 1)
        out.append(parse_sequent(body, name=name.strip()))
    return out


# ---------------------------------------------------------------------------
# Admissible tile strings
# ---------------------------------------------------------------------------


def is_admissible_string(types: str) -> bool:
    """No S immediately followed by S (reading X_0, X_1, ...)."""
    return "SS" not in types and all(c in TILES for c in types)


def admissible_strings(length: int) -> list[str]:
    """All admissible strings of the given length, L-before-S order."""

    def grow(prefix: str) -> list[str]:
        if len(prefix) == length:
            return [prefix]
        result = grow(prefix + "L")
        if not prefix or prefix[-1] != "S":
            result += grow(prefix + "S")
        return result

    return grow("")


# ---------------------------------------------------------------------------
# Schema instantiation
# ---------------------------------------------------------------------------


def _pent_schemas(max_level: int):
    """Yield (name, lhs, rhs) for every schema instance below the truncation.

    Naming: plain schemas carry the level index (``C1_3``); the expansion
    schemas append the upper tile X then the lower tile Y (``E1_0_LS`` is
    E1 at n = 0 with X = L, Y = S); the involution schemas append their
    tile; completeness instances are keyed by the string X_0..X_n
    (``Cp_SL`` has X_0 = S, X_1 = L).  The two tile variants of D2 are
    joined on the left-hand side into a single named instance per level.
    """
    L = max_level
    for n in range(L):
        yield (f"C1_{n}", mul([gen(n, "L"), gen(n, "S", daggered=True)]), BOTTOM)
    for n in range(L - 1):
        yield (f"C2_{n}", gen(n, "S"), gen(n + 1, "L"))
    for n in range(L):
        yield (f"D1_{n}", UNIT, join([gen(n, "L"), gen(n, "S")]))
    for n in range(L - 1):
        lhs = join(
            [mul([gen(n + 1, X, daggered=True), gen(n + 1, X)]) for X in TILES]
        )
        yield (f"D2_{n}", lhs, join([gen(n, "S"), gen(n, "L")]))
    for n in range(L - 1):
        for X in TILES:
            for Y in TILES:
                up, down = gen(n + 1, X), gen(n, Y)
                down_dag = gen(n, Y, daggered=True)
                yield (f"E1_{n}_{X}{Y}", mul([down, up]), up)
                yield (f"E2_{n}_{X}{Y}", mul([up, down]), up)
                yield (f"E3_{n}_{X}{Y}", mul([down_dag, up]), up)
                yield (f"E4_{n}_{X}{Y}", mul([up, down_dag]), up)
    for n in range(L):
        for X in TILES:
            yield (f"I1_{n}_{X}", star(gen(n, X, daggered=True)), gen(n, X))
            yield (f"I2_{n}_{X}", star(gen(n, X)), gen(n, X, daggered=True))
    for length in range(1, L + 1):
        for t in admissible_strings(length):
            if t[-1] != "L":
                continue
            forward = [gen(k, t[k]) for k in reversed(range(length))]
            backward = [gen(k, t[k], daggered=True) for k in range(length)]
            yield (f"Cp_{t}", UNIT, mul(forward + backward))


def instantiate_pent(max_level: int) -> list[Sequent]:
    """Every tiling-theory axiom whose generators have level < max_level.

    Schemas mentioning level n + 1 stop at n = max_level - 2; completeness
    instances cover every admissible string of length <= max_level ending
    in L.
    """
    if max_level < 0:
        raise ValueError(f"negative truncation level: {max_level}")
    return [Sequent(name, lhs, rhs) for name, lhs, rhs in _pent_schemas(max_level)]


def rename_pent_to_pens(t: Term) -> Term:
    """Translate tile notation to sequence notation.

    ``<n L|`` becomes ``(s_n=0)``, ``<n S|`` becomes ``(s_n=1)``, and
    backward generators become starred forward ones; everything else is
    mapped structurally.
    """
    if isinstance(t, Gen):
        g = t.gen
        if g.seq_notation:
            return t
        renamed = gen(g.level, g.tile, seq_notation=True)
        return Star(renamed) if g.daggered else renamed
    if isinstance(t, (Unit, Bottom, Top)):
        return t
    if isinstance(t, Star):
        return Star(rename_pent_to_pens(t.arg))
    if isinstance(t, Mul):
        return mul([rename_pent_to_pens(f) for f in t.factors])
    if isinstance(t, Join):
        return join([rename_pent_to_pens(m) for m in t.terms])
    raise TypeError(f"not a term: {t!r}")


def instantiate_pens(max_level: int) -> list[Sequent]:
    """The sequence theory: the tiling theory under the notational renaming.

    Axiom names are shared with ``instantiate_pent``, making the two lists
    pointwise comparable.
    """
    return [
        Sequent(s.name, rename_pent_to_pens(s.lhs), rename_pent_to_pens(s.rhs))
        for s in instantiate_pent(max_level)
    ]
