"""Propositional formulas with two negations, two implications, and
modal operators.

Connective kinds: atom, bot, top, not (¬), conot (∼), and (∧), or (∨),
imp (→), coimp (←), box (□), dia (◇). The intuitionistic negation ¬
and the dual co-negation ∼ are distinct nodes on purpose: the
evaluators reject the fragment they do not interpret instead of
coercing one negation into the other.

Concrete syntax (ASCII aliases in parentheses): unary ¬ (!), ∼ (~),
□ ([]), ◇ (<>) bind tightest, then ∧ (&), then ∨ (|), then → (->,
right associative) and ← (<-, left associative) at the loosest level.
⊥ is _|_ and ⊤ is T. Atoms are lowercase identifiers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import FormulaSyntaxError

UNARY = ("not", "conot", "box", "dia")
BINARY = ("and", "or", "imp", "coimp")

_UNARY_ASCII = {"not": "!", "conot": "~", "box": "[]", "dia": "<>"}
_BINARY_ASCII = {"and": "&", "or": "|", "imp": "->", "coimp": "<-"}
_PREC = {"imp": 1, "coimp": 1, "or": 2, "and": 3}


@dataclass(frozen=True)
class Formula:
    kind: str
    name: Optional[str] = None
    args: tuple["Formula", ...] = ()

    def __str__(self) -> str:
        return _render(self, 0)

    def atoms(self) -> set[str]:
        if self.kind == "atom":
            return {self.name}
        out: set[str] = set()
        for a in self.args:
            out |= a.atoms()
        return out

    def connective_count(self) -> int:
        return (0 if self.kind in ("atom", "bot", "top") else 1) + sum(
            a.connective_count() for a in self.args
        )


BOT = Formula("bot")
TOP = Formula("top")


def atom(name: str) -> Formula:
    return Formula("atom", name=name)


def neg(f: Formula) -> Formula:
    return Formula("not", args=(f,))


def coneg(f: Formula) -> Formula:
    return Formula("conot", args=(f,))


def conj(a: Formula, b: Formula) -> Formula:
    return Formula("and", args=(a, b))


def disj(a: Formula, b: Formula) -> Formula:
    return Formula("or", args=(a, b))


def imp(a: Formula, b: Formula) -> Formula:
    return Formula("imp", args=(a, b))


def coimp(a: Formula, b: Formula) -> Formula:
    return Formula("coimp", args=(a, b))


def box(f: Formula) -> Formula:
    return Formula("box", args=(f,))


def dia(f: Formula) -> Formula:
    return Formula("dia", args=(f,))


def _render(f: Formula, parent_prec: int) -> str:
    if f.kind == "atom":
        return f.name
    if f.kind == "bot":
        return "_|_"
    if f.kind == "top":
        return "T"
    if f.kind in UNARY:
        return _UNARY_ASCII[f.kind] + _render(f.args[0], 4)
    prec = _PREC[f.kind]
    a, b = f.args
    if f.kind == "imp":
        # right associative; a bare coimp is fine on the left, an imp is not
        left = _render(a, 1 if a.kind == "coimp" else 2)
        right = _render(b, 1)
    elif f.kind == "coimp":
        # left associative
        left = _render(a, 1 if a.kind == "coimp" else 2)
        right = _render(b, 2)
    else:
        left, right = _render(a, prec), _render(b, prec + 1)
    text = f"{left} {_BINARY_ASCII[f.kind]} {right}"
    return f"({text})" if prec < parent_prec else text


# --- tokenizer -------------------------------------------------------------

_SYMBOLS = {
    "¬": "!",
    "∼": "~",
    "∧": "&",
    "∨": "|",
    "→": "->",
    "←": "<-",
    "□": "[]",
    "◇": "<>",
    "⊥": "_|_",
    "⊤": "T",
}


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((_SYMBOLS[ch], i))
            i += 1
            continue
        if text.startswith("_|_", i):
            tokens.append(("_|_", i))
            i += 3
            continue
        if text.startswith("->", i):
            tokens.append(("->", i))
            i += 2
            continue
        if text.startswith("<-", i):
            tokens.append(("<-", i))
            i += 2
            continue
        if text.startswith("[]", i):
            tokens.append(("[]", i))
            i += 2
            continue
        if text.startswith("<>", i):
            tokens.append(("<>", i))
            i += 2
            continue
        if ch in "!~&|()":
            tokens.append((ch, i))
            i += 1
            continue
        if ch == "T" and not (i + 1 < n and (text[i + 1].isalnum() or text[i + 1] == "_")):
            tokens.append(("T", i))
            i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append((("ident", text[i:j]), i))
            i = j
            continue
        raise FormulaSyntaxError(i, "a connective, atom, or parenthesis", ch)
    tokens.append(("end", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def here(self) -> int:
        return self.tokens[self.pos][1]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok[0]

    def expect(self, tok: str):
        if self.peek() != tok:
            raise FormulaSyntaxError(self.here(), repr(tok), self._found())
        self.take()

    def _found(self) -> str:
        tok = self.peek()
        if tok == "end":
            return "end of input"
        if isinstance(tok, tuple):
            return tok[1]
        return tok

    def parse(self) -> Formula:
        f = self.implication()
        if self.peek() != "end":
            raise FormulaSyntaxError(
                self.here(), "end of input or a binary connective", self._found()
            )
        return f

    def implication(self) -> Formula:
        left = self.disjunction()
        while True:
            tok = self.peek()
            if tok == "->":
                self.take()
                # right associative: recurse at the same level
                return imp(left, self.implication())
            if tok == "<-":
                self.take()
                left = coimp(left, self.disjunction())
                continue
            return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek() == "|":
            self.take()
            left = disj(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.peek() == "&":
            self.take()
            left = conj(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return neg(self.unary())
        if tok == "~":
            self.take()
            return coneg(self.unary())
        if tok == "[]":
            self.take()
            return box(self.unary())
        if tok == "<>":
            self.take()
            return dia(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok == "_|_":
            self.take()
            return BOT
        if tok == "T":
            self.take()
            return TOP
        if tok == "(":
            self.take()
            f = self.implication()
            self.expect(")")
            return f
        if isinstance(tok, tuple) and tok[0] == "ident":
            self.take()
            return atom(tok[1])
        raise FormulaSyntaxError(
            self.here(), "an atom, constant, unary connective, or '('", self._found()
        )


def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()


def enumerate_formulas(
    max_connectives: int,
    atoms: tuple[str, ...],
    with_constants: bool = True,
    kinds: tuple[str, ...] = ("not", "box", "dia", "and", "or", "imp"),
) -> Iterator[Formula]:
    """All formulas with up to max_connectives connective nodes over the
    given atoms, smallest first, deterministic order."""
    leaves: list[Formula] = [atom(a) for a in atoms]
    if with_constants:
        leaves += [BOT, TOP]
    levels: list[list[Formula]] = [leaves]
    yield from leaves
    for size in range(1, max_connectives + 1):
        level: list[Formula] = []
        for kind in kinds:
            if kind in UNARY:
                for f in levels[size - 1]:
                    level.append(Formula(kind, args=(f,)))
            else:
                for ls in range(size):
                    rs = size - 1 - ls
                    for a in levels[ls]:
                        for b in levels[rs]:
                            level.append(Formula(kind, args=(a, b)))
        levels.append(level)
        yield from level
