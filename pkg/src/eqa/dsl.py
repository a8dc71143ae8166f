"""Parse and print theories, terms, equations, models, and proof scripts.

The text formats are line-oriented but whitespace insensitive; `#` starts a
comment. Binary symbols are written infix with explicit parentheses, all
other symbols prefix. File extensions: .eqt (theories), .eqm (models),
.eqp (proof scripts). Names starting with `@` are reserved for machinery
(fresh constants) and rejected in user input unless explicitly allowed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .deduction import (
    Axiom,
    Justification,
    Proof,
    ProofLine,
    Refl,
    RESERVED_PREFIX,
    Subst,
    Sym,
    Trans,
)
from .models import Model
from .terms import (
    App,
    Equation,
    Signature,
    Substitution,
    Term,
    Theory,
    Var,
    validate_term,
    variable_index,
    variable_name,
)

__all__ = [
    "SourceSpan",
    "ParseError",
    "parse_theory",
    "print_theory",
    "parse_term",
    "parse_equation",
    "print_term",
    "print_equation",
    "parse_model",
    "print_model",
    "parse_proof",
    "print_proof",
]

# Structural keywords; these cannot name symbols, labels, or theories.
# Rule names (refl, sym, trans, subst) only occur after `by` and stay usable
# as ordinary names.
_KEYWORDS = {
    "theory", "sig", "axiom", "model", "over", "size", "const", "table",
    "proof", "by",
}

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<comment>\#[^\n]*)
    | (?P<int>\d+)
    | (?P<ident>@?[A-Za-z_][A-Za-z0-9_]*)
    | (?P<op>[*+.^~/\\<>|&?!-]+)
    | (?P<punct>[()\[\],;:=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class SourceSpan:
    line: int
    col_start: int
    col_end: int


@dataclass
class Token:
    kind: str  # "int" | "name" | "punct" | "eof"
    value: str
    span: SourceSpan


class ParseError(Exception):
    """A syntax or well-formedness error, with the offending source span."""

    def __init__(self, message: str, span: SourceSpan, expected: list[str] | None = None):
        super().__init__(message)
        self.message = message
        self.span = span
        self.expected = expected or []

    def __str__(self) -> str:
        loc = f"line {self.span.line}, column {self.span.col_start}"
        if self.expected:
            return f"{self.message} at {loc} (expected {', '.join(self.expected)})"
        return f"{self.message} at {loc}"


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            span = SourceSpan(line, col, col + 1)
            raise ParseError(f"unexpected character {text[pos]!r}", span)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            span = SourceSpan(line, col, col + len(value))
            if kind == "int":
                tokens.append(Token("int", value, span))
            elif kind in ("ident", "op"):
                tokens.append(Token("name", value, span))
            else:
                tokens.append(Token("punct", value, span))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    last = SourceSpan(line, col, col + 1)
    tokens.append(Token("eof", "", last))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_reserved: bool = False):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allow_reserved = allow_reserved

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str, expected: list[str] | None = None):
        raise ParseError(message, self.peek().span, expected)

    def expect_punct(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.value != value:
            self.fail(f"expected {value!r}, found {tok.value!r}", [repr(value)])
        return self.next()

    def expect_keyword(self, word: str) -> Token:
        tok = self.peek()
        if tok.kind != "name" or tok.value != word:
            self.fail(f"expected {word!r}, found {tok.value!r}", [repr(word)])
        return self.next()

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind != "int":
            self.fail(f"expected a number, found {tok.value!r}", ["integer"])
        return int(self.next().value)

    def expect_name(self, role: str) -> Token:
        tok = self.peek()
        if tok.kind != "name":
            self.fail(f"expected {role}, found {tok.value!r}", [role])
        if tok.value in _KEYWORDS:
            self.fail(f"{tok.value!r} is a reserved word and cannot be a {role}")
        if tok.value.startswith(RESERVED_PREFIX) and not self.allow_reserved:
            self.fail(f"names starting with {RESERVED_PREFIX!r} are reserved")
        return self.next()

    def at_keyword(self, *words: str) -> bool:
        tok = self.peek()
        return tok.kind == "name" and tok.value in words

    def expect_eof(self) -> None:
        tok = self.peek()
        if tok.kind != "eof":
            self.fail(f"unexpected trailing input {tok.value!r}", ["end of input"])

    # --- terms ---

    def parse_term(self, sig: Signature) -> Term:
        tok = self.peek()
        if tok.kind == "punct" and tok.value == "(":
            self.next()
            first = self.parse_term(sig)
            tok = self.peek()
            if tok.kind == "punct" and tok.value == ")":
                self.next()
                return first
            op = self.expect_name("binary symbol")
            if op.value not in sig:
                raise ParseError(f"unknown symbol {op.value!r}", op.span)
            if sig.arity(op.value) != 2:
                raise ParseError(
                    f"symbol {op.value!r} has arity {sig.arity(op.value)}, "
                    "infix form needs arity 2", op.span)
            second = self.parse_term(sig)
            self.expect_punct(")")
            return App(op.value, (first, second))
        name = self.expect_name("term")
        index = variable_index(name.value)
        if index is not None:
            return Var(index)
        if name.value not in sig:
            raise ParseError(f"unknown symbol {name.value!r}", name.span)
        arity = sig.arity(name.value)
        tok = self.peek()
        if tok.kind == "punct" and tok.value == "(":
            self.next()
            args = [self.parse_term(sig)]
            while True:
                tok = self.peek()
                if tok.kind == "punct" and tok.value == ",":
                    self.next()
                    args.append(self.parse_term(sig))
                    continue
                if tok.kind == "punct" and tok.value == ")":
                    self.next()
                    break
                self.fail(f"expected ',' or ')', found {tok.value!r}", ["','", "')'"])
            if len(args) != arity:
                raise ParseError(
                    f"symbol {name.value!r} has arity {arity}, got {len(args)} arguments",
                    name.span)
            return App(name.value, tuple(args))
        if arity != 0:
            raise ParseError(
                f"symbol {name.value!r} has arity {arity} and needs arguments",
                name.span)
        return App(name.value)

    def parse_equation(self, sig: Signature) -> Equation:
        lhs = self.parse_term(sig)
        self.expect_punct("=")
        rhs = self.parse_term(sig)
        return Equation(lhs, rhs)

    def parse_substitution(self, sig: Signature) -> Substitution:
        self.expect_punct("[")
        subst: Substitution = {}
        tok = self.peek()
        if tok.kind == "punct" and tok.value == "]":
            self.next()
            return subst
        while True:
            name = self.expect_name("variable")
            index = variable_index(name.value)
            if index is None:
                raise ParseError(f"{name.value!r} is not a variable", name.span)
            arrow = self.peek()
            if arrow.kind != "name" or arrow.value != "->":
                self.fail("expected '->' in substitution entry", ["'->'"])
            self.next()
            subst[index] = self.parse_term(sig)
            tok = self.peek()
            if tok.kind == "punct" and tok.value == ",":
                self.next()
                continue
            self.expect_punct("]")
            return subst


# --- public parse/print functions -------------------------------------------

def parse_term(text: str, sig: Signature, allow_reserved: bool = False) -> Term:
    p = _Parser(text, allow_reserved)
    term = p.parse_term(sig)
    p.expect_eof()
    return term


def parse_equation(text: str, sig: Signature, allow_reserved: bool = False) -> Equation:
    p = _Parser(text, allow_reserved)
    eq = p.parse_equation(sig)
    p.expect_eof()
    return eq


def print_term(term: Term) -> str:
    return str(term)


def print_equation(eq: Equation) -> str:
    return f"{print_term(eq.lhs)} = {print_term(eq.rhs)}"


def parse_theory(text: str, allow_reserved: bool = False) -> Theory:
    p = _Parser(text, allow_reserved)
    p.expect_keyword("theory")
    name = p.expect_name("theory name").value
    symbols: list[tuple[str, int]] = []
    seen: dict[str, SourceSpan] = {}
    p.expect_keyword("sig")
    while True:
        if p.at_keyword("sig"):
            p.next()
            continue
        if p.at_keyword("axiom") or p.peek().kind == "eof":
            break
        tok = p.expect_name("symbol name")
        if variable_index(tok.value) is not None:
            raise ParseError(f"symbol name {tok.value!r} collides with a variable", tok.span)
        if tok.value in seen:
            raise ParseError(f"duplicate symbol {tok.value!r}", tok.span)
        seen[tok.value] = tok.span
        p.expect_punct(":")
        arity = p.expect_int()
        p.expect_punct(";")
        symbols.append((tok.value, arity))
    if not symbols:
        p.fail("a theory needs at least one symbol declaration")
    sig = Signature(tuple(symbols))
    axioms: list[tuple[str, Equation]] = []
    labels: set[str] = set()
    while p.at_keyword("axiom"):
        p.next()
        label = p.expect_name("axiom label")
        if label.value in labels:
            raise ParseError(f"duplicate axiom label {label.value!r}", label.span)
        labels.add(label.value)
        p.expect_punct(":")
        eq = p.parse_equation(sig)
        p.expect_punct(";")
        axioms.append((label.value, eq))
    p.expect_eof()
    return Theory(name, sig, tuple(axioms))


def print_theory(t: Theory) -> str:
    lines = [f"theory {t.name}"]
    sig = " ".join(f"{name} : {arity};" for name, arity in t.signature.symbols)
    lines.append(f"sig {sig}")
    for label, eq in t.axioms:
        lines.append(f"axiom {label}: {print_equation(eq)};")
    return "\n".join(lines) + "\n"


def _parse_table_rows(p: _Parser, depth: int) -> list:
    """Nested bracketed integers of uniform depth; depth 0 is a bare int."""
    if depth == 0:
        return p.expect_int()
    p.expect_punct("[")
    rows = []
    while True:
        rows.append(_parse_table_rows(p, depth - 1))
        tok = p.peek()
        if tok.kind == "punct" and tok.value == ",":
            p.next()
            continue
        p.expect_punct("]")
        return rows


def _flatten_table(rows, size: int, arity: int, span: SourceSpan) -> list[int]:
    if arity == 0:
        return [rows]
    if len(rows) != size:
        raise ParseError(f"expected {size} rows, found {len(rows)}", span)
    out: list[int] = []
    for row in rows:
        out.extend(_flatten_table(row, size, arity - 1, span))
    return out


def parse_model(text: str, signature: Signature | None = None,
                allow_reserved: bool = False) -> Model:
    """Parse a .eqm model file. With a signature, symbol names and arities are
    validated against it and tables are ordered to match; otherwise the
    signature is inferred from the file (tables' nesting gives arities)."""
    p = _Parser(text, allow_reserved)
    p.expect_keyword("model")
    name = p.expect_name("model name").value
    p.expect_keyword("over")
    theory_name = p.expect_name("theory name").value
    p.expect_keyword("size")
    size = p.expect_int()
    if size < 1:
        p.fail("size must be >= 1")
    entries: dict[str, tuple[int, tuple[int, ...]]] = {}
    order: list[str] = []
    while True:
        if p.at_keyword("const"):
            p.next()
            sym = p.expect_name("constant name")
            p.expect_punct("=")
            value = p.expect_int()
            p.expect_punct(";")
            if sym.value in entries:
                raise ParseError(f"duplicate entry for {sym.value!r}", sym.span)
            entries[sym.value] = (0, (value,))
            order.append(sym.value)
        elif p.at_keyword("table"):
            p.next()
            sym = p.expect_name("symbol name")
            p.expect_punct("=")
            start = p.peek().span
            depth = 0
            probe = p.pos
            while p.tokens[probe].kind == "punct" and p.tokens[probe].value == "[":
                depth += 1
                probe += 1
            if depth == 0:
                p.fail("expected a bracketed table")
            rows = _parse_table_rows(p, depth)
            p.expect_punct(";")
            flat = _flatten_table(rows, size, depth, start)
            if sym.value in entries:
                raise ParseError(f"duplicate entry for {sym.value!r}", sym.span)
            entries[sym.value] = (depth, tuple(flat))
            order.append(sym.value)
        else:
            break
    p.expect_eof()
    if signature is None:
        signature = Signature(tuple((sym, entries[sym][0]) for sym in order))
    else:
        declared = dict(signature.symbols)
        for sym, (arity, _) in entries.items():
            if sym not in declared:
                raise ParseError(f"symbol {sym!r} is not in the signature",
                                 SourceSpan(1, 1, 2))
            if declared[sym] != arity:
                raise ParseError(
                    f"table for {sym!r} has arity {arity}, signature says {declared[sym]}",
                    SourceSpan(1, 1, 2))
        missing = [sym for sym in declared if sym not in entries]
        if missing:
            raise ParseError(f"missing tables for {', '.join(sorted(missing))}",
                             SourceSpan(1, 1, 2))
    tables = tuple(entries[sym][1] for sym, _ in signature.symbols)
    try:
        return Model(signature, size, tables, name=name, theory_name=theory_name)
    except ValueError as exc:
        raise ParseError(str(exc), SourceSpan(1, 1, 2)) from exc


def _format_table(table: tuple[int, ...], size: int, arity: int) -> str:
    if arity == 0:
        return str(table[0])
    if arity == 1:
        return "[" + ", ".join(str(v) for v in table) + "]"
    step = size ** (arity - 1)
    chunks = [table[i * step:(i + 1) * step] for i in range(size)]
    return "[" + ", ".join(_format_table(tuple(c), size, arity - 1) for c in chunks) + "]"


def print_model(m: Model) -> str:
    lines = [f"model {m.name} over {m.theory_name or 'unknown'} size {m.size}"]
    for (sym, arity), table in zip(m.signature.symbols, m.tables):
        if arity == 0:
            lines.append(f"const {sym} = {table[0]};")
        else:
            lines.append(f"table {sym} = {_format_table(table, m.size, arity)};")
    return "\n".join(lines) + "\n"


def _print_substitution(subst: Substitution) -> str:
    entries = ", ".join(
        f"{variable_name(v)} -> {print_term(subst[v])}" for v in sorted(subst)
    )
    return f"[{entries}]"


def parse_proof(text: str, theory: Theory, allow_reserved: bool = False) -> Proof:
    """Parse a .eqp proof script against a theory; line numbers are 1-based
    and must be consecutive."""
    p = _Parser(text, allow_reserved)
    p.expect_keyword("proof")
    p.expect_keyword("over")
    name = p.expect_name("theory name")
    if name.value != theory.name:
        raise ParseError(
            f"proof is over theory {name.value!r}, expected {theory.name!r}", name.span)
    sig = theory.signature
    lines: list[ProofLine] = []

    def line_ref() -> int:
        tok = p.peek()
        number = p.expect_int()
        if not 1 <= number <= len(lines):
            raise ParseError(f"line reference {number} is out of range", tok.span)
        return number - 1

    while p.peek().kind == "int":
        tok = p.next()
        if int(tok.value) != len(lines) + 1:
            raise ParseError(
                f"line numbered {tok.value}, expected {len(lines) + 1}", tok.span)
        p.expect_punct(":")
        eq = p.parse_equation(sig)
        p.expect_keyword("by")
        rule_tok = p.peek()
        rule: Justification
        if p.at_keyword("axiom"):
            p.next()
            label = p.expect_name("axiom label").value
            subst: Substitution = {}
            tok2 = p.peek()
            if tok2.kind == "punct" and tok2.value == "[":
                subst = p.parse_substitution(sig)
            rule = Axiom(label, subst)
        elif p.at_keyword("refl"):
            p.next()
            rule = Refl(eq.lhs)
        elif p.at_keyword("sym"):
            p.next()
            rule = Sym(line_ref())
        elif p.at_keyword("trans"):
            p.next()
            rule = Trans(line_ref(), line_ref())
        elif p.at_keyword("subst"):
            p.next()
            template = line_ref()
            p.expect_punct("[")
            args = []
            tok2 = p.peek()
            if not (tok2.kind == "punct" and tok2.value == "]"):
                args.append(line_ref())
                while p.peek().kind == "punct" and p.peek().value == ",":
                    p.next()
                    args.append(line_ref())
            p.expect_punct("]")
            subst = p.parse_substitution(sig)
            rule = Subst(template, tuple(args), subst)
        else:
            raise ParseError(
                f"unknown rule {rule_tok.value!r}", rule_tok.span,
                ["axiom", "refl", "sym", "trans", "subst"])
        p.expect_punct(";")
        lines.append(ProofLine(eq, rule))
    p.expect_eof()
    if not lines:
        p.fail("a proof needs at least one line")
    return Proof(theory.name, lines)


def print_proof(p: Proof) -> str:
    out = [f"proof over {p.theory_name}"]
    for i, line in enumerate(p.lines, start=1):
        rule = line.rule
        if isinstance(rule, Axiom):
            just = f"axiom {rule.label}"
            if rule.subst:
                just += f" {_print_substitution(rule.subst)}"
        elif isinstance(rule, Refl):
            just = "refl"
        elif isinstance(rule, Sym):
            just = f"sym {rule.line + 1}"
        elif isinstance(rule, Trans):
            just = f"trans {rule.left + 1} {rule.right + 1}"
        else:
            assert isinstance(rule, Subst)
            args = ", ".join(str(a + 1) for a in rule.args)
            just = f"subst {rule.template + 1} [{args}] {_print_substitution(rule.subst)}"
        out.append(f"{i}: {print_equation(line.equation)} by {just};")
    return "\n".join(out) + "\n"
