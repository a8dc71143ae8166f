"""Signatures, terms, equations, theories, and substitution.

All values here are immutable after construction and compare structurally,
so they are safe to share between concurrent workers and to use as dict or
set keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Signature",
    "Var",
    "App",
    "Term",
    "Equation",
    "Theory",
    "Substitution",
    "variable_name",
    "variable_index",
    "free_variables",
    "substitute",
    "compose",
    "is_balanced",
    "term_metrics",
    "term_key",
    "subterm_positions",
    "subterm_at",
    "replace_at",
    "match",
    "validate_term",
]

_VARIABLE_RE = re.compile(r"^(?:[xyz]|x\d+)$")
_ALIASES = {"x": 0, "y": 1, "z": 2}


def variable_name(index: int) -> str:
    """Display name of a variable: x, y, z for 0, 1, 2, then x3, x4, ..."""
    if index < 3:
        return "xyz"[index]
    return f"x{index}"


def variable_index(name: str) -> int | None:
    """Inverse of variable_name; also accepts x0, x1, x2. None if not a variable."""
    if not _VARIABLE_RE.match(name):
        return None
    if name in _ALIASES:
        return _ALIASES[name]
    return int(name[1:])


@dataclass(frozen=True)
class Signature:
    """An ordered list of (name, arity) function symbols."""

    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for name, arity in self.symbols:
            if not name:
                raise ValueError("symbol names must be non-empty")
            if name in seen:
                raise ValueError(f"duplicate symbol {name!r}")
            if variable_index(name) is not None:
                raise ValueError(f"symbol name {name!r} collides with a variable name")
            if arity < 0:
                raise ValueError(f"negative arity for {name!r}")
            seen.add(name)

    def arity(self, name: str) -> int:
        for sym, k in self.symbols:
            if sym == name:
                return k
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(sym == name for sym, _ in self.symbols)

    def constants(self) -> tuple[str, ...]:
        return tuple(name for name, k in self.symbols if k == 0)

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.symbols)


@dataclass(frozen=True)
class Var:
    """A variable, identified by a non-negative index."""

    index: int

    def __str__(self) -> str:
        return variable_name(self.index)


@dataclass(frozen=True)
class App:
    """Application of a function symbol; constants are App with no arguments."""

    symbol: str
    args: tuple["Term", ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.symbol
        if len(self.args) == 2:
            return f"({self.args[0]} {self.symbol} {self.args[1]})"
        inner = ", ".join(str(a) for a in self.args)
        return f"{self.symbol}({inner})"


Term = Var | App

# A substitution is a finite map from variable index to Term; unmapped
# variables are fixed.
Substitution = dict[int, "Term"]


def free_variables(term: Term) -> set[int]:
    """The set of variable indices occurring in term."""
    out: set[int] = set()
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            out.add(t.index)
        else:
            stack.extend(t.args)
    return out


def substitute(term: Term, s: Substitution) -> Term:
    """Simultaneously replace each Var(i) by s[i]; unmapped variables are fixed."""
    if isinstance(term, Var):
        return s.get(term.index, term)
    if not term.args:
        return term
    return App(term.symbol, tuple(substitute(a, s) for a in term.args))


def compose(s1: Substitution, s2: Substitution) -> Substitution:
    """The substitution applying s1 then s2: images of s1 get s2 applied,
    and variables unmapped by s1 take their s2 image."""
    out = {i: substitute(t, s2) for i, t in s1.items()}
    for i, t in s2.items():
        out.setdefault(i, t)
    return out


def term_metrics(term: Term) -> tuple[int, int]:
    """(size, depth): node count and maximum nesting. Atoms are (1, 0)."""
    if isinstance(term, Var) or not term.args:
        return 1, 0
    sizes, depths = zip(*(term_metrics(a) for a in term.args))
    return 1 + sum(sizes), 1 + max(depths)


def term_size(term: Term) -> int:
    size = 0
    stack = [term]
    while stack:
        t = stack.pop()
        size += 1
        if isinstance(t, App):
            stack.extend(t.args)
    return size


def term_key(term: Term):
    """A total order key: variables before applications, then by index,
    symbol name, and arguments."""
    if isinstance(term, Var):
        return (0, term.index, ())
    return (1, term.symbol, tuple(term_key(a) for a in term.args))


def subterm_positions(term: Term):
    """All positions (paths of argument indices) in pre-order."""
    yield ()
    if isinstance(term, App):
        for i, arg in enumerate(term.args):
            for pos in subterm_positions(arg):
                yield (i,) + pos


def subterm_at(term: Term, pos: tuple[int, ...]) -> Term:
    for i in pos:
        assert isinstance(term, App)
        term = term.args[i]
    return term


def replace_at(term: Term, pos: tuple[int, ...], new: Term) -> Term:
    if not pos:
        return new
    assert isinstance(term, App)
    i = pos[0]
    args = list(term.args)
    args[i] = replace_at(args[i], pos[1:], new)
    return App(term.symbol, tuple(args))


def match(pattern: Term, subject: Term, binding: Substitution | None = None) -> Substitution | None:
    """Match pattern against subject, binding pattern variables. Returns the
    (unique) substitution s with substitute(pattern, s) == subject, or None."""
    if binding is None:
        binding = {}
    if isinstance(pattern, Var):
        bound = binding.get(pattern.index)
        if bound is None:
            binding[pattern.index] = subject
            return binding
        return binding if bound == subject else None
    if isinstance(subject, Var) or pattern.symbol != subject.symbol:
        return None
    if len(pattern.args) != len(subject.args):
        return None
    for p, s in zip(pattern.args, subject.args):
        if match(p, s, binding) is None:
            return None
    return binding


def validate_term(term: Term, sig: Signature) -> None:
    """Raise ValueError unless every App uses a declared symbol at its arity."""
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            continue
        if t.symbol not in sig:
            raise ValueError(f"unknown symbol {t.symbol!r}")
        if sig.arity(t.symbol) != len(t.args):
            raise ValueError(
                f"symbol {t.symbol!r} has arity {sig.arity(t.symbol)}, "
                f"applied to {len(t.args)} arguments"
            )
        stack.extend(t.args)


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"

    def swapped(self) -> "Equation":
        return Equation(self.rhs, self.lhs)


def is_balanced(eq: Equation) -> bool:
    """True iff both sides mention exactly the same variables."""
    return free_variables(eq.lhs) == free_variables(eq.rhs)


@dataclass(frozen=True)
class Theory:
    """A named signature plus an ordered list of labelled axioms."""

    name: str
    signature: Signature
    axioms: tuple[tuple[str, Equation], ...]

    def __post_init__(self) -> None:
        labels = set()
        for label, eq in self.axioms:
            if label in labels:
                raise ValueError(f"duplicate axiom label {label!r}")
            labels.add(label)
            validate_term(eq.lhs, self.signature)
            validate_term(eq.rhs, self.signature)

    def axiom(self, label: str) -> Equation:
        for lab, eq in self.axioms:
            if lab == label:
                return eq
        raise KeyError(label)

    def axiom_labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.axioms)
