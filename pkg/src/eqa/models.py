"""Finite models: evaluation, satisfaction, enumeration, clone closure,
and equationally derived orders.

Models are immutable; enumeration is depth-first with constraint propagation
and emits models in a fixed deterministic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .terms import (
    App,
    Equation,
    Signature,
    Term,
    Theory,
    Var,
    free_variables,
    validate_term,
)

__all__ = [
    "Model",
    "OrderRelation",
    "OperationTable",
    "CapExceededError",
    "evaluate",
    "satisfies",
    "satisfies_theory",
    "enumerate_models",
    "find_countermodel",
    "clone_closure",
    "is_malcev_table",
    "order_from_implication",
    "order_from_term",
    "check_galois",
    "canonical_form",
]


class CapExceededError(RuntimeError):
    """Raised when clone_closure exceeds its size cap before reaching a fixpoint."""


@dataclass(frozen=True)
class Model:
    """A finite carrier {0..size-1} with one total operation table per symbol.

    Tables are flat, row-major: a k-ary symbol's table has size**k entries and
    the entry for arguments (a1..ak) sits at index sum(ai * size**(k-1-i)).
    """

    signature: Signature
    size: int
    tables: tuple[tuple[int, ...], ...]
    name: str = field(default="M", compare=False)
    theory_name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("carrier size must be >= 1")
        if len(self.tables) != len(self.signature.symbols):
            raise ValueError("one table required per symbol")
        for (sym, k), table in zip(self.signature.symbols, self.tables):
            if len(table) != self.size**k:
                raise ValueError(f"table for {sym!r} must have {self.size ** k} entries")
            if any(not 0 <= v < self.size for v in table):
                raise ValueError(f"table for {sym!r} has out-of-range entries")

    def table(self, symbol: str) -> tuple[int, ...]:
        for (sym, _), table in zip(self.signature.symbols, self.tables):
            if sym == symbol:
                return table
        raise KeyError(symbol)

    def apply(self, symbol: str, args: tuple[int, ...]) -> int:
        table = self.table(symbol)
        idx = 0
        for a in args:
            idx = idx * self.size + a
        return table[idx]

    def constant(self, symbol: str) -> int:
        return self.table(symbol)[0]


def evaluate(m: Model, term: Term, assignment: dict[int, int]) -> int:
    """Evaluate a term under an assignment of variables to carrier elements."""
    if isinstance(term, Var):
        try:
            return assignment[term.index]
        except KeyError:
            raise ValueError(f"unbound variable {term}") from None
    idx = 0
    for a in term.args:
        idx = idx * m.size + evaluate(m, a, assignment)
    return m.table(term.symbol)[idx]


def satisfies(m: Model, eq: Equation) -> tuple[bool, dict[int, int] | None]:
    """Check an equation under every assignment. On failure, the witness is
    the lexicographically least failing assignment (by sorted variable)."""
    variables = sorted(free_variables(eq.lhs) | free_variables(eq.rhs))
    for values in itertools.product(range(m.size), repeat=len(variables)):
        assignment = dict(zip(variables, values))
        if evaluate(m, eq.lhs, assignment) != evaluate(m, eq.rhs, assignment):
            return False, assignment
    return True, None


def satisfies_theory(m: Model, t: Theory) -> bool:
    return all(satisfies(m, eq)[0] for _, eq in t.axioms)


def _symbol_order(t: Theory) -> list[int]:
    """Assignment order for enumeration: constants first, then non-constant
    symbols by first post-order occurrence in the axioms (inner operations
    before the operations applied to their results, which is what makes
    constraint propagation bite early), then any remaining symbols."""
    names = [name for name, _ in t.signature.symbols]
    order: list[str] = [name for name, k in t.signature.symbols if k == 0]

    def visit(term: Term) -> None:
        if isinstance(term, App):
            for a in term.args:
                visit(a)
            if term.args and term.symbol not in order:
                order.append(term.symbol)

    for _, eq in t.axioms:
        visit(eq.lhs)
        visit(eq.rhs)
    for name, _ in t.signature.symbols:
        if name not in order:
            order.append(name)
    return [names.index(name) for name in order]


def _eval_partial(tables: list[list[int | None]], size: int, term: Term,
                  sym_index: dict[str, int], assignment: tuple[int, ...]) -> int | None:
    if isinstance(term, Var):
        return assignment[term.index]
    idx = 0
    for a in term.args:
        v = _eval_partial(tables, size, a, sym_index, assignment)
        if v is None:
            return None
        idx = idx * size + v
    return tables[sym_index[term.symbol]][idx]


def enumerate_models(t: Theory, size: int, iso_filter: bool = False):
    """Yield exactly the size-n models of t, in a deterministic order.

    Depth-first over undecided table cells; after each cell assignment every
    axiom instance whose subterm evaluations are fully determined is checked,
    and contradictions prune the branch. With iso_filter, one representative
    per isomorphism class is emitted (the first found in enumeration order).
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    sig = t.signature
    sym_index = {name: i for i, (name, _) in enumerate(sig.symbols)}
    tables: list[list[int | None]] = [[None] * (size ** k) for _, k in sig.symbols]

    cells: list[tuple[int, int]] = []
    for si in _symbol_order(t):
        _, k = sig.symbols[si]
        cells.extend((si, j) for j in range(size ** k))

    instances: list[tuple[Term, Term, tuple[int, ...]]] = []
    for _, eq in t.axioms:
        variables = sorted(free_variables(eq.lhs) | free_variables(eq.rhs))
        top = (variables[-1] + 1) if variables else 0
        for values in itertools.product(range(size), repeat=len(variables)):
            assignment = [0] * top
            for v, val in zip(variables, values):
                assignment[v] = val
            instances.append((eq.lhs, eq.rhs, tuple(assignment)))

    # pending[i] is False once instance i is verified; the trail records the
    # depth at which it was settled so backtracking can reopen it.
    pending = [True] * len(instances)
    settled_at: list[list[int]] = [[] for _ in cells]

    def consistent(depth: int) -> bool:
        for i, (lhs, rhs, assignment) in enumerate(instances):
            if not pending[i]:
                continue
            lv = _eval_partial(tables, size, lhs, sym_index, assignment)
            if lv is None:
                continue
            rv = _eval_partial(tables, size, rhs, sym_index, assignment)
            if rv is None:
                continue
            if lv != rv:
                return False
            pending[i] = False
            settled_at[depth].append(i)
        return True

    seen_canonical: set[tuple] = set()

    def rec(depth: int):
        if depth == len(cells):
            m = Model(sig, size, tuple(tuple(tab) for tab in tables),
                      name=f"{t.name}@{size}", theory_name=t.name)
            if iso_filter:
                canon = canonical_form(m)
                if canon in seen_canonical:
                    return
                seen_canonical.add(canon)
            yield m
            return
        si, j = cells[depth]
        for value in range(size):
            tables[si][j] = value
            if consistent(depth):
                yield from rec(depth + 1)
            for i in settled_at[depth]:
                pending[i] = True
            settled_at[depth].clear()
        tables[si][j] = None

    yield from rec(0)


def canonical_form(m: Model) -> tuple:
    """Minimal table serialization over all carrier permutations; equal
    canonical forms characterize isomorphic models over the same signature."""
    best = None
    arities = [k for _, k in m.signature.symbols]
    for perm in itertools.permutations(range(m.size)):
        serial = []
        for (name, k), table in zip(m.signature.symbols, m.tables):
            permuted = [0] * len(table)
            for idx, value in enumerate(table):
                digits = []
                rest = idx
                for _ in range(k):
                    rest, d = divmod(rest, m.size)
                    digits.append(d)
                digits.reverse()
                new_idx = 0
                for d in digits:
                    new_idx = new_idx * m.size + perm[d]
                permuted[new_idx] = perm[value]
            serial.append(tuple(permuted))
        serial_t = tuple(serial)
        if best is None or serial_t < best:
            best = serial_t
    return (m.size, best)


def find_countermodel(t: Theory, eq: Equation, max_size: int):
    """Smallest-carrier, enumeration-first model of t falsifying eq, with the
    witness assignment; None if every model up to max_size satisfies eq."""
    validate_term(eq.lhs, t.signature)
    validate_term(eq.rhs, t.signature)
    for size in range(1, max_size + 1):
        for m in enumerate_models(t, size):
            ok, witness = satisfies(m, eq)
            if not ok:
                return m, witness
    return None


@dataclass(frozen=True)
class OperationTable:
    """A k-ary operation on a carrier, flat row-major like Model tables."""

    arity: int
    table: tuple[int, ...]


def clone_closure(m: Model, arity: int, cap: int = 4096) -> list[OperationTable]:
    """The least set of arity-k operations on m's carrier containing the k
    projections and the constant functions of m's constants, closed under
    composition with m's basic operations. Equals {M(t) : t a k-variable term}.

    Raises CapExceededError if the closure grows past cap before the fixpoint.
    """
    if arity < 1:
        raise ValueError("arity must be >= 1")
    n = m.size
    points = list(itertools.product(range(n), repeat=arity))

    members: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def add(table: tuple[int, ...]) -> bool:
        if table in seen:
            return False
        if len(members) >= cap:
            raise CapExceededError(f"clone closure exceeded cap {cap}")
        seen.add(table)
        members.append(table)
        return True

    for i in range(arity):
        add(tuple(p[i] for p in points))
    for name in m.signature.constants():
        add(tuple(m.constant(name) for _ in points))

    basic = [(name, k, m.table(name)) for name, k in m.signature.symbols if k > 0]
    frontier = list(members)
    while frontier:
        new_frontier: list[tuple[int, ...]] = []
        for name, k, table in basic:
            for combo in itertools.product(members, repeat=k):
                if not any(g in frontier for g in combo):
                    continue
                composed = []
                for pi in range(len(points)):
                    idx = 0
                    for g in combo:
                        idx = idx * n + g[pi]
                    composed.append(table[idx])
                if add(tuple(composed)):
                    new_frontier.append(tuple(composed))
        frontier = new_frontier
    return [OperationTable(arity, t) for t in members]


def is_malcev_table(op: OperationTable, size: int) -> bool:
    """True iff a ternary table satisfies p(a,b,b)=a and p(a,a,b)=b for all a,b."""
    if op.arity != 3:
        return False
    n = size
    for a in range(n):
        for b in range(n):
            if op.table[(a * n + b) * n + b] != a:
                return False
            if op.table[(a * n + a) * n + b] != b:
                return False
    return True


@dataclass(frozen=True)
class OrderRelation:
    """An explicit binary relation on a carrier, with its computed flags."""

    size: int
    matrix: tuple[tuple[bool, ...], ...]
    reflexive: bool
    antisymmetric: bool
    transitive: bool
    discrete: bool

    @classmethod
    def from_matrix(cls, matrix: tuple[tuple[bool, ...], ...]) -> "OrderRelation":
        n = len(matrix)
        reflexive = all(matrix[a][a] for a in range(n))
        antisymmetric = all(
            not (matrix[a][b] and matrix[b][a])
            for a in range(n) for b in range(n) if a != b
        )
        transitive = all(
            matrix[a][c]
            for a in range(n) for b in range(n) for c in range(n)
            if matrix[a][b] and matrix[b][c]
        )
        discrete = all(matrix[a][b] == (a == b) for a in range(n) for b in range(n))
        return cls(n, matrix, reflexive, antisymmetric, transitive, discrete)

    def is_partial_order(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive

    def related(self, a: int, b: int) -> bool:
        return self.matrix[a][b]


def order_from_implication(m: Model) -> OrderRelation:
    """The derived relation a <= b iff a -> b = e."""
    if "->" not in m.signature or "e" not in m.signature:
        raise ValueError("model signature must provide -> (arity 2) and e")
    e = m.constant("e")
    arrow = m.table("->")
    n = m.size
    matrix = tuple(
        tuple(arrow[a * n + b] == e for b in range(n)) for a in range(n)
    )
    return OrderRelation.from_matrix(matrix)


def order_from_term(m: Model, term: Term) -> OrderRelation:
    """The relation a <= b iff term(a, b) = b, for a binary term in x, y."""
    n = m.size
    matrix = tuple(
        tuple(evaluate(m, term, {0: a, 1: b}) == b for b in range(n))
        for a in range(n)
    )
    return OrderRelation.from_matrix(matrix)


def check_galois(m: Model) -> tuple[bool, tuple[int, int, int] | None]:
    """Check x*y <= z iff y <= x->z over all triples, with <= derived from ->.
    Returns (True, None) or (False, witness triple)."""
    order = order_from_implication(m)
    star = m.table("*")
    arrow = m.table("->")
    n = m.size
    for x in range(n):
        for y in range(n):
            for z in range(n):
                left = order.related(star[x * n + y], z)
                right = order.related(y, arrow[x * n + z])
                if left != right:
                    return False, (x, y, z)
    return True, None
