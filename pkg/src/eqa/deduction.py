"""The deduction relation T |- phi: checkable proof objects, an independent
proof checker, a bounded prover, and quasi-equation entailment via fresh
constants.

The checker enforces exactly five rules (axiom instantiation, reflexivity,
symmetry, transitivity, and the combined substitution-congruence rule). The
prover searches the "equal terms" graph: neighbors of a term arise from
matching either side of any axiom at any subterm position and replacing it
with the substituted other side. The frontier is ordered by (term size,
structural order), both directions of the goal are explored, and the first
meeting path wins, which makes results deterministic. The internal rewrite
trace is then compiled into the five-rule proof format.
"""

from __future__ import annotations

import heapq
import itertools
import time
from dataclasses import dataclass, field

from .terms import (
    App,
    Equation,
    Signature,
    Substitution,
    Term,
    Theory,
    Var,
    free_variables,
    match,
    replace_at,
    substitute,
    subterm_at,
    subterm_positions,
    term_key,
    term_size,
    validate_term,
)

__all__ = [
    "Axiom",
    "Refl",
    "Sym",
    "Trans",
    "Subst",
    "ProofLine",
    "Proof",
    "CheckResult",
    "Budget",
    "DEFAULT_BUDGET",
    "ProveResult",
    "check_proof",
    "prove",
    "prove_with_lemmas",
    "close_quasi",
    "entails_quasi",
    "RESERVED_PREFIX",
]

RESERVED_PREFIX = "@"

# Rules needing more pool instantiations than this are skipped by the prover;
# the checker is not affected.
_MAX_UNBOUND = 3


# --- proof objects ---------------------------------------------------------

@dataclass
class Axiom:
    """Instantiates axiom `label` with substitution `subst` (both sides)."""

    label: str
    subst: Substitution


@dataclass
class Refl:
    term: Term


@dataclass
class Sym:
    line: int


@dataclass
class Trans:
    left: int
    right: int


@dataclass
class Subst:
    """The combined substitution-congruence rule: line `template` proves
    t1 ~ t2; for the k-th variable v of sorted(subst), args[k] proves
    s_k ~ s'_k with subst[v] == s_k; the conclusion is t1 with each v
    replaced by s_k on the left and s'_k on the right. Template variables
    outside subst stay fixed."""

    template: int
    args: tuple[int, ...]
    subst: Substitution


Justification = Axiom | Refl | Sym | Trans | Subst


@dataclass
class ProofLine:
    equation: Equation
    rule: Justification


@dataclass
class Proof:
    theory_name: str
    lines: list[ProofLine]

    def conclusion(self) -> Equation:
        return self.lines[-1].equation


@dataclass
class CheckResult:
    ok: bool
    line: int | None = None  # 1-based, as printed in proof scripts
    reason: str | None = None


def _well_formed(eq: Equation, sig: Signature) -> str | None:
    try:
        validate_term(eq.lhs, sig)
        validate_term(eq.rhs, sig)
    except ValueError as exc:
        return str(exc)
    return None


def check_proof(t: Theory, p: Proof) -> CheckResult:
    """Validate every line of p against t; Invalid pinpoints the first bad line."""
    lines = p.lines
    for i, line in enumerate(lines):
        bad = _well_formed(line.equation, t.signature)
        if bad is not None:
            return CheckResult(False, i + 1, f"ill-formed equation: {bad}")
        rule = line.rule
        if isinstance(rule, Axiom):
            try:
                ax = t.axiom(rule.label)
            except KeyError:
                return CheckResult(False, i + 1, f"unknown axiom {rule.label!r}")
            expected = Equation(substitute(ax.lhs, rule.subst), substitute(ax.rhs, rule.subst))
            if line.equation != expected:
                return CheckResult(False, i + 1, "equation is not that axiom instance")
        elif isinstance(rule, Refl):
            if line.equation.lhs != rule.term or line.equation.rhs != rule.term:
                return CheckResult(False, i + 1, "reflexivity line must be t = t")
        elif isinstance(rule, Sym):
            if not 0 <= rule.line < i:
                return CheckResult(False, i + 1, "sym references a later or missing line")
            if line.equation != lines[rule.line].equation.swapped():
                return CheckResult(False, i + 1, "sym conclusion does not swap the cited line")
        elif isinstance(rule, Trans):
            if not (0 <= rule.left < i and 0 <= rule.right < i):
                return CheckResult(False, i + 1, "trans references a later or missing line")
            a, b = lines[rule.left].equation, lines[rule.right].equation
            if a.rhs != b.lhs:
                return CheckResult(False, i + 1, "trans middle terms differ")
            if line.equation != Equation(a.lhs, b.rhs):
                return CheckResult(False, i + 1, "trans conclusion mismatch")
        elif isinstance(rule, Subst):
            if not 0 <= rule.template < i:
                return CheckResult(False, i + 1, "subst references a later or missing template")
            if any(not 0 <= a < i for a in rule.args):
                return CheckResult(False, i + 1, "subst argument line out of range")
            domain = sorted(rule.subst)
            if len(domain) != len(rule.args):
                return CheckResult(False, i + 1, "subst needs one argument line per mapped variable")
            left_map: Substitution = {}
            right_map: Substitution = {}
            for v, arg_index in zip(domain, rule.args):
                arg_eq = lines[arg_index].equation
                if rule.subst[v] != arg_eq.lhs:
                    return CheckResult(
                        False, i + 1,
                        f"substitution image for {Var(v)} is not the cited line's left side",
                    )
                left_map[v] = arg_eq.lhs
                right_map[v] = arg_eq.rhs
            template = lines[rule.template].equation
            expected = Equation(
                substitute(template.lhs, left_map),
                substitute(template.rhs, right_map),
            )
            if line.equation != expected:
                return CheckResult(False, i + 1, "subst conclusion mismatch")
        else:  # pragma: no cover - defensive
            return CheckResult(False, i + 1, f"unknown rule {rule!r}")
    return CheckResult(True)


# --- bounded proof search --------------------------------------------------

@dataclass
class Budget:
    """Caps for the semi-decidable search; all dimensions must be positive."""

    max_nodes: int = 200_000
    max_term_size: int = 25
    max_seconds: float = 30.0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_term_size <= 0 or self.max_seconds <= 0:
            raise ValueError("budget dimensions must be positive")


DEFAULT_BUDGET = Budget()


@dataclass
class ProveResult:
    """Proved carries a checkable proof; Unknown never asserts non-provability."""

    status: str  # "proved" | "unknown"
    theory: Theory
    goal: Equation
    proof: Proof | None = None
    reason: str | None = None
    nodes_explored: int = 0

    @property
    def proved(self) -> bool:
        return self.status == "proved"

    def to_json(self) -> dict:
        from .dsl import print_proof

        record: dict = {"status": self.status, "nodes_explored": self.nodes_explored}
        if self.reason is not None:
            record["reason"] = self.reason
        if self.proof is not None:
            record["proof"] = print_proof(self.proof)
        return record


@dataclass(frozen=True)
class _Step:
    position: tuple[int, ...]
    label: str
    forward: bool
    subst: tuple[tuple[int, Term], ...]

    def mapping(self) -> Substitution:
        return dict(self.subst)

    def flipped(self) -> "_Step":
        return _Step(self.position, self.label, not self.forward, self.subst)


def _var_counts(term: Term) -> dict[int, int]:
    counts: dict[int, int] = {}
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            counts[t.index] = counts.get(t.index, 0) + 1
        else:
            stack.extend(t.args)
    return counts


def _rewrite_rules(t: Theory):
    """(label, src, dst, forward, dst var counts, dst size) per direction;
    the size data lets the search cost a rewrite before building it."""
    rules = []
    for label, eq in t.axioms:
        sides = [(eq.lhs, eq.rhs, True)]
        if eq.lhs != eq.rhs:
            sides.append((eq.rhs, eq.lhs, False))
        for src, dst, forward in sides:
            rules.append((label, src, dst, forward, _var_counts(dst), term_size(dst)))
    return rules


def _candidate_pool(t: Theory, goal: Equation) -> list[tuple[Term, int]]:
    """Instantiation candidates for axiom variables not bound by matching:
    goal subterms plus the signature constants, with their sizes."""
    pool: set[Term] = {App(c) for c in t.signature.constants()}
    for side in (goal.lhs, goal.rhs):
        for pos in subterm_positions(side):
            pool.add(subterm_at(side, pos))
    ordered = sorted(pool, key=lambda p: (term_size(p), str(p)))
    return [(p, term_size(p)) for p in ordered]


def _positions_with_sizes(term: Term) -> list[tuple[tuple[int, ...], Term, int]]:
    """Pre-order (position, subterm, size) triples in one traversal."""
    out: list = []

    def walk(t: Term, pos: tuple[int, ...]) -> int:
        entry = [pos, t, 1]
        out.append(entry)
        size = 1
        if isinstance(t, App):
            for i, arg in enumerate(t.args):
                size += walk(arg, pos + (i,))
        entry[2] = size
        return size

    walk(term, ())
    return [(pos, sub, size) for pos, sub, size in out]


def _neighbors(term: Term, term_total: int, rules, pool: list[tuple[Term, int]],
               cap: int):
    """Rewrite results one axiom step away, with the size cap applied
    arithmetically before any rewritten term is materialized."""
    for pos, sub, sub_size in _positions_with_sizes(term):
        budget_base = term_total - sub_size
        for label, src, dst, forward, dst_counts, dst_size in rules:
            binding = match(src, sub, {})
            if binding is None:
                continue
            missing = sorted(set(dst_counts) - set(binding))
            if len(missing) > _MAX_UNBOUND:
                continue
            bound_size = dst_size
            for v, image in binding.items():
                count = dst_counts.get(v)
                if count:
                    bound_size += count * (term_size(image) - 1)
            for combo in itertools.product(pool, repeat=len(missing)):
                new_sub_size = bound_size
                for v, (_, psize) in zip(missing, combo):
                    new_sub_size += dst_counts[v] * (psize - 1)
                if budget_base + new_sub_size > cap:
                    continue
                s = dict(binding)
                s.update((v, p) for v, (p, _) in zip(missing, combo))
                new_sub = substitute(dst, s)
                new_term = replace_at(term, pos, new_sub)
                step = _Step(pos, label, forward, tuple(sorted(s.items())))
                yield new_term, budget_base + new_sub_size, step


def prove(t: Theory, goal: Equation, b: Budget = DEFAULT_BUDGET) -> ProveResult:
    """Search for a proof of goal from t within the budget."""
    err = _well_formed(goal, t.signature)
    if err is not None:
        raise ValueError(f"goal is not well-formed over the theory signature: {err}")

    if goal.lhs == goal.rhs:
        proof = Proof(t.name, [ProofLine(goal, Refl(goal.lhs))])
        return _finish(t, goal, proof, 0)

    rules = _rewrite_rules(t)
    pool = _candidate_pool(t, goal)
    cap = max(b.max_term_size, term_size(goal.lhs), term_size(goal.rhs))
    deadline = time.monotonic() + b.max_seconds

    # visited[side][term] = (parent, step) with step rewriting parent to term.
    # The frontier is ordered by (growing steps used, term size, printed
    # form): counting size-increasing steps first keeps the search from
    # drowning in small padded terms, and the printed form is the
    # lexicographic tie-break within a size.
    visited = ({goal.lhs: None}, {goal.rhs: None})
    heaps = (
        [(0, term_size(goal.lhs), str(goal.lhs), goal.lhs)],
        [(0, term_size(goal.rhs), str(goal.rhs), goal.rhs)],
    )
    pops = [0, 0]
    nodes = 0

    def build(meet: Term) -> Proof:
        return _compile_proof(t, goal, visited, meet)

    while heaps[0] or heaps[1]:
        if time.monotonic() > deadline:
            return ProveResult("unknown", t, goal, reason="max_seconds", nodes_explored=nodes)
        if nodes >= b.max_nodes:
            return ProveResult("unknown", t, goal, reason="max_nodes", nodes_explored=nodes)
        # Alternate sides by pop count so neither direction starves.
        if not heaps[1]:
            side = 0
        elif not heaps[0]:
            side = 1
        else:
            side = 0 if pops[0] <= pops[1] else 1
        grows, size, _, term = heapq.heappop(heaps[side])
        pops[side] += 1
        nodes += 1
        for new_term, new_size, step in _neighbors(term, size, rules, pool, cap):
            if new_term in visited[side]:
                continue
            visited[side][new_term] = (term, step)
            if new_term in visited[1 - side]:
                proof = build(new_term)
                return _finish(t, goal, proof, nodes)
            new_grows = grows + (1 if new_size > size else 0)
            heapq.heappush(heaps[side], (new_grows, new_size, str(new_term), new_term))
    return ProveResult("unknown", t, goal, reason="max_term_size", nodes_explored=nodes)


def _finish(t: Theory, goal: Equation, proof: Proof, nodes: int) -> ProveResult:
    check = check_proof(t, proof)
    if not check.ok:  # pragma: no cover - internal consistency guard
        raise RuntimeError(f"prover produced an invalid proof: line {check.line}: {check.reason}")
    if proof.conclusion() != goal:  # pragma: no cover
        raise RuntimeError("prover conclusion differs from the goal")
    return ProveResult("proved", t, goal, proof=proof, nodes_explored=nodes)


def _path_from(visited: dict, end: Term) -> list[tuple[Term, _Step, Term]]:
    """Steps from the side's root to end, following parent links backwards."""
    steps = []
    cur = end
    while visited[cur] is not None:
        parent, step = visited[cur]
        steps.append((parent, step, cur))
        cur = parent
    steps.reverse()
    return steps


def _max_var_index(t: Theory, goal: Equation, steps) -> int:
    top = -1
    for _, eq in t.axioms:
        for side in (eq.lhs, eq.rhs):
            vs = free_variables(side)
            if vs:
                top = max(top, max(vs))
    for side in (goal.lhs, goal.rhs):
        vs = free_variables(side)
        if vs:
            top = max(top, max(vs))
    for _, step, _ in steps:
        for _, image in step.subst:
            vs = free_variables(image)
            if vs:
                top = max(top, max(vs))
    return top


def _compile_proof(t: Theory, goal: Equation, visited, meet: Term) -> Proof:
    """Turn the meeting rewrite trace into five-rule proof lines: each rewrite
    step becomes an axiom instance, an optional sym, and (off the root
    position) a reflexivity template plus one congruence substitution; steps
    are then chained with transitivity."""
    forward = _path_from(visited[0], meet)
    backward = _path_from(visited[1], meet)
    steps = forward + [(child, step.flipped(), parent) for parent, step, child in reversed(backward)]

    fresh = _max_var_index(t, goal, steps) + 1
    lines: list[ProofLine] = []

    def add(eq: Equation, rule: Justification) -> int:
        lines.append(ProofLine(eq, rule))
        return len(lines) - 1

    chain_idx: int | None = None
    for parent, step, child in steps:
        ax = t.axiom(step.label)
        mapping = step.mapping()
        ax_eq = Equation(substitute(ax.lhs, mapping), substitute(ax.rhs, mapping))
        use_idx = add(ax_eq, Axiom(step.label, mapping))
        if not step.forward:
            use_idx = add(ax_eq.swapped(), Sym(use_idx))
        if step.position:
            hole = Var(fresh)
            template = replace_at(parent, step.position, hole)
            template_idx = add(Equation(template, template), Refl(template))
            src = subterm_at(parent, step.position)
            step_idx = add(
                Equation(parent, child),
                Subst(template_idx, (use_idx,), {fresh: src}),
            )
        else:
            step_idx = use_idx
        if chain_idx is None:
            chain_idx = step_idx
        else:
            head = lines[chain_idx].equation
            chain_idx = add(Equation(head.lhs, lines[step_idx].equation.rhs), Trans(chain_idx, step_idx))
    assert chain_idx is not None
    if lines[chain_idx].equation != goal:  # pragma: no cover
        raise RuntimeError("compiled proof does not conclude the goal")
    return Proof(t.name, lines)


# --- proving with previously proved lemmas -----------------------------------

def _shift_rule(rule: Justification, offset: int) -> Justification:
    if isinstance(rule, Sym):
        return Sym(rule.line + offset)
    if isinstance(rule, Trans):
        return Trans(rule.left + offset, rule.right + offset)
    if isinstance(rule, Subst):
        return Subst(rule.template + offset,
                     tuple(a + offset for a in rule.args), dict(rule.subst))
    return rule


def _remap_rule(rule: Justification, remap: dict[int, int]) -> Justification:
    if isinstance(rule, Sym):
        return Sym(remap[rule.line])
    if isinstance(rule, Trans):
        return Trans(remap[rule.left], remap[rule.right])
    if isinstance(rule, Subst):
        return Subst(remap[rule.template],
                     tuple(remap[a] for a in rule.args), dict(rule.subst))
    return rule


def _inline_lemmas(proof: Proof, base: Theory,
                   lemma_map: dict[str, tuple[Equation, Proof]]) -> Proof:
    """Replace every use of a lemma axiom by the lemma's own proof lines plus
    one substitution line for the instance; the result is a proof over base."""
    new_lines: list[ProofLine] = []
    remap: dict[int, int] = {}
    emitted: dict[str, int] = {}

    def emit(eq: Equation, rule: Justification) -> int:
        new_lines.append(ProofLine(eq, rule))
        return len(new_lines) - 1

    for old_idx, line in enumerate(proof.lines):
        rule = line.rule
        if isinstance(rule, Axiom) and rule.label in lemma_map:
            _, lemma_proof = lemma_map[rule.label]
            if rule.label not in emitted:
                offset = len(new_lines)
                for lemma_line in lemma_proof.lines:
                    emit(lemma_line.equation, _shift_rule(lemma_line.rule, offset))
                emitted[rule.label] = len(new_lines) - 1
            conclusion = emitted[rule.label]
            if rule.subst:
                args = tuple(
                    emit(Equation(rule.subst[v], rule.subst[v]), Refl(rule.subst[v]))
                    for v in sorted(rule.subst)
                )
                remap[old_idx] = emit(line.equation,
                                      Subst(conclusion, args, dict(rule.subst)))
            else:
                remap[old_idx] = conclusion
        else:
            remap[old_idx] = emit(line.equation, _remap_rule(rule, remap))
    return Proof(base.name, new_lines)


def prove_with_lemmas(t: Theory, goal: Equation,
                      lemmas: list[tuple[str, Equation, Proof]],
                      b: Budget = DEFAULT_BUDGET) -> ProveResult:
    """Prove goal over t extended with already-proved lemma equations as
    axioms, then inline their proofs so the returned certificate is a plain
    five-rule proof over t itself."""
    if not lemmas:
        return prove(t, goal, b)
    axioms = list(t.axioms)
    lemma_map: dict[str, tuple[Equation, Proof]] = {}
    for name, eq, proof in lemmas:
        label = f"{RESERVED_PREFIX}lemma_{name}"
        axioms.append((label, eq))
        lemma_map[label] = (eq, proof)
    working = Theory(t.name, t.signature, tuple(axioms))
    result = prove(working, goal, b)
    if not result.proved:
        return ProveResult("unknown", t, goal, reason=result.reason,
                           nodes_explored=result.nodes_explored)
    inlined = _inline_lemmas(result.proof, t, lemma_map)
    return _finish(t, goal, inlined, result.nodes_explored)


# --- quasi-equation entailment ---------------------------------------------

def close_quasi(t: Theory, premises: list[Equation], conclusion: Equation,
                ) -> tuple[Theory, Equation]:
    """Extend the signature with fresh constants @a0, @a1, ... (one per
    variable of the premises and conclusion, in index order), replace the
    variables by them uniformly, and add the closed premises as axioms.
    Returns the extended theory and the closed conclusion."""
    for eq in [*premises, conclusion]:
        err = _well_formed(eq, t.signature)
        if err is not None:
            raise ValueError(f"quasi-equation is not well-formed: {err}")
    variables: set[int] = set()
    for eq in [*premises, conclusion]:
        variables |= free_variables(eq.lhs) | free_variables(eq.rhs)
    freeze: Substitution = {}
    fresh_symbols: list[tuple[str, int]] = []
    for k, v in enumerate(sorted(variables)):
        name = f"{RESERVED_PREFIX}a{k}"
        fresh_symbols.append((name, 0))
        freeze[v] = App(name)
    signature = Signature(t.signature.symbols + tuple(fresh_symbols))
    axioms = list(t.axioms)
    for k, eq in enumerate(premises, start=1):
        closed = Equation(substitute(eq.lhs, freeze), substitute(eq.rhs, freeze))
        axioms.append((f"{RESERVED_PREFIX}premise{k}", closed))
    extended = Theory(f"{t.name}_quasi", signature, tuple(axioms))
    closed_conclusion = Equation(
        substitute(conclusion.lhs, freeze), substitute(conclusion.rhs, freeze)
    )
    return extended, closed_conclusion


def entails_quasi(t: Theory, premises: list[Equation], conclusion: Equation,
                  b: Budget = DEFAULT_BUDGET) -> ProveResult:
    """Prove that the premises entail the conclusion by freezing the shared
    variables into fresh constants; a Proved certificate is checkable against
    the extended theory (returned on the result)."""
    extended, closed = close_quasi(t, premises, conclusion)
    return prove(extended, closed, b)
