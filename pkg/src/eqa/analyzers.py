"""Meta-level analyzers: determination of equational orders, closure-term
classification, protomodularity and Malcev verification and search, and no-go
certificates.

Each analyzer is deterministic and pure given its inputs. Verdicts follow a
refute-first policy: countermodels are sought over small carriers before
proof search is attempted, since refutation at a fixed size is decidable
while proof search is not.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .deduction import (
    Budget,
    DEFAULT_BUDGET,
    Proof,
    ProveResult,
    check_proof,
    entails_quasi,
    prove,
    prove_with_lemmas,
)
from .models import (
    CapExceededError,
    Model,
    OperationTable,
    OrderRelation,
    clone_closure,
    enumerate_models,
    evaluate,
    find_countermodel,
    is_malcev_table,
    satisfies,
    satisfies_theory,
)
from .terms import (
    App,
    Equation,
    Substitution,
    Term,
    Theory,
    Var,
    free_variables,
    is_balanced,
    substitute,
    term_key,
    term_size,
    validate_term,
)

__all__ = [
    "Verdict",
    "DeterminationReport",
    "ClosureTermReport",
    "ProtomodularReport",
    "NoGoCertificate",
    "NotApplicable",
    "CloneEvidence",
    "MalcevResult",
    "AntisymmetryCheck",
    "closure_term_equations",
    "determination_report",
    "closure_term_report",
    "check_protomodular_terms",
    "derive_malcev_from_protomodular",
    "malcev_search",
    "nogo_certificate",
    "antisymmetry_equivalence_check",
]

# Countermodels are sought up to this carrier size before proving.
COUNTERMODEL_SIZE = 3


@dataclass
class Verdict:
    """Proved (with proof), Refuted (with countermodel and witness), or Unknown."""

    status: str  # "proved" | "refuted" | "unknown"
    proof: Proof | None = None
    countermodel: Model | None = None
    witness: dict[int, int] | None = None
    reason: str | None = None

    @classmethod
    def proved(cls, proof: Proof) -> "Verdict":
        return cls("proved", proof=proof)

    @classmethod
    def refuted(cls, model: Model, witness: dict[int, int]) -> "Verdict":
        return cls("refuted", countermodel=model, witness=witness)

    @classmethod
    def unknown(cls, reason: str) -> "Verdict":
        return cls("unknown", reason=reason)

    def to_json(self) -> dict:
        record: dict = {"status": self.status}
        if self.reason:
            record["reason"] = self.reason
        if self.countermodel is not None:
            record["countermodel"] = _model_json(self.countermodel)
            record["witness"] = {str(Var(v)): e for v, e in (self.witness or {}).items()}
        return record


def _model_json(m: Model) -> dict:
    return {
        "size": m.size,
        "tables": {
            sym: list(table)
            for (sym, _), table in zip(m.signature.symbols, m.tables)
        },
    }


def _order_json(order: OrderRelation) -> dict:
    return {
        "matrix": [[bool(v) for v in row] for row in order.matrix],
        "reflexive": order.reflexive,
        "antisymmetric": order.antisymmetric,
        "transitive": order.transitive,
        "discrete": order.discrete,
    }


@lru_cache(maxsize=256)
def _small_models(t: Theory, size: int) -> tuple[Model, ...]:
    return tuple(enumerate_models(t, size))


def _refute_quasi(t: Theory, premises: list[Equation], conclusion: Equation,
                  max_size: int):
    """A model of t plus elements satisfying every premise but not the
    conclusion, or None."""
    variables: set[int] = set()
    for eq in [*premises, conclusion]:
        variables |= free_variables(eq.lhs) | free_variables(eq.rhs)
    ordered = sorted(variables)
    for size in range(1, max_size + 1):
        for m in _small_models(t, size):
            for values in itertools.product(range(size), repeat=len(ordered)):
                assignment = dict(zip(ordered, values))
                if any(evaluate(m, eq.lhs, assignment) != evaluate(m, eq.rhs, assignment)
                       for eq in premises):
                    continue
                if (evaluate(m, conclusion.lhs, assignment)
                        != evaluate(m, conclusion.rhs, assignment)):
                    return m, assignment
    return None


def _decide(t: Theory, premises: list[Equation], conclusion: Equation,
            b: Budget, lemmas=None) -> Verdict:
    """Refute over small models first, then run the prover."""
    counter = _refute_quasi(t, premises, conclusion, COUNTERMODEL_SIZE)
    if counter is not None:
        return Verdict.refuted(*counter)
    if premises:
        result = entails_quasi(t, premises, conclusion, b)
    elif lemmas:
        result = prove_with_lemmas(t, conclusion, lemmas, b)
    else:
        result = prove(t, conclusion, b)
    if result.proved:
        return Verdict.proved(result.proof)
    return Verdict.unknown(result.reason or "budget exhausted")


# --- determination of equational orders -------------------------------------

@dataclass
class DeterminationReport:
    """Verdicts for semi-determination, the converse entailment (determined),
    and strong determination of an order equation by a binary term."""

    term: Term
    predicate: Equation
    semi: Verdict
    determined: Verdict
    strong: Verdict
    modus_ponens: Verdict

    def to_json(self) -> dict:
        return {
            "term": str(self.term),
            "predicate": str(self.predicate),
            "semi": self.semi.to_json(),
            "determined": self.determined.to_json(),
            "strong": self.strong.to_json(),
            "modus_ponens": self.modus_ponens.to_json(),
        }


def determination_report(t: Theory, term: Term, p: Equation,
                         b: Budget = DEFAULT_BUDGET) -> DeterminationReport:
    """Classify how the equation p(x, y) is determined by term(x, y).

    semi: p entails term = y; determined: the converse entailment;
    strong: semi together with a proof of p(x, term(x, y))."""
    for side in (term, p.lhs, p.rhs):
        validate_term(side, t.signature)
        extra = free_variables(side) - {0, 1}
        if extra:
            raise ValueError("term and predicate may only use the variables x and y")
    term_eq_y = Equation(term, Var(1))
    semi = _decide(t, [p], term_eq_y, b)
    determined = _decide(t, [term_eq_y], p, b)
    mp_goal = Equation(substitute(p.lhs, {1: term}), substitute(p.rhs, {1: term}))
    mp = _decide(t, [], mp_goal, b)
    strong = _combine_conjunction(semi, mp)
    return DeterminationReport(term, p, semi, determined, strong, mp)


def _combine_conjunction(a: Verdict, b: Verdict) -> Verdict:
    """Verdict for a conjunction of two conditions; the proof attached is the
    second condition's (the first's is available on its own field)."""
    if a.status == "refuted":
        return a
    if b.status == "refuted":
        return b
    if a.status == "proved" and b.status == "proved":
        return Verdict.proved(b.proof)
    return Verdict.unknown("component condition unresolved")


# --- closure-term classification ---------------------------------------------

CLOSURE_EQUATION_NAMES = (
    "idempotency",
    "transitivity",
    "antisymmetry",
    "left_absorption",
    "right_absorption",
    "left_monotonicity",
    "flattening",
    "closure_stability",
    "weak_closure_stability",
)

# Proving order: later equations tend to need the earlier ones as lemmas.
_CLOSURE_PROOF_ORDER = (
    "idempotency",
    "left_absorption",
    "transitivity",
    "left_monotonicity",
    "right_absorption",
    "flattening",
    "weak_closure_stability",
    "closure_stability",
    "antisymmetry",
)


def closure_term_equations(term: Term) -> dict[str, Equation]:
    """The nine closure equations for a binary term, written xy for term(x,y):
    x=xx; x(x̄̄)=x̄̄; (x̄x)=((x̄x)y); x(x̄)=x̄; x̄y<=x̄; xz<=x̄z; x̄(xz)=x̄z;
    (x̄̄x̄)x<=x̄̄x; (Xx̄)x<=Xx, where x̄=xy, x̄̄=(xy)z, X=(xy)x and a<=b
    abbreviates ab=b."""
    extra = free_variables(term) - {0, 1}
    if extra:
        raise ValueError("closure term may only use the variables x and y")

    def comb(u: Term, w: Term) -> Term:
        return substitute(term, {0: u, 1: w})

    def le(u: Term, w: Term) -> Equation:
        return Equation(comb(u, w), w)

    x, y, z = Var(0), Var(1), Var(2)
    bar = comb(x, y)
    dbar = comb(bar, z)
    big_x = comb(bar, x)
    return {
        "idempotency": Equation(x, comb(x, x)),
        "transitivity": Equation(comb(x, dbar), dbar),
        "antisymmetry": Equation(big_x, comb(big_x, y)),
        "left_absorption": Equation(comb(x, bar), bar),
        "right_absorption": le(comb(bar, y), bar),
        "left_monotonicity": le(comb(x, z), comb(bar, z)),
        "flattening": Equation(comb(bar, comb(x, z)), comb(bar, z)),
        "closure_stability": le(comb(comb(dbar, bar), x), comb(dbar, x)),
        "weak_closure_stability": le(comb(comb(big_x, bar), x), comb(big_x, x)),
    }


def _classify(verdicts: dict[str, Verdict], names: tuple[str, ...]) -> bool | None:
    if any(verdicts[n].status == "refuted" for n in names):
        return False
    if all(verdicts[n].status == "proved" for n in names):
        return True
    return None


@dataclass
class ClosureTermReport:
    term: Term
    equations: dict[str, Equation]
    verdicts: dict[str, Verdict]
    preorder_term: bool | None
    order_term: bool | None
    relative_closure: bool | None
    weak_relative_closure: bool | None

    def to_json(self) -> dict:
        return {
            "term": str(self.term),
            "equations": {n: str(self.equations[n]) for n in CLOSURE_EQUATION_NAMES},
            "verdicts": {n: self.verdicts[n].to_json() for n in CLOSURE_EQUATION_NAMES},
            "preorder_term": self.preorder_term,
            "order_term": self.order_term,
            "relative_closure": self.relative_closure,
            "weak_relative_closure": self.weak_relative_closure,
        }


def _subterm_pool(equations: dict[str, Equation], max_size: int) -> list[Term]:
    pool: set[Term] = set()
    for eq in equations.values():
        for side in (eq.lhs, eq.rhs):
            stack = [side]
            while stack:
                sub = stack.pop()
                if term_size(sub) <= max_size:
                    pool.add(sub)
                if isinstance(sub, App):
                    stack.extend(sub.args)
    return sorted(pool, key=lambda p: (term_size(p), str(p)))


def _mine_unit_lemmas(t: Theory, equations: dict[str, Equation], b: Budget,
                      max_candidates: int = 48) -> list[tuple[str, Equation, Proof]]:
    """Prove small constant-valued facts over the equations' subterms.

    Candidates f(args) = c are screened against all small models of the
    theory first (false ones are discarded without search), then proved in
    size order, each proved fact serving as a lemma for the next."""
    constants = t.signature.constants()
    if not constants:
        return []
    models = [m for size in (1, 2, 3) for m in _small_models(t, size)]
    pool = _subterm_pool(equations, max_size=21)
    candidates: list[Equation] = []
    for sym, arity in t.signature.symbols:
        if arity == 0 or arity > 2:
            continue
        for args in itertools.product(pool, repeat=arity):
            lhs = App(sym, args)
            for c in constants:
                candidates.append(Equation(lhs, App(c)))
    screened = [
        eq for eq in candidates
        if all(satisfies(m, eq)[0] for m in models)
    ]
    screened.sort(key=lambda eq: (term_size(eq.lhs), str(eq.lhs), str(eq.rhs)))
    small = Budget(max_nodes=min(b.max_nodes, 20_000),
                   max_term_size=b.max_term_size,
                   max_seconds=min(b.max_seconds, 10.0))
    lemmas: list[tuple[str, Equation, Proof]] = []
    for k, eq in enumerate(screened[:max_candidates]):
        result = prove_with_lemmas(t, eq, lemmas, small)
        if result.proved:
            lemmas.append((f"aux{k}", eq, result.proof))
    return lemmas


def closure_term_report(t: Theory, term: Term,
                        b: Budget = DEFAULT_BUDGET) -> ClosureTermReport:
    """Dispatch the nine closure equations for the given term to refutation
    and proof search. Small constant-valued facts over the equations'
    subterms are mined first, and equations are attempted in an order that
    lets each proved one serve as a lemma for the later ones; the final
    certificates are always plain five-rule proofs over t."""
    equations = closure_term_equations(term)
    verdicts: dict[str, Verdict] = {}
    lemmas = _mine_unit_lemmas(t, equations, b)
    for name in _CLOSURE_PROOF_ORDER:
        verdict = _decide(t, [], equations[name], b, lemmas=lemmas)
        verdicts[name] = verdict
        if verdict.status == "proved":
            lemmas.append((name, equations[name], verdict.proof))
    return ClosureTermReport(
        term,
        equations,
        verdicts,
        preorder_term=_classify(verdicts, ("idempotency", "transitivity")),
        order_term=_classify(verdicts, ("idempotency", "transitivity", "antisymmetry")),
        relative_closure=_classify(
            verdicts,
            ("left_absorption", "right_absorption", "left_monotonicity",
             "flattening", "closure_stability"),
        ),
        weak_relative_closure=_classify(
            verdicts,
            ("right_absorption", "flattening", "weak_closure_stability"),
        ),
    )


# --- protomodularity ----------------------------------------------------------

@dataclass
class ProtomodularReport:
    entries: list[tuple[str, Equation, Verdict]]

    @property
    def all_proved(self) -> bool:
        return all(v.status == "proved" for _, _, v in self.entries)

    def to_json(self) -> dict:
        return {
            "equations": [
                {"name": name, "equation": str(eq), **verdict.to_json()}
                for name, eq, verdict in self.entries
            ],
            "all_proved": self.all_proved,
        }


def check_protomodular_terms(t: Theory, theta: Term, thetas: list[Term],
                             constants: list[Term],
                             b: Budget = DEFAULT_BUDGET) -> ProtomodularReport:
    """Verify the protomodularity equations for the given terms: each
    theta_i(x, x) equals its constant, and theta(y, theta_1(x,y), ...,
    theta_n(x,y)) equals x."""
    n = len(thetas)
    if len(constants) != n:
        raise ValueError("one constant term is required per binary term")
    if free_variables(theta) - set(range(n + 1)):
        raise ValueError(f"theta may only use variables x0..x{n}")
    for i, th in enumerate(thetas):
        if free_variables(th) - {0, 1}:
            raise ValueError(f"theta{i + 1} may only use the variables x and y")
    for c in constants:
        if free_variables(c):
            raise ValueError("constants must be closed terms")
        validate_term(c, t.signature)
    validate_term(theta, t.signature)
    for th in thetas:
        validate_term(th, t.signature)

    entries: list[tuple[str, Equation, Verdict]] = []
    for i, (th, c) in enumerate(zip(thetas, constants), start=1):
        eq = Equation(substitute(th, {0: Var(0), 1: Var(0)}), c)
        entries.append((f"theta{i}_eq", eq, _decide(t, [], eq, b)))
    x, y = Var(0), Var(1)
    theta_args: Substitution = {0: y}
    for i, th in enumerate(thetas, start=1):
        theta_args[i] = substitute(th, {0: x, 1: y})
    theta_eq = Equation(substitute(theta, theta_args), x)
    entries.append(("theta_eq", theta_eq, _decide(t, [], theta_eq, b)))
    return ProtomodularReport(entries)


def derive_malcev_from_protomodular(theta: Term, thetas: list[Term]) -> Term:
    """The purely syntactic composite theta(x, theta_1(y,z), ..., theta_n(y,z))."""
    n = len(thetas)
    if free_variables(theta) - set(range(n + 1)):
        raise ValueError(f"theta may only use variables x0..x{n}")
    for i, th in enumerate(thetas):
        if free_variables(th) - {0, 1}:
            raise ValueError(f"theta{i + 1} may only use the variables x and y")
    mapping: Substitution = {0: Var(0)}
    for i, th in enumerate(thetas, start=1):
        mapping[i] = substitute(th, {0: Var(1), 1: Var(2)})
    return substitute(theta, mapping)


# --- no-go certificates --------------------------------------------------------

@dataclass
class NoGoCertificate:
    """Evidence that a theory cannot be Malcev (balanced, monotone, or
    inflationary kinds) or cannot be protomodular (partially inflationary).

    Certificates embed the model tables and order matrix so they can be
    re-checked without re-running the analyzer."""

    kind: str  # "balanced" | "monotone" | "partially_inflationary" | "inflationary"
    conclusion: str  # "NotMalcev" | "NotProtomodular"
    theory_name: str
    model: Model | None = None
    order: OrderRelation | None = None
    witness_pair: tuple[int, int] | None = None
    inflationary_components: dict[str, int] | None = None
    constant_evidence: dict[str, str] | None = None
    order_reading: str = "partial"
    detail: str = ""

    def to_json(self) -> dict:
        record: dict = {
            "kind": self.kind,
            "conclusion": self.conclusion,
            "theory": self.theory_name,
            "order_reading": self.order_reading,
            "detail": self.detail,
        }
        if self.model is not None:
            record["model"] = _model_json(self.model)
        if self.order is not None:
            record["order"] = _order_json(self.order)
        if self.witness_pair is not None:
            record["witness_pair"] = list(self.witness_pair)
        if self.inflationary_components is not None:
            record["inflationary_components"] = dict(self.inflationary_components)
        if self.constant_evidence is not None:
            record["constant_evidence"] = dict(self.constant_evidence)
        return record


@dataclass
class NotApplicable:
    reason: str

    def to_json(self) -> dict:
        return {"kind": "not_applicable", "reason": self.reason}


def _increasing_in_every_component(m: Model, order: OrderRelation) -> bool:
    n = m.size
    for sym, k in m.signature.symbols:
        if k == 0:
            continue
        table = m.table(sym)
        for args in itertools.product(range(n), repeat=k):
            idx = 0
            for a in args:
                idx = idx * n + a
            base = table[idx]
            for i in range(k):
                for b in range(n):
                    if not order.related(args[i], b):
                        continue
                    bumped = list(args)
                    bumped[i] = b
                    jdx = 0
                    for a in bumped:
                        jdx = jdx * n + a
                    if not order.related(base, table[jdx]):
                        return False
    return True


def _inflationary_components(m: Model, order: OrderRelation) -> dict[str, int] | None:
    """For each structure map, the least component i with x_i <= f(...) for
    all arguments; None if some structure map has no such component."""
    n = m.size
    out: dict[str, int] = {}
    for sym, k in m.signature.symbols:
        if k == 0:
            continue
        table = m.table(sym)
        found = None
        for i in range(k):
            ok = True
            for args in itertools.product(range(n), repeat=k):
                idx = 0
                for a in args:
                    idx = idx * n + a
                if not order.related(args[i], table[idx]):
                    ok = False
                    break
            if ok:
                found = i
                break
        if found is None:
            return None
        out[sym] = found
    return out


def _constant_non_minimum(m: Model, order: OrderRelation) -> dict[str, str] | None:
    """For each constant, evidence that it is not the minimum element; None
    if some constant is a minimum."""
    out: dict[str, str] = {}
    for sym in m.signature.constants():
        c = m.constant(sym)
        witness = next((d for d in range(m.size) if not order.related(c, d)), None)
        if witness is None:
            return None
        out[sym] = f"{sym} = {c} is not below {witness}"
    return out


def _constants_maximum(m: Model, order: OrderRelation) -> dict[str, str] | None:
    out: dict[str, str] = {}
    for sym in m.signature.constants():
        c = m.constant(sym)
        if not all(order.related(d, c) for d in range(m.size)):
            return None
        out[sym] = f"{sym} = {c} is the maximum element"
    return out


def nogo_certificate(t: Theory, m: Model, order: OrderRelation,
                     allow_preorder: bool = False) -> NoGoCertificate | NotApplicable:
    """Classify (m, order) as a monotone, inflationary, or partially
    inflationary algebra and return the strongest applicable certificate.

    Monotone and inflationary kinds conclude NotMalcev; partially
    inflationary concludes NotProtomodular. The order must be a partial
    order unless allow_preorder relaxes anti-symmetry (the reading used is
    recorded on the certificate)."""
    if not satisfies_theory(m, t):
        raise ValueError("the model does not satisfy the theory")
    if order.size != m.size:
        raise ValueError("order and model carrier sizes differ")
    if m.size < 2:
        return NotApplicable("carrier is trivial (size < 2)")
    reading = "preorder" if allow_preorder else "partial"
    order_ok = (order.reflexive and order.transitive
                and (allow_preorder or order.antisymmetric))
    if not order_ok:
        return NotApplicable(f"relation is not a {reading} order")

    if not order.discrete and order.antisymmetric and _increasing_in_every_component(m, order):
        witness = next(
            (a, b)
            for a in range(m.size) for b in range(m.size)
            if a != b and order.related(a, b)
        )
        return NoGoCertificate(
            kind="monotone", conclusion="NotMalcev", theory_name=t.name,
            model=m, order=order, witness_pair=witness, order_reading=reading,
            detail="every structure map is increasing in every component "
                   "over a non-discrete partial order",
        )

    components = _inflationary_components(m, order)
    non_min = _constant_non_minimum(m, order)
    if components is not None and non_min is not None:
        maximum = _constants_maximum(m, order)
        if maximum is not None:
            return NoGoCertificate(
                kind="inflationary", conclusion="NotMalcev", theory_name=t.name,
                model=m, order=order, inflationary_components=components,
                constant_evidence=maximum, order_reading=reading,
                detail="every structure map is inflationary in some component "
                       "and every constant is the maximum element",
            )
        return NoGoCertificate(
            kind="partially_inflationary", conclusion="NotProtomodular",
            theory_name=t.name, model=m, order=order,
            inflationary_components=components, constant_evidence=non_min,
            order_reading=reading,
            detail="every structure map is inflationary in some component "
                   "and no constant is the minimum element",
        )

    reasons = []
    if order.discrete:
        reasons.append("the order is discrete")
    if components is None:
        reasons.append("some structure map is inflationary in no component")
    if non_min is None:
        reasons.append("some constant is the minimum element")
    if not reasons:
        reasons.append("no monotonicity or inflation condition holds")
    return NotApplicable("; ".join(reasons))


# --- Malcev search --------------------------------------------------------------

@dataclass
class CloneEvidence:
    """A model whose ternary term clone contains no Malcev operation."""

    model: Model
    clone_size: int

    def to_json(self) -> dict:
        return {"model": _model_json(self.model), "clone_size": self.clone_size,
                "malcev_free": True}


@dataclass
class MalcevResult:
    kind: str  # "found" | "impossible_balanced" | "impossible_model" | "exhausted"
    term: Term | None = None
    proofs: tuple[Proof, Proof] | None = None
    certificate: NoGoCertificate | CloneEvidence | None = None
    depth: int = 0
    candidates_tried: int = 0

    def to_json(self) -> dict:
        record: dict = {"kind": self.kind, "depth": self.depth,
                        "candidates_tried": self.candidates_tried}
        if self.term is not None:
            record["term"] = str(self.term)
        if self.certificate is not None:
            record["certificate"] = self.certificate.to_json()
        return record


def _terms_of_size(size: int, depth: int, atoms: list[Term], operations) -> list[Term]:
    if size == 1:
        return list(atoms)
    if depth == 0 or size < 2:
        return []
    out: list[Term] = []
    for sym, k in operations:
        if size < k + 1:
            continue
        for split in _compositions(size - 1, k):
            pools = [_terms_of_size(s, depth - 1, atoms, operations) for s in split]
            for args in itertools.product(*pools):
                out.append(App(sym, args))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def malcev_search(t: Theory, max_depth: int = 3, model_cap: int = 2,
                  b: Budget = DEFAULT_BUDGET, clone_cap: int = 4096) -> MalcevResult:
    """Search for a Malcev term for t, or certify that none can exist.

    First, a balanced theory is rejected outright (every provable equation
    stays balanced, but the Malcev identities force an unbalanced theorem).
    Second, models up to model_cap are enumerated; if some non-trivial
    model's ternary clone has no Malcev operation, no term can work, since
    the term's induced operation would lie in the clone. Otherwise ternary
    terms are enumerated by (size, order) up to max_depth, filtered by
    evaluation on the enumerated models, and the prover attempts both
    identities."""
    if t.axioms and all(is_balanced(eq) for _, eq in t.axioms) or not t.axioms:
        cert = NoGoCertificate(
            kind="balanced", conclusion="NotMalcev", theory_name=t.name,
            detail="every axiom is balanced, so every provable equation is "
                   "balanced; the Malcev identities would force the "
                   "unbalanced theorem x = y",
        )
        return MalcevResult("impossible_balanced", certificate=cert, depth=0)

    models: list[Model] = []
    for size in range(1, model_cap + 1):
        models.extend(enumerate_models(t, size, iso_filter=True))
    for m in models:
        if m.size < 2:
            continue
        try:
            clone = clone_closure(m, 3, cap=clone_cap)
        except CapExceededError:
            continue
        if not any(is_malcev_table(op, m.size) for op in clone):
            return MalcevResult(
                "impossible_model",
                certificate=CloneEvidence(m, len(clone)),
                depth=0,
            )

    deadline = time.monotonic() + b.max_seconds
    per_candidate = Budget(
        max_nodes=min(b.max_nodes, 4000),
        max_term_size=b.max_term_size,
        max_seconds=min(b.max_seconds, 3.0),
    )
    atoms: list[Term] = [Var(0), Var(1), Var(2)]
    atoms += [App(c) for c in t.signature.constants()]
    operations = [(sym, k) for sym, k in t.signature.symbols if k > 0]
    max_size = 2 ** (max_depth + 1) - 1
    tried = 0
    for size in range(1, max_size + 1):
        candidates = sorted(_terms_of_size(size, max_depth, atoms, operations),
                            key=term_key)
        for p in candidates:
            if time.monotonic() > deadline:
                return MalcevResult("exhausted", depth=max_depth, candidates_tried=tried)
            eq_first = Equation(substitute(p, {2: Var(1)}), Var(0))
            eq_second = Equation(substitute(p, {1: Var(0), 2: Var(1)}), Var(1))
            if any(not satisfies(m, eq_first)[0] or not satisfies(m, eq_second)[0]
                   for m in models):
                continue
            tried += 1
            first = prove(t, eq_first, per_candidate)
            if not first.proved:
                continue
            second = prove(t, eq_second, per_candidate)
            if not second.proved:
                continue
            return MalcevResult(
                "found", term=p, proofs=(first.proof, second.proof),
                depth=max_depth, candidates_tried=tried,
            )
    return MalcevResult("exhausted", depth=max_depth, candidates_tried=tried)


# --- anti-symmetry equationalization --------------------------------------------

class AntisymmetryCheck(NamedTuple):
    antisym: bool
    x_eq_xy: bool
    cornish: bool


def antisymmetry_equivalence_check(m: Model, term: Term) -> AntisymmetryCheck:
    """For a binary term t (written xy) and the relation a <= b iff t(a,b)=b:
    check anti-symmetry as a quasi-equation, the equation X = Xy with
    X = (xy)x, and the Cornish condition (xy)x = (yx)y, over all pairs."""
    if free_variables(term) - {0, 1}:
        raise ValueError("term may only use the variables x and y")
    validate_term(term, m.signature)
    n = m.size

    def t2(a: int, b: int) -> int:
        return evaluate(m, term, {0: a, 1: b})

    antisym = all(
        not (t2(a, b) == b and t2(b, a) == a) or a == b
        for a in range(n) for b in range(n)
    )
    x_eq_xy = all(
        t2(t2(a, b), a) == t2(t2(t2(a, b), a), b)
        for a in range(n) for b in range(n)
    )
    cornish = all(
        t2(t2(a, b), a) == t2(t2(b, a), b)
        for a in range(n) for b in range(n)
    )
    return AntisymmetryCheck(antisym, x_eq_xy, cornish)
