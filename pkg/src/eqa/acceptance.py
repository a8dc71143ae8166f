"""The verification suite behind `eqa verify-paper`: theorem-level checks at
small scale, each printed as one pass/fail line.

Criteria cover the prover derivations, quasi-equation entailments, replay of
the bundled derivation scripts, the size-2 model census, Johnstone
protomodularity, the Malcev no-go results, the anti-symmetry
equationalization over all small models, the Galois/order checks, and a
soundness harness replaying every proved equation against all small models.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from . import catalog
from .analyzers import check_protomodular_terms, malcev_search, antisymmetry_equivalence_check
from .analyzers import closure_term_equations
from .catalog import FULL_SIGNATURE, axiom, named_term, theory_by_code
from .deduction import Budget, DEFAULT_BUDGET, check_proof, entails_quasi, prove
from .dsl import parse_equation, parse_proof, parse_theory
from .models import (
    Model,
    check_galois,
    clone_closure,
    enumerate_models,
    is_malcev_table,
    order_from_implication,
    satisfies,
    satisfies_theory,
)
from .scripts import ALL_SCRIPTS
from .terms import App, Equation, Signature, Theory, Var

__all__ = ["CriterionResult", "run_suite", "SUITES", "CRITERIA"]


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    proved: list[tuple[Theory, Equation]] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  criterion {self.number}: {self.name} ({self.detail}) [{self.seconds:.1f}s]"


def _theory(code: str) -> Theory:
    return theory_by_code(code).theory


def _eq(text: str, t: Theory) -> Equation:
    return parse_equation(text, t.signature)


def criterion_1() -> CriterionResult:
    """Prover derivation suite."""
    start = time.monotonic()
    rm_theory = Theory(
        "refl_unit_resid_mdiv",
        FULL_SIGNATURE,
        tuple((axiom(i).label, axiom(i).equation) for i in (5, 6, 8, 19)),
    )
    goals = [
        (_theory("J"), "(x * e) = x"),
        (_theory("J"), "(e * e) = e"),
        (_theory("hoop"), None),
        (rm_theory, None),
        (_theory("left-loop"), "(y -> y) = e"),
    ]
    goals[2] = (goals[2][0], axiom(19).equation)
    goals[3] = (goals[3][0], axiom(21).equation)
    proved: list[tuple[Theory, Equation]] = []
    failures = []
    for t, goal in goals:
        eq = goal if isinstance(goal, Equation) else _eq(goal, t)
        result = prove(t, eq, DEFAULT_BUDGET)
        if not result.proved:
            failures.append(f"{t.name} |- {eq}: {result.reason}")
            continue
        chk = check_proof(t, result.proof)
        if not chk.ok:
            failures.append(f"{t.name} |- {eq}: invalid proof line {chk.line}")
            continue
        proved.append((t, eq))
    detail = f"{len(proved)}/{len(goals)} goals proved and checked"
    if failures:
        detail += "; " + "; ".join(failures)
    return CriterionResult(1, "prover derivation suite", not failures, detail,
                           time.monotonic() - start, proved)


def criterion_2() -> CriterionResult:
    """Quasi-entailment suite."""
    start = time.monotonic()
    budget = Budget(max_seconds=60.0)
    jobs = [
        (_theory("J"), ["(x -> y) = e", "(y -> x) = e"], "x = y"),
        (_theory("MC"), ["(x -> y) = e", "(y -> z) = e"], "(x -> z) = e"),
    ]
    proved: list[tuple[Theory, Equation]] = []
    failures = []
    for t, premises, conclusion in jobs:
        prem = [_eq(p, t) for p in premises]
        result = entails_quasi(t, prem, _eq(conclusion, t), budget)
        if not result.proved or not check_proof(result.theory, result.proof).ok:
            failures.append(f"{t.name}: {conclusion}: {result.reason}")
            continue
        proved.append((result.theory, result.goal))
    detail = f"{len(proved)}/{len(jobs)} entailments proved and checked"
    if failures:
        detail += "; " + "; ".join(failures)
    return CriterionResult(2, "quasi-entailment suite", not failures, detail,
                           time.monotonic() - start, proved)


def criterion_3() -> CriterionResult:
    """Replay of the bundled derivation scripts."""
    start = time.monotonic()
    proved: list[tuple[Theory, Equation]] = []
    failures = []
    for name, theory_text, proof_text in ALL_SCRIPTS:
        t = parse_theory(theory_text)
        p = parse_proof(proof_text, t)
        result = check_proof(t, p)
        if not result.ok:
            failures.append(f"{name}: line {result.line}: {result.reason}")
            continue
        proved.extend((t, line.equation) for line in p.lines)
    detail = f"{len(ALL_SCRIPTS) - len(failures)}/{len(ALL_SCRIPTS)} scripts valid"
    if failures:
        detail += "; " + "; ".join(failures)
    return CriterionResult(3, "proof-checker replay", not failures, detail,
                           time.monotonic() - start, proved)


def _naive_census(t: Theory) -> list[Model]:
    """All labeled size-2 models by brute force over every table combination."""
    out = []
    sig = t.signature
    spaces = [
        list(itertools.product(range(2), repeat=2 ** arity))
        for _, arity in sig.symbols
    ]
    for tables in itertools.product(*spaces):
        m = Model(sig, 2, tuple(tables))
        if satisfies_theory(m, t):
            out.append(m)
    return out


def criterion_4() -> CriterionResult:
    """Size-2 model census."""
    start = time.monotonic()
    j = _theory("J")
    enumerated = list(enumerate_models(j, 2))
    oracle = _naive_census(j)
    failures = []
    if len(enumerated) != 12:
        failures.append(f"expected 12 labeled J-models, found {len(enumerated)}")
    if set(enumerated) != set(oracle):
        failures.append("enumeration disagrees with the naive 512-table oracle")
    b2 = Model(j.signature, 2, ((0, 0, 0, 1), (1, 1, 0, 1), (1,)))
    z2a = Model(j.signature, 2, ((0, 1, 1, 0), (0, 1, 1, 0), (0,)))
    z2b = Model(j.signature, 2, ((1, 0, 0, 1), (1, 0, 0, 1), (1,)))
    for name, m in [("B2", b2), ("Z2 (e=0)", z2a), ("Z2 (e=1)", z2b)]:
        if m not in set(enumerated):
            failures.append(f"{name} missing from the census")
    group = _theory("group")
    group_models = list(enumerate_models(group, 2))
    if len(group_models) != 2:
        failures.append(f"expected 2 labeled size-2 group models, found {len(group_models)}")
    detail = (f"12 J-models at size 2 (oracle-confirmed), B2 and both Z2 labelings "
              f"present, {len(group_models)} group models")
    if failures:
        detail = "; ".join(failures)
    return CriterionResult(4, "model census", not failures, detail,
                           time.monotonic() - start)


def criterion_5() -> CriterionResult:
    """Johnstone protomodularity equations."""
    start = time.monotonic()
    j = _theory("J")
    e = App("e")
    report = check_protomodular_terms(
        j, named_term("theta"), [named_term("theta1"), named_term("theta2")], [e, e],
        DEFAULT_BUDGET,
    )
    failures = [
        f"{name}: {verdict.status}"
        for name, _, verdict in report.entries if verdict.status != "proved"
    ]
    proved = [(j, eq) for _, eq, v in report.entries if v.status == "proved"]
    detail = "all three protomodularity equations proved"
    if failures:
        detail = "; ".join(failures)
    return CriterionResult(5, "Johnstone protomodularity", not failures, detail,
                           time.monotonic() - start, proved)


def criterion_6() -> CriterionResult:
    """Malcev no-go suite."""
    start = time.monotonic()
    failures = []
    proved: list[tuple[Theory, Equation]] = []

    monoid = _theory("monoid")
    r1 = malcev_search(monoid, max_depth=3, model_cap=1)
    if r1.kind != "impossible_balanced":
        failures.append(f"monoid: expected impossible_balanced, got {r1.kind}")

    lattice = _theory("lattice")
    r2 = malcev_search(lattice, max_depth=2, model_cap=2)
    if r2.kind != "impossible_model":
        failures.append(f"lattice: expected impossible_model, got {r2.kind}")
    else:
        evidence = r2.certificate
        clone = clone_closure(evidence.model, 3, cap=256)
        if len(clone) != evidence.clone_size:
            failures.append("lattice: clone size mismatch on re-verification")
        if any(is_malcev_table(op, evidence.model.size) for op in clone):
            failures.append("lattice: clone scan found a Malcev table after all")

    left_loop = _theory("left-loop")
    r3 = malcev_search(left_loop, max_depth=3, model_cap=3)
    expected = parse_equation("(x * (y -> z)) = (x * (y -> z))", left_loop.signature).lhs
    if r3.kind != "found" or r3.term != expected:
        failures.append(f"left-loop: expected to find x*(y->z), got {r3.kind} {r3.term}")
    else:
        for proof in r3.proofs:
            chk = check_proof(left_loop, proof)
            if not chk.ok:
                failures.append(f"left-loop: invalid Malcev proof line {chk.line}")
            else:
                proved.append((left_loop, proof.conclusion()))
    detail = ("monoid balanced, lattice clone certificate re-verified, "
              "left-loop Malcev term found with checked proofs")
    if failures:
        detail = "; ".join(failures)
    return CriterionResult(6, "no-go suite", not failures, detail,
                           time.monotonic() - start, proved)


def _wrc_theory() -> Theory:
    """Right-absorption, flattening, and weak closure stability for a single
    binary operation."""
    sig = Signature((("*", 2),))
    eqs = closure_term_equations(App("*", (Var(0), Var(1))))
    picked = ("right_absorption", "flattening", "weak_closure_stability")
    return Theory("wrc", sig, tuple((n, eqs[n]) for n in picked))


def criterion_7() -> CriterionResult:
    """Anti-symmetry equationalization over all small models."""
    start = time.monotonic()
    wrc = _wrc_theory()
    term = App("*", (Var(0), Var(1)))
    checked = 0
    violations = []
    for size in (1, 2, 3):
        for m in enumerate_models(wrc, size):
            checked += 1
            result = antisymmetry_equivalence_check(m, term)
            if result.antisym != result.x_eq_xy:
                violations.append(m)
    detail = f"{checked} weak-relative-closure models checked, no exceptions"
    if violations:
        detail = f"{len(violations)} violations among {checked} models"
    return CriterionResult(7, "anti-symmetry equationalization", not violations,
                           detail, time.monotonic() - start)


def criterion_8() -> CriterionResult:
    """Galois connection and derived-order flags on small models."""
    start = time.monotonic()
    failures = []
    rbj = _theory("RBJ")
    rbj_count = 0
    for size in (1, 2, 3):
        for m in enumerate_models(rbj, size):
            rbj_count += 1
            ok, witness = check_galois(m)
            if not ok:
                failures.append(f"RBJ model (size {size}) fails Galois at {witness}")
    j = _theory("J")
    j_count = 0
    for size in (1, 2, 3):
        for m in enumerate_models(j, size):
            j_count += 1
            order = order_from_implication(m)
            if not order.reflexive or not order.antisymmetric:
                failures.append(f"J model (size {size}) has a bad derived order")
    detail = f"{rbj_count} RBJ models pass Galois; {j_count} J models reflexive+antisymmetric"
    if failures:
        detail = "; ".join(failures[:3])
    return CriterionResult(8, "Galois and order suite", not failures, detail,
                           time.monotonic() - start)


def criterion_9(proved: list[tuple[Theory, Equation]]) -> CriterionResult:
    """Soundness harness: every proved equation holds in every small model of
    its theory."""
    start = time.monotonic()
    violations = []
    checked_eqs = 0
    by_theory: dict[int, tuple[Theory, list[Equation]]] = {}
    for t, eq in proved:
        by_theory.setdefault(id(t), (t, []))[1].append(eq)
    for t, eqs in by_theory.values():
        models = [m for size in (1, 2, 3) for m in enumerate_models(t, size)]
        for eq in eqs:
            checked_eqs += 1
            for m in models:
                ok, witness = satisfies(m, eq)
                if not ok:
                    violations.append(f"{t.name}: {eq} fails at {witness}")
    detail = f"{checked_eqs} proved equations hold in all models of size <= 3"
    if violations:
        detail = "; ".join(violations[:3])
    return CriterionResult(9, "soundness harness", not violations, detail,
                           time.monotonic() - start)


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}

SUITES = {
    "core": (1, 2, 3, 4, 5),
    "nogo": (6,),
    "closure": (7, 8),
    "all": (1, 2, 3, 4, 5, 6, 7, 8, 9),
}


def run_suite(suite: str = "all", emit=print) -> list[CriterionResult]:
    """Run a suite, printing one pass/fail line per criterion."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    results: list[CriterionResult] = []
    proved: list[tuple[Theory, Equation]] = []
    for number in SUITES[suite]:
        if number == 9:
            result = criterion_9(proved)
        else:
            result = CRITERIA[number]()
            proved.extend(result.proved)
        results.append(result)
        emit(result.line())
    return results
