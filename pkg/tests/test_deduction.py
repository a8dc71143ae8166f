import random

import pytest

from eqa.catalog import FULL_SIGNATURE, axiom, theory_by_code
from eqa.deduction import (
    Axiom,
    Budget,
    DEFAULT_BUDGET,
    Proof,
    ProofLine,
    Refl,
    Subst,
    Sym,
    Trans,
    check_proof,
    close_quasi,
    entails_quasi,
    prove,
    prove_with_lemmas,
)
from eqa.dsl import parse_equation, parse_proof, parse_term, print_proof
from eqa.models import enumerate_models, satisfies
from eqa.terms import App, Equation, Theory, Var, free_variables, is_balanced

from conftest import random_term


def _eq(text, theory):
    return parse_equation(text, theory.signature)


QUICK = Budget(max_nodes=50_000, max_term_size=25, max_seconds=20.0)


class TestCheckProof:
    def test_one_line_reflexivity(self, j_theory):
        term = parse_term("(x * e)", j_theory.signature)
        proof = Proof("J", [ProofLine(Equation(term, term), Refl(term))])
        assert check_proof(j_theory, proof).ok

    def test_right_identity_script_replays(self, j_theory):
        # The derivation x = ((x->x)->x)*(((x->x)->x)->x) = (e->x)*((e->x)->x)
        # = x*(x->x) = x*e, then symmetry.
        text = """\
proof over J
1: (((x -> x) -> x) * (((x -> x) -> x) -> x)) = x by axiom mdiv [x -> x, y -> x];
2: x = (((x -> x) -> x) * (((x -> x) -> x) -> x)) by sym 1;
3: (x -> x) = e by axiom refl [x -> x];
4: (((x3 -> x) * ((x3 -> x) -> x))) = (((x3 -> x) * ((x3 -> x) -> x))) by refl;
5: (((x -> x) -> x) * (((x -> x) -> x) -> x)) = ((e -> x) * ((e -> x) -> x)) by subst 4 [3] [x3 -> (x -> x)];
6: (e -> x) = x by axiom unit [x -> x];
7: ((x3 * (x3 -> x))) = ((x3 * (x3 -> x))) by refl;
8: ((e -> x) * ((e -> x) -> x)) = (x * (x -> x)) by subst 7 [6] [x3 -> (e -> x)];
9: ((x * x3)) = ((x * x3)) by refl;
10: (x * (x -> x)) = (x * e) by subst 9 [3] [x3 -> (x -> x)];
11: x = ((e -> x) * ((e -> x) -> x)) by trans 2 5;
12: x = (x * (x -> x)) by trans 11 8;
13: x = (x * e) by trans 12 10;
14: (x * e) = x by sym 13;
"""
        proof = parse_proof(text, j_theory)
        result = check_proof(j_theory, proof)
        assert result.ok, f"line {result.line}: {result.reason}"
        assert proof.conclusion() == _eq("(x * e) = x", j_theory)

    def test_trans_with_mismatched_middle_is_invalid(self, j_theory):
        sig = j_theory.signature
        a = parse_term("(x -> x)", sig)
        proof = Proof("J", [
            ProofLine(Equation(a, App("e")), Axiom("refl", {0: Var(0)})),
            ProofLine(Equation(a, a), Refl(a)),
            ProofLine(Equation(a, a), Trans(0, 1)),
        ])
        result = check_proof(j_theory, proof)
        assert not result.ok
        assert result.line == 3
        assert "middle" in result.reason

    def test_axiom_instance_must_match(self, j_theory):
        proof = Proof("J", [
            ProofLine(_eq("(x -> x) = x", j_theory), Axiom("refl", {0: Var(0)})),
        ])
        result = check_proof(j_theory, proof)
        assert not result.ok and result.line == 1

    def test_unknown_axiom_label(self, j_theory):
        proof = Proof("J", [
            ProofLine(_eq("(x -> x) = e", j_theory), Axiom("nope", {})),
        ])
        assert not check_proof(j_theory, proof).ok

    def test_subst_checks_left_images(self, j_theory):
        sig = j_theory.signature
        tmpl = parse_term("(x3 -> e)", sig)
        proof = Proof("J", [
            ProofLine(_eq("(x -> x) = e", j_theory), Axiom("refl", {0: Var(0)})),
            ProofLine(Equation(tmpl, tmpl), Refl(tmpl)),
            # claims to substitute x3 := e but cites a line whose lhs is (x->x)
            ProofLine(_eq("(e -> e) = (e -> e)", j_theory),
                      Subst(1, (0,), {3: App("e")})),
        ])
        result = check_proof(j_theory, proof)
        assert not result.ok and result.line == 3

    def test_ill_formed_equation_rejected(self, j_theory):
        bad = Equation(App("->", (Var(0),)), Var(0))
        proof = Proof("J", [ProofLine(bad, Refl(bad.lhs))])
        result = check_proof(j_theory, proof)
        assert not result.ok and "arity" in result.reason


class TestProve:
    def test_j_right_identity(self, j_theory):
        result = prove(j_theory, _eq("(x * e) = x", j_theory), QUICK)
        assert result.proved
        assert check_proof(j_theory, result.proof).ok
        assert result.proof.conclusion() == _eq("(x * e) = x", j_theory)

    def test_hoop_proves_monotone_division(self, hoop_theory):
        result = prove(hoop_theory, axiom(19).equation, QUICK)
        assert result.proved
        assert check_proof(hoop_theory, result.proof).ok

    def test_m_axiom_from_residuation_and_monotone_division(self):
        t = Theory("rm", FULL_SIGNATURE,
                   tuple((axiom(i).label, axiom(i).equation) for i in (5, 6, 8, 19)))
        result = prove(t, axiom(21).equation, QUICK)
        assert result.proved
        assert check_proof(t, result.proof).ok

    def test_trivial_goal_is_one_reflexivity_line(self, j_theory):
        goal = _eq("(x * y) = (x * y)", j_theory)
        result = prove(j_theory, goal, QUICK)
        assert result.proved
        assert len(result.proof.lines) == 1

    def test_unprovable_goal_returns_unknown(self, j_theory):
        tiny = Budget(max_nodes=500, max_term_size=15, max_seconds=5.0)
        result = prove(j_theory, _eq("x = y", j_theory), tiny)
        assert result.status == "unknown"
        assert result.reason in ("max_nodes", "max_term_size", "max_seconds")

    def test_ill_formed_goal_raises(self, j_theory):
        bad = Equation(App("->", (Var(0),)), Var(0))
        with pytest.raises(ValueError):
            prove(j_theory, bad)

    def test_determinism(self, j_theory):
        goal = _eq("(x * e) = x", j_theory)
        first = prove(j_theory, goal, QUICK)
        second = prove(j_theory, goal, QUICK)
        assert first.proof == second.proof
        assert first.nodes_explored == second.nodes_explored


class TestQuasi:
    def test_j_antisymmetry(self, j_theory):
        result = entails_quasi(
            j_theory,
            [_eq("(x -> y) = e", j_theory), _eq("(y -> x) = e", j_theory)],
            _eq("x = y", j_theory),
            QUICK,
        )
        assert result.proved
        assert check_proof(result.theory, result.proof).ok
        # the certificate is over the extended theory with frozen constants
        assert result.goal == Equation(App("@a0"), App("@a1"))

    def test_mc_transitivity(self):
        mc = theory_by_code("MC").theory
        result = entails_quasi(
            mc,
            [_eq("(x -> y) = e", mc), _eq("(y -> z) = e", mc)],
            _eq("(x -> z) = e", mc),
            QUICK,
        )
        assert result.proved
        assert check_proof(result.theory, result.proof).ok

    def test_empty_premises_degenerate_to_prove(self, j_theory):
        result = entails_quasi(j_theory, [], _eq("(x -> x) = e", j_theory), QUICK)
        assert result.proved

    def test_close_quasi_freezes_variables_in_index_order(self, j_theory):
        extended, closed = close_quasi(
            j_theory, [_eq("(x -> y) = e", j_theory)], _eq("x = y", j_theory))
        assert closed == Equation(App("@a0"), App("@a1"))
        assert extended.signature.constants() == ("e", "@a0", "@a1")
        assert extended.axiom("@premise1") == Equation(
            App("->", (App("@a0"), App("@a1"))), App("e"))

    def test_agrees_with_prove_on_100_pairs(self):
        rng = random.Random(20260810)
        theories = [theory_by_code(code).theory
                    for code in ("J", "hoop", "left-loop", "monoid", "MC")]
        budget = Budget(max_nodes=3000, max_term_size=20, max_seconds=5.0)
        pairs = []
        for i in range(100):
            t = theories[i % len(theories)]
            label, ax = t.axioms[i % len(t.axioms)]
            sub = {v: random_term(rng, t.signature, 3)
                   for v in free_variables(ax.lhs) | free_variables(ax.rhs)}
            from eqa.terms import substitute
            if i % 3 == 2:
                # an instance with both sides swapped: still provable
                goal = Equation(substitute(ax.rhs, sub), substitute(ax.lhs, sub))
            else:
                goal = Equation(substitute(ax.lhs, sub), substitute(ax.rhs, sub))
            pairs.append((t, goal))
        for t, goal in pairs:
            direct = prove(t, goal, budget)
            via_quasi = entails_quasi(t, [], goal, budget)
            assert direct.status == via_quasi.status == "proved"


class TestBalancedClosure:
    def test_monoid_proofs_stay_balanced(self):
        monoid = theory_by_code("monoid").theory
        assert all(is_balanced(eq) for _, eq in monoid.axioms)
        goals = [
            "((x * e) * y) = (x * y)",
            "((x * y) * z) = (x * (y * z))",
            "((e * x) * e) = x",
            "(x * (e * y)) = (x * y)",
        ]
        for text in goals:
            result = prove(monoid, _eq(text, monoid), QUICK)
            assert result.proved
            for line in result.proof.lines:
                assert is_balanced(line.equation)


class TestSoundness:
    def test_proved_equations_hold_in_small_models(self, j_theory):
        corpus = [
            (j_theory, "(x * e) = x"),
            (j_theory, "(e * e) = e"),
            (theory_by_code("left-loop").theory, "(y -> y) = e"),
        ]
        for t, text in corpus:
            goal = _eq(text, t)
            assert prove(t, goal, QUICK).proved
            for size in (1, 2, 3):
                for m in enumerate_models(t, size):
                    ok, _ = satisfies(m, goal)
                    assert ok


class TestLemmas:
    def test_inlined_lemma_proof_checks_against_base_theory(self, j_theory):
        rid = _eq("(x * e) = x", j_theory)
        lemma_proof = prove(j_theory, rid, QUICK).proof
        goal = _eq("(e * e) = e", j_theory)
        result = prove_with_lemmas(j_theory, goal, [("rid", rid, lemma_proof)], QUICK)
        assert result.proved
        check = check_proof(j_theory, result.proof)
        assert check.ok
        for line in result.proof.lines:
            if isinstance(line.rule, Axiom):
                assert not line.rule.label.startswith("@lemma")


class TestProofSerialization:
    def test_prover_output_round_trips_through_eqp(self, j_theory):
        result = prove(j_theory, _eq("(x * e) = x", j_theory), QUICK)
        text = print_proof(result.proof)
        parsed = parse_proof(text, j_theory)
        assert parsed == result.proof
        assert check_proof(j_theory, parsed).ok
