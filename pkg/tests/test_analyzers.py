import itertools

import pytest

from eqa.analyzers import (
    AntisymmetryCheck,
    CloneEvidence,
    NoGoCertificate,
    NotApplicable,
    antisymmetry_equivalence_check,
    check_protomodular_terms,
    closure_term_equations,
    closure_term_report,
    derive_malcev_from_protomodular,
    determination_report,
    malcev_search,
    nogo_certificate,
)
from eqa.catalog import FULL_SIGNATURE, axiom, named_term, theory_by_code
from eqa.deduction import Budget, check_proof
from eqa.dsl import parse_equation, parse_term
from eqa.models import (
    Model,
    clone_closure,
    enumerate_models,
    evaluate,
    is_malcev_table,
    order_from_implication,
    order_from_term,
    satisfies,
    satisfies_theory,
)
from eqa.terms import App, Equation, Signature, Theory, Var

QUICK = Budget(max_nodes=50_000, max_term_size=25, max_seconds=20.0)

SIG = FULL_SIGNATURE
B2 = Model(SIG, 2, ((0, 0, 0, 1), (1, 1, 0, 1), (1,)))
Z2 = Model(SIG, 2, ((0, 1, 1, 0), (0, 1, 1, 0), (0,)))
LATTICE2 = Model(Signature((("meet", 2), ("join", 2))), 2,
                 ((0, 0, 0, 1), (0, 1, 1, 1)))


def _eq(text, sig=SIG):
    return parse_equation(text, sig)


def _term(text, sig=SIG):
    return parse_term(text, sig)


class TestDetermination:
    def test_j_is_semi_determined(self, j_theory):
        report = determination_report(
            j_theory, named_term("t"), _eq("(x -> y) = e"), QUICK)
        assert report.semi.status == "proved"
        extended = _quasi_theory_for(j_theory, "(x -> y) = e")
        assert check_proof(extended, report.semi.proof).ok

    def test_strong_determination_with_c_axiom(self):
        t = theory_by_code("C").theory  # Reflexivity, Unit-reduction, C-axiom
        term = parse_term("((x -> y) -> y)", t.signature)
        report = determination_report(t, term, _eq("(x -> y) = e", t.signature), QUICK)
        assert report.semi.status == "proved"
        assert report.modus_ponens.status == "proved"
        assert report.strong.status == "proved"

    def test_projection_term_is_trivially_semi_determined(self, j_theory):
        report = determination_report(j_theory, Var(1), _eq("(x -> y) = e"), QUICK)
        assert report.semi.status == "proved"

    def test_strong_proved_implies_semi_proved(self, j_theory):
        # type invariant: across a few theories and terms
        cases = [
            (theory_by_code("C").theory, "((x -> y) -> y)"),
            (j_theory, "((x -> y) -> y)"),
        ]
        for t, term_text in cases:
            term = parse_term(term_text, t.signature)
            report = determination_report(t, term, _eq("(x -> y) = e", t.signature), QUICK)
            if report.strong.status == "proved":
                assert report.semi.status == "proved"

    def test_determined_reflexivity_iff_t_of_x_x_is_x(self):
        # Characterization: when the order is determined by t, reflexivity of
        # the derived order coincides with t(x,x) = x on every model.
        t = theory_by_code("C").theory
        term = parse_term("((x -> y) -> y)", t.signature)
        txx = Equation(parse_term("((x -> x) -> x)", t.signature), Var(0))
        for size in (1, 2, 3):
            for m in enumerate_models(t, size):
                order = order_from_implication(m)
                ok, _ = satisfies(m, txx)
                assert order.reflexive == ok

    def test_rejects_extra_variables(self, j_theory):
        with pytest.raises(ValueError):
            determination_report(j_theory, _term("((x -> z) -> y)"),
                                 _eq("(x -> y) = e"), QUICK)


def _quasi_theory_for(t, premise_text):
    from eqa.deduction import close_quasi
    extended, _ = close_quasi(
        t, [parse_equation(premise_text, t.signature)],
        Equation(Var(0), Var(1)))
    return extended


class TestClosureEquations:
    def test_nine_equations_for_meet_and_join_on_the_chain(self):
        # Both lattice operations satisfy all nine equations on the 2-chain.
        for op in ("meet", "join"):
            term = parse_term(f"(x {op} y)", LATTICE2.signature)
            for name, eq in closure_term_equations(term).items():
                ok, witness = satisfies(LATTICE2, eq)
                assert ok, (op, name, witness)

    def test_shapes_follow_the_closure_notation(self):
        term = App("*", (Var(0), Var(1)))
        eqs = closure_term_equations(term)
        sig = Signature((("*", 2),))
        assert eqs["idempotency"] == _eq("x = (x * x)", sig)
        assert eqs["left_absorption"] == _eq("(x * (x * y)) = (x * y)", sig)
        assert eqs["right_absorption"] == _eq(
            "(((x * y) * y) * (x * y)) = (x * y)", sig)
        assert eqs["flattening"] == _eq(
            "((x * y) * (x * z)) = ((x * y) * z)", sig)
        assert eqs["antisymmetry"] == _eq(
            "((x * y) * x) = (((x * y) * x) * y)", sig)

    def test_empty_theory_refutes_all_nine(self):
        sig = Signature((("*", 2),))
        empty = Theory("empty", sig, ())
        term = App("*", (Var(0), Var(1)))
        report = closure_term_report(empty, term,
                                     Budget(max_nodes=100, max_term_size=15,
                                            max_seconds=2.0))
        for name, verdict in report.verdicts.items():
            assert verdict.status == "refuted", name
            assert verdict.countermodel.size <= 2
            # re-check the witness against the countermodel
            eq = report.equations[name]
            lv = evaluate(verdict.countermodel, eq.lhs, verdict.witness)
            rv = evaluate(verdict.countermodel, eq.rhs, verdict.witness)
            assert lv != rv
        assert report.relative_closure is False
        assert report.preorder_term is False
        assert report.weak_relative_closure is False


class TestProtomodular:
    def test_johnstone_terms(self, j_theory):
        e = App("e")
        report = check_protomodular_terms(
            j_theory, named_term("theta"),
            [named_term("theta1"), named_term("theta2")], [e, e], QUICK)
        assert report.all_proved
        names = [name for name, _, _ in report.entries]
        assert names == ["theta1_eq", "theta2_eq", "theta_eq"]

    def test_left_loop_pair(self):
        # theta(x0,x1) = x0*x1 with theta1(x,y) = y->x: theta1(x,x) = e via
        # x->(x*e) = e, and y*(y->x) = x is Lower division.
        ll = theory_by_code("left-loop").theory
        theta = _term("(x * y)", ll.signature)
        theta1 = _term("(y -> x)", ll.signature)
        report = check_protomodular_terms(ll, theta, [theta1], [App("e")], QUICK)
        assert report.all_proved

    def test_group_with_wrong_theta1_is_refuted(self):
        # theta1(x,x) = x*x = e fails first in Z3 (Z2 still satisfies it,
        # every element being self-inverse there).
        group = theory_by_code("group").theory
        theta = _term("(x * y)", group.signature)
        theta1 = _term("(x * y)", group.signature)
        report = check_protomodular_terms(group, theta, [theta1], [App("e")], QUICK)
        first = report.entries[0][2]
        assert first.status == "refuted"
        assert first.countermodel.size == 3
        eq = report.entries[0][1]
        lv = evaluate(first.countermodel, eq.lhs, first.witness)
        rv = evaluate(first.countermodel, eq.rhs, first.witness)
        assert lv != rv

    def test_arity_validation(self, j_theory):
        with pytest.raises(ValueError):
            check_protomodular_terms(j_theory, _term("(x -> y)"),
                                     [_term("(x -> y)")], [], QUICK)
        with pytest.raises(ValueError):
            check_protomodular_terms(j_theory, Var(3), [_term("(x -> y)")],
                                     [App("e")], QUICK)


class TestDeriveMalcev:
    def test_johnstone_composite(self):
        p = derive_malcev_from_protomodular(
            named_term("theta"), [named_term("theta1"), named_term("theta2")])
        assert p == _term("(((y -> z) -> x) * ((((y -> z) -> z) -> y)))")

    def test_left_loop_composite(self):
        theta = _term("(x * y)")
        theta1 = _term("(x -> y)")
        assert derive_malcev_from_protomodular(theta, [theta1]) == \
            _term("(x * (y -> z))")

    def test_degenerate_identity(self):
        assert derive_malcev_from_protomodular(Var(0), []) == Var(0)

    def test_arity_mismatch_raises(self):
        with pytest.raises(ValueError):
            derive_malcev_from_protomodular(Var(2), [_term("(x -> y)")])


class TestMalcevSearch:
    def test_monoid_is_balanced(self):
        result = malcev_search(theory_by_code("monoid").theory)
        assert result.kind == "impossible_balanced"
        assert result.certificate.conclusion == "NotMalcev"

    def test_lattice_clone_certificate(self):
        result = malcev_search(theory_by_code("lattice").theory,
                               max_depth=2, model_cap=2)
        assert result.kind == "impossible_model"
        evidence = result.certificate
        assert isinstance(evidence, CloneEvidence)
        assert evidence.model.size == 2
        # independent re-verification of the clone evidence
        clone = clone_closure(evidence.model, 3, cap=256)
        assert len(clone) == evidence.clone_size == 18
        assert not any(is_malcev_table(op, 2) for op in clone)

    def test_left_loop_finds_the_division_term(self):
        ll = theory_by_code("left-loop").theory
        result = malcev_search(ll, max_depth=3, model_cap=3)
        assert result.kind == "found"
        assert result.term == _term("(x * (y -> z))", ll.signature)
        for proof in result.proofs:
            assert check_proof(ll, proof).ok

    def test_nogo_consistency_with_search(self):
        # whenever a no-go certificate concludes NotMalcev, the search never
        # returns Found for that theory
        lattice = theory_by_code("lattice").theory
        order = order_from_term(LATTICE2, _term("(x join y)", LATTICE2.signature))
        cert = nogo_certificate(lattice, LATTICE2, order)
        assert isinstance(cert, NoGoCertificate)
        assert cert.conclusion == "NotMalcev"
        assert malcev_search(lattice, max_depth=2, model_cap=2).kind != "found"


class TestNoGo:
    def test_chain_lattice_is_monotone(self):
        lattice = theory_by_code("lattice").theory
        order = order_from_term(LATTICE2, _term("(x join y)", LATTICE2.signature))
        cert = nogo_certificate(lattice, LATTICE2, order)
        assert cert.kind == "monotone"
        assert cert.conclusion == "NotMalcev"
        assert cert.witness_pair == (0, 1)

    def test_b2_arrow_reduct_is_inflationary(self):
        # (->, e)-reduct of B2: e = 1 is the maximum, y <= x -> y.
        sig = Signature((("->", 2), ("e", 0)))
        m = Model(sig, 2, ((1, 1, 0, 1), (1,)))
        t = theory_by_code("K").theory  # refl, unit, K-axiom: all hold in B2
        assert satisfies_theory(m, t)
        order = order_from_implication(m)
        cert = nogo_certificate(t, m, order)
        assert cert.kind == "inflationary"
        assert cert.conclusion == "NotMalcev"
        assert cert.inflationary_components == {"->": 1}

    def test_z2_discrete_not_applicable(self, j_theory):
        order = order_from_implication(Z2)
        result = nogo_certificate(j_theory, Z2, order)
        assert isinstance(result, NotApplicable)
        assert "discrete" in result.reason or "inflationary" in result.reason

    def test_model_must_satisfy_theory(self, j_theory):
        bad = Model(SIG, 2, ((0,) * 4, (0,) * 4, (0,)))
        with pytest.raises(ValueError):
            nogo_certificate(j_theory, bad, order_from_implication(bad))

    def test_trivial_carrier_not_applicable(self, j_theory):
        one = next(enumerate_models(j_theory, 1))
        result = nogo_certificate(j_theory, one, order_from_implication(one))
        assert isinstance(result, NotApplicable)


class TestAntisymmetryEquivalence:
    def test_b2_t_term(self):
        result = antisymmetry_equivalence_check(B2, _term("((x -> y) -> y)"))
        assert result == AntisymmetryCheck(True, True, True)

    def test_one_element_model(self, j_theory):
        one = next(enumerate_models(j_theory, 1))
        term = _term("((x -> y) -> y)")
        assert antisymmetry_equivalence_check(one, term) == \
            AntisymmetryCheck(True, True, True)

    def test_right_projection_fails_both_sides(self):
        sig = Signature((("*", 2),))
        proj = Model(sig, 2, ((0, 1, 0, 1),))
        result = antisymmetry_equivalence_check(proj, _term("(x * y)", sig))
        assert result.antisym is False
        assert result.x_eq_xy is False

    def test_size_3_weak_closure_models_pair_antisym_with_x_eq_xy(self):
        # the model-level equivalence, exhaustively at size 3; also check the
        # Cornish direction under the left-absorption instances y <= xy
        sig = Signature((("*", 2),))
        term = _term("(x * y)", sig)
        eqs = closure_term_equations(term)
        wrc = Theory("wrc", sig, tuple(
            (n, eqs[n]) for n in
            ("right_absorption", "flattening", "weak_closure_stability")))
        labs_inst = _eq("(y * (x * y)) = (x * y)", sig)
        seen_non_antisym = 0
        for m in enumerate_models(wrc, 3):
            result = antisymmetry_equivalence_check(m, term)
            assert result.antisym == result.x_eq_xy
            if not result.antisym:
                seen_non_antisym += 1
            if result.x_eq_xy and satisfies(m, labs_inst)[0]:
                assert result.cornish
        assert seen_non_antisym > 0
