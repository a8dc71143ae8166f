import pytest

from eqa.analyzers import derive_malcev_from_protomodular
from eqa.catalog import (
    FULL_SIGNATURE,
    axiom,
    list_codes,
    named_term,
    theory_by_code,
)
from eqa.deduction import Budget, prove
from eqa.dsl import parse_equation, parse_term, parse_theory, print_theory
from eqa.terms import validate_term

QUICK = Budget(max_nodes=50_000, max_term_size=25, max_seconds=20.0)


def _term(text):
    return parse_term(text, FULL_SIGNATURE)


class TestAxiomLookup:
    def test_monotone_division_by_index(self):
        entry = axiom(19)
        assert entry.name == "Monotone division"
        assert entry.equation == parse_equation(
            "(((x -> y) -> y) * (((x -> y) -> y) -> x)) = x", FULL_SIGNATURE)

    def test_m_axiom_by_name(self):
        entry = axiom("M-axiom")
        assert entry.index == 21
        assert entry.equation == parse_equation(
            "((((x -> y) -> y) -> x) -> (((x -> y) -> y) -> z)) = (x -> z)",
            FULL_SIGNATURE)

    def test_reflexivity(self):
        assert axiom(5).equation == parse_equation("(x -> x) = e", FULL_SIGNATURE)

    def test_all_22_well_formed_over_restricted_signature(self):
        for i in range(1, 23):
            entry = axiom(i)
            validate_term(entry.equation.lhs, FULL_SIGNATURE)
            validate_term(entry.equation.rhs, FULL_SIGNATURE)

    def test_unknown_key(self):
        with pytest.raises(KeyError):
            axiom(23)
        with pytest.raises(KeyError):
            axiom("nonsense")


class TestTheoryCodes:
    def test_johnstone(self):
        t = theory_by_code("J").theory
        assert t.axiom_labels() == ("refl", "unit", "mdiv")

    def test_hoop_has_axioms_1_through_8(self):
        t = theory_by_code("hoop").theory
        assert len(t.axioms) == 8
        assert t.axiom_labels() == (
            "assoc", "rid", "lid", "comm", "refl", "unit", "hoopsym", "resid")

    def test_heyting_extends_hoop_with_fusion(self):
        t = theory_by_code("heyting").theory
        assert t.axiom_labels()[-1] == "fusion"

    def test_mc_letter_code(self):
        t = theory_by_code("MC").theory
        assert t.axiom_labels() == ("refl", "unit", "mexch", "icomm")
        assert t.signature.names() == ("->", "e")

    def test_letter_codes_normalize_by_sorting(self):
        assert theory_by_code("CB").theory == theory_by_code("BC").theory
        assert theory_by_code("CB").code == "BC"

    def test_equivalent_codes_are_not_collapsed(self):
        # C-theories and BC-theories coincide as a theorem, not by definition.
        assert theory_by_code("C").theory != theory_by_code("BC").theory

    def test_rbj_and_rbcj(self):
        rbj = theory_by_code("RBJ").theory
        assert rbj.axiom_labels() == ("refl", "unit", "mdiv", "resid", "compos")
        rbcj = theory_by_code("RBCJ").theory
        assert rbcj.axiom_labels() == ("refl", "unit", "mdiv", "resid", "compos", "comm")
        assert theory_by_code("RBCJ-commutative").theory == rbcj

    def test_unknown_code(self):
        with pytest.raises(KeyError):
            theory_by_code("XYZ")

    def test_every_listed_code_resolves(self):
        for code in list_codes():
            assert theory_by_code(code).theory is not None


class TestNamedTerms:
    def test_t(self):
        assert named_term("t") == _term("((x -> y) -> y)")

    def test_xbar_is_t(self):
        assert named_term("xbar") == named_term("t")

    def test_v_and_x_coincide(self):
        v = _term("(((((x -> y) -> y) -> x)) -> x)")
        assert named_term("v") == v
        assert named_term("X") == v

    def test_theta2(self):
        assert named_term("theta2") == _term("(((x -> y) -> y) -> x)")

    def test_p_johnstone_is_the_mechanical_substitution(self):
        expected = _term("(((y -> z) -> x) * ((((y -> z) -> z) -> y)))")
        assert named_term("p-johnstone") == expected
        derived = derive_malcev_from_protomodular(
            named_term("theta"), [named_term("theta1"), named_term("theta2")])
        assert derived == expected

    def test_unknown_key(self):
        with pytest.raises(KeyError):
            named_term("q")


class TestCatalogDerivations:
    def test_group_proves_divisions_and_reflexivity(self):
        group = theory_by_code("group").theory
        for text in ("(x * (x -> y)) = y", "(x -> (x * y)) = y", "(y -> y) = e"):
            goal = parse_equation(text, group.signature)
            assert prove(group, goal, QUICK).proved

    def test_t_axiom_follows_from_reflexivity_and_k(self):
        kt = theory_by_code("K").theory
        goal = parse_equation("(x -> e) = e", kt.signature)
        assert prove(kt, goal, QUICK).proved

    def test_catalog_round_trips(self):
        for code in list_codes():
            t = theory_by_code(code).theory
            assert parse_theory(print_theory(t)) == t
