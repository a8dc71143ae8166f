import random

import pytest

from eqa.catalog import list_codes, theory_by_code
from eqa.dsl import (
    ParseError,
    parse_equation,
    parse_model,
    parse_proof,
    parse_term,
    parse_theory,
    print_model,
    print_proof,
    print_theory,
)
from eqa.models import Model
from eqa.terms import App, Equation, Signature, Theory, Var

from conftest import random_term

J_TEXT = """\
theory J
sig * : 2; -> : 2; e : 0;
axiom refl: (x -> x) = e;
axiom unit: (e -> x) = x;
axiom mdiv: (((x -> y) -> y) * (((x -> y) -> y) -> x)) = x;
"""

MONOID_TEXT = """\
theory M
sig * : 2; e : 0;
axiom assoc: ((x*y)*z) = (x*(y*z)); axiom rid: (x*e) = x; axiom lid: (e*x) = x;
"""


class TestParseTheory:
    def test_johnstone(self):
        t = parse_theory(J_TEXT)
        assert t.name == "J"
        assert len(t.axioms) == 3
        assert t.signature.symbols == (("*", 2), ("->", 2), ("e", 0))

    def test_monoid_single_line(self):
        t = parse_theory(MONOID_TEXT)
        assert t.axiom_labels() == ("assoc", "rid", "lid")

    def test_error_points_at_offending_token(self):
        bad = "theory T\nsig f : 2;\naxiom a: f(x, y = x;"
        with pytest.raises(ParseError) as exc:
            parse_theory(bad)
        assert exc.value.span.line == 3
        # the '=' inside the argument list is the offending token
        assert "=" in str(exc.value) or exc.value.expected

    def test_duplicate_label_is_reported_with_span(self):
        bad = "theory T\nsig f : 1;\naxiom a: f(x) = x;\naxiom a: f(x) = x;"
        with pytest.raises(ParseError) as exc:
            parse_theory(bad)
        assert exc.value.span.line == 4

    def test_arity_mismatch(self):
        with pytest.raises(ParseError):
            parse_theory("theory T\nsig f : 2;\naxiom a: f(x) = x;")

    def test_unknown_symbol(self):
        with pytest.raises(ParseError):
            parse_theory("theory T\nsig f : 1;\naxiom a: g(x) = x;")

    def test_reserved_prefix_rejected(self):
        with pytest.raises(ParseError):
            parse_theory("theory T\nsig @a0 : 0;\n")

    def test_comments_and_whitespace_insensitivity(self):
        text = "theory T # a theory\n  sig f : 1;\n\n\naxiom a:\n f(x) = x;"
        t = parse_theory(text)
        assert t.axiom_labels() == ("a",)


class TestParseTerm:
    def test_t_term(self, j_theory):
        term = parse_term("((x -> y) -> y)", j_theory.signature)
        assert term == App("->", (App("->", (Var(0), Var(1))), Var(1)))

    def test_constant(self, j_theory):
        assert parse_term("e", j_theory.signature) == App("e")

    def test_arity_mismatch_in_prefix_form(self):
        sig = Signature((("f", 2),))
        with pytest.raises(ParseError):
            parse_term("f(x)", sig)

    def test_prefix_and_infix_agree(self, j_theory):
        sig = j_theory.signature
        assert parse_term("(x * y)", sig) == parse_term("*(x, y)", sig)

    def test_x0_aliases(self, j_theory):
        sig = j_theory.signature
        assert parse_term("(x0 -> x1)", sig) == parse_term("(x -> y)", sig)


class TestRoundTrip:
    def test_catalog_theories_round_trip(self):
        for code in list_codes():
            t = theory_by_code(code).theory
            assert parse_theory(print_theory(t)) == t

    def test_catalog_letter_codes_round_trip(self):
        for code in ("MC", "HBCK", "K", "BCST"):
            t = theory_by_code(code).theory
            assert parse_theory(print_theory(t)) == t

    def test_500_random_theories_round_trip(self):
        rng = random.Random(20260810)
        name_pool = ["f", "g", "h", "m", "p"]
        for i in range(500):
            n_sym = rng.randint(1, 5)
            names = rng.sample(name_pool, n_sym)
            symbols = tuple((n, rng.randint(0, 3)) for n in names)
            sig = Signature(symbols)
            axioms = []
            for k in range(rng.randint(0, 8)):
                lhs = random_term(rng, sig, rng.randint(1, 15))
                rhs = random_term(rng, sig, rng.randint(1, 15))
                axioms.append((f"ax{k}", Equation(lhs, rhs)))
            theory = Theory(f"T{i}", sig, tuple(axioms))
            assert parse_theory(print_theory(theory)) == theory

    def test_parse_errors_point_inside_input(self):
        rng = random.Random(99)
        bad_inputs = [
            "theory",
            "theory T sig",
            "theory T\nsig f : ;",
            "theory T\nsig f : 1;\naxiom : f(x) = x;",
            "theory T\nsig f : 1;\naxiom a f(x) = x;",
            "theory T\nsig f : 1;\naxiom a: f(x = x;",
        ]
        for text in bad_inputs:
            with pytest.raises(ParseError) as exc:
                parse_theory(text)
            lines = text.split("\n")
            span = exc.value.span
            assert 1 <= span.line <= len(lines) + 1
            assert span.col_start >= 1


class TestModels:
    B2_TEXT = """\
model B2 over J size 2
table * = [[0, 0], [0, 1]];
table -> = [[1, 1], [0, 1]];
const e = 1;
"""

    def test_parse_model_with_signature(self, j_theory):
        m = parse_model(self.B2_TEXT, j_theory.signature)
        assert m.size == 2
        assert m.table("*") == (0, 0, 0, 1)
        assert m.table("->") == (1, 1, 0, 1)
        assert m.constant("e") == 1
        assert m.name == "B2"
        assert m.theory_name == "J"

    def test_parse_model_infers_signature(self):
        m = parse_model(self.B2_TEXT)
        assert m.signature.arity("*") == 2
        assert m.signature.arity("e") == 0

    def test_model_round_trip(self, j_theory):
        m = parse_model(self.B2_TEXT, j_theory.signature)
        assert parse_model(print_model(m), j_theory.signature) == m

    def test_out_of_range_entry(self):
        bad = "model M over T size 2\ntable f = [0, 2];\n"
        with pytest.raises(ParseError):
            parse_model(bad)

    def test_wrong_row_count(self):
        bad = "model M over T size 2\ntable f = [[0, 1]];\n"
        with pytest.raises(ParseError):
            parse_model(bad)

    def test_missing_table_against_signature(self, j_theory):
        bad = "model M over J size 2\nconst e = 0;\n"
        with pytest.raises(ParseError):
            parse_model(bad, j_theory.signature)


class TestProofs:
    PROOF_TEXT = """\
proof over J
1: ((x -> y) -> y) = ((x -> y) -> y) by refl;
2: (x -> x) = e by axiom refl [x -> x];
3: e = (x -> x) by sym 2;
4: (x3 -> x) = (x3 -> x) by refl;
5: (e -> x) = ((x -> x) -> x) by subst 4 [3] [x3 -> e];
"""

    def test_parse_and_print_round_trip(self, j_theory):
        p = parse_proof(self.PROOF_TEXT, j_theory)
        assert len(p.lines) == 5
        assert parse_proof(print_proof(p), j_theory) == p

    def test_line_numbering_must_be_consecutive(self, j_theory):
        bad = "proof over J\n2: (x -> x) = e by axiom refl [x -> x];"
        with pytest.raises(ParseError):
            parse_proof(bad, j_theory)

    def test_forward_reference_rejected(self, j_theory):
        bad = "proof over J\n1: e = (x -> x) by sym 1;"
        with pytest.raises(ParseError):
            parse_proof(bad, j_theory)

    def test_theory_name_mismatch(self, j_theory):
        bad = "proof over K\n1: (x -> x) = e by axiom refl [x -> x];"
        with pytest.raises(ParseError):
            parse_proof(bad, j_theory)
