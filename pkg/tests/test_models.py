import itertools
import random

import pytest

from eqa.catalog import FULL_SIGNATURE, theory_by_code
from eqa.dsl import parse_equation, parse_term
from eqa.models import (
    CapExceededError,
    Model,
    OperationTable,
    canonical_form,
    check_galois,
    clone_closure,
    enumerate_models,
    evaluate,
    find_countermodel,
    is_malcev_table,
    order_from_implication,
    order_from_term,
    satisfies,
    satisfies_theory,
)
from eqa.terms import App, Equation, Signature, Theory, Var

from conftest import random_term

SIG = FULL_SIGNATURE

# B2: carrier {0,1}, e=1, -> Boolean implication, * meet.
B2 = Model(SIG, 2, ((0, 0, 0, 1), (1, 1, 0, 1), (1,)))
# Z2: carrier {0,1}, e=0, -> = * = XOR.
Z2 = Model(SIG, 2, ((0, 1, 1, 0), (0, 1, 1, 0), (0,)))


def _eq(text, sig=SIG):
    return parse_equation(text, sig)


def _term(text, sig=SIG):
    return parse_term(text, sig)


class TestEvaluate:
    def test_b2_t_term_against_truth_table(self):
        t = _term("((x -> y) -> y)")
        imp = lambda a, b: (1 - a) | b
        for x in (0, 1):
            for y in (0, 1):
                expected = imp(imp(x, y), y)
                assert evaluate(B2, t, {0: x, 1: y}) == expected
        assert evaluate(B2, t, {0: 0, 1: 1}) == 1

    def test_constant_evaluates_to_its_element(self):
        assert evaluate(B2, App("e"), {}) == 1
        assert evaluate(Z2, App("e"), {}) == 0

    def test_z2_t_term_against_xor_arithmetic(self):
        t = _term("((x -> y) -> y)")
        for x in (0, 1):
            for y in (0, 1):
                assert evaluate(Z2, t, {0: x, 1: y}) == (x ^ y) ^ y
        assert evaluate(Z2, t, {0: 1, 1: 1}) == 1

    def test_unbound_variable_raises(self):
        with pytest.raises(ValueError):
            evaluate(B2, Var(5), {0: 0})


class TestSatisfies:
    def test_b2_satisfies_monotone_division(self):
        mdiv = _eq("(((x -> y) -> y) * (((x -> y) -> y) -> x)) = x")
        ok, witness = satisfies(B2, mdiv)
        # brute-force oracle over the 4 assignments
        imp = lambda a, b: (1 - a) | b
        meet = lambda a, b: a & b
        for x in (0, 1):
            for y in (0, 1):
                t = imp(imp(x, y), y)
                assert meet(t, imp(t, x)) == x
        assert ok and witness is None

    def test_witness_is_lexicographically_least(self):
        const0 = Model(Signature((("*", 2),)), 2, ((0, 0, 0, 0),))
        ok, witness = satisfies(const0, _eq("(x * y) = x", const0.signature))
        assert not ok
        assert witness == {0: 1, 1: 0}

    def test_identity_equation_always_holds(self):
        t = _term("((x -> y) -> (e * x))")
        ok, witness = satisfies(Z2, Equation(t, t))
        assert ok


class TestEnumeration:
    def test_j_size_2_has_12_labeled_models(self, j_theory):
        models = list(enumerate_models(j_theory, 2))
        assert len(models) == 12

    def test_j_size_2_matches_naive_oracle(self, j_theory):
        # independent oracle: all 2 * 16 * 16 = 512 table combinations
        found = set()
        for e in (0, 1):
            for star in itertools.product((0, 1), repeat=4):
                for arrow in itertools.product((0, 1), repeat=4):
                    m = Model(SIG, 2, (star, arrow, (e,)))
                    if satisfies_theory(m, j_theory):
                        found.add(m)
        assert set(enumerate_models(j_theory, 2)) == found

    def test_j_size_1_single_model(self, j_theory):
        assert len(list(enumerate_models(j_theory, 1))) == 1

    def test_group_size_2_two_labelings_of_z2(self):
        group = theory_by_code("group").theory
        models = list(enumerate_models(group, 2))
        assert len(models) == 2
        assert Z2 in models

    def test_no_false_positives(self, j_theory):
        for m in enumerate_models(j_theory, 2):
            assert satisfies_theory(m, j_theory)

    def test_iso_filter_covers_and_separates(self, j_theory):
        labeled = list(enumerate_models(j_theory, 2))
        reps = list(enumerate_models(j_theory, 2, iso_filter=True))
        # pairwise non-isomorphic
        forms = [canonical_form(m) for m in reps]
        assert len(set(forms)) == len(reps)
        # covers every labeled model up to isomorphism
        assert {canonical_form(m) for m in labeled} == set(forms)
        assert len(reps) == 6

    def test_deterministic_order(self, j_theory):
        first = list(enumerate_models(j_theory, 2))
        second = list(enumerate_models(j_theory, 2))
        assert first == second


class TestCountermodel:
    def test_commutativity_does_not_give_projection(self):
        comm = Theory("comm", Signature((("*", 2),)),
                      (("comm", _eq("(x * y) = (y * x)", Signature((("*", 2),)))),))
        found = find_countermodel(comm, _eq("(x * y) = x", comm.signature), 3)
        assert found is not None
        model, witness = found
        assert model.size == 2
        assert witness == {0: 1, 1: 0}

    def test_j_does_not_prove_h_axiom(self, j_theory):
        h = _eq("((x -> y) -> (x -> z)) = ((y -> x) -> (y -> z))")
        found = find_countermodel(j_theory, h, 2)
        assert found is not None
        model, witness = found
        assert model.size == 2
        assert satisfies_theory(model, j_theory)
        lhs, rhs = h.lhs, h.rhs
        assert evaluate(model, lhs, witness) != evaluate(model, rhs, witness)

    def test_axiom_has_no_countermodel(self, j_theory):
        refl = _eq("(x -> x) = e")
        assert find_countermodel(j_theory, refl, 3) is None


LATTICE2 = Model(Signature((("meet", 2), ("join", 2))), 2,
                 ((0, 0, 0, 1), (0, 1, 1, 1)))


def _oracle_clone(m, arity):
    """Independent fixpoint oracle: iterate over the full function space."""
    n = m.size
    points = list(itertools.product(range(n), repeat=arity))
    members = set()
    for i in range(arity):
        members.add(tuple(p[i] for p in points))
    for c in m.signature.constants():
        members.add(tuple(m.constant(c) for _ in points))
    changed = True
    while changed:
        changed = False
        for sym, k in m.signature.symbols:
            if k == 0:
                continue
            for combo in itertools.product(sorted(members), repeat=k):
                out = tuple(
                    m.apply(sym, tuple(g[i] for g in combo))
                    for i in range(len(points))
                )
                if out not in members:
                    members.add(out)
                    changed = True
    return members


class TestCloneClosure:
    def test_lattice_clone_is_monotone_and_malcev_free(self):
        clone = clone_closure(LATTICE2, 3, cap=256)
        oracle = _oracle_clone(LATTICE2, 3)
        assert {op.table for op in clone} == oracle
        assert len(clone) == 18
        assert not any(is_malcev_table(op, 2) for op in clone)

    def test_z2_clone_contains_triple_xor(self):
        clone = clone_closure(Z2, 3, cap=256)
        oracle = _oracle_clone(Z2, 3)
        assert {op.table for op in clone} == oracle
        xor3 = tuple(a ^ b ^ c for a, b, c in itertools.product((0, 1), repeat=3))
        assert xor3 in {op.table for op in clone}
        assert any(is_malcev_table(op, 2) for op in clone)

    def test_unary_clone_contains_identity(self):
        clone = clone_closure(B2, 1, cap=64)
        assert (0, 1) in {op.table for op in clone}

    def test_clone_is_a_fixpoint_with_projections(self):
        clone = clone_closure(Z2, 2, cap=64)
        tables = {op.table for op in clone}
        points = list(itertools.product((0, 1), repeat=2))
        for i in range(2):
            assert tuple(p[i] for p in points) in tables
        for sym, k in Z2.signature.symbols:
            if k == 0:
                continue
            for combo in itertools.product(sorted(tables), repeat=k):
                composed = tuple(
                    Z2.apply(sym, tuple(g[i] for g in combo))
                    for i in range(len(points))
                )
                assert composed in tables

    def test_cap_exceeded_raises(self):
        with pytest.raises(CapExceededError):
            clone_closure(LATTICE2, 3, cap=4)


class TestOrders:
    def test_b2_chain(self):
        order = order_from_implication(B2)
        assert order.matrix == ((True, True), (False, True))
        assert order.reflexive and order.antisymmetric and order.transitive
        assert not order.discrete

    def test_z2_discrete(self):
        order = order_from_implication(Z2)
        assert order.discrete
        assert order.reflexive and order.antisymmetric and order.transitive

    def test_one_element_model(self, j_theory):
        one = next(enumerate_models(j_theory, 1))
        order = order_from_implication(one)
        assert order.reflexive and order.antisymmetric and order.transitive

    def test_missing_symbols_raise(self):
        with pytest.raises(ValueError):
            order_from_implication(LATTICE2)

    def test_order_from_term_join(self):
        le = order_from_term(LATTICE2, _term("(x join y)", LATTICE2.signature))
        assert le.matrix == ((True, True), (False, True))

    def test_every_size2_j_model_is_reflexive_antisymmetric(self, j_theory):
        for m in enumerate_models(j_theory, 2):
            order = order_from_implication(m)
            assert order.reflexive
            assert order.antisymmetric


class TestGalois:
    def test_b2_heyting(self):
        assert check_galois(B2) == (True, None)

    def test_z2_group(self):
        assert check_galois(Z2) == (True, None)

    def test_bad_j_model_fails_at_origin(self, j_theory):
        # Boolean ->, e=1, and 0*0 = 1: a J-model whose * breaks residuation.
        m = Model(SIG, 2, ((1, 0, 0, 1), (1, 1, 0, 1), (1,)))
        assert satisfies_theory(m, j_theory)
        ok, witness = check_galois(m)
        assert not ok
        assert witness == (0, 0, 0)


def test_evaluate_is_homomorphic_under_substitution(j_theory):
    from eqa.terms import substitute

    rng = random.Random(11)
    models = [m for size in (1, 2, 3) for m in
              itertools.islice(enumerate_models(j_theory, size), 8)]
    for _ in range(60):
        m = rng.choice(models)
        term = random_term(rng, SIG, 7)
        mapping = {i: random_term(rng, SIG, 5) for i in range(3)}
        assignment = {i: rng.randrange(m.size) for i in range(3)}
        via_subst = evaluate(m, substitute(term, mapping), assignment)
        inner = {i: evaluate(m, image, assignment) for i, image in mapping.items()}
        assert via_subst == evaluate(m, term, inner)
