"""eqa: an equational-logic toolkit.

Terms, theories, and a line-oriented text format; a five-rule proof checker
with a bounded prover and quasi-equation entailment; finite-model evaluation,
enumeration, countermodel search, and clone closure; and analyzers for
equationally defined orders, closure terms, protomodularity, and the Malcev
no-go criteria.
"""

from .terms import (
    App,
    Equation,
    Signature,
    Term,
    Theory,
    Var,
    free_variables,
    is_balanced,
    substitute,
    term_metrics,
)
from .deduction import (
    Budget,
    DEFAULT_BUDGET,
    Proof,
    ProveResult,
    check_proof,
    entails_quasi,
    prove,
)
from .models import (
    Model,
    OrderRelation,
    check_galois,
    clone_closure,
    enumerate_models,
    evaluate,
    find_countermodel,
    order_from_implication,
    satisfies,
)
from .analyzers import (
    antisymmetry_equivalence_check,
    check_protomodular_terms,
    closure_term_report,
    derive_malcev_from_protomodular,
    determination_report,
    malcev_search,
    nogo_certificate,
)
from .catalog import axiom, named_term, theory_by_code
from .dsl import (
    ParseError,
    parse_equation,
    parse_model,
    parse_proof,
    parse_term,
    parse_theory,
    print_model,
    print_proof,
    print_term,
    print_theory,
)

__version__ = "0.1.0"
