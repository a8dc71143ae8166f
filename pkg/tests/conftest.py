import random

import pytest

from eqa.catalog import theory_by_code
from eqa.terms import App, Equation, Signature, Term, Theory, Var


@pytest.fixture(scope="session")
def j_theory():
    return theory_by_code("J").theory


@pytest.fixture(scope="session")
def hoop_theory():
    return theory_by_code("hoop").theory


def random_term(rng: random.Random, sig: Signature, max_size: int,
                n_vars: int = 3) -> Term:
    """A well-formed random term of size at most max_size."""
    if max_size <= 1 or rng.random() < 0.3:
        choices = [Var(i) for i in range(n_vars)]
        choices += [App(c) for c in sig.constants()]
        return rng.choice(choices)
    ops = [(name, k) for name, k in sig.symbols if 0 < k <= max_size - 1]
    if not ops:
        return Var(rng.randrange(n_vars))
    name, k = rng.choice(ops)
    budget = max_size - 1
    args = []
    for i in range(k):
        share = max(1, budget // (k - i))
        args.append(random_term(rng, sig, share, n_vars))
    return App(name, tuple(args))
