"""Built-in axioms, named theories, and named term builders.

Letter codes over {H, M, S, B, C, K, T} build (->, e)-theories from
Reflexivity and Unit-reduction plus the named axioms. The quasi-equations of
implicative algebras (implicative anti-symmetry and monotonicity) have no
equational form; letter-code theories carry only the equational part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsl import parse_term
from .terms import App, Equation, Signature, Term, Theory, Var, validate_term

__all__ = [
    "AxiomEntry",
    "NamedTheory",
    "axiom",
    "theory_by_code",
    "named_term",
    "list_codes",
    "LETTER_AXIOMS",
    "FULL_SIGNATURE",
]

FULL_SIGNATURE = Signature((("*", 2), ("->", 2), ("e", 0)))
ARROW_SIGNATURE = Signature((("->", 2), ("e", 0)))
MONOID_SIGNATURE = Signature((("*", 2), ("e", 0)))
LATTICE_SIGNATURE = Signature((("meet", 2), ("join", 2)))


@dataclass(frozen=True)
class AxiomEntry:
    index: int
    name: str
    label: str
    equation: Equation


def _eq(text: str, sig: Signature = FULL_SIGNATURE) -> Equation:
    lhs_text, rhs_text = text.split("=")
    return Equation(parse_term(lhs_text.strip(), sig), parse_term(rhs_text.strip(), sig))


_AXIOMS: list[AxiomEntry] = [
    AxiomEntry(1, "Associativity", "assoc", _eq("((x * y) * z) = (x * (y * z))")),
    AxiomEntry(2, "Right identity", "rid", _eq("(x * e) = x")),
    AxiomEntry(3, "Left identity", "lid", _eq("(e * x) = x")),
    AxiomEntry(4, "Commutativity", "comm", _eq("(x * y) = (y * x)")),
    AxiomEntry(5, "Reflexivity", "refl", _eq("(x -> x) = e")),
    AxiomEntry(6, "Unit-reduction", "unit", _eq("(e -> x) = x")),
    AxiomEntry(7, "Hoop-symmetry", "hoopsym", _eq("(x * (x -> y)) = (y * (y -> x))")),
    AxiomEntry(8, "Residuation", "resid", _eq("(x -> (y -> z)) = ((y * x) -> z)")),
    AxiomEntry(9, "Idempotency", "idem", _eq("(x * x) = x")),
    AxiomEntry(10, "Fusion", "fusion", _eq("(x * y) = (y * (y -> x))")),
    AxiomEntry(11, "Unit-absorption", "unitabs", _eq("(x -> e) = e")),
    AxiomEntry(12, "Lower division", "lowdiv", _eq("(x * (x -> y)) = y")),
    AxiomEntry(13, "Upper division", "updiv", _eq("(x -> (x * y)) = y")),
    AxiomEntry(14, "Projection", "kproj", _eq("(x -> (y -> x)) = e")),
    AxiomEntry(15, "Modus ponens", "modusp", _eq("(x -> ((x -> y) -> y)) = e")),
    AxiomEntry(16, "Implicative commutativity", "icomm",
               _eq("(x -> (y -> z)) = (y -> (x -> z))")),
    AxiomEntry(17, "Compositionality", "compos",
               _eq("((x -> y) -> ((z -> x) -> (z -> y))) = e")),
    AxiomEntry(18, "Self-distributivity", "selfdist",
               _eq("((z -> (x -> y)) -> ((z -> x) -> (z -> y))) = e")),
    AxiomEntry(19, "Monotone division", "mdiv",
               _eq("(((x -> y) -> y) * (((x -> y) -> y) -> x)) = x")),
    AxiomEntry(20, "Conditional exchange", "hexch",
               _eq("((x -> y) -> (x -> z)) = ((y -> x) -> (y -> z))")),
    AxiomEntry(21, "Monotone exchange", "mexch",
               _eq("((((x -> y) -> y) -> x) -> (((x -> y) -> y) -> z)) = (x -> z)")),
    AxiomEntry(22, "Cornish condition J", "cornish",
               _eq("((((x -> y) -> y) -> x) -> x) = ((((y -> x) -> x) -> y) -> y)")),
]

_NAME_ALIASES = {
    "t-axiom": 11,
    "k-axiom": 14,
    "c-axiom": 16,
    "b-axiom": 17,
    "s-axiom": 18,
    "h-axiom": 20,
    "m-axiom": 21,
    "cornish condition": 22,
}

# Letter codes for implicative-algebra axioms, in canonical order.
LETTER_AXIOMS = {"H": 20, "M": 21, "S": 18, "B": 17, "C": 16, "K": 14, "T": 11}
_LETTER_ORDER = "HMSBCKT"


def axiom(key: int | str) -> AxiomEntry:
    """Look up one of the 22 built-in axioms by index, name, or short label."""
    if isinstance(key, int):
        if not 1 <= key <= 22:
            raise KeyError(f"axiom index {key} out of range 1..22")
        return _AXIOMS[key - 1]
    lowered = key.strip().lower()
    if lowered in _NAME_ALIASES:
        return _AXIOMS[_NAME_ALIASES[lowered] - 1]
    for entry in _AXIOMS:
        if entry.name.lower() == lowered or entry.label == lowered:
            return entry
    raise KeyError(f"unknown axiom {key!r}")


@dataclass(frozen=True)
class NamedTheory:
    code: str
    theory: Theory


def _restrict(sig: Signature, indices: list[int]) -> tuple[tuple[str, Equation], ...]:
    out = []
    for i in indices:
        entry = _AXIOMS[i - 1]
        validate_term(entry.equation.lhs, sig)
        validate_term(entry.equation.rhs, sig)
        out.append((entry.label, entry.equation))
    return tuple(out)


def _make(name: str, sig: Signature, indices: list[int]) -> Theory:
    return Theory(name, sig, _restrict(sig, indices))


_LATTICE_AXIOMS = (
    ("meet_comm", _eq("(x meet y) = (y meet x)", LATTICE_SIGNATURE)),
    ("join_comm", _eq("(x join y) = (y join x)", LATTICE_SIGNATURE)),
    ("meet_assoc", _eq("((x meet y) meet z) = (x meet (y meet z))", LATTICE_SIGNATURE)),
    ("join_assoc", _eq("((x join y) join z) = (x join (y join z))", LATTICE_SIGNATURE)),
    ("absorb1", _eq("(x meet (x join y)) = x", LATTICE_SIGNATURE)),
    ("absorb2", _eq("(x join (x meet y)) = x", LATTICE_SIGNATURE)),
)


def _named_theories() -> dict[str, Theory]:
    theories = {
        "J": _make("J", FULL_SIGNATURE, [5, 6, 19]),
        "hoop": _make("hoop", FULL_SIGNATURE, [1, 2, 3, 4, 5, 6, 7, 8]),
        "heyting": _make("heyting", FULL_SIGNATURE, [1, 2, 3, 4, 5, 6, 7, 8, 10]),
        "left-loop": _make("left_loop", FULL_SIGNATURE, [12, 13, 2, 3]),
        "group": _make("group", FULL_SIGNATURE, [12, 13, 2, 3, 1]),
        "monoid": _make("monoid", MONOID_SIGNATURE, [1, 2, 3]),
        "pointed-semilattice": _make("pointed_semilattice", MONOID_SIGNATURE, [1, 2, 3, 4, 9]),
        "RBJ": _make("RBJ", FULL_SIGNATURE, [5, 6, 19, 8, 17]),
        "RBCJ": _make("RBCJ", FULL_SIGNATURE, [5, 6, 19, 8, 17, 4]),
        "lattice": Theory("lattice", LATTICE_SIGNATURE, _LATTICE_AXIOMS),
    }
    return theories


_THEORIES = _named_theories()

_CODE_ALIASES = {
    "RBCJ-commutative": "RBCJ",
    "johnstone": "J",
}


def theory_by_code(code: str) -> NamedTheory:
    """A named theory, or a letter-code theory over {H,M,S,B,C,K,T}.

    Letter codes are normalized by sorting, so "CB" and "BC" name the same
    axiom set; documented equivalences (such as C-theories versus
    BC-theories) are theorems, not definitions, and are never auto-collapsed.
    """
    code = code.strip()
    if code in _CODE_ALIASES:
        code = _CODE_ALIASES[code]
    if code in _THEORIES:
        return NamedTheory(code, _THEORIES[code])
    letters = code.upper()
    if letters and all(c in LETTER_AXIOMS for c in letters) and len(set(letters)) == len(letters):
        ordered = sorted(letters, key=_LETTER_ORDER.index)
        normalized = "".join(ordered)
        indices = [5, 6] + [LETTER_AXIOMS[c] for c in ordered]
        return NamedTheory(normalized, _make(normalized, ARROW_SIGNATURE, indices))
    raise KeyError(f"unknown theory code {code!r}")


def list_codes() -> list[str]:
    return sorted(_THEORIES)


_T = parse_term("((x -> y) -> y)", FULL_SIGNATURE)
_V = parse_term("(((((x -> y) -> y) -> x)) -> x)", FULL_SIGNATURE)
_THETA = parse_term("((y -> x) * z)", FULL_SIGNATURE)
_THETA1 = parse_term("(x -> y)", FULL_SIGNATURE)
_THETA2 = parse_term("(((x -> y) -> y) -> x)", FULL_SIGNATURE)


def _p_johnstone() -> Term:
    from .analyzers import derive_malcev_from_protomodular

    return derive_malcev_from_protomodular(_THETA, [_THETA1, _THETA2])


def named_term(key: str) -> Term:
    """Named terms: t, v, xbar, X, theta, theta1, theta2, p-johnstone."""
    table = {
        "t": _T,
        "xbar": _T,
        "v": _V,
        "X": _V,
        "theta": _THETA,
        "theta1": _THETA1,
        "theta2": _THETA2,
    }
    if key in table:
        return table[key]
    if key == "p-johnstone":
        return _p_johnstone()
    raise KeyError(f"unknown named term {key!r}")
