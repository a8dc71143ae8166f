"""Scratch: format the hand-planned derivation chains as .eqp text.

Each chain is a list of rewrite steps (position, axiom label, direction,
substitution); this emits the axiom/sym/refl/subst/trans plumbing lines and
verifies the result with check_proof. The output gets pasted into
src/eqa/scripts.py as literal fixture text.
"""

import sys

sys.path.insert(0, "src")

from eqa.dsl import parse_theory, parse_term, print_term, print_proof, parse_proof
from eqa.terms import (
    App, Equation, Var, substitute, replace_at, subterm_at, match,
    free_variables, variable_name,
)
from eqa.deduction import check_proof


class Script:
    def __init__(self, theory, fresh=3):
        self.t = theory
        self.lines = []  # (lhs, rhs, justification-string)
        self.fresh = fresh

    def emit(self, lhs, rhs, just):
        self.lines.append((lhs, rhs, just))
        return len(self.lines)  # 1-based

    def fmt_subst(self, s):
        entries = ", ".join(
            f"{variable_name(v)} -> {print_term(s[v])}" for v in sorted(s)
        )
        return f"[{entries}]"

    def axiom_line(self, label, subst):
        ax = self.t.axiom(label)
        lhs = substitute(ax.lhs, subst)
        rhs = substitute(ax.rhs, subst)
        just = f"axiom {label}"
        if subst:
            just += f" {self.fmt_subst(subst)}"
        return self.emit(lhs, rhs, just), lhs, rhs

    def sym(self, i):
        lhs, rhs, _ = self.lines[i - 1]
        return self.emit(rhs, lhs, f"sym {i}")

    def trans(self, i, j):
        a = self.lines[i - 1]
        b = self.lines[j - 1]
        assert a[1] == b[0], f"trans mismatch {print_term(a[1])} vs {print_term(b[0])}"
        return self.emit(a[0], b[1], f"trans {i} {j}")

    def rewrite(self, term, pos, label, forward, subst):
        """Rewrite subterm of `term` at `pos` using the axiom; returns
        (line proving term = new_term, new_term)."""
        ax = self.t.axiom(label)
        src = substitute(ax.lhs if forward else ax.rhs, subst)
        dst = substitute(ax.rhs if forward else ax.lhs, subst)
        assert subterm_at(term, pos) == src, (
            f"subterm {print_term(subterm_at(term, pos))} != {print_term(src)}")
        new_term = replace_at(term, pos, dst)
        ax_line, _, _ = self.axiom_line(label, subst)
        use = ax_line if forward else self.sym(ax_line)
        if not pos:
            return use, new_term
        hole = Var(self.fresh)
        template = replace_at(term, pos, hole)
        tmpl_line = self.emit(template, template, "refl")
        step = self.emit(term, new_term,
                         f"subst {tmpl_line} [{use}] {self.fmt_subst({self.fresh: src})}")
        return step, new_term

    def chain(self, term, steps):
        """Apply steps in order; returns (line proving term = final, final)."""
        acc = None
        for pos, label, forward, subst in steps:
            step_line, term2 = self.rewrite(term, pos, label, forward, subst)
            acc = step_line if acc is None else self.trans(acc, step_line)
            term = term2
        return acc, term

    def render(self):
        out = [f"proof over {self.t.name}"]
        for i, (lhs, rhs, just) in enumerate(self.lines, 1):
            out.append(f"{i}: {print_term(lhs)} = {print_term(rhs)} by {just};")
        return "\n".join(out) + "\n"


def tparse(sig, text):
    return parse_term(text, sig)


def check(name, theory_text, script: Script):
    text = script.render()
    theory = parse_theory(theory_text)
    proof = parse_proof(text, theory)
    res = check_proof(theory, proof)
    assert res.ok, f"{name}: line {res.line}: {res.reason}"
    print(f"# --- {name}: VALID ({len(proof.lines)} lines) ---")
    print(theory_text)
    print(text)


# ----------------------------------------------------------------------------
# Fixture A: the Flattening chain of the relative-closure theorem, with the
# cited comparability fact (x-bar z <= xz) as an axiom.
MCFLAT = """theory MCFLAT
sig -> : 2; e : 0;
axiom refl: (x -> x) = e;
axiom unit: (e -> x) = x;
axiom mexch: ((((x -> y) -> y) -> x) -> (((x -> y) -> y) -> z)) = (x -> z);
axiom icomm: (x -> (y -> z)) = (y -> (x -> z));
axiom lefirst: ((((x -> y) -> y) -> z) -> (x -> z)) = e;
"""


def fixture_a():
    t = parse_theory(MCFLAT)
    sig = t.signature
    s = Script(t, fresh=3)
    x, y, z = Var(0), Var(1), Var(2)
    xb = tparse(sig, "((x -> y) -> y)")
    xz = tparse(sig, "(x -> z)")
    tt = tparse(sig, "((x -> z) -> z)")
    start = App("->", (App("->", (xb, tt)), tt))
    w = App("->", (App("->", (xb, z)), xz))       # lefirst instance lhs
    steps = [
        ((0,), "icomm", True, {0: xb, 1: xz, 2: z}),
        ((0, 0), "unit", False, {0: xz}),
        ((0, 0, 0), "lefirst", False, {0: x, 1: y, 2: z}),
        ((1, 0), "unit", False, {0: xz}),
        ((1, 0, 0), "lefirst", False, {0: x, 1: y, 2: z}),
        ((), "mexch", True, {0: App("->", (xb, z)), 1: xz, 2: z}),
    ]
    line, final = s.chain(start, steps)
    assert final == tparse(sig, "((((x -> y) -> y) -> z) -> z)"), print_term(final)
    check("fixture A (flattening chain)", MCFLAT, s)


# ----------------------------------------------------------------------------
# Fixture B: the closure-stability chain, frozen at constants a <= b <= c,
# with the cited monotonicity and adjointness facts as axioms.

def fixture_b():
    zbar = "((c -> b) -> b)"
    a_term = f"(((c -> b) -> (c -> a)) -> ((c -> b) -> ({zbar} -> a)))"
    b_term = f"(((c -> b) -> (c -> a)) -> (({zbar} -> b) -> ({zbar} -> a)))"
    theory_text = f"""theory MCSTAB
sig -> : 2; e : 0; a : 0; b : 0; c : 0;
axiom refl: (x -> x) = e;
axiom unit: (e -> x) = x;
axiom mexch: ((((x -> y) -> y) -> x) -> (((x -> y) -> y) -> z)) = (x -> z);
axiom icomm: (x -> (y -> z)) = (y -> (x -> z));
axiom le_ab: (a -> b) = e;
axiom le_bc: (b -> c) = e;
axiom mono2: ((c -> a) -> (c -> b)) = e;
axiom le_b_zbar: (b -> {zbar}) = e;
axiom adj: ({b_term} -> {a_term}) = e;
"""
    t = parse_theory(theory_text)
    sig = t.signature
    s = Script(t, fresh=0)
    A = tparse(sig, a_term)
    B = tparse(sig, b_term)
    aa, bb, cc = App("a"), App("b"), App("c")
    zb = tparse(sig, zbar)
    ca = tparse(sig, "(c -> a)")
    cb = tparse(sig, "(c -> b)")
    zba = App("->", (zb, aa))
    u = App("->", (ca, zba))  # goal lhs: (c->a) -> (zbar -> a)

    # U = A: expand via the M-axiom at the comparable pair (ca, cb).
    line_u, final = s.chain(u, [
        ((), "mexch", False, {0: ca, 1: cb, 2: zba}),
        ((0, 0, 0), "mono2", True, {}),
        ((1, 0, 0), "mono2", True, {}),
        ((0, 0), "unit", True, {0: cb}),
        ((1, 0), "unit", True, {0: cb}),
    ])
    assert final == A, print_term(final)

    # B = e: both components collapse to (b -> a) via the M-axiom.
    line_b, final_b = s.chain(B, [
        # left component ((c->b) -> (c->a)) = (b -> a)
        ((0, 0, 0), "unit", False, {0: cc}),
        ((0, 0, 0, 0), "le_bc", False, {}),
        ((0, 1, 0), "unit", False, {0: cc}),
        ((0, 1, 0, 0), "le_bc", False, {}),
        ((0,), "mexch", True, {0: bb, 1: cc, 2: aa}),
        # right component ((zbar -> b) -> (zbar -> a)) = (b -> a)
        ((1, 0, 0), "unit", False, {0: zb}),
        ((1, 0, 0, 0), "le_b_zbar", False, {}),
        ((1, 1, 0), "unit", False, {0: zb}),
        ((1, 1, 0, 0), "le_b_zbar", False, {}),
        ((1,), "mexch", True, {0: bb, 1: zb, 2: aa}),
        # (b->a) -> (b->a) = e
        ((), "refl", True, {0: tparse(sig, "(b -> a)")}),
    ])
    assert final_b == App("e"), print_term(final_b)

    # adj and B = e give A = e, then U = e.
    adj_line, _, _ = s.axiom_line("adj", {})          # (B -> A) = e
    e_is_ba = s.sym(adj_line)                          # e = (B -> A)
    b_rev = s.sym(line_b)                              # e = B ... need B = e direction below
    # (B -> A) = (e -> A) by rewriting B with line_b
    hole = Var(0)
    template = App("->", (hole, A))
    tmpl = s.emit(template, template, "refl")
    step = s.emit(App("->", (B, A)), App("->", (App("e"), A)),
                  f"subst {tmpl} [{line_b}] {s.fmt_subst({0: B})}")
    e_to_a = s.trans(e_is_ba, step)                    # e = (e -> A)
    unit_a, _, _ = s.axiom_line("unit", {0: A})        # (e -> A) = A
    e_eq_a = s.trans(e_to_a, unit_a)                   # e = A
    a_eq_e = s.sym(e_eq_a)                             # A = e
    s.trans(line_u, a_eq_e)                            # U = e
    check("fixture B (closure stability chain)", theory_text, s)


# ----------------------------------------------------------------------------
# Fixture C: the X = Xy chains, frozen at constants a, b (z frozen at c),
# with the anti-symmetry outputs as axioms.
WRC1 = """theory WRC1
sig * : 2; a : 0; b : 0; c : 0;
axiom rabs: (((x * y) * y) * (x * y)) = (x * y);
axiom flat: ((x * y) * (x * z)) = ((x * y) * z);
axiom wcs: (((((x * y) * x) * (x * y)) * x) * (((x * y) * x) * x)) = (((x * y) * x) * x);
axiom as1: ((a * b) * (a * b)) = (a * b);
axiom as2: (((a * b) * a) * ((a * b) * a)) = ((a * b) * a);
axiom as3: ((((a * b) * a) * (a * b)) * a) = ((a * b) * a);
"""


def fixture_c():
    t = parse_theory(WRC1)
    sig = t.signature
    s = Script(t, fresh=0)
    aa, bb, cc = App("a"), App("b"), App("c")
    p = App("*", (aa, bb))            # x-bar
    pp = App("*", (p, p))
    X = App("*", (p, aa))

    # x-bar x-bar <= x-bar: (pp)p = (pb)p = p
    line_s1, final = s.chain(App("*", (pp, p)), [
        ((0,), "flat", True, {0: aa, 1: bb, 2: bb}),
        ((), "rabs", True, {0: aa, 1: bb}),
    ])
    assert final == p
    # x-bar <= x-bar x-bar: p(pp) = ((pp)p)(pp) = pp
    rev = s.sym(line_s1)
    line_s2, final = s.chain(App("*", (p, pp)), [
        ((0,), "as1", False, {}),     # placeholder, replaced below
    ]) if False else (None, None)
    # p(pp): rewrite first p to (pp)p via rev, then rabs at (p, p).
    hole = Var(0)
    start = App("*", (p, pp))
    template = App("*", (hole, pp))
    tmpl = s.emit(template, template, "refl")
    step = s.emit(start, App("*", (App("*", (pp, p)), pp)),
                  f"subst {tmpl} [{rev}] {s.fmt_subst({0: p})}")
    rabs_pp, _, _ = s.axiom_line("rabs", {0: p, 1: p})
    s.trans(step, rabs_pp)            # p(pp) = pp

    # upgraded right absorption at (a, b): p = p*b, via as1 + flat
    as1_line, _, _ = s.axiom_line("as1", {})
    as1_rev = s.sym(as1_line)                          # p = pp
    flat_pb, _, _ = s.axiom_line("flat", {0: aa, 1: bb, 2: bb})  # pp = pb
    urabs = s.trans(as1_rev, flat_pb)                  # p = p*b

    # upgraded right absorption at (p, a): X = X*a, via as2 + flat
    as2_line, _, _ = s.axiom_line("as2", {})
    as2_rev = s.sym(as2_line)                          # X = XX
    flat_xa, _, _ = s.axiom_line("flat", {0: p, 1: aa, 2: aa})   # XX = Xa
    urabs_x = s.trans(as2_rev, flat_xa)                # X = X*a
    urabs_x_rev = s.sym(urabs_x)                       # X*a = X

    # Xy <= X: (Xb)X = (Xb)(Xa) = (Xb)a = X
    xb_ = App("*", (X, bb))
    start = App("*", (xb_, X))
    template = App("*", (xb_, hole))
    tmpl = s.emit(template, template, "refl")
    step1 = s.emit(start, App("*", (xb_, App("*", (X, aa)))),
                   f"subst {tmpl} [{urabs_x}] {s.fmt_subst({0: X})}")
    flat_line, _, _ = s.axiom_line("flat", {0: X, 1: bb, 2: aa})  # (Xb)(Xa) = (Xb)a
    part1 = s.trans(step1, flat_line)                  # (Xb)X = (Xb)a

    # X x-bar = Xb (the bridge used by the weak-closure-stability citation)
    template = App("*", (X, hole))
    tmpl_x = s.emit(template, template, "refl")
    step2 = s.emit(App("*", (X, p)), App("*", (X, App("*", (p, bb)))),
                   f"subst {tmpl_x} [{urabs}] {s.fmt_subst({0: p})}")
    flat2, _, _ = s.axiom_line("flat", {0: p, 1: aa, 2: bb})      # X(pb) = Xb
    bridge = s.trans(step2, flat2)                     # Xp = Xb
    bridge_rev = s.sym(bridge)                         # Xb = Xp

    template = App("*", (hole, aa))
    tmpl_a = s.emit(template, template, "refl")
    step3 = s.emit(App("*", (xb_, aa)), App("*", (App("*", (X, p)), aa)),
                   f"subst {tmpl_a} [{bridge_rev}] {s.fmt_subst({0: xb_})}")
    as3_line, _, _ = s.axiom_line("as3", {})           # (Xp)a = X
    part2 = s.trans(step3, as3_line)                   # (Xb)a = X
    s.trans(part1, part2)                              # (Xb)X = X

    # X <= Xy: X(Xb) = (Xa)(Xb) = (Xa)b = Xb
    start = App("*", (X, xb_))
    template = App("*", (hole, xb_))
    tmpl = s.emit(template, template, "refl")
    step4 = s.emit(start, App("*", (App("*", (X, aa)), xb_)),
                   f"subst {tmpl} [{urabs_x}] {s.fmt_subst({0: X})}")
    flat3, _, _ = s.axiom_line("flat", {0: X, 1: aa, 2: bb})      # (Xa)(Xb) = (Xa)b
    part3 = s.trans(step4, flat3)
    template = App("*", (hole, bb))
    tmpl_b = s.emit(template, template, "refl")
    step5 = s.emit(App("*", (App("*", (X, aa)), bb)), App("*", (X, bb)),
                   f"subst {tmpl_b} [{urabs_x_rev}] {s.fmt_subst({0: App('*', (X, aa))})}")
    s.trans(part3, step5)                              # X(Xb) = Xb
    check("fixture C (X = Xy chains)", WRC1, s)


# ----------------------------------------------------------------------------
# Fixture D: the X = Y (Cornish) chains, with X = Xy and y <= xy as axiom
# schemas; the upgraded right absorption is derived in-script.
WRC2 = """theory WRC2
sig * : 2; a : 0; b : 0;
axiom rabs: (((x * y) * y) * (x * y)) = (x * y);
axiom flat: ((x * y) * (x * z)) = ((x * y) * z);
axiom wcs: (((((x * y) * x) * (x * y)) * x) * (((x * y) * x) * x)) = (((x * y) * x) * x);
axiom labs: (y * (x * y)) = (x * y);
axiom xeqxy: ((x * y) * x) = (((x * y) * x) * y);
"""


def fixture_d():
    t = parse_theory(WRC2)
    sig = t.signature
    s = Script(t, fresh=0)
    aa, bb = App("a"), App("b")
    p = App("*", (aa, bb))    # x-bar
    q = App("*", (bb, aa))    # y-bar
    X = App("*", (p, aa))
    Y = App("*", (q, bb))
    hole = Var(0)

    def urabs_chain(u, v):
        """u-bar = u-bar * v for the pair (u, v), via rabs + xeqxy + rabs."""
        uv = App("*", (u, v))
        rabs_line, _, _ = s.axiom_line("rabs", {0: u, 1: v})   # ((uv)v)(uv) = uv
        rabs_rev = s.sym(rabs_line)                            # uv = ((uv)v)(uv)
        xeq, _, _ = s.axiom_line("xeqxy", {0: uv, 1: v})       # ((uv*v)*uv) = (((uv*v)*uv)*v)
        half = s.trans(rabs_rev, xeq)                          # uv = (((uv)v)(uv))*v
        template = App("*", (hole, v))
        tmpl = s.emit(template, template, "refl")
        big = App("*", (App("*", (uv, v)), uv))
        step = s.emit(App("*", (big, v)), App("*", (uv, v)),
                      f"subst {tmpl} [{rabs_line}] {s.fmt_subst({0: big})}")
        return s.trans(half, step)                             # uv = (uv)*v

    urabs_ab = urabs_chain(aa, bb)     # p = p*b
    urabs_ba = urabs_chain(bb, aa)     # q = q*a

    def le_fact(u, v):
        """labs instance: v * (u*v) = (u*v), i.e. v <= uv."""
        line, _, _ = s.axiom_line("labs", {0: u, 1: v})
        return line

    # chain (iii): x-bar y-bar = (y x-bar)(y x) = (y x-bar) x = X
    labs_ab = le_fact(aa, bb)          # b*(a*b) = a*b  (y <= x-bar)
    labs_ab_rev = s.sym(labs_ab)
    start = App("*", (p, q))
    template = App("*", (hole, q))
    tmpl = s.emit(template, template, "refl")
    st1 = s.emit(start, App("*", (App("*", (bb, p)), q)),
                 f"subst {tmpl} [{labs_ab_rev}] {s.fmt_subst({0: p})}")
    fl, _, _ = s.axiom_line("flat", {0: bb, 1: p, 2: aa})   # (b p)(b a) = (b p) a
    st2 = s.trans(st1, fl)
    template = App("*", (hole, aa))
    tmpl_a = s.emit(template, template, "refl")
    st3 = s.emit(App("*", (App("*", (bb, p)), aa)), App("*", (p, aa)),
                 f"subst {tmpl_a} [{labs_ab}] {s.fmt_subst({0: App('*', (bb, p))})}")
    chain_iii = s.trans(st2, st3)      # p*q = X

    # mirror: y-bar x-bar = (x y-bar)(x y) = (x y-bar) y = Y
    labs_ba = le_fact(bb, aa)          # a*(b*a) = b*a  (x <= y-bar)
    labs_ba_rev = s.sym(labs_ba)
    start = App("*", (q, p))
    template = App("*", (hole, p))
    tmpl = s.emit(template, template, "refl")
    st4 = s.emit(start, App("*", (App("*", (aa, q)), p)),
                 f"subst {tmpl} [{labs_ba_rev}] {s.fmt_subst({0: q})}")
    fl2, _, _ = s.axiom_line("flat", {0: aa, 1: q, 2: bb})
    st5 = s.trans(st4, fl2)
    template = App("*", (hole, bb))
    tmpl_b = s.emit(template, template, "refl")
    st6 = s.emit(App("*", (App("*", (aa, q)), bb)), App("*", (q, bb)),
                 f"subst {tmpl_b} [{labs_ba}] {s.fmt_subst({0: App('*', (aa, q))})}")
    chain_mirror = s.trans(st5, st6)   # q*p = Y

    # y-bar X = X, from y-bar <= x-bar y-bar = X
    labs_pq = le_fact(p, q)            # q*(p*q) = p*q
    template = App("*", (q, hole))
    tmpl_q = s.emit(template, template, "refl")
    st7 = s.emit(App("*", (q, App("*", (p, q)))), App("*", (q, X)),
                 f"subst {tmpl_q} [{chain_iii}] {s.fmt_subst({0: App('*', (p, q))})}")
    st7r = s.sym(st7)
    st8 = s.trans(st7r, labs_pq)       # qX = pq
    ybar_x = s.trans(st8, chain_iii)   # qX = X
    ybar_x_rev = s.sym(ybar_x)

    # chain (iv): XY = X(y-bar x-bar) = X x-bar = X
    start = App("*", (X, Y))
    template = App("*", (X, hole))
    tmpl_x = s.emit(template, template, "refl")
    mirror_rev = s.sym(chain_mirror)   # Y = q*p
    st9 = s.emit(start, App("*", (X, App("*", (q, p)))),
                 f"subst {tmpl_x} [{mirror_rev}] {s.fmt_subst({0: Y})}")
    template = App("*", (hole, App("*", (q, p))))
    tmpl2 = s.emit(template, template, "refl")
    st10 = s.emit(App("*", (X, App("*", (q, p)))),
                  App("*", (App("*", (q, X)), App("*", (q, p)))),
                  f"subst {tmpl2} [{ybar_x_rev}] {s.fmt_subst({0: X})}")
    fl3, _, _ = s.axiom_line("flat", {0: q, 1: X, 2: p})   # (qX)(qp) = (qX)p
    st11 = s.trans(st10, fl3)
    template = App("*", (hole, p))
    tmpl3 = s.emit(template, template, "refl")
    st12 = s.emit(App("*", (App("*", (q, X)), p)), App("*", (X, p)),
                  f"subst {tmpl3} [{ybar_x}] {s.fmt_subst({0: App('*', (q, X))})}")
    st13 = s.trans(st11, st12)         # X(qp) = Xp
    half_iv = s.trans(st9, st13)       # XY = Xp

    # X x-bar = Xb = X
    template = App("*", (X, hole))
    tmpl4 = s.emit(template, template, "refl")
    st14 = s.emit(App("*", (X, p)), App("*", (X, App("*", (p, bb)))),
                  f"subst {tmpl4} [{urabs_ab}] {s.fmt_subst({0: p})}")
    fl4, _, _ = s.axiom_line("flat", {0: p, 1: aa, 2: bb})  # X(pb) = Xb
    st15 = s.trans(st14, fl4)          # Xp = Xb
    xeq_ab, _, _ = s.axiom_line("xeqxy", {0: aa, 1: bb})    # X = Xb
    xeq_ab_rev = s.sym(xeq_ab)         # Xb = X
    st16 = s.trans(st15, xeq_ab_rev)   # Xp = X
    s.trans(half_iv, st16)             # XY = X

    # mirror: YX = Y(x-bar y-bar) = Y y-bar = Y
    labs_qp = le_fact(q, p)            # p*(q*p) = q*p
    template = App("*", (p, hole))
    tmpl_p = s.emit(template, template, "refl")
    st17 = s.emit(App("*", (p, App("*", (q, p)))), App("*", (p, Y)),
                  f"subst {tmpl_p} [{chain_mirror}] {s.fmt_subst({0: App('*', (q, p))})}")
    st17r = s.sym(st17)
    st18 = s.trans(st17r, labs_qp)     # pY = qp
    xbar_y = s.trans(st18, chain_mirror)  # pY = Y
    xbar_y_rev = s.sym(xbar_y)

    start = App("*", (Y, X))
    template = App("*", (Y, hole))
    tmpl5 = s.emit(template, template, "refl")
    iii_rev = s.sym(chain_iii)         # X = p*q
    st19 = s.emit(start, App("*", (Y, App("*", (p, q)))),
                  f"subst {tmpl5} [{iii_rev}] {s.fmt_subst({0: X})}")
    template = App("*", (hole, App("*", (p, q))))
    tmpl6 = s.emit(template, template, "refl")
    st20 = s.emit(App("*", (Y, App("*", (p, q)))),
                  App("*", (App("*", (p, Y)), App("*", (p, q)))),
                  f"subst {tmpl6} [{xbar_y_rev}] {s.fmt_subst({0: Y})}")
    fl5, _, _ = s.axiom_line("flat", {0: p, 1: Y, 2: q})    # (pY)(pq) = (pY)q
    st21 = s.trans(st20, fl5)
    template = App("*", (hole, q))
    tmpl7 = s.emit(template, template, "refl")
    st22 = s.emit(App("*", (App("*", (p, Y)), q)), App("*", (Y, q)),
                  f"subst {tmpl7} [{xbar_y}] {s.fmt_subst({0: App('*', (p, Y))})}")
    st23 = s.trans(st21, st22)         # Y(pq) = Yq
    half_mirror = s.trans(st19, st23)  # YX = Yq

    template = App("*", (Y, hole))
    tmpl8 = s.emit(template, template, "refl")
    st24 = s.emit(App("*", (Y, q)), App("*", (Y, App("*", (q, aa)))),
                  f"subst {tmpl8} [{urabs_ba}] {s.fmt_subst({0: q})}")
    fl6, _, _ = s.axiom_line("flat", {0: q, 1: bb, 2: aa})  # Y(qa) = Ya
    st25 = s.trans(st24, fl6)          # Yq = Ya
    xeq_ba, _, _ = s.axiom_line("xeqxy", {0: bb, 1: aa})    # Y = Ya
    xeq_ba_rev = s.sym(xeq_ba)
    st26 = s.trans(st25, xeq_ba_rev)   # Yq = Y
    s.trans(half_mirror, st26)         # YX = Y
    check("fixture D (X = Y chains)", WRC2, s)


fixture_a()
fixture_b()
fixture_c()
fixture_d()
