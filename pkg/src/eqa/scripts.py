"""Bundled derivation scripts replayed by the verification suite.

Each script is a hand-transcribed .eqp derivation chain over a small theory:
the flattening and closure-stability chains for the relative-closure term
(x -> y) -> y, and the X = Xy and X = Y chains for the anti-symmetry
equationalization, frozen at constants. Auxiliary facts the chains cite
(comparability, adjointness, anti-symmetry outputs) appear as axioms of the
fixture theories.
"""

from __future__ import annotations

MC_FLATTENING_THEORY = """\
theory MCFLAT
sig -> : 2; e : 0;
axiom refl: (x -> x) = e;
axiom unit: (e -> x) = x;
axiom mexch: ((((x -> y) -> y) -> x) -> (((x -> y) -> y) -> z)) = (x -> z);
axiom icomm: (x -> (y -> z)) = (y -> (x -> z));
axiom lefirst: ((((x -> y) -> y) -> z) -> (x -> z)) = e;
"""

MC_FLATTENING_PROOF = """\
proof over MCFLAT
1: (((x -> y) -> y) -> ((x -> z) -> z)) = ((x -> z) -> (((x -> y) -> y) -> z)) by axiom icomm [x -> ((x -> y) -> y), y -> (x -> z), z -> z];
2: (x3 -> ((x -> z) -> z)) = (x3 -> ((x -> z) -> z)) by refl;
3: ((((x -> y) -> y) -> ((x -> z) -> z)) -> ((x -> z) -> z)) = (((x -> z) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) by subst 2 [1] [x3 -> (((x -> y) -> y) -> ((x -> z) -> z))];
4: (e -> (x -> z)) = (x -> z) by axiom unit [x -> (x -> z)];
5: (x -> z) = (e -> (x -> z)) by sym 4;
6: ((x3 -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) = ((x3 -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) by refl;
7: (((x -> z) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) = (((e -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) by subst 6 [5] [x3 -> (x -> z)];
8: ((((x -> y) -> y) -> ((x -> z) -> z)) -> ((x -> z) -> z)) = (((e -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) by trans 3 7;
9: ((((x -> y) -> y) -> z) -> (x -> z)) = e by axiom lefirst [x -> x, y -> y, z -> z];
10: e = ((((x -> y) -> y) -> z) -> (x -> z)) by sym 9;
11: (((x3 -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) = (((x3 -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) by refl;
12: (((e -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) = (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) by subst 11 [10] [x3 -> e];
13: ((((x -> y) -> y) -> ((x -> z) -> z)) -> ((x -> z) -> z)) = (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) by trans 8 12;
14: (e -> (x -> z)) = (x -> z) by axiom unit [x -> (x -> z)];
15: (x -> z) = (e -> (x -> z)) by sym 14;
16: (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> (x3 -> z)) = (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> (x3 -> z)) by refl;
17: (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x -> z) -> z)) = (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((e -> (x -> z)) -> z)) by subst 16 [15] [x3 -> (x -> z)];
18: ((((x -> y) -> y) -> ((x -> z) -> z)) -> ((x -> z) -> z)) = (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((e -> (x -> z)) -> z)) by trans 13 17;
19: ((((x -> y) -> y) -> z) -> (x -> z)) = e by axiom lefirst [x -> x, y -> y, z -> z];
20: e = ((((x -> y) -> y) -> z) -> (x -> z)) by sym 19;
21: (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x3 -> (x -> z)) -> z)) = (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((x3 -> (x -> z)) -> z)) by refl;
22: (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((e -> (x -> z)) -> z)) = (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> z)) by subst 21 [20] [x3 -> e];
23: ((((x -> y) -> y) -> ((x -> z) -> z)) -> ((x -> z) -> z)) = (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> z)) by trans 18 22;
24: (((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> (((x -> y) -> y) -> z)) -> ((((((x -> y) -> y) -> z) -> (x -> z)) -> (x -> z)) -> z)) = ((((x -> y) -> y) -> z) -> z) by axiom mexch [x -> (((x -> y) -> y) -> z), y -> (x -> z), z -> z];
25: ((((x -> y) -> y) -> ((x -> z) -> z)) -> ((x -> z) -> z)) = ((((x -> y) -> y) -> z) -> z) by trans 23 24;
"""

MC_CLOSURE_STABILITY_THEORY = """\
theory MCSTAB
sig -> : 2; e : 0; a : 0; b : 0; c : 0;
axiom refl: (x -> x) = e;
axiom unit: (e -> x) = x;
axiom mexch: ((((x -> y) -> y) -> x) -> (((x -> y) -> y) -> z)) = (x -> z);
axiom icomm: (x -> (y -> z)) = (y -> (x -> z));
axiom le_ab: (a -> b) = e;
axiom le_bc: (b -> c) = e;
axiom mono2: ((c -> a) -> (c -> b)) = e;
axiom le_b_zbar: (b -> ((c -> b) -> b)) = e;
axiom adj: ((((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) = e;
"""

MC_CLOSURE_STABILITY_PROOF = """\
proof over MCSTAB
1: (((((c -> a) -> (c -> b)) -> (c -> b)) -> (c -> a)) -> ((((c -> a) -> (c -> b)) -> (c -> b)) -> (((c -> b) -> b) -> a))) = ((c -> a) -> (((c -> b) -> b) -> a)) by axiom mexch [x -> (c -> a), y -> (c -> b), z -> (((c -> b) -> b) -> a)];
2: ((c -> a) -> (((c -> b) -> b) -> a)) = (((((c -> a) -> (c -> b)) -> (c -> b)) -> (c -> a)) -> ((((c -> a) -> (c -> b)) -> (c -> b)) -> (((c -> b) -> b) -> a))) by sym 1;
3: ((c -> a) -> (c -> b)) = e by axiom mono2;
4: (((x -> (c -> b)) -> (c -> a)) -> ((((c -> a) -> (c -> b)) -> (c -> b)) -> (((c -> b) -> b) -> a))) = (((x -> (c -> b)) -> (c -> a)) -> ((((c -> a) -> (c -> b)) -> (c -> b)) -> (((c -> b) -> b) -> a))) by refl;
5: (((((c -> a) -> (c -> b)) -> (c -> b)) -> (c -> a)) -> ((((c -> a) -> (c -> b)) -> (c -> b)) -> (((c -> b) -> b) -> a))) = (((e -> (c -> b)) -> (c -> a)) -> ((((c -> a) -> (c -> b)) -> (c -> b)) -> (((c -> b) -> b) -> a))) by subst 4 [3] [x -> ((c -> a) -> (c -> b))];
6: ((c -> a) -> (((c -> b) -> b) -> a)) = (((e -> (c -> b)) -> (c -> a)) -> ((((c -> a) -> (c -> b)) -> (c -> b)) -> (((c -> b) -> b) -> a))) by trans 2 5;
7: ((c -> a) -> (c -> b)) = e by axiom mono2;
8: (((e -> (c -> b)) -> (c -> a)) -> ((x -> (c -> b)) -> (((c -> b) -> b) -> a))) = (((e -> (c -> b)) -> (c -> a)) -> ((x -> (c -> b)) -> (((c -> b) -> b) -> a))) by refl;
9: (((e -> (c -> b)) -> (c -> a)) -> ((((c -> a) -> (c -> b)) -> (c -> b)) -> (((c -> b) -> b) -> a))) = (((e -> (c -> b)) -> (c -> a)) -> ((e -> (c -> b)) -> (((c -> b) -> b) -> a))) by subst 8 [7] [x -> ((c -> a) -> (c -> b))];
10: ((c -> a) -> (((c -> b) -> b) -> a)) = (((e -> (c -> b)) -> (c -> a)) -> ((e -> (c -> b)) -> (((c -> b) -> b) -> a))) by trans 6 9;
11: (e -> (c -> b)) = (c -> b) by axiom unit [x -> (c -> b)];
12: ((x -> (c -> a)) -> ((e -> (c -> b)) -> (((c -> b) -> b) -> a))) = ((x -> (c -> a)) -> ((e -> (c -> b)) -> (((c -> b) -> b) -> a))) by refl;
13: (((e -> (c -> b)) -> (c -> a)) -> ((e -> (c -> b)) -> (((c -> b) -> b) -> a))) = (((c -> b) -> (c -> a)) -> ((e -> (c -> b)) -> (((c -> b) -> b) -> a))) by subst 12 [11] [x -> (e -> (c -> b))];
14: ((c -> a) -> (((c -> b) -> b) -> a)) = (((c -> b) -> (c -> a)) -> ((e -> (c -> b)) -> (((c -> b) -> b) -> a))) by trans 10 13;
15: (e -> (c -> b)) = (c -> b) by axiom unit [x -> (c -> b)];
16: (((c -> b) -> (c -> a)) -> (x -> (((c -> b) -> b) -> a))) = (((c -> b) -> (c -> a)) -> (x -> (((c -> b) -> b) -> a))) by refl;
17: (((c -> b) -> (c -> a)) -> ((e -> (c -> b)) -> (((c -> b) -> b) -> a))) = (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a))) by subst 16 [15] [x -> (e -> (c -> b))];
18: ((c -> a) -> (((c -> b) -> b) -> a)) = (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a))) by trans 14 17;
19: (e -> c) = c by axiom unit [x -> c];
20: c = (e -> c) by sym 19;
21: (((x -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((x -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by refl;
22: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((((e -> c) -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by subst 21 [20] [x -> c];
23: (b -> c) = e by axiom le_bc;
24: e = (b -> c) by sym 23;
25: ((((x -> c) -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((((x -> c) -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by refl;
26: ((((e -> c) -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((((b -> c) -> c) -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by subst 25 [24] [x -> e];
27: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((((b -> c) -> c) -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by trans 22 26;
28: (e -> c) = c by axiom unit [x -> c];
29: c = (e -> c) by sym 28;
30: (((((b -> c) -> c) -> b) -> (x -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((((b -> c) -> c) -> b) -> (x -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by refl;
31: (((((b -> c) -> c) -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((((b -> c) -> c) -> b) -> ((e -> c) -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by subst 30 [29] [x -> c];
32: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((((b -> c) -> c) -> b) -> ((e -> c) -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by trans 27 31;
33: (b -> c) = e by axiom le_bc;
34: e = (b -> c) by sym 33;
35: (((((b -> c) -> c) -> b) -> ((x -> c) -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((((b -> c) -> c) -> b) -> ((x -> c) -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by refl;
36: (((((b -> c) -> c) -> b) -> ((e -> c) -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((((b -> c) -> c) -> b) -> (((b -> c) -> c) -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by subst 35 [34] [x -> e];
37: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (((((b -> c) -> c) -> b) -> (((b -> c) -> c) -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by trans 32 36;
38: ((((b -> c) -> c) -> b) -> (((b -> c) -> c) -> a)) = (b -> a) by axiom mexch [x -> b, y -> c, z -> a];
39: (x -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = (x -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by refl;
40: (((((b -> c) -> c) -> b) -> (((b -> c) -> c) -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by subst 39 [38] [x -> ((((b -> c) -> c) -> b) -> (((b -> c) -> c) -> a))];
41: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by trans 37 40;
42: (e -> ((c -> b) -> b)) = ((c -> b) -> b) by axiom unit [x -> ((c -> b) -> b)];
43: ((c -> b) -> b) = (e -> ((c -> b) -> b)) by sym 42;
44: ((b -> a) -> ((x -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> ((x -> b) -> (((c -> b) -> b) -> a))) by refl;
45: ((b -> a) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> (((e -> ((c -> b) -> b)) -> b) -> (((c -> b) -> b) -> a))) by subst 44 [43] [x -> ((c -> b) -> b)];
46: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> (((e -> ((c -> b) -> b)) -> b) -> (((c -> b) -> b) -> a))) by trans 41 45;
47: (b -> ((c -> b) -> b)) = e by axiom le_b_zbar;
48: e = (b -> ((c -> b) -> b)) by sym 47;
49: ((b -> a) -> (((x -> ((c -> b) -> b)) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> (((x -> ((c -> b) -> b)) -> b) -> (((c -> b) -> b) -> a))) by refl;
50: ((b -> a) -> (((e -> ((c -> b) -> b)) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (((c -> b) -> b) -> a))) by subst 49 [48] [x -> e];
51: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (((c -> b) -> b) -> a))) by trans 46 50;
52: (e -> ((c -> b) -> b)) = ((c -> b) -> b) by axiom unit [x -> ((c -> b) -> b)];
53: ((c -> b) -> b) = (e -> ((c -> b) -> b)) by sym 52;
54: ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (x -> a))) = ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (x -> a))) by refl;
55: ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> ((e -> ((c -> b) -> b)) -> a))) by subst 54 [53] [x -> ((c -> b) -> b)];
56: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> ((e -> ((c -> b) -> b)) -> a))) by trans 51 55;
57: (b -> ((c -> b) -> b)) = e by axiom le_b_zbar;
58: e = (b -> ((c -> b) -> b)) by sym 57;
59: ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> ((x -> ((c -> b) -> b)) -> a))) = ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> ((x -> ((c -> b) -> b)) -> a))) by refl;
60: ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> ((e -> ((c -> b) -> b)) -> a))) = ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> a))) by subst 59 [58] [x -> e];
61: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> a))) by trans 56 60;
62: ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> a)) = (b -> a) by axiom mexch [x -> b, y -> ((c -> b) -> b), z -> a];
63: ((b -> a) -> x) = ((b -> a) -> x) by refl;
64: ((b -> a) -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> a))) = ((b -> a) -> (b -> a)) by subst 63 [62] [x -> ((((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> b) -> (((b -> ((c -> b) -> b)) -> ((c -> b) -> b)) -> a))];
65: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = ((b -> a) -> (b -> a)) by trans 61 64;
66: ((b -> a) -> (b -> a)) = e by axiom refl [x -> (b -> a)];
67: (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) = e by trans 65 66;
68: ((((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) = e by axiom adj;
69: e = ((((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) by sym 68;
70: e = (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) by sym 67;
71: (x -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) = (x -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) by refl;
72: ((((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a))) -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) = (e -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) by subst 71 [67] [x -> (((c -> b) -> (c -> a)) -> ((((c -> b) -> b) -> b) -> (((c -> b) -> b) -> a)))];
73: e = (e -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) by trans 69 72;
74: (e -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))) = (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a))) by axiom unit [x -> (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a)))];
75: e = (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a))) by trans 73 74;
76: (((c -> b) -> (c -> a)) -> ((c -> b) -> (((c -> b) -> b) -> a))) = e by sym 75;
77: ((c -> a) -> (((c -> b) -> b) -> a)) = e by trans 18 76;
"""

ANTISYM_X_XY_THEORY = """\
theory WRC1
sig * : 2; a : 0; b : 0; c : 0;
axiom rabs: (((x * y) * y) * (x * y)) = (x * y);
axiom flat: ((x * y) * (x * z)) = ((x * y) * z);
axiom wcs: (((((x * y) * x) * (x * y)) * x) * (((x * y) * x) * x)) = (((x * y) * x) * x);
axiom as1: ((a * b) * (a * b)) = (a * b);
axiom as2: (((a * b) * a) * ((a * b) * a)) = ((a * b) * a);
axiom as3: ((((a * b) * a) * (a * b)) * a) = ((a * b) * a);
"""

ANTISYM_X_XY_PROOF = """\
proof over WRC1
1: ((a * b) * (a * b)) = ((a * b) * b) by axiom flat [x -> a, y -> b, z -> b];
2: (x * (a * b)) = (x * (a * b)) by refl;
3: (((a * b) * (a * b)) * (a * b)) = (((a * b) * b) * (a * b)) by subst 2 [1] [x -> ((a * b) * (a * b))];
4: (((a * b) * b) * (a * b)) = (a * b) by axiom rabs [x -> a, y -> b];
5: (((a * b) * (a * b)) * (a * b)) = (a * b) by trans 3 4;
6: (a * b) = (((a * b) * (a * b)) * (a * b)) by sym 5;
7: (x * ((a * b) * (a * b))) = (x * ((a * b) * (a * b))) by refl;
8: ((a * b) * ((a * b) * (a * b))) = ((((a * b) * (a * b)) * (a * b)) * ((a * b) * (a * b))) by subst 7 [6] [x -> (a * b)];
9: ((((a * b) * (a * b)) * (a * b)) * ((a * b) * (a * b))) = ((a * b) * (a * b)) by axiom rabs [x -> (a * b), y -> (a * b)];
10: ((a * b) * ((a * b) * (a * b))) = ((a * b) * (a * b)) by trans 8 9;
11: ((a * b) * (a * b)) = (a * b) by axiom as1;
12: (a * b) = ((a * b) * (a * b)) by sym 11;
13: ((a * b) * (a * b)) = ((a * b) * b) by axiom flat [x -> a, y -> b, z -> b];
14: (a * b) = ((a * b) * b) by trans 12 13;
15: (((a * b) * a) * ((a * b) * a)) = ((a * b) * a) by axiom as2;
16: ((a * b) * a) = (((a * b) * a) * ((a * b) * a)) by sym 15;
17: (((a * b) * a) * ((a * b) * a)) = (((a * b) * a) * a) by axiom flat [x -> (a * b), y -> a, z -> a];
18: ((a * b) * a) = (((a * b) * a) * a) by trans 16 17;
19: (((a * b) * a) * a) = ((a * b) * a) by sym 18;
20: ((((a * b) * a) * b) * x) = ((((a * b) * a) * b) * x) by refl;
21: ((((a * b) * a) * b) * ((a * b) * a)) = ((((a * b) * a) * b) * (((a * b) * a) * a)) by subst 20 [18] [x -> ((a * b) * a)];
22: ((((a * b) * a) * b) * (((a * b) * a) * a)) = ((((a * b) * a) * b) * a) by axiom flat [x -> ((a * b) * a), y -> b, z -> a];
23: ((((a * b) * a) * b) * ((a * b) * a)) = ((((a * b) * a) * b) * a) by trans 21 22;
24: (((a * b) * a) * x) = (((a * b) * a) * x) by refl;
25: (((a * b) * a) * (a * b)) = (((a * b) * a) * ((a * b) * b)) by subst 24 [14] [x -> (a * b)];
26: (((a * b) * a) * ((a * b) * b)) = (((a * b) * a) * b) by axiom flat [x -> (a * b), y -> a, z -> b];
27: (((a * b) * a) * (a * b)) = (((a * b) * a) * b) by trans 25 26;
28: (((a * b) * a) * b) = (((a * b) * a) * (a * b)) by sym 27;
29: (x * a) = (x * a) by refl;
30: ((((a * b) * a) * b) * a) = ((((a * b) * a) * (a * b)) * a) by subst 29 [28] [x -> (((a * b) * a) * b)];
31: ((((a * b) * a) * (a * b)) * a) = ((a * b) * a) by axiom as3;
32: ((((a * b) * a) * b) * a) = ((a * b) * a) by trans 30 31;
33: ((((a * b) * a) * b) * ((a * b) * a)) = ((a * b) * a) by trans 23 32;
34: (x * (((a * b) * a) * b)) = (x * (((a * b) * a) * b)) by refl;
35: (((a * b) * a) * (((a * b) * a) * b)) = ((((a * b) * a) * a) * (((a * b) * a) * b)) by subst 34 [18] [x -> ((a * b) * a)];
36: ((((a * b) * a) * a) * (((a * b) * a) * b)) = ((((a * b) * a) * a) * b) by axiom flat [x -> ((a * b) * a), y -> a, z -> b];
37: (((a * b) * a) * (((a * b) * a) * b)) = ((((a * b) * a) * a) * b) by trans 35 36;
38: (x * b) = (x * b) by refl;
39: ((((a * b) * a) * a) * b) = (((a * b) * a) * b) by subst 38 [19] [x -> (((a * b) * a) * a)];
40: (((a * b) * a) * (((a * b) * a) * b)) = (((a * b) * a) * b) by trans 37 39;
"""

ANTISYM_X_Y_THEORY = """\
theory WRC2
sig * : 2; a : 0; b : 0;
axiom rabs: (((x * y) * y) * (x * y)) = (x * y);
axiom flat: ((x * y) * (x * z)) = ((x * y) * z);
axiom wcs: (((((x * y) * x) * (x * y)) * x) * (((x * y) * x) * x)) = (((x * y) * x) * x);
axiom labs: (y * (x * y)) = (x * y);
axiom xeqxy: ((x * y) * x) = (((x * y) * x) * y);
"""

ANTISYM_X_Y_PROOF = """\
proof over WRC2
1: (((a * b) * b) * (a * b)) = (a * b) by axiom rabs [x -> a, y -> b];
2: (a * b) = (((a * b) * b) * (a * b)) by sym 1;
3: (((a * b) * b) * (a * b)) = ((((a * b) * b) * (a * b)) * b) by axiom xeqxy [x -> (a * b), y -> b];
4: (a * b) = ((((a * b) * b) * (a * b)) * b) by trans 2 3;
5: (x * b) = (x * b) by refl;
6: ((((a * b) * b) * (a * b)) * b) = ((a * b) * b) by subst 5 [1] [x -> (((a * b) * b) * (a * b))];
7: (a * b) = ((a * b) * b) by trans 4 6;
8: (((b * a) * a) * (b * a)) = (b * a) by axiom rabs [x -> b, y -> a];
9: (b * a) = (((b * a) * a) * (b * a)) by sym 8;
10: (((b * a) * a) * (b * a)) = ((((b * a) * a) * (b * a)) * a) by axiom xeqxy [x -> (b * a), y -> a];
11: (b * a) = ((((b * a) * a) * (b * a)) * a) by trans 9 10;
12: (x * a) = (x * a) by refl;
13: ((((b * a) * a) * (b * a)) * a) = ((b * a) * a) by subst 12 [8] [x -> (((b * a) * a) * (b * a))];
14: (b * a) = ((b * a) * a) by trans 11 13;
15: (b * (a * b)) = (a * b) by axiom labs [x -> a, y -> b];
16: (a * b) = (b * (a * b)) by sym 15;
17: (x * (b * a)) = (x * (b * a)) by refl;
18: ((a * b) * (b * a)) = ((b * (a * b)) * (b * a)) by subst 17 [16] [x -> (a * b)];
19: ((b * (a * b)) * (b * a)) = ((b * (a * b)) * a) by axiom flat [x -> b, y -> (a * b), z -> a];
20: ((a * b) * (b * a)) = ((b * (a * b)) * a) by trans 18 19;
21: (x * a) = (x * a) by refl;
22: ((b * (a * b)) * a) = ((a * b) * a) by subst 21 [15] [x -> (b * (a * b))];
23: ((a * b) * (b * a)) = ((a * b) * a) by trans 20 22;
24: (a * (b * a)) = (b * a) by axiom labs [x -> b, y -> a];
25: (b * a) = (a * (b * a)) by sym 24;
26: (x * (a * b)) = (x * (a * b)) by refl;
27: ((b * a) * (a * b)) = ((a * (b * a)) * (a * b)) by subst 26 [25] [x -> (b * a)];
28: ((a * (b * a)) * (a * b)) = ((a * (b * a)) * b) by axiom flat [x -> a, y -> (b * a), z -> b];
29: ((b * a) * (a * b)) = ((a * (b * a)) * b) by trans 27 28;
30: (x * b) = (x * b) by refl;
31: ((a * (b * a)) * b) = ((b * a) * b) by subst 30 [24] [x -> (a * (b * a))];
32: ((b * a) * (a * b)) = ((b * a) * b) by trans 29 31;
33: ((b * a) * ((a * b) * (b * a))) = ((a * b) * (b * a)) by axiom labs [x -> (a * b), y -> (b * a)];
34: ((b * a) * x) = ((b * a) * x) by refl;
35: ((b * a) * ((a * b) * (b * a))) = ((b * a) * ((a * b) * a)) by subst 34 [23] [x -> ((a * b) * (b * a))];
36: ((b * a) * ((a * b) * a)) = ((b * a) * ((a * b) * (b * a))) by sym 35;
37: ((b * a) * ((a * b) * a)) = ((a * b) * (b * a)) by trans 36 33;
38: ((b * a) * ((a * b) * a)) = ((a * b) * a) by trans 37 23;
39: ((a * b) * a) = ((b * a) * ((a * b) * a)) by sym 38;
40: (((a * b) * a) * x) = (((a * b) * a) * x) by refl;
41: ((b * a) * b) = ((b * a) * (a * b)) by sym 32;
42: (((a * b) * a) * ((b * a) * b)) = (((a * b) * a) * ((b * a) * (a * b))) by subst 40 [41] [x -> ((b * a) * b)];
43: (x * ((b * a) * (a * b))) = (x * ((b * a) * (a * b))) by refl;
44: (((a * b) * a) * ((b * a) * (a * b))) = (((b * a) * ((a * b) * a)) * ((b * a) * (a * b))) by subst 43 [39] [x -> ((a * b) * a)];
45: (((b * a) * ((a * b) * a)) * ((b * a) * (a * b))) = (((b * a) * ((a * b) * a)) * (a * b)) by axiom flat [x -> (b * a), y -> ((a * b) * a), z -> (a * b)];
46: (((a * b) * a) * ((b * a) * (a * b))) = (((b * a) * ((a * b) * a)) * (a * b)) by trans 44 45;
47: (x * (a * b)) = (x * (a * b)) by refl;
48: (((b * a) * ((a * b) * a)) * (a * b)) = (((a * b) * a) * (a * b)) by subst 47 [38] [x -> ((b * a) * ((a * b) * a))];
49: (((a * b) * a) * ((b * a) * (a * b))) = (((a * b) * a) * (a * b)) by trans 46 48;
50: (((a * b) * a) * ((b * a) * b)) = (((a * b) * a) * (a * b)) by trans 42 49;
51: (((a * b) * a) * x) = (((a * b) * a) * x) by refl;
52: (((a * b) * a) * (a * b)) = (((a * b) * a) * ((a * b) * b)) by subst 51 [7] [x -> (a * b)];
53: (((a * b) * a) * ((a * b) * b)) = (((a * b) * a) * b) by axiom flat [x -> (a * b), y -> a, z -> b];
54: (((a * b) * a) * (a * b)) = (((a * b) * a) * b) by trans 52 53;
55: ((a * b) * a) = (((a * b) * a) * b) by axiom xeqxy [x -> a, y -> b];
56: (((a * b) * a) * b) = ((a * b) * a) by sym 55;
57: (((a * b) * a) * (a * b)) = ((a * b) * a) by trans 54 56;
58: (((a * b) * a) * ((b * a) * b)) = ((a * b) * a) by trans 50 57;
59: ((a * b) * ((b * a) * (a * b))) = ((b * a) * (a * b)) by axiom labs [x -> (b * a), y -> (a * b)];
60: ((a * b) * x) = ((a * b) * x) by refl;
61: ((a * b) * ((b * a) * (a * b))) = ((a * b) * ((b * a) * b)) by subst 60 [32] [x -> ((b * a) * (a * b))];
62: ((a * b) * ((b * a) * b)) = ((a * b) * ((b * a) * (a * b))) by sym 61;
63: ((a * b) * ((b * a) * b)) = ((b * a) * (a * b)) by trans 62 59;
64: ((a * b) * ((b * a) * b)) = ((b * a) * b) by trans 63 32;
65: ((b * a) * b) = ((a * b) * ((b * a) * b)) by sym 64;
66: (((b * a) * b) * x) = (((b * a) * b) * x) by refl;
67: ((a * b) * a) = ((a * b) * (b * a)) by sym 23;
68: (((b * a) * b) * ((a * b) * a)) = (((b * a) * b) * ((a * b) * (b * a))) by subst 66 [67] [x -> ((a * b) * a)];
69: (x * ((a * b) * (b * a))) = (x * ((a * b) * (b * a))) by refl;
70: (((b * a) * b) * ((a * b) * (b * a))) = (((a * b) * ((b * a) * b)) * ((a * b) * (b * a))) by subst 69 [65] [x -> ((b * a) * b)];
71: (((a * b) * ((b * a) * b)) * ((a * b) * (b * a))) = (((a * b) * ((b * a) * b)) * (b * a)) by axiom flat [x -> (a * b), y -> ((b * a) * b), z -> (b * a)];
72: (((b * a) * b) * ((a * b) * (b * a))) = (((a * b) * ((b * a) * b)) * (b * a)) by trans 70 71;
73: (x * (b * a)) = (x * (b * a)) by refl;
74: (((a * b) * ((b * a) * b)) * (b * a)) = (((b * a) * b) * (b * a)) by subst 73 [64] [x -> ((a * b) * ((b * a) * b))];
75: (((b * a) * b) * ((a * b) * (b * a))) = (((b * a) * b) * (b * a)) by trans 72 74;
76: (((b * a) * b) * ((a * b) * a)) = (((b * a) * b) * (b * a)) by trans 68 75;
77: (((b * a) * b) * x) = (((b * a) * b) * x) by refl;
78: (((b * a) * b) * (b * a)) = (((b * a) * b) * ((b * a) * a)) by subst 77 [14] [x -> (b * a)];
79: (((b * a) * b) * ((b * a) * a)) = (((b * a) * b) * a) by axiom flat [x -> (b * a), y -> b, z -> a];
80: (((b * a) * b) * (b * a)) = (((b * a) * b) * a) by trans 78 79;
81: ((b * a) * b) = (((b * a) * b) * a) by axiom xeqxy [x -> b, y -> a];
82: (((b * a) * b) * a) = ((b * a) * b) by sym 81;
83: (((b * a) * b) * (b * a)) = ((b * a) * b) by trans 80 82;
84: (((b * a) * b) * ((a * b) * a)) = ((b * a) * b) by trans 76 83;
"""

ALL_SCRIPTS = (
    ("mc-flattening", MC_FLATTENING_THEORY, MC_FLATTENING_PROOF),
    ("mc-closure-stability", MC_CLOSURE_STABILITY_THEORY, MC_CLOSURE_STABILITY_PROOF),
    ("antisym-x-xy", ANTISYM_X_XY_THEORY, ANTISYM_X_XY_PROOF),
    ("antisym-x-y", ANTISYM_X_Y_THEORY, ANTISYM_X_Y_PROOF),
)
