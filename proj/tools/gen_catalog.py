#!/usr/bin/env python3
"""Generates data/catalog.json.

Closed-form multiplicity series and asymptotic leading terms are kept as
data, not code: every coefficient is an exact integer string. The
expressions below are typed in a syntax close to their printed sources so
they can be proofread side by side; this script expands them, runs a set of
internal consistency checks (shared bracket polynomials, factored forms,
homogeneity of leading terms) and emits the catalog in a stable JSON layout.
"""

import json
import math
import os
import sys

import sympy as sp

v1, v2, v3, v4, v5, v6 = sp.symbols("v1 v2 v3 v4 v5 v6")
n1, n2, n3 = sp.symbols("n1 n2 n3")
VVARS = [v1, v2, v3, v4, v5, v6]


def num_terms(expr, nvars):
    """Expanded numerator as [[coeff, exps], ...], deterministically sorted."""
    poly = sp.Poly(sp.expand(expr), *VVARS[:nvars])
    out = []
    for mono, coeff in poly.terms():
        c = sp.nsimplify(coeff)
        if not (c.is_integer and c == int(c)):
            raise SystemExit(f"non-integer coefficient {coeff}")
        out.append([str(int(c)), [int(e) for e in mono]])
    out.sort(key=lambda t: (sum(t[1]), t[1]))
    return out


def den_factors(*factors):
    """factors: (exponent-tuple, power)."""
    return [{"mono": list(m), "pow": int(p)} for m, p in factors]


def den_expr(den, nvars):
    e = sp.Integer(1)
    for f in den:
        mono = sp.Integer(1)
        for i, x in enumerate(f["mono"]):
            mono *= VVARS[i] ** x
        e *= (1 - mono) ** f["pow"]
    return e


def term(num, nvars, *factors):
    return {"num": num_terms(num, nvars), "den": den_factors(*factors)}


def entry_value(entry):
    """Entry as a single sympy rational expression (for cross-checks)."""
    total = sp.Integer(0)
    for t in entry["terms"]:
        num = sp.Integer(0)
        for c, exps in t["num"]:
            mono = sp.Integer(int(c))
            for i, x in enumerate(exps):
                mono *= VVARS[i] ** x
            num += mono
        total += num / den_expr(t["den"], entry["nvars"])
    return total


def leading_form(expr, nvars, error_order, constraint=""):
    nsyms = [sp.Symbol(f"n{i + 1}") for i in range(nvars)]
    poly = sp.Poly(sp.expand(expr), *nsyms)
    scale_den = sp.Integer(1)
    for _, coeff in poly.terms():
        scale_den = sp.ilcm(scale_den, sp.fraction(sp.nsimplify(coeff))[1])
    monomials = []
    for mono, coeff in poly.terms():
        if sum(mono) != error_order + 1:
            raise SystemExit(f"leading form not homogeneous: {mono}")
        c = sp.nsimplify(coeff) * scale_den
        if not c.is_integer:
            raise SystemExit("scale does not clear the denominators")
        monomials.append([str(int(c)), [int(e) for e in mono]])
    monomials.sort(key=lambda t: t[1])
    return {
        "coeffNum": "1",
        "coeffDen": str(int(scale_den)),
        "monomials": monomials,
        "errorOrder": int(error_order),
        "constraint": constraint,
    }


entries = []

# ---------------------------------------------------------------- f powers
entries.append({
    "id": "f",
    "p": None,
    "q": None,
    "nvars": 4,
    "terms": [term(sp.Integer(1), 4, ((0, 1, 0, 0), 1))],
})

entries.append({
    "id": "f2",
    "p": None,
    "q": None,
    "nvars": 4,
    "terms": [term(sp.Integer(1), 4,
                   ((1, 0, 1, 0), 1), ((0, 1, 0, 0), 2), ((0, 0, 0, 1), 1))],
})

# The printed denominator contains the factors (1+v3) and (1-v3); they are
# merged into (1-v3^2) so every factor has the form (1 - monomial)^k.
f3_num = (1 - v1 * v2 * v3) * (1 - v1**2 * v3**2 * v4)
f3_den = den_factors(((0, 0, 2, 0), 1), ((2, 0, 0, 1), 1), ((1, 0, 1, 0), 3),
                     ((0, 1, 0, 0), 3), ((0, 0, 0, 1), 3))
orig_den = ((1 + v3) * (1 - v1**2 * v4) * (1 - v1 * v3) ** 3 * (1 - v3) *
            (1 - v2) ** 3 * (1 - v4) ** 3)
assert sp.simplify(f3_num / orig_den - f3_num / den_expr(f3_den, 4)) == 0
entries.append({
    "id": "f3_V4",
    "p": None,
    "q": None,
    "nvars": 4,
    "terms": [{"num": num_terms(f3_num, 4), "den": f3_den}],
})

# ---------------------------------------------------------------- R11_Vd
P10 = (v1 + 3*v2 - 4*v1*v4*v2 + 4*v3 - v2**2 + 4*v4 - v1*v3 - 6*v2*v3
       + v2**2*v3 - 3*v1*v2
       - 6*v3*v4 + 3*v5 + 9*v1*v2*v4*v3 - v3**2 + v6 - v1*v4*v3
       + v2**2*v4*v3 + 6*v2*v4*v3**2 - v2**2*v4*v3**2
       + v1*v4*v3**2 + v1*v2*v3**2 - 3*v2*v4*v3 + 3*v1*v2**2*v3
       - v1*v2*v3 - v6*v1*v2 - v6*v4*v3
       - 3*v2*v3*v5 + v2*v3**2*v5 - 3*v1*v2*v5 + v1*v2**2*v4 - v4**2
       - v2*v4 - 3*v1*v2*v4*v3**2
       - 3*v1*v2**2*v4*v3**2 - v1*v2**2*v4**2*v3 + v6*v1*v2**2*v3
       + v1*v2*v3*v5 + 3*v1*v2**2*v3*v5 - v1*v2**2*v3**2*v5
       + 3*v1*v2*v4*v5 + 3*v2*v4*v3*v5 + v1*v2*v4**2 - v6*v1*v2**2*v4*v3**2
       - 3*v1*v2**2*v4*v3*v5
       + v1*v2**2*v4**2*v3*v5 + v6*v1*v2*v4*v3 - v3*v5 + v2*v4**2*v3
       - v6*v2*v3 - v1*v2*v4**2*v5
       - v2*v4**2*v3*v5 + v6*v2*v4*v3**2 - 3*v4*v5 + v4**2*v5)

P11 = (-2*v5 - v1*v5 - 2*v2*v5 + v1*v2*v5 - v4 - 2*v1*v4 - 4*v2*v4
       + 2*v1*v4*v2 - v1*v3
       - 2*v2*v3 + v1*v2*v3 - v3**2 - v6 - v3*v5 - 2*v3*v4)

r11_terms = [
    term(sp.Integer(2), 6, ((1, 0, 0, 0, 0, 0), 1)),
    term(sp.Integer(-2), 6, ((1, 0, 0, 0, 0, 0), 2), ((0, 1, 0, 0, 0, 0), 1)),
    term(v1*v4*v2 - 3*v3 - v1 - v4 + v1*v3 - 3*v2 + 3*v2*v3 + v2**2
         - v2**2*v3 + 3*v1*v2, 6,
         ((1, 0, 0, 0, 0, 0), 3), ((0, 1, 0, 0, 0, 0), 3),
         ((0, 0, 1, 0, 0, 0), 1)),
    term(v1 + 2*v2 - v1*v2 + v3, 6,
         ((1, 0, 0, 0, 0, 0), 2), ((0, 1, 0, 0, 0, 0), 1)),
    term(1 - v1*v2, 6,
         ((1, 0, 0, 0, 0, 0), 3), ((0, 1, 0, 0, 0, 0), 3),
         ((0, 0, 1, 0, 0, 0), 1)),
    term(sp.Integer(1), 6,
         ((1, 0, 0, 0, 0, 0), 2), ((0, 1, 0, 0, 0, 0), 2),
         ((0, 0, 1, 0, 0, 0), 2), ((0, 0, 0, 1, 0, 0), 1)),
    term(-(v3 + v4), 6, ((1, 0, 0, 0, 0, 0), 1)),
    term((v1*v2 - 1) * (v2*v3 - 1) * (v3*v4 - 1), 6,
         ((1, 0, 0, 0, 0, 0), 3), ((0, 1, 0, 0, 0, 0), 4),
         ((0, 0, 1, 0, 0, 0), 4), ((0, 0, 0, 1, 0, 0), 3),
         ((0, 0, 0, 0, 1, 0), 1)),
    term(2*v4 + v5 + v3, 6,
         ((1, 0, 0, 0, 0, 0), 2), ((0, 1, 0, 0, 0, 0), 1)),
    term(P10, 6,
         ((1, 0, 0, 0, 0, 0), 3), ((0, 1, 0, 0, 0, 0), 4),
         ((0, 0, 1, 0, 0, 0), 4), ((0, 0, 0, 1, 0, 0), 3),
         ((0, 0, 0, 0, 1, 0), 1)),
    term(P11, 6, ((1, 0, 0, 0, 0, 0), 2), ((0, 1, 0, 0, 0, 0), 1)),
]
assert len(r11_terms) == 11
assert len(sp.Poly(sp.expand(P11), *VVARS).terms()) == 15

# The common degree-7 part of the three shape classes, as
# n1*n2*n3*n4 * (sum1 / 2 + sum2 / 3) cleared to integers over 1/6.
n4s = sp.Symbol("n4")
sum1 = n1*n3*n4s + n1*n2*n4s + n2*n3*n4s + n1*n2*n3
sum2 = n2**2*n4s + n2*n3**2 + n1*n3**2 + n2**2*n3
r11_core = n1*n2*n3*n4s * (sum1 / 2 + sum2 / 3)


def r11_leading(prefactor, constraint):
    lf = leading_form(sp.expand(prefactor * r11_core), 6, 6, constraint)
    return lf


entries.append({
    "id": "R11_Vd",
    "p": 1,
    "q": 1,
    "nvars": 6,
    "terms": r11_terms,
    "leading": [
        r11_leading(sp.Rational(3, 4), "rows=4"),
        r11_leading(sp.Integer(1), "rows=5"),
        r11_leading(sp.Rational(1, 4), "rows=6,last=1"),
    ],
})

# ---------------------------------------------------------------- R02_2var
P02 = (1 - 89*v1**2*v2**3 - 3*v1 + 82*v1**2*v2**4 - 42*v1**2*v2**5
       - 7*v1*v2**6 + 13*v1**2*v2**6 + 7*v2*v1**3 - 21*v2**2*v1**3
       + 19*v1*v2 - 52*v1*v2**2 + 78*v1*v2**3 - 70*v1*v2**4 + 30*v1*v2**5
       - 20*v1**2*v2 + 57*v1**2*v2**2 + v2**7*v1
       + 35*v2**3*v1**3 - 35*v2**4*v1**3 + 21*v2**5*v1**3 - 7*v2**6*v1**3
       - 2*v2**7*v1**2 + v2**7*v1**3 - 6*v2 + 3*v1**2 + 16*v2**2 - v1**3
       - 23*v2**3 + 21*v2**4 - 8*v2**5 + v2**6)
assert len(sp.Poly(sp.expand(P02), v1, v2).terms()) == 31
assert sp.expand(P02.subs(v2, 0) - (1 - v1) ** 3) == 0

entries.append({
    "id": "R02_2var",
    "p": 0,
    "q": 2,
    "nvars": 2,
    "terms": [term(P02, 2, ((1, 0), 4), ((0, 1), 7))],
    "leading": [leading_form(
        sp.Rational(1, math.factorial(6)) * n1 * n2**4
        * (5*n1**2 + 6*n1*n2 + 2*n2**2), 2, 6)],
})

# ---------------------------------------------------------------- R02_3var
P5 = (141*v1**2*v2**3*v3**3 - 124*v1**2*v2**2*v3**2 - 8*v1**3*v2*v3**2
      - 4*v1**3*v2*v3**3 - 206*v1*v2**2*v3**3 + 13*v1**3*v2**2*v3**2
      + 52*v1*v2**2*v3**2 + 62*v1*v2**2*v3 - 10*v1*v2**3*v3
      + 38*v1*v2*v3**2 + 8*v1**2*v2*v3 - v1**3*v2**4*v3**6
      + 42*v1**3*v2**2*v3**3 - 2*v1**3*v2**4*v3**5 - 26*v1*v2*v3
      - 24*v1*v2**4*v3**4 + 45*v1**3*v2**4*v3**4 - 8*v1**3*v2**5*v3**4
      - 4*v1**3*v2**5*v3**5 + 3*v2*v3**3 - 2*v1**2*v2**5*v3**5
      - 4*v1*v2**4*v3**5 + 55*v1*v2**3*v3**4 + 8*v1**2*v3**3
      - 90*v1**2*v2**3*v3**4 + v1
      - 40*v1**2*v2*v3**3 - 28*v1**2*v2*v3**4 + 4*v2 + 8*v3
      - v1**3*v2**3*v3**6 - 143*v1*v2**3*v3**2 - 8*v1**2*v2**2*v3**3
      - 2*v1**2*v2**2*v3**5 - v1*v2**2*v3**6 + 27*v1**2*v2**4*v3**5
      - 12*v1*v3**3 - 2*v3*v1 + v1*v2**3 - 5*v1*v2 + 4*v2**4*v3**4
      + 4*v1**2*v3**4 + 8*v2**4*v3**3 - 3*v1**3*v2**2*v3**4
      + 7*v1**2*v2**4*v3 + 128*v1*v2**3*v3**3 - 62*v1**3*v2**3*v3**3
      + 10*v1*v2**2*v3**5
      - 30*v2**3*v3**4*v1**3 - 8*v2**3*v3**2 - v1*v2**3*v3**6
      + v2**2*v3**5 - 22*v1**2*v2**3*v3 + 4*v1**2*v2**3*v3**6
      - 5*v1*v2**2 - 10*v2**2*v3**4
      + 2*v1*v3**4 + 104*v1**2*v2**2*v3**4 - 42*v2*v3**2 - 45*v2**3*v3**3
      + 11*v2**3*v3**2*v1**3 + 36*v1**2*v2*v3**2 - 8*v1*v2**5*v3**2
      + 90*v1*v2*v3**3 + v2**3*v3**5 - v1**2*v2**5*v3 + 12*v1**2*v2**5*v3**4
      - 6*v1*v2**3*v3**5 + 8*v1**3*v2**4*v3**3 + 2*v2**3*v3**4
      - 13*v1*v2*v3**4 - 4*v1*v2**5*v3**3 + 62*v2**2*v3**2 - 13*v2*v3
      + 4*v1**2*v2**2 - 14*v1**2*v2**4*v3**4 + 4*v3**2 - 13*v1*v3**2
      - 4*v1*v2**4*v3**3 + 2*v1**2*v2**2*v3 + 92*v1**2*v2**3*v3**2
      - 86*v1**2*v2**4*v3**3 - 4*v1**3*v2**2*v3 + 13*v1**2*v2**5*v3**3
      + 30*v2**2*v3**3 + 2*v2**3*v3 - 8*v1*v2**2*v3**4 + 56*v1*v2**4*v3**2
      - 18*v1**2*v2**4*v3**2 + 2*v1**2*v2**5*v3**2 - 29*v1**2*v2**3*v3**5
      + 10*v1**3*v2**3*v3**5 - 2*v2**4*v3**2*v1**3 - 11*v2**2*v3)

P6 = 2*(v3**3 - v1*v3**3*v2 + 6*v3**2*v2 + v1*v3**2*v2 - 3*v1*v3**2*v2**2
        - 4*v3**2 - v3**2*v2**2 + v1*v3**2 - 3*v2*v3
        - v1*v3 + 3*v1*v3*v2 + v3*v2**2)

P7 = 2*(-4*v1**2*v2**2 - v1 - 4*v2 - 7*v3 + v3**2 + v2**3*v1**2*v3**4
        + 16*v1**2*v2**2*v3**2 + v1*v2*v3**3
        + v1**2*v2*v3**2 - 26*v2**3*v1**2*v3**2 - 7*v1**2*v2**2*v3**3
        + 6*v2**3*v1**2*v3 + 4*v2**4*v1**2*v3**3 + v1**2*v2**2*v3**4
        + 3*v2**4*v1**2*v3**2
        + 12*v1**2*v2**2*v3 + v2**3*v1**2*v3**3 - 7*v1**2*v2*v3
        - v2**4*v1**2*v3 - 31*v1*v2*v3**2 - 43*v1*v2**2*v3
        + 13*v1*v2*v3 + 5*v1*v2 - v2**3*v1 + 5*v1*v2**2 - 26*v2**2*v3**2
        - v2**3*v3 + 12*v2*v3 + 23*v1*v2**2*v3**3
        + 19*v1*v2**2*v3**2 - 4*v1*v2**2*v3**4 - 7*v2**4*v1*v3**2
        - 7*v2*v3**3 + 6*v2**2*v3 + 16*v2*v3**2 + v2**2*v3**3 + v2**2*v3**4
        + 3*v2**3*v3**2 + 4*v2**3*v3**3 + v2**4*v1*v3**3 - 21*v2**3*v1*v3**3
        + 7*v2**3*v1*v3 + 27*v2**3*v1*v3**2
        + 4*v1*v3**2 + 3*v1*v3 + v2*v3**4)

P8 = 2*(v1*v2*v3**2 - v3**2 + 4*v3 - 6*v2*v3 - v1*v3 + v2**2*v3
        + 3*v1*v2**2*v3 - v1*v2*v3
        + v1 - v2**2 + 3*v2 - 3*v1*v2)

P12 = (6*v3 - 4*v3**2 + 4*v2 + v1 + v3**3 + v2**3*v1 - 5*v1*v2
       - 5*v2**2*v1 + v2*v3**3 - v2**2*v3
       - 11*v2*v3 + 16*v1*v2*v3**2 - 4*v1*v2*v3**3 - 4*v2**3*v1*v3
       - 4*v1*v2*v3 + 24*v2**2*v1*v3
       - 11*v2**2*v1**2*v3 - v2**3*v1**2*v3 - 4*v1**2*v2*v3**2
       + 6*v1**2*v2*v3 + 4*v2**3*v1**2*v3**2 + v2**2*v1**2*v3**3
       - 16*v1*v2**2*v3**2
       + v1**2*v2*v3**3 + 4*v2**2*v3**2 + 4*v2**2*v1**2 - 4*v1*v3)

P15 = (-1 + 34*v1**2*v2**2*v3**2 + 21*v1*v2**3*v3 + 30*v1**2*v2**4*v3**3
       - 30*v1*v2*v3**2 + 34*v1*v2**2*v3**2
       - 37*v1*v2**2*v3 + v1*v2**4*v3**5 - 6*v1**2*v2*v3
       - 7*v1**2*v2**4*v3**4 - 6*v1**2*v2**5*v3**3 - 10*v1*v2**4*v3**2
       - 2*v2**4*v3**3
       - v1**2*v2**5*v3**4 + 2*v1*v2**5*v3**2 + 2*v1*v2**4*v3**3
       - 7*v1**3*v2**2*v3**3 + v1**3*v2*v3**3 + 2*v1**3*v2**5*v3**4
       + v1**3*v2**4*v3**5 + v1**3*v2**5*v3**5 - 7*v1**3*v2**4*v3**3
       - 10*v1**3*v2**4*v3**4 - 10*v1**3*v2**2*v3**2 + 2*v1**3*v2*v3**2
       + v1**3*v2**2*v3
       + v1**3*v2**5*v3**3 - v1**2*v2**2 + 4*v1*v2 - v1**2*v2
       + v1**3*v2*v3 + 7*v1*v2*v3 + 37*v1**2*v2**3*v3**4
       + 24*v1**3*v2**3*v3**3
       - 2*v1**2*v3**3 - 24*v2**2*v3**2 + v1*v3 - v1**2*v3**2 + 6*v1*v3**2
       - v2 - 2*v3 - v3**2 + v1*v2**5*v3**3 - 35*v1**2*v2**3*v3**2
       + 9*v1**2*v2**4*v3**2 - v1**2*v2**5*v3**2 - 7*v1*v2**4*v3
       + v1*v2**5*v3 + 10*v1**2*v2**2*v3 + 35*v1*v2**2*v3**3
       - 34*v1**2*v2**3*v3**3
       - 14*v1**2*v2**2*v3**3 + 14*v1*v2**3*v3**2 - 21*v1**2*v2**2*v3**4
       - 34*v1*v2**3*v3**3 + v1*v2**3*v3**5 - 10*v1*v2**3*v3**4
       - 9*v1*v2*v3**3 - 2*v1**2*v2*v3**2 - v1**2*v3**4 + v1*v3**3
       + 10*v2**3*v3**3 - v2**4*v3**2 + 7*v2**3*v3**2 + 7*v2*v3**2
       + 10*v2*v3 + 10*v1**2*v2*v3**3 + 7*v1**2*v2*v3**4
       - 4*v1**2*v2**4*v3**5 + 6*v1*v2**4*v3**4 - v2**3*v3**4 - v2**4*v3**4)

P17 = 2*(1 + v1**2*v2*v3 - v1**2*v2**4*v3**2 - 7*v1**2*v2**2*v3 + v3 + v2
         + 7*v1**2*v2**3*v3**2 - v1**2*v2**3*v3**3 - v1*v3
         + 7*v2**2*v3**2 - 7*v2*v3 - v2**3*v3**2 - v2**2*v3**3
         - v2**3*v3**3 - v1*v3**2 + v1**2*v2**2 + v1**2*v2
         - 2*v1*v2**3*v3**2 + v1*v2**4*v3**2
         - 6*v1*v2**3*v3 - v1**2*v2**4*v3**3 + 16*v1*v2**2*v3
         - 16*v1*v2**2*v3**2 + v1*v2**4*v3 + 2*v1*v2*v3
         + 4*v1*v2**3*v3**3
         + 6*v1*v2*v3**2 - 4*v1*v2)

P22 = (-v1**2*v2**3*v3**2 - v1**2*v2**2*v3**2 + 4*v1*v2**2*v3**2
       + v1*v2**3*v3 + 4*v3*v2**2*v1**2 - v2**2*v3**2
       - 5*v1*v2**2*v3 - v1**2*v2**2 - v2*v3**2 - 5*v1*v2*v3 - v2*v1**2
       + 4*v2*v3 + 4*v1*v2 + v1*v3 - v2 - 1)

d3 = lambda a, b, c: (((1, 0, 0), a), ((0, 1, 0), b), ((0, 0, 1), c))

r02v3_A6 = P6
r02v3_A8 = P8
assert sp.expand(r02v3_A6 + v3 * r02v3_A8) == 0
r02v3_A13 = 2*(3*v2*v3 - v2**2*v3 - 3*v3 + v1*v3 - v1 + 3*v1*v2 + v2**2
               - 3*v2)
r02v3_A10 = 2*(v3**2*v2**2 - 3*v3**2*v2 - v3**2*v1 + 3*v3**2 - v2**2*v3
               - 3*v3*v1*v2 + v3*v1 + 3*v2*v3)
assert sp.expand(r02v3_A10 + v3 * r02v3_A13) == 0
r02v3_A14 = v3 + v1 + 2*v2 - v1*v2
r02v3_A9 = v3**3 + v3**2*v1 + 2*v3**2*v2 - v3**2*v1*v2
assert sp.expand(r02v3_A9 - v3**2 * r02v3_A14) == 0
r02v3_A23 = 2*(1 - v1*v2)
r02v3_A20 = 2*v3*(v2*v1 - 1)
assert sp.expand(r02v3_A20 + v3 * r02v3_A23) == 0
r02v3_A18 = -2*(v1*v2 - 1)*(v2*v3 - 1)
r02v3_A16 = 2*v3*(v2*v1 - 1)*(v2*v3 - 1)
assert sp.expand(r02v3_A16 + v3 * r02v3_A18) == 0

# A11 is printed as a sum of three simple fractions; it is stored as one
# term over the common denominator (1-v1)^2 (1-v2).
r02v3_A11 = sp.expand(2*v3*(1 - v1)*(1 - v2) + 2*v3*(1 - v2)
                      - 2*v3*(v3 + 2))
assert sp.simplify(
    r02v3_A11 / ((1 - v1)**2 * (1 - v2))
    - (2*v3 / (1 - v1) + 2*v3 / (1 - v1)**2
       - 2*v3*(v3 + 2) / ((1 - v1)**2 * (1 - v2)))) == 0

r02_3var_terms = [
    term(sp.Integer(2), 3, *d3(2, 2, 2)),
    term(-2*v3, 3, ((1, 0, 0), 1)),
    term(sp.Integer(-3), 3, ((1, 0, 0), 2), ((0, 1, 0), 1)),
    term(sp.Integer(2), 3, ((1, 0, 0), 1)),
    term(P5, 3, ((1, 0, 1), 1), *d3(4, 7, 10)),
    term(r02v3_A6, 3, *d3(3, 4, 4)),
    term(P7, 3, *d3(4, 6, 7)),
    term(r02v3_A8, 3, *d3(3, 4, 4)),
    term(r02v3_A9, 3, ((1, 0, 0), 2), ((0, 1, 0), 1)),
    term(r02v3_A10, 3, *d3(3, 3, 1)),
    term(r02v3_A11, 3, ((1, 0, 0), 2), ((0, 1, 0), 1)),
    term(P12, 3, *d3(4, 5, 4)),
    term(r02v3_A13, 3, *d3(3, 3, 1)),
    term(r02v3_A14, 3, ((1, 0, 0), 2), ((0, 1, 0), 1)),
    term(P15, 3, ((1, 0, 1), 1), *d3(4, 7, 10)),
    term(r02v3_A16, 3, *d3(3, 4, 4)),
    term(P17, 3, *d3(4, 6, 7)),
    term(r02v3_A18, 3, *d3(3, 4, 4)),
    term(-v3**2, 3, ((1, 0, 0), 2), ((0, 1, 0), 1)),
    term(r02v3_A20, 3, *d3(3, 3, 1)),
    term(2*v3, 3, ((1, 0, 0), 2), ((0, 1, 0), 1)),
    term(P22, 3, *d3(4, 5, 4)),
    term(r02v3_A23, 3, *d3(3, 3, 1)),
]
assert len(r02_3var_terms) == 23

fact = math.factorial
r02_3var_asym = (
    4 * n1**2*n2**5*n3**5 / (fact(2)*fact(5)*fact(5))
    + 16 * n1**2*n2**2*n3**8 / (fact(2)*fact(2)*fact(8))
    + 6 * n1**2*n2*n3**9 / (fact(2)*fact(1)*fact(9))
    + 18 * n1**2*n2**3*n3**7 / (fact(2)*fact(3)*fact(7))
    + 12 * n1**2*n2**4*n3**6 / (fact(2)*fact(4)*fact(6))
    + 2 * n2*(n3 - n1)**11 / (fact(1)*fact(11))
    - 2 * n2*n3**11 / (fact(1)*fact(11))
    + 10 * n1**3*n2*n3**8 / (fact(3)*fact(1)*fact(8))
    + 10 * n1**3*n2**2*n3**7 / (fact(3)*fact(2)*fact(7))
    + 6 * n1**3*n2**3*n3**6 / (fact(3)*fact(3)*fact(6))
    + 2 * n1**3*n2**4*n3**5 / (fact(3)*fact(4)*fact(5))
    + 8 * n1*n2**2*n3**9 / (fact(1)*fact(2)*fact(9))
    + 18 * n1*n2**4*n3**7 / (fact(1)*fact(4)*fact(7))
    + 4 * n1*n2**6*n3**5 / (fact(1)*fact(6)*fact(5))
    + 16 * n1*n2**3*n3**8 / (fact(1)*fact(3)*fact(8))
    + 2 * n1*n2*n3**10 / (fact(1)*fact(1)*fact(10))
    + 12 * n1*n2**5*n3**6 / (fact(1)*fact(5)*fact(6))
)
# The two n2*n3^11 contributions cancel.
assert sp.Poly(sp.expand(r02_3var_asym), n1, n2, n3).coeff_monomial(
    n2 * n3**11) == 0

entries.append({
    "id": "R02_3var",
    "p": 0,
    "q": 2,
    "nvars": 3,
    "terms": r02_3var_terms,
    "leading": [leading_form(r02_3var_asym, 3, 11, "n3>=n1")],
})

# ---------------------------------------------------------------- R03_2var
# Several numerators share a bracket polynomial; each bracket is entered
# once and reused, with the printed reorderings asserted equal.
B1 = 4*v1**2*v2**2 - 5*v1*v2 - 5*v1*v2**2 + v1*v2**3 + v1 + 4*v2
B2 = (16*v2**3*v1**4 + 6*v2**4*v1**4 + 6*v2**2*v1**4 - 9*v1**3*v2**4
      + v1**3*v2**5 - 35*v2**2*v1**3 - 69*v1**3*v2**3
      + 84*v1**2*v2**3 + 84*v1**2*v2**2 - 9*v1*v2 - 35*v1*v2**3
      - 69*v1*v2**2 + v1 + 16*v2**2 + 6*v2 + 6*v2**3)
B3 = (27*v2**4*v1**4 + v2**5*v1**4 + v2**2*v1**4 + 27*v2**3*v1**4
      - 74*v1**3*v2**4 - 150*v1**3*v2**3 - 6*v1**3*v2**2
      + 6*v1**3*v2**5 + v1**2 + 51*v1**2*v2**2 + 250*v1**2*v2**3
      + 51*v1**2*v2**4 - 9*v1**2*v2**5 + v1**2*v2**6 - 9*v1**2*v2
      + 6*v1*v2 - 150*v1*v2**3 - 74*v1*v2**2 - 6*v1*v2**4 + v2
      + 27*v2**3 + v2**4 + 27*v2**2)
B4 = (v1**3*v2**4 + v1**3*v2**2 + 18*v1**3*v2**3 - 45*v1**2*v2**3
      - 26*v1**2*v2**2 + 5*v1**2*v2**4 - v1**2 + 7*v1**2*v2
      + v1*v2**5 + 45*v1*v2**2 - 7*v1*v2**4 - 5*v1*v2 + 26*v1*v2**3
      - v2**3 - 18*v2**2 - v2)
B5 = (v2**4*v1**4 + 6*v2**2*v1**4 + v2*v1**4 + 6*v2**3*v1**4
      - 20*v2**3*v1**3 - 30*v2**2*v1**3 - 6*v2*v1**3
      + 54*v1**2*v2**2 + 15*v1**2*v2**3 + 15*v2*v1**2 - 6*v1*v2**3
      - 30*v1*v2**2 - 20*v1*v2 + v2**3 + 1 + 6*v2**2 + 6*v2)
B6 = (5*v1**3*v2**3 + 5*v2**2*v1**3 + v1**2*v2**4 - 24*v1**2*v2**2
      - 7*v1**2*v2**3 + 7*v1*v2 + 24*v1*v2**2 - v1 - 5*v2**2 - 5*v2)
B7 = (1 - v2*v1**3 - v2**3*v1**3 - 3*v2**2*v1**3 + 10*v1**2*v2**2
      + 5*v2*v1**2 - 5*v1*v2**2 - 10*v1*v2 + v2**2 + 3*v2)
B8 = (v1**2*v2**3 + 11*v1**2*v2**2 - 5*v1**2*v2 + v1**2 - 24*v1*v2**2
      + 4*v1*v2**3 + 4*v1*v2 + v2 + v2**4 + 11*v2**2 - 5*v2**3)
B9 = v1**2*v2**2 + v2*v1**2 - 4*v1*v2 + v2 + 1

# Reordered printings of the same brackets.
assert sp.expand(B2 - (6*v2**2*v1**4 + 6*v2**4*v1**4 + 16*v2**3*v1**4
                       + v1**3*v2**5 - 35*v2**2*v1**3 - 69*v1**3*v2**3
                       - 9*v1**3*v2**4 + 84*v1**2*v2**3 + 84*v1**2*v2**2
                       - 9*v1*v2 - 69*v1*v2**2 - 35*v1*v2**3 + v1
                       + 16*v2**2 + 6*v2**3 + 6*v2)) == 0
assert sp.expand(B3 - (27*v2**4*v1**4 + v2**2*v1**4 + 27*v2**3*v1**4
                       + v2**5*v1**4 - 150*v1**3*v2**3 - 6*v1**3*v2**2
                       - 74*v1**3*v2**4 + 6*v1**3*v2**5 + v1**2*v2**6
                       - 9*v1**2*v2 + 250*v1**2*v2**3 + 51*v1**2*v2**2
                       - 9*v1**2*v2**5 + v1**2 + 51*v1**2*v2**4
                       - 74*v1*v2**2 - 150*v1*v2**3 + 6*v1*v2 - 6*v1*v2**4
                       + 27*v2**3 + v2**4 + v2 + 27*v2**2)) == 0
assert sp.expand(B4 - (18*v1**3*v2**3 + v1**3*v2**2 + v1**3*v2**4
                       - 45*v1**2*v2**3 - 26*v1**2*v2**2 + 7*v1**2*v2
                       - v1**2 + 5*v1**2*v2**4 - 7*v1*v2**4 + 26*v1*v2**3
                       + v1*v2**5 - 5*v1*v2 + 45*v1*v2**2 - 18*v2**2
                       - v2**3 - v2)) == 0
assert sp.expand(B6 - (5*v1**3*v2**3 + 5*v2**2*v1**3 - 7*v1**2*v2**3
                       + v1**2*v2**4 - 24*v1**2*v2**2 - v1 + 7*v1*v2
                       + 24*v1*v2**2 - 5*v2 - 5*v2**2)) == 0
assert sp.expand(B7 + (v2*v1**3 + 3*v2**2*v1**3 + v2**3*v1**3 - 5*v2*v1**2
                       - 10*v1**2*v2**2 + 5*v1*v2**2 + 10*v1*v2 - 1
                       - v2**2 - 3*v2)) == 0

d2 = lambda a, b: (((1, 0), a), ((0, 1), b))

r03_terms = [
    term(3*B1, 2, *d2(4, 7)),
    term(-12*B1, 2, *d2(4, 6)),
    term(6*(v1 - 3*v1*v2 + 3*v2 - v2**2), 2, *d2(3, 4)),
    term(6*B6, 2, *d2(5, 9)),
    term(-12*B6, 2, *d2(5, 8)),
    term(-6*B2, 2, *d2(6, 10)),
    term(B3, 2, *d2(6, 12)),
    term(-3*B3, 2, *d2(6, 11)),
    term(-3*B4, 2, *d2(5, 9)),
    term(3*B3, 2, *d2(6, 10)),
    term(6*B4, 2, *d2(5, 8)),
    term(3*B8, 2, *d2(4, 6)),
    term(-2*B2, 2, *d2(6, 12)),
    term(6*B2, 2, *d2(6, 11)),
    term(8*(-v1 + 3*v1*v2 - 3*v2 + v2**2), 2, *d2(3, 3)),
    term(9*B9, 2, *d2(4, 6)),
    term(sp.Integer(3), 2, *d2(2, 2)),
    term(3*(v1 - v1*v2 + 2*v2), 2, ((1, 0), 2), ((0, 1), 1)),
    term(6*(v1*v2 - 1), 2, *d2(3, 4)),
    term(3*B5, 2, *d2(6, 10)),
    term(-3*B9, 2, *d2(4, 7)),
    term(9*B1, 2, *d2(4, 5)),
    term(3*v1**2*v2**2 - 3*v1**2*v2 - v1**2*v2**3 + v1**2 - 10*v1*v2**2
         + 3*v1*v2 + 3*v1*v2**3 + 6*v2**2 - 3*v2**3 + v2, 2, *d2(3, 3)),
    term(3*B7, 2, *d2(5, 9)),
    term(-3*B5, 2, *d2(6, 11)),
    term(2*B2, 2, *d2(6, 9)),
    term(-6*B7, 2, *d2(5, 8)),
    term(B5, 2, *d2(6, 12)),
    term(6*B6, 2, *d2(5, 7)),
    term(-B3, 2, *d2(6, 9)),
    term(-3*B4, 2, *d2(5, 7)),
    term(-3*B8, 2, *d2(4, 5)),
    term(sp.Integer(3), 2, ((1, 0), 1)),
    term(sp.Integer(-6), 2, ((1, 0), 2), ((0, 1), 1)),
    term(-6*B9, 2, *d2(4, 5)),
    term(7*(1 - v1*v2), 2, *d2(3, 3)),
    term(3*B7, 2, *d2(5, 7)),
    term(-B5, 2, *d2(6, 9)),
]
assert len(r03_terms) == 38

entries.append({
    "id": "R03_2var",
    "p": 0,
    "q": 3,
    "nvars": 2,
    "terms": r03_terms,
    "leading": [leading_form(
        sp.Rational(1, fact(11)) * n1 * n2**7
        * (66*n1**4 + 77*n1*n2**3 + 165*n1**2*n2**2 + 165*n1**3*n2
           + 14*n2**4), 2, 11)],
})

# ---------------------------------------------------------------- R04_2var
# No closed form is recorded; only the leading term of the multiplicities.
entries.append({
    "id": "R04_2var",
    "p": 0,
    "q": 4,
    "nvars": 2,
    "terms": [],
    "leading": [leading_form(
        sp.Rational(1, fact(10)) * n1 * n2**6 * (n1 + n2)**6, 2, 12)],
})

# ---------------------------------------------------------------- checks
# Low-order Taylor checks of whole entries (m_empty = 1, one-row and small
# two-row multiplicities) on the series that have simple known values.
for eid, expect in [("R02_2var", {(0, 0): 1, (1, 0): 1, (2, 0): 1,
                                  (0, 1): 1, (0, 2): 2}),
                    ("R03_2var", {(0, 0): 1, (1, 0): 1, (2, 0): 1}),
                    ]:
    e = next(x for x in entries if x["id"] == eid)
    val = entry_value(e)
    ser = sp.series(sp.series(val, v1, 0, 3).removeO(), v2, 0, 3).removeO()
    ser = sp.expand(ser)
    for (a, b), want in expect.items():
        got = ser.coeff(v1, a).coeff(v2, b)
        if (a, b) == (0, 0):
            got = ser.subs({v1: 0, v2: 0})
        assert got == want, (eid, a, b, got, want)

out_path = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        os.pardir, "data", "catalog.json")
out_path = os.path.normpath(out_path)
ids = [e["id"] for e in entries]
assert len(ids) == len(set(ids))
with open(out_path, "w", encoding="utf-8") as f:
    json.dump(entries, f, indent=1, sort_keys=True)
    f.write("\n")
print(f"wrote {out_path} with {len(entries)} entries:", ", ".join(ids))
