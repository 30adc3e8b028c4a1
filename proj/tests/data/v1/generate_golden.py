#!/usr/bin/env python3
"""Regenerates the golden polynomial files in this directory with sympy.

This is a standalone Macaulay-matrix computation done entirely in sympy's
exact domains; it shares no code with the C++ library.  When the minor M'
is singular the resultant is taken from the perturbed quotient
det(M + eps I) / det(M' + eps I) at eps = 0.
"""
import itertools
import json
import sys

import sympy as sp
from sympy.polys.matrices import DomainMatrix

LAM = sp.Symbol("lam")


def monomials(nvars, degree):
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def macaulay(polys, nvars):
    degs = [p.total_degree() for p in polys]
    top = sum(d - 1 for d in degs) + 1
    basis = monomials(nvars, top)
    index = {m: i for i, m in enumerate(basis)}
    mat = [[sp.QQ(0)] * len(basis) for _ in basis]
    nonreduced = []
    for r, mu in enumerate(basis):
        i = next(i for i in range(nvars) if mu[i] >= degs[i])
        if sum(1 for j in range(nvars) if mu[j] >= degs[j]) >= 2:
            nonreduced.append(r)
        shift = list(mu)
        shift[i] -= degs[i]
        for mon, c in polys[i].terms():
            col = index[tuple(a + b for a, b in zip(mon, shift))]
            mat[r][col] += sp.QQ(int(c.p), int(c.q))
    return mat, nonreduced


def perturbed_quotient(mat, rows):
    def shifted_det_coeffs(idx):
        if not idx:
            return [sp.QQ(1)]
        m = DomainMatrix([[-mat[i][j] for j in idx] for i in idx], (len(idx), len(idx)), sp.QQ)
        return list(reversed(m.charpoly()))  # det(eps I + M), low -> high

    full = shifted_det_coeffs(list(range(len(mat))))
    minor = shifted_det_coeffs(rows)
    t = next(i for i, c in enumerate(minor) if c != 0)
    q = full[t] / minor[t]
    return sp.Rational(int(q.numerator), int(q.denominator))


def sample_points(count):
    out, i = [0], 1
    while len(out) < count:
        out += [i, -i]
        i += 1
    return out[:count]


def resultant_poly(make_polys, variables, nbearing):
    pts = sample_points(nbearing + 1)
    vals = []
    for p in pts:
        polys = [sp.Poly(f, *variables) for f in make_polys(p)]
        mat, rows = macaulay(polys, len(variables))
        vals.append(perturbed_quotient(mat, rows))
    return sp.Poly(sp.interpolate(list(zip(pts, vals)), LAM), LAM)


def normalized(poly):
    if poly.is_zero:
        return poly
    _, prim = poly.primitive()
    if prim.LC() < 0:
        prim = -prim
    return prim


def coeff_strings(poly):
    if poly.is_zero:
        return []
    return [str(sp.Rational(c)) for c in reversed(poly.all_coeffs())]


def main(outdir):
    x1, x2, x3, beta = sp.symbols("x1 x2 x3 beta")
    xs = [x1, x2, x3]
    ax = [x2 * x3, x1 * x3, x1 * x2]  # single edge {1,2,3}, entries 1/2

    char = resultant_poly(lambda l: [l * xs[i] ** 2 - ax[i] for i in range(3)], xs, 12)
    assert sp.factor(char.as_expr()) == sp.factor(LAM**3 * (LAM**3 - 1) ** 3)

    def esys(l):
        return [ax[i] - l * beta * xs[i] for i in range(3)] + [x1**2 + x2**2 + x3**2 - beta**2]

    # 48 of the 56 degree-5 Macaulay rows carry lambda
    echar = resultant_poly(esys, xs + [beta], 48)

    files = {
        "single_edge_n3_k3.charpoly.json": {
            "hypergraph": {"n": 3, "k": 3, "edges": [[1, 2, 3]]},
            "coefficients": coeff_strings(char),
        },
        "single_edge_n3_k3.echarpoly.json": {
            "hypergraph": {"n": 3, "k": 3, "edges": [[1, 2, 3]]},
            "system_order": "f_1..f_n, x^T x - beta^2; variables x_1..x_n, beta",
            "raw_coefficients": coeff_strings(echar),
            "coefficients": coeff_strings(normalized(echar)),
        },
    }
    for name, body in files.items():
        with open(f"{outdir}/{name}", "w") as fh:
            json.dump(body, fh, indent=2)
            fh.write("\n")
        print(name, body.get("coefficients"))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
