"""Regenerates data/fixtures/*.json.

Coefficients are flat vectors over the field tower, nested little-endian in the
generators (index i0 + D0*i1 for a two-level tower), as "p/q" strings.
"""
import json
import pathlib

from sympy import Poly, Rational, cyclotomic_poly, expand, rem, symbols

ROOT = pathlib.Path(__file__).resolve().parent.parent
z, r, t = symbols("z r t")


def vec(expr, gens, degs):
    p = Poly(expand(expr), *gens)
    out = ["0"] * _prod(degs)
    for mon, c in p.terms():
        idx, stride = 0, 1
        for e, d in zip(mon, degs):
            assert e < d
            idx += e * stride
            stride *= d
        out[idx] = str(Rational(c))
    return out


def _prod(xs):
    n = 1
    for x in xs:
        n *= x
    return n


def coord(poly_in_t, gens, degs):
    p = Poly(expand(poly_in_t), t)
    n = p.degree()
    return [vec(p.coeff_monomial(t**k), gens, degs) for k in range(n + 1)]


def ell34_p5():
    gens, degs = (r, z), (5, 4)
    zero = ["0"] * 20
    minus_one = vec(-1, gens, degs)
    return {
        "name": "ell34_p5",
        "field": "r: r^5 - 2; z: z^4 + z^3 + z^2 + z + 1",
        "model": "y^2 = x^3 - t^3 x + t^2",
        "p": 5,
        "zeta": "z",
        "seed": {"name": "Q1", "x": {"num": coord(-r**2 * t, gens, degs)},
                 "y": {"num": coord(t - r * t**2, gens, degs)}},
        "recipes": [
            {"name": "Q0", "expr": "Q1 - sigma*Q1"},
            {"name": "Q2", "expr": "Q1 + sigma*Q1"},
            {"name": "Q3", "expr": "Q2 + sigma^4*Q1"},
            {"name": "P0", "expr": "Tr(Q1)"},
            {"name": "Q4", "expr": "P0 - Q1"},
            {"name": "Q5", "expr": "Q0 + sigma*Q0"},
            {"name": "Q6", "expr": "Q2 + Q4"},
            {"name": "Q7", "expr": "sigma^4*Q0 + Q2"},
            {"name": "Q8", "expr": "sigma^3*Q0 + Q3"},
        ],
        "expected_count": 92,
        "shape": 2,
        "expected_trace": {"x": {"num": []}, "y": {"num": [zero, minus_one]}},
    }


def ell7_p7():
    gens, degs = (z,), (6,)
    phi = Poly(cyclotomic_poly(7, z), z)

    def red(e):
        return rem(Poly(expand(e), z), phi).as_expr()

    c1 = red(-(z + z**6))
    a1 = red(-c1**2)
    assert red(a1**3 + 5 * a1**2 + 6 * a1 + 1) == 0
    b1 = red((-4845 * a1**24 - 18546717 * a1**17 - 423971443 * a1**10 - 410387643 * a1**3) * Rational(1, 4958072))
    d1 = red(c1 * (-4845 * a1**23 - 18546717 * a1**16 - 423971443 * a1**9 - 415345715 * a1**2) * Rational(1, 9916144))
    e1 = red(c1 * (-312930 * a1**25 - 1197895591 * a1**18 - 27367766068 * a1**11 - 26135476903 * a1**4)
             * Rational(1, 34706504))
    x = a1 * t + b1
    y = c1 * t**2 + d1 * t + e1
    assert red(expand(y**2 - (x**3 - t**3 * x + t))) == 0
    one = vec(1, gens, degs)
    zero = ["0"] * 6
    return {
        "name": "ell7_p7",
        "field": "z: z^6 + z^5 + z^4 + z^3 + z^2 + z + 1",
        "model": "y^2 = x^3 - t^3 x + t",
        "p": 7,
        "zeta": "z^3",
        "seed": {"name": "Q1", "x": {"num": coord(x, gens, degs)}, "y": {"num": coord(y, gens, degs)}},
        "recipes": [
            {"name": "Q2", "expr": "sigma^2*Q1 - sigma^4*Q1 + sigma^6*Q1"},
            {"name": "Q3", "expr": "Q2 - sigma*Q1 + sigma^3*Q1"},
            {"name": "Q4", "expr": "Q1 + sigma^3*Q2 + sigma*Q3"},
        ],
        "expected_count": 56,
        "shape": 1,
        "expected_trace": {"x": {"num": [one], "den": [zero, zero, one]},
                           "y": {"num": [one], "den": [zero, zero, zero, one]}},
    }


def main():
    out = ROOT / "data" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    for fx in (ell34_p5(), ell7_p7()):
        (out / (fx["name"] + ".json")).write_text(json.dumps(fx, indent=1) + "\n")


if __name__ == "__main__":
    main()
