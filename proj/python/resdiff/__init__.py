"""Exact resultants, resultant derivatives and multiple-root recovery.

Coefficients are given in descending powers and may be ints, Fractions or
"p/q" strings. Rational results come back as fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import ResdiffError, __version__

__all__ = [
    "ResdiffError",
    "analyze",
    "common_multiple_root",
    "derivative",
    "detect_multiplicity",
    "discriminant",
    "gradient",
    "partial",
    "poly_from_roots",
    "recover_first_order",
    "recover_higher_order",
    "resultant",
    "shift",
    "simple_common_root",
]


def _s(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coeffs(p):
    return [_s(c) for c in p]


def _f(s):
    return None if s is None else Fraction(s)


def _cert(c):
    c = dict(c)
    c["root"] = _f(c["root"])
    c["conditions"] = [(name, Fraction(value), passed) for name, value, passed in c["conditions"]]
    return c


def _report(r):
    r = dict(r)
    r["reduced"] = [Fraction(c) for c in r["reduced"]]
    r["chain"] = [(k, Fraction(v)) for k, v in r["chain"]]
    return r


def resultant(f, g):
    return Fraction(_core.resultant(_coeffs(f), _coeffs(g)))


def discriminant(f):
    return Fraction(_core.discriminant(_coeffs(f)))


def partial(f, g, side, indices, algorithm="jet"):
    return Fraction(_core.partial(_coeffs(f), _coeffs(g), side, list(indices), algorithm))


def gradient(f, g, side):
    return [Fraction(v) for v in _core.gradient(_coeffs(f), _coeffs(g), side)]


def poly_from_roots(roots, leading=1):
    return [Fraction(c) for c in _core.poly_from_roots([(_s(r), int(m)) for r, m in roots], _s(leading))]


def derivative(f, k=1):
    return [Fraction(c) for c in _core.derivative(_coeffs(f), k)]


def shift(f, c):
    return [Fraction(x) for x in _core.shift(_coeffs(f), _s(c))]


def detect_multiplicity(f):
    return _report(_core.detect_multiplicity(_coeffs(f)))


def simple_common_root(f, g):
    return _cert(_core.simple_common_root(_coeffs(f), _coeffs(g)))


def recover_first_order(f, s):
    return _cert(_core.recover_first_order(_coeffs(f), s))


def recover_higher_order(f, s):
    return _cert(_core.recover_higher_order(_coeffs(f), s))


def common_multiple_root(f, g, s, p):
    return _cert(_core.common_multiple_root(_coeffs(f), _coeffs(g), s, p))


def analyze(f):
    a = dict(_core.analyze(_coeffs(f)))
    a["report"] = _report(a["report"])
    a["root"] = _f(a["root"])
    for key in ("first_order", "higher_order"):
        if a[key] is not None:
            a[key] = _cert(a[key])
    return a
