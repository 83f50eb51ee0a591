"""Exact coefficients and saddle-point asymptotics for exp(m e^{bx} + r e^{dx} + s)."""

from fractions import Fraction

from . import _egfasym
from ._egfasym import EgfError, Params, richardson_weights as _weights

__all__ = [
    "EgfError",
    "Params",
    "params",
    "known_families",
    "coefficients",
    "estimate",
    "ratios",
    "richardson",
    "richardson_weights",
    "lambert_w0",
    "saddle",
]


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def params(m, b, d, r, s):
    """Validated parameters; accepts int, Fraction or "p/q" / decimal strings."""
    return Params(_q(m), _q(b), _q(d), _q(r), _q(s))


def known_families():
    return dict(_egfasym.known_families())


def coefficients(p, max_index, exact=True, digits=64):
    """a(0..max_index) with a(0) = 1; ints (or Fractions) when exact, strings otherwise."""
    raw = _egfasym.coefficients(p, max_index, exact, digits)
    if not exact:
        return raw
    return [Fraction(v) if "/" in v else int(v) for v in raw]


def estimate(p, n, formula="full", digits=64):
    return _egfasym.estimate(p, n, formula, digits)


def ratios(p, terms, formula="full", digits=64, jobs=1):
    return _egfasym.ratios(p, terms, formula, digits, jobs)


def richardson(values, order, digits=64):
    return _egfasym.richardson([str(v) for v in values], order, digits)


def richardson_weights(order):
    return [Fraction(w) for w in _weights(order)]


def lambert_w0(x, digits=64):
    return _egfasym.lambert_w0(str(x), digits)


def saddle(p, n, digits=64):
    return _egfasym.saddle(p, n, digits)
