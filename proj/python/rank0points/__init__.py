"""Rational and isolated quadratic points on genus 2 and 3 hyperelliptic
curves whose Jacobian has rank 0.

Coefficients are given lowest degree first and may be ints, Fractions or
strings such as "-1/2".
"""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "run_curve",
    "run_batch",
    "torsion",
    "kummer",
    "classify",
    "count_points",
    "l_polynomial",
    "good_primes",
    "InvalidCurve",
    "ParseError",
]

InvalidCurve = _core.InvalidCurve
ParseError = _core.ParseError


def _strs(values):
    return [str(Fraction(v)) if not isinstance(v, str) else v for v in values]


def _line(genus, coeffs):
    return " ".join([str(genus), str(len(coeffs) - 1)] + _strs(coeffs))


def run_curve(genus, coeffs, **options):
    """Full run on y^2 = f(x); returns the report as a dict.

    Rank 0 is assumed. Options: primes, prime_count, precision_start,
    precision_max, max_counting_prime, seed, quadratic, tk, timeout, timings.
    """
    return json.loads(_core.run_curve(_line(genus, coeffs), **options))


def run_batch(curves, **options):
    """Run a list of (genus, coeffs) pairs or raw curve lines; returns a dict."""
    lines = [c if isinstance(c, str) else _line(*c) for c in curves]
    return json.loads(_core.run_batch(lines, "json", **options))


def torsion(genus, coeffs, primes=()):
    r = _core.torsion(genus, _strs(coeffs), list(primes))
    r["bound"] = int(r["bound"])
    r["points"] = [
        ([Fraction(c) for c in a], [Fraction(c) for c in b], order) for a, b, order in r["points"]
    ]
    return r


def kummer(genus, coeffs, a, b):
    """Normalized Kummer coordinates of the Mumford pair (a, b)."""
    return tuple(int(c) for c in _core.kummer(genus, _strs(coeffs), _strs(a), _strs(b)))


def classify(genus, coords):
    r = _core.classify(genus, [str(int(c)) for c in coords])
    r["d"] = int(r["d"])
    r["x"] = tuple(Fraction(v) for v in r["x"])
    r["delta"] = Fraction(r["delta"])
    return r


def count_points(genus, coeffs, p, k=1):
    return _core.count_points(genus, _strs(coeffs), p, k)


def l_polynomial(genus, coeffs, p):
    return [int(c) for c in _core.l_polynomial(genus, _strs(coeffs), p)]


def good_primes(genus, coeffs, n):
    return _core.good_primes(genus, _strs(coeffs), n)
