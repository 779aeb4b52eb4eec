"""Pure-Python exponent-vector kernels.

These are the hot inner loops of the ideal arithmetic: divisibility scans,
minimal-generator filtering, pairwise products and lcms, colons by a single
monomial.  Exponent vectors are plain tuples of nonnegative ints, so this
backend is exact for arbitrarily large exponents.  semicurve._speedups holds
the compiled equivalent; semicurve.kernels picks one at import.
"""
from __future__ import annotations

BACKEND = "python"


def _divides(a, b):
    """True iff monomial a divides b (componentwise <=)."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def minimalize(rows):
    """Minimal elements of rows under divisibility, sorted by (degree, exps).

    Duplicates are collapsed.  A monomial is kept iff no other kept monomial
    divides it; scanning in degree order makes one forward pass sufficient.
    """
    uniq = sorted(set(rows), key=lambda m: (sum(m), m))
    kept = []
    for m in uniq:
        for g in kept:
            if _divides(g, m):
                break
        else:
            kept.append(m)
    return kept


def pairwise_product(rows_a, rows_b):
    """Minimal generators of the product ideal: all a+b sums, minimalized."""
    prods = {tuple(x + y for x, y in zip(a, b)) for a in rows_a for b in rows_b}
    return minimalize(prods)


def pairwise_lcm(rows_a, rows_b):
    """Minimal generators of the intersection: componentwise maxima, minimalized."""
    lcms = {tuple(max(x, y) for x, y in zip(a, b)) for a in rows_a for b in rows_b}
    return minimalize(lcms)


def colon_by_monomial(rows, g):
    """Minimal generators of (rows) : g, via clamped componentwise subtraction."""
    quots = {tuple(max(x - y, 0) for x, y in zip(m, g)) for m in rows}
    return minimalize(quots)


def divides_any(rows, target):
    """True iff some row divides target (monomial ideal membership)."""
    for g in rows:
        if _divides(g, target):
            return True
    return False


def all_divisible(targets, rows):
    """True iff every target is divisible by some row (ideal containment)."""
    for t in targets:
        if not divides_any(rows, t):
            return False
    return True
