"""Monomial ideals in canonical minimal-generator form.

A MonomialIdeal stores the unique minimal monomial generating set: no
generator divides another.  The zero ideal has no generators; the unit
ideal is generated by 1.  Generators are kept in a deterministic order,
descending under the attached weighted grevlex grading (unit weights when
none are attached), which makes equality a plain field comparison and all
serializations byte-stable.

All operations are pure; the heavy lifting (divisibility scans, pairwise
expansions) is delegated to semicurve.kernels.
"""
from __future__ import annotations

import json

from semicurve import kernels
from semicurve.monomials import Mono, format_monomial, weighted_degree


def _canonical_sort(gens, arity, weights):
    ws = weights if weights is not None else (1,) * arity
    return tuple(sorted(gens, key=lambda m: (-weighted_degree(m, ws), m)))


class MonomialIdeal:
    """Minimal monomial generators of an ideal in k variables."""

    __slots__ = ("arity", "gens", "weights")

    def __init__(self, arity, gens, weights=None, _minimal=False):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != arity:
                raise ValueError(f"generator arity {len(g)} != ideal arity {arity}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in generator {g}")
        if weights is not None:
            weights = tuple(weights)
            if len(weights) != arity:
                raise ValueError("weights arity mismatch")
        if not _minimal:
            gens = kernels.minimalize(gens)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "gens", _canonical_sort(gens, arity, weights))
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, arity, weights=None):
        return cls(arity, [], weights=weights, _minimal=True)

    @classmethod
    def unit(cls, arity, weights=None):
        return cls(arity, [(0,) * arity], weights=weights, _minimal=True)

    @classmethod
    def from_json(cls, text, weights=None):
        data = json.loads(text)
        return cls(data["arity"], [tuple(g) for g in data["gens"]], weights=weights)

    # -- predicates ---------------------------------------------------

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def contains(self, m):
        """Membership: true iff some generator divides m."""
        if len(m) != self.arity:
            raise ValueError(f"arity mismatch: monomial {len(m)} vs ideal {self.arity}")
        return kernels.divides_any(self.gens, tuple(m))

    def __contains__(self, m):
        return self.contains(m)

    def is_subset_of(self, other):
        """Ideal containment: every generator of self lies in other."""
        self._check(other)
        return kernels.all_divisible(self.gens, other.gens)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def _make(self, rows):
        return MonomialIdeal(self.arity, rows, weights=self.weights, _minimal=True)

    def product(self, other):
        self._check(other)
        return self._make(kernels.pairwise_product(self.gens, other.gens))

    def power(self, k):
        """k-th power by repeated product; k = 0 gives the unit ideal."""
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return MonomialIdeal.unit(self.arity, weights=self.weights)
        out = self
        for _ in range(k - 1):
            out = out.product(self)
        return out

    def colon(self, other):
        """(self : other), the intersection over other's generators of the
        single-monomial colons.  The zero divisor is rejected."""
        self._check(other)
        if other.is_zero:
            raise ValueError("colon by the zero ideal is undefined")
        result = None
        for g in other.gens:
            single = kernels.colon_by_monomial(self.gens, g)
            result = single if result is None else kernels.pairwise_lcm(result, single)
        return self._make(result)

    def intersect(self, other):
        self._check(other)
        return self._make(kernels.pairwise_lcm(self.gens, other.gens))

    def radical(self):
        """Squarefree parts of the generators, minimalized."""
        clamped = [tuple(1 if e > 0 else 0 for e in g) for g in self.gens]
        return self._make(kernels.minimalize(clamped))

    def __mul__(self, other):
        return self.product(other)

    def __pow__(self, k):
        return self.power(k)

    # -- identity -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.arity == other.arity and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash((self.arity, frozenset(self.gens)))

    def __repr__(self):
        if self.is_zero:
            return f"MonomialIdeal({self.arity}, 0)"
        inner = ", ".join(format_monomial(g) for g in self.gens)
        return f"MonomialIdeal({self.arity}, ({inner}))"

    def to_json(self):
        """Canonical JSON: ``{"arity": k, "gens": [[e0, ...], ...]}``."""
        payload = {"arity": self.arity, "gens": [list(g) for g in self.gens]}
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def minimalize(gens, arity=None, weights=None):
    """Canonicalize a generator set into a MonomialIdeal."""
    gens = [tuple(g) for g in gens]
    if arity is None:
        if not gens:
            raise ValueError("arity required for an empty generator set")
        arity = len(gens[0])
    return MonomialIdeal(arity, gens, weights=weights)


def ideal_equal(a, b):
    a._check(b)
    return a == b
