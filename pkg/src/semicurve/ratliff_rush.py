"""Ratliff-Rush closedness probing for monomial ideals.

The Ratliff-Rush closure of a regular ideal I is the union of the colon
ideals I^(k+1) : I^k over all k >= 1; I is closed when the union adds
nothing.  Only finitely many depths are ever inspected here, so a closed
verdict is always labelled evidence, never proof.  A not-closed verdict,
by contrast, is final: it carries a witness monomial whose membership in
some I^(k+1) : I^k is re-certified by direct divisibility scans.

For ideals primary to the maximal monomial ideal there is a finite
candidate set: any element of the closure outside I can be multiplied up
to one that every variable pushes into I.  socle_probe checks exactly
those candidates against the colon chain.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from semicurve import kernels
from semicurve.errors import InternalCheckError, UserInputError
from semicurve.ideals import MonomialIdeal
from semicurve.monomials import mono_mul, unit, variable


class Verdict(Enum):
    CLOSED_EVIDENCE = "CLOSED_EVIDENCE"
    NOT_CLOSED = "NOT_CLOSED"
    INCONCLUSIVE = "INCONCLUSIVE"


class PowerCache:
    """Lazily extended list of powers of a fixed ideal (I^0 = unit ideal)."""

    __slots__ = ("ideal", "_powers")

    def __init__(self, ideal):
        self.ideal = ideal
        self._powers = [MonomialIdeal.unit(ideal.arity, weights=ideal.weights), ideal]

    def get(self, k):
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] * self.ideal)
        return self._powers[k]


def variables_ideal(arity, weights=None):
    """The maximal monomial ideal (x0, ..., x_{arity-1})."""
    return MonomialIdeal(arity, [variable(arity, i) for i in range(arity)],
                         weights=weights, _minimal=True)


def _missing_pure_power(ideal):
    """Index of a variable with no pure power among the generators, or None."""
    for i in range(ideal.arity):
        for g in ideal.gens:
            if g[i] > 0 and all(e == 0 for j, e in enumerate(g) if j != i):
                break
        else:
            return i
    return None


def primary_to_max(ideal):
    """True iff every variable has a pure power in the ideal.

    For monomial ideals this is equivalent to being primary to the maximal
    monomial ideal.  The unit ideal passes by convention (callers flag it
    as degenerate)."""
    if ideal.is_unit:
        return True
    return _missing_pure_power(ideal) is None


def reduce_variables(ideal):
    """Drop variables unused by every generator; return (ideal, dropped).

    Closedness verdicts are invariant under this projection.  At least one
    variable is always kept so the ring stays nontrivial."""
    used = [i for i in range(ideal.arity) if any(g[i] > 0 for g in ideal.gens)]
    if not used:
        used = [0]
    if len(used) == ideal.arity:
        return ideal, ()
    dropped = tuple(i for i in range(ideal.arity) if i not in used)
    gens = [tuple(g[i] for i in used) for g in ideal.gens]
    weights = None if ideal.weights is None else tuple(ideal.weights[i] for i in used)
    return MonomialIdeal(len(used), gens, weights=weights, _minimal=True), dropped


def socle_complement(ideal):
    """Minimal generators of I : (all variables) that are not in I.

    This is the finite candidate set for closure elements outside I.
    Raises on ideals without a pure power of every variable, since the
    finiteness argument needs the quotient by I to have finite length."""
    if ideal.is_zero or ideal.is_unit:
        raise UserInputError("socle complement needs a proper nonzero ideal")
    missing = _missing_pure_power(ideal)
    if missing is not None:
        raise UserInputError(
            f"ideal is not primary to the maximal ideal: no pure power of x{missing}")
    quotient = ideal.colon(variables_ideal(ideal.arity, weights=ideal.weights))
    return tuple(g for g in quotient.gens if g not in ideal)


def scaled_in_power(mono, power_k, power_k1):
    """True iff mono * power_k is contained in power_k1 (divisibility scans)."""
    targets = [mono_mul(mono, g) for g in power_k.gens]
    return kernels.all_divisible(targets, list(power_k1.gens))


def certify_witness(ideal, witness, k, powers):
    """Re-verify a not-closed witness independently of the colon engine:
    witness must lie outside I and witness * I^k inside I^(k+1)."""
    if witness in ideal:
        raise InternalCheckError("witness lies in the ideal")
    if not scaled_in_power(witness, powers.get(k), powers.get(k + 1)):
        raise InternalCheckError(f"witness fails the depth-{k} colon membership")


@dataclass(frozen=True)
class RRChainReport:
    ideal: MonomialIdeal
    depth: int
    chain: tuple            # J_k = I^(k+1) : I^k for k = 1..depth
    chain_equal: tuple      # J_k == I per k
    stabilized_at: int | None
    verdict: Verdict
    witness: tuple | None = None
    witness_depth: int | None = None


def rr_chain(ideal, depth, powers=None):
    """Compute the colon chain J_k = I^(k+1) : I^k for k = 1..depth.

    Verdict is CLOSED_EVIDENCE iff every J_k equals I (evidence only:
    deeper colons could still grow), NOT_CLOSED with a certified witness
    as soon as some J_k is strictly larger.  The chain must ascend and
    start at or above I; violations are internal errors."""
    if depth < 1:
        raise UserInputError("chain depth must be at least 1")
    if ideal.is_zero or ideal.is_unit:
        raise UserInputError("colon chain needs a proper nonzero ideal")
    if powers is None:
        powers = PowerCache(ideal)
    chain = []
    for k in range(1, depth + 1):
        j_k = powers.get(k + 1).colon(powers.get(k))
        below = ideal if not chain else chain[-1]
        if not below.is_subset_of(j_k):
            raise InternalCheckError(f"colon chain not ascending at depth {k}")
        chain.append(j_k)
    chain = tuple(chain)
    chain_equal = tuple(j == ideal for j in chain)

    stabilized_at = None
    for k in range(depth, 0, -1):
        if chain[k - 1] == chain[depth - 1]:
            stabilized_at = k
        else:
            break

    witness = witness_depth = None
    if all(chain_equal):
        verdict = Verdict.CLOSED_EVIDENCE
    else:
        verdict = Verdict.NOT_CLOSED
        witness_depth = chain_equal.index(False) + 1
        grown = chain[witness_depth - 1]
        witness = next(g for g in grown.gens if g not in ideal)
        certify_witness(ideal, witness, witness_depth, powers)
    return RRChainReport(ideal, depth, chain, chain_equal, stabilized_at,
                         verdict, witness, witness_depth)


@dataclass(frozen=True)
class SocleProbeReport:
    ideal: MonomialIdeal
    depth: int
    candidates: tuple            # socle-complement monomials, fixed order
    membership_table: tuple      # per candidate: c * I^k <= I^(k+1) for k = 1..depth
    verdict: Verdict
    witness: tuple | None = None
    witness_depth: int | None = None
    degenerate: bool = False     # unit monomial among candidates (I : vars = (1))


def socle_probe(ideal, depth, powers=None):
    """Probe every socle-complement candidate against the colon chain.

    A candidate passing c * I^k <= I^(k+1) at any k <= depth lies in the
    closure but not in I, so the verdict is NOT_CLOSED with that witness.
    If all candidates fail at every probed depth the finite filter is
    passed and the verdict is CLOSED_EVIDENCE."""
    if depth < 1:
        raise UserInputError("probe depth must be at least 1")
    if ideal.is_zero or ideal.is_unit:
        raise UserInputError("socle probe needs a proper nonzero ideal")
    if powers is None:
        powers = PowerCache(ideal)
    candidates = socle_complement(ideal)
    degenerate = unit(ideal.arity) in candidates
    table = []
    for c in candidates:
        table.append(tuple(scaled_in_power(c, powers.get(k), powers.get(k + 1))
                           for k in range(1, depth + 1)))
    table = tuple(table)

    witness = witness_depth = None
    verdict = Verdict.CLOSED_EVIDENCE
    hits = [(row.index(True) + 1, c) for c, row in zip(candidates, table) if True in row]
    if hits:
        verdict = Verdict.NOT_CLOSED
        witness_depth, witness = min(hits, key=lambda t: (t[0], candidates.index(t[1])))
        certify_witness(ideal, witness, witness_depth, powers)
    return SocleProbeReport(ideal, depth, candidates, table, verdict,
                            witness, witness_depth, degenerate)


def combined_report(ideal, depth, powers=None):
    """Chain plus probe as one JSON-ready dict (probe only when applicable).

    Overall verdict: NOT_CLOSED if either side certifies a witness, else
    CLOSED_EVIDENCE from the chain; INCONCLUSIVE is reserved for callers
    that could not complete a probe."""
    if powers is None:
        powers = PowerCache(ideal)
    chain = rr_chain(ideal, depth, powers=powers)
    probe = None
    if primary_to_max(ideal):
        probe = socle_probe(ideal, depth, powers=powers)

    verdict = chain.verdict
    witness, witness_depth = chain.witness, chain.witness_depth
    if probe is not None and probe.verdict is Verdict.NOT_CLOSED and verdict is not Verdict.NOT_CLOSED:
        verdict, witness, witness_depth = probe.verdict, probe.witness, probe.witness_depth

    report = {
        "depth": depth,
        "chain_equal": [bool(b) for b in chain.chain_equal],
        "verdict": verdict.value,
        "socle_candidates": [] if probe is None else [list(c) for c in probe.candidates],
        "membership_table": [] if probe is None else [[bool(b) for b in row]
                                                      for row in probe.membership_table],
    }
    if witness is not None:
        report["witness"] = list(witness)
        report["witness_depth"] = witness_depth
    return report
