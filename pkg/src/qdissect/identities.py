"""Mechanical verification of the classical crank/rank identities.

Each verifier compares two independently computed sides of an identity,
coefficient by exact coefficient, and returns a :class:`VerificationReport`
with the first failing power of q when the sides disagree.  Congruence-style
dissection identities are checked as equalities of images in the matching
cyclotomic quotient ring (a^4+1 for the 2-dissection, a^6+a^3+1 for the
3-dissection, a^4+a^3+a^2+a+1 for the 5-dissection), after rescaling q so
that every exponent is integral.

Verifiers accept an optional ``perturb_power``: a deliberate one-coefficient
corruption of the comparison, used by the mutation tests (and the CLI
self-test flag) to confirm the checks can actually fail.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .partitions import StatTable, build_stat_table, partition_count
from .ring import (
    INTEGER_RING,
    PHI5,
    PHI8,
    PHI9,
    LaurentPoly,
    Modulus,
    quotient_ring,
)
from .series import TruncatedSeries, crank_gf, pochhammer_inf, rank_gf, theta

CONGRUENCE_PAIRS = ((5, 4), (7, 5), (11, 6))
EQUIDISTRIBUTION_MODULI = {"crank": (5, 7, 11), "rank": (5, 7)}
RESIDUE_FOR_MODULUS = {5: 4, 7: 5, 11: 6}


@dataclass(frozen=True)
class FailureWitness:
    """First failing coefficient: the power of q and both rendered values."""

    power: int
    expected: str
    actual: str
    ring: str


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    order: int
    status: str                                # "pass" | "fail"
    failure_witness: FailureWitness | None
    elapsed: float = field(compare=False)      # wall seconds; not part of equality

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _report(identity: str, order: int, witness: FailureWitness | None,
            started: float) -> VerificationReport:
    return VerificationReport(
        identity, order, "fail" if witness else "pass", witness,
        time.perf_counter() - started,
    )


def _first_mismatch(expected: TruncatedSeries, actual: TruncatedSeries) -> FailureWitness | None:
    for n in range(min(expected.order, actual.order) + 1):
        e, a = expected.coefficient(n), actual.coefficient(n)
        if e != a:
            return FailureWitness(n, str(e), str(a), expected.ring.name)
    return None


def _perturbed(series: TruncatedSeries, power: int) -> TruncatedSeries:
    if not 0 <= power <= series.order:
        raise ValueError(f"perturbation power {power} outside order {series.order}")
    coeffs = list(series.coefficients)
    coeffs[power] = coeffs[power] + series.ring.one
    return TruncatedSeries(coeffs, series.ring)


def _projected(series: TruncatedSeries, modulus: Modulus) -> TruncatedSeries:
    return series.map_coefficients(modulus.project, quotient_ring(modulus))


# ---------------------------------------------------------------------------
# generating function vs. enumeration

_table_cache: dict[str, StatTable] = {}


def _stat_table(kind: str, n_max: int) -> StatTable:
    # tables are immutable; keep the largest one built so far per kind
    table = _table_cache.get(kind)
    if table is None or table.n_max < n_max:
        table = build_stat_table(kind, n_max)
        _table_cache[kind] = table
    return table


def _verify_gf_against_table(identity: str, kind: str, order: int,
                             series: TruncatedSeries,
                             perturb_power: int | None,
                             started: float) -> VerificationReport:
    table = _stat_table(kind, order)
    witness = None
    for n in range(order + 1):
        row = table.row(n)
        if perturb_power == n:
            row[0] = row.get(0, 0) + 1
        expected = LaurentPoly(row)
        actual = series.coefficient(n)
        if expected != actual:
            witness = FailureWitness(n, str(expected), str(actual), "laurent")
            break
    return _report(identity, order, witness, started)


def verify_crank_gf(order: int, perturb_power: int | None = None) -> VerificationReport:
    """Coefficients of the crank product formula equal the crank counting
    table: conventions at n <= 1, full enumeration for 2 <= n <= order."""
    if order < 2:
        raise ValueError("order must be >= 2")
    started = time.perf_counter()
    return _verify_gf_against_table("crank-gf", "crank", order, crank_gf(order),
                                    perturb_power, started)


def verify_rank_gf(order: int, perturb_power: int | None = None) -> VerificationReport:
    """Coefficients of the rank series equal the enumerated rank table."""
    if order < 1:
        raise ValueError("order must be >= 1")
    started = time.perf_counter()
    return _verify_gf_against_table("rank-gf", "rank", order, rank_gf(order),
                                    perturb_power, started)


# ---------------------------------------------------------------------------
# arithmetic congruences and equidistribution

def verify_congruence(modulus: int, residue: int, n_max: int) -> VerificationReport:
    """p(modulus*n + residue) is divisible by modulus for all n <= n_max,
    for the three classical pairs (5,4), (7,5), (11,6)."""
    if (modulus, residue) not in CONGRUENCE_PAIRS:
        raise ValueError(f"unsupported congruence pair ({modulus}, {residue})")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    started = time.perf_counter()
    witness = None
    for n in range(n_max + 1):
        arg = modulus * n + residue
        rem = partition_count(arg) % modulus
        if rem:
            witness = FailureWitness(arg, "0", str(rem), f"integers mod {modulus}")
            break
    return _report(f"congruence-{modulus}-{residue}", n_max, witness, started)


def verify_equidistribution(statistic: str, modulus: int, residue: int,
                            n_max: int) -> VerificationReport:
    """Every residue class of the statistic modulo `modulus` holds exactly
    p(modulus*n + residue)/modulus partitions.

    Supported: crank for moduli 5, 7, 11; rank for moduli 5 and 7 only (the
    rank does not equidistribute modulo 11).
    """
    if statistic not in EQUIDISTRIBUTION_MODULI:
        raise ValueError(f"unknown statistic {statistic!r}")
    if modulus not in EQUIDISTRIBUTION_MODULI[statistic]:
        raise ValueError(f"equidistribution of the {statistic} is not available mod {modulus}")
    if residue != RESIDUE_FOR_MODULUS[modulus]:
        raise ValueError(f"residue must be {RESIDUE_FOR_MODULUS[modulus]} for modulus {modulus}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    started = time.perf_counter()
    table = _stat_table(statistic, modulus * n_max + residue)
    witness = None
    for n in range(n_max + 1):
        arg = modulus * n + residue
        total = partition_count(arg)
        if total % modulus:
            witness = FailureWitness(arg, f"multiple of {modulus}", str(total), "integer")
            break
        share = total // modulus
        for k in range(modulus):
            got = table.count_mod(k, modulus, arg)
            if got != share:
                witness = FailureWitness(arg, str(share), f"{got} (class {k})", "integer")
                break
        if witness:
            break
    return _report(f"equidist-{statistic}-{modulus}", n_max, witness, started)


# ---------------------------------------------------------------------------
# dissections in the cyclotomic quotient rings

def _dissection_2_rhs(order: int) -> TruncatedSeries:
    ring = quotient_ring(PHI8)
    inv = pochhammer_inf(ring.from_int(-1), 4, 4, order, ring).inverse()
    even = theta(6, 10, order, ring=ring) * inv
    odd = theta(2, 14, order, ring=ring) * inv
    weight = PHI8.project(LaurentPoly({1: 1, 0: -1, -1: 1}))
    return even + odd.scale(weight).shift(1)


def verify_2_dissection(order: int, perturb_power: int | None = None) -> VerificationReport:
    """Crank generating function splits into its even/odd parts in
    Z[a]/(a^4+1), with q already rescaled so all exponents are integral."""
    if order < 2 or order % 2:
        raise ValueError("order must be even and >= 2")
    started = time.perf_counter()
    lhs = _projected(crank_gf(order), PHI8)
    rhs = _dissection_2_rhs(order)
    if perturb_power is not None:
        rhs = _perturbed(rhs, perturb_power)
    return _report("dissection-2", order, _first_mismatch(lhs, rhs), started)


def _dissection_3_rhs(order: int) -> TruncatedSeries:
    ring = quotient_ring(PHI9)
    t_a = theta(6, 21, order, ring=ring)
    t_b = theta(12, 15, order, ring=ring)
    t_c = theta(3, 24, order, ring=ring)
    inv = pochhammer_inf(ring.one, 27, 27, order, ring).inverse()
    w1 = PHI9.project(LaurentPoly({1: 1, 0: -1, -1: 1}))
    w2 = PHI9.project(LaurentPoly({2: 1, -2: 1}))
    combo = (t_a * t_b) + (t_c * t_b).scale(w1).shift(1) + (t_c * t_a).scale(w2).shift(2)
    return combo * inv


def verify_3_dissection(order: int, perturb_power: int | None = None) -> VerificationReport:
    """Crank generating function splits by exponent residue mod 3 in
    Z[a]/(a^6+a^3+1), after rescaling q to clear third powers."""
    if order < 3 or order % 3:
        raise ValueError("order must be a positive multiple of 3")
    started = time.perf_counter()
    lhs = _projected(crank_gf(order), PHI9)
    rhs = _dissection_3_rhs(order)
    if perturb_power is not None:
        rhs = _perturbed(rhs, perturb_power)
    return _report("dissection-3", order, _first_mismatch(lhs, rhs), started)


def _dissection_5_rhs(order: int, root_power: int) -> TruncatedSeries:
    ring = quotient_ring(PHI5)
    t1 = theta(10, 15, order, ring=ring)
    t2 = theta(5, 20, order, ring=ring)
    t5sq = theta(25, 50, order, ring=ring)
    t5sq = t5sq * t5sq                         # f(-q^25)^2
    r = root_power
    # 2cos(2*pi*k/5) realized exactly as a^k + a^-k in Z[a]/(a^4+a^3+a^2+a+1)
    w1 = PHI5.project(LaurentPoly({2 * r: 1, 0: 2, -2 * r: 1}))   # 4cos^2(2r*pi/5)
    w2 = PHI5.project(LaurentPoly({2 * r: 1, -2 * r: 1}))         # 2cos(4r*pi/5)
    w3 = PHI5.project(LaurentPoly({r: 1, -r: 1}))                 # 2cos(2r*pi/5)
    term0 = t1 * t5sq * (t2 * t2).inverse()
    term1 = (t5sq * t2.inverse()).scale(-w1).shift(1)
    term2 = (t5sq * t1.inverse()).scale(w2).shift(2)
    term3 = (t2 * t5sq * (t1 * t1).inverse()).scale(-w3).shift(3)
    return term0 + term1 + term2 + term3


def verify_5_dissection(order: int, root_power: int = 1,
                        perturb_power: int | None = None) -> VerificationReport:
    """Crank generating function splits by exponent residue mod 5 as an
    equality in Z[a]/(a^4+a^3+a^2+a+1), after rescaling q to clear fifth
    powers.

    root_power selects which primitive 5th root the symbol plays on the
    left-hand side (a -> a^root_power); the identity holds for all four.
    """
    if order < 5 or order % 5:
        raise ValueError("order must be a positive multiple of 5")
    if root_power not in (1, 2, 3, 4):
        raise ValueError("root_power must be 1, 2, 3 or 4")
    started = time.perf_counter()
    lhs = crank_gf(order).map_coefficients(
        lambda c: PHI5.project(c.substitute_power(root_power)), quotient_ring(PHI5)
    )
    rhs = _dissection_5_rhs(order, root_power)
    if perturb_power is not None:
        rhs = _perturbed(rhs, perturb_power)
    return _report("dissection-5", order, _first_mismatch(lhs, rhs), started)


def verify_component_4_vanishing(order: int) -> VerificationReport:
    """Nothing lands in exponent class 4 mod 5: the 5-dissection right-hand
    side has an identically zero fourth component, and the fourth component
    of the partition generating function (the crank series at a=1) is
    divisible by 5 coefficient-wise."""
    if order < 5 or order % 5:
        raise ValueError("order must be a positive multiple of 5")
    started = time.perf_counter()
    witness = None

    rhs4 = _dissection_5_rhs(order, 1).dissect(5)[4]
    ring5 = quotient_ring(PHI5)
    for j in range(rhs4.order + 1):
        c = rhs4.coefficient(j)
        if c != ring5.zero:
            witness = FailureWitness(5 * j + 4, "0", str(c), ring5.name)
            break

    if witness is None:
        at_one = crank_gf(order).map_coefficients(
            lambda c: c.evaluate_at_one(), INTEGER_RING
        )
        for n in range(order + 1):
            if at_one.coefficient(n) != partition_count(n):
                witness = FailureWitness(
                    n, str(partition_count(n)), str(at_one.coefficient(n)), "integer"
                )
                break

    if witness is None:
        comp4 = at_one.dissect(5)[4]
        for j in range(comp4.order + 1):
            c = comp4.coefficient(j)
            if c % 5:
                witness = FailureWitness(5 * j + 4, "0 mod 5", str(c % 5), "integers mod 5")
                break

    return _report("component-4-vanishing", order, witness, started)


def crank_coefficients(order: int = 20) -> list[LaurentPoly]:
    """The Laurent-polynomial coefficients of q^0..q^order of the crank
    generating function (default: the first 21)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return list(crank_gf(order).coefficients)
