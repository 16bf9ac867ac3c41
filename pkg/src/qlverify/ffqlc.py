"""Finite-field identities between L-values and equivariant K-group sizes.

The K-groups of F_q are Z in degree 0, Z/(q^n - 1) in degree 2n-1, and 0
otherwise.  For the cyclic extension F_{q^m}/F_q they form restriction
data over C_m: the level-d value is K_t(F_{q^(m/d)}) and the restriction
into a lower level is injection by the explicit multiplier
(q^(nm/d) - 1)/(q^(nm/d') - 1).

verify_main_theorem_ff cross-checks, for a character of C_m and k >= 1,
five independently computed quantities: the conjugate-product norm of the
L-value 1/(1 - zeta^a q^k), the inclusion-exclusion product of zeta values
of the intermediate fields, the signed ratio of equivariant homotopy group
orders from Bredon cohomology, the cyclotomic quotient Z[zeta]/(1 - zeta q^k),
and a gcd closed form for the group order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .abelian import FgAbelianGroup, IntMatrix, PresentedAbelianGroup
from .cyclotomic import CyclotomicNumber, quotient_by_principal
from .equivariant import CyclicMackeyData, bredon_cohomology
from .numtheory import divisors, factorize, prime_power_decomposition, squarefree_subsets
from .report import PASS, SKIP, VerificationReport, fmt_rational


@dataclass(frozen=True)
class CyclicCharacter:
    """Character of C_m sending a fixed generator to zeta_m^a."""

    m: int
    a: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("group order must be positive")

    @property
    def effective_order(self) -> int:
        return self.m // gcd(self.m, self.a)

    @property
    def is_primitive(self) -> bool:
        return gcd(self.a % self.m, self.m) == 1 if self.m > 1 else True

    @property
    def is_trivial(self) -> bool:
        return self.a % self.m == 0

    def primitivize(self) -> "CyclicCharacter":
        """The injective character of C_m' through which this one factors."""
        g = gcd(self.m, self.a % self.m) if self.a % self.m else self.m
        return CyclicCharacter(self.m // g, (self.a % self.m) // g)


@dataclass(frozen=True)
class InducedRepFF:
    """Direct sum of inductions of characters from subgroups C_h <= C_m."""

    m: int
    summands: tuple[tuple[int, int, int], ...]  # (h, a, multiplicity)

    def __post_init__(self):
        for h, a, mult in self.summands:
            if self.m % h != 0:
                raise ValueError(f"subgroup order {h} does not divide {self.m}")
            if mult < 1:
                raise ValueError("multiplicity must be positive")


def k_group_finite_field(q: int, t: int) -> FgAbelianGroup:
    """Quillen's K-groups: Z at t=0, Z/(q^n - 1) at t = 2n-1 > 0, else 0."""
    prime_power_decomposition(q)
    if t < 0:
        raise ValueError("nonnegative degree required")
    if t == 0:
        return FgAbelianGroup(1, ())
    if t % 2 == 1:
        n = (t + 1) // 2
        return FgAbelianGroup.cyclic(q**n - 1)
    return FgAbelianGroup.trivial()


def k_mackey_finite_field(q: int, m: int, t: int) -> CyclicMackeyData:
    """Restriction data of K_t along the subfields of F_{q^m}/F_q, t odd.

    value(d) = K_t(F_{q^(m/d)}); the restriction from level d' down to
    level d | d' is multiplication by (q^(nm/d) - 1)/(q^(nm/d') - 1).
    """
    prime_power_decomposition(q)
    if t < 1 or t % 2 == 0:
        raise ValueError("odd positive degree required (even K-groups vanish)")
    n = (t + 1) // 2
    orders = {d: q ** (n * m // d) - 1 for d in divisors(m)}
    value = {d: PresentedAbelianGroup.cyclic(orders[d]) for d in orders}
    ext = {}
    for big in divisors(m):
        for small in divisors(m):
            if big % small == 0 and big != small:
                ext[(big, small)] = IntMatrix.from_rows([[orders[small] // orders[big]]])
    return CyclicMackeyData(m, value, ext)


def artin_l_value_ff(q: int, chi: CyclicCharacter, k: int) -> CyclotomicNumber:
    """L(F_q, chi, -k) = 1/(1 - zeta^a q^k), at the primitive level of chi."""
    prime_power_decomposition(q)
    if k < 1:
        raise ValueError("positive k required")
    prim = chi.primitivize()
    denom = 1 - CyclotomicNumber.zeta(prim.m, prim.a) * q**k
    return denom.inverse()


def zeta_value_ff(q_power: int, k: int) -> Fraction:
    """zeta(F_Q, -k) = 1/(1 - Q^k)."""
    return Fraction(1, 1 - q_power**k)


def moebius_zeta_product_ff(q: int, m: int, k: int) -> Fraction:
    """Inclusion-exclusion product of zeta values of intermediate fields:
    prod over squarefree subsets S of the primes of m of
    zeta(F_{q^(m/prod S)}, -k)^((-1)^|S|)."""
    prime_power_decomposition(q)
    if m < 1 or k < 1:
        raise ValueError("positive m and k required")
    result = Fraction(1)
    for subset, sign in squarefree_subsets(factorize(m).primes):
        z = zeta_value_ff(q ** (m // _prod(subset)), k)
        result *= z if sign == 1 else 1 / z
    return result


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def equivariant_k_finite_field(q: int, m: int, rep, t: int) -> FgAbelianGroup:
    """Equivariant homotopy group in degree t >= 1 with coefficients in a
    character of C_m or an InducedRepFF.

    Characters first descend to their primitive quotient; induced sums
    reduce summand by summand, replacing the base field by the fixed field
    F_{q^(m/h)} of the inducing subgroup.
    """
    if t < 1:
        raise ValueError("degree must be >= 1 (the degree-0 free part is unsupported)")
    if isinstance(rep, InducedRepFF):
        if rep.m != m:
            raise ValueError("ambient group order mismatch")
        total = FgAbelianGroup.trivial()
        for h, a, mult in rep.summands:
            piece = equivariant_k_finite_field(q ** (m // h), h, CyclicCharacter(h, a), t)
            for _ in range(mult):
                total = total.direct_sum(piece)
        return total
    if not isinstance(rep, CyclicCharacter):
        raise TypeError("rep must be a CyclicCharacter or InducedRepFF")
    if rep.m != m:
        raise ValueError("group order mismatch")
    if t % 2 == 0:
        return FgAbelianGroup.trivial()
    prim = rep.primitivize()
    return _bredon_pi_odd(q, prim.m, t)


@lru_cache(maxsize=None)
def _bredon_pi_odd(q: int, m_eff: int, t: int) -> FgAbelianGroup:
    return bredon_cohomology(k_mackey_finite_field(q, m_eff, t), 0)


def gcd_order_closed_form(q: int, m_eff: int, k: int) -> int:
    """gcd(q^(k m') - 1, (q^(k m') - 1)/(q^(k m'/p) - 1) for p | m')."""
    big = q ** (k * m_eff) - 1
    vals = [big]
    for p in factorize(m_eff).primes:
        vals.append(big // (q ** (k * m_eff // p) - 1))
    out = 0
    for v in vals:
        out = gcd(out, v)
    return out


def verify_main_theorem_ff(q: int, m: int, chi: CyclicCharacter, k: int) -> VerificationReport:
    """Cross-check all five computation paths for one (q, m, chi, k) case.

    Mismatches become FAIL records, never exceptions.  A non-cyclic odd
    group would be flagged (SKIP) rather than failed, provided the two
    structural paths still agree.
    """
    if chi.m != m:
        raise ValueError("character group order mismatch")
    case = f"ffqlc q={q} m={m} a={chi.a % m} k={k}"
    rep = VerificationReport()
    prim = chi.primitivize()

    l_value = artin_l_value_ff(q, chi, k)
    norm_l = l_value.norm_to_Q()
    moebius = moebius_zeta_product_ff(q, prim.m, k)

    pi_odd = equivariant_k_finite_field(q, m, chi, 2 * k - 1)
    pi_even = equivariant_k_finite_field(q, m, chi, 2 * k)

    rep.add(case, "l_value", "cyclotomic_inverse",
            json.dumps(l_value.as_json(), sort_keys=True), PASS)

    rep.check(case, "norm_vs_moebius", "conjugate_product|moebius_zeta_product",
              norm_l, moebius, render=fmt_rational)

    sign = -1 if chi.is_trivial else 1
    ratio = Fraction(sign * pi_even.order(), pi_odd.order())
    rep.check(case, "norm_vs_k_ratio", "conjugate_product|signed_pi_ratio",
              norm_l, ratio, render=fmt_rational)

    structural = quotient_by_principal(
        prim.m, 1 - CyclotomicNumber.zeta(prim.m, prim.a) * q**k
    )
    rep.check(case, "pi_odd_structure", "bredon_H0|cyclotomic_quotient",
              pi_odd, structural)

    rep.check(case, "pi_odd_order_gcd", "bredon_H0|gcd_closed_form",
              pi_odd.order(), gcd_order_closed_form(q, prim.m, k))

    rep.check(case, "pi_even_vanishing", "bredon_H0", pi_even, FgAbelianGroup.trivial())

    cyclic_status = PASS if len(pi_odd.invariant_factors) <= 1 else SKIP
    rep.add(case, "pi_odd_cyclic", "bredon_H0", str(pi_odd), cyclic_status)
    return rep


def verify_induced_ff(q: int, rep_spec: InducedRepFF, k: int) -> VerificationReport:
    """Check the induced-representation reduction for one (q, rep, k) case.

    The L-side is the product over summands of the conjugate-product norm
    of the subgroup-level L-value (each raised to its multiplicity); the
    K-side is the signed order ratio of the direct-sum equivariant groups.
    """
    case = f"ffqlc-induced q={q} m={rep_spec.m} summands={list(rep_spec.summands)} k={k}"
    out = VerificationReport()
    m = rep_spec.m

    norm_l = Fraction(1)
    trivial_count = 0
    structural = FgAbelianGroup.trivial()
    for h, a, mult in rep_spec.summands:
        chi = CyclicCharacter(h, a)
        base = q ** (m // h)
        norm_l *= artin_l_value_ff(base, chi, k).norm_to_Q() ** mult
        if chi.is_trivial:
            trivial_count += mult
        prim = chi.primitivize()
        piece = quotient_by_principal(prim.m, 1 - CyclotomicNumber.zeta(prim.m, prim.a) * base**k)
        for _ in range(mult):
            structural = structural.direct_sum(piece)

    pi_odd = equivariant_k_finite_field(q, m, rep_spec, 2 * k - 1)
    pi_even = equivariant_k_finite_field(q, m, rep_spec, 2 * k)

    sign = (-1) ** trivial_count
    ratio = Fraction(sign * pi_even.order(), pi_odd.order())
    out.check(case, "norm_vs_k_ratio", "summandwise_norms|signed_pi_ratio",
              norm_l, ratio, render=fmt_rational)
    out.check(case, "pi_odd_structure", "induced_bredon|cyclotomic_quotients",
              pi_odd, structural)
    out.check(case, "pi_even_vanishing", "induced_bredon", pi_even, FgAbelianGroup.trivial())
    return out
