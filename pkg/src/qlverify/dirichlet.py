"""Dirichlet characters, generalized Bernoulli numbers, and exact special
values of abelian L-functions.

Characters mod N are stored as exponent vectors over a fixed generator
decomposition of (Z/N)^x (the 2-part contributes -1 and 3 as generators
when 8 | N).  Values live in Q(zeta_n) for n the order of the character.
L(1-k, chi) is computed through the generalized Bernoulli number of the
primitive character: primitivization is always applied first, which is
what makes the zeta factorization of an abelian field exact rather than
exact-up-to-Euler-factors.

Residues are kept in [0, N); for N = 1 the unit group is the single
residue 0, which keeps every formula degenerate-safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, prod

from .cyclotomic import CyclotomicNumber
from .numtheory import (
    divisors,
    euler_phi,
    factorize,
    smallest_primitive_root,
    squarefree_subsets,
)
from .report import PREDICTION, VerificationReport, fmt_rational


def _crt_lift(res: int, q: int, N: int) -> int:
    """x = res mod q, x = 1 mod N/q (q a prime-power factor of N)."""
    other = N // q
    for x in range(1, N + 1):
        if x % q == res % q and x % other == 1 % other:
            return x % N
    raise AssertionError("CRT lift not found")


@lru_cache(maxsize=None)
def unit_group(N: int) -> tuple[tuple[int, int], ...]:
    """Generators with orders of (Z/N)^x, deterministic.

    The 2-part comes first: nothing for 2^1, the single generator -1 for
    2^2, and the pair (-1, 3) for 2^e with e >= 3; odd prime powers
    contribute their smallest primitive root.  All generators are lifted
    to be 1 modulo the complementary factor.

    >>> unit_group(5)
    ((2, 4),)
    >>> unit_group(8)
    ((7, 2), (3, 2))
    >>> unit_group(12)
    ((7, 2), (5, 2))
    """
    if N < 1:
        raise ValueError("positive modulus required")
    out = []
    for p, e in factorize(N).factors:
        q = p**e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                out.append((_crt_lift(3, q, N), 2))
            else:
                out.append((_crt_lift(q - 1, q, N), 2))
                out.append((_crt_lift(3, q, N), 2 ** (e - 2)))
        else:
            out.append((_crt_lift(smallest_primitive_root(q), q, N), euler_phi(q)))
    return tuple(out)


@lru_cache(maxsize=None)
def _unit_dlog_table(N: int) -> dict[int, tuple[int, ...]]:
    """residue -> exponent tuple over the unit_group generators."""
    gens = unit_group(N)
    table = {}
    for exps in itertools.product(*[range(o) for _, o in gens]):
        a = 1 % N
        for (g, _), e in zip(gens, exps):
            a = (a * pow(g, e, N)) % N
        table.setdefault(a, exps)
    if len(table) != euler_phi(N):
        raise AssertionError("generators do not span the unit group")
    return table


def units(N: int) -> tuple[int, ...]:
    return tuple(sorted(_unit_dlog_table(N).keys()))


@dataclass(frozen=True)
class DirichletCharacter:
    """chi(g_i) = zeta_(ord_i)^(exponents[i]) on the unit_group generators;
    chi(a) = 0 for a not coprime to the modulus."""

    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        gens = unit_group(self.modulus)
        if len(self.exponents) != len(gens):
            raise ValueError("one exponent per generator required")
        if any(not 0 <= c < o for c, (_, o) in zip(self.exponents, gens)):
            raise ValueError("exponent out of range")

    @property
    def order(self) -> int:
        n = 1
        for c, (_, o) in zip(self.exponents, unit_group(self.modulus)):
            t = o // gcd(o, c)
            n = n * t // gcd(n, t)
        return n

    @property
    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.exponents)

    def value_exponent(self, a: int):
        """e with chi(a) = zeta_order^e, or None when gcd(a, N) > 1."""
        table = _unit_dlog_table(self.modulus)
        key = a % self.modulus
        if key not in table:
            return None
        n = self.order
        e = 0
        for x, c, (_, o) in zip(table[key], self.exponents, unit_group(self.modulus)):
            e += x * ((c * n) // o)
        return e % n

    def value(self, a: int) -> CyclotomicNumber:
        e = self.value_exponent(a)
        if e is None:
            return CyclotomicNumber.rational(self.order, 0)
        return CyclotomicNumber.zeta(self.order, e)

    @property
    def is_even(self) -> bool:
        return self.value_exponent(self.modulus - 1) == 0

    @property
    def is_odd(self) -> bool:
        return not self.is_even

    def is_trivial_on(self, subgroup) -> bool:
        return all(self.value_exponent(h) == 0 for h in subgroup)

    def kernel(self) -> frozenset[int]:
        return frozenset(a for a in units(self.modulus) if self.value_exponent(a) == 0)

    def compose_galois(self, j: int) -> "DirichletCharacter":
        """sigma_j after chi, where sigma_j sends zeta_n to zeta_n^j."""
        if gcd(j, self.order) != 1:
            raise ValueError(f"{j} not coprime to the order {self.order}")
        gens = unit_group(self.modulus)
        return DirichletCharacter(
            self.modulus, tuple((c * j) % o for c, (_, o) in zip(self.exponents, gens))
        )


def all_characters(N: int) -> tuple[DirichletCharacter, ...]:
    gens = unit_group(N)
    return tuple(
        DirichletCharacter(N, exps)
        for exps in itertools.product(*[range(o) for _, o in gens])
    )


@lru_cache(maxsize=None)
def conductor_and_primitivize(chi: DirichletCharacter) -> tuple[int, DirichletCharacter]:
    """Smallest f | N through which chi factors, and the character mod f."""
    N = chi.modulus
    for f in divisors(N):
        if all(chi.value_exponent(a) == 0 for a in units(N) if a % f == 1 % f):
            break
    # build the mod-f character: evaluate chi on lifts coprime to N
    gens_f = unit_group(f)
    n = chi.order
    exps = []
    for g, o in gens_f:
        b = g
        while gcd(b, N) != 1:
            b += f
        e = chi.value_exponent(b)
        exps.append((e * o) // n % o)
    return f, DirichletCharacter(f, tuple(exps))


# ---------------------------------------------------------------------------
# Bernoulli machinery


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """B_k with B_1 = -1/2."""
    if k == 0:
        return Fraction(1)
    return Fraction(-1, k + 1) * sum(
        comb(k + 1, j) * bernoulli_number(j) for j in range(k)
    )


def bernoulli_polynomial(k: int) -> tuple[Fraction, ...]:
    """Coefficients of B_k(x), lowest degree first."""
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k + 1):
        coeffs[k - j] = comb(k, j) * bernoulli_number(j)
    return tuple(coeffs)


def _eval_poly(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def generalized_bernoulli(chi: DirichletCharacter, k: int) -> CyclotomicNumber:
    """B_(k,chi) = f^(k-1) sum_(a=1..f) chi(a) B_k(a/f) for primitive chi mod f."""
    if k < 1:
        raise ValueError("positive k required")
    f = chi.modulus
    cond, _ = conductor_and_primitivize(chi)
    if cond != f:
        raise ValueError("primitive character required")
    bk = bernoulli_polynomial(k)
    n = chi.order
    total = CyclotomicNumber.rational(n, 0)
    for a in range(1, f + 1):
        e = chi.value_exponent(a)
        if e is not None:
            total = total + CyclotomicNumber.zeta(n, e) * _eval_poly(bk, Fraction(a, f))
    return total * Fraction(f) ** (k - 1)


@lru_cache(maxsize=None)
def dirichlet_l_value(chi: DirichletCharacter, s: int) -> CyclotomicNumber:
    """Exact L(s, chi) at s = 1 - k <= 0, via -B_(k,chi*)/k for the
    primitive chi*.  The pole case (s = 0 with trivial chi) is rejected."""
    if s > 0:
        raise ValueError("nonpositive s required")
    k = 1 - s
    if k == 1 and chi.is_trivial:
        raise ValueError("zeta has a pole adjacent to s = 0; k = 1 is excluded for the trivial character")
    _, prim = conductor_and_primitivize(chi)
    return generalized_bernoulli(prim, k) * Fraction(-1, k)


# ---------------------------------------------------------------------------
# subgroups of (Z/N)^x and abelian fields


def subgroup_generated(N: int, gens) -> frozenset[int]:
    out = {1 % N}
    frontier = [1 % N]
    gens = [g % N for g in gens]
    if any(gcd(g, N) != 1 for g in gens):
        raise ValueError("generators must be units")
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = (a * g) % N
            if b not in out:
                out.add(b)
                frontier.append(b)
    return frozenset(out)


def all_subgroups(N: int) -> tuple[frozenset[int], ...]:
    """Every subgroup of (Z/N)^x, ordered by (size, sorted residues)."""
    us = units(N)
    rank = max(len(unit_group(N)), 1)
    found = {subgroup_generated(N, [])}
    for size in range(1, rank + 1):
        for combo in itertools.combinations_with_replacement(us, size):
            found.add(subgroup_generated(N, combo))
    return tuple(sorted(found, key=lambda H: (len(H), sorted(H))))


def _validate_subgroup(N: int, H) -> frozenset[int]:
    H = frozenset(a % N for a in H)
    us = set(units(N))
    if not H or not H <= us:
        raise ValueError(f"{sorted(H)} is not a set of units mod {N}")
    for a in H:
        for b in H:
            if (a * b) % N not in H:
                raise ValueError(f"{sorted(H)} is not closed under multiplication mod {N}")
    return H


def quotient_is_cyclic(N: int, H) -> bool:
    H = _validate_subgroup(N, H)
    index = euler_phi(N) // len(H)
    return any(_order_in_quotient(N, a, H) == index for a in units(N))


def _order_in_quotient(N: int, a: int, H) -> int:
    t, x = 1, a % N
    while x not in H:
        x = (x * a) % N
        t += 1
    return t


def characters_with_kernel(N: int, H) -> tuple[DirichletCharacter, ...]:
    index = euler_phi(N) // len(H)
    return tuple(
        chi for chi in all_characters(N)
        if chi.is_trivial_on(H) and chi.order == index
    )


def field_degree(N: int, H) -> int:
    """Degree over Q of the fixed field of H inside Q(zeta_N)."""
    return euler_phi(N) // len(H)


def signature(N: int, H) -> tuple[int, int]:
    """(r1, r2) of the fixed field: totally real iff -1 lies in H."""
    deg = field_degree(N, H)
    if (N - 1) % N in H:
        return deg, 0
    return 0, deg // 2


def dedekind_zeta_abelian(N: int, H, s: int) -> Fraction:
    """zeta of the fixed field of H at s = 1 - k <= -1, as the product of
    the L-values of the characters trivial on H (each primitivized)."""
    H = _validate_subgroup(N, H)
    k = 1 - s
    if k < 2:
        raise ValueError("k >= 2 required (the trivial character hits the excluded k = 1)")
    chars = [chi for chi in all_characters(N) if chi.is_trivial_on(H)]
    values = [dirichlet_l_value(chi, s) for chi in chars]
    level = 1
    for v in values:
        level = level * v.level // gcd(level, v.level)
    total = CyclotomicNumber.rational(level, 1)
    for v in values:
        total = total * v.raise_level(level)
    return total.as_rational()


def _subgroup_chain(N: int, H, S_product: int):
    """Preimage in (Z/N)^x of the order-S_product subgroup of the cyclic
    quotient by H: the units whose S_product-th power lies in H."""
    return frozenset(a for a in units(N) if pow(a, S_product, N) in H)


def verify_norm_identity_numberfield(N: int, H, n: int) -> VerificationReport:
    """Norm of L(chi, 1-2n) against the inclusion-exclusion product of
    Dedekind zeta values over the subgroup chain; chi has kernel exactly H.

    Requires -1 in H (totally real fixed field) and a cyclic quotient.
    """
    H = _validate_subgroup(N, H)
    if (N - 1) % N not in H:
        raise ValueError("-1 must lie in H (totally real fixed field required)")
    if not quotient_is_cyclic(N, H):
        raise ValueError("quotient by H must be cyclic")
    if n < 1:
        raise ValueError("positive n required")
    m = field_degree(N, H)
    case = f"numfield N={N} H={sorted(H)} n={n}"
    rep = VerificationReport()
    s = 1 - 2 * n
    chars = characters_with_kernel(N, H)
    chi = chars[0]
    lhs = dirichlet_l_value(chi, s).norm_to_Q()
    rhs = Fraction(1)
    for subset, sign in squarefree_subsets(factorize(m).primes):
        z = dedekind_zeta_abelian(N, _subgroup_chain(N, H, prod(subset)), s)
        rhs *= z if sign == 1 else 1 / z
    rep.check(case, "norm_identity", "norm_of_L|moebius_dedekind_zeta",
              lhs, rhs, render=fmt_rational)
    return rep


def zeta_order_of_vanishing(N: int, H, s: int) -> int:
    """ord at s = 1 - k (k >= 2) of the zeta of the fixed field of H:
    r1 + r2 for odd k, r2 for even k."""
    k = 1 - s
    if k < 2:
        raise ValueError("k >= 2 required")
    r1, r2 = signature(N, H)
    return r1 + r2 if k % 2 == 1 else r2


def verify_order_identity(N: int, H, k: int) -> VerificationReport:
    """phi(m) * ord L(chi, 1-k) against the alternating sum of zeta orders
    over the subgroup chain; chi primitive on the cyclic quotient by H."""
    H = _validate_subgroup(N, H)
    if not quotient_is_cyclic(N, H):
        raise ValueError("quotient by H must be cyclic")
    if k < 2:
        raise ValueError("k >= 2 required")
    m = field_degree(N, H)
    case = f"numfield N={N} H={sorted(H)} k={k}"
    rep = VerificationReport()
    chi = characters_with_kernel(N, H)[0]
    parity_match = (chi.is_even and k % 2 == 0) or (chi.is_odd and k % 2 == 1)
    ord_l = 0 if parity_match else 1
    lhs = euler_phi(m) * ord_l
    rhs = 0
    for subset, sign in squarefree_subsets(factorize(m).primes):
        rhs += sign * zeta_order_of_vanishing(N, _subgroup_chain(N, H, prod(subset)), 1 - k)
    rep.check(case, "order_identity", "parity_bernoulli|borel_table_moebius", lhs, rhs)
    return rep


def predict_k_ratio(N: int, H, n: int) -> tuple[Fraction, VerificationReport]:
    """zeta_(F')(1-2n) / ((-1)^n 2)^(r1): the predicted ratio
    #K_(4n-2)(O_F') / #K_(4n-1)(O_F').  Emitted as a PREDICTION record,
    never asserted against external data."""
    H = _validate_subgroup(N, H)
    if (N - 1) % N not in H:
        raise ValueError("-1 must lie in H (totally real field required)")
    r1, _ = signature(N, H)
    value = dedekind_zeta_abelian(N, H, 1 - 2 * n) / Fraction((-1) ** n * 2) ** r1
    rep = VerificationReport()
    rep.add(
        f"numfield N={N} H={sorted(H)} n={n}",
        f"k_ratio_prediction 4n-2={4 * n - 2}",
        "zeta_over_sign_power",
        fmt_rational(value),
        PREDICTION,
    )
    return value, rep
