"""Restriction-only Mackey data over a cyclic group and its Bredon cohomology.

For C_m with distinct prime factors p_1 < ... < p_l, the cellular cochain
complex of the equivariant Moore object for the standard cyclotomic
character occupies degrees -l..0.  The degree -s term is the direct sum,
over the size-s subsets S of the primes, of the value at the orbit level
prod(S); the differential drops one prime at a time through the given
restriction homomorphisms with alternating Cech signs.

Transfers are deliberately absent from the data model: every computation
in scope needs restrictions only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod
from typing import Mapping

from .abelian import (
    BoundedComplex,
    FgAbelianGroup,
    IntMatrix,
    PresentedAbelianGroup,
    cohomology,
)
from .numtheory import divisors, factorize, multiplicative_order


@dataclass(frozen=True, eq=False)
class CyclicMackeyData:
    """Values on orbits C_m/C_d (one per divisor d of m) plus restrictions.

    ext[(d_big, d_small)] is an integer matrix on generators mapping
    value(d_big) into value(d_small), for every pair d_small | d_big.  The
    pair (d, d) may be omitted and defaults to the identity.  Construction
    checks well-definedness on presentations and functoriality of
    compositions, both modulo target relations.
    """

    m: int
    value: Mapping[int, PresentedAbelianGroup]
    ext: Mapping[tuple[int, int], IntMatrix]

    def __post_init__(self):
        divs = divisors(self.m)
        if sorted(self.value.keys()) != divs:
            raise ValueError("need exactly one value per divisor of m")
        full = dict(self.ext)
        for d in divs:
            full.setdefault((d, d), IntMatrix.identity(self.value[d].n_generators))
        for big in divs:
            for small in divs:
                if big % small != 0:
                    continue
                mat = full.get((big, small))
                if mat is None:
                    raise ValueError(f"missing restriction {big} -> {small}")
                src, tgt = self.value[big], self.value[small]
                if (mat.rows, mat.cols) != (tgt.n_generators, src.n_generators):
                    raise ValueError(f"restriction {big} -> {small} has wrong shape")
                for col in src.relations.columns():
                    if not tgt.contains_in_relations(mat.apply(col)):
                        raise ValueError(f"restriction {big} -> {small} not well defined")
        for a in divs:
            for b in divs:
                for c in divs:
                    if a % b == 0 and b % c == 0:
                        direct = full[(a, c)]
                        composite = full[(b, c)] @ full[(a, b)]
                        diff = direct + (-composite)
                        tgt = self.value[c]
                        for col in diff.columns():
                            if not tgt.contains_in_relations(col):
                                raise ValueError(
                                    f"restrictions not functorial along {a} -> {b} -> {c}"
                                )
        object.__setattr__(self, "ext", full)

    def restriction(self, d_big: int, d_small: int) -> IntMatrix:
        return self.ext[(d_big, d_small)]


def _cech_complex(labels, term_of, map_between) -> BoundedComplex:
    """Cochain complex indexed by subsets of labels, degrees -len(labels)..0.

    term_of(S) gives the presented group attached to the subset S (a sorted
    tuple); map_between(S, T) the generator matrix for dropping one label,
    T = S minus one element.  The component sign is (-1)^j where j is the
    1-based position of the dropped label in sorted(S).
    """
    labels = tuple(sorted(labels))
    n = len(labels)
    by_degree = []
    subsets_by_size = []
    for size in range(n, -1, -1):
        subsets = list(itertools.combinations(labels, size))
        subsets_by_size.append(subsets)
        by_degree.append([term_of(S) for S in subsets])
    terms = tuple(PresentedAbelianGroup.direct_sum(*groups) if len(groups) > 1 else groups[0]
                  for groups in by_degree)
    diffs = []
    for idx in range(n):
        sources = subsets_by_size[idx]       # size n - idx
        targets = subsets_by_size[idx + 1]   # size n - idx - 1
        grid = []
        for T in targets:
            row = []
            for S in sources:
                tgt_g = term_of(T)
                src_g = term_of(S)
                if set(T) <= set(S) and len(S) == len(T) + 1:
                    dropped = next(x for x in S if x not in T)
                    j = S.index(dropped) + 1
                    block = map_between(S, T)
                    row.append(block if j % 2 == 0 else -block)
                else:
                    row.append(IntMatrix.zero(tgt_g.n_generators, src_g.n_generators))
            grid.append(row)
        diffs.append(IntMatrix.assemble(grid))
    return BoundedComplex(-n, terms, tuple(diffs))


def moore_cochain_complex(M: CyclicMackeyData) -> BoundedComplex:
    """Cellular cochain complex of the Moore object, degrees -l..0.

    l is the number of distinct primes of m; the subset S of primes
    contributes value(prod(S)) in degree -|S|, and the differentials are
    alternating sums of restrictions.
    """
    primes = factorize(M.m).primes
    return _cech_complex(
        primes,
        lambda S: M.value[prod(S)],
        lambda S, T: M.restriction(prod(S), prod(T)),
    )


def bredon_cohomology(M: CyclicMackeyData, s: int) -> FgAbelianGroup:
    """H^s of the Moore cochain complex; s must lie in [-l, 0]."""
    l = factorize(M.m).num_distinct_primes
    if not -l <= s <= 0:
        raise ValueError(f"degree {s} outside [-{l}, 0]")
    return cohomology(moore_cochain_complex(M), s)


def h0_fixed_point_oracle(M: CyclicMackeyData) -> FgAbelianGroup:
    """Closed form for H^0: value(1) modulo the images of all prime-level
    restrictions, computed as a single cokernel."""
    bottom = M.value[1]
    pieces = [bottom.relations]
    for p in factorize(M.m).primes:
        pieces.append(M.restriction(p, 1))
    stacked = pieces[0]
    for extra in pieces[1:]:
        stacked = stacked.hstack(extra)
    return PresentedAbelianGroup(bottom.n_generators, stacked).normal_form()


def cyclic_fixed_point_mackey(mod: int, u: int, m: int) -> CyclicMackeyData:
    """Kernel-filtration Mackey data on A = Z/mod for a unit u with u^m = 1.

    value(d) is the kernel of multiplication by u^(m/d) - 1 on A, i.e. the
    cyclic subgroup of order gcd(u^(m/d) - 1, mod), presented on its natural
    generator; restrictions are the subgroup inclusions.
    """
    if mod < 1:
        raise ValueError("modulus must be positive")
    if gcd(u, mod) != 1:
        raise ValueError(f"{u} is not a unit mod {mod}")
    if pow(u, m, mod) != 1:
        raise ValueError(f"u^m != 1 (ord(u) = {multiplicative_order(u, mod)} does not divide {m})")
    orders = {d: gcd(pow(u, m // d, mod) - 1, mod) if mod > 1 else 1 for d in divisors(m)}
    value = {d: PresentedAbelianGroup.cyclic(orders[d]) for d in orders}
    ext = {}
    for big in divisors(m):
        for small in divisors(m):
            if big % small == 0 and big != small:
                # generator mod/orders[big] = (orders[small]/orders[big]) * mod/orders[small]
                ext[(big, small)] = IntMatrix.from_rows([[orders[small] // orders[big]]])
    return CyclicMackeyData(m, value, ext)


def cyclic_cech_complex(mod: int, subgroup_gens) -> BoundedComplex:
    """Intersection cochain complex for a family of subgroups of Z/mod.

    Each subgroup is given by a generator g and equals (gcd(g, mod)) Z/mod;
    the subset S of indices contributes the intersection of the chosen
    subgroups (the empty subset contributes all of Z/mod), with inclusion
    differentials and the usual alternating signs.
    """
    if mod < 1:
        raise ValueError("modulus must be positive")
    ds = [gcd(int(g), mod) for g in subgroup_gens]

    def lcm_of(vals):
        out = 1
        for v in vals:
            out = out * v // gcd(out, v)
        return out

    def gen_of(S) -> int:
        # intersection of the subgroups indexed by S is generated by the lcm
        return lcm_of([ds[i] for i in S]) if S else 1

    def term_of(S):
        return PresentedAbelianGroup.cyclic(mod // gen_of(S))

    def map_between(S, T):
        return IntMatrix.from_rows([[gen_of(S) // gen_of(T)]])

    return _cech_complex(range(len(ds)), term_of, map_between)


def cech_h0_oracle(mod: int, subgroup_gens) -> FgAbelianGroup:
    """Z/mod modulo the join of the given subgroups: cyclic of order
    gcd(mod, g_1, ..., g_k)."""
    g = mod
    for x in subgroup_gens:
        g = gcd(g, int(x))
    return FgAbelianGroup.cyclic(g)
