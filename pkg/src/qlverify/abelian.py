"""Finitely generated abelian groups through integer matrices.

A group is given either in invariant-factor form (FgAbelianGroup) or by a
presentation (generators plus an integer relation matrix whose columns are
the relators).  Smith normal form over Z does all the work: normal forms,
kernels, cokernels, and the cohomology of bounded cochain complexes of
presented groups.

All arithmetic is exact on Python integers.  Matrices are small (the
complexes in this package have at most 2^4 blocks), so Smith reduction by
elementary row/column operations with least-absolute-value pivoting is
entirely adequate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .numtheory import factorize


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix with explicit shape (rows or cols may be 0)."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("matrix data does not match declared shape")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def column(cls, entries) -> "IntMatrix":
        entries = [int(x) for x in entries]
        return cls(len(entries), 1, tuple((x,) for x in entries))

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return IntMatrix(
            self.rows,
            self.cols + other.cols,
            tuple(self.data[i] + other.data[i] for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        ot = list(zip(*other.data)) if other.data else [()] * other.cols
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot) if self.cols else tuple(0 for _ in range(other.cols))
            for row in self.data
        )
        return IntMatrix(self.rows, other.cols, out)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.data))

    def scaled(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self.data))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)),
        )

    def apply(self, vec) -> tuple[int, ...]:
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    @staticmethod
    def block_diagonal(blocks) -> "IntMatrix":
        blocks = list(blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r0 + i][c0 + j] = b.data[i][j]
            r0 += b.rows
            c0 += b.cols
        return IntMatrix.from_rows(data, cols)

    @staticmethod
    def assemble(grid) -> "IntMatrix":
        """Block matrix from a 2D grid of IntMatrix pieces (shapes must align)."""
        row_heights = [row[0].rows for row in grid]
        col_widths = [b.cols for b in grid[0]]
        rows, cols = sum(row_heights), sum(col_widths)
        data = [[0] * cols for _ in range(rows)]
        r0 = 0
        for bi, row in enumerate(grid):
            c0 = 0
            for bj, b in enumerate(row):
                if b.rows != row_heights[bi] or b.cols != col_widths[bj]:
                    raise ValueError("ragged block grid")
                for i in range(b.rows):
                    for j in range(b.cols):
                        data[r0 + i][c0 + j] = b.data[i][j]
                c0 += b.cols
            r0 += row_heights[bi]
        return IntMatrix.from_rows(data, cols)


def _coerce(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M)


def smith_normal_form(M) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return unimodular (U, D, V) with U @ M @ V = D, D diagonal, d1 | d2 | ...

    Pivoting always picks a least-absolute-value nonzero entry of the
    remaining block, which keeps entry growth tame at these sizes.

    >>> _, D, _ = smith_normal_form([[2, 0], [0, 3]])
    >>> D.data
    ((1, 0), (0, 6))
    >>> _, D, _ = smith_normal_form([[4, 6]])
    >>> D.data
    ((2, 0),)
    """
    M = _coerce(M)
    n, m = M.rows, M.cols
    A = [list(r) for r in M.data]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    V = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def row_op(i, k, q):  # row_i -= q * row_k
        A[i] = [a - q * b for a, b in zip(A[i], A[k])]
        U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def col_op(j, k, q):  # col_j -= q * col_k
        for r in A:
            r[j] -= q * r[k]
        for r in V:
            r[j] -= q * r[k]

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in A:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    for t in range(min(n, m)):
        while True:
            pivot = None
            for i in range(t, n):
                for j in range(t, m):
                    if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot != (t, t):
                if pivot[0] != t:
                    swap_rows(t, pivot[0])
                if pivot[1] != t:
                    swap_cols(t, pivot[1])
            if A[t][t] < 0:
                negate_row(t)
            dirty = False
            for i in range(t + 1, n):
                if A[i][t] != 0:
                    row_op(i, t, A[i][t] // A[t][t])
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, m):
                if A[t][j] != 0:
                    col_op(j, t, A[t][j] // A[t][t])
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            # force divisibility of the remaining block by the pivot
            culprit = next(
                ((i, j) for i in range(t + 1, n) for j in range(t + 1, m) if A[i][j] % A[t][t] != 0),
                None,
            )
            if culprit is None:
                break
            row_op(t, culprit[0], -1)  # add the offending row to the pivot row

    return (
        IntMatrix.from_rows(U, n),
        IntMatrix.from_rows(A, m),
        IntMatrix.from_rows(V, m),
    )


class NoIntegerSolution(Exception):
    """Raised when an integer linear system A x = b has no solution."""


def solve_integer(M, target) -> tuple[int, ...]:
    """One integer solution x of M x = target, or raise NoIntegerSolution."""
    M = _coerce(M)
    target = tuple(int(x) for x in target)
    if len(target) != M.rows:
        raise ValueError("target length mismatch")
    if M.cols == 0:
        if any(target):
            raise NoIntegerSolution
        return ()
    if M.rows == 1:
        # single equation: solvable iff gcd of the row divides the target
        row = M.data[0]
        g, coeffs = _extended_gcd_vector(row)
        if g == 0:
            if target[0] != 0:
                raise NoIntegerSolution
            return (0,) * M.cols
        if target[0] % g != 0:
            raise NoIntegerSolution
        q = target[0] // g
        return tuple(q * c for c in coeffs)
    U, D, V = smith_normal_form(M)
    b = U.apply(target)
    y = [0] * M.cols
    for i in range(M.rows):
        d = D.data[i][i] if i < min(M.rows, M.cols) else 0
        if d != 0:
            if b[i] % d != 0:
                raise NoIntegerSolution
            y[i] = b[i] // d
        elif b[i] != 0:
            raise NoIntegerSolution
    return V.apply(y)


def _extended_gcd_vector(row) -> tuple[int, tuple[int, ...]]:
    """(g, coeffs) with sum coeffs[i] * row[i] = g = gcd(row)."""
    g = 0
    coeffs = [0] * len(row)
    for i, a in enumerate(row):
        if a == 0:
            continue
        if g == 0:
            g, coeffs = abs(a), [0] * len(row)
            coeffs[i] = 1 if a > 0 else -1
            continue
        old_g = g
        x, y, g = _bezout(old_g, a)
        coeffs = [x * c for c in coeffs]
        coeffs[i] += y
    return g, tuple(coeffs)


def _bezout(a, b) -> tuple[int, int, int]:
    """(x, y, g) with a x + b y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_s, old_t, old_r


def in_column_span(M, target) -> bool:
    try:
        solve_integer(M, target)
        return True
    except NoIntegerSolution:
        return False


def integer_kernel(M) -> IntMatrix:
    """Basis of the lattice ker(M: Z^cols -> Z^rows), as matrix columns."""
    M = _coerce(M)
    _, D, V = smith_normal_form(M)
    rank = sum(
        1 for i in range(min(M.rows, M.cols)) if D.data[i][i] != 0
    )
    basis_cols = [V.col(j) for j in range(rank, M.cols)]
    return IntMatrix.from_rows(
        [[c[i] for c in basis_cols] for i in range(M.cols)], len(basis_cols)
    )


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True, order=True)
class FgAbelianGroup:
    """Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and every di >= 2."""

    rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError("invariant factors must be >= 2")
        if any(fs[i + 1] % fs[i] != 0 for i in range(len(fs) - 1)):
            raise ValueError(f"divisibility chain violated: {fs}")

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.invariant_factors

    def order(self) -> int:
        if self.rank != 0:
            raise ValueError("infinite group has no order")
        return prod(self.invariant_factors)

    @classmethod
    def cyclic(cls, n: int) -> "FgAbelianGroup":
        """Z/n for n >= 1 (n = 1 gives the trivial group), Z for n = 0."""
        if n < 0:
            raise ValueError("nonnegative order required")
        if n == 0:
            return cls(1, ())
        return cls(0, ()) if n == 1 else cls(0, (n,))

    @classmethod
    def trivial(cls) -> "FgAbelianGroup":
        return cls(0, ())

    def direct_sum(self, *others: "FgAbelianGroup") -> "FgAbelianGroup":
        # recombine via elementary divisors so the divisibility chain holds
        rank = self.rank + sum(g.rank for g in others)
        exps: dict[int, list[int]] = {}
        for g in (self, *others):
            for d in g.invariant_factors:
                for p, e in factorize(d).factors:
                    exps.setdefault(p, []).append(e)
        for lst in exps.values():
            lst.sort(reverse=True)
        factors = []
        for parts in itertools.zip_longest(
            *[[p**e for e in lst] for p, lst in sorted(exps.items())], fillvalue=1
        ):
            factors.append(prod(parts))
        factors.sort()
        return FgAbelianGroup(rank, tuple(factors))

    def __str__(self):
        pieces = ["Z"] * self.rank + [f"Z/{d}" for d in self.invariant_factors]
        return " x ".join(pieces) if pieces else "0"

    def as_json(self) -> dict:
        return {"rank": self.rank, "invariant_factors": list(self.invariant_factors)}


@dataclass(frozen=True)
class PresentedAbelianGroup:
    """Z^n_generators modulo the column span of the relation matrix."""

    n_generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.rows != self.n_generators:
            raise ValueError("relation matrix must have one row per generator")

    @classmethod
    def free(cls, n: int) -> "PresentedAbelianGroup":
        return cls(n, IntMatrix.zero(n, 0))

    @classmethod
    def cyclic(cls, n: int) -> "PresentedAbelianGroup":
        """One generator with relation n (n = 0 presents Z, n = 1 the trivial group)."""
        if n < 0:
            raise ValueError("nonnegative order required")
        if n == 0:
            return cls.free(1)
        return cls(1, IntMatrix.from_rows([[n]]))

    @classmethod
    def from_relation_rows(cls, n_generators: int, rows) -> "PresentedAbelianGroup":
        return cls(n_generators, IntMatrix.from_rows(rows, cols=len(rows[0]) if rows else 0))

    def normal_form(self) -> FgAbelianGroup:
        _, D, _ = smith_normal_form(self.relations)
        diag = [D.data[i][i] for i in range(min(D.rows, D.cols))]
        nonzero = [abs(d) for d in diag if d != 0]
        return FgAbelianGroup(
            self.n_generators - len(nonzero),
            tuple(sorted(d for d in nonzero if d >= 2)),
        )

    def direct_sum(self, *others: "PresentedAbelianGroup") -> "PresentedAbelianGroup":
        groups = (self, *others)
        return PresentedAbelianGroup(
            sum(g.n_generators for g in groups),
            IntMatrix.block_diagonal([g.relations for g in groups]),
        )

    def contains_in_relations(self, vec) -> bool:
        return in_column_span(self.relations, vec)


# ---------------------------------------------------------------------------
# bounded cochain complexes


@dataclass(frozen=True)
class BoundedComplex:
    """Cochain complex of presented groups in degrees lo..lo+len(terms)-1.

    differentials[i] maps terms[i] to terms[i+1] and is expressed on
    generators.  Construction checks that each differential carries source
    relations into target relations and that consecutive differentials
    compose to zero in the quotient.
    """

    lo: int
    terms: tuple[PresentedAbelianGroup, ...]
    differentials: tuple[IntMatrix, ...]

    def __post_init__(self):
        if len(self.differentials) != max(len(self.terms) - 1, 0):
            raise ValueError("need exactly one differential between consecutive terms")
        for i, d in enumerate(self.differentials):
            src, tgt = self.terms[i], self.terms[i + 1]
            if (d.rows, d.cols) != (tgt.n_generators, src.n_generators):
                raise ValueError(f"differential {i} has wrong shape")
            for rel_col in src.relations.columns():
                if not tgt.contains_in_relations(d.apply(rel_col)):
                    raise ValueError(f"differential {i} not well defined on presentations")
        for i in range(len(self.differentials) - 1):
            comp = self.differentials[i + 1] @ self.differentials[i]
            tgt = self.terms[i + 2]
            for col in comp.columns():
                if not tgt.contains_in_relations(col):
                    raise ValueError(f"d^2 != 0 between degrees {self.lo + i} and {self.lo + i + 2}")

    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def term(self, i: int) -> PresentedAbelianGroup:
        if not self.lo <= i <= self.hi:
            raise ValueError(f"degree {i} outside [{self.lo}, {self.hi}]")
        return self.terms[i - self.lo]

    def differential(self, i: int) -> IntMatrix:
        """d^i: term(i) -> term(i+1); zero map if i+1 is out of range."""
        if self.lo <= i <= self.hi - 1:
            return self.differentials[i - self.lo]
        tgt_gens = self.term(i + 1).n_generators if self.lo <= i + 1 <= self.hi else 0
        src_gens = self.term(i).n_generators if self.lo <= i <= self.hi else 0
        return IntMatrix.zero(tgt_gens, src_gens)


def cohomology(C: BoundedComplex, i: int) -> FgAbelianGroup:
    """H^i(C) = ker(d^i) / im(d^{i-1}), computed in the quotient groups."""
    src = C.term(i)
    # kernel of the induced map: x with d^i(x) in the relation span of the target
    if i < C.hi:
        d = C.differentials[i - C.lo]
        tgt_rel = C.term(i + 1).relations
        big = d.hstack(tgt_rel)
        ker = integer_kernel(big)
        gens = IntMatrix.from_rows(
            [ker.data[r] for r in range(src.n_generators)], ker.cols
        )
    else:
        gens = IntMatrix.identity(src.n_generators)
    # express image of d^{i-1} plus source relations in terms of the kernel generators
    image_cols = list(src.relations.columns())
    if i > C.lo:
        image_cols.extend(C.differentials[i - 1 - C.lo].columns())
    relation_cols = [c for c in integer_kernel(gens).columns()]
    for col in image_cols:
        relation_cols.append(solve_integer(gens, col))
    rel = IntMatrix.from_rows(
        [[c[r] for c in relation_cols] for r in range(gens.cols)], len(relation_cols)
    )
    return PresentedAbelianGroup(gens.cols, rel).normal_form()


def euler_number(C: BoundedComplex) -> Fraction:
    """Alternating product of term orders, prod_i #(term_i)^(-1)^i.

    The exponent uses the literal degree label, so a term in degree -1
    contributes its order inverted.  Every term must be finite.
    """
    result = Fraction(1)
    for i in C.degrees:
        g = C.term(i).normal_form()
        if not g.is_finite:
            raise ValueError(f"term in degree {i} is infinite")
        result *= Fraction(g.order()) if i % 2 == 0 else Fraction(1, g.order())
    return result


def euler_number_of_cohomology(C: BoundedComplex) -> Fraction:
    """Alternating product of the orders of H^i(C) over all degrees."""
    result = Fraction(1)
    for i in C.degrees:
        h = cohomology(C, i)
        if not h.is_finite:
            raise ValueError(f"H^{i} is infinite")
        result *= Fraction(h.order()) if i % 2 == 0 else Fraction(1, h.order())
    return result
