"""Kummer covers of punctured affine lines and their L-series.

The base is X = A^1 minus the zero locus of a polynomial f over F_p; the
total space of the cover with exponent d | p - 1 is

    Y = {(x, y) : y^d = f(x), f(x) != 0},

an honest C_d-Galois cover of X (etale because f never vanishes on X).
Quotients by subgroups are again Kummer covers z^(d/s) = f(x).

Zeta functions are exponentials of point-count sums, and the L-series of
the character with exponent a is the exponential character sum

    exp( sum_r t^r / r * sum_{x in X(F_(p^r))} zeta_d^(a * class(x)) ),

where class(x) is the d-th power residue class of f(x), i.e. the discrete
logarithm of f(x)^((p^r - 1)/d) in mu_d with respect to the fixed
generator of F_p^x.  All series coefficients are exact cyclotomic numbers.

Point enumeration is exhaustive but table-driven: for each degree r a
discrete-logarithm table of F_(p^r) is built once (a power walk of a
multiplicative generator, vectorized with numpy in the coefficient
domain), after which evaluating f on every element costs a few index
operations per element, exactly.  Numpy only ever holds integer counts
and indices below 2^63, so exactness is preserved throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

import numpy as np

from .cyclotomic import CyclotomicNumber
from .gf import FieldExt
from .numtheory import factorize, is_prime, smallest_primitive_root, squarefree_subsets
from .report import SKIP, VerificationReport, fmt_rational

# Largest field size enumerated exhaustively; beyond this the required
# per-element work (p^B elements for series order B) cannot fit any sane
# time or memory budget, so callers receive a budget error or SKIP records.
DEFAULT_MAX_FIELD_SIZE = 30_000_000

_WALK_CHUNK = 4096


class EnumerationBudgetExceeded(Exception):
    """Raised when a point count would require enumerating a field larger
    than the configured budget."""


class InsufficientOrder(Exception):
    """Raised when no rational function within the degree bound reproduces
    a truncated series."""


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its
    denominator."""


# ---------------------------------------------------------------------------
# scheme specs


@dataclass(frozen=True)
class SpecBase:
    """Spec F_q: one point over every extension."""

    q: int


@dataclass(frozen=True)
class AffineBase:
    """X = A^1 over F_p minus the zero locus of f (f = 1 gives all of A^1)."""

    p: int
    f: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if all(c % self.p == 0 for c in self.f):
            raise ValueError("f must be nonzero")


@dataclass(frozen=True)
class KummerCover:
    """Total space y^d = f(x) over the punctured affine line, d | p - 1.

    The group mu_d is identified with Z/d through g^((p-1)/d), where g is
    the smallest primitive root mod p.
    """

    p: int
    d: int
    f: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.d < 1 or (self.p - 1) % self.d != 0:
            raise ValueError(f"d = {self.d} must divide p - 1 = {self.p - 1}")
        if all(c % self.p == 0 for c in self.f):
            raise ValueError("f must be nonzero")

    @property
    def generator(self) -> int:
        return smallest_primitive_root(self.p)

    @property
    def base(self) -> AffineBase:
        return AffineBase(self.p, self.f)

    def quotient(self, subgroup_order: int) -> "KummerCover":
        """Quotient by the subgroup of order s: the cover z^(d/s) = f(x)."""
        if self.d % subgroup_order != 0:
            raise ValueError(f"{subgroup_order} does not divide {self.d}")
        return KummerCover(self.p, self.d // subgroup_order, self.f)

    def f_degree(self) -> int:
        return max(i for i, c in enumerate(self.f) if c % self.p != 0)

    def default_order(self) -> int:
        return 2 * (self.f_degree() + 3)


# ---------------------------------------------------------------------------
# discrete-log tables per (p, r)


class _FieldTables:
    """enc_pow[i] = encoding of g^i; dlog[enc] = i (dlog of 0 is -1)."""

    def __init__(self, p: int, r: int):
        field = FieldExt.create(p, r)
        self.p, self.r, self.field = p, r, field
        self.n = field.size - 1
        g = field.multiplicative_generator()
        self.g = g
        enc_pow = np.empty(self.n, dtype=np.int64)
        chunk = min(_WALK_CHUNK, self.n)
        # baby steps g^0..g^(chunk-1), then whole-chunk jumps by the linear
        # map "multiply by g^chunk" acting on coefficient columns
        digits = np.zeros((r, chunk), dtype=np.int64)
        cur = field.one()
        for i in range(chunk):
            digits[:, i] = cur
            cur = field.mul(cur, g)
        g_chunk = field.pow(g, chunk)
        jump = np.zeros((r, r), dtype=np.int64)
        for j in range(r):
            basis = tuple(1 if t == j else 0 for t in range(r))
            jump[:, j] = field.mul(basis, g_chunk)
        p_pows = np.array([p**i for i in range(r)], dtype=np.int64)
        pos = 0
        while pos < self.n:
            take = min(chunk, self.n - pos)
            enc_pow[pos : pos + take] = p_pows @ digits[:, :take]
            pos += take
            if pos < self.n:
                digits = (jump @ digits) % p
        self.enc_pow = enc_pow
        dlog = np.full(field.size, -1, dtype=np.int64)
        dlog[enc_pow] = np.arange(self.n, dtype=np.int64)
        self.dlog = dlog
        if dlog[field.encode(field.one())] != 0:
            raise AssertionError("power walk is inconsistent")

    def constant_root_of_unity(self, e: int) -> int:
        """g_field^(n/e) as an integer in F_p (it lies in mu_e <= F_p^x)."""
        enc = int(self.enc_pow[self.n // e]) if e > 1 else 1
        if enc >= self.p:
            raise AssertionError("root of unity is not a constant")
        return enc


@lru_cache(maxsize=64)
def _tables(p: int, r: int, max_field_size: int) -> _FieldTables:
    if p**r > max_field_size:
        raise EnumerationBudgetExceeded(
            f"F_({p}^{r}) has {p**r} elements, budget is {max_field_size}"
        )
    return _FieldTables(p, r)


@lru_cache(maxsize=256)
def _value_log_histogram(
    p: int, r: int, f: tuple[int, ...], max_field_size: int
) -> tuple[tuple[int, ...], int]:
    """Histogram over c in Z/(p-1) of #{x in F_(p^r) : dlog(f(x)) = c mod p-1},
    plus the number of zeros of f.  Exhaustive over all p^r elements."""
    t = _tables(p, r, max_field_size)
    coeffs = [c % p for c in f]
    n = t.n
    hist = np.zeros(p - 1 if p > 2 else 1, dtype=np.int64)
    zeros = 0
    chunk = 1 << 20
    for start in range(0, n, chunk):
        idx = np.arange(start, min(start + chunk, n), dtype=np.int64)
        total_digits = np.zeros((t.r, idx.size), dtype=np.int64)
        if coeffs and coeffs[0]:
            total_digits[0] += coeffs[0]
        for k in range(1, len(coeffs)):
            if coeffs[k]:
                # x^k for x = g^i is just g^(k i): a table lookup
                enc_k = t.enc_pow[(k * idx) % n]
                for row in range(t.r):
                    total_digits[row] += coeffs[k] * (enc_k % p)
                    enc_k = enc_k // p
        total_digits %= p
        p_pows = np.array([p**i for i in range(t.r)], dtype=np.int64)
        enc_f = p_pows @ total_digits
        logs = t.dlog[enc_f]
        valid = logs >= 0
        zeros += int(idx.size - valid.sum())
        hist += np.bincount(logs[valid] % (p - 1), minlength=p - 1)
    # the element x = 0 contributes f(0) = constant term
    c0 = coeffs[0] if coeffs else 0
    if c0:
        hist[int(t.dlog[c0]) % (p - 1)] += 1
    else:
        zeros += 1
    return tuple(int(x) for x in hist), zeros


def _residue_histogram_mod(p, r, f, d, max_field_size) -> list[int]:
    """Fold the mod-(p-1) histogram down to Z/d (d divides p-1, or d = 1)."""
    hist, _ = _value_log_histogram(p, r, tuple(c % p for c in f), max_field_size)
    if d == 1:
        return [sum(hist)]
    out = [0] * d
    for c, count in enumerate(hist):
        out[c % d] += count
    return out


def _power_residue_unit(t: _FieldTables, g_p: int, e: int) -> int:
    """u0 with g_field^(n/e) = (g_p^((p-1)/e))^u0 in F_p; gcd(u0, e) = 1."""
    if e == 1:
        return 0
    w = t.constant_root_of_unity(e)
    v = pow(g_p, (t.p - 1) // e, t.p)
    acc = 1
    for u0 in range(e):
        if acc == w:
            return u0
        acc = (acc * v) % t.p
    raise AssertionError("not a power of the reference root of unity")


# ---------------------------------------------------------------------------
# point counting


def count_points(spec, r: int, max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> int:
    """#spec(F_(p^r)) by exhaustive enumeration (table-driven)."""
    if r < 1:
        raise ValueError("degree must be >= 1")
    if isinstance(spec, SpecBase):
        return 1
    if isinstance(spec, AffineBase):
        _, zeros = _value_log_histogram(spec.p, r, tuple(c % spec.p for c in spec.f), max_field_size)
        return spec.p**r - zeros
    if isinstance(spec, KummerCover):
        # y^d = u has d solutions when dlog(u) = 0 mod d, else none
        res = _residue_histogram_mod(spec.p, r, spec.f, spec.d, max_field_size)
        return spec.d * res[0]
    raise TypeError(f"unsupported spec {spec!r}")


# ---------------------------------------------------------------------------
# truncated series with cyclotomic coefficients


@dataclass(frozen=True)
class TruncatedLSeries:
    """sum c_k t^k up to order B, coefficients in Q(zeta_level)."""

    level: int
    order: int
    coeffs: tuple[CyclotomicNumber, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need order + 1 coefficients")
        if any(c.level != self.level for c in self.coeffs):
            raise ValueError("coefficient level mismatch")

    @classmethod
    def one(cls, level: int, order: int) -> "TruncatedLSeries":
        coeffs = [CyclotomicNumber.rational(level, 1)] + [
            CyclotomicNumber.rational(level, 0) for _ in range(order)
        ]
        return cls(level, order, tuple(coeffs))

    @classmethod
    def from_log_sums(cls, level: int, sums) -> "TruncatedLSeries":
        """exp(sum_r sums[r-1] t^r / r): the exponential of a point-count or
        character-sum series.  Coefficients satisfy n c_n = sum S_r c_(n-r)."""
        sums = [s if isinstance(s, CyclotomicNumber) else CyclotomicNumber.rational(level, s) for s in sums]
        order = len(sums)
        coeffs = [CyclotomicNumber.rational(level, 1)]
        for n in range(1, order + 1):
            acc = CyclotomicNumber.rational(level, 0)
            for r in range(1, n + 1):
                acc = acc + sums[r - 1] * coeffs[n - r]
            coeffs.append(acc * Fraction(1, n))
        return cls(level, order, tuple(coeffs))

    def log_sums(self) -> list[CyclotomicNumber]:
        """Inverse of from_log_sums: recover S_1..S_B."""
        sums: list[CyclotomicNumber] = []
        for n in range(1, self.order + 1):
            acc = self.coeffs[n] * n
            for r in range(1, n):
                acc = acc - sums[r - 1] * self.coeffs[n - r]
            sums.append(acc)
        return sums

    def _check(self, other):
        if self.level != other.level or self.order != other.order:
            raise ValueError("series level/order mismatch")

    def __mul__(self, other: "TruncatedLSeries") -> "TruncatedLSeries":
        self._check(other)
        zero = CyclotomicNumber.rational(self.level, 0)
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedLSeries(self.level, self.order, tuple(out))

    def inverse(self) -> "TruncatedLSeries":
        c0 = self.coeffs[0]
        if c0.is_zero:
            raise ZeroDivisionError("series with zero constant term")
        inv0 = c0.inverse()
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = CyclotomicNumber.rational(self.level, 0)
            for r in range(1, n + 1):
                acc = acc + self.coeffs[r] * out[n - r]
            out.append(-(inv0 * acc))
        return TruncatedLSeries(self.level, self.order, tuple(out))

    def __pow__(self, n: int) -> "TruncatedLSeries":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = TruncatedLSeries.one(self.level, self.order)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois_conjugate(self, j: int) -> "TruncatedLSeries":
        return TruncatedLSeries(
            self.level, self.order, tuple(c.galois_conjugate(j) for c in self.coeffs)
        )

    def raise_level(self, level: int) -> "TruncatedLSeries":
        return TruncatedLSeries(
            level, self.order, tuple(c.raise_level(level) for c in self.coeffs)
        )

    @property
    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    @property
    def is_integral(self) -> bool:
        return all(c.is_integral for c in self.coeffs)


# ---------------------------------------------------------------------------
# series builders


def zeta_series(spec, order: int, level: int = 1,
                max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> TruncatedLSeries:
    """exp(sum_r #spec(F_(q^r)) t^r / r) to the given order, exact."""
    if order < 1:
        raise ValueError("order must be >= 1")
    counts = [count_points(spec, r, max_field_size) for r in range(1, order + 1)]
    return TruncatedLSeries.from_log_sums(level, counts)


def l_series_kummer(cover: KummerCover, a: int, order: int,
                    max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> TruncatedLSeries:
    """Exponential character sum series for the character with exponent a,
    at level d."""
    if order < 1:
        raise ValueError("order must be >= 1")
    p, d = cover.p, cover.d
    g_p = cover.generator
    sums = []
    for r in range(1, order + 1):
        t = _tables(p, r, max_field_size)
        res = _residue_histogram_mod(p, r, cover.f, d, max_field_size)
        u0 = _power_residue_unit(t, g_p, d)
        s_r = CyclotomicNumber.rational(d, 0)
        for c, count in enumerate(res):
            if count:
                cls = (u0 * c) % d if d > 1 else 0
                s_r = s_r + count * CyclotomicNumber.zeta(d, (a * cls) % d)
        sums.append(s_r)
    return TruncatedLSeries.from_log_sums(d, sums)


def frobenius_class(cover: KummerCover, field: FieldExt, x) -> int:
    """d-th power residue class of f(x): the dlog, base g^((p-1)/d), of
    f(x)^((p^r - 1)/d) in mu_d inside F_p^x.  Single-point, table-free."""
    if field.p != cover.p:
        raise ValueError("field characteristic mismatch")
    u = field.eval_poly(cover.f, x)
    if field.is_zero(u):
        raise ValueError("point lies on the removed locus f = 0")
    if cover.d == 1:
        return 0
    w = field.pow(u, (field.size - 1) // cover.d)
    if any(c != 0 for c in w[1:]):
        raise AssertionError("power residue did not land in the prime field")
    target = w[0]
    v = pow(cover.generator, (cover.p - 1) // cover.d, cover.p)
    acc = 1
    for cls in range(cover.d):
        if acc == target:
            return cls
        acc = (acc * v) % cover.p
    raise AssertionError("power residue is not in mu_d")


def _intermediate_class_buckets(cover: KummerCover, subgroup_order: int, r: int,
                                max_field_size: int) -> list[int]:
    """For W = Y/(subgroup of order s), bucket the points (x, z) of W over
    F_(p^r) by the s-th power residue class of the coordinate z.

    z ranges over the roots of z^(d/s) = f(x), whose dlogs are
    iota(f(x))/(d/s) + j*(n/(d/s)) for j = 0..d/s-1; everything needed mod s
    is already determined by iota(f(x)) mod d, so the folded histogram
    suffices.
    """
    p, d = cover.p, cover.d
    s = subgroup_order
    e_top = d // s  # exponent of the equation z^(e_top) = f(x)
    t = _tables(p, r, max_field_size)
    res = _residue_histogram_mod(p, r, cover.f, d, max_field_size)
    u0_s = _power_residue_unit(t, cover.generator, s)
    n = t.n
    buckets = [0] * max(s, 1)
    for c, count in enumerate(res):
        if count == 0 or c % e_top != 0:
            continue
        for j in range(e_top):
            log_z = c // e_top + j * (n // e_top)
            cls = (u0_s * (log_z % s)) % s if s > 1 else 0
            buckets[cls] += count
    return buckets


def l_series_intermediate(cover: KummerCover, subgroup_order: int, b: int, order: int,
                          level: int | None = None,
                          max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> TruncatedLSeries:
    """L-series of the top cover restricted to the subgroup of order s,
    computed over the intermediate quotient W = Y/C_s as base: the sum over
    points (x, z) of W of zeta_s^(b * class_s(z)).  Returned at the given
    level (default d) for direct comparison with products of level-d series."""
    s = subgroup_order
    if cover.d % s != 0:
        raise ValueError(f"{s} does not divide {cover.d}")
    level = cover.d if level is None else level
    if level % s != 0:
        raise ValueError("level must be a multiple of the subgroup order")
    sums = []
    for r in range(1, order + 1):
        buckets = _intermediate_class_buckets(cover, s, r, max_field_size)
        s_r = CyclotomicNumber.rational(level, 0)
        for cls, count in enumerate(buckets):
            if count:
                s_r = s_r + count * CyclotomicNumber.zeta(level, (level // s) * ((b * cls) % s))
        sums.append(s_r)
    return TruncatedLSeries.from_log_sums(level, sums)


# ---------------------------------------------------------------------------
# rational reconstruction and special values


def rational_reconstruction(series: TruncatedLSeries, max_deg: int):
    """Minimal-order linear recurrence fit over Q(zeta_level), by exact
    Gaussian elimination.  Returns (num, den) coefficient tuples with
    den(0) = 1 reproducing every coefficient, or raises InsufficientOrder."""
    B = series.order
    if B < 2 * max_deg + 2:
        raise ValueError(f"order {B} too small for degree bound {max_deg}")
    level = series.level
    c = series.coeffs
    zero = CyclotomicNumber.rational(level, 0)
    for k in range(max_deg + 1):
        # unknowns d_1..d_k; equations sum_j d_j c_(n-j) = -c_n, max_deg < n <= B
        rows = []
        rhs = []
        for n in range(max_deg + 1, B + 1):
            rows.append([c[n - j] if n - j >= 0 else zero for j in range(1, k + 1)])
            rhs.append(-c[n])
        sol = _solve_field(rows, rhs, level)
        if sol is None:
            continue
        den = [CyclotomicNumber.rational(level, 1)] + sol
        num = []
        for n in range(max_deg + 1):
            acc = zero
            for j, dj in enumerate(den):
                if n - j >= 0:
                    acc = acc + dj * c[n - j]
            num.append(acc)
        while len(num) > 1 and num[-1].is_zero:
            num.pop()
        while len(den) > 1 and den[-1].is_zero:
            den.pop()
        return tuple(num), tuple(den)
    raise InsufficientOrder(f"no recurrence of order <= {max_deg} fits")


def _solve_field(rows, rhs, level):
    """Solve a linear system over Q(zeta_level); None if inconsistent.
    Deterministic Gaussian elimination; free variables are set to zero."""
    m = len(rows)
    k = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivot_row_of: dict[int, int] = {}
    rank = 0
    for col in range(k):
        piv = next((i for i in range(rank, m) if not aug[i][col].is_zero), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = aug[rank][col].inverse()
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(m):
            if i != rank and not aug[i][col].is_zero:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[rank])]
        pivot_row_of[col] = rank
        rank += 1
    for i in range(rank, m):
        if not aug[i][k].is_zero:
            return None
    zero = CyclotomicNumber.rational(level, 0)
    return [aug[pivot_row_of[c]][k] if c in pivot_row_of else zero for c in range(k)]


def evaluate_rational(num, den, point) -> CyclotomicNumber:
    """num(point)/den(point) for coefficient tuples of CyclotomicNumbers."""
    level = num[0].level

    def horner(coeffs):
        acc = CyclotomicNumber.rational(level, 0)
        for c in reversed(coeffs):
            acc = acc * point + c
        return acc

    d = horner(den)
    if d.is_zero:
        raise PoleError("denominator vanishes at the evaluation point")
    return horner(num) * d.inverse()


def l_special_value_curve(num, den, p: int, n: int, at: str = "-n") -> CyclotomicNumber:
    """Value of the reconstructed function at s = -n (t = p^n) or s = 1-n
    (t = p^(n-1))."""
    if n < 1:
        raise ValueError("positive n required")
    if at == "-n":
        t_val = Fraction(p) ** n
    elif at == "1-n":
        t_val = Fraction(p) ** (n - 1)
    else:
        raise ValueError("at must be '-n' or '1-n'")
    return evaluate_rational(num, den, t_val)


# ---------------------------------------------------------------------------
# identity verification


def verify_l_identities(cover: KummerCover, order: int | None = None,
                        max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> VerificationReport:
    """Series-level checks, to the given order, of the factorization of
    zeta(Y) into character L-series, the descent and induction identities
    through every intermediate subgroup, the inclusion-exclusion identity
    for the primitive-character product, and (where the series determine a
    rational function within the degree bound) the special-value norm
    comparison at s = -1 and s = -2."""
    p, d = cover.p, cover.d
    B = cover.default_order() if order is None else order
    fstr = ",".join(str(c) for c in cover.f)
    case = f"curve p={p} d={d} f=[{fstr}]"
    rep = VerificationReport()
    if p**B > max_field_size:
        rep.add(case, "all", "enumeration", f"p^B = {p**B} exceeds budget {max_field_size}", SKIP)
        return rep

    L = {a: l_series_kummer(cover, a, B, max_field_size) for a in range(d)}
    zeta_of = {
        s: zeta_series(cover.quotient(s), B, level=d, max_field_size=max_field_size)
        for s in _divisors(d)
    }

    # (i) zeta(Y) = prod_a L(X, chi^a)
    product_all = TruncatedLSeries.one(d, B)
    for a in range(d):
        product_all = product_all * L[a]
    rep.check(case, "zeta_factorization", "pair_counts|char_sum_product",
              zeta_of[1].coeffs, product_all.coeffs, render=_series_str)

    # (ii) descent: zeta(Y/C_s) = prod over characters trivial on C_s
    for s in _divisors(d):
        part = TruncatedLSeries.one(d, B)
        for a in range(0, d, s):
            part = part * L[a]
        rep.check(case, f"descent s={s}", "quotient_counts|trivial_char_product",
                  zeta_of[s].coeffs, part.coeffs, render=_series_str)

    # (iii) induction: prod of characters of C_d restricting to chi_(s,b)
    #       equals the L-series computed over the intermediate quotient
    for s in _divisors(d):
        for b in range(s):
            lhs = TruncatedLSeries.one(d, B)
            for a in range(b % s, d, s):
                lhs = lhs * L[a]
            rhs = l_series_intermediate(cover, s, b, B, level=d, max_field_size=max_field_size)
            rep.check(case, f"induction s={s} b={b}",
                      "restricting_char_product|intermediate_base_sum",
                      lhs.coeffs, rhs.coeffs, render=_series_str)

    # (iv) inclusion-exclusion: primitive-character product from quotient zetas
    primitive_product = TruncatedLSeries.one(d, B)
    for a in range(d):
        if gcd(a, d) == 1 or d == 1:
            primitive_product = primitive_product * L[a]
    moebius = TruncatedLSeries.one(d, B)
    for subset, sign in squarefree_subsets(factorize(d).primes):
        moebius = moebius * (zeta_of[prod(subset)] ** sign)
    rep.check(case, "moebius_inversion", "primitive_product|quotient_zeta_alternating",
              primitive_product.coeffs, moebius.coeffs, render=_series_str)

    # special values: norm of the primitive L-value against the alternating
    # product of quotient zeta values, via rational reconstruction
    max_deg = cover.f_degree() + 2
    for n_val in (1, 2):
        quantity = f"special_value_norm n={n_val}"
        try:
            if d == 1:
                num, den = rational_reconstruction(L[0], max_deg)
                lhs_value = l_special_value_curve(num, den, p, n_val).as_rational()
            else:
                num, den = rational_reconstruction(L[1], max_deg)
                lhs_value = l_special_value_curve(num, den, p, n_val).norm_to_Q()
            rhs_value = Fraction(1)
            for subset, sign in squarefree_subsets(factorize(d).primes):
                zn, zd = rational_reconstruction(zeta_of[prod(subset)], max_deg)
                v = l_special_value_curve(zn, zd, p, n_val).as_rational()
                rhs_value *= v if sign == 1 else 1 / v
            rep.check(case, quantity, "norm_of_L_value|zeta_value_alternating",
                      lhs_value, rhs_value, render=fmt_rational)
        except InsufficientOrder:
            rep.add(case, quantity, "rational_reconstruction",
                    f"no recurrence of order <= {max_deg} at B={B}", SKIP)
        except PoleError:
            rep.add(case, quantity, "rational_reconstruction", "pole at evaluation point", SKIP)
    return rep


def _series_str(coeffs) -> str:
    return "[" + ", ".join(str(c) for c in coeffs) + "]"


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]
