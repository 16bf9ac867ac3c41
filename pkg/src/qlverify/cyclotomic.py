"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) with
Fraction coefficients, reduced modulo the m-th cyclotomic polynomial.  The
representation is canonical, so equality is coefficientwise.  Levels are
never mixed implicitly; raise_level gives the embedding zeta_m' -> zeta_m^(m/m')
for m' | m.

Norms down to Q are computed as products of Galois conjugates, never by
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .abelian import FgAbelianGroup, IntMatrix, PresentedAbelianGroup
from .numtheory import divisors, euler_phi


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, lowest degree first)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_rem(a, mod):
    """Remainder of a modulo a monic polynomial mod."""
    a = list(a)
    deg_m = len(mod) - 1
    for i in range(len(a) - 1, deg_m - 1, -1):
        c = a[i]
        if c:
            for j in range(deg_m + 1):
                a[i - deg_m + j] -= c * mod[j]
    del a[deg_m:]
    return a


def _poly_divmod_exact(a, b):
    """Exact division of integer polynomials, a = q * b; b monic."""
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        q[i - (len(b) - 1)] = c
        if c:
            for j, y in enumerate(b):
                a[i - (len(b) - 1) + j] -= c * y
    if any(a):
        raise ArithmeticError("division not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, lowest degree first.

    Computed by dividing x^m - 1 by the product of all lower-level factors;
    monic of degree phi(m) and irreducible over Q.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if m < 1:
        raise ValueError("level must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in divisors(m):
        if d < m:
            den = _poly_mul(den, [Fraction(c) for c in cyclotomic_polynomial(d)])
    quo = _poly_divmod_exact(num, den)
    out = []
    for c in quo:
        if c.denominator != 1:
            raise ArithmeticError("cyclotomic polynomial is integral")
        out.append(int(c))
    return tuple(out)


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_m) as sum(coeffs[i] * zeta_m^i), reduced mod Phi_m."""

    level: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.level):
            raise ValueError("coefficient vector must have length phi(level)")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, m: int, coeffs) -> "CyclotomicNumber":
        """Reduce an arbitrary-length coefficient list modulo Phi_m."""
        mod = [Fraction(c) for c in cyclotomic_polynomial(m)]
        reduced = _poly_rem([Fraction(c) for c in coeffs], mod)
        phi = euler_phi(m)
        reduced += [Fraction(0)] * (phi - len(reduced))
        return cls(m, tuple(reduced[:phi]))

    @classmethod
    def rational(cls, m: int, value) -> "CyclotomicNumber":
        return cls.from_coeffs(m, [Fraction(value)])

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "CyclotomicNumber":
        return cls.from_coeffs(m, [0] * (power % m) + [1])

    # -- ring structure -----------------------------------------------------

    def _check_level(self, other: "CyclotomicNumber"):
        if self.level != other.level:
            raise ValueError(
                f"level mismatch ({self.level} vs {other.level}); use raise_level explicitly"
            )

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            self._check_level(other)
            return other
        return CyclotomicNumber.rational(self.level, other)

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicNumber(self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.level, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return CyclotomicNumber.from_coeffs(self.level, _poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero:
            raise ZeroDivisionError("cyclotomic division by zero")
        # invariant: r_k = s_k * self (mod Phi_m); Phi_m is irreducible and
        # deg(self) < deg(Phi_m), so the gcd is a nonzero constant
        r0, s0 = [Fraction(c) for c in cyclotomic_polynomial(self.level)], [Fraction(0)]
        r1, s1 = _trimmed(self.coeffs), [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_quorem(r0, r1)
            r0, r1 = r1, _trimmed(r)
            s0, s1 = s1, [a - b for a, b in _zip_pad(s0, _poly_mul(q, s1))]
        return CyclotomicNumber.from_coeffs(self.level, [c / r1[0] for c in s1])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicNumber.rational(self.level, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and views ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"not a rational number: {self}")
        return self.coeffs[0]

    @property
    def is_integral(self) -> bool:
        """True when all power-basis coefficients are integers."""
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self):
        if self.is_rational:
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if i == 0 else (f"z{self.level}" if i == 1 else f"z{self.level}^{i}")
            parts.append(f"{c}*{term}" if i else str(c))
        return " + ".join(parts)

    def as_json(self) -> dict:
        return {
            "level": self.level,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }

    # -- Galois theory -------------------------------------------------------

    def galois_conjugate(self, j: int) -> "CyclotomicNumber":
        """Image under the automorphism zeta_m -> zeta_m^j, gcd(j, m) = 1."""
        m = self.level
        if gcd(j, m) != 1:
            raise ValueError(f"{j} is not coprime to the level {m}")
        out = [Fraction(0)] * (m + 1)
        for i, c in enumerate(self.coeffs):
            out[(i * j) % m] += c
        return CyclotomicNumber.from_coeffs(m, out)

    def norm_to_Q(self) -> Fraction:
        """Product of all Galois conjugates; lands in Q.

        >>> (1 - 2 * CyclotomicNumber.zeta(3)).norm_to_Q()
        Fraction(7, 1)
        >>> (1 - 3 * CyclotomicNumber.zeta(4)).norm_to_Q()
        Fraction(10, 1)
        """
        m = self.level
        result = CyclotomicNumber.rational(m, 1)
        for j in range(1, m + 1):
            if gcd(j, m) == 1:
                result = result * self.galois_conjugate(j)
        return result.as_rational()

    def raise_level(self, m_new: int) -> "CyclotomicNumber":
        """Embed into Q(zeta_m_new) along zeta_m -> zeta_m_new^(m_new/m)."""
        if m_new % self.level != 0:
            raise ValueError(f"{self.level} does not divide {m_new}")
        step = m_new // self.level
        out = [Fraction(0)] * ((self.level - 1) * step + 1 if self.coeffs else 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return CyclotomicNumber.from_coeffs(m_new, out)


def multiplication_matrix(z: CyclotomicNumber) -> IntMatrix:
    """Matrix of multiplication by an integral z on Z[zeta_m] in the power basis."""
    if not z.is_integral:
        raise ValueError("integral element required")
    phi = euler_phi(z.level)
    cols = []
    for i in range(phi):
        col = (z * CyclotomicNumber.zeta(z.level, i)) if i else z
        cols.append([int(c) for c in col.coeffs])
    return IntMatrix.from_rows([[cols[j][i] for j in range(phi)] for i in range(phi)], phi)


def quotient_by_principal(m: int, z: CyclotomicNumber) -> FgAbelianGroup:
    """The abelian group Z[zeta_m]/(z) for integral z != 0, in invariant factors.

    Computed as the cokernel of the multiplication-by-z matrix; its order
    equals |norm_to_Q(z)|.
    """
    if z.level != m:
        raise ValueError("level mismatch")
    if z.is_zero:
        raise ZeroDivisionError("quotient by (0) is infinite")
    return PresentedAbelianGroup(euler_phi(m), multiplication_matrix(z)).normal_form()


# -- low-level polynomial division used by inverse() ------------------------


def _poly_quorem(a, b):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] / lead
        q[len(a) - 1 - db] = c
        for j in range(db + 1):
            a[len(a) - 1 - db + j] -= c * b[j]
        while a and not a[-1]:
            a.pop()
    return q, a


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def _trimmed(coeffs):
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out
