"""Arithmetic in F_(p^r) for prime p: one fixed irreducible modulus per degree.

Elements are coefficient tuples of length r (lowest degree first), or
equivalently integers 0 <= n < p^r via base-p encoding.  The modulus is the
monic irreducible polynomial of degree r whose non-leading coefficient
vector has the smallest base-p encoding; the search is deterministic and
the choice is verified by the gcd criterion with x^(p^i) - x.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .numtheory import factorize, is_prime


# -- dense polynomials over F_p, lowest degree first, no trailing zeros ------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul_mod_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_rem(a, m, p):
    """a mod m over F_p; m monic."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    del a[dm:]
    return _trim(a)


def poly_gcd(a, b, p):
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _poly_mod(a, b, p):
    """a mod b over F_p for arbitrary nonzero b."""
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv) % p
        shift = len(a) - 1 - db
        for j in range(db + 1):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        _trim(a)
    return a


def poly_pow_mod(base, exponent, modulus, p):
    result = [1]
    base = poly_rem(base, modulus, p)
    while exponent:
        if exponent & 1:
            result = poly_rem(poly_mul_mod_p(result, base, p), modulus, p)
        base = poly_rem(poly_mul_mod_p(base, base, p), modulus, p)
        exponent >>= 1
    return result


def is_irreducible(m, p) -> bool:
    """Monic m of degree r >= 1 irreducible over F_p, by the standard
    x^(p^(r/l)) - x gcd criterion."""
    r = len(m) - 1
    if r < 1 or m[-1] != 1:
        raise ValueError("monic polynomial of positive degree required")
    x = poly_rem([0, 1], m, p)
    frob = poly_pow_mod([0, 1], p**r, m, p)
    if _trim([(a - b) % p for a, b in _zip0(frob, x)]) != []:
        return False
    for ell in factorize(r).primes:
        sub = poly_pow_mod([0, 1], p ** (r // ell), m, p)
        diff = _trim([(a - b) % p for a, b in _zip0(sub, x)])
        if poly_gcd(diff, m, p) != [1]:
            return False
    return True


def _zip0(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


@lru_cache(maxsize=None)
def default_modulus(p: int, r: int) -> tuple[int, ...]:
    """Monic irreducible of degree r over F_p with the smallest base-p
    encoding of its non-leading coefficients."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r == 1:
        return (0, 1)
    for code in range(p**r):
        tail = []
        n = code
        for _ in range(r):
            tail.append(n % p)
            n //= p
        candidate = tail + [1]
        if candidate[0] == 0:
            continue  # divisible by x
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True)
class FieldExt:
    """The field F_(p^r) as F_p[x] modulo a fixed irreducible modulus."""

    p: int
    r: int
    modulus: tuple[int, ...]

    @classmethod
    def create(cls, p: int, r: int) -> "FieldExt":
        if r < 1:
            raise ValueError("degree must be >= 1")
        return cls(p, r, default_modulus(p, r))

    def __post_init__(self):
        if len(self.modulus) != self.r + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree r")
        if not is_irreducible(list(self.modulus), self.p):
            raise ValueError("modulus is reducible")

    @property
    def size(self) -> int:
        return self.p**self.r

    def zero(self):
        return (0,) * self.r

    def one(self):
        return (1,) + (0,) * (self.r - 1)

    def from_int(self, c: int):
        return (c % self.p,) + (0,) * (self.r - 1)

    def encode(self, elem) -> int:
        out = 0
        for c in reversed(elem):
            out = out * self.p + c
        return out

    def decode(self, code: int):
        digits = []
        for _ in range(self.r):
            digits.append(code % self.p)
            code //= self.p
        return tuple(digits)

    def elements(self):
        for code in range(self.size):
            yield self.decode(code)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        prod = poly_mul_mod_p(list(a), list(b), self.p)
        red = poly_rem(prod, list(self.modulus), self.p)
        return tuple(red) + (0,) * (self.r - len(red))

    def pow(self, a, n: int):
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def eval_poly(self, coeffs, x):
        """Evaluate a polynomial with F_p coefficients at a field element."""
        acc = self.zero()
        for c in reversed(list(coeffs)):
            acc = self.mul(acc, x)
            acc = self.add(acc, self.from_int(c))
        return acc

    def is_zero(self, a) -> bool:
        return all(c == 0 for c in a)

    def multiplicative_generator(self):
        """Element of multiplicative order p^r - 1 with smallest encoding."""
        n = self.size - 1
        prime_divs = factorize(n).primes if n > 1 else ()
        for code in range(1, self.size):
            g = self.decode(code)
            if all(self.pow(g, n // ell) != self.one() for ell in prime_divs):
                return g
        raise AssertionError("no generator found")
