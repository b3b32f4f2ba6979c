"""Arithmetic in GF(p^k) for prime powers up to 4096.

Elements are integers 0..q-1 read as base-p coefficient vectors; extension
fields reduce modulo the monic irreducible polynomial of degree k whose
low-order coefficient vector has the least base-p integer encoding, found by
exhaustive scan and verified irreducible with a Rabin test.  Deterministic
across runs.
"""

from __future__ import annotations

MAX_FIELD_ORDER = 4096


class FieldError(ValueError):
    """Invalid field order or undefined operation (e.g. inverse of zero)."""


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise when q is not a prime power."""
    if q < 2:
        raise FieldError(f"field order must be at least 2, got {q}")
    p = None
    for d in range(2, q + 1):
        if q % d == 0:
            p = d
            break
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, k


# -- polynomial helpers over GF(p); coefficient lists, ascending degree ------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = a[-1] * inv_lead % p
        for i, c in enumerate(mod):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _poly_trim(a)
    return a


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _prime_factors(k: int) -> list[int]:
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Rabin test: x^(p^k) == x mod f and gcd(x^(p^(k/r)) - x, f) = 1 for r | k."""
    k = len(poly) - 1
    x = [0, 1]
    xq = _poly_powmod(x, p ** k, poly, p)
    diff = _poly_trim([(c1 - c2) % p for c1, c2 in zip(xq + [0] * 2, x + [0] * len(xq))])
    if diff:
        return False
    for r in _prime_factors(k):
        xe = _poly_powmod(x, p ** (k // r), poly, p)
        d = [(c1 - c2) % p for c1, c2 in zip(xe + [0] * 2, x + [0] * len(xe))]
        g = _poly_gcd(poly, _poly_trim(d), p)
        if len(g) - 1 != 0:
            return False
    return True


class FiniteField:
    """GF(q) with elements encoded as integers 0..q-1 (base-p digit vectors)."""

    def __init__(self, q: int):
        p, k = factor_prime_power(q)
        if q > MAX_FIELD_ORDER:
            raise FieldError(f"field order {q} exceeds the supported {MAX_FIELD_ORDER}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = self._find_modulus()

    def _find_modulus(self) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (0, 1)  # x itself; unused by the mod-p arithmetic
        for low in range(p ** k):
            coeffs = self._digits(low) + [1]
            if _is_irreducible(coeffs, p):
                return tuple(coeffs)
        raise FieldError(f"no irreducible polynomial found for GF({p}^{k})")  # unreachable

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, coeffs: list[int]) -> int:
        acc = 0
        for c in reversed(coeffs[: self.k] + [0] * max(0, self.k - len(coeffs))):
            acc = acc * self.p + c
        return acc

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise FieldError(f"element {a} outside 0..{self.q - 1}")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.k == 1:
            return (-a) % self.p
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.k == 1:
            return a * b % self.p
        prod = _poly_mul(self._digits(a), self._digits(b), self.p)
        return self._undigits(_poly_mod(prod, list(self.modulus), self.p))

    def power(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            return self.power(self.inverse(a), -e)
        result = 1 if self.k > 1 else 1 % self.p
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inverse(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise FieldError("zero has no multiplicative inverse")
        return self.power(a, self.q - 2)

    def is_square(self, a: int) -> bool:
        """Quadratic-residue test; in characteristic 2 every element is a square."""
        self._check(a)
        if a == 0 or self.p == 2:
            return True
        return self.power(a, (self.q - 1) // 2) == 1

    def elements(self) -> range:
        return range(self.q)
