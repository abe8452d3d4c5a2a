"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value is stored as rational coordinates with respect to the power basis
1, z, ..., z^(phi(m)-1) of Q[x]/(Phi_m(x)), which is a canonical form, so
equality testing is exact.  Mixed conductors are first pushed into their
lcm via zeta_d -> zeta_m^(m/d); that embedding is coherent, i.e. embedding
in stages agrees with embedding directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import InputError

_CYCLO_CACHE: dict[int, tuple[int, ...]] = {}


def euler_phi(m: int) -> int:
    out, n, d = 1, m, 2
    while d * d <= n:
        if n % d == 0:
            out *= d - 1
            n //= d
            while n % d == 0:
                out *= d
                n //= d
        d += 1
    if n > 1:
        out *= n - 1
    return out


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, low degree first."""
    if m in _CYCLO_CACHE:
        return _CYCLO_CACHE[m]
    # divide x^m - 1 by the product of Phi_d over proper divisors d
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            num = _int_poly_div(num, list(cyclotomic_polynomial(d)))
    result = tuple(num)
    _CYCLO_CACHE[m] = result
    return result


def _int_poly_div(num, den):
    """Exact division of integer polynomials (monic or +-1-leading divisor)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] // lead
        out[shift] = c
        if c:
            for i, di in enumerate(den):
                num[shift + i] -= c * di
    if any(num):
        raise AssertionError("non-exact cyclotomic division")
    return out


def _reduce_mod_cyclotomic(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            for i in range(deg + 1):
                coeffs[k - deg + i] -= c * phi[i]
    coeffs = coeffs[:deg]
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs)


class Cyclotomic:
    """An element of Q(zeta_m), exact and immutable."""

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor: int, coords):
        if conductor < 1:
            raise InputError("conductor must be positive")
        self.conductor = conductor
        coords = [Fraction(c) for c in coords]
        deg = euler_phi(conductor)
        if len(coords) > deg:
            coords = list(_reduce_mod_cyclotomic(coords, conductor))
        coords += [Fraction(0)] * (deg - len(coords))
        self.coords = tuple(coords)

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        return cls(1, [Fraction(value)])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "Cyclotomic":
        k %= m
        coords = [Fraction(0)] * k + [Fraction(1)]
        return cls(m, coords)

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls.rational(0)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls.rational(1)

    # -- conductor handling --------------------------------------------------

    def embed(self, m: int) -> "Cyclotomic":
        """Image in Q(zeta_m); requires conductor | m."""
        if m % self.conductor != 0:
            raise InputError(f"no embedding Q(zeta_{self.conductor}) -> Q(zeta_{m})")
        if m == self.conductor:
            return self
        step = m // self.conductor
        out = [Fraction(0)] * (len(self.coords) * step)
        for i, c in enumerate(self.coords):
            out[i * step] = c
        return Cyclotomic(m, out)

    def _pair(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            raise TypeError(f"cannot combine Cyclotomic with {other!r}")
        m = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coords])

    def __sub__(self, other):
        return self + (-self._pair(other)[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        out = [Fraction(0)] * (len(a.coords) + len(b.coords) - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    out[i + j] += x * y
        return Cyclotomic(a.conductor, _reduce_mod_cyclotomic(out, a.conductor))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coords[0])
        # extended Euclid in Q[x] against Phi_m
        m = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(m)]
        r0, r1 = phi, list(self.coords)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        # r0 is a nonzero constant gcd (Phi_m is irreducible over Q)
        const = next(c for c in r0 if c)
        inv = [c / const for c in s0]
        return Cyclotomic(m, _reduce_mod_cyclotomic(inv, m))

    def __truediv__(self, other):
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.rational(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Cyclotomic.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """The automorphism zeta -> zeta^(-1) (complex conjugation)."""
        m = self.conductor
        out = [Fraction(0)] * m
        for i, c in enumerate(self.coords):
            out[(m - i) % m] += c
        return Cyclotomic(m, _reduce_mod_cyclotomic(out, m))

    def galois_power(self, a: int) -> "Cyclotomic":
        """The map zeta -> zeta^a; requires gcd(a, conductor) = 1."""
        m = self.conductor
        if gcd(a % m, m) != 1:
            raise InputError("not a Galois automorphism")
        out = [Fraction(0)] * m
        for i, c in enumerate(self.coords):
            out[(i * a) % m] += c
        return Cyclotomic(m, _reduce_mod_cyclotomic(out, m))

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise InputError(f"{self!r} is not rational")
        return self.coords[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coords[0].denominator == 1

    def integer_value(self) -> int:
        value = self.rational_value()
        if value.denominator != 1:
            raise InputError(f"{self!r} is not an integer")
        return value.numerator

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._pair(other)
        return a.coords == b.coords

    __hash__ = None  # values at distinct conductors can be equal

    def sort_key(self, m: int):
        """Total order key among values embedded in Q(zeta_m)."""
        return self.embed(m).coords

    def __repr__(self):
        if self.is_rational():
            return str(self.coords[0])
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = f"z{self.conductor}" + (f"^{i}" if i > 1 else "")
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ")


def _frac_poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    for shift in range(len(a) - 1 - db, -1, -1):
        c = a[shift + db] / b[db]
        q[shift] = c
        if c:
            for i in range(db + 1):
                a[shift + i] -= c * b[i]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a
