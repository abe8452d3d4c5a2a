"""Prime-power finite fields F_q with exact, hashable elements.

Elements of F_{p^n} are coordinate tuples with respect to the power basis
of a monic irreducible modulus of degree n over F_p.  The modulus is found
by a deterministic search (smallest base-p encoding first), so fields and
all derived output are reproducible without a Conway-polynomial table.
"""

from __future__ import annotations

from ..errors import InputError

_MAX_ORDER = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomial arithmetic over F_p (coefficient lists, low degree first)

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _prem(out, mod, p)


def _prem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(a, e, mod, p):
    result, base = [1], _prem(a, mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a = _prem(a, b, p)
        a, b = b, a
    return a


def _is_irreducible(f, p) -> bool:
    """Monic f over F_p: x^(p^n) == x mod f and gcd(x^(p^(n/l)) - x, f) = 1."""
    n = len(f) - 1
    if n <= 0:
        return False
    x = [0, 1]
    xq = _ppowmod(x, p ** n, f, p)
    if _ptrim([(a - b) % p for a, b in zip(xq + [0] * 2, x + [0] * len(xq))]) != []:
        return False
    for ell in _prime_factors(n):
        xd = _ppowmod(x, p ** (n // ell), f, p)
        diff = [0] * max(len(xd), 2)
        for i, c in enumerate(xd):
            diff[i] = c
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(diff, f, p)
        if len(g) > 1:
            return False
    return True


def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree n over F_p, ordered by the
    base-p value of the low coefficient vector."""
    for k in range(p ** n):
        coeffs, kk = [], k
        for _ in range(n):
            coeffs.append(kk % p)
            kk //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FFElement:
    """An element of a FiniteField, immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FiniteField", coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def __add__(self, other):
        other = self.field.coerce(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self.field.coerce(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self.field.coerce(other)
        F = self.field
        if F.n == 1:
            return FFElement(F, ((self.coeffs[0] * other.coeffs[0]) % F.p,))
        prod = _pmulmod(list(self.coeffs), list(other.coeffs), list(F.modulus), F.p)
        return F._from_list(prod)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __truediv__(self, other):
        return self * self.field.coerce(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in finite field")
        # a^(q-2) = a^(-1); fields here are small enough for this to be fine
        return self ** (self.field.q - 2)

    def frobenius(self) -> "FFElement":
        return self ** self.field.p

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        order = self.field.q - 1
        for ell in _prime_factors(order):
            while order % ell == 0 and (self ** (order // ell)) == self.field.one():
                order //= ell
        return order

    def __eq__(self, other):
        if not isinstance(other, FFElement):
            try:
                other = self.field.coerce(other)
            except (TypeError, InputError):
                return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        if self.field.n == 1:
            return f"{self.coeffs[0]}"
        return f"FF({self.field.q}){list(self.coeffs)}"


class FiniteField:
    """The finite field with q = p^n elements.

    Two instances with the same (p, n, modulus) behave identically but
    their elements do not mix; use a single instance per computation.
    """

    def __init__(self, p: int, n: int = 1, modulus: tuple[int, ...] | None = None):
        if not _is_prime(p):
            raise InputError(f"characteristic {p} is not prime")
        if n < 1:
            raise InputError("extension degree must be >= 1")
        if p ** n > _MAX_ORDER:
            raise InputError(f"field order {p ** n} exceeds the supported bound {_MAX_ORDER}")
        self.p = p
        self.n = n
        self.q = p ** n
        if modulus is None:
            modulus = (0, 1) if n == 1 else default_modulus(p, n)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise InputError("modulus must be monic of degree n")
        if n > 1 and not _is_irreducible(list(modulus), p):
            raise InputError("modulus is reducible")
        self.modulus = modulus

    def _from_list(self, coeffs) -> FFElement:
        c = list(coeffs)[: self.n]
        c += [0] * (self.n - len(c))
        return FFElement(self, tuple(x % self.p for x in c))

    def coerce(self, value) -> FFElement:
        if isinstance(value, FFElement):
            if value.field is not self:
                raise InputError("element belongs to a different field instance")
            return value
        if isinstance(value, int):
            return self._from_list([value])
        raise TypeError(f"cannot coerce {value!r} into F_{self.q}")

    def zero(self) -> FFElement:
        return FFElement(self, (0,) * self.n)

    def one(self) -> FFElement:
        return self._from_list([1])

    def generator(self) -> FFElement:
        """Image of x in F_p[x]/(modulus); a generator of the field over F_p."""
        return self._from_list([0, 1])

    def element(self, coeffs) -> FFElement:
        if isinstance(coeffs, int):
            return self.from_integer(coeffs)
        return self._from_list(list(coeffs))

    def from_integer(self, k: int) -> FFElement:
        """Element with base-p digit vector of k; enumerates the field for 0 <= k < q."""
        digits = []
        k %= self.q
        for _ in range(self.n):
            digits.append(k % self.p)
            k //= self.p
        return FFElement(self, tuple(digits))

    def to_integer(self, a: FFElement) -> int:
        k = 0
        for c in reversed(a.coeffs):
            k = k * self.p + c
        return k

    def __iter__(self):
        return (self.from_integer(k) for k in range(self.q))

    def __len__(self):
        return self.q

    def root_of_unity(self, e: int) -> FFElement:
        """Deterministic primitive e-th root of unity; requires e | q - 1."""
        if e <= 0 or (self.q - 1) % e != 0:
            raise InputError(f"F_{self.q} has no primitive {e}-th root of unity")
        if e == 1:
            return self.one()
        for k in range(1, self.q):
            a = self.from_integer(k) ** ((self.q - 1) // e)
            if a.multiplicative_order() == e:
                return a
        raise AssertionError("unreachable: the unit group is cyclic")

    def subfield_elements(self, r: int) -> list[FFElement]:
        """All elements of the subfield F_{p^r}; requires r | n."""
        if self.n % r != 0:
            raise InputError(f"F_{self.p ** r} is not a subfield of F_{self.q}")
        pr = self.p ** r
        return [a for k in range(self.q) if (a := self.from_integer(k)) ** pr == a]

    def random_element(self, rng) -> FFElement:
        return self.from_integer(rng.randrange(self.q))

    def __repr__(self):
        return f"FiniteField({self.p}^{self.n})" if self.n > 1 else f"FiniteField({self.p})"
