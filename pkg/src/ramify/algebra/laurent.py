"""Truncated formal Laurent series over a finite field.

A series is sum(coeffs[i] * t^(valuation+i)) known modulo t^precision;
``precision=None`` marks an exact Laurent polynomial.  The leading
coefficient of a nonzero series is nonzero, so valuations are exact.
Operations never extend precision silently: a computation that cannot
deliver a single provable term raises InsufficientPrecision, and the
caller reruns the pipeline at doubled precision.
"""

from __future__ import annotations

from ..errors import DivisionByZeroToPrecision, InputError, InsufficientPrecision
from .finitefield import FFElement, FiniteField

DEFAULT_RELATIVE_PRECISION = 64


def _pmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentSeries:
    __slots__ = ("field", "valuation", "coeffs", "precision")

    def __init__(self, field: FiniteField, valuation: int, coeffs, precision=None):
        self.field = field
        coeffs = [field.coerce(c) for c in coeffs]
        if precision is not None:
            keep = precision - valuation
            if keep < 0:
                keep = 0
            coeffs = coeffs[:keep]
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            valuation += 1
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            self.valuation = None
            self.coeffs = ()
        else:
            self.valuation = valuation
            self.coeffs = tuple(coeffs)
        self.precision = precision

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field, precision=None):
        return cls(field, 0, (), precision)

    @classmethod
    def one(cls, field):
        return cls(field, 0, (field.one(),))

    @classmethod
    def t_power(cls, field, k: int, coeff=1):
        return cls(field, k, (field.coerce(coeff),))

    @classmethod
    def constant(cls, field, c):
        return cls(field, 0, (field.coerce(c),))

    # -- structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when no coefficient is known to be nonzero."""
        return self.valuation is None

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    def order(self) -> int:
        """The exact valuation; raises when the series is zero to finite precision."""
        if self.valuation is not None:
            return self.valuation
        if self.precision is None:
            raise InputError("the zero series has no valuation")
        raise InsufficientPrecision(
            f"series is zero modulo t^{self.precision}; valuation undetermined")

    def order_lower_bound(self) -> int | None:
        """A bound v with series = O(t^v); None means the series is exactly 0."""
        if self.valuation is not None:
            return self.valuation
        return self.precision

    def coefficient(self, k: int) -> FFElement:
        if self.precision is not None and k >= self.precision:
            raise InsufficientPrecision(f"coefficient of t^{k} beyond precision")
        if self.valuation is None or k < self.valuation or k >= self.valuation + len(self.coeffs):
            return self.field.zero()
        return self.coeffs[k - self.valuation]

    def truncate(self, precision: int) -> "LaurentSeries":
        v = 0 if self.valuation is None else self.valuation
        return LaurentSeries(self.field, v, self.coeffs, _pmin(self.precision, precision))

    # -- ring operations --------------------------------------------------

    def _common(self, other):
        if isinstance(other, (int, FFElement)):
            other = LaurentSeries.constant(self.field, other)
        if other.field is not self.field:
            raise InputError("series over different fields")
        return other

    def __add__(self, other):
        other = self._common(other)
        prec = _pmin(self.precision, other.precision)
        if self.is_zero and other.is_zero:
            return LaurentSeries.zero(self.field, prec)
        if self.is_zero:
            return LaurentSeries(self.field, other.valuation, other.coeffs, prec)
        if other.is_zero:
            return LaurentSeries(self.field, self.valuation, self.coeffs, prec)
        lo = min(self.valuation, other.valuation)
        hi = max(self.valuation + len(self.coeffs), other.valuation + len(other.coeffs))
        out = [self.coefficient(k) + other.coefficient(k) for k in range(lo, hi)]
        return LaurentSeries(self.field, lo, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.field, self.valuation or 0,
                             tuple(-c for c in self.coeffs), self.precision)

    def __sub__(self, other):
        return self + (-self._common(other))

    def __rsub__(self, other):
        return self._common(other) - self

    def __mul__(self, other):
        other = self._common(other)
        if self.is_zero or other.is_zero:
            prec = None
            for a, b in ((self, other), (other, self)):
                if a.is_zero and a.precision is not None:
                    vb = b.order_lower_bound()
                    prec = _pmin(prec, None if vb is None else a.precision + vb)
            return LaurentSeries.zero(self.field, prec)
        prec = _pmin(
            None if other.precision is None else self.valuation + other.precision,
            None if self.precision is None else other.valuation + self.precision)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return LaurentSeries(self.field, self.valuation + other.valuation, out, prec)

    __rmul__ = __mul__

    def inverse(self, precision: int | None = None) -> "LaurentSeries":
        """Multiplicative inverse, correct to the provable relative precision.

        For an exact series the relative precision defaults to
        DEFAULT_RELATIVE_PRECISION terms (override via ``precision``,
        the number of known terms past the valuation of the result).
        """
        if self.is_zero:
            raise DivisionByZeroToPrecision(
                "inverting a series that vanishes to its known precision")
        v = self.valuation
        if self.precision is not None:
            rel = self.precision - v
            if precision is not None:
                rel = min(rel, precision)
        else:
            rel = precision if precision is not None else DEFAULT_RELATIVE_PRECISION
        if rel <= 0:
            raise InsufficientPrecision("no provable terms in inverse")
        c0 = self.coeffs[0]
        c0inv = c0.inverse()
        if self.precision is None and len(self.coeffs) == 1:
            # inverse of an exact monomial is exact
            return LaurentSeries(self.field, -v, (c0inv,))
        unit = [self.coefficient(v + k) for k in range(rel)]
        inv = [c0inv]
        for k in range(1, rel):
            acc = self.field.zero()
            for j in range(1, min(k, len(unit) - 1) + 1):
                acc = acc + unit[j] * inv[k - j]
            inv.append(-c0inv * acc)
        return LaurentSeries(self.field, -v, inv, -v + rel)

    def __truediv__(self, other):
        other = self._common(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentSeries.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute(self, g: "LaurentSeries") -> "LaurentSeries":
        """Composition self(g); requires g to have positive valuation."""
        g = self._common(g)
        if g.is_zero:
            raise InputError("cannot substitute a series indistinguishable from zero")
        w = g.order()
        if w <= 0:
            raise InputError("substitution requires a series of positive valuation")
        if self.is_zero:
            prec = None if self.precision is None else self.precision * w
            return LaurentSeries.zero(self.field, prec)
        acc = LaurentSeries.zero(self.field)
        if self.valuation < 0:
            ginv = g.inverse()
            power = LaurentSeries.one(self.field)
            for exp in range(-1, self.valuation - 1, -1):
                power = power * ginv
                k = exp - self.valuation
                if 0 <= k < len(self.coeffs) and not self.coeffs[k].is_zero():
                    acc = acc + power * self.coeffs[k]
        power = LaurentSeries.one(self.field)
        for exp in range(0, self.valuation + len(self.coeffs)):
            k = exp - self.valuation
            if 0 <= k < len(self.coeffs) and not self.coeffs[k].is_zero():
                acc = acc + power * self.coeffs[k]
            power = power * g
        if self.precision is not None:
            # the first omitted term has valuation >= precision * w
            acc = acc.truncate(self.precision * w)
        if acc.is_zero and acc.precision is not None and acc.precision <= 0:
            raise InsufficientPrecision("composition not determined to any positive order")
        if not acc.is_zero and acc.precision is not None and acc.precision <= acc.valuation:
            raise InsufficientPrecision("composition precision does not exceed its valuation")
        return acc

    # -- comparison & display --------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            try:
                other = self._common(other)
            except (TypeError, InputError):
                return NotImplemented
        return (self.field is other.field and self.valuation == other.valuation
                and self.coeffs == other.coeffs and self.precision == other.precision)

    def __hash__(self):
        return hash((id(self.field), self.valuation, self.coeffs, self.precision))

    def same_to_precision(self, other) -> bool:
        """Equality of all jointly-known coefficients."""
        other = self._common(other)
        prec = _pmin(self.precision, other.precision)
        diff = self - other
        if diff.is_zero:
            return True
        return prec is not None and diff.valuation >= prec

    def __repr__(self):
        if self.is_zero:
            body = "0"
        else:
            terms = []
            for k, c in enumerate(self.coeffs):
                if c.is_zero():
                    continue
                e = self.valuation + k
                cs = repr(c)
                if e == 0:
                    terms.append(cs)
                else:
                    head = "" if cs == "1" else f"{cs}*"
                    terms.append(f"{head}t^{e}" if e != 1 else f"{head}t")
            body = " + ".join(terms)
        if self.precision is not None:
            body += f" + O(t^{self.precision})"
        return body
