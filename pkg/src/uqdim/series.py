"""Exact truncated power series over the rationals.

Everything downstream (Weyl characters, universal quantum dimensions, the
identity checker) is built from two primitives defined here:

* :class:`PowerSeries` -- a truncated Taylor series in one variable ``x`` with
  exact ``Fraction`` coefficients and no rounding anywhere, and
* :class:`SinhProduct` -- a signed product of ratios
  ``sinh(num*x/4) / sinh(den*x/4)`` with rational ``num``, ``den``, which can
  be expanded into an exact series, evaluated in floating point, or collapsed
  to its value at ``x = 0``.

All values are immutable after construction and every operation is a pure
function, so concurrent use needs no locking.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DivisionByZeroSeries,
    PoleAtParameters,
    PoleAtX,
    ZeroDenominatorForm,
)

Rational = Fraction
RationalLike = Union[Fraction, int]

#: Default truncation order used throughout the package (inclusive).
DEFAULT_ORDER = 20

_ZERO = Fraction(0)


def _as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class PowerSeries:
    """Truncated Taylor series ``sum_{m=0}^{order} c_m x^m`` over Fraction.

    The truncation order is inclusive; ``coefficients`` always has length
    ``order + 1``.  Binary operations truncate to the minimum order of the
    operands, i.e. to the information both sides actually carry.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike], order: int | None = None):
        coeffs = [_as_rational(c) for c in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            del coeffs[order + 1 :]
            coeffs.extend([_ZERO] * (order + 1 - len(coeffs)))
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        self._coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "PowerSeries":
        return cls([_as_rational(value)], order=order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.constant(1, order)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The series of the variable x itself."""
        return cls([0, 1], order=order)

    # -- basic accessors ---------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def constant_term(self) -> Fraction:
        return self._coeffs[0]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def __getitem__(self, m: int) -> Fraction:
        return self._coeffs[m]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for m, c in enumerate(self._coeffs):
            if c != 0:
                return m
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(
            [self._coeffs[m] + other._coeffs[m] for m in range(n + 1)]
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(
            [self._coeffs[m] - other._coeffs[m] for m in range(n + 1)]
        )

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self._coeffs])

    def __mul__(self, other: Union["PowerSeries", RationalLike]) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            out = [_ZERO] * (n + 1)
            for i, a in enumerate(self._coeffs[: n + 1]):
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return PowerSeries(out)
        scalar = _as_rational(other)
        return PowerSeries([c * scalar for c in self._coeffs])

    def __rmul__(self, other: RationalLike) -> "PowerSeries":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "PowerSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = PowerSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        """Series division; a common factor of x^m cancels when both operands
        share m leading zero coefficients."""
        if not isinstance(other, PowerSeries):
            return NotImplemented
        v = other.valuation()
        if v is None:
            raise DivisionByZeroSeries("division by the zero series")
        my_v = self.valuation()
        if my_v is None:
            return PowerSeries.zero(min(self.order, other.order) - v)
        if v > my_v:
            raise DivisionByZeroSeries(
                f"divisor valuation {v} exceeds dividend valuation {my_v}"
            )
        n = min(self.order, other.order) - v
        a = self._coeffs[v : v + n + 1] + (_ZERO,) * max(0, n + 1 - (self.order - v + 1))
        b = other._coeffs[v : v + n + 1] + (_ZERO,) * max(0, n + 1 - (other.order - v + 1))
        lead = b[0]
        out: list[Fraction] = []
        for m in range(n + 1):
            acc = a[m]
            for k in range(m):
                if out[k] != 0 and b[m - k] != 0:
                    acc -= out[k] * b[m - k]
            out.append(acc / lead)
        return PowerSeries(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    # -- reparametrisation and evaluation ----------------------------------

    def scale_x(self, factor: RationalLike) -> "PowerSeries":
        """The series of f(factor * x): coefficient c_m picks up factor**m."""
        z = _as_rational(factor)
        power = Fraction(1)
        out = []
        for c in self._coeffs:
            out.append(c * power)
            power *= z
        return PowerSeries(out)

    def eval_at(self, x: float) -> float:
        """Horner evaluation of the truncated polynomial in double precision."""
        acc = 0.0
        for c in reversed(self._coeffs):
            acc = acc * x + float(c)
        return acc

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"PowerSeries([{body}])"


def sinh_series(coefficient: RationalLike, order: int) -> PowerSeries:
    """Exact Taylor expansion of sinh(coefficient * x / 4) to the given order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    q = _as_rational(coefficient) / 4
    coeffs = [_ZERO] * (order + 1)
    power = q
    m = 1
    while m <= order:
        coeffs[m] = power / math.factorial(m)
        power *= q * q
        m += 2
    return PowerSeries(coeffs)


def sinh_ratio_series(num: RationalLike, den: RationalLike, order: int) -> PowerSeries:
    """Exact series of sinh(num*x/4) / sinh(den*x/4).

    The constant term is num/den; the shared factor of x cancels in the
    division so no limits are ever taken.
    """
    num = _as_rational(num)
    den = _as_rational(den)
    if order < 0:
        raise ValueError("order must be non-negative")
    if den == 0:
        raise ZeroDenominatorForm(f"sinh ratio with zero denominator (num={num})")
    if num == 0:
        return PowerSeries.zero(order)
    return sinh_series(num, order + 1) / sinh_series(den, order + 1)


def cosh_series(coefficient: RationalLike, order: int) -> PowerSeries:
    """Exact Taylor expansion of cosh(coefficient * x / 4)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    q = _as_rational(coefficient) / 4
    coeffs = [_ZERO] * (order + 1)
    coeffs[0] = Fraction(1)
    power = q * q
    m = 2
    while m <= order:
        coeffs[m] = power / math.factorial(m)
        power *= q * q
        m += 2
    return PowerSeries(coeffs)


class SinhFactor:
    """One ratio sinh(num*x/4)/sinh(den*x/4) with an optional label naming the
    denominator linear form (used in pole diagnostics)."""

    __slots__ = ("num", "den", "label")

    def __init__(self, num: RationalLike, den: RationalLike, label: str = ""):
        self.num = _as_rational(num)
        self.den = _as_rational(den)
        self.label = label

    def __repr__(self) -> str:
        tag = f" [{self.label}]" if self.label else ""
        return f"SinhFactor({self.num}/{self.den}{tag})"


class CoshFactor:
    """The doubled-argument ratio sinh(2u)/sinh(u) at u = arg*x/4, recorded
    in its closed form 2*cosh(arg*x/4).  That identity makes the factor
    entire: it has no pole at arg = 0, where its value is the constant 2."""

    __slots__ = ("arg", "label")

    def __init__(self, arg: RationalLike, label: str = ""):
        self.arg = _as_rational(arg)
        self.label = label

    def __repr__(self) -> str:
        tag = f" [{self.label}]" if self.label else ""
        return f"CoshFactor(2*cosh({self.arg}*x/4){tag})"


class SinhProduct:
    """A signed product of sinh ratios: sign * prod_j sinh(n_j x/4)/sinh(d_j x/4).

    Denominator forms are checked eagerly: any vanishing denominator raises
    :class:`PoleAtParameters` naming the form, before anything is expanded.
    Factors with num == den != 0 are identically 1 and are dropped; a factor
    with num == 0 makes the whole product the zero function.  A factor may
    also be a :class:`CoshFactor`, which never contributes a denominator.
    """

    __slots__ = ("sign", "factors", "context")

    def __init__(self, factors: Sequence[SinhFactor | CoshFactor],
                 sign: int = 1, context: str = ""):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        kept = []
        for f in factors:
            if isinstance(f, CoshFactor):
                kept.append(f)
                continue
            if f.den == 0:
                where = f.label or f"num={f.num}"
                prefix = f"{context}: " if context else ""
                raise PoleAtParameters(
                    f"{prefix}sinh denominator {where} vanishes at these parameters"
                )
            if f.num == f.den:
                continue  # the ratio is identically 1
            kept.append(f)
        self.sign = sign
        self.factors = tuple(kept)
        self.context = context

    @property
    def is_zero(self) -> bool:
        return any(isinstance(f, SinhFactor) and f.num == 0 for f in self.factors)

    def series(self, order: int) -> PowerSeries:
        """Exact series expansion of the product to the given order."""
        if self.is_zero:
            return PowerSeries.zero(order)
        acc = PowerSeries.one(order)
        for f in self.factors:
            if isinstance(f, CoshFactor):
                acc = acc * (2 * cosh_series(f.arg, order))
            else:
                acc = acc * sinh_ratio_series(f.num, f.den, order)
        return acc if self.sign > 0 else -acc

    def dim(self) -> Fraction:
        """Value at x = 0: sign times the product of num_j/den_j (cosh
        factors contribute 2)."""
        acc = Fraction(self.sign)
        for f in self.factors:
            if isinstance(f, CoshFactor):
                acc *= 2
            else:
                acc *= Fraction(f.num, 1) / f.den
        return acc

    def value_at(self, x: float) -> float:
        """Direct floating-point evaluation at a real x (x = 0 gives dim)."""
        if x == 0:
            return float(self.dim())
        acc = float(self.sign)
        for f in self.factors:
            if isinstance(f, CoshFactor):
                acc *= 2.0 * math.cosh(float(f.arg) * x / 4.0)
                continue
            d = math.sinh(float(f.den) * x / 4.0)
            if d == 0.0:
                raise PoleAtX(f"sinh({f.den} * x/4) vanishes at x={x}")
            acc *= math.sinh(float(f.num) * x / 4.0) / d
        return acc

    def min_abs_denominator(self) -> Fraction | None:
        """Smallest |den| over the retained sinh factors (None if empty)."""
        dens = [abs(f.den) for f in self.factors if isinstance(f, SinhFactor)]
        return min(dens) if dens else None

    def __len__(self) -> int:
        return len(self.factors)

    def __repr__(self) -> str:
        sign = "-" if self.sign < 0 else ""
        return f"SinhProduct({sign}{len(self.factors)} factors)"
