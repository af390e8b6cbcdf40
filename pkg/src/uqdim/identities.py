"""Character identities for powers of the adjoint and their verification.

The symmetric square, antisymmetric square and symmetric cube of the adjoint
character restricted to the Weyl line are plethysm combinations of the single
function f(x) = qdim_adjoint.  Each identity equates such a combination with a
sum of universal characters.  Identities are verified by sampling: exact
series vanishing of LHS - RHS at random rational points of Vogel's plane
(a Schwartz-Zippel style certificate), plus floating-point residuals at random
real points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import PoleAtParameters
from .series import DEFAULT_ORDER, PowerSeries, SinhProduct
from .universal import (
    VogelParams,
    adjoint_product,
    x2_product,
    y2_product,
    z_product,
)

S2_SYM = "s2"
A2_ANTISYM = "a2"
S3_SYM_CUBE = "s3"
IDENTITIES = (S2_SYM, A2_ANTISYM, S3_SYM_CUBE)

SERIES = "series"
NUMERIC = "numeric"

#: Relative tolerance for numeric-mode residuals.
NUMERIC_TOLERANCE = 1e-9
#: Numeric-mode rejection margin around the pole set.
POLE_MARGIN = 1e-3

_HALF = Fraction(1, 2)
_SIXTH = Fraction(1, 6)

# Parameter permutations entering the symmetric-cube identity: three Cartan
# cubes and three adjoint*Y2(beta) products.
_S3_CUBE_PERMS = ((0, 1, 2), (1, 0, 2), (2, 1, 0))
_S3_MIXED_PERMS = ((0, 1, 2), (0, 2, 1), (1, 2, 0))


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one verification run.  ``exact_zero`` is meaningful in
    series mode (every coefficient of LHS - RHS is exactly zero);
    ``max_abs_residual`` in numeric mode (largest relative residual seen)."""

    identity: str
    mode: str
    order_checked: int
    points_checked: int
    seed: int
    exact_zero: bool | None = None
    max_abs_residual: float | None = None
    failures: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures


def char_sym_square(f_at: Callable[[int], PowerSeries], order: int) -> PowerSeries:
    """Symmetric-square plethysm (f(x)^2 + f(2x)) / 2 of a character f."""
    f1 = f_at(1)
    return (_HALF * (f1 * f1 + f_at(2))) + PowerSeries.zero(order)


def char_antisym_square(f_at: Callable[[int], PowerSeries], order: int) -> PowerSeries:
    """Antisymmetric-square plethysm (f(x)^2 - f(2x)) / 2."""
    f1 = f_at(1)
    return (_HALF * (f1 * f1 - f_at(2))) + PowerSeries.zero(order)


def char_sym_cube(f_at: Callable[[int], PowerSeries], order: int) -> PowerSeries:
    """Symmetric-cube plethysm (f(x)^3 + 3 f(2x) f(x) + 2 f(3x)) / 6."""
    f1 = f_at(1)
    combo = f1 * f1 * f1 + 3 * (f_at(2) * f1) + 2 * f_at(3)
    return (_SIXTH * combo) + PowerSeries.zero(order)


def adjoint_dilations(v: VogelParams, order: int) -> Callable[[int], PowerSeries]:
    """f_at(m) = series of f(m*x), computed once and reindexed exactly."""
    base = adjoint_product(v).series(order)

    def f_at(m: int) -> PowerSeries:
        return base if m == 1 else base.scale_x(m)

    return f_at


def identity_lhs(identity: str, v: VogelParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    f_at = adjoint_dilations(v, order)
    if identity == S2_SYM:
        return char_sym_square(f_at, order)
    if identity == A2_ANTISYM:
        return char_antisym_square(f_at, order)
    if identity == S3_SYM_CUBE:
        return char_sym_cube(f_at, order)
    raise ValueError(f"unknown identity {identity!r}")


def _rhs_products(identity: str, v: VogelParams) -> list[tuple[Fraction, SinhProduct]]:
    """The universal characters on the right-hand side, with multiplicities."""
    one = Fraction(1)
    if identity == S2_SYM:
        return [(one, y2_product(v, slot)) for slot in ("alpha", "beta", "gamma")]
    if identity == A2_ANTISYM:
        return [(one, adjoint_product(v)), (one, x2_product(v))]
    if identity == S3_SYM_CUBE:
        out = [(one, z_product(v.permuted(perm), 3, 0)) for perm in _S3_CUBE_PERMS]
        out += [(one, z_product(v.permuted(perm), 1, 1)) for perm in _S3_MIXED_PERMS]
        out.append((one, x2_product(v)))
        out.append((Fraction(2), adjoint_product(v)))
        return out
    raise ValueError(f"unknown identity {identity!r}")


def _rhs_constant(identity: str) -> Fraction:
    return Fraction(1) if identity == S2_SYM else Fraction(0)


def identity_rhs(identity: str, v: VogelParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    total = PowerSeries.constant(_rhs_constant(identity), order)
    for mult, product in _rhs_products(identity, v):
        total = total + mult * product.series(order)
    return total


def identity_residual_series(identity: str, v: VogelParams,
                             order: int = DEFAULT_ORDER) -> PowerSeries:
    return identity_lhs(identity, v, order) - identity_rhs(identity, v, order)


def _all_products(identity: str, v: VogelParams) -> list[SinhProduct]:
    return [adjoint_product(v)] + [p for _, p in _rhs_products(identity, v)]


def _lhs_value(identity: str, adj: SinhProduct, x: float) -> float:
    f1 = adj.value_at(x)
    f2 = adj.value_at(2 * x)
    if identity == S2_SYM:
        return 0.5 * (f1 * f1 + f2)
    if identity == A2_ANTISYM:
        return 0.5 * (f1 * f1 - f2)
    f3 = adj.value_at(3 * x)
    return (f1 ** 3 + 3 * f2 * f1 + 2 * f3) / 6.0


def _rhs_value(identity: str, products: list[tuple[Fraction, SinhProduct]],
               x: float) -> float:
    total = float(_rhs_constant(identity))
    for mult, product in products:
        total += float(mult) * product.value_at(x)
    return total


def sample_params(region: str, seed: int, index: int) -> VogelParams:
    """Deterministic pseudo-random rational parameter point.

    Numerators and denominators are bounded by 64 and every coordinate is
    nonzero.  ``region`` is "plane" or one of "line:sl", "line:so",
    "line:sp", "line:exc"; line points satisfy their line equation exactly.
    """
    rng = random.Random(seed * 1_000_003 + index)

    def draw() -> Fraction:
        while True:
            n = rng.randint(-64, 64)
            if n != 0:
                return Fraction(n, rng.randint(1, 64))

    region = region.lower()
    if region == "plane":
        return VogelParams(draw(), draw(), draw())
    if region == "line:exc":
        while True:
            a, b = draw(), draw()
            if 2 * (a + b) != 0:
                return VogelParams(a, b, 2 * (a + b))
    if region in ("line:sl", "line:so", "line:sp"):
        while True:
            n = draw()
            if region == "line:sl":
                return VogelParams(-2, 2, n)
            if region == "line:so" and n != 4:
                return VogelParams(-2, 4, n - 4)
            if region == "line:sp" and n != -4:
                return VogelParams(-2, 1, n / 2 + 2)
    raise ValueError(f"unknown region {region!r}")


def _relative_residual(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs))
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


def verify_identity(identity: str, mode: str = SERIES, order: int = DEFAULT_ORDER,
                    trials: int = 100, seed: int = 0) -> IdentityReport:
    """Check one identity at ``trials`` sampled points.

    Series mode demands that every coefficient of LHS - RHS vanishes exactly;
    numeric mode demands relative residuals below ``NUMERIC_TOLERANCE`` at
    random real parameters and x in [0.05, 1].  Points on (or, numerically,
    near) the pole set are rejected and redrawn; the run is deterministic in
    ``seed``.
    """
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    if order < 1 or trials < 1:
        raise ValueError("order and trials must be positive")
    if mode == SERIES:
        return _verify_series(identity, order, trials, seed)
    if mode == NUMERIC:
        return _verify_numeric(identity, order, trials, seed)
    raise ValueError(f"unknown mode {mode!r}")


def _verify_series(identity: str, order: int, trials: int, seed: int) -> IdentityReport:
    failures = []
    accepted = 0
    index = 0
    all_zero = True
    while accepted < trials:
        v = sample_params("plane", seed, index)
        index += 1
        try:
            residual = identity_residual_series(identity, v, order)
        except PoleAtParameters:
            continue
        accepted += 1
        if not residual.is_zero:
            all_zero = False
            first_bad = residual.valuation()
            failures.append(
                (v.as_tuple(), f"coefficient of x^{first_bad} is {residual[first_bad]}")
            )
    return IdentityReport(
        identity=identity,
        mode=SERIES,
        order_checked=order,
        points_checked=accepted,
        seed=seed,
        exact_zero=all_zero,
        failures=tuple(failures),
    )


def _verify_numeric(identity: str, order: int, trials: int, seed: int) -> IdentityReport:
    rng = random.Random(seed * 1_000_003 + 12345)
    failures = []
    worst = 0.0
    accepted = 0
    while accepted < trials:
        triple = tuple(rng.uniform(-8.0, 8.0) for _ in range(3))
        x = rng.uniform(0.05, 1.0)
        if any(abs(c) < POLE_MARGIN for c in triple):
            continue
        try:
            v = VogelParams(*(Fraction(c) for c in triple))
            products = _rhs_products(identity, v)
            adj = adjoint_product(v)
        except PoleAtParameters:
            continue
        dens = [p.min_abs_denominator() for _, p in products + [(Fraction(1), adj)]]
        if any(d is not None and float(d) < POLE_MARGIN for d in dens):
            continue
        accepted += 1
        lhs = _lhs_value(identity, adj, x)
        rhs = _rhs_value(identity, products, x)
        residual = _relative_residual(lhs, rhs)
        worst = max(worst, residual)
        if residual > NUMERIC_TOLERANCE:
            failures.append((triple + (x,), f"relative residual {residual:.3e}"))
    return IdentityReport(
        identity=identity,
        mode=NUMERIC,
        order_checked=order,
        points_checked=accepted,
        seed=seed,
        max_abs_residual=worst,
        failures=tuple(failures),
    )
