"""Universal quantum-dimension formulas on Vogel's plane.

Every formula here is a finite product of ratios sinh(n*x/4)/sinh(d*x/4) whose
coefficients n, d are integer-linear forms in the Vogel parameters (alpha,
beta, gamma).  The builders return :class:`~uqdim.series.SinhProduct` objects;
the public ``qdim_*`` functions expand them to exact series.  A vanishing
denominator form raises :class:`PoleAtParameters` before anything is expanded;
no limits are taken across parameter-space poles.

The blocks of the mixed Cartan-product formula telescope: several linear
forms appear once as a numerator of one block and once as a denominator of
another (they are the surviving border terms of one long Weyl-formula
product).  Those pairs are cancelled symbolically, as coefficient vectors,
before any values are computed -- identical forms cancel exactly, so this is
simplification, not limit-taking, and it keeps the assembled product regular
wherever the underlying character is.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import PoleAtParameters, UnknownAlgebra
from .series import (
    DEFAULT_ORDER,
    CoshFactor,
    PowerSeries,
    Rational,
    SinhFactor,
    SinhProduct,
)

SLOTS = ("alpha", "beta", "gamma")


@dataclass(frozen=True)
class VogelParams:
    """A point of Vogel's plane.  Points are projective and defined up to
    permutation of the three coordinates; t, s, p are the elementary
    symmetric combinations."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.alpha == self.beta == self.gamma == 0:
            raise ValueError("(alpha, beta, gamma) must not all vanish")

    @property
    def t(self) -> Fraction:
        return self.alpha + self.beta + self.gamma

    @property
    def s(self) -> Fraction:
        return self.alpha * self.beta + self.beta * self.gamma + self.alpha * self.gamma

    @property
    def p(self) -> Fraction:
        return self.alpha * self.beta * self.gamma

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma)

    def permuted(self, order: tuple[int, int, int]) -> "VogelParams":
        """Coordinates reordered so position k holds the order[k]-th
        original coordinate (0 = alpha, 1 = beta, 2 = gamma)."""
        triple = self.as_tuple()
        return VogelParams(triple[order[0]], triple[order[1]], triple[order[2]])

    def slot_first(self, slot: str) -> "VogelParams":
        """Permutation placing the chosen coordinate in the alpha position."""
        if slot == "alpha":
            return self
        if slot == "beta":
            return self.permuted((1, 0, 2))
        if slot == "gamma":
            return self.permuted((2, 1, 0))
        raise ValueError(f"slot must be one of {SLOTS}, got {slot!r}")

    def scaled(self, z: Rational) -> "VogelParams":
        """The projectively equivalent point (alpha/z, beta/z, gamma/z)."""
        z = Fraction(z)
        if z == 0:
            raise ValueError("scale must be nonzero")
        return VogelParams(self.alpha / z, self.beta / z, self.gamma / z)


@dataclass(frozen=True)
class AlgebraId:
    """A simple Lie algebra named by its Dynkin family and rank."""

    family: str
    rank: int
    label: str


_ALGEBRA_RE = re.compile(r"^(sl|so|sp|g|f|e)\s*(\d+)$")

_EXCEPTIONAL_PARAMS = {
    ("G", 2): (-2, Fraction(10, 3), Fraction(8, 3)),
    ("F", 4): (-2, 5, 6),
    ("E", 6): (-2, 6, 8),
    ("E", 7): (-2, 8, 12),
    ("E", 8): (-2, 12, 20),
}


def parse_algebra(name: str) -> AlgebraId:
    """Resolve names like "sl 6", "so12", "sp6", "g2", "e8" to family/rank.

    "sl N" is the algebra of the N-dimensional defining representation
    (A_{N-1}); "so N" maps to B or D by parity; "sp N" requires even N.
    """
    text = name.strip().lower()
    m = _ALGEBRA_RE.match(text)
    if not m:
        raise UnknownAlgebra(f"cannot parse algebra name {name!r}")
    kind, num = m.group(1), int(m.group(2))
    if kind == "sl":
        if num < 2:
            raise UnknownAlgebra(f"sl {num} is not a simple Lie algebra name")
        return AlgebraId("A", num - 1, f"sl{num}")
    if kind == "so":
        if num >= 5 and num % 2 == 1:
            return AlgebraId("B", (num - 1) // 2, f"so{num}")
        if num >= 6 and num % 2 == 0:
            return AlgebraId("D", num // 2, f"so{num}")
        raise UnknownAlgebra(f"so {num} is outside the supported range (N >= 5)")
    if kind == "sp":
        if num >= 4 and num % 2 == 0:
            return AlgebraId("C", num // 2, f"sp{num}")
        raise UnknownAlgebra(f"sp {num} needs even N >= 4")
    family = kind.upper()
    if (family, num) in _EXCEPTIONAL_PARAMS:
        return AlgebraId(family, num, f"{kind}{num}")
    raise UnknownAlgebra(f"no exceptional algebra {name!r}")


def vogel_params(algebra: AlgebraId | str) -> VogelParams:
    """Vogel parameters of a simple Lie algebra, in the alpha = -2
    normalisation (long roots of square 2, t = dual Coxeter number)."""
    if isinstance(algebra, str):
        algebra = parse_algebra(algebra)
    family, n = algebra.family, algebra.rank
    if family == "A":
        return VogelParams(-2, 2, n + 1)
    if family == "B":
        return VogelParams(-2, 4, 2 * n - 3)
    if family == "C":
        return VogelParams(-2, 1, n + 2)
    if family == "D":
        return VogelParams(-2, 4, 2 * n - 4)
    try:
        a, b, c = _EXCEPTIONAL_PARAMS[(family, n)]
    except KeyError:
        raise UnknownAlgebra(f"no Vogel parameters for {family}{n}") from None
    return VogelParams(a, b, c)


def line_params(line: str, value: Rational) -> VogelParams:
    """A point of one of the distinguished lines of Vogel's plane.

    "sl", "so", "sp" take the defining-representation dimension N;
    "exc" takes the line parameter n of the exceptional series.
    """
    value = Fraction(value)
    line = line.lower()
    if line == "sl":
        return VogelParams(-2, 2, value)
    if line == "so":
        return VogelParams(-2, 4, value - 4)
    if line == "sp":
        return VogelParams(-2, 1, value / 2 + 2)
    if line == "exc":
        return VogelParams(-2, 2 * value + 4, value + 4)
    raise ValueError(f"unknown line {line!r}; expected sl, so, sp or exc")


def exc_line_params(lam: Rational) -> VogelParams:
    """The exceptional line gamma = 2(alpha+beta) in the (lam, 1-lam, 2)
    parametrisation."""
    lam = Fraction(lam)
    return VogelParams(lam, 1 - lam, 2)


# ---------------------------------------------------------------------------
# scalar invariants
# ---------------------------------------------------------------------------


def dim_adjoint(v: VogelParams) -> Fraction:
    """Universal dimension of the adjoint representation."""
    a, b, c = v.as_tuple()
    if a * b * c == 0:
        raise PoleAtParameters(
            f"dim formula has a pole: alpha*beta*gamma = 0 at ({a}, {b}, {c})"
        )
    return -((a + 2 * b + 2 * c) * (b + 2 * a + 2 * c) * (c + 2 * a + 2 * b)) / (a * b * c)


def casimir_adjoint(v: VogelParams) -> Fraction:
    """Quadratic Casimir eigenvalue on the adjoint representation (2t)."""
    return 2 * v.t


def casimir_y2(v: VogelParams, slot: str) -> Fraction:
    """Quadratic Casimir eigenvalue on Y2(slot): 4t - 2*slot."""
    if slot not in SLOTS:
        raise ValueError(f"slot must be one of {SLOTS}, got {slot!r}")
    return 4 * v.t - 2 * getattr(v, slot)


# ---------------------------------------------------------------------------
# fixed-shape products (adjoint, Y2, X2)
# ---------------------------------------------------------------------------


def adjoint_product(v: VogelParams) -> SinhProduct:
    a, b, c = v.as_tuple()
    factors = [
        SinhFactor(c + 2 * b + 2 * a, c, "gamma"),
        SinhFactor(2 * c + b + 2 * a, b, "beta"),
        SinhFactor(2 * c + 2 * b + a, a, "alpha"),
    ]
    return SinhProduct(factors, sign=-1, context="qdim_adjoint")


def y2_product(v: VogelParams, slot: str) -> SinhProduct:
    """Weyl-line character of Y2(slot), the Cartan square taken in the
    chosen parameter slot."""
    w = v.slot_first(slot)
    a, b, c = w.as_tuple()
    t = w.t
    factors = [
        SinhFactor(2 * t, a, "alpha"),
        SinhFactor(b - 2 * t, 2 * a, "2*alpha"),
        SinhFactor(c - 2 * t, b, "beta"),
        SinhFactor(b + t, c, "gamma"),
        SinhFactor(c + t, a - b, "alpha-beta"),
        SinhFactor(3 * a - 2 * t, a - c, "alpha-gamma"),
    ]
    return SinhProduct(factors, sign=-1, context=f"qdim_y2({slot})")


def x2_product(v: VogelParams) -> SinhProduct:
    """Weyl-line character of X2, the non-adjoint part of the antisymmetric
    square of the adjoint.  The doubled-argument ratios are cosh factors, so
    t - alpha etc. may vanish without creating a pole."""
    a, b, c = v.as_tuple()
    t = v.t
    factors = [
        SinhFactor(2 * t - a, a, "alpha"),
        SinhFactor(2 * t - b, b, "beta"),
        SinhFactor(2 * t - c, c, "gamma"),
        SinhFactor(t + a, 2 * a, "2*alpha"),
        SinhFactor(t + b, 2 * b, "2*beta"),
        SinhFactor(t + c, 2 * c, "2*gamma"),
        CoshFactor(t - a, "t-alpha"),
        CoshFactor(t - b, "t-beta"),
        CoshFactor(t - c, "t-gamma"),
    ]
    return SinhProduct(factors, sign=1, context="qdim_x2")


# ---------------------------------------------------------------------------
# block form generators for the mixed Cartan products
# ---------------------------------------------------------------------------

# A linear form c_a*alpha + c_b*beta + c_g*gamma as its coefficient vector.
Form = tuple[int, int, int]


def _form_str(form: Form) -> str:
    parts = []
    for coeff, name in zip(form, ("alpha", "beta", "gamma")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else ("+" if parts else "")
        mag = abs(coeff)
        parts.append(f"{sign}{'' if mag == 1 else f'{mag}*'}{name}")
    return "".join(parts) if parts else "0"


def _eval_form(form: Form, v: VogelParams) -> Fraction:
    return form[0] * v.alpha + form[1] * v.beta + form[2] * v.gamma


FormLists = tuple[list[Form], list[Form]]


def _f_forms(k: int, l: int) -> FormLists:
    nums = [
        (3 - 2 * k - 2 * l, 2, 2),
        (3 - 2 * l, 0, 2),
        (3 - k - 2 * l, 1, 2),
        (-k, 1, 0),
    ]
    dens = [(3, 2, 2), (3, 0, 2), (3, 1, 2), (0, 1, 0)]
    return nums, dens


def _a_forms(n: int) -> FormLists:
    nums, dens = [], []
    for i in range(1, n + 1):
        nums += [(3 - i, 0, 2), (4 - i, 1, 2), (3 - i, 2, 1)]
        dens += [(1 - i, 2, 0), (-i, 1, 0), (1 - i, 0, 1)]
    return nums, dens


def _b_forms(n: int) -> FormLists:
    """Border-root forms of the n-th Cartan power of the adjoint."""
    nums, dens = [], []
    for i in range(1, n + 1):
        nums += [(3 - i, 2, 1), (3 - i, 1, 2), (4 - i, 2, 2)]
        dens += [(1 - i, 0, 1), (1 - i, 1, 0), (-i, 0, 0)]
    return nums, dens


def _btilde_forms(n: int) -> FormLists:
    # The border forms at parameters (alpha, beta, gamma - beta): substitute
    # gamma -> gamma - beta in the coefficient vectors.
    nums, dens = _b_forms(n)
    sub = lambda f: (f[0], f[1] - f[2], f[2])
    return [sub(f) for f in nums], [sub(f) for f in dens]


def _c1_forms(n: int) -> FormLists:
    nums = [(4 - i, 2, 2) for i in range(1, n + 1)]
    dens = [(3 - i, 0, 2) for i in range(1, n + 1)]
    return nums, dens


def _c2_forms(n: int) -> FormLists:
    nums = [(i - 1, -2, 0) for i in range(1, n + 1)]
    dens = [(i, 0, 0) for i in range(1, n + 1)]
    return nums, dens


def _cancel_forms(nums: list[Form], dens: list[Form]) -> tuple[list[Form], list[Form], int]:
    """Remove numerator/denominator pairs that are identical linear forms
    (or negatives of each other, flipping the sign): sinh(F)/sinh(F) = 1 and
    sinh(-F)/sinh(F) = -1 identically, for the form F as a whole function."""
    sign = 1
    remaining = list(nums)
    kept_dens = []
    for d in dens:
        if d in remaining:
            remaining.remove(d)
            continue
        neg = (-d[0], -d[1], -d[2])
        if neg in remaining:
            remaining.remove(neg)
            sign = -sign
            continue
        kept_dens.append(d)
    return remaining, kept_dens, sign


def _cartan_forms(n: int) -> tuple[list[Form], list[Form], int]:
    nums, dens = _b_forms(n)
    nums = [(3 - 2 * n, 2, 2)] + nums
    dens = [(3, 2, 2)] + dens
    return _cancel_forms(nums, dens)


def _z_forms(k: int, l: int) -> tuple[list[Form], list[Form], int]:
    nums, dens = [], []
    for gen_nums, gen_dens in (
        _f_forms(k, l),
        _a_forms(k + l),
        _btilde_forms(l),
        _c1_forms(k + 2 * l),
        _c2_forms(k),
    ):
        nums += gen_nums
        dens += gen_dens
    return _cancel_forms(nums, dens)


def _materialize(nums: list[Form], dens: list[Form], sign: int,
                 v: VogelParams, context: str) -> SinhProduct:
    assert len(nums) == len(dens)
    factors = [
        SinhFactor(_eval_form(num, v), _eval_form(den, v), _form_str(den))
        for num, den in zip(nums, dens)
    ]
    return SinhProduct(factors, sign=sign, context=context)


def cartan_power_product(v: VogelParams, n: int) -> SinhProduct:
    """Weyl-line character of the n-th Cartan power of the adjoint."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return SinhProduct([], sign=1, context="qdim_cartan_adjoint(n=0)")
    return _materialize(*_cartan_forms(n), v, f"qdim_cartan_adjoint(n={n})")


def z_product(v: VogelParams, k: int, l: int) -> SinhProduct:
    """Weyl-line character of the Cartan product of k adjoints and l copies
    of Y2(beta), assembled from its five blocks with the cross-block
    telescoping pairs cancelled symbolically."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    if k == 0 and l == 0:
        return SinhProduct([], sign=1, context="qdim_z")
    return _materialize(*_z_forms(k, l), v, f"qdim_z(k={k}, l={l})")


def _block_series(pair: FormLists, v: VogelParams, order: int,
                  context: str) -> PowerSeries:
    nums, dens = pair
    return _materialize(nums, dens, 1, v, context).series(order)


def z_block_a(v: VogelParams, n: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    return _block_series(_a_forms(n), v, order, "z_block_a")


def z_block_c1(v: VogelParams, n: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    return _block_series(_c1_forms(n), v, order, "z_block_c1")


def z_block_c2(v: VogelParams, n: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    return _block_series(_c2_forms(n), v, order, "z_block_c2")


def z_block_f(v: VogelParams, k: int, l: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    return _block_series(_f_forms(k, l), v, order, "z_block_f")


def z_block_btilde(v: VogelParams, l: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    return _block_series(_btilde_forms(l), v, order, "z_block_btilde")


# ---------------------------------------------------------------------------
# public series operations
# ---------------------------------------------------------------------------


def qdim_adjoint(v: VogelParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Exact series of the adjoint quantum dimension; constant term is
    dim_adjoint and the expression is symmetric in (alpha, beta, gamma)."""
    return adjoint_product(v).series(order)


def qdim_cartan_adjoint(v: VogelParams, n: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Exact series of the n-th Cartan power of the adjoint (n = 1 recovers
    qdim_adjoint)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return cartan_power_product(v, n).series(order)


def qdim_y2(v: VogelParams, slot: str, order: int = DEFAULT_ORDER) -> PowerSeries:
    return y2_product(v, slot).series(order)


def qdim_x2(v: VogelParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    return x2_product(v).series(order)


def qdim_z(v: VogelParams, k: int, l: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    return z_product(v, k, l).series(order)


# ---------------------------------------------------------------------------
# evaluation along one-parameter families
# ---------------------------------------------------------------------------


def z_dim_along_family(params_at: Callable[[Fraction], VogelParams],
                       value0: Fraction, k: int, l: int,
                       family_name: str = "one-parameter") -> Fraction:
    """x -> 0 value of the mixed Cartan product restricted to an affine
    one-parameter family of Vogel points, evaluated at the given parameter.

    At isolated points two different linear forms -- one numerator, one
    denominator -- can vanish together, leaving the printed product 0/0 even
    though its restriction to the family is regular; each vanishing form is
    then replaced by its exact derivative along the family (forms are affine
    in the family parameter, so the derivative is a difference of two
    evaluations; nothing is computed numerically).
    """
    value0 = Fraction(value0)
    nums, dens, sign = _z_forms(k, l)
    v0 = params_at(value0)
    v1 = params_at(value0 + 1)

    den_vals = [(_eval_form(f, v0), _eval_form(f, v1), f) for f in dens]
    num_vals = [(_eval_form(f, v0), _eval_form(f, v1), f) for f in nums]

    for at0, at1, form in den_vals:
        if at0 == 0 and at1 == at0:
            raise PoleAtParameters(
                f"denominator {_form_str(form)} vanishes identically along "
                f"the {family_name} family"
            )
    if any(at0 == 0 and at1 == at0 for at0, at1, _ in num_vals):
        return Fraction(0)

    zeros_num = sum(1 for at0, _, _ in num_vals if at0 == 0)
    zeros_den = sum(1 for at0, _, _ in den_vals if at0 == 0)
    if zeros_num > zeros_den:
        return Fraction(0)
    if zeros_num < zeros_den:
        raise PoleAtParameters(
            f"qdim_z(k={k}, l={l}) has a pole on the {family_name} family "
            f"at parameter {value0}"
        )
    acc = Fraction(sign)
    for at0, at1, _ in num_vals:
        acc *= at0 if at0 != 0 else (at1 - at0)
    for at0, at1, _ in den_vals:
        acc /= at0 if at0 != 0 else (at1 - at0)
    return acc


def z_dim_along_line(line: str, value0: Rational, perm: tuple[int, int, int],
                     k: int, l: int) -> Fraction:
    """x -> 0 value of qdim_z with permuted parameters running along one of
    the classical lines, evaluated at the given line parameter."""
    return z_dim_along_family(
        lambda n: line_params(line, n).permuted(perm),
        Fraction(value0), k, l, f"{line} line",
    )


def exc_line_dim(lam: Rational, k: int, l: int) -> Fraction:
    """Dimension (x -> 0 value) of the Cartan product of k adjoints and l
    copies of Y2(beta) on the exceptional line, parametrised as
    (lam, 1 - lam, 2).

    Evaluation is along the line, so the result is the exceptional-series
    dimension function of lam, defined away from its genuine poles.
    """
    return z_dim_along_family(exc_line_params, Fraction(lam), k, l,
                              "exceptional line")
