"""Concrete carriers with set-valued scalar multiplication.

A model is F^n together with a product ``a o x`` that yields a whole set
of vectors. Only finitely describable shapes are allowed so membership,
enumeration, and set equality stay exactly decidable:

* FiniteSet: explicit nonempty deduplicated set,
* GeometricRay: {base * ratio^k : k >= 0} with nonzero base and a
  positive rational ratio other than 1,
* SignPair: {base, -base} with nonzero base.

Four product families are built in:

* trivial:        a o x = {a*x}
* zero_augmented: a o x = {a*x, 0}
* geometric(r):   a o x = {a*x*r^k : k >= 0} for a, x nonzero, else {0}
* sign:           a o x = {a*x, -a*x}, over Q only
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .checker import CheckReport, ItemCheck, SampleConfig, Witness, sample_stream
from .scalars import (
    FieldTag,
    GaussianRational,
    Scalar,
    format_scalar,
    imag_part,
    is_zero,
    make_scalar,
    real_part,
)
from .vectors import Vector, vector_key, zero_vector


class ModelError(ValueError):
    """Bad model parameter, field/dimension mismatch, or unsupported shape."""


@dataclass(frozen=True)
class FiniteSet:
    """Explicit finite set; elements are sorted and deduplicated."""

    elements: tuple[Vector, ...]

    def __post_init__(self):
        if not self.elements:
            raise ModelError("a hyperset is never empty")


@dataclass(frozen=True)
class GeometricRay:
    """{base * ratio^k : k >= 0}; base nonzero, ratio positive and != 1."""

    base: Vector
    ratio: Fraction

    def __post_init__(self):
        if self.base.is_zero:
            raise ModelError("ray base must be nonzero; use ray() to normalize")
        _validate_ratio(self.ratio)


@dataclass(frozen=True)
class SignPair:
    """{base, -base}; base nonzero and canonicalized so the larger
    vector (by vector_key) is stored."""

    base: Vector

    def __post_init__(self):
        if self.base.is_zero:
            raise ModelError("sign pair base must be nonzero; use sign_pair()")
        neg = -self.base
        if vector_key(neg) > vector_key(self.base):
            object.__setattr__(self, "base", neg)


HyperSet = Union[FiniteSet, GeometricRay, SignPair]


def _validate_ratio(ratio: Fraction):
    if not isinstance(ratio, Fraction):
        raise ModelError("ratio must be a Fraction")
    if ratio <= 0 or ratio == 1:
        raise ModelError(f"ratio must be positive and != 1, got {ratio}")


def finite(vectors: Iterable[Vector]) -> FiniteSet:
    """Build a FiniteSet: deduplicate and sort for determinism."""
    unique = sorted(set(vectors), key=vector_key)
    return FiniteSet(tuple(unique))


def ray(base: Vector, ratio: Fraction) -> HyperSet:
    """Geometric ray from base; a zero base collapses to {0}."""
    _validate_ratio(ratio)
    if base.is_zero:
        return finite([base])
    return GeometricRay(base, ratio)


def sign_pair(base: Vector) -> HyperSet:
    """{base, -base}; a zero base collapses to {0}."""
    if base.is_zero:
        return finite([base])
    return SignPair(base)


# --- families -------------------------------------------------------------


@dataclass(frozen=True)
class Trivial:
    """a o x = {a*x}: the classical single-valued product."""


@dataclass(frozen=True)
class ZeroAugmented:
    """a o x = {a*x, 0}: the classical product with 0 adjoined."""


@dataclass(frozen=True)
class Geometric:
    """a o x = {a*x*ratio^k : k >= 0} for nonzero a and x, else {0}."""

    ratio: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        _validate_ratio(self.ratio)


@dataclass(frozen=True)
class Sign:
    """a o x = {a*x, -a*x}. Defined over Q only."""


Family = Union[Trivial, ZeroAugmented, Geometric, Sign]


def family_token(family: Family) -> str:
    if isinstance(family, Trivial):
        return "trivial"
    if isinstance(family, ZeroAugmented):
        return "zero_augmented"
    if isinstance(family, Geometric):
        return f"geometric({family.ratio})"
    if isinstance(family, Sign):
        return "sign"
    raise ModelError(f"unknown family: {family!r}")


@dataclass(frozen=True)
class ModelSpec:
    field: FieldTag
    dim: int
    family: Family

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ModelError(f"dim must be a positive integer, got {self.dim!r}")
        if isinstance(self.family, Sign) and self.field is FieldTag.QI:
            raise ModelError("the sign family is defined over Q only")

    def describe(self) -> str:
        return f"{family_token(self.family)} {self.field} dim={self.dim}"

    def admit_scalar(self, a: int | Scalar) -> Scalar:
        try:
            return make_scalar(self.field, a)
        except ValueError as exc:
            raise ModelError(str(exc)) from None

    def admit_vector(self, x: Vector) -> Vector:
        if not isinstance(x, Vector):
            raise ModelError(f"not a vector: {x!r}")
        if x.dim != self.dim:
            raise ModelError(f"dimension mismatch: model dim={self.dim}, got {x.dim}")
        for c in x.coords:
            if self.field is FieldTag.Q and isinstance(c, GaussianRational):
                raise ModelError("field Q does not admit Gaussian coordinates")
        return x

    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)


# --- the set-valued product ------------------------------------------------


def product(model: ModelSpec, a: int | Scalar, x: Vector) -> HyperSet:
    """The model's set-valued product a o x."""
    a = model.admit_scalar(a)
    x = model.admit_vector(x)
    ax = x.scaled(a)
    fam = model.family
    if isinstance(fam, Trivial):
        return finite([ax])
    if isinstance(fam, ZeroAugmented):
        return finite([ax, model.zero()])
    if isinstance(fam, Geometric):
        return ray(ax, fam.ratio)
    if isinstance(fam, Sign):
        return sign_pair(ax)
    raise ModelError(f"unknown family: {fam!r}")


def _solve_power(t: Fraction, r: Fraction) -> int | None:
    """Exact k >= 0 with r^k == t, else None. r positive, != 1."""
    if t <= 0:
        return None
    if t == 1:
        return 0
    cur = Fraction(1)
    k = 0
    if r < 1:
        if t > 1:
            return None
        while cur > t:
            cur *= r
            k += 1
    else:
        if t < 1:
            return None
        while cur < t:
            cur *= r
            k += 1
    return k if cur == t else None


def _ray_exponent(s: GeometricRay, v: Vector) -> int | None:
    """Exact k with v == base * ratio^k (k >= 0), else None."""
    if v.dim != s.base.dim:
        return None
    t: Fraction | None = None
    for b, c in zip(s.base.coords, v.coords):
        if b == 0:
            if c != 0:
                return None
            continue
        q = c / b
        if imag_part(q) != 0:
            return None
        qr = real_part(q)
        if qr <= 0:
            return None
        if t is None:
            t = qr
        elif t != qr:
            return None
    if t is None:
        return None
    return _solve_power(t, s.ratio)


def contains(s: HyperSet, v: Vector) -> bool:
    """Exact membership for every shape."""
    if isinstance(s, FiniteSet):
        return v in s.elements
    if isinstance(s, SignPair):
        return v == s.base or v == -s.base
    if isinstance(s, GeometricRay):
        return _ray_exponent(s, v) is not None
    raise ModelError(f"unknown hyperset: {s!r}")


def enumerate_set(s: HyperSet, depth: int) -> list[Vector]:
    """Deterministic enumeration; rays are truncated to depth elements."""
    if depth < 1:
        raise ModelError("depth must be positive")
    if isinstance(s, FiniteSet):
        return list(s.elements)
    if isinstance(s, SignPair):
        return sorted([s.base, -s.base], key=vector_key)
    if isinstance(s, GeometricRay):
        out = []
        power = Fraction(1)
        for _ in range(depth):
            out.append(s.base.scaled(power))
            power *= s.ratio
        return out
    raise ModelError(f"unknown hyperset: {s!r}")


def hyperset_eq(s1: HyperSet, s2: HyperSet) -> bool:
    """Exact set equality across shapes.

    A ray is infinite (base nonzero, ratio != 1 make all elements
    distinct), so it never equals a finite shape, and a ray determines
    its (base, ratio) pair uniquely: base is the extreme element and
    base*ratio the next one.
    """
    if isinstance(s1, GeometricRay) or isinstance(s2, GeometricRay):
        if isinstance(s1, GeometricRay) and isinstance(s2, GeometricRay):
            return s1.base == s2.base and s1.ratio == s2.ratio
        return False
    return _as_element_set(s1) == _as_element_set(s2)


def _as_element_set(s: HyperSet) -> frozenset[Vector]:
    if isinstance(s, FiniteSet):
        return frozenset(s.elements)
    if isinstance(s, SignPair):
        return frozenset((s.base, -s.base))
    raise ModelError(f"not a finite shape: {s!r}")


def negate_set(s: HyperSet) -> HyperSet:
    """The image of a hyperset under negation."""
    if isinstance(s, FiniteSet):
        return finite([-v for v in s.elements])
    if isinstance(s, SignPair):
        return SignPair(-s.base)
    if isinstance(s, GeometricRay):
        return GeometricRay(-s.base, s.ratio)
    raise ModelError(f"unknown hyperset: {s!r}")


def sumset(s1: HyperSet, s2: HyperSet, depth: int) -> FiniteSet:
    """Pairwise sums of the depth-bounded enumerations."""
    left = enumerate_set(s1, depth)
    right = enumerate_set(s2, depth)
    return finite([u + v for u in left for v in right])


def intersect_nonempty(s1: HyperSet, s2: HyperSet, depth: int) -> Vector | None:
    """A common element, or None if none is found.

    Finite shapes are checked exhaustively. For two rays with the same
    ratio the answer is exact: elements coincide iff one base lies on
    the other ray. Otherwise rays fall back to depth-bounded search, so
    None at the default depth is reported as a miss by the callers.
    """
    if (
        isinstance(s1, GeometricRay)
        and isinstance(s2, GeometricRay)
        and s1.ratio == s2.ratio
    ):
        if _ray_exponent(s1, s2.base) is not None:
            return s2.base
        if _ray_exponent(s2, s1.base) is not None:
            return s1.base
        return None
    for v in enumerate_set(s1, depth):
        if contains(s2, v):
            return v
    for v in enumerate_set(s2, depth):
        if contains(s1, v):
            return v
    return None


def _union(parts: list[HyperSet]) -> HyperSet:
    distinct: list[HyperSet] = []
    for p in parts:
        if not any(hyperset_eq(p, q) for q in distinct):
            distinct.append(p)
    if len(distinct) == 1:
        return distinct[0]
    if all(isinstance(p, (FiniteSet, SignPair)) for p in distinct):
        elements: list[Vector] = []
        for p in distinct:
            elements.extend(_as_element_set(p))
        return finite(elements)
    rays = [p for p in distinct if isinstance(p, GeometricRay)]
    if len(rays) == len(distinct) and len({r.ratio for r in rays}) == 1:
        for candidate in rays:
            if all(_ray_exponent(candidate, r.base) is not None for r in rays):
                return candidate
    raise ModelError("union of these hyperset shapes is not representable")


def product_of_set(model: ModelSpec, a: int | Scalar, s: HyperSet) -> HyperSet:
    """Exact union of a o y over y in s.

    Shapes must come from the same model family; a mix the family cannot
    reproduce raises ModelError.
    """
    a = model.admit_scalar(a)
    if isinstance(s, FiniteSet):
        return _union([product(model, a, v) for v in s.elements])
    if isinstance(s, SignPair):
        return _union([product(model, a, s.base), product(model, a, -s.base)])
    if isinstance(s, GeometricRay):
        if is_zero(a):
            return finite([model.zero()])
        head = product(model, a, s.base)
        # a o (base*r^j) sweeps exponents j + k >= j, so the union over
        # j >= 0 is exactly the ray from a*base
        if isinstance(head, GeometricRay) and head.ratio == s.ratio:
            return head
        raise ModelError("ray input does not match this family's product")
    raise ModelError(f"unknown hyperset: {s!r}")


def describe_set(s: HyperSet) -> str:
    if isinstance(s, FiniteSet):
        return "{" + ", ".join(str(v) for v in s.elements) + "}"
    if isinstance(s, SignPair):
        lo, hi = sorted([s.base, -s.base], key=vector_key)
        return "{" + f"{lo}, {hi}" + "}"
    if isinstance(s, GeometricRay):
        return f"{{{s.base}*({s.ratio})^k : k >= 0}}"
    raise ModelError(f"unknown hyperset: {s!r}")


# --- axiom suite ------------------------------------------------------------


def check_wvs_axioms(model: ModelSpec, cfg: SampleConfig | None = None) -> CheckReport:
    """Sample-check the five weak-space axioms with exact verdicts."""
    cfg = cfg or SampleConfig()
    one = model.admit_scalar(1)
    it_right = ItemCheck(
        "right_distributive", "a o (x+y) meets (a o x) + (a o y)"
    )
    it_left = ItemCheck(
        "left_distributive", "(a+b) o x meets (a o x) + (b o x)"
    )
    it_assoc = ItemCheck("scalar_associative", "a o (b o x) = (a*b) o x")
    it_neg = ItemCheck("negation", "a o (-x) = (-a) o x = -(a o x)")
    it_unit = ItemCheck("unit_contains", "x in 1 o x")

    for a, b, x, y in sample_stream(cfg, model.field, model.dim, 2, 2):
        lhs = product(model, a, x + y)
        rhs = sumset(product(model, a, x), product(model, a, y), cfg.depth)
        if intersect_nonempty(lhs, rhs, cfg.depth) is None:
            it_right.sample(
                [
                    Witness(
                        {
                            "a": format_scalar(a),
                            "x": str(x),
                            "y": str(y),
                            "left": describe_set(lhs),
                            "right": describe_set(rhs),
                        },
                        f"no common element found up to depth {cfg.depth}",
                    )
                ]
            )
        else:
            it_right.sample([])

        lhs2 = product(model, a + b, x)
        rhs2 = sumset(product(model, a, x), product(model, b, x), cfg.depth)
        if intersect_nonempty(lhs2, rhs2, cfg.depth) is None:
            it_left.sample(
                [
                    Witness(
                        {
                            "a": format_scalar(a),
                            "b": format_scalar(b),
                            "x": str(x),
                            "left": describe_set(lhs2),
                            "right": describe_set(rhs2),
                        },
                        f"no common element found up to depth {cfg.depth}",
                    )
                ]
            )
        else:
            it_left.sample([])

        inner_set = product(model, b, x)
        swept = product_of_set(model, a, inner_set)
        direct = product(model, a * b, x)
        if hyperset_eq(swept, direct):
            it_assoc.sample([])
        else:
            it_assoc.sample(
                [
                    Witness(
                        {
                            "a": format_scalar(a),
                            "b": format_scalar(b),
                            "x": str(x),
                            "swept": describe_set(swept),
                            "direct": describe_set(direct),
                        },
                        "a o (b o x) differs from (a*b) o x",
                    )
                ]
            )

        neg_arg = product(model, a, -x)
        neg_scalar = product(model, -a, x)
        neg_image = negate_set(product(model, a, x))
        if hyperset_eq(neg_arg, neg_scalar) and hyperset_eq(neg_scalar, neg_image):
            it_neg.sample([])
        else:
            it_neg.sample(
                [
                    Witness(
                        {
                            "a": format_scalar(a),
                            "x": str(x),
                            "a o (-x)": describe_set(neg_arg),
                            "(-a) o x": describe_set(neg_scalar),
                            "-(a o x)": describe_set(neg_image),
                        },
                        "negation images disagree",
                    )
                ]
            )

        if contains(product(model, one, x), x):
            it_unit.sample([])
        else:
            it_unit.sample(
                [
                    Witness(
                        {"x": str(x), "1 o x": describe_set(product(model, one, x))},
                        "x is not an element of 1 o x",
                    )
                ]
            )

    return CheckReport(
        model.describe(),
        "wvs_axioms",
        [
            it_right.finish(),
            it_left.finish(),
            it_assoc.finish(),
            it_neg.finish(),
            it_unit.finish(),
        ],
    )
