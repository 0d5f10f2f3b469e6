"""Exact pairings, closed-form suprema, and the inner-product suites.

The pairing is a (possibly weighted) dot product, conjugate-linear in
the second slot over Q[i]. Suprema over set-valued products are computed
in closed form per shape, never numerically: a finite shape takes a max,
and a geometric ray's pairing values are c * ratio^k, a monotone
sequence whose supremum is read off the sign of c and the side of 1 the
ratio is on. A genuinely unbounded supremum raises
UnboundedSupremumError and is reported as status "unbounded", never as a
number.

Square roots are never taken: norm laws are checked in squared form,
and the triangle inequality reduces to re(x, y) <= sqrt(nsq(x)*nsq(y)),
decided exactly by leq_sqrt_product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .checker import (
    CheckItem,
    CheckReport,
    ItemCheck,
    MAX_WITNESSES,
    SampleConfig,
    Witness,
    sample_stream,
    vacuous_report,
)
from .essential import EssentialSet, check_strong_normal, essential_points
from .models import (
    FiniteSet,
    GeometricRay,
    HyperSet,
    ModelError,
    ModelSpec,
    SignPair,
    describe_set,
    enumerate_set,
    product,
)
from .scalars import (
    FieldTag,
    Scalar,
    abs2,
    as_real,
    conjugate,
    format_scalar,
    imag_part,
    is_zero,
    leq_sqrt_product,
    real_part,
)
from .vectors import Vector, vector_key


class UnboundedSupremumError(ArithmeticError):
    """The requested supremum grows without bound."""


@dataclass(frozen=True)
class DotProduct:
    """Coordinatewise pairing sum x_i * conj(y_i)."""

    def describe(self) -> str:
        return "dot"


@dataclass(frozen=True)
class WeightedDot:
    """Pairing sum w_i * x_i * conj(y_i) with positive rational weights."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.weights:
            raise ModelError("weighted_dot needs at least one weight")
        coerced = tuple(Fraction(w) for w in self.weights)
        if any(w <= 0 for w in coerced):
            raise ModelError("weights must be positive")
        object.__setattr__(self, "weights", coerced)

    def describe(self) -> str:
        return f"weighted_dot({', '.join(str(w) for w in self.weights)})"


InnerProductSpec = Union[DotProduct, WeightedDot]


def _weights(ip: InnerProductSpec, dim: int) -> tuple[Fraction, ...]:
    if isinstance(ip, DotProduct):
        return (Fraction(1),) * dim
    if len(ip.weights) != dim:
        raise ModelError(
            f"weight count {len(ip.weights)} does not match dimension {dim}"
        )
    return ip.weights


def pairing(ip: InnerProductSpec, x: Vector, y: Vector) -> Scalar:
    """Exact pairing value; a Fraction over Q, GaussianRational over Q[i]."""
    if x.dim != y.dim:
        raise ModelError(f"dimension mismatch: {x.dim} vs {y.dim}")
    total: Scalar | None = None
    for w, cx, cy in zip(_weights(ip, x.dim), x.coords, y.coords):
        term = w * cx * conjugate(cy)
        total = term if total is None else total + term
    assert total is not None
    return total


def norm_sq(ip: InnerProductSpec, x: Vector) -> Fraction:
    """Squared length (x, x); structurally real and nonnegative."""
    return as_real(pairing(ip, x, x))


@dataclass(frozen=True)
class SupResult:
    value: Fraction
    attained: bool
    witness: Vector | None


def sup_pairing(
    model: ModelSpec, ip: InnerProductSpec, a: int | Scalar, x: Vector, y: Vector
) -> SupResult:
    """sup of (z, y) over z in a o x, exactly.

    Real field only. Over a ray the values are c*ratio^k with
    c = (base, y): monotone in k, so the sup is c at k = 0 when the
    sequence decreases, the unattained limit 0 when it climbs toward 0
    from below, and unbounded when c > 0 and the ratio exceeds 1.
    """
    if model.field is not FieldTag.Q:
        raise ModelError("sup_pairing is defined over the real field only")
    if ip is None:
        raise ModelError("sup_pairing needs an inner product")
    y = model.admit_vector(y)
    s = product(model, a, x)
    if isinstance(s, (FiniteSet, SignPair)):
        best: Fraction | None = None
        best_vec: Vector | None = None
        for u in enumerate_set(s, 1):
            val = as_real(pairing(ip, u, y))
            if best is None or val > best:
                best, best_vec = val, u
        assert best is not None and best_vec is not None
        return SupResult(best, True, best_vec)
    c = as_real(pairing(ip, s.base, y))
    if c == 0:
        return SupResult(Fraction(0), True, s.base)
    if s.ratio < 1:
        if c > 0:
            return SupResult(c, True, s.base)
        return SupResult(Fraction(0), False, None)
    if c > 0:
        raise UnboundedSupremumError(
            f"values {c}*({s.ratio})^k grow without bound"
        )
    return SupResult(c, True, s.base)


def _sup_norm_sq(ip: InnerProductSpec, s: HyperSet) -> tuple[Fraction, Vector]:
    """sup of (u, u) over u in s, with an attaining element.

    Rays with ratio > 1 are unbounded (base is nonzero and the pairing
    is positive definite) and raise UnboundedSupremumError.
    """
    if isinstance(s, (FiniteSet, SignPair)):
        best: Fraction | None = None
        best_vec: Vector | None = None
        for u in enumerate_set(s, 1):
            val = norm_sq(ip, u)
            if best is None or val > best:
                best, best_vec = val, u
        assert best is not None and best_vec is not None
        return best, best_vec
    base_sq = norm_sq(ip, s.base)
    if base_sq == 0 or s.ratio < 1:
        return base_sq, s.base
    raise UnboundedSupremumError(
        f"values {base_sq}*({s.ratio})^(2k) grow without bound"
    )


def _ball_violation(
    ip: InnerProductSpec, s: HyperSet, bound: Fraction, depth: int
) -> Vector | None:
    """Some u in s with (u, u) > bound, or None when no element exceeds it.

    Finite shapes are exhaustive. Ray values (base, base)*ratio^(2k) are
    monotone: for ratio < 1 the maximum sits at k = 0, for ratio > 1 the
    first exceeding element is found by walking up (guaranteed to exist
    whenever the base has positive length).
    """
    if isinstance(s, (FiniteSet, SignPair)):
        for u in enumerate_set(s, depth):
            if norm_sq(ip, u) > bound:
                return u
        return None
    base_sq = norm_sq(ip, s.base)
    if base_sq > bound:
        return s.base
    if s.ratio < 1 or base_sq == 0:
        return None
    r2 = s.ratio * s.ratio
    cur, u = base_sq, s.base
    while cur <= bound:
        cur *= r2
        u = u.scaled(s.ratio)
    return u


def describe_ip(ip: InnerProductSpec | None) -> str:
    return ip.describe() if ip is not None else "none"


_REAL_IP_ITEMS = (
    ("positive", "(x,x) > 0 for x != 0"),
    ("definite", "(x,x) = 0 exactly when x = 0"),
    ("additive", "(x+y, z) = (x,z) + (y,z)"),
    ("symmetric", "(y,x) = (x,y)"),
    ("sup_scaling", "sup of (z,y) over z in a o x equals a*(x,y)"),
    (
        "sup_attained_at_essential",
        "when the sup law holds, some essential point of a o x attains the sup",
    ),
)

_HIP_ITEMS = (
    ("positive", "(x,x) is real and positive for x != 0"),
    ("definite", "(x,x) = 0 exactly when x = 0"),
    ("additive", "(x+y, z) = (x,z) + (y,z)"),
    ("conjugate_symmetric", "(y,x) = conj((x,y))"),
    ("essential_scaling", "(e, y) = a*(x,y) for every essential e of a o x"),
    ("unit_ball_bound", "(u,u) <= (x,x) for every u in 1 o x"),
)

_LEMMA_34_ITEMS = (
    ("zero_pairing", "(0, x) = (x, 0) = 0"),
    ("negation", "(-x, y) = (x, -y) = -(x, y)"),
    ("conjugate_scaling", "(x, e) = conj(a)*(x,y) for every essential e of a o y"),
    ("scaled_ball_bound", "(u,u) <= abs2(a)*(x,x) for every u in a o x"),
)

_THEOREM_ITEMS = (
    ("essential_singletons", "every essential set is a singleton"),
    ("strong_normality", "the all-choices normality reading holds"),
    (
        "implication_consistent",
        "whenever the hyperinner axioms hold, both conclusions hold",
    ),
)

_NORM_ITEMS = (
    ("definite", "nsq(x) = 0 exactly when x = 0, and never negative"),
    ("cauchy_schwarz", "abs2((x,y)) <= nsq(x)*nsq(y)"),
    ("triangle", "re((x,y)) <= sqrt(nsq(x)*nsq(y)), squared-form check"),
    ("essential_scaling", "nsq(e) = abs2(a)*nsq(x) for every essential e of a o x"),
    ("sup_scaling", "sup of nsq over a o x equals abs2(a)*nsq(x)"),
    ("norm_axioms", "norm verdict derived from definiteness, triangle, and sup scaling"),
)


def check_real_ip_axioms(
    model: ModelSpec, ip: InnerProductSpec | None, cfg: SampleConfig | None = None
) -> CheckReport:
    """The real sup-based inner product axioms, one verdict per item."""
    cfg = cfg or SampleConfig()
    if ip is None or model.field is not FieldTag.Q:
        return vacuous_report(model.describe(), "real_ip", list(_REAL_IP_ITEMS))

    checks = {spec[0]: ItemCheck(*spec) for spec in _REAL_IP_ITEMS}

    for a, x, y, z in sample_stream(cfg, model.field, model.dim, 1, 3):
        xx = as_real(pairing(ip, x, x))
        if not x.is_zero:
            checks["positive"].sample(
                []
                if xx > 0
                else [
                    Witness(
                        {"x": str(x), "(x,x)": str(xx)},
                        "(x,x) is not positive for nonzero x",
                    )
                ]
            )
        checks["definite"].sample(
            []
            if (xx == 0) == x.is_zero
            else [
                Witness(
                    {"x": str(x), "(x,x)": str(xx)},
                    "(x,x) = 0 does not characterize x = 0",
                )
            ]
        )
        lhs = pairing(ip, x + y, z)
        rhs = pairing(ip, x, z) + pairing(ip, y, z)
        checks["additive"].sample(
            []
            if lhs == rhs
            else [
                Witness(
                    {
                        "x": str(x),
                        "y": str(y),
                        "z": str(z),
                        "(x+y,z)": format_scalar(lhs),
                        "(x,z)+(y,z)": format_scalar(rhs),
                    },
                    "additivity in the first slot fails",
                )
            ]
        )
        checks["symmetric"].sample(
            []
            if pairing(ip, y, x) == pairing(ip, x, y)
            else [
                Witness(
                    {"x": str(x), "y": str(y)},
                    "(y,x) differs from (x,y)",
                )
            ]
        )

        expected = a * pairing(ip, x, y)
        try:
            sup = sup_pairing(model, ip, a, x, y)
        except UnboundedSupremumError as exc:
            checks["sup_scaling"].mark_unbounded(
                Witness(
                    {
                        "a": format_scalar(a),
                        "x": str(x),
                        "y": str(y),
                        "a o x": describe_set(product(model, a, x)),
                    },
                    f"supremum is unbounded: {exc}",
                )
            )
            continue
        if sup.value == expected:
            checks["sup_scaling"].sample([])
            ess = essential_points(model, a, x, cfg.depth)
            attained_at = [
                e for e in ess if as_real(pairing(ip, e, y)) == sup.value
            ]
            checks["sup_attained_at_essential"].sample(
                []
                if attained_at
                else [
                    Witness(
                        {
                            "a": format_scalar(a),
                            "x": str(x),
                            "y": str(y),
                            "sup": str(sup.value),
                            "essential": str(ess),
                        },
                        "no essential point attains the supremum",
                    )
                ]
            )
        else:
            note = "attained" if sup.attained else "not attained"
            checks["sup_scaling"].sample(
                [
                    Witness(
                        {
                            "a": format_scalar(a),
                            "x": str(x),
                            "y": str(y),
                            "sup": f"{sup.value} ({note})",
                            "a*(x,y)": str(expected),
                        },
                        "sup over a o x differs from a*(x,y)",
                    )
                ]
            )

    return CheckReport(
        model.describe(),
        "real_ip",
        [checks[spec[0]].finish() for spec in _REAL_IP_ITEMS],
    )


def check_hip_axioms(
    model: ModelSpec, ip: InnerProductSpec | None, cfg: SampleConfig | None = None
) -> CheckReport:
    """The six hyperinner product axioms (real or Gaussian field)."""
    cfg = cfg or SampleConfig()
    if ip is None:
        return vacuous_report(model.describe(), "hip", list(_HIP_ITEMS))

    checks = {spec[0]: ItemCheck(*spec) for spec in _HIP_ITEMS}
    one = model.admit_scalar(1)

    for a, x, y, z in sample_stream(cfg, model.field, model.dim, 1, 3):
        xx = pairing(ip, x, x)
        if not x.is_zero:
            ok = imag_part(xx) == 0 and real_part(xx) > 0
            checks["positive"].sample(
                []
                if ok
                else [
                    Witness(
                        {"x": str(x), "(x,x)": format_scalar(xx)},
                        "(x,x) is not real positive for nonzero x",
                    )
                ]
            )
        checks["definite"].sample(
            []
            if (xx == 0) == x.is_zero
            else [
                Witness(
                    {"x": str(x), "(x,x)": format_scalar(xx)},
                    "(x,x) = 0 does not characterize x = 0",
                )
            ]
        )
        lhs = pairing(ip, x + y, z)
        rhs = pairing(ip, x, z) + pairing(ip, y, z)
        checks["additive"].sample(
            []
            if lhs == rhs
            else [
                Witness(
                    {"x": str(x), "y": str(y), "z": str(z)},
                    "additivity in the first slot fails",
                )
            ]
        )
        checks["conjugate_symmetric"].sample(
            []
            if pairing(ip, y, x) == conjugate(pairing(ip, x, y))
            else [
                Witness(
                    {"x": str(x), "y": str(y)},
                    "(y,x) differs from conj((x,y))",
                )
            ]
        )

        expected = a * pairing(ip, x, y)
        violations = []
        for e in essential_points(model, a, x, cfg.depth):
            got = pairing(ip, e, y)
            if got != expected:
                violations.append(
                    Witness(
                        {
                            "a": format_scalar(a),
                            "x": str(x),
                            "y": str(y),
                            "e": str(e),
                            "(e,y)": format_scalar(got),
                            "a*(x,y)": format_scalar(expected),
                        },
                        "(e,y) differs from a*(x,y) at an essential point",
                    )
                )
        checks["essential_scaling"].sample(violations)

        unit_set = product(model, one, x)
        bad = _ball_violation(ip, unit_set, as_real(xx), cfg.depth)
        checks["unit_ball_bound"].sample(
            []
            if bad is None
            else [
                Witness(
                    {
                        "x": str(x),
                        "u": str(bad),
                        "(u,u)": str(norm_sq(ip, bad)),
                        "(x,x)": format_scalar(xx),
                        "1 o x": describe_set(unit_set),
                    },
                    "element of 1 o x exceeds the length of x",
                )
            ]
        )

    return CheckReport(
        model.describe(),
        "hip",
        [checks[spec[0]].finish() for spec in _HIP_ITEMS],
    )


def check_lemma_34(
    model: ModelSpec,
    ip: InnerProductSpec | None,
    cfg: SampleConfig | None = None,
    hip_report: CheckReport | None = None,
) -> CheckReport:
    """Derived pairing identities; vacuous unless the hyperinner axioms held."""
    cfg = cfg or SampleConfig()
    if ip is None:
        return vacuous_report(model.describe(), "lemma_34", list(_LEMMA_34_ITEMS))
    hip_report = hip_report or check_hip_axioms(model, ip, cfg)
    precondition = hip_report.all_passed

    checks = {spec[0]: ItemCheck(*spec) for spec in _LEMMA_34_ITEMS}
    zero = model.zero()

    for a, x, y in sample_stream(cfg, model.field, model.dim, 1, 2):
        ok_zero = is_zero(pairing(ip, zero, x)) and is_zero(pairing(ip, x, zero))
        checks["zero_pairing"].sample(
            []
            if ok_zero
            else [Witness({"x": str(x)}, "pairing against 0 is not 0")]
        )

        base = pairing(ip, x, y)
        ok_neg = (
            pairing(ip, -x, y) == -base and pairing(ip, x, -y) == -base
        )
        checks["negation"].sample(
            []
            if ok_neg
            else [
                Witness(
                    {"x": str(x), "y": str(y), "(x,y)": format_scalar(base)},
                    "negation does not flip the pairing sign",
                )
            ]
        )

        expected = conjugate(a) * base
        violations = []
        for e in essential_points(model, a, y, cfg.depth):
            got = pairing(ip, x, e)
            if got != expected:
                violations.append(
                    Witness(
                        {
                            "a": format_scalar(a),
                            "x": str(x),
                            "y": str(y),
                            "e": str(e),
                            "(x,e)": format_scalar(got),
                            "conj(a)*(x,y)": format_scalar(expected),
                        },
                        "(x,e) differs from conj(a)*(x,y) at an essential point",
                    )
                )
        checks["conjugate_scaling"].sample(violations)

        bound = abs2(a) * norm_sq(ip, x)
        bad = _ball_violation(ip, product(model, a, x), bound, cfg.depth)
        checks["scaled_ball_bound"].sample(
            []
            if bad is None
            else [
                Witness(
                    {
                        "a": format_scalar(a),
                        "x": str(x),
                        "u": str(bad),
                        "(u,u)": str(norm_sq(ip, bad)),
                        "abs2(a)*(x,x)": str(bound),
                    },
                    "element of a o x exceeds the scaled length bound",
                )
            ]
        )

    return CheckReport(
        model.describe(),
        "lemma_34",
        [checks[spec[0]].finish(vacuous=not precondition) for spec in _LEMMA_34_ITEMS],
    )


def check_theorem_normal(
    model: ModelSpec,
    ip: InnerProductSpec | None,
    cfg: SampleConfig | None = None,
    hip_report: CheckReport | None = None,
) -> CheckReport:
    """Hyperinner axioms imply strong normality; report any contradiction.

    When the premise fails on samples the conclusions are vacuous and
    the implication is consistent by default. When the premise holds,
    every sampled essential set must be a singleton and the all-choices
    normality reading must pass; a violation is surfaced loudly.
    """
    cfg = cfg or SampleConfig()
    if ip is None:
        return vacuous_report(model.describe(), "theorem_normal", list(_THEOREM_ITEMS))
    hip_report = hip_report or check_hip_axioms(model, ip, cfg)
    hip_passed = hip_report.all_passed
    hip_samples = max((it.samples for it in hip_report.items), default=0)

    it_single = ItemCheck(*_THEOREM_ITEMS[0])
    singleton_violations = 0
    strong_ok = True
    strong_witnesses: list[Witness] = []
    if hip_passed:
        for a, x in sample_stream(cfg, model.field, model.dim, 1, 1):
            ess = essential_points(model, a, x, cfg.depth)
            if ess.singleton:
                it_single.sample([])
            else:
                singleton_violations += 1
                it_single.sample(
                    [
                        Witness(
                            {
                                "a": format_scalar(a),
                                "x": str(x),
                                "essential": str(ess),
                            },
                            "essential set is not a singleton",
                        )
                    ]
                )
        strong = check_strong_normal(model, cfg)
        strong_ok = strong.all_passed
        for it in strong.items:
            strong_witnesses.extend(it.witnesses)
        strong_item = CheckItem(
            _THEOREM_ITEMS[1][0],
            _THEOREM_ITEMS[1][1],
            "pass" if strong_ok else "fail",
            max(it.samples for it in strong.items),
            strong_witnesses[:MAX_WITNESSES],
        )
        single_item = it_single.finish()
    else:
        single_item = CheckItem(*_THEOREM_ITEMS[0], "vacuous", 0, [])
        strong_item = CheckItem(*_THEOREM_ITEMS[1], "vacuous", 0, [])

    contradiction = hip_passed and (singleton_violations > 0 or not strong_ok)
    if contradiction:
        consistent_item = CheckItem(
            _THEOREM_ITEMS[2][0],
            _THEOREM_ITEMS[2][1],
            "fail",
            hip_samples,
            [
                Witness(
                    {
                        "hyperinner_axioms": "pass",
                        "essential_singletons": "fail"
                        if singleton_violations
                        else "pass",
                        "strong_normality": "pass" if strong_ok else "fail",
                    },
                    "CONTRADICTION: the hyperinner axioms hold on these samples "
                    "but a conclusion fails",
                )
            ],
        )
    else:
        consistent_item = CheckItem(
            _THEOREM_ITEMS[2][0], _THEOREM_ITEMS[2][1], "pass", hip_samples, []
        )

    return CheckReport(
        model.describe(),
        "theorem_normal",
        [single_item, strong_item, consistent_item],
    )


def check_norm_props(
    model: ModelSpec,
    ip: InnerProductSpec | None,
    cfg: SampleConfig | None = None,
    hip_report: CheckReport | None = None,
) -> CheckReport:
    """Norm laws in squared form; vacuous unless the hyperinner axioms held.

    Unbounded suprema are always surfaced with status "unbounded", even
    under a failed precondition, so a divergent norm is never reported
    as a number (or silently hidden).
    """
    cfg = cfg or SampleConfig()
    if ip is None:
        return vacuous_report(model.describe(), "norm_props", list(_NORM_ITEMS))
    hip_report = hip_report or check_hip_axioms(model, ip, cfg)
    precondition = hip_report.all_passed

    checks = {spec[0]: ItemCheck(*spec) for spec in _NORM_ITEMS[:-1]}

    for a, x, y in sample_stream(cfg, model.field, model.dim, 1, 2):
        nsx = norm_sq(ip, x)
        nsy = norm_sq(ip, y)
        ok_def = nsx >= 0 and (nsx == 0) == x.is_zero
        checks["definite"].sample(
            []
            if ok_def
            else [
                Witness(
                    {"x": str(x), "nsq(x)": str(nsx)},
                    "squared norm is negative or does not characterize 0",
                )
            ]
        )

        pxy = pairing(ip, x, y)
        checks["cauchy_schwarz"].sample(
            []
            if abs2(pxy) <= nsx * nsy
            else [
                Witness(
                    {
                        "x": str(x),
                        "y": str(y),
                        "abs2((x,y))": str(abs2(pxy)),
                        "nsq(x)*nsq(y)": str(nsx * nsy),
                    },
                    "Cauchy-Schwarz fails in squared form",
                )
            ]
        )

        checks["triangle"].sample(
            []
            if leq_sqrt_product(real_part(pxy), nsx, nsy)
            else [
                Witness(
                    {
                        "x": str(x),
                        "y": str(y),
                        "re((x,y))": str(real_part(pxy)),
                        "nsq(x)*nsq(y)": str(nsx * nsy),
                    },
                    "triangle inequality fails in squared form",
                )
            ]
        )

        bound = abs2(a) * nsx
        violations = []
        for e in essential_points(model, a, x, cfg.depth):
            nse = norm_sq(ip, e)
            if nse != bound:
                violations.append(
                    Witness(
                        {
                            "a": format_scalar(a),
                            "x": str(x),
                            "e": str(e),
                            "nsq(e)": str(nse),
                            "abs2(a)*nsq(x)": str(bound),
                        },
                        "essential point length does not scale with abs2(a)",
                    )
                )
        checks["essential_scaling"].sample(violations)

        s = product(model, a, x)
        try:
            sup_val, sup_vec = _sup_norm_sq(ip, s)
        except UnboundedSupremumError as exc:
            checks["sup_scaling"].mark_unbounded(
                Witness(
                    {
                        "a": format_scalar(a),
                        "x": str(x),
                        "a o x": describe_set(s),
                    },
                    f"supremum of squared norms is unbounded: {exc}",
                )
            )
            continue
        checks["sup_scaling"].sample(
            []
            if sup_val == bound
            else [
                Witness(
                    {
                        "a": format_scalar(a),
                        "x": str(x),
                        "sup nsq": str(sup_val),
                        "at": str(sup_vec),
                        "abs2(a)*nsq(x)": str(bound),
                    },
                    "sup of squared norms over a o x differs from abs2(a)*nsq(x)",
                )
            ]
        )

    items = [checks[spec[0]].finish(vacuous=not precondition) for spec in _NORM_ITEMS[:-1]]
    by_id = {it.id: it for it in items}
    deps = [by_id["definite"], by_id["triangle"], by_id["sup_scaling"]]
    dep_statuses = [d.status for d in deps]
    if "unbounded" in dep_statuses:
        status = "unbounded"
    elif "fail" in dep_statuses:
        status = "fail"
    elif all(st == "pass" for st in dep_statuses):
        status = "pass"
    else:
        status = "vacuous"
    derived_witnesses: list[Witness] = []
    if status in ("fail", "unbounded"):
        for d in deps:
            derived_witnesses.extend(d.witnesses)
    items.append(
        CheckItem(
            _NORM_ITEMS[-1][0],
            _NORM_ITEMS[-1][1],
            status,
            max(d.samples for d in deps),
            derived_witnesses[:MAX_WITNESSES],
        )
    )
    return CheckReport(model.describe(), "norm_props", items)
