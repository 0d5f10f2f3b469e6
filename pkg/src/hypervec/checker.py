"""Deterministic sampling, report types, and the suite runner.

All verdicts are computed in exact arithmetic; the only randomness is a
seeded SplitMix64 stream used to pick sample tuples, so two runs with
the same config produce byte-identical reports on any platform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator

from .scalars import FieldTag, GaussianRational, Scalar
from .vectors import Vector, make_vector, unit_vector, zero_vector

_MASK64 = (1 << 64) - 1

# Suite vocabulary; also the identifiers accepted by `check` directives.
SUITE_NAMES = (
    "wvs_axioms",
    "lemma_basic",
    "weak_normal",
    "strong_normal",
    "normal_equiv",
    "real_ip",
    "hip",
    "lemma_34",
    "theorem_normal",
    "norm_props",
)

# Per-item witness lists are truncated to this many entries, kept in
# evaluation order (forced degenerate tuples come first, so the classic
# counterexamples stay at the head).
MAX_WITNESSES = 5


class SplitMix64:
    """SplitMix64: the public 64-bit mixing generator.

    state' = state + 0x9E3779B97F4A7C15; output mixes the new state with
    two xor-shift-multiply rounds. Chosen because it is tiny, documented,
    and identical on every platform. Draws below a bound use modulo; the
    bias is negligible at our ranges and verdicts never depend on the
    distribution, only on determinism.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


@dataclass(frozen=True)
class SampleConfig:
    """Knobs for the deterministic sample stream.

    height bounds numerators in [-height, height] and denominators in
    [1, height]; depth bounds enumerations of infinite sets.
    """

    seed: int = 42
    samples: int = 500
    height: int = 10
    depth: int = 8

    def __post_init__(self):
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 bits")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if self.height < 1:
            raise ValueError("height must be positive")
        if self.depth < 1:
            raise ValueError("depth must be positive")


@dataclass
class Witness:
    """One concrete violation: named exact values plus the relation broken."""

    bindings: dict[str, str]
    relation: str

    def to_json(self) -> dict:
        return {"bindings": dict(self.bindings), "relation": self.relation}


@dataclass
class CheckItem:
    id: str
    anchor: str
    status: str  # pass | fail | vacuous | unbounded
    samples: int
    witnesses: list[Witness]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "samples": self.samples,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


@dataclass
class CheckReport:
    model: str
    suite: str
    items: list[CheckItem]

    @property
    def all_passed(self) -> bool:
        return all(item.status == "pass" for item in self.items)

    @property
    def clean(self) -> bool:
        """No item failed or hit an unbounded supremum."""
        return all(item.status not in ("fail", "unbounded") for item in self.items)

    def item(self, item_id: str) -> CheckItem:
        for it in self.items:
            if it.id == item_id:
                return it
        raise KeyError(item_id)

    def to_json(self) -> dict:
        return {"name": self.suite, "items": [it.to_json() for it in self.items]}


class ItemCheck:
    """Accumulates per-tuple verdicts for one report item.

    Call sample(violations) once per evaluated tuple (empty list means
    the tuple passed); mark_unbounded when the computation itself blows
    up instead of yielding a value. finish() resolves the status with
    precedence unbounded > vacuous > fail > pass; a vacuous finish drops
    ordinary witnesses but keeps unbounded ones.
    """

    def __init__(self, item_id: str, anchor: str):
        self.id = item_id
        self.anchor = anchor
        self.samples = 0
        self._witnesses: list[Witness] = []
        self._unbounded: list[Witness] = []
        self._seen: set[tuple] = set()

    def _add(self, into: list[Witness], witness: Witness):
        # distinct sample tuples can reproduce the same violation; keep one
        key = (tuple(sorted(witness.bindings.items())), witness.relation)
        if key not in self._seen:
            self._seen.add(key)
            into.append(witness)

    def sample(self, violations: list[Witness]):
        self.samples += 1
        for witness in violations:
            self._add(self._witnesses, witness)

    def mark_unbounded(self, witness: Witness):
        self.samples += 1
        self._add(self._unbounded, witness)

    def finish(self, vacuous: bool = False) -> CheckItem:
        if self._unbounded:
            status = "unbounded"
            witnesses = self._unbounded[:MAX_WITNESSES]
        elif vacuous or self.samples == 0:
            status = "vacuous"
            witnesses = []
        elif self._witnesses:
            status = "fail"
            witnesses = self._witnesses[:MAX_WITNESSES]
        else:
            status = "pass"
            witnesses = []
        return CheckItem(self.id, self.anchor, status, self.samples, witnesses)


def vacuous_report(
    model_desc: str, suite: str, items: list[tuple[str, str]]
) -> CheckReport:
    """A report whose every item is vacuous (failed precondition)."""
    return CheckReport(
        model_desc,
        suite,
        [CheckItem(i, anchor, "vacuous", 0, []) for i, anchor in items],
    )


def _rand_fraction(rng: SplitMix64, height: int) -> Fraction:
    num = rng.below(2 * height + 1) - height
    den = rng.below(height) + 1
    return Fraction(num, den)


def rand_scalar(rng: SplitMix64, field: FieldTag, height: int) -> Scalar:
    if field is FieldTag.Q:
        return _rand_fraction(rng, height)
    return GaussianRational(_rand_fraction(rng, height), _rand_fraction(rng, height))


def rand_vector(rng: SplitMix64, field: FieldTag, dim: int, height: int) -> Vector:
    return Vector(tuple(rand_scalar(rng, field, height) for _ in range(dim)))


def forced_scalars(field: FieldTag) -> list[Scalar]:
    if field is FieldTag.Q:
        return [Fraction(0), Fraction(1), Fraction(-1)]
    return [
        GaussianRational(0),
        GaussianRational(1),
        GaussianRational(-1),
        GaussianRational(0, 1),
        GaussianRational(1, 1),
    ]


def forced_vectors(field: FieldTag, dim: int) -> list[Vector]:
    e1 = unit_vector(field, dim)
    return [zero_vector(field, dim), e1, -e1]


def sample_stream(
    cfg: SampleConfig,
    field: FieldTag,
    dim: int,
    n_scalars: int,
    n_vectors: int,
) -> Iterator[tuple]:
    """Yield exactly cfg.samples flat tuples (scalars first, then vectors).

    A forced prefix runs through every combination of the degenerate
    scalars (0, 1, -1, and over Qi also i and 1+i) and vectors (zero,
    e1, -e1) so the classic corner cases are always exercised; the
    SplitMix64 tail fills the rest. Denominators are never zero.
    """
    count = 0
    slots: list[list] = [forced_scalars(field)] * n_scalars
    slots += [forced_vectors(field, dim)] * n_vectors
    if slots:
        indices = [0] * len(slots)
        while count < cfg.samples:
            yield tuple(slot[i] for slot, i in zip(slots, indices))
            count += 1
            pos = len(slots) - 1
            while pos >= 0:
                indices[pos] += 1
                if indices[pos] < len(slots[pos]):
                    break
                indices[pos] = 0
                pos -= 1
            if pos < 0:
                break
    rng = SplitMix64(cfg.seed)
    while count < cfg.samples:
        parts = [rand_scalar(rng, field, cfg.height) for _ in range(n_scalars)]
        parts += [rand_vector(rng, field, dim, cfg.height) for _ in range(n_vectors)]
        yield tuple(parts)
        count += 1


def run_suites(model, ip, cfg: SampleConfig, suites: list[str]) -> list[CheckReport]:
    """Run the named suites in order and return one report per suite.

    Suites whose precondition fails (complex field for real_ip, missing
    or failed hyperinner axioms for the derived suites) are reported
    with vacuous items, never silently skipped.
    """
    # imported here: these modules sit above this one in the layering
    from . import essential as ess
    from . import inner as inn
    from . import models as mdl

    for name in suites:
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite: {name!r}")

    hip_cache: list[CheckReport | None] = [None]

    def hip_report() -> CheckReport:
        if hip_cache[0] is None:
            hip_cache[0] = inn.check_hip_axioms(model, ip, cfg)
        return hip_cache[0]

    out: list[CheckReport] = []
    for name in suites:
        if name == "wvs_axioms":
            out.append(mdl.check_wvs_axioms(model, cfg))
        elif name == "lemma_basic":
            out.append(ess.check_lemma_basic(model, cfg))
        elif name == "weak_normal":
            out.append(ess.check_weak_normal(model, cfg))
        elif name == "strong_normal":
            out.append(ess.check_strong_normal(model, cfg))
        elif name == "normal_equiv":
            out.append(ess.check_normal_equivalence(model, cfg))
        elif name == "real_ip":
            out.append(inn.check_real_ip_axioms(model, ip, cfg))
        elif name == "hip":
            out.append(hip_report())
        elif name == "lemma_34":
            out.append(inn.check_lemma_34(model, ip, cfg, hip_report=hip_report()))
        elif name == "theorem_normal":
            out.append(
                inn.check_theorem_normal(model, ip, cfg, hip_report=hip_report())
            )
        elif name == "norm_props":
            out.append(inn.check_norm_props(model, ip, cfg, hip_report=hip_report()))
    return out


def report_document(model_desc: str, seed: int, reports: list[CheckReport]) -> dict:
    return {
        "model": model_desc,
        "seed": seed,
        "suites": [r.to_json() for r in reports],
    }


def render_json(document: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
