"""Built-in model lineup and its documented verdict table.

Five families over Q in dimension 2, paired with the plain dot product,
exercise every behavior the suites can report: the trivial family
passes everything, the zero-augmented and contracting-ray families
break only the sup-based scaling law, the expanding ray produces
genuinely unbounded suprema, and the sign-pair family separates the two
normality readings (the sumset reading passes while the all-choices
reading fails).

EXPECTED_VERDICTS is the frozen summary of what a default-configuration
run produces; tests cross-check it against live runs so the table can
never drift from the code.
"""

from __future__ import annotations

from fractions import Fraction

from .checker import CheckReport, SUITE_NAMES, SampleConfig, run_suites
from .inner import DotProduct, InnerProductSpec
from .models import (
    Geometric,
    ModelSpec,
    Sign,
    Trivial,
    ZeroAugmented,
)
from .scalars import FieldTag


def catalog_models(dim: int = 2) -> list[tuple[str, ModelSpec]]:
    """The five built-in families over Q, in documented order."""
    return [
        ("trivial", ModelSpec(FieldTag.Q, dim, Trivial())),
        ("zero_augmented", ModelSpec(FieldTag.Q, dim, ZeroAugmented())),
        ("geometric(1/2)", ModelSpec(FieldTag.Q, dim, Geometric(Fraction(1, 2)))),
        ("geometric(2)", ModelSpec(FieldTag.Q, dim, Geometric(Fraction(2)))),
        ("sign", ModelSpec(FieldTag.Q, dim, Sign())),
    ]


def suite_verdict(report: CheckReport) -> str:
    """One-word rollup of a report: unbounded > fail > vacuous > pass.

    A suite is vacuous only when every item is; a single live item makes
    the suite's verdict that of its worst live item.
    """
    statuses = [item.status for item in report.items]
    if "unbounded" in statuses:
        return "unbounded"
    if "fail" in statuses:
        return "fail"
    if statuses and all(s == "vacuous" for s in statuses):
        return "vacuous"
    return "pass"


_ALL_PASS = {name: "pass" for name in SUITE_NAMES}

EXPECTED_VERDICTS: dict[str, dict[str, str]] = {
    "trivial": dict(_ALL_PASS),
    "zero_augmented": {**_ALL_PASS, "real_ip": "fail"},
    "geometric(1/2)": {**_ALL_PASS, "real_ip": "fail"},
    "geometric(2)": {
        **_ALL_PASS,
        "real_ip": "unbounded",
        "hip": "fail",
        "lemma_34": "vacuous",
        "norm_props": "unbounded",
    },
    "sign": {
        **_ALL_PASS,
        "strong_normal": "fail",
        "normal_equiv": "fail",
        "real_ip": "fail",
        "hip": "fail",
        "lemma_34": "vacuous",
        "norm_props": "vacuous",
    },
}

# One-line context for the table; sign is the family where the two
# normality readings give different answers on the same samples.
CATALOG_NOTES: dict[str, str] = {
    "trivial": "singleton products; every suite passes",
    "zero_augmented": "products carry 0; sup scaling picks up a spurious 0",
    "geometric(1/2)": "contracting ray; sup may be a limit no element attains",
    "geometric(2)": "expanding ray; suprema genuinely unbounded",
    "sign": "two-element products; readings disagree on normality",
}


def run_catalog(
    cfg: SampleConfig | None = None,
    dim: int = 2,
    ip: InnerProductSpec | None = None,
) -> list[tuple[str, list[CheckReport]]]:
    """Run every suite on every catalog model; rows in catalog order."""
    cfg = cfg or SampleConfig()
    ip = ip or DotProduct()
    return [
        (name, run_suites(model, ip, cfg, list(SUITE_NAMES)))
        for name, model in catalog_models(dim)
    ]
