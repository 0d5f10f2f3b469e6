"""
Auditing the pairing laws
=========================

Two axiom packages are checked against each model. The sup-based
package wants sup{(z, y) : z in a o x} to equal a(x, y); the pointwise
package wants (e, y) = a(x, y) at every essential point plus a unit
ball bound. Neither implies the other on these set-valued products.
"""

from fractions import Fraction

from hypervec import (
    DotProduct,
    FieldTag,
    Geometric,
    ModelSpec,
    Sign,
    Trivial,
    ZeroAugmented,
    check_hip_axioms,
    check_real_ip_axioms,
)

dot = DotProduct()
models = [
    ("trivial", ModelSpec(FieldTag.Q, 2, Trivial())),
    ("zero_augmented", ModelSpec(FieldTag.Q, 2, ZeroAugmented())),
    ("geometric(1/2)", ModelSpec(FieldTag.Q, 2, Geometric(Fraction(1, 2)))),
    ("geometric(2)", ModelSpec(FieldTag.Q, 2, Geometric(Fraction(2)))),
    ("sign", ModelSpec(FieldTag.Q, 2, Sign())),
]


def show(report):
    worst = [i for i in report.items if i.status != "pass"]
    if not worst:
        print("    all items pass")
        return
    for item in worst:
        print(f"    [{item.status}] {item.id}")
        if item.witnesses:
            w = item.witnesses[0]
            pairs = "  ".join(f"{k}={v}" for k, v in w.bindings.items())
            print(f"        {pairs}")


for name, model in models:
    print(name)
    print("  sup-based package:")
    show(check_real_ip_axioms(model, dot))
    print("  pointwise package:")
    show(check_hip_axioms(model, dot))
    print()

# the interesting cells:
#   zero_augmented breaks only the sup law (the padded 0 wins the sup
#   whenever a(x,y) < 0) yet satisfies the pointwise package
#   geometric(2) satisfies the essential-point law but its unit ball
#   1 o x contains 2x, which is too long
#   sign breaks the pointwise law at the mirrored essential point -ax
