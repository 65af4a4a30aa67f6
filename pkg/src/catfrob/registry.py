"""Named examples and the suite outcomes expected of them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebras import HopfAlgebraData, graded_nilpotent_algebra, group_algebra, sweedler_algebra
from .categories import FINSET, FINVECT, GRVECT, Category

PASS = "pass"
MEASURED = "measured"

SUITES = ("hopf-axioms", "monad", "hopf-lemma", "bihopf", "frobenius-pipeline", "lindist", "right-variants")


def refuted(law: str) -> str:
    return f"refuted:{law}"


@dataclass(frozen=True)
class ExampleDescriptor:
    name: str
    category: Category
    generator: Callable[[], HopfAlgebraData]
    description: str
    expected: dict = field(default_factory=dict)

    def __post_init__(self):
        unknown = set(self.expected) - set(SUITES)
        if unknown:
            raise ValueError(f"{self.name}: unknown suites {sorted(unknown)}")


def _all(outcome: str = PASS, **overrides) -> dict:
    out = {s: outcome for s in SUITES}
    out.update({k.replace("_", "-"): v for k, v in overrides.items()})
    return out


_EXAMPLES = (
    ExampleDescriptor("trivial", FINVECT, lambda: group_algebra(1), "the one-dimensional Hopf algebra; T is the identity",
                      _all()),
    ExampleDescriptor("kz2", FINVECT, lambda: group_algebra(2), "group algebra of the cyclic group of order 2",
                      _all()),
    ExampleDescriptor("kz3", FINVECT, lambda: group_algebra(3), "group algebra of the cyclic group of order 3",
                      _all()),
    ExampleDescriptor("sweedler", FINVECT, sweedler_algebra, "Sweedler's four-dimensional Hopf algebra",
                      _all()),
    ExampleDescriptor("graded-nilpotent", GRVECT, graded_nilpotent_algebra,
                      "k[x]/(x^2) with x odd and primitive, in graded spaces",
                      _all(frobenius_pipeline=refuted("stage.frobenius-monoid"),
                           right_variants=refuted("right-variant.datum"))),
    ExampleDescriptor("finset-z2", FINSET, lambda: group_algebra(2, FINSET), "the group Z2 in finite sets",
                      {"hopf-axioms": PASS, "monad": PASS, "hopf-lemma": PASS,
                       "bihopf": refuted("comonad.cofusion.left"),
                       "frobenius-pipeline": refuted("stage.frobenius-monoid")}),
)

EXAMPLES = {e.name: e for e in _EXAMPLES}


def list_examples() -> list[ExampleDescriptor]:
    return list(_EXAMPLES)


def get_example(name: str) -> ExampleDescriptor:
    try:
        return EXAMPLES[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}") from None
