from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Witness:
    """Why one instance of a quantified formula holds: its inputs, the exponent used and the mediating elements."""

    inputs: tuple[int, ...]
    exponent: int | None = None
    mediators: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        data: dict[str, Any] = {"inputs": list(self.inputs)}
        if self.exponent is not None:
            data["exponent"] = self.exponent
        if self.mediators:
            data["mediators"] = list(self.mediators)
        return data


@dataclass(frozen=True)
class SubsemigroupWitness:
    subset: int
    exponents: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "kind": "subsemigroup",
            "members": [x for x in range(len(self.exponents)) if self.subset >> x & 1],
            "exponents": list(self.exponents),
        }


@dataclass(frozen=True)
class NilExtensionWitness:
    kernel: int
    exponents: tuple[int, ...]
    tag: str

    def as_dict(self) -> dict:
        return {
            "kind": "nil-extension",
            "kernel": [x for x in range(len(self.exponents)) if self.kernel >> x & 1],
            "exponents": list(self.exponents),
            "tag": self.tag,
        }


@dataclass(frozen=True)
class PredicateResult:
    """Truth value of a formula plus its evidence.

    ``counterexample`` is ``None`` exactly when the formula holds. A failed
    search over subsets or partitions reports the empty tuple, since no single
    input is to blame.
    """

    holds: bool
    witnesses: tuple[Witness, ...] = ()
    counterexample: tuple[int, ...] | None = None
    certificate: Any = None

    def __post_init__(self):
        if self.holds != (self.counterexample is None):
            raise ValueError("a result holds exactly when it has no counterexample")

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def success(cls, witnesses=(), certificate=None) -> "PredicateResult":
        return cls(True, tuple(witnesses), None, certificate)

    @classmethod
    def failure(cls, counterexample=(), witnesses=(), certificate=None) -> "PredicateResult":
        return cls(False, tuple(witnesses), tuple(counterexample), certificate)

    def as_dict(self) -> dict:
        data: dict[str, Any] = {"holds": self.holds}
        if self.counterexample is not None:
            data["counterexample"] = list(self.counterexample)
        if self.witnesses:
            data["witnesses"] = [w.as_dict() for w in self.witnesses]
        if self.certificate is not None:
            data["certificate"] = self.certificate.as_dict()
        return data


def conjunction(*results: PredicateResult) -> PredicateResult:
    """First failing result, or the last one when all hold."""
    for result in results:
        if not result.holds:
            return result
    return results[-1]


@dataclass(frozen=True)
class GatedConditions:
    """A condition battery together with the hypotheses under which its members are claimed equivalent."""

    hypothesis: tuple[tuple[str, PredicateResult], ...]
    conditions: tuple[PredicateResult, ...]

    @property
    def hypothesis_holds(self) -> bool:
        return all(result.holds for _, result in self.hypothesis)
