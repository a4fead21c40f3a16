"""Green's relations, their starred versions, regularity data, ordered idempotents and inverses."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable

from semigroups.results import PredicateResult, Witness
from semigroups.structures import OrderedSemigroup, StructureShapeError, SubsetMask, iter_bits

logger = logging.getLogger(__name__)

GREEN_KINDS = ("L", "R", "J", "H")

_IDEAL_FOR_KIND = {"L": "left", "R": "right", "J": "two_sided"}


@dataclass(frozen=True)
class Partition:
    """An equivalence on ``0..n-1``; each element carries the smallest member of its class."""

    labels: tuple[int, ...]

    def __post_init__(self):
        for x, label in enumerate(self.labels):
            if not 0 <= label <= x or self.labels[label] != label:
                raise ValueError(f"labels {self.labels} are not canonical")

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        first: dict[Hashable, int] = {}
        return cls(tuple(first.setdefault(label, x) for x, label in enumerate(labels)))

    @classmethod
    def from_key(cls, size: int, key: Callable[[int], Hashable]) -> "Partition":
        return cls.from_labels(key(x) for x in range(size))

    @classmethod
    def singletons(cls, size: int) -> "Partition":
        return cls(tuple(range(size)))

    @classmethod
    def one_class(cls, size: int) -> "Partition":
        return cls((0,) * size)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def class_count(self) -> int:
        return sum(1 for x, label in enumerate(self.labels) if x == label)

    def related(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def class_bits(self, a: int) -> int:
        label = self.labels[a]
        out = 0
        for x, other in enumerate(self.labels):
            if other == label:
                out |= 1 << x
        return out

    @property
    def classes(self) -> tuple[SubsetMask, ...]:
        return tuple(
            SubsetMask(self.class_bits(x), self.size) for x, label in enumerate(self.labels) if x == label
        )

    def meet(self, other: "Partition") -> "Partition":
        self._same_size(other)
        return Partition.from_key(self.size, lambda x: (self.labels[x], other.labels[x]))

    def refines(self, other: "Partition") -> bool:
        self._same_size(other)
        return all(other.labels[x] == other.labels[label] for x, label in enumerate(self.labels))

    def _same_size(self, other: "Partition") -> None:
        if other.size != self.size:
            raise StructureShapeError(f"partitions over {self.size} and {other.size} elements")

    def as_lists(self) -> list[list[int]]:
        return [list(mask) for mask in self.classes]

    def as_dict(self) -> dict:
        return {"kind": "partition", "classes": self.as_lists()}

    def __str__(self) -> str:
        return " | ".join(",".join(str(x) for x in block) for block in self.as_lists())


@dataclass(frozen=True)
class ElementRegularity:
    element: int
    regular: bool
    completely_regular: bool
    intra_regular: bool
    smallest_regular_power: int
    regular_power: int
    witness: int
    inverse: int

    def as_dict(self) -> dict:
        return {
            "element": self.element,
            "regular": self.regular,
            "completely_regular": self.completely_regular,
            "intra_regular": self.intra_regular,
            "smallest_regular_power": self.smallest_regular_power,
            "regular_power": self.regular_power,
            "witness": self.witness,
            "inverse": self.inverse,
        }


@dataclass(frozen=True)
class RegularityProfile:
    entries: tuple[ElementRegularity, ...]

    def __getitem__(self, a: int) -> ElementRegularity:
        return self.entries[a]

    def _mask(self, flag: str) -> SubsetMask:
        return SubsetMask.of(len(self.entries), (e.element for e in self.entries if getattr(e, flag)))

    @property
    def regular_elements(self) -> SubsetMask:
        return self._mask("regular")

    @property
    def completely_regular_elements(self) -> SubsetMask:
        return self._mask("completely_regular")

    @property
    def intra_regular_elements(self) -> SubsetMask:
        return self._mask("intra_regular")

    def as_dict(self) -> dict:
        return {"elements": [e.as_dict() for e in self.entries]}


def _first_mediator(S: OrderedSemigroup, target: int, value: Callable[[int], int]) -> int | None:
    up = S.up_masks[target]
    for x in S.elements:
        if up >> value(x) & 1:
            return x
    return None


def regular_mediator(S: OrderedSemigroup, a: int) -> int | None:
    """Smallest x with ``a ≤ a·x·a``."""
    return _first_mediator(S, a, lambda x: S.mul3(a, x, a))


@lru_cache(maxsize=4096)
def regularity_profile(S: OrderedSemigroup) -> RegularityProfile:
    entries = []
    for a in S.elements:
        aa = S.mul(a, a)
        regular = regular_mediator(S, a) is not None
        completely = _first_mediator(S, a, lambda x: S.mul3(aa, x, aa)) is not None
        intra = any(S.below(a, S.right_translates[S.mul(x, aa)]) for x in S.elements)
        for m in S.power_profiles[a].exponents:
            power = S.power(a, m)
            x = regular_mediator(S, power)
            if x is not None:
                break
        else:
            # an idempotent power always exists in a finite semigroup
            raise RuntimeError(f"no regular power found for element {a}")
        entries.append(
            ElementRegularity(
                element=a,
                regular=regular,
                completely_regular=completely,
                intra_regular=intra,
                smallest_regular_power=m,
                regular_power=power,
                witness=x,
                inverse=S.mul3(x, power, x),
            )
        )
    return RegularityProfile(tuple(entries))


@lru_cache(maxsize=4096)
def idempotent_bits(S: OrderedSemigroup) -> int:
    out = 0
    for e in S.elements:
        if S.leq[e][S.mul(e, e)]:
            out |= 1 << e
    return out


@lru_cache(maxsize=4096)
def inverse_bits(S: OrderedSemigroup) -> tuple[int, ...]:
    """``V≤(a)`` for every a, as bitmasks."""
    out = []
    for a in S.elements:
        bits = 0
        for b in S.elements:
            if S.leq[a][S.mul3(a, b, a)] and S.leq[b][S.mul3(b, a, b)]:
                bits |= 1 << b
        out.append(bits)
    return tuple(out)


def ordered_idempotents(S: OrderedSemigroup) -> SubsetMask:
    return SubsetMask(idempotent_bits(S), S.order)


def ordered_inverses(S: OrderedSemigroup, a: int) -> SubsetMask:
    if not 0 <= a < S.order:
        raise StructureShapeError(f"{a} is not an element of 0..{S.order - 1}")
    return SubsetMask(inverse_bits(S)[a], S.order)


def _check_kind(kind: str) -> None:
    if kind not in GREEN_KINDS:
        raise ValueError(f"unknown relation {kind!r}; expected one of {', '.join(GREEN_KINDS)}")


@lru_cache(maxsize=4096)
def green(S: OrderedSemigroup, kind: str) -> Partition:
    _check_kind(kind)
    if kind == "H":
        return green(S, "L").meet(green(S, "R"))
    masks = S.principal_masks[_IDEAL_FOR_KIND[kind]]
    return Partition.from_key(S.order, lambda x: masks[x])


@lru_cache(maxsize=4096)
def starred(S: OrderedSemigroup, kind: str) -> Partition:
    _check_kind(kind)
    if kind == "H":
        return starred(S, "L").meet(starred(S, "R"))
    base = green(S, kind)
    profile = regularity_profile(S)
    return Partition.from_key(S.order, lambda x: base.labels[profile[x].regular_power])


def is_rho_unique(S: OrderedSemigroup, partition: Partition, subset: SubsetMask) -> PredicateResult:
    """Whether all members of ``subset`` share one class of ``partition``."""
    if partition.size != S.order or subset.size != S.order:
        raise StructureShapeError("partition and subset must live on the structure's carrier")
    members = list(iter_bits(subset.bits))
    if not members:
        return PredicateResult.success()
    first = members[0]
    for other in members[1:]:
        if not partition.related(first, other):
            return PredicateResult.failure((first, other))
    return PredicateResult.success([Witness((first,))])
