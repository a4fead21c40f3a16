"""Finite ordered semigroups: representation, validation and the closure calculus.

Elements are the dense integers ``0..n-1``. Subsets travel as ``int`` bitmasks
inside the package and as :class:`SubsetMask` at the public boundary.

Every existential or universal quantifier over exponents is decided on the
finite power sequence of the element involved. The sequence ``a, a^2, ...``
is eventually periodic, so the distinct powers listed by :class:`PowerProfile`
exhaust every value ``a^m`` can take. Conditions that couple several power
sequences (``a^m`` next to ``b^m`` or ``(ba)^(m+1)``) are periodic in ``m``
from the largest index on, with a period dividing the lcm of all periods, so
``1..exponent_horizon`` covers them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import lcm
from typing import Iterable, Iterator, Sequence

logger = logging.getLogger(__name__)

IDEAL_KINDS = ("left", "right", "two_sided", "bi")

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class StructureShapeError(ValueError):
    """Raised when a table or order matrix has the wrong shape or an out-of-range entry."""


class SizeCapExceeded(ValueError):
    """Raised when an operation is asked to work beyond its configured size cap."""

    def __init__(self, what: str, order: int, cap: int):
        self.what = what
        self.order = order
        self.cap = cap
        super().__init__(f"{what} is capped at order {cap}, got {order}")


class InvalidStructureError(ValueError):
    """Raised when a table/order pair violates an ordered-semigroup axiom."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.summary())


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(elements: Iterable[int]) -> int:
    bits = 0
    for x in elements:
        bits |= 1 << x
    return bits


def check_cap(what: str, order: int, cap: int) -> None:
    if order > cap:
        raise SizeCapExceeded(what, order, cap)


@dataclass(frozen=True)
class SubsetMask:
    """A subset of the carrier ``{0..size-1}``."""

    bits: int
    size: int

    def __post_init__(self):
        if self.size < 1 or self.bits < 0 or self.bits >> self.size:
            raise StructureShapeError(f"mask {self.bits:#b} does not fit a carrier of size {self.size}")

    @classmethod
    def of(cls, size: int, elements: Iterable[int]) -> "SubsetMask":
        return cls(bits_of(elements), size)

    @classmethod
    def full(cls, size: int) -> "SubsetMask":
        return cls((1 << size) - 1, size)

    @classmethod
    def empty(cls, size: int) -> "SubsetMask":
        return cls(0, size)

    def _same_carrier(self, other: "SubsetMask") -> None:
        if other.size != self.size:
            raise StructureShapeError(f"carrier sizes differ: {self.size} vs {other.size}")

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < self.size and bool(self.bits >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __or__(self, other: "SubsetMask") -> "SubsetMask":
        self._same_carrier(other)
        return SubsetMask(self.bits | other.bits, self.size)

    def __and__(self, other: "SubsetMask") -> "SubsetMask":
        self._same_carrier(other)
        return SubsetMask(self.bits & other.bits, self.size)

    def issubset(self, other: "SubsetMask") -> bool:
        self._same_carrier(other)
        return self.bits & ~other.bits == 0

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self) + "}"


@dataclass(frozen=True)
class PowerProfile:
    element: int
    index: int
    period: int
    distinct_powers: tuple[int, ...]

    @property
    def exponents(self) -> range:
        return range(1, self.index + self.period)

    def power(self, m: int) -> int:
        if m < 1:
            raise ValueError("exponents start at 1")
        if m >= self.index + self.period:
            m = self.index + (m - self.index) % self.period
        return self.distinct_powers[m - 1]

    def as_dict(self) -> dict:
        return {
            "element": self.element,
            "index": self.index,
            "period": self.period,
            "distinct_powers": list(self.distinct_powers),
        }


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    detail: str

    def as_dict(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness), "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the axiom check. One violation per failing axiom, first witness in lexicographic order."""

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def axioms(self) -> tuple[str, ...]:
        return tuple(v.axiom for v in self.violations)

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.axiom} at {v.witness}: {v.detail}" for v in self.violations)

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.as_dict() for v in self.violations]}


@dataclass(frozen=True)
class OrderedSemigroup:
    """A multiplication table with a compatible partial order.

    Build instances through :func:`validate` unless the data is already known
    to satisfy the axioms (enumeration output, induced substructures).
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]

    @classmethod
    def from_rows(cls, table: Sequence[Sequence[int]], leq: Sequence[Sequence[bool]]) -> "OrderedSemigroup":
        rows, order_rows = _normalise(table, leq)
        return cls(len(rows), rows, order_rows)

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def full_bits(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        return tuple(bits_of(x for x in self.elements if self.leq[x][a]) for a in self.elements)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        return tuple(bits_of(y for y in self.elements if self.leq[a][y]) for a in self.elements)

    @cached_property
    def left_translates(self) -> tuple[int, ...]:
        """``S·a`` for every a."""
        return tuple(bits_of(self.table[x][a] for x in self.elements) for a in self.elements)

    @cached_property
    def right_translates(self) -> tuple[int, ...]:
        """``a·S`` for every a."""
        return tuple(bits_of(self.table[a][x] for x in self.elements) for a in self.elements)

    @cached_property
    def is_discrete(self) -> bool:
        return all(self.leq[a][b] == (a == b) for a in self.elements for b in self.elements)

    @cached_property
    def key(self) -> str:
        flat = "".join(_DIGITS[v] for row in self.table for v in row)
        order_bits = "".join("1" if v else "0" for row in self.leq for v in row)
        return f"{self.order}:{flat}:{order_bits}"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def mul3(self, a: int, b: int, c: int) -> int:
        return self.table[self.table[a][b]][c]

    def closure(self, bits: int) -> int:
        out = 0
        for a in iter_bits(bits):
            out |= self.down_masks[a]
        return out

    def product(self, left: int, right: int) -> int:
        out = 0
        for a in iter_bits(left):
            row = self.table[a]
            for b in iter_bits(right):
                out |= 1 << row[b]
        return out

    def below(self, x: int, bits: int) -> bool:
        """Whether ``x ∈ (A]`` for the set A given by ``bits``."""
        return bool(self.up_masks[x] & bits)

    def is_closed(self, bits: int) -> bool:
        return self.product(bits, bits) & ~bits == 0

    def is_down_closed(self, bits: int) -> bool:
        return self.closure(bits) == bits

    @cached_property
    def power_profiles(self) -> tuple[PowerProfile, ...]:
        return tuple(_walk_powers(self.table, a) for a in self.elements)

    def power(self, a: int, m: int) -> int:
        return self.power_profiles[a].power(m)

    @cached_property
    def exponent_horizon(self) -> int:
        profiles = self.power_profiles
        return max(p.index for p in profiles) + lcm(*(p.period for p in profiles)) - 1

    @cached_property
    def principal_masks(self) -> dict[str, tuple[int, ...]]:
        full = self.full_bits
        masks: dict[str, list[int]] = {kind: [] for kind in IDEAL_KINDS}
        for a in self.elements:
            point = 1 << a
            sa = self.left_translates[a]
            as_ = self.right_translates[a]
            masks["left"].append(self.closure(point | sa))
            masks["right"].append(self.closure(point | as_))
            masks["two_sided"].append(self.closure(point | sa | as_ | self.product(sa, full)))
            masks["bi"].append(self.closure(point | self.product(as_, 1 << a)))
        return {kind: tuple(values) for kind, values in masks.items()}

    def substructure(self, bits: int) -> "OrderedSemigroup":
        """The induced ordered subsemigroup on a nonempty product-closed subset, relabelled in increasing order."""
        if not bits or bits & ~self.full_bits:
            raise StructureShapeError("substructure needs a nonempty subset of the carrier")
        if not self.is_closed(bits):
            raise StructureShapeError(f"subset {bits:#b} is not closed under the product")
        members = tuple(iter_bits(bits))
        index = {x: i for i, x in enumerate(members)}
        table = [[index[self.table[x][y]] for y in members] for x in members]
        leq = [[self.leq[x][y] for y in members] for x in members]
        return validate(table, leq, strict=True)

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "leq": [list(row) for row in self.leq],
        }


def _walk_powers(table: tuple[tuple[int, ...], ...], a: int) -> PowerProfile:
    seen: dict[int, int] = {}
    powers: list[int] = []
    current, exponent = a, 1
    while current not in seen:
        seen[current] = exponent
        powers.append(current)
        current = table[current][a]
        exponent += 1
    index = seen[current]
    return PowerProfile(element=a, index=index, period=exponent - index, distinct_powers=tuple(powers))


def _normalise(table, leq) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[bool, ...], ...]]:
    if not isinstance(table, (list, tuple)) or not table:
        raise StructureShapeError("the carrier must have at least one element")
    n = len(table)
    rows = []
    for i, row in enumerate(table):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise StructureShapeError(f"table row {i} must have {n} entries")
        for j, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < n:
                raise StructureShapeError(f"table entry ({i},{j}) = {value!r} is not an element of 0..{n - 1}")
        rows.append(tuple(row))
    if not isinstance(leq, (list, tuple)) or len(leq) != n:
        raise StructureShapeError(f"order matrix must have {n} rows")
    order_rows = []
    for i, row in enumerate(leq):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise StructureShapeError(f"order row {i} must have {n} entries")
        for j, value in enumerate(row):
            if value not in (True, False):
                raise StructureShapeError(f"order entry ({i},{j}) = {value!r} is not boolean")
        order_rows.append(tuple(bool(v) for v in row))
    return tuple(rows), tuple(order_rows)


def inspect_axioms(table: Sequence[Sequence[int]], leq: Sequence[Sequence[bool]]) -> ValidationReport:
    rows, order = _normalise(table, leq)
    n = len(rows)
    found: dict[str, Violation] = {}

    def record(axiom: str, witness: tuple[int, ...], detail: str) -> None:
        found.setdefault(axiom, Violation(axiom, witness, detail))

    for a, b, c in product(range(n), repeat=3):
        left, right = rows[rows[a][b]][c], rows[a][rows[b][c]]
        if left != right:
            record("associativity", (a, b, c), f"({a}·{b})·{c} = {left} but {a}·({b}·{c}) = {right}")
            break

    for a in range(n):
        if not order[a][a]:
            record("reflexivity", (a,), f"{a} ≤ {a} is missing")
            break

    for a in range(n):
        for b in range(a + 1, n):
            if order[a][b] and order[b][a]:
                record("antisymmetry", (a, b), f"{a} ≤ {b} and {b} ≤ {a}")

    for a, b, c in product(range(n), repeat=3):
        if order[a][b] and order[b][c] and not order[a][c]:
            record("transitivity", (a, b, c), f"{a} ≤ {b} ≤ {c} but not {a} ≤ {c}")
            break

    for a, b, x in product(range(n), repeat=3):
        if not order[a][b]:
            continue
        if not order[rows[x][a]][rows[x][b]]:
            record(
                "left-compatibility",
                (a, b, x),
                f"{a} ≤ {b} but {x}·{a} = {rows[x][a]} is not below {x}·{b} = {rows[x][b]}",
            )
        if not order[rows[a][x]][rows[b][x]]:
            record(
                "right-compatibility",
                (a, b, x),
                f"{a} ≤ {b} but {a}·{x} = {rows[a][x]} is not below {b}·{x} = {rows[b][x]}",
            )

    ordering = ("associativity", "reflexivity", "antisymmetry", "transitivity", "left-compatibility", "right-compatibility")
    return ValidationReport(tuple(found[name] for name in ordering if name in found))


def validate(table, leq, *, strict: bool = False) -> "OrderedSemigroup | ValidationReport":
    """Return the structure when every axiom holds, otherwise the violation report.

    Shape problems raise :class:`StructureShapeError`. With ``strict=True`` a
    failing report is raised as :class:`InvalidStructureError` instead of returned.
    """
    report = inspect_axioms(table, leq)
    if not report.ok:
        logger.debug("structure rejected: %s", report.summary())
        if strict:
            raise InvalidStructureError(report)
        return report
    return OrderedSemigroup.from_rows(table, leq)


def discrete_order(n: int) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(i == j for j in range(n)) for i in range(n))


def _as_bits(S: OrderedSemigroup, subset: SubsetMask) -> int:
    if subset.size != S.order:
        raise StructureShapeError(f"mask over {subset.size} elements used with a structure of order {S.order}")
    return subset.bits


def downward_closure(S: OrderedSemigroup, subset: SubsetMask) -> SubsetMask:
    return SubsetMask(S.closure(_as_bits(S, subset)), S.order)


def subset_product(S: OrderedSemigroup, left: SubsetMask, right: SubsetMask) -> SubsetMask:
    """``{a·b : a ∈ A, b ∈ B}``; not downward closed."""
    return SubsetMask(S.product(_as_bits(S, left), _as_bits(S, right)), S.order)


def principal_ideal(S: OrderedSemigroup, a: int, kind: str) -> SubsetMask:
    if kind not in IDEAL_KINDS:
        raise ValueError(f"unknown ideal kind {kind!r}; expected one of {', '.join(IDEAL_KINDS)}")
    if not 0 <= a < S.order:
        raise StructureShapeError(f"{a} is not an element of 0..{S.order - 1}")
    return SubsetMask(S.principal_masks[kind][a], S.order)


def power_profile(S: OrderedSemigroup, a: int) -> PowerProfile:
    if not 0 <= a < S.order:
        raise StructureShapeError(f"{a} is not an element of 0..{S.order - 1}")
    return S.power_profiles[a]
