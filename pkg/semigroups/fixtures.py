"""Named two-element (and trivial) ordered semigroups used across the test suites."""

from __future__ import annotations

from semigroups.structures import OrderedSemigroup, discrete_order, validate

T1 = validate([[0]], discrete_order(1), strict=True)

# x·y = x
LZ2 = validate([[0, 0], [1, 1]], discrete_order(2), strict=True)

# x·y = y
RZ2 = validate([[0, 1], [0, 1]], discrete_order(2), strict=True)

# x·y = min(x, y) with 0 ≤ 1
SL2 = validate([[0, 0], [0, 1]], [[True, True], [False, True]], strict=True)

# every product is 0
N2 = validate([[0, 0], [0, 0]], discrete_order(2), strict=True)

FIXTURES: dict[str, OrderedSemigroup] = {
    "T1": T1,
    "LZ2": LZ2,
    "RZ2": RZ2,
    "SL2": SL2,
    "N2": N2,
}
