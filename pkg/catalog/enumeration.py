"""Exhaustive and random generation of finite ordered semigroups, with isomorphism rejection."""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

from django.conf import settings

from semigroups.structures import OrderedSemigroup, check_cap, discrete_order, iter_bits

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX = max(1, int(getattr(settings, "ORDSGP_EXHAUSTIVE_MAX", 4)))
CANONICAL_MAX = max(1, int(getattr(settings, "ORDSGP_CANONICAL_MAX", 6)))
RANDOM_MAX = max(1, int(getattr(settings, "ORDSGP_RANDOM_MAX", 8)))
RANDOM_ATTEMPTS = max(1, int(getattr(settings, "ORDSGP_RANDOM_ATTEMPTS", 2000)))
# seeds tried per requested sample before the nontrivial sampler settles for fewer distinct structures
SAMPLE_DRAW_FACTOR = 20
ENUMERATION_CEILING = 6

ORDER_MODES = ("all", "discrete")

Table = tuple[tuple[int, ...], ...]
Order = tuple[tuple[bool, ...], ...]
CanonicalKey = tuple[int, tuple[int, ...], tuple[int, ...]]


class SamplingBudgetExhausted(RuntimeError):
    """Raised when the random sampler runs out of attempts."""

    def __init__(self, order: int, attempts: int):
        self.order = order
        self.attempts = attempts
        super().__init__(f"no suitable ordered semigroup of order {order} after {attempts} attempts")


@dataclass(frozen=True)
class GenerationConfig:
    order: int
    up_to_iso: bool = False
    order_mode: str = "all"
    seed: int | None = None
    limit: int | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be at least 1 when given")
        if self.order_mode not in ORDER_MODES:
            raise ValueError(f"order mode must be one of {', '.join(ORDER_MODES)}")

    def as_dict(self) -> dict:
        return asdict(self)


# --- tables -------------------------------------------------------------------


def _associative_so_far(t: list[list[int]], a: int, b: int, c: int) -> bool:
    ab, bc = t[a][b], t[b][c]
    if ab < 0 or bc < 0:
        return True
    left, right = t[ab][c], t[a][bc]
    return left < 0 or right < 0 or left == right


def _consistent(t: list[list[int]], n: int, i: int, j: int) -> bool:
    """Check every triple that the freshly filled cell (i, j) makes fully evaluable."""
    for x in range(n):
        if not (_associative_so_far(t, i, j, x) and _associative_so_far(t, x, i, j)):
            return False
    for a in range(n):
        row = t[a]
        for b in range(n):
            if row[b] == i and not _associative_so_far(t, a, b, j):
                return False
            if t[b][a] == j and not _associative_so_far(t, i, b, a):
                return False
    return True


def enumerate_tables(n: int) -> Iterator[Table]:
    """Every associative table on ``0..n-1``, in row-major lexicographic order."""
    check_cap("exhaustive table enumeration", n, min(EXHAUSTIVE_MAX, ENUMERATION_CEILING))
    cells = [[-1] * n for _ in range(n)]
    total = n * n

    def fill(position: int) -> Iterator[Table]:
        if position == total:
            yield tuple(tuple(row) for row in cells)
            return
        i, j = divmod(position, n)
        for value in range(n):
            cells[i][j] = value
            if _consistent(cells, n, i, j):
                yield from fill(position + 1)
        cells[i][j] = -1

    yield from fill(0)


# --- orders -------------------------------------------------------------------


@lru_cache(maxsize=8)
def all_partial_orders(n: int) -> tuple[Order, ...]:
    """Every partial order on ``0..n-1``; the discrete order comes first."""
    check_cap("partial order enumeration", n, ENUMERATION_CEILING)
    pairs = list(combinations(range(n), 2))
    rel = [[i == j for j in range(n)] for i in range(n)]
    decided = [[i == j for j in range(n)] for i in range(n)]
    found: list[Order] = []

    def transitive_around(a: int, b: int) -> bool:
        for c in range(n):
            if c in (a, b) or not (decided[a][c] and decided[b][c]):
                continue
            for x, y, z in permutations((a, b, c)):
                if rel[x][y] and rel[y][z] and not rel[x][z]:
                    return False
        return True

    def place(k: int) -> None:
        if k == len(pairs):
            found.append(tuple(tuple(row) for row in rel))
            return
        a, b = pairs[k]
        decided[a][b] = decided[b][a] = True
        for choice in (0, 1, 2):
            rel[a][b], rel[b][a] = choice == 1, choice == 2
            if transitive_around(a, b):
                place(k + 1)
        rel[a][b] = rel[b][a] = False
        decided[a][b] = decided[b][a] = False

    place(0)
    logger.debug("%d partial orders on %d elements", len(found), n)
    return tuple(found)


def is_compatible(table: Table, leq: Order) -> bool:
    n = len(table)
    for a in range(n):
        for b in range(n):
            if a == b or not leq[a][b]:
                continue
            for x in range(n):
                if not leq[table[x][a]][table[x][b]] or not leq[table[a][x]][table[b][x]]:
                    return False
    return True


def enumerate_compatible_orders(table: Table) -> Iterator[Order]:
    table = tuple(tuple(row) for row in table)
    for leq in all_partial_orders(len(table)):
        if is_compatible(table, leq):
            yield leq


# --- structures ---------------------------------------------------------------


def enumerate_ordered_semigroups(config: GenerationConfig) -> Iterator[OrderedSemigroup]:
    """Tables in enumeration order, each followed by its compatible orders (discrete first)."""
    n = config.order
    if config.up_to_iso:
        check_cap("canonical form", n, CANONICAL_MAX)
    seen: set[CanonicalKey] = set()
    emitted = 0
    for table in enumerate_tables(n):
        orders = (discrete_order(n),) if config.order_mode == "discrete" else enumerate_compatible_orders(table)
        for leq in orders:
            structure = OrderedSemigroup(n, table, leq)
            if config.up_to_iso:
                key = canonical_form(structure)
                if key in seen:
                    continue
                seen.add(key)
            yield structure
            emitted += 1
            if config.limit is not None and emitted >= config.limit:
                return


def canonical_form(S: OrderedSemigroup) -> CanonicalKey:
    """Smallest (table, order) encoding over all relabellings; equal keys mean isomorphic ordered semigroups."""
    n = S.order
    check_cap("canonical form", n, CANONICAL_MAX)
    best = None
    for old_of_new in permutations(range(n)):
        new_of_old = [0] * n
        for new, old in enumerate(old_of_new):
            new_of_old[old] = new
        flat_table = tuple(new_of_old[S.table[old_of_new[u]][old_of_new[v]]] for u in range(n) for v in range(n))
        if best is not None and flat_table > best[1]:
            continue
        flat_order = tuple(int(S.leq[old_of_new[u]][old_of_new[v]]) for u in range(n) for v in range(n))
        candidate = (n, flat_table, flat_order)
        if best is None or candidate < best:
            best = candidate
    return best


# --- random sampling ----------------------------------------------------------


def derive_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def _random_table(n: int, rng: random.Random, node_budget: int) -> "Table | None":
    cells = [[-1] * n for _ in range(n)]
    total = n * n
    nodes = 0

    def fill(position: int) -> bool:
        nonlocal nodes
        if position == total:
            return True
        i, j = divmod(position, n)
        values = list(range(n))
        rng.shuffle(values)
        for value in values:
            nodes += 1
            if nodes > node_budget:
                break
            cells[i][j] = value
            if _consistent(cells, n, i, j) and fill(position + 1):
                return True
        cells[i][j] = -1
        return False

    if fill(0):
        return tuple(tuple(row) for row in cells)
    return None


def _close_with(table: Table, up: list[int], pair: tuple[int, int]) -> "list[int] | None":
    """Smallest compatible partial order containing ``up`` and ``pair``, or None if antisymmetry breaks."""
    n = len(table)
    up = list(up)
    pending = [pair]
    while pending:
        x, y = pending.pop()
        if up[x] >> y & 1:
            continue
        if up[y] >> x & 1:
            return None
        above_y = up[y]
        for u in [u for u in range(n) if up[u] >> x & 1]:
            fresh = above_y & ~up[u]
            if not fresh:
                continue
            for w in iter_bits(fresh):
                if up[w] >> u & 1:
                    return None
            up[u] |= fresh
            for w in iter_bits(fresh):
                for c in range(n):
                    pending.append((table[c][u], table[c][w]))
                    pending.append((table[u][c], table[w][c]))
    return up


def _random_compatible_order(table: Table, rng: random.Random) -> Order:
    n = len(table)
    up = [1 << i for i in range(n)]
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    rng.shuffle(pairs)
    for a, b in pairs:
        if up[a] >> b & 1 or up[b] >> a & 1 or rng.random() < 0.5:
            continue
        widened = _close_with(table, up, (a, b))
        if widened is not None:
            up = widened
    return tuple(tuple(bool(up[i] >> j & 1) for j in range(n)) for i in range(n))


def random_ordered_semigroup(
    n: int, seed: int, *, nontrivial_order: bool = False, attempts: int | None = None
) -> OrderedSemigroup:
    """Deterministic per seed. Tables come from a randomised backtracking search restarted on a node budget."""
    check_cap("random sampling", n, RANDOM_MAX)
    rng = random.Random(seed)
    budget = attempts or RANDOM_ATTEMPTS
    for _ in range(budget):
        table = _random_table(n, rng, node_budget=64 * n * n)
        if table is None:
            continue
        leq = _random_compatible_order(table, rng)
        if nontrivial_order and leq == discrete_order(n):
            continue
        return OrderedSemigroup(n, table, leq)
    raise SamplingBudgetExhausted(n, budget)


def sample_nontrivial_orders(n: int, count: int, seed: int) -> Iterator[OrderedSemigroup]:
    """Up to ``count`` pairwise distinct labelled structures with a nontrivial order, drawn from consecutive derived seeds."""
    seen: set[str] = set()
    draws = 0
    while len(seen) < count and draws < SAMPLE_DRAW_FACTOR * count:
        structure = random_ordered_semigroup(n, derive_seed(seed, draws), nontrivial_order=True)
        draws += 1
        if structure.key in seen:
            continue
        seen.add(structure.key)
        yield structure
    if len(seen) < count:
        logger.warning(
            "only %d distinct nontrivially ordered structures of order %d after %d draws (%d requested)",
            len(seen), n, draws, count,
        )


def random_ordered_semigroups(config: GenerationConfig) -> Iterator[OrderedSemigroup]:
    """``config.limit`` (default 1) seeded samples of order ``config.order``."""
    if config.seed is None:
        raise ValueError("random generation needs a seed")
    for index in range(config.limit or 1):
        structure = random_ordered_semigroup(config.order, derive_seed(config.seed, index))
        if config.order_mode == "discrete":
            structure = OrderedSemigroup(structure.order, structure.table, discrete_order(structure.order))
        yield structure
