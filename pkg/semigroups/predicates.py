"""Structure-level properties of ordered semigroups and the condition batteries built from them.

Exponent quantifiers are bounded by power profiles (see ``semigroups.structures``).
Every evaluator walks its inputs in lexicographic order, records the smallest
exponent and the smallest mediating elements, and stops at the first
counterexample.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable

from django.conf import settings

from semigroups.relations import (
    green,
    idempotent_bits,
    inverse_bits,
    is_rho_unique,
    regularity_profile,
    starred,
)
from semigroups.results import (
    NilExtensionWitness,
    PredicateResult,
    SubsemigroupWitness,
    Witness,
    conjunction,
)
from semigroups.structures import OrderedSemigroup, SubsetMask, check_cap, iter_bits

logger = logging.getLogger(__name__)

SUBSET_SEARCH_MAX = max(1, int(getattr(settings, "ORDSGP_SUBSET_SEARCH_MAX", 12)))

KERNEL_TAGS = ("left_simple", "right_simple", "t_simple", "simple")

Search = Callable[..., "tuple[int | None, tuple[int, ...]] | None"]


class UnknownPredicateError(KeyError):
    """Raised when a predicate name is not part of the public vocabulary."""


# --- quantifier helpers -------------------------------------------------------


def _forall(inputs: Iterable[tuple[int, ...]], search: Search) -> PredicateResult:
    witnesses = []
    for args in inputs:
        found = search(*args)
        if found is None:
            return PredicateResult.failure(args)
        exponent, mediators = found
        witnesses.append(Witness(tuple(args), exponent, mediators))
    return PredicateResult.success(witnesses)


def _elements(S: OrderedSemigroup) -> Iterable[tuple[int]]:
    return ((a,) for a in S.elements)


def _pairs(S: OrderedSemigroup) -> Iterable[tuple[int, int]]:
    return product(S.elements, repeat=2)


def _idempotent_pairs(S: OrderedSemigroup) -> list[tuple[int, int]]:
    idempotents = list(iter_bits(idempotent_bits(S)))
    return list(product(idempotents, repeat=2))


def _smallest(exponents: Iterable[int], probe: Callable[[int], "tuple[int, ...] | None"]):
    for m in exponents:
        mediators = probe(m)
        if mediators is not None:
            return m, mediators
    return None


def _plain(mediators: "tuple[int, ...] | None"):
    return None if mediators is None else (None, mediators)


def _exponents(S: OrderedSemigroup, a: int) -> range:
    return S.power_profiles[a].exponents


def _horizon(S: OrderedSemigroup) -> range:
    return range(1, S.exponent_horizon + 1)


def _between(S: OrderedSemigroup, target: int, left: int, right: int) -> "tuple[int] | None":
    """Smallest x with ``target ≤ left·x·right``."""
    up = S.up_masks[target]
    row = S.table[left]
    for x in S.elements:
        if up >> S.table[row[x]][right] & 1:
            return (x,)
    return None


def _before(S: OrderedSemigroup, target: int, right: int) -> "tuple[int] | None":
    """Smallest x with ``target ≤ x·right``."""
    up = S.up_masks[target]
    for x in S.elements:
        if up >> S.table[x][right] & 1:
            return (x,)
    return None


def _after(S: OrderedSemigroup, target: int, left: int) -> "tuple[int] | None":
    """Smallest x with ``target ≤ left·x``."""
    up = S.up_masks[target]
    row = S.table[left]
    for x in S.elements:
        if up >> row[x] & 1:
            return (x,)
    return None


def _around(S: OrderedSemigroup, target: int, middle: int) -> "tuple[int, int] | None":
    """Lexicographically smallest (x, y) with ``target ≤ x·middle·y``."""
    up = S.up_masks[target]
    for x in S.elements:
        row = S.table[S.table[x][middle]]
        for y in S.elements:
            if up >> row[y] & 1:
                return (x, y)
    return None


# --- the base vocabulary ------------------------------------------------------


def _regular(S):
    return _forall(_elements(S), lambda a: _plain(_between(S, a, a, a)))


def _completely_regular(S):
    def search(a):
        aa = S.mul(a, a)
        return _plain(_between(S, a, aa, aa))

    return _forall(_elements(S), search)


def _intra_regular(S):
    return _forall(_elements(S), lambda a: _plain(_around(S, a, S.mul(a, a))))


def _pi_regular(S):
    def search(a):
        return _smallest(_exponents(S, a), lambda m: _between(S, S.power(a, m), S.power(a, m), S.power(a, m)))

    return _forall(_elements(S), search)


def _completely_pi_regular(S):
    def probe(a, m):
        square = S.power(a, 2 * m)
        return _between(S, S.power(a, m), square, square)

    return _forall(_elements(S), lambda a: _smallest(_exponents(S, a), lambda m: probe(a, m)))


def _left_pi_regular(S):
    def search(a):
        return _smallest(_exponents(S, a), lambda m: _before(S, S.power(a, m), S.power(a, 2 * m)))

    return _forall(_elements(S), search)


def _right_pi_regular(S):
    def search(a):
        return _smallest(_exponents(S, a), lambda m: _after(S, S.power(a, m), S.power(a, 2 * m)))

    return _forall(_elements(S), search)


def _covers(S: OrderedSemigroup, bits: int) -> bool:
    return S.closure(bits) == S.full_bits


def _left_simple(S):
    return _forall(_elements(S), lambda a: (None, ()) if _covers(S, S.left_translates[a]) else None)


def _right_simple(S):
    return _forall(_elements(S), lambda a: (None, ()) if _covers(S, S.right_translates[a]) else None)


def _simple(S):
    def search(a):
        return (None, ()) if _covers(S, S.product(S.left_translates[a], S.full_bits)) else None

    return _forall(_elements(S), search)


def _left_archimedean(S):
    return _forall(_pairs(S), lambda a, b: _smallest(_exponents(S, a), lambda n: _before(S, S.power(a, n), b)))


def _right_archimedean(S):
    return _forall(_pairs(S), lambda a, b: _smallest(_exponents(S, a), lambda n: _after(S, S.power(a, n), b)))


def _archimedean(S):
    return _forall(_pairs(S), lambda a, b: _smallest(_exponents(S, a), lambda n: _around(S, S.power(a, n), b)))


def _weakly_commutative(S):
    def search(a, b):
        ab = S.mul(a, b)
        return _smallest(_exponents(S, ab), lambda n: _between(S, S.power(ab, n), b, a))

    return _forall(_pairs(S), search)


def _right_weakly_commutative(S):
    def search(a, b):
        ab = S.mul(a, b)
        return _smallest(_exponents(S, ab), lambda n: _before(S, S.power(ab, n), a))

    return _forall(_pairs(S), search)


def _left_weakly_commutative(S):
    def search(a, b):
        ab = S.mul(a, b)
        return _smallest(_exponents(S, ab), lambda n: _after(S, S.power(ab, n), b))

    return _forall(_pairs(S), search)


def _t_simple(S):
    return conjunction(structure_predicate(S, "left-simple"), structure_predicate(S, "right-simple"))


_BASE = {
    "regular": _regular,
    "completely-regular": _completely_regular,
    "intra-regular": _intra_regular,
    "pi-regular": _pi_regular,
    "completely-pi-regular": _completely_pi_regular,
    "left-pi-regular": _left_pi_regular,
    "right-pi-regular": _right_pi_regular,
    "left-simple": _left_simple,
    "right-simple": _right_simple,
    "simple": _simple,
    "t-simple": _t_simple,
    "left-archimedean": _left_archimedean,
    "right-archimedean": _right_archimedean,
    "archimedean": _archimedean,
    "left-weakly-commutative": _left_weakly_commutative,
    "right-weakly-commutative": _right_weakly_commutative,
    "weakly-commutative": _weakly_commutative,
}


def normalise_name(name: str) -> str:
    return name.strip().lower().replace("_", "-")


@lru_cache(maxsize=16384)
def structure_predicate(S: OrderedSemigroup, name: str) -> PredicateResult:
    key = normalise_name(name)
    evaluator = _BASE.get(key) or _COMPOSITE.get(key)
    if evaluator is None:
        raise UnknownPredicateError(name)
    return evaluator(S)


def _pi_regular_of(S: OrderedSemigroup) -> PredicateResult:
    return structure_predicate(S, "pi-regular")


# --- definition-level searches ------------------------------------------------


@lru_cache(maxsize=16)
def _subsets_by_size(n: int) -> tuple[int, ...]:
    return tuple(sorted(range(1, 1 << n), key=lambda bits: (bits.bit_count(), bits)))


def _absorbing_exponents(S: OrderedSemigroup, bits: int) -> "tuple[int, ...] | None":
    exponents = []
    for a in S.elements:
        for m in _exponents(S, a):
            if bits >> S.power(a, m) & 1:
                exponents.append(m)
                break
        else:
            return None
    return tuple(exponents)


def _has_kernel_property(T: OrderedSemigroup, tag: str) -> bool:
    if tag == "left_simple":
        return structure_predicate(T, "left-simple").holds
    if tag == "right_simple":
        return structure_predicate(T, "right-simple").holds
    if tag == "t_simple":
        return structure_predicate(T, "t-simple").holds
    return structure_predicate(T, "simple").holds


def _check_tag(tag: str) -> None:
    if tag not in KERNEL_TAGS:
        raise ValueError(f"unknown kernel tag {tag!r}; expected one of {', '.join(KERNEL_TAGS)}")


@lru_cache(maxsize=16384)
def _absorbing_subsemigroup(S: OrderedSemigroup, tag: str) -> PredicateResult:
    _check_tag(tag)
    check_cap("subsemigroup search", S.order, SUBSET_SEARCH_MAX)
    for bits in _subsets_by_size(S.order):
        if not S.is_closed(bits):
            continue
        exponents = _absorbing_exponents(S, bits)
        if exponents is None:
            continue
        H = S.substructure(bits)
        if _has_kernel_property(H, tag) and _pi_regular_of(H).holds:
            witnesses = [Witness((a,), m) for a, m in enumerate(exponents)]
            return PredicateResult.success(witnesses, SubsemigroupWitness(bits, exponents))
    return PredicateResult.failure()


def left_pi_t_simple_direct(S: OrderedSemigroup) -> PredicateResult:
    """Search for a left simple, π-regular subsemigroup that contains a power of every element."""
    return _absorbing_subsemigroup(S, "left_simple")


def right_pi_t_simple_direct(S: OrderedSemigroup) -> PredicateResult:
    return _absorbing_subsemigroup(S, "right_simple")


def pi_t_simple_direct(S: OrderedSemigroup) -> PredicateResult:
    return _absorbing_subsemigroup(S, "t_simple")


def is_ideal(S: OrderedSemigroup, bits: int) -> bool:
    return (
        bits != 0
        and S.is_down_closed(bits)
        and S.product(S.full_bits, bits) & ~bits == 0
        and S.product(bits, S.full_bits) & ~bits == 0
    )


@lru_cache(maxsize=16384)
def nil_extension_search(S: OrderedSemigroup, kernel_tag: str) -> PredicateResult:
    """Find an ideal K, with the tagged property and π-regular in its own right, absorbing a power of every element."""
    _check_tag(kernel_tag)
    check_cap("ideal search", S.order, SUBSET_SEARCH_MAX)
    for bits in _subsets_by_size(S.order):
        if not is_ideal(S, bits):
            continue
        exponents = _absorbing_exponents(S, bits)
        if exponents is None:
            continue
        K = S.substructure(bits)
        if _has_kernel_property(K, kernel_tag) and _pi_regular_of(K).holds:
            witnesses = [Witness((a,), m) for a, m in enumerate(exponents)]
            return PredicateResult.success(witnesses, NilExtensionWitness(bits, exponents, kernel_tag))
    return PredicateResult.failure()


def left_simple_nil_extension(S: OrderedSemigroup) -> PredicateResult:
    return nil_extension_search(S, "left_simple")


# --- π-inverse family ---------------------------------------------------------


def _generators(S: OrderedSemigroup, target: int, side: str) -> int:
    """Ordered idempotents e with ``(Se] = (S·target]`` (side "left") or ``(eS] = (target·S]``."""
    translates = S.left_translates if side == "left" else S.right_translates
    wanted = S.closure(translates[target])
    out = 0
    for e in iter_bits(idempotent_bits(S)):
        if S.closure(translates[e]) == wanted:
            out |= 1 << e
    return out


def _unique_in(S: OrderedSemigroup, kind: str, bits: int) -> bool:
    return is_rho_unique(S, green(S, kind), SubsetMask(bits, S.order)).holds


def _generated_uniquely(S: OrderedSemigroup, side: str, strict: bool, exponents_of) -> PredicateResult:
    kind = "R" if side == "left" else "L"

    def search(a):
        chosen = None
        for m in exponents_of(a):
            gens = _generators(S, S.power(a, m), side)
            if not gens:
                continue
            if _unique_in(S, kind, gens):
                if chosen is None:
                    chosen = (m, tuple(iter_bits(gens)))
                    if not strict:
                        break
            elif strict:
                return None
        return chosen

    return _forall(_elements(S), search)


@lru_cache(maxsize=16384)
def right_pi_inverse_def(S: OrderedSemigroup, strict: bool = False) -> PredicateResult:
    """π-regular, and for every a some power has its left ideal ``(Sa^m]`` generated by an ℛ-unique ordered idempotent.

    ``strict=True`` asks this of every power whose left ideal has an idempotent generator at all.
    """
    return conjunction(_pi_regular_of(S), _generated_uniquely(S, "left", strict, lambda a: _exponents(S, a)))


@lru_cache(maxsize=16384)
def left_pi_inverse_def(S: OrderedSemigroup, strict: bool = False) -> PredicateResult:
    return conjunction(_pi_regular_of(S), _generated_uniquely(S, "right", strict, lambda a: _exponents(S, a)))


def right_inverse_def(S: OrderedSemigroup) -> PredicateResult:
    return _generated_uniquely(S, "left", False, lambda a: (1,))


def left_inverse_def(S: OrderedSemigroup) -> PredicateResult:
    return _generated_uniquely(S, "right", False, lambda a: (1,))


def _inverses_related(S: OrderedSemigroup, kind: str, strict: bool) -> PredicateResult:
    """For every a some (``strict``: every) regular power a^m has all of ``V≤(a^m)`` in one class of ``kind``."""
    inverses = inverse_bits(S)

    def search(a):
        chosen = None
        for m in _exponents(S, a):
            bits = inverses[S.power(a, m)]
            if not bits:
                continue
            if _unique_in(S, kind, bits):
                if chosen is None:
                    chosen = (m, tuple(iter_bits(bits)))
                    if not strict:
                        break
            elif strict:
                return None
        return chosen

    return _forall(_elements(S), search)


@lru_cache(maxsize=16384)
def pi_inverse_def(S: OrderedSemigroup) -> PredicateResult:
    return conjunction(_pi_regular_of(S), _inverses_related(S, "H", strict=False))


def dual_predicates(S: OrderedSemigroup) -> dict[str, PredicateResult]:
    return {
        "left_pi_inverse": left_pi_inverse_def(S),
        "right_pi_t_simple": right_pi_t_simple_direct(S),
        "pi_inverse": pi_inverse_def(S),
        "pi_t_simple": pi_t_simple_direct(S),
    }


_COMPOSITE = {
    "left-pi-t-simple": left_pi_t_simple_direct,
    "right-pi-t-simple": right_pi_t_simple_direct,
    "pi-t-simple": pi_t_simple_direct,
    "right-pi-inverse": right_pi_inverse_def,
    "left-pi-inverse": left_pi_inverse_def,
    "pi-inverse": pi_inverse_def,
    "right-inverse": right_inverse_def,
    "left-inverse": left_inverse_def,
}

PREDICATE_NAMES: tuple[str, ...] = tuple(_BASE) + tuple(_COMPOSITE)


# --- condition batteries ------------------------------------------------------


def _unique_idempotent(S: OrderedSemigroup, partition_kind: str = "L") -> PredicateResult:
    return is_rho_unique(S, starred(S, partition_kind), SubsetMask(idempotent_bits(S), S.order))


@lru_cache(maxsize=16384)
def theorem2_conditions(S: OrderedSemigroup) -> tuple[PredicateResult, ...]:
    pi_regular = _pi_regular_of(S)
    l_star = starred(S, "L")

    def four(a, b):
        return _smallest(_exponents(S, a), lambda m: _between(S, S.power(a, m), S.power(a, m), b))

    def five(a, b):
        def every_power_of_b(m):
            target = S.power(a, m)
            mediators = []
            for n in _exponents(S, b):
                found = _between(S, target, target, S.power(b, n))
                if found is None:
                    return None
                mediators.extend(found)
            return tuple(mediators)

        return _smallest(_exponents(S, a), every_power_of_b)

    def six(a, b):
        return _smallest(_horizon(S), lambda m: _between(S, S.power(a, m), S.power(a, m), S.power(b, m)))

    return (
        left_pi_t_simple_direct(S),
        conjunction(pi_regular, _unique_idempotent(S)),
        conjunction(pi_regular, is_rho_unique(S, l_star, SubsetMask.full(S.order))),
        _forall(_pairs(S), four),
        _forall(_pairs(S), five),
        _forall(_pairs(S), six),
        conjunction(pi_regular, structure_predicate(S, "left-archimedean")),
        nil_extension_search(S, "left_simple"),
    )


def weak_commutativity_conditions(S: OrderedSemigroup) -> tuple[PredicateResult, PredicateResult]:
    """(right weakly commutative, right Archimedean, ℒ*-unique ordered idempotent) and left π-t-simplicity."""
    antecedent = conjunction(
        structure_predicate(S, "right-weakly-commutative"),
        structure_predicate(S, "right-archimedean"),
        _unique_idempotent(S),
    )
    return antecedent, left_pi_t_simple_direct(S)


@lru_cache(maxsize=16384)
def theorem4_conditions(S: OrderedSemigroup, require_complete: bool = False) -> tuple[PredicateResult, ...]:
    from semigroups.congruences import semilattice_decomposition

    pi_regular = _pi_regular_of(S)
    l_star = starred(S, "L")

    def two(a, b):
        return (None, ()) if l_star.related(S.mul(a, b), S.mul(b, a)) else None

    def four(a, b):
        ab, ba = S.mul(a, b), S.mul(b, a)

        def probe(m):
            head = S.power(ab, m)
            return _between(S, head, head, S.power(ba, m + 1))

        return _smallest(_horizon(S), probe)

    return (
        semilattice_decomposition(S, left_pi_t_simple_direct, require_complete=require_complete),
        conjunction(pi_regular, _forall(_pairs(S), two)),
        conjunction(pi_regular, structure_predicate(S, "right-weakly-commutative")),
        _forall(_pairs(S), four),
        semilattice_decomposition(S, left_simple_nil_extension, require_complete=require_complete),
    )


@lru_cache(maxsize=16384)
def theorem5_conditions(S: OrderedSemigroup, strict: bool = False) -> tuple[PredicateResult, ...]:
    """``strict`` switches conditions (2) and (5) from "some exponent" to "every exponent"."""
    inverses = inverse_bits(S)
    idempotent_pairs = _idempotent_pairs(S)

    def three(e, f):
        ef = S.mul(e, f)
        return _smallest(_exponents(S, ef), lambda n: _between(S, S.power(ef, n), f, f))

    def four(e, f):
        ef = S.mul(e, f)
        both = S.closure(S.right_translates[e]) & S.closure(S.right_translates[f])

        def probe(n):
            return () if S.right_translates[S.power(ef, n)] & ~both == 0 else None

        return _smallest(_exponents(S, ef), probe)

    def five_at(e, m):
        into = S.closure(S.right_translates[e])
        left_of_e = S.left_translates[e]
        for x in S.elements:
            power = S.power(x, m)
            if not S.below(power, left_of_e):
                continue
            for inverse in iter_bits(inverses[power]):
                if not into >> inverse & 1:
                    return False
        return True

    def five(e):
        if strict:
            return (None, ()) if all(five_at(e, m) for m in _horizon(S)) else None
        for m in _horizon(S):
            if five_at(e, m):
                return m, ()
        return None

    idempotents = [(e,) for e in iter_bits(idempotent_bits(S))]
    return (
        right_pi_inverse_def(S),
        conjunction(_pi_regular_of(S), _inverses_related(S, "R", strict)),
        _forall(idempotent_pairs, three),
        _forall(idempotent_pairs, four),
        _forall(idempotents, five),
    )


def theorem6_condition(S: OrderedSemigroup) -> PredicateResult:
    """``e ℒ* f`` implies ``e ℛ* f`` for all ordered idempotents."""
    l_star, r_star = starred(S, "L"), starred(S, "R")

    def search(e, f):
        if l_star.related(e, f) and not r_star.related(e, f):
            return None
        return None, ()

    return _forall(_idempotent_pairs(S), search)


@lru_cache(maxsize=16384)
def theorem51_conditions(S: OrderedSemigroup) -> tuple[PredicateResult, ...]:
    inverses = inverse_bits(S)
    r_classes = green(S, "R")
    idempotent_pairs = _idempotent_pairs(S)

    def two(a):
        members = list(iter_bits(inverses[a]))
        for first, other in product(members, repeat=2):
            if not r_classes.related(first, other):
                return None
        return None, tuple(members)

    def three(e, f):
        target = S.mul(e, f)
        up = S.up_masks[target]
        for x, y in product(S.elements, repeat=2):
            if up >> S.mul(S.mul3(f, x, e), S.mul(y, f)) & 1:
                return None, (x, y)
        return None

    def four(e, f):
        both = S.closure(S.right_translates[e]) & S.closure(S.right_translates[f])
        generated = S.closure(S.right_translates[S.mul(e, f)])
        return (None, ()) if both == generated else None

    def five() -> PredicateResult:
        # counterexample (e, x, x') with x ∈ (Se] and x' ∈ V≤(x) outside (eS]
        witnesses = []
        for e in iter_bits(idempotent_bits(S)):
            into = S.closure(S.right_translates[e])
            for x in iter_bits(S.closure(S.left_translates[e])):
                stray = inverses[x] & ~into
                if stray:
                    return PredicateResult.failure((e, x, next(iter_bits(stray))))
            witnesses.append(Witness((e,)))
        return PredicateResult.success(witnesses)

    return (
        right_inverse_def(S),
        _forall(_elements(S), two),
        _forall(idempotent_pairs, three),
        _forall(idempotent_pairs, four),
        five(),
    )


def theorem7_conditions(S: OrderedSemigroup) -> tuple[PredicateResult, PredicateResult]:
    """Left simple and π-regular, against all ordered idempotents being ℒ*-related."""
    return (
        conjunction(structure_predicate(S, "left-simple"), _pi_regular_of(S)),
        _unique_idempotent(S),
    )


def lemma3_condition(S: OrderedSemigroup) -> PredicateResult:
    """Some power of every element has its left ideal ``(Sa^m]`` generated by an ordered idempotent."""

    def search(a):
        for m in _exponents(S, a):
            gens = _generators(S, S.power(a, m), "left")
            if gens:
                return m, (next(iter_bits(gens)),)
        return None

    return _forall(_elements(S), search)

