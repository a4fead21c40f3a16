"""Runs theorem suites over the structure catalog and searches it for models of predicate constraints."""

from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from billiard.pool import Pool
from django.conf import settings

from catalog.enumeration import (
    EXHAUSTIVE_MAX,
    GenerationConfig,
    enumerate_ordered_semigroups,
    sample_nontrivial_orders,
)
from semigroups.predicates import PREDICATE_NAMES, UnknownPredicateError, normalise_name, structure_predicate
from semigroups.results import PredicateResult
from semigroups.structures import OrderedSemigroup, check_cap
from verification.harness import DISCREPANCY, VERDICTS, EquivalenceReport, resolve_suite_ids, verify

logger = logging.getLogger(__name__)

WORKERS = max(1, int(getattr(settings, "ORDSGP_WORKERS", 1)))
ORDER4_SAMPLES = max(0, int(getattr(settings, "ORDSGP_ORDER4_SAMPLES", 10000)))
SAMPLE_SEED = int(getattr(settings, "ORDSGP_SAMPLE_SEED", 20240611))

# above this order the full table × order product gives way to discrete orders plus samples
FULL_PRODUCT_MAX = 3
CHUNK_SIZE = 64


@dataclass(frozen=True)
class VerificationConfig:
    theorem_ids: tuple[str, ...]
    max_order: int
    samples: int = ORDER4_SAMPLES
    seed: int = SAMPLE_SEED
    workers: int = WORKERS
    fail_fast: bool = False

    def __post_init__(self):
        object.__setattr__(self, "theorem_ids", resolve_suite_ids(self.theorem_ids))
        if self.max_order < 1:
            raise ValueError("max order must be at least 1")
        if self.samples < 0:
            raise ValueError("samples must not be negative")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def as_dict(self) -> dict:
        # worker count stays out so reports do not depend on it
        return {
            "theorems": list(self.theorem_ids),
            "max_order": self.max_order,
            "samples": self.samples,
            "seed": self.seed,
            "fail_fast": self.fail_fast,
        }


@dataclass(frozen=True)
class StructureCheck:
    structure: OrderedSemigroup
    verdicts: tuple[tuple[str, str], ...]
    discrepancies: tuple[EquivalenceReport, ...]


@dataclass
class SuiteReport:
    config: VerificationConfig
    structure_count: int = 0
    totals: dict[str, Counter] = field(default_factory=dict)
    discrepancies: list[tuple[EquivalenceReport, OrderedSemigroup]] = field(default_factory=list)
    stopped_early: bool = False
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def add(self, check: StructureCheck) -> None:
        self.structure_count += 1
        for theorem_id, verdict in check.verdicts:
            self.totals.setdefault(theorem_id, Counter())[verdict] += 1
        self.discrepancies.extend((report, check.structure) for report in check.discrepancies)

    def total_rows(self) -> list[list]:
        return [
            [theorem_id] + [self.totals.get(theorem_id, Counter())[verdict] for verdict in VERDICTS]
            for theorem_id in self.config.theorem_ids
        ]

    def to_dict(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "structure_count": self.structure_count,
            "totals": {
                theorem_id: {verdict: self.totals.get(theorem_id, Counter())[verdict] for verdict in VERDICTS}
                for theorem_id in self.config.theorem_ids
            },
            "discrepancy_count": len(self.discrepancies),
            "discrepancies": [
                {"report": report.to_dict(), "structure": structure.as_dict()}
                for report, structure in self.discrepancies
            ],
            "stopped_early": self.stopped_early,
        }


def structure_stream(max_order: int, samples: int = ORDER4_SAMPLES, seed: int = SAMPLE_SEED) -> Iterator[OrderedSemigroup]:
    """Orders up to 3 in full; larger orders as every table with the discrete order plus seeded nontrivial samples."""
    check_cap("verification", max_order, EXHAUSTIVE_MAX)
    for n in range(1, max_order + 1):
        if n <= FULL_PRODUCT_MAX:
            yield from enumerate_ordered_semigroups(GenerationConfig(n))
        else:
            yield from enumerate_ordered_semigroups(GenerationConfig(n, order_mode="discrete"))
            yield from sample_nontrivial_orders(n, samples, seed)


def check_structure(payload: tuple[OrderedSemigroup, tuple[str, ...]]) -> StructureCheck:
    structure, theorem_ids = payload
    reports = [verify(structure, theorem_id) for theorem_id in theorem_ids]
    return StructureCheck(
        structure=structure,
        verdicts=tuple((r.theorem, r.verdict) for r in reports),
        discrepancies=tuple(r for r in reports if r.verdict == DISCREPANCY),
    )


def _checks(config: VerificationConfig, structures: Iterable[OrderedSemigroup]) -> Iterator[StructureCheck]:
    payloads = ((structure, config.theorem_ids) for structure in structures)
    if config.workers == 1:
        yield from map(check_structure, payloads)
        return
    pool = Pool(processes=config.workers)
    try:
        # imap keeps input order, so the report matches a single-process run
        yield from pool.imap(check_structure, payloads, CHUNK_SIZE)
    finally:
        pool.terminate()
        pool.join()


def run_suite(config: VerificationConfig, structures: Iterable[OrderedSemigroup] | None = None) -> SuiteReport:
    if structures is None:
        structures = structure_stream(config.max_order, config.samples, config.seed)
    report = SuiteReport(config=config)
    started = time.monotonic()
    for check in _checks(config, structures):
        report.add(check)
        if config.fail_fast and check.discrepancies:
            report.stopped_early = True
            break
    report.elapsed = time.monotonic() - started
    logger.info(
        "suite run %s: %d structures, %d discrepancies in %.2fs",
        config.as_dict(),
        report.structure_count,
        len(report.discrepancies),
        report.elapsed,
    )
    return report


@dataclass(frozen=True)
class SearchResult:
    satisfy: tuple[str, ...]
    violate: tuple[str, ...]
    max_order: int
    examined: int
    structure: OrderedSemigroup | None = None
    evidence: tuple[tuple[str, PredicateResult], ...] = ()

    @property
    def found(self) -> bool:
        return self.structure is not None

    def to_dict(self) -> dict:
        data = {
            "satisfy": list(self.satisfy),
            "violate": list(self.violate),
            "max_order": self.max_order,
            "examined": self.examined,
            "found": self.found,
        }
        if self.structure is not None:
            data["structure"] = self.structure.as_dict()
            data["structure_key"] = self.structure.key
            data["evidence"] = {name: result.as_dict() for name, result in self.evidence}
        return data


def _vocabulary(names: Iterable[str]) -> tuple[str, ...]:
    out = []
    for name in names:
        key = normalise_name(name)
        if not key:
            continue
        if key not in PREDICATE_NAMES:
            raise UnknownPredicateError(name)
        out.append(key)
    return tuple(out)


def search_model(satisfy: Iterable[str], violate: Iterable[str], max_order: int) -> SearchResult:
    """First structure, in enumeration order over increasing order, meeting every constraint."""
    satisfy, violate = _vocabulary(satisfy), _vocabulary(violate)
    check_cap("model search", max_order, EXHAUSTIVE_MAX)
    examined = 0
    for n in range(1, max_order + 1):
        for structure in enumerate_ordered_semigroups(GenerationConfig(n)):
            examined += 1
            evidence = []
            for name, wanted in [(name, True) for name in satisfy] + [(name, False) for name in violate]:
                result = structure_predicate(structure, name)
                if result.holds != wanted:
                    break
                evidence.append((name, result))
            else:
                logger.info("model search hit %s after %d structures", structure.key, examined)
                return SearchResult(satisfy, violate, max_order, examined, structure, tuple(evidence))
    return SearchResult(satisfy, violate, max_order, examined)
