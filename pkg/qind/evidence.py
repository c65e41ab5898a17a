"""
Evidence harvested about a target.

Every collector produces its own EvidenceSet; the pipeline merges them by fact
id. A fact that was not positively established is simply absent, which the
checks read as UNKNOWN.
"""

from __future__ import annotations

from datetime import datetime
from typing import Union

from qind.base import FrozenModel
from qind.errors import EvidenceConflict

FactValue = Union[bool, int, float, str, tuple[str, ...], None]


class Provenance(FrozenModel):
    collector: str
    source: str
    retrieved_at: datetime


class Fact(FrozenModel):
    value: FactValue
    provenance: Provenance


class CollectorFailure(FrozenModel):
    collector: str
    reason: str


class EvidenceSet(FrozenModel):
    target: str
    facts: dict[str, Fact] = {}
    failures: tuple[CollectorFailure, ...] = ()

    def has(self, fact_id: str) -> bool:
        return fact_id in self.facts

    def value(self, fact_id: str, default: FactValue = None) -> FactValue:
        fact = self.facts.get(fact_id)
        return default if fact is None else fact.value

    def merge(self, other: EvidenceSet) -> EvidenceSet:
        """Union of two sets; facts are keyed by id and must not collide.

        Raises:
            EvidenceConflict: Both sets carry the same fact id.
        """
        if clash := sorted(self.facts.keys() & other.facts.keys()):
            raise EvidenceConflict(f"fact ids reported twice: {', '.join(clash)}")
        facts = {**self.facts, **other.facts}
        return EvidenceSet(
            target=self.target or other.target,
            facts={fact_id: facts[fact_id] for fact_id in sorted(facts)},
            failures=self.failures + other.failures,
        )

    @classmethod
    def empty(cls, target: str) -> EvidenceSet:
        return cls(target=target)


class EvidenceBuilder:
    """Accumulates the facts of one collector run.

    Args:
        collector: Collector id recorded in every fact's provenance.
        target: The target locator.
        retrieved_at: Timestamp recorded for local facts.
    """

    def __init__(self, collector: str, target: str, retrieved_at: datetime):
        self.collector = collector
        self.target = target
        self.retrieved_at = retrieved_at
        self._facts: dict[str, Fact] = {}
        self._failures: list[CollectorFailure] = []

    def add(self, fact_id: str, value: FactValue, source: str = ".", retrieved_at: datetime | None = None) -> None:
        if fact_id in self._facts:
            raise EvidenceConflict(f"{self.collector} reported {fact_id} twice")
        if isinstance(value, list):
            value = tuple(value)
        self._facts[fact_id] = Fact(
            value=value,
            provenance=Provenance(
                collector=self.collector,
                source=source,
                retrieved_at=retrieved_at or self.retrieved_at,
            ),
        )

    def fail(self, reason: str) -> None:
        self._failures.append(CollectorFailure(collector=self.collector, reason=reason))

    def build(self) -> EvidenceSet:
        return EvidenceSet(
            target=self.target,
            facts={fact_id: self._facts[fact_id] for fact_id in sorted(self._facts)},
            failures=tuple(self._failures),
        )
