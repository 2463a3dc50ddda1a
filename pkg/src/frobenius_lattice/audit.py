"""Sweep exceptional triples and compare the closed form against the oracle.

Mismatches are recorded, never raised: the report is the measurement.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Optional

from .arith import CoprimePair
from .engine import CaseLabel, evaluate
from .errors import DomainError
from .oracle import frobenius_oracle
from .region import enumerate_exceptional

EXCEPTIONAL_CASES = [label.value for label in CaseLabel if label is not CaseLabel.NON_EXCEPTIONAL]

REPORT_SCHEMA = {
    "type": "object",
    "required": ["params", "records", "totals", "agreement"],
    "properties": {
        "params": {
            "type": "object",
            "required": ["a_max", "b_max"],
            "properties": {"a_max": {"type": "integer"}, "b_max": {"type": "integer"}},
        },
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["a", "b", "c", "case", "candidate", "g_formula", "g_oracle", "agree"],
                "additionalProperties": False,
                "properties": {
                    "a": {"type": "integer"},
                    "b": {"type": "integer"},
                    "c": {"type": "integer"},
                    "case": {"enum": EXCEPTIONAL_CASES},
                    "candidate": {"enum": ["FPrime", "QPrime1", "QPrime2"]},
                    "g_formula": {"type": "integer"},
                    "g_oracle": {"type": "integer"},
                    "agree": {"type": "boolean"},
                },
            },
        },
        "totals": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
        "agreement": {
            "type": "object",
            "additionalProperties": {"type": "number", "minimum": 0, "maximum": 1},
        },
        "version": {"type": "string"},
    },
}


@dataclass(frozen=True)
class AuditRecord:
    a: int
    b: int
    c: int
    case: str
    candidate: str
    g_formula: int
    g_oracle: int
    agree: bool


@dataclass
class AuditReport:
    a_max: int
    b_max: int
    records: list = field(default_factory=list)

    @property
    def totals(self) -> dict:
        out = dict.fromkeys(EXCEPTIONAL_CASES, 0)
        for rec in self.records:
            out[rec.case] += 1
        return out

    @property
    def agreement(self) -> dict:
        agreeing = dict.fromkeys(EXCEPTIONAL_CASES, 0)
        for rec in self.records:
            agreeing[rec.case] += rec.agree
        return {k: agreeing[k] / n for k, n in self.totals.items() if n}

    def disagreements(self) -> list:
        return [r for r in self.records if not r.agree]

    def to_dict(self) -> dict:
        from . import __version__

        return {
            "params": {"a_max": self.a_max, "b_max": self.b_max},
            "records": [asdict(r) for r in self.records],
            "totals": self.totals,
            "agreement": self.agreement,
            "version": __version__,
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)


def audit_pair(pair: CoprimePair, budget: Optional[int] = None) -> list[AuditRecord]:
    """One record per exceptional ``c`` of the pair, largest ``c`` first."""
    records = []
    for c, _point in enumerate_exceptional(pair, budget):
        ev = evaluate(pair.a, pair.b, c)
        assert ev.winner is not None
        g_oracle = frobenius_oracle((pair.a, pair.b, c), budget)
        records.append(
            AuditRecord(
                pair.a, pair.b, c, ev.case.value, ev.winner.kind.value, ev.g, g_oracle, ev.g == g_oracle
            )
        )
    return records


def _audit_pairs(pairs, budget):
    out = []
    for a, b in pairs:
        out.extend(audit_pair(CoprimePair(a, b), budget))
    return out


def sweep_pairs(a_max: int, b_max: int) -> list[tuple[int, int]]:
    return [
        (a, b)
        for a in range(2, a_max + 1)
        for b in range(a + 1, b_max + 1)
        if gcd(a, b) == 1
    ]


def audit_sweep(
    a_max: int, b_max: int, workers: int = 1, budget: Optional[int] = None
) -> AuditReport:
    """Audit every coprime ``2 <= a < b <= b_max`` with ``a <= a_max``."""
    if a_max > b_max:
        raise DomainError(f"a_max ({a_max}) must not exceed b_max ({b_max})")
    pairs = sweep_pairs(a_max, b_max)
    if workers > 1 and len(pairs) > 1:
        chunks = [pairs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_audit_pairs, chunks, [budget] * len(chunks))
            records = [r for part in parts for r in part]
    else:
        records = _audit_pairs(pairs, budget)
    records.sort(key=lambda r: (r.a, r.b, r.c))
    return AuditReport(a_max, b_max, records)
