"""Bound ledger: one entry per checked inequality or identity."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

SCHEMA_VERSION = 1

RELATIONS = (">=", "<=", "==")


@dataclass(frozen=True)
class BoundEntry:
    """A single check ``lhs relation rhs`` at a given tolerance.

    ``required`` entries decide the overall verdict; informational ones are
    reported (with slack) but never fail a run.
    """

    id: str
    lhs: float
    rhs: float
    relation: str = ">="
    tol: float = 1e-9
    required: bool = True
    note: str = ""

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "lhs", float(self.lhs))
        object.__setattr__(self, "rhs", float(self.rhs))
        object.__setattr__(self, "tol", float(self.tol))
        object.__setattr__(self, "required", bool(self.required))

    @property
    def slack(self) -> float:
        if self.relation == ">=":
            return self.lhs - self.rhs
        if self.relation == "<=":
            return self.rhs - self.lhs
        return -abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        if not (math.isfinite(self.lhs) and math.isfinite(self.rhs)):
            return False
        return self.slack >= -self.tol

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "pass": self.passed,
            "slack": self.slack,
            "tol": self.tol,
            "required": self.required,
            "note": self.note,
        }


@dataclass
class BoundReport:
    entries: list[BoundEntry] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, *args, **kwargs) -> BoundEntry:
        e = args[0] if args and isinstance(args[0], BoundEntry) else BoundEntry(*args, **kwargs)
        self.entries.append(e)
        return e

    def extend(self, entries: Iterable[BoundEntry]):
        self.entries.extend(entries)

    def __getitem__(self, key: str) -> BoundEntry:
        for e in self.entries:
            if e.id == key:
                return e
        raise KeyError(key)

    def select(self, prefix: str) -> list[BoundEntry]:
        return [e for e in self.entries if e.id.startswith(prefix)]

    @property
    def required(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.required]

    @property
    def failures(self) -> list[BoundEntry]:
        return [e for e in self.required if not e.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA_VERSION,
            "meta": self.meta,
            "all_required_pass": self.passed,
            "entries": [e.to_dict() for e in self.entries],
        }
        return json.dumps(doc, indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "BoundReport":
        doc = json.loads(text)
        if doc.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {doc.get('schema')!r}")
        entries = [
            BoundEntry(d["id"], d["lhs"], d["rhs"], d["relation"], d["tol"], d["required"], d.get("note", ""))
            for d in doc["entries"]
        ]
        return cls(entries, doc.get("meta", {}))

    def format_table(self) -> str:
        lines = []
        width = max((len(e.id) for e in self.entries), default=10)
        for e in self.entries:
            tag = "PASS" if e.passed else ("FAIL" if e.required else "info")
            kind = "req " if e.required else "info"
            lines.append(
                f"{tag:4}  {kind}  {e.id:<{width}}  {e.lhs:+.6e} {e.relation} {e.rhs:+.6e}  slack={e.slack:+.3e}"
            )
        n_req = len(self.required)
        lines.append(f"{n_req - len(self.failures)}/{n_req} required entries pass")
        return "\n".join(lines)
