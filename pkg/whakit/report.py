"""
Verification reports.

An :class:`AxiomReport` collects one :class:`ReportEntry` per checked
identity. Failing entries carry a witness: the basis multi-index of the first
input on which the two sides differ.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from . import linalg
from .linalg import Matrix
from .logger import get_logger


@dataclass
class ReportEntry:
    """One checked identity."""
    identity: str
    anchor: str
    passed: bool
    witness: Optional[List[int]] = None
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "identity": self.identity,
            "anchor": self.anchor,
            "pass": self.passed,
            "witness": self.witness,
        }
        if self.detail is not None:
            data["detail"] = self.detail
        return data


@dataclass
class AxiomReport:
    """Pass/fail certificate for a verification suite."""
    suite: str
    entries: List[ReportEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> List[ReportEntry]:
        return [e for e in self.entries if not e.passed]

    def __bool__(self) -> bool:
        return self.passed

    def entry(self, identity: str) -> ReportEntry:
        for e in self.entries:
            if e.identity == identity:
                return e
        raise KeyError(identity)

    def add(self, identity: str, anchor: str, passed: bool,
            witness: Optional[Sequence[int]] = None, detail: Optional[str] = None) -> bool:
        self.entries.append(ReportEntry(
            identity, anchor, bool(passed),
            list(witness) if witness is not None and not passed else None, detail))
        get_logger().debug(self.suite, "report", "add", "identity checked",
                           identity=identity, passed=bool(passed))
        return bool(passed)

    def check_equal(self, identity: str, anchor: str, lhs: Matrix, rhs: Matrix,
                    dims: Optional[Sequence[int]] = None) -> bool:
        """
        Record whether two linear maps (or vectors) agree exactly.

        ``dims`` are the leg sizes of the input space; the witness is the
        decoded column index of the first difference (for a single column the
        witness is the row multi-index instead).
        """
        if lhs.shape != rhs.shape:
            return self.add(identity, anchor, False, [], detail=f"shape {lhs.shape} vs {rhs.shape}")
        where = linalg.first_difference(lhs, rhs)
        if where is None:
            return self.add(identity, anchor, True)
        row, col = where
        if lhs.shape[1] == 1:
            witness = list(linalg.decode_index(row, dims)) if dims else [row]
        else:
            witness = list(linalg.decode_index(col, dims)) if dims else [col]
        return self.add(identity, anchor, False, witness)

    def check_true(self, identity: str, anchor: str, condition: bool,
                   witness: Optional[Sequence[int]] = None, detail: Optional[str] = None) -> bool:
        return self.add(identity, anchor, condition, witness if witness is not None else [], detail)

    def extend(self, other: "AxiomReport", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(ReportEntry(prefix + e.identity, e.anchor, e.passed, e.witness, e.detail))

    def to_dict(self) -> Dict[str, Any]:
        ordered = sorted(self.entries, key=lambda e: e.identity)
        return {
            "suite": self.suite,
            "pass": self.passed,
            "entries": [e.to_dict() for e in ordered],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        return f"{self.suite}: {len(self.entries) - len(self.failures)}/{len(self.entries)} identities hold"
