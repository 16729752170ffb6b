"""Structured verification reports and their JSON-lines serialization."""
import json
from dataclasses import dataclass, field


@dataclass
class Report:
    claim_id: str
    inputs: dict = field(default_factory=dict)
    computed: dict = field(default_factory=dict)
    reference: dict = field(default_factory=dict)
    tolerance: float = 0.0
    tolerance_kind: str = "abs"
    passed: bool = False
    runtime_ms: int = 0
    detail: str = ""

    def to_dict(self, include_runtime=True):
        doc = {
            "claim_id": self.claim_id,
            "inputs": self.inputs,
            "computed": self.computed,
            "reference": self.reference,
            "tolerance": self.tolerance,
            "tolerance_kind": self.tolerance_kind,
            "pass": self.passed,
        }
        if self.detail:
            doc["detail"] = self.detail
        if include_runtime:
            doc["runtime_ms"] = self.runtime_ms
        return doc

    def to_json_line(self, include_runtime=False):
        """One canonical JSON line.  runtime_ms is omitted by default so
        that identical runs produce byte-identical streams."""
        return json.dumps(self.to_dict(include_runtime=include_runtime),
                          sort_keys=True, separators=(",", ":"),
                          allow_nan=False)

    def summary_line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.claim_id} ({self.runtime_ms} ms)"
