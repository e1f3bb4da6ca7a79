"""Deterministic JSON reports."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .fields import Fp, render_scalar
from .polynomial import Polynomial


def _plain(obj):
    if isinstance(obj, (Fraction, Fp)):
        return render_scalar(obj)
    if isinstance(obj, Polynomial):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class Report:
    command: str
    input_digest: str
    result: dict
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        body = {"command": self.command, "input_digest": self.input_digest,
                "result": _plain(self.result), "diagnostics": list(self.diagnostics)}
        return json.dumps(body, sort_keys=True, indent=2)
