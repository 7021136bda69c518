"""Uniform result records for the verification routines."""

import time
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    check: str
    params: dict = field(default_factory=dict)
    status: str = "pass"          # "pass", "fail" or "skipped"
    witness: dict = None
    millis: int = 0

    def ok(self):
        return self.status != "fail"

    def to_json(self):
        return {"check": self.check, "params": self.params,
                "status": self.status, "witness": self.witness,
                "millis": self.millis}


class Stopwatch:
    def __init__(self):
        self.start = time.monotonic()

    def millis(self):
        return int((time.monotonic() - self.start) * 1000)
