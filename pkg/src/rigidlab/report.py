"""Machine-readable verification reports.

A report collects named checks. Each check records its inputs, the
expected value, the value obtained and whether they agree, so a failing
check carries everything needed to replay it.
"""

from dataclasses import dataclass, field
import json
import time


def _plain(x):
    """Convert tuples, sets and fractions into JSON-friendly values."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((_plain(v) for v in x), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    return str(x)


def check(name, inputs, expected, got, ok=None):
    """One check record; ``ok`` defaults to ``expected == got``."""
    if ok is None:
        ok = expected == got
    return {"name": name, "inputs": _plain(inputs), "expected": _plain(expected),
            "got": _plain(got), "ok": bool(ok)}


@dataclass
class Report:
    claim: str
    status: str = "pass"
    checks: list = field(default_factory=list)
    seed: int = 0
    ms: int = 0

    @classmethod
    def from_checks(cls, claim, checks, seed=0, ms=0, skipped=False):
        if skipped:
            status = "skipped"
        else:
            status = "pass" if all(c["ok"] for c in checks) else "fail"
        return cls(claim, status, list(checks), seed, ms)

    @property
    def passed(self):
        return self.status == "pass"

    @property
    def counterexamples(self):
        return [c for c in self.checks if not c["ok"]]

    def to_dict(self):
        return {"claim": self.claim, "status": self.status, "checks": self.checks,
                "seed": self.seed, "ms": self.ms}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


class Timer:
    """Context manager measuring elapsed wall time in whole milliseconds."""

    def __enter__(self):
        self._start = time.perf_counter()
        self.ms = 0
        return self

    def __exit__(self, *exc):
        self.ms = int(round((time.perf_counter() - self._start) * 1000))
        return False
