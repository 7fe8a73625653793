"""Axiom-check reports.

Every validator in the package returns a :class:`Report` instead of raising:
a violation is data, carried together with the witness that exposes it.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np


def jsonable(obj):
    """Convert witnesses (elements, sets, partial maps, fractions) to JSON values."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, np.generic):
        return jsonable(obj.item())
    if isinstance(obj, np.ndarray):
        return [jsonable(x) for x in obj.tolist()]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(jsonable(k)) if not isinstance(k, str) else k: jsonable(v)
                for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted((jsonable(x) for x in obj), key=lambda v: (type(v).__name__, str(v)))
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return str(obj)


@dataclass
class Violation:
    axiom: str
    witness: object
    detail: str = ""

    def to_json(self):
        out = {"axiom": self.axiom, "witness": jsonable(self.witness)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    subject: str
    checked: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def check(self, axiom, holds, witness=None, detail=""):
        """Record one evaluated instance of `axiom`; returns `holds`."""
        self.checked[axiom] += 1
        if not holds:
            self.violations.append(Violation(axiom, witness, detail))
        return holds

    def fail(self, axiom, witness=None, detail=""):
        self.check(axiom, False, witness, detail)

    def failed_axioms(self):
        return sorted({v.axiom for v in self.violations})

    def extend(self, other, prefix=""):
        for k, n in other.checked.items():
            self.checked[prefix + k] += n
        for v in other.violations:
            self.violations.append(Violation(prefix + v.axiom, v.witness, v.detail))
        for k, v in other.info.items():
            self.info[prefix + k] = v
        return self

    def to_json(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": dict(sorted(self.checked.items())),
            "violations": [v.to_json() for v in self.violations],
            "info": jsonable(self.info),
        }

    def summary(self):
        status = "ok" if self.ok else "FAILED " + ", ".join(self.failed_axioms())
        return f"{self.subject}: {sum(self.checked.values())} checks, {status}"
