"""JSON problem files.

A problem file looks like::

    {
      "problems": [{"id": "a", "P": [1, 0, 0, 0], "Q": [...], "R": [...], "S": [...]}],
      "options": {"tolerance": 1e-9, "samples": 8, "verify": false, "seed": 0}
    }

Quaternions are always ``[w, x, y, z]`` with the scalar part first.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .quaternion import Quaternion
from .solver import EquationCoefficients

OPTION_TYPES = {"tolerance": float, "samples": int, "verify": bool, "seed": int}


class ProblemFileError(ValueError):
    """The problem file is unreadable or does not follow the schema."""


@dataclass(frozen=True)
class Problem:
    id: str
    P: Quaternion
    Q: Quaternion
    R: Quaternion
    S: Quaternion

    def coefficients(self) -> EquationCoefficients:
        return EquationCoefficients(self.P, self.Q, self.R, self.S)

    def to_dict(self) -> dict:
        return {"id": self.id, **{k: getattr(self, k).to_list() for k in "PQRS"}}


@dataclass(frozen=True)
class ProblemFile:
    problems: list[Problem]
    options: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict = {"problems": [p.to_dict() for p in self.problems]}
        if self.options:
            out["options"] = dict(self.options)
        return out


def _quaternion(value, where: str) -> Quaternion:
    if not isinstance(value, list) or len(value) != 4:
        raise ProblemFileError(f"{where}: expected a 4-array [w, x, y, z]")
    for v in value:
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            raise ProblemFileError(f"{where}: components must be finite numbers")
    return Quaternion(*value)


def _options(raw) -> dict:
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise ProblemFileError("options must be an object")
    out = {}
    for key, value in raw.items():
        kind = OPTION_TYPES.get(key)
        if kind is None:
            raise ProblemFileError(f"unknown option {key!r}")
        if kind is bool:
            ok = isinstance(value, bool)
        elif kind is int:
            ok = isinstance(value, int) and not isinstance(value, bool)
        else:
            ok = isinstance(value, (int, float)) and not isinstance(value, bool)
        if not ok:
            raise ProblemFileError(f"option {key!r} must be of type {kind.__name__}")
        out[key] = value
    if out.get("samples", 0) < 0:
        raise ProblemFileError("option 'samples' must be nonnegative")
    if "tolerance" in out and not out["tolerance"] > 0:
        raise ProblemFileError("option 'tolerance' must be positive")
    return out


def parse_problem_file(doc) -> ProblemFile:
    if not isinstance(doc, dict) or not isinstance(doc.get("problems"), list):
        raise ProblemFileError("top level must be an object with a 'problems' array")
    problems = []
    seen: set[str] = set()
    for n, raw in enumerate(doc["problems"]):
        if not isinstance(raw, dict):
            raise ProblemFileError(f"problems[{n}] must be an object")
        pid = raw.get("id")
        if not isinstance(pid, str):
            raise ProblemFileError(f"problems[{n}]: 'id' must be a string")
        if pid in seen:
            raise ProblemFileError(f"duplicate problem id {pid!r}")
        seen.add(pid)
        missing = [k for k in "PQRS" if k not in raw]
        if missing:
            raise ProblemFileError(f"problem {pid!r}: missing {', '.join(missing)}")
        problems.append(Problem(pid, *(_quaternion(raw[k], f"problem {pid!r} {k}") for k in "PQRS")))
    return ProblemFile(problems, _options(doc.get("options")))


def loads(text: str) -> ProblemFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"invalid JSON: {exc}") from exc
    return parse_problem_file(doc)


def load(path: str | Path) -> ProblemFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def dumps(pf: ProblemFile, indent: Optional[int] = 2) -> str:
    # json uses repr() for floats, which round-trips exactly
    return json.dumps(pf.to_dict(), indent=indent) + "\n"
