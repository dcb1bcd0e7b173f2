"""Check reports and presentation serialization."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .words import Presentation, format_word, parse_word

STATUSES = ("pass", "fail", "info")


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    details: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class Report:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, details: str = "") -> None:
        self.checks.append(Check(name, "pass" if ok else "fail", details))

    def info(self, name: str, details: str) -> None:
        self.checks.append(Check(name, "info", details))

    @property
    def summary(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "parameters": dict(self.parameters),
            "checks": [{"name": c.name, "status": c.status, "details": c.details}
                       for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Report":
        rep = cls(d["command"], dict(d["parameters"]),
                  [Check(c["name"], c["status"], c["details"]) for c in d["checks"]])
        if rep.summary != d["summary"]:
            raise ValueError("summary inconsistent with checks")
        return rep

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines = [f"command: {self.command}", f"parameters: {params}"]
        for c in self.checks:
            lines.append(f"[{c.status}] {c.name}" + (f": {c.details}" if c.details else ""))
        lines.append(f"summary: {self.summary}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- presentations


def presentation_to_text(p: Presentation) -> str:
    lines = [f"gens: {p.ngens}"]
    lines += [f"{name}: {format_word(w, p.prefix)}" for name, w in p.relators]
    return "\n".join(lines) + "\n"


def presentation_from_text(text: str, prefix: str = "t") -> Presentation:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head, _, n = lines[0].partition(":")
    if head.strip() != "gens":
        raise ValueError("first line must be 'gens: <n>'")
    rels = []
    for ln in lines[1:]:
        name, _, body = ln.partition(":")
        rels.append((name.strip(), parse_word(body, prefix)))
    return Presentation(int(n), tuple(rels), prefix)


def presentation_to_gap(p: Presentation) -> str:
    lines = [f"F := FreeGroup({p.ngens});;"]
    lines += [f"{p.prefix}{i} := F.{i};;" for i in range(1, p.ngens + 1)]
    body = ",\n  ".join(format_word(w, p.prefix) if w else "One(F)" for _, w in p.relators)
    lines.append(f"rels := [\n  {body}\n];;")
    lines.append("G := F / rels;;")
    return "\n".join(lines) + "\n"


def presentation_to_dict(p: Presentation) -> dict[str, Any]:
    return {
        "ngens": p.ngens,
        "prefix": p.prefix,
        "relators": [{"name": name, "word": list(w)} for name, w in p.relators],
    }


def presentation_from_dict(d: dict[str, Any]) -> Presentation:
    rels = tuple((r["name"], tuple(r["word"])) for r in d["relators"])
    return Presentation(d["ngens"], rels, d.get("prefix", "t"))


def presentation_to_json(p: Presentation) -> str:
    return json.dumps(presentation_to_dict(p), indent=1)


def presentation_from_json(text: str) -> Presentation:
    return presentation_from_dict(json.loads(text))
