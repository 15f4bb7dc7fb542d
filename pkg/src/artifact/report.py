"""Pass/fail reports shared by the validators and the command line."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    """One violated instance of a check, located by its label tuple."""

    where: tuple
    lhs: str = ""
    rhs: str = ""
    note: str = ""

    def as_dict(self) -> dict:
        out = {"where": [str(x) for x in self.where]}
        if self.lhs or self.rhs:
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Check:
    name: str
    tested: int = 0
    failures: list[Failure] = field(default_factory=list)
    skipped: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, where, lhs="", rhs="", note=""):
        self.failures.append(Failure(tuple(where), str(lhs), str(rhs), note))

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail", "tested": self.tested}
        if self.skipped:
            out["skipped"] = self.skipped
        if self.failures:
            out["failures"] = [f.as_dict() for f in sorted(self.failures, key=_failure_key)]
        return out


def _failure_key(f: Failure):
    return tuple(str(x) for x in f.where)


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: Report) -> Report:
        self.checks.extend(other.checks)
        return self

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[tuple[str, Failure]]:
        return [(c.name, f) for c in self.checks for f in c.failures]

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "info": self.info,
            "checks": [c.as_dict() for c in self.checks],
        }

    def render_text(self, max_failures: int = 10) -> str:
        lines = [f"== {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for key, value in self.info.items():
            lines.append(f"  {key}: {value}")
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            extra = f" (skipped: {c.skipped})" if c.skipped else ""
            lines.append(f"  [{status}] {c.name}: {c.tested} instances{extra}")
            for f in sorted(c.failures, key=_failure_key)[:max_failures]:
                where = ", ".join(str(x) for x in f.where)
                detail = f" lhs={f.lhs} rhs={f.rhs}" if (f.lhs or f.rhs) else ""
                note = f" {f.note}" if f.note else ""
                lines.append(f"      at ({where}){detail}{note}")
            if len(c.failures) > max_failures:
                lines.append(f"      ... {len(c.failures) - max_failures} more")
        return "\n".join(lines)
