"""Deterministic check reports: verdict, per-family counts, first witness."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    family: str
    location: str
    detail: str

    def line(self) -> str:
        return f"{self.family} @ {self.location}: {self.detail}"


@dataclass
class Report:
    name: str
    counts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def tick(self, family: str, n: int = 1) -> None:
        self.counts[family] = self.counts.get(family, 0) + n

    def fail(self, family: str, location: str, detail: str) -> None:
        self.witnesses.append(Witness(family, location, detail))

    def note(self, text: str) -> None:
        self.notes.append(text)

    def merge(self, other: "Report") -> None:
        for fam, n in other.counts.items():
            self.tick(f"{other.name}.{fam}", n)
        for w in other.witnesses:
            self.witnesses.append(
                Witness(f"{other.name}.{w.family}", w.location, w.detail)
            )
        self.notes.extend(f"{other.name}: {n}" for n in other.notes)

    def lines(self, machine: bool = False) -> list:
        out = []
        if machine:
            out.append(f"report\t{self.name}\t{'pass' if self.ok else 'fail'}")
            for fam in sorted(self.counts):
                out.append(f"checked\t{fam}\t{self.counts[fam]}")
            for w in self.witnesses[:1]:
                out.append(f"witness\t{w.family}\t{w.location}\t{w.detail}")
            for n in self.notes:
                out.append(f"note\t{n}")
        else:
            out.append(f"[{'PASS' if self.ok else 'FAIL'}] {self.name}")
            for fam in sorted(self.counts):
                out.append(f"  checked {fam}: {self.counts[fam]}")
            if self.witnesses:
                out.append(f"  first counterexample: {self.witnesses[0].line()}")
            for n in self.notes:
                out.append(f"  note: {n}")
        return out

    def text(self, machine: bool = False) -> str:
        return "\n".join(self.lines(machine))
