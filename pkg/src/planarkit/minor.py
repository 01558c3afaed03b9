"""Minor models of K5 and K3,3."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

KINDS = ("K5", "K33")


@dataclass(frozen=True)
class MinorModel:
    """Branch sets plus optional connecting paths.

    For ``K33`` the first three branch sets form one side.  A path is a vertex
    list whose first and last vertices lie in two different branch sets and
    whose interior avoids every branch set.
    """

    kind: str
    branch_sets: tuple[tuple[int, ...], ...]
    paths: tuple[tuple[int, ...], ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "branch_sets": [list(b) for b in self.branch_sets],
            "paths": [list(p) for p in self.paths],
        }

    @classmethod
    def from_json(cls, doc: dict) -> MinorModel:
        return cls(
            str(doc["kind"]),
            tuple(tuple(int(v) for v in b) for b in doc["branch_sets"]),
            tuple(tuple(int(v) for v in p) for p in doc.get("paths", [])),
        )


def required_pairs(kind: str) -> list[tuple[int, int]]:
    if kind == "K5":
        return list(combinations(range(5), 2))
    if kind == "K33":
        return [(i, j) for i in range(3) for j in range(3, 6)]
    raise ValueError(f"unknown minor kind {kind!r}")
