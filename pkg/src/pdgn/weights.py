"""Integer weight vectors on Pluecker coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import json

from .errors import InvalidInput


# Index order of the Gr(3,6) dictionary.  The reference basis lists 236 twice;
# the second occurrence stands for 256.
PAPER36 = ("123 124 134 234 125 135 235 145 245 345 "
           "126 136 236 146 246 346 156 256 356 456")


def lex_subsets(k: int, n: int) -> tuple:
    return tuple(combinations(range(1, n + 1), k))


def paper36_order() -> list:
    return [tuple(int(c) for c in word) for word in PAPER36.split()]


def named_order(name: str, k: int, n: int) -> tuple:
    if name == "lex":
        return lex_subsets(k, n)
    if name == "paper36" and (k, n) == (3, 6):
        return tuple(paper36_order())
    raise InvalidInput(f"unknown index order {name!r} for k={k}, n={n}")


@dataclass(frozen=True)
class WeightVector:
    """Integer entries indexed by sorted k-subsets in a fixed order."""

    k: int
    n: int
    subsets: tuple
    entries: tuple
    order: str = "lex"

    def __post_init__(self):
        subsets = tuple(tuple(sorted(s)) for s in self.subsets)
        try:
            entries = tuple(int(x) for x in self.entries)
        except (TypeError, ValueError):
            raise InvalidInput("weights must be integers") from None
        if entries != tuple(self.entries):
            raise InvalidInput("weights must be integers")
        if len(subsets) != len(entries):
            raise InvalidInput("subsets and entries differ in length")
        if sorted(subsets) != list(lex_subsets(self.k, self.n)):
            raise InvalidInput("index order must list every k-subset once")
        object.__setattr__(self, "subsets", subsets)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def lex(cls, k, n, entries):
        return cls(k, n, lex_subsets(k, n), entries)

    @classmethod
    def from_mapping(cls, k, n, mapping, subsets=None, order="lex"):
        subsets = lex_subsets(k, n) if subsets is None else subsets
        return cls(k, n, subsets, [mapping[tuple(s)] for s in subsets], order)

    def __getitem__(self, subset):
        return self.as_dict()[tuple(sorted(subset))]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def as_dict(self) -> dict:
        return dict(zip(self.subsets, self.entries))

    def reorder(self, subsets, order="custom") -> "WeightVector":
        return WeightVector.from_mapping(self.k, self.n, self.as_dict(), subsets, order)

    def __neg__(self):
        return WeightVector(self.k, self.n, self.subsets, [-x for x in self.entries], self.order)

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "order": self.order, "weights": list(self.entries)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "WeightVector":
        """Read {"k", "n", "order", "weights"}; "subsets" may replace a named order."""
        try:
            k, n, entries = int(data["k"]), int(data["n"]), list(data["weights"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed weight record: {exc}") from None
        if "subsets" in data:
            return cls(k, n, [tuple(s) for s in data["subsets"]], entries,
                       data.get("order", "custom"))
        order = data.get("order", "lex")
        return cls(k, n, named_order(order, k, n), entries, order)

    @classmethod
    def from_json(cls, text: str) -> "WeightVector":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"not JSON: {exc}") from None
