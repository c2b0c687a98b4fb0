"""Highest derivatives of monomial products and the necessity test.

A monomial representation is an ordered product of character blocks
(k, s, size), each the character (det/|det|)^k |det|^(2s) on its size; the
depth equals the number of blocks.  Its highest derivative is the same
product with every size lowered by one (blocks reaching size zero vanish),
the character data unchanged.

Iterating the highest derivative and testing the pairing condition at every
stage gives a necessity test: a failed stage certifies non-distinction for
unitary inputs whose stage-0 parameter satisfies the pairing condition.
The converse direction is not asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .distinction import check_condition_i
from .exactnum import GaussianRational
from .params import CharacterCx, LanglandsParameter


@dataclass(frozen=True)
class MonomialBlock:
    k: int
    s: GaussianRational
    size: int

    def __post_init__(self):
        if not isinstance(self.s, GaussianRational):
            object.__setattr__(self, "s", GaussianRational.parse(self.s))
        if self.size < 1:
            raise ValueError("block size must be positive")

    def to_json(self) -> dict:
        return {"k": self.k, "s": self.s.to_json(), "size": self.size}


class MonomialRep:
    """An ordered sequence of character blocks; may be empty (size-0 group)."""

    __slots__ = ("blocks",)

    def __init__(self, blocks=()):
        self.blocks = tuple(
            b if isinstance(b, MonomialBlock) else MonomialBlock(*b) for b in blocks
        )

    @property
    def depth(self) -> int:
        return len(self.blocks)

    @property
    def total_size(self) -> int:
        return sum(b.size for b in self.blocks)

    def is_empty(self) -> bool:
        return not self.blocks

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialRep) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"MonomialRep({[(b.k, str(b.s), b.size) for b in self.blocks]})"

    def parameter(self) -> LanglandsParameter:
        """Expand into a parameter: block (k, s, n) contributes
        kappa_{k, s+(n+1-2i)/2} for i = 1..n."""
        if self.is_empty():
            raise ValueError("the empty monomial has no parameter")
        half = GaussianRational(Fraction(1, 2))
        chars = []
        for b in self.blocks:
            for i in range(1, b.size + 1):
                chars.append(CharacterCx(b.k, b.s + (b.size + 1 - 2 * i) * half))
        return LanglandsParameter(chars)

    def to_json(self) -> dict:
        return {"type": "monomial", "blocks": [b.to_json() for b in self.blocks]}

    @classmethod
    def parse(cls, obj: dict) -> "MonomialRep":
        return cls(
            MonomialBlock(int(b["k"]), GaussianRational.parse(b["s"]), int(b["size"]))
            for b in obj["blocks"]
        )


def highest_derivative(m: MonomialRep) -> MonomialRep:
    """Lower every block size by one, dropping exhausted blocks."""
    if m.is_empty():
        raise ValueError("highest derivative of the empty monomial")
    return MonomialRep(
        MonomialBlock(b.k, b.s, b.size - 1) for b in m.blocks if b.size > 1
    )


def derivative_necessity_test(
    m: MonomialRep,
) -> Tuple[bool, Optional[int]]:
    """Iterate highest derivatives, testing the pairing condition each stage.

    Returns (True, None) when every stage (including stage 0) satisfies the
    pairing condition, else (False, first failing stage).  A failure
    certifies non-distinction for unitary inputs that satisfy the pairing
    condition at stage 0.
    """
    current = m
    stage = 0
    while not current.is_empty():
        ok, _ = check_condition_i(current.parameter())
        if not ok:
            return False, stage
        current = highest_derivative(current)
        stage += 1
    return True, None
