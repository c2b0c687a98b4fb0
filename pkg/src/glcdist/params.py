"""Characters of C^x, parameter multisets, and unitary building blocks.

Conventions, fixed once for the whole package:

*   A character of C^x is kappa_{m,s}(z) = (z/|z|)^m |z|^(2s) with m an
    integer and s a Gaussian rational.  The stored ``s`` is always the
    exponent in this |z|^(2s) normalization; data written in the plain
    |z|^e normalization enters with s = e/2.
*   A parameter is a multiset of n such characters.  Its normal form sorts
    by (m ascending, Re s descending, Im s descending), so equality of
    normal forms is multiset equality and reported witnesses are
    deterministic.
*   A unitary representation is described by a multiset of blocks: either a
    unitary character block on size n (twist exponent k, with |det|^u,
    u purely imaginary), or a complementary-series block on size 2m
    (k, u as before, plus an inner |det|^t x |det|^{-t} with 0 < t < 1).

``to_langlands`` expands blocks into characters: a character block of size
n contributes kappa_{k,(u+n+1-2i)/2} for i = 1..n, and a complementary
series block splits into the two constituent character blocks with outer
twists u+t and u-t before expanding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .exactnum import GaussianRational, Rational, rational_to_str


@dataclass(frozen=True)
class CharacterCx:
    """The character kappa_{m,s} of C^x."""

    m: int
    s: GaussianRational

    def __post_init__(self):
        if not isinstance(self.m, int):
            raise TypeError("twist exponent m must be an integer")
        if not isinstance(self.s, GaussianRational):
            object.__setattr__(self, "s", GaussianRational.parse(self.s))
        # Cache hash and normal-form sort key; classification scans hash and
        # compare characters heavily.
        object.__setattr__(self, "_hash", hash((self.m, self.s.re, self.s.im)))
        object.__setattr__(self, "_key", (self.m, -self.s.re, -self.s.im))

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return self._key

    def conj_inverse(self) -> "CharacterCx":
        """The inverse of the conjugate character: kappa_{m,-s}.

        Precomposing with conjugation sends kappa_{m,s} to kappa_{-m,s},
        and inverting that gives kappa_{m,-s}.
        """
        return CharacterCx(self.m, -self.s)

    def value_at_minus_one(self) -> int:
        """kappa_{m,s}(-1) = (-1)^m; the modulus factor is 1 at z = -1."""
        return -1 if self.m % 2 else 1

    def __mul__(self, other: "CharacterCx") -> "CharacterCx":
        return CharacterCx(self.m + other.m, self.s + other.s)

    def is_half_integral_odd(self) -> bool:
        """m odd, s real with 2s an integer (the even-multiplicity clause)."""
        two_s = self.s + self.s
        return self.m % 2 == 1 and two_s.is_integer()

    def to_json(self) -> dict:
        return {"m": self.m, "s": self.s.to_json()}

    @classmethod
    def parse(cls, obj: dict) -> "CharacterCx":
        return cls(int(obj["m"]), GaussianRational.parse(obj["s"]))

    def __str__(self):
        return f"k[{self.m},{self.s}]"


def conj_inverse(c: CharacterCx) -> CharacterCx:
    return c.conj_inverse()


def value_at_minus_one(c: CharacterCx) -> int:
    return c.value_at_minus_one()


def char_product(a: CharacterCx, b: CharacterCx) -> CharacterCx:
    return a * b


class LanglandsParameter:
    """A multiset of characters of C^x, kept in normal form."""

    __slots__ = ("chars",)

    def __init__(self, chars: Iterable[CharacterCx]):
        self.chars = tuple(sorted(chars, key=CharacterCx.sort_key))
        if not self.chars:
            raise ValueError("a parameter needs at least one character")

    @property
    def n(self) -> int:
        return len(self.chars)

    def __eq__(self, other) -> bool:
        return isinstance(other, LanglandsParameter) and self.chars == other.chars

    def __hash__(self) -> int:
        return hash(self.chars)

    def __iter__(self):
        return iter(self.chars)

    def __len__(self):
        return len(self.chars)

    def __repr__(self):
        return "LanglandsParameter({%s})" % ", ".join(str(c) for c in self.chars)

    def counts(self) -> dict:
        out: dict = {}
        for c in self.chars:
            out[c] = out.get(c, 0) + 1
        return out

    def conjugated(self) -> "LanglandsParameter":
        """Replace every kappa_{m,s} by kappa_{m,-s}."""
        return LanglandsParameter(c.conj_inverse() for c in self.chars)

    def to_json(self) -> dict:
        return {
            "type": "langlands",
            "characters": [c.to_json() for c in self.chars],
        }

    @classmethod
    def parse(cls, obj: dict) -> "LanglandsParameter":
        return cls(CharacterCx.parse(c) for c in obj["characters"])


def param_equivalent(a: LanglandsParameter, b: LanglandsParameter) -> bool:
    """True iff the two character multisets coincide."""
    return a == b


# -- unitary building blocks ----------------------------------------------


@dataclass(frozen=True)
class CharBlock:
    """Unitary character block (det/|det|)^k |det|^u on size n, u imaginary."""

    n: int
    k: int
    u: GaussianRational

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("block size must be positive")
        if not isinstance(self.u, GaussianRational):
            object.__setattr__(self, "u", GaussianRational.parse(self.u))
        if self.u.re != 0:
            raise ValueError("character block twist u must be purely imaginary")

    @property
    def size(self) -> int:
        return self.n

    def to_json(self) -> dict:
        return {"kind": "char", "n": self.n, "k": self.k, "u": self.u.to_json()}


@dataclass(frozen=True)
class CompSeriesBlock:
    """Complementary series block on size 2m: twists (k, u), inner +-t, 0<t<1."""

    m: int
    k: int
    u: GaussianRational
    t: Fraction

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("block size must be positive")
        if not isinstance(self.u, GaussianRational):
            object.__setattr__(self, "u", GaussianRational.parse(self.u))
        if self.u.re != 0:
            raise ValueError("complementary twist u must be purely imaginary")
        t = self.t if isinstance(self.t, Fraction) else Fraction(self.t)
        object.__setattr__(self, "t", t)
        if not (0 < t < 1):
            raise ValueError("complementary parameter requires 0 < t < 1 strictly")

    @property
    def size(self) -> int:
        return 2 * self.m

    def to_json(self) -> dict:
        return {
            "kind": "comp",
            "m": self.m,
            "k": self.k,
            "u": self.u.to_json(),
            "t": rational_to_str(self.t),
        }


UnitaryBlock = Union[CharBlock, CompSeriesBlock]


def _block_sort_key(b: UnitaryBlock):
    if isinstance(b, CharBlock):
        return (0, b.n, b.k, b.u.im, Fraction(0))
    return (1, b.m, b.k, b.u.im, b.t)


class UnitaryRep:
    """A multiset of unitary blocks; total size is the sum of block sizes."""

    __slots__ = ("blocks",)

    def __init__(self, blocks: Iterable[UnitaryBlock]):
        self.blocks = tuple(sorted(blocks, key=_block_sort_key))
        if not self.blocks:
            raise ValueError("a unitary representation needs at least one block")

    @property
    def n(self) -> int:
        return sum(b.size for b in self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, UnitaryRep) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return f"UnitaryRep({list(self.blocks)!r})"

    def to_json(self) -> dict:
        return {"type": "unitary", "blocks": [b.to_json() for b in self.blocks]}

    @classmethod
    def parse(cls, obj: dict) -> "UnitaryRep":
        blocks = []
        for raw in obj["blocks"]:
            kind = raw.get("kind")
            if kind == "char":
                blocks.append(
                    CharBlock(int(raw["n"]), int(raw["k"]), GaussianRational.parse(raw["u"]))
                )
            elif kind == "comp":
                blocks.append(
                    CompSeriesBlock(
                        int(raw["m"]),
                        int(raw["k"]),
                        GaussianRational.parse(raw["u"]),
                        Fraction(raw["t"]),
                    )
                )
            else:
                raise ValueError(f"unknown block kind: {kind!r}")
        return cls(blocks)


def _char_block_chars(n: int, k: int, u: GaussianRational) -> tuple:
    """Characters of the size-n block (det/|det|)^k |det|^u.

    The i-th slot carries |z|^(u+n+1-2i), i.e. kappa-slot (u+n+1-2i)/2.
    """
    half = Fraction(1, 2)
    return tuple(
        CharacterCx(k, (u + (n + 1 - 2 * i)) * GaussianRational(half))
        for i in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def block_characters(block: UnitaryBlock) -> tuple:
    """The character multiset contributed by one block, as a sorted tuple."""
    if isinstance(block, CharBlock):
        chars = _char_block_chars(block.n, block.k, block.u)
    else:
        up = block.u + GaussianRational(block.t)
        down = block.u - GaussianRational(block.t)
        chars = _char_block_chars(block.m, block.k, up) + _char_block_chars(
            block.m, block.k, down
        )
    return tuple(sorted(chars, key=CharacterCx.sort_key))


def to_langlands(rep: UnitaryRep) -> LanglandsParameter:
    """Expand a unitary block multiset into its parameter."""
    chars: list = []
    for block in rep.blocks:
        chars.extend(block_characters(block))
    return LanglandsParameter(chars)


def parse_parameter_file(obj: dict):
    """Dispatch a parameter JSON object on its "type" field."""
    kind = obj.get("type")
    if kind == "langlands":
        return LanglandsParameter.parse(obj)
    if kind == "unitary":
        return UnitaryRep.parse(obj)
    raise ValueError(f'unknown parameter type: {kind!r} (expected "langlands" or "unitary")')
