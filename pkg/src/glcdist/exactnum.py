"""Exact arithmetic over the rationals and the Gaussian rationals Q(i).

All scalars used by the classification and coset machinery live here: plain
rationals are ``fractions.Fraction`` (already canonical: lowest terms,
positive denominator, arbitrary precision), a Gaussian rational is a pair of
Fractions, and an ExactMatrix is a dense grid of Gaussian rationals.  The one
non-trivial operation is ``real_rank``, which treats complex n-by-n matrices
as real 2n^2-dimensional vectors and computes the rank over Q by
fraction-free (Bareiss) elimination on integers.

Everything is immutable after construction and every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction, str]


def rational_from_str(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction."""
    return Fraction(text.strip())


def rational_to_str(q: Fraction) -> str:
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    return str(q)


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_from_str(value)
    raise TypeError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i), with exact component-wise equality."""

    re: Fraction
    im: Fraction

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    # -- field operations -------------------------------------------------

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "GaussianRational":
        return _coerce(other) + (-self)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        """Multiplicative inverse; raises ZeroDivisionError at 0."""
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other) -> "GaussianRational":
        return self * _coerce(other).inv()

    def __rtruediv__(self, other) -> "GaussianRational":
        return _coerce(other) * self.inv()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            raise TypeError("only integer powers are exact")
        base = self if exponent >= 0 else self.inv()
        result = GQ_ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2 = re^2 + im^2, a rational."""
        return self.re * self.re + self.im * self.im

    # -- predicates and conversions ---------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"{self.re}+{self.im}i" if self.im > 0 else f"{self.re}{self.im}i"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"re": rational_to_str(self.re), "im": rational_to_str(self.im)}

    @classmethod
    def parse(cls, obj) -> "GaussianRational":
        """Accept {"re": "p/q", "im": "p/q"}, a bare rational string, or an int."""
        if isinstance(obj, dict):
            return cls(obj.get("re", "0"), obj.get("im", "0"))
        if isinstance(obj, (int, str, Fraction)):
            return cls(obj)
        raise TypeError(f"cannot parse Gaussian rational from {obj!r}")


def _coerce(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot coerce {value!r} into Q(i)")


GQ_ZERO = GaussianRational(0)
GQ_ONE = GaussianRational(1)
GQ_I = GaussianRational(0, 1)


def gq_add(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    return a + b


def gq_mul(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    return a * b


def gq_neg(a: GaussianRational) -> GaussianRational:
    return -a


def gq_inv(a: GaussianRational) -> GaussianRational:
    return a.inv()


def gq_conj(a: GaussianRational) -> GaussianRational:
    return a.conj()


class ExactMatrix:
    """A rows-by-cols grid of Gaussian rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[GaussianRational]]):
        rows = len(entries)
        if rows == 0:
            raise ValueError("matrix needs at least one row")
        cols = len(entries[0])
        if cols == 0 or any(len(r) != cols for r in entries):
            raise ValueError("ragged or empty matrix")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(tuple(_coerce(x) for x in row) for row in entries)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(
            [[GQ_ONE if i == j else GQ_ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[GQ_ZERO] * cols for _ in range(rows)])

    @classmethod
    def unit(cls, n: int, i: int, j: int, value: GaussianRational = GQ_ONE) -> "ExactMatrix":
        """n-by-n matrix with a single entry at 0-based (i, j)."""
        entries = [[GQ_ZERO] * n for _ in range(n)]
        entries[i][j] = value
        return cls(entries)

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self.entries
        )
        return f"ExactMatrix[{body}]"

    def conj(self) -> "ExactMatrix":
        return ExactMatrix([[x.conj() for x in row] for row in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = GQ_ZERO
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def inverse(self) -> "ExactMatrix":
        """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
        if self.rows != self.cols:
            raise ValueError("only square matrices invert")
        n = self.rows
        aug = [list(row) + [GQ_ONE if i == j else GQ_ZERO for j in range(n)]
               for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv_p = aug[col][col].inv()
            aug[col] = [x * inv_p for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    factor = aug[r][col]
                    aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
        return ExactMatrix([row[n:] for row in aug])

    def realify(self) -> tuple:
        """Flatten into 2*rows*cols rational coordinates (re, im per entry)."""
        flat = []
        for row in self.entries:
            for x in row:
                flat.append(x.re)
                flat.append(x.im)
        return tuple(flat)


def _integer_row(fracs: Sequence[Fraction]) -> list:
    """Clear denominators of one row (scaling does not change the row span)."""
    lcm = 1
    for q in fracs:
        d = q.denominator
        if d != 1:
            lcm = lcm // gcd(lcm, d) * d
    return [int(q * lcm) for q in fracs]


def _bareiss_rank(rows: list) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Divisions are exact by the Sylvester identity; intermediates stay as
    minors of the original matrix, so there is no coefficient explosion
    beyond determinant size.
    """
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    prev = 1
    pivot_row = 0
    for col in range(n):
        if pivot_row >= m:
            break
        swap = next((r for r in range(pivot_row, m) if rows[r][col] != 0), None)
        if swap is None:
            continue
        rows[pivot_row], rows[swap] = rows[swap], rows[pivot_row]
        p = rows[pivot_row][col]
        for r in range(pivot_row + 1, m):
            factor = rows[r][col]
            for c in range(col + 1, n):
                rows[r][c] = (rows[r][c] * p - factor * rows[pivot_row][c]) // prev
            rows[r][col] = 0
        prev = p
        pivot_row += 1
    return pivot_row


def real_rank(vectors: Iterable[ExactMatrix], n: int) -> int:
    """Dimension over R of the span of complex n-by-n matrices, exactly.

    Each matrix is realified into a 2n^2-coordinate rational vector and the
    rank is computed over Q.  Raises ValueError on a shape mismatch.
    """
    rows = []
    for mat in vectors:
        if mat.rows != n or mat.cols != n:
            raise ValueError(f"expected {n}x{n} matrix, got {mat.rows}x{mat.cols}")
        rows.append(_integer_row(mat.realify()))
    return _bareiss_rank(rows)
