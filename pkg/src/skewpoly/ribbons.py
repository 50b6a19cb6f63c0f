"""Ribbons as compositions, with their product algebra.

A ribbon is a connected skew shape containing no 2x2 square.  Reading
row sizes bottom to top gives a bijection with compositions, written
(a_1,...,a_k); reading column sizes left to right gives a second
composition, written [c_1,...,c_n].  Both readings determine the shape.

Products: concatenation a.b stacks b on top of a in a new column;
near concatenation fuses the top row of a with the bottom row of b;
composition a o b replaces every square of a with a copy of b, joining
copies by near concatenation along rows of a and by concatenation
between rows.  Composition is associative with the single square as
two-sided identity, and size is multiplicative.

Every ribbon has a unique irreducible factorization under o, obtained
here by greedily splitting off a right factor and repairing the one
junction a recursive split can leave: two adjacent single-row (or
single-column) factors, which fuse into one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .errors import InvalidArg
from .shapes import (
    SkewShape,
    is_ribbon,
    parse_ribbon_text,
    ribbon_rows,
    ribbon_shape,
    transpose,
)


@dataclass(frozen=True)
class Ribbon:
    """A ribbon, stored by its row reading (row sizes, bottom to top)."""

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise InvalidArg("a ribbon needs at least one row")
        if any(not isinstance(r, int) or r < 1 for r in self.rows):
            raise InvalidArg(f"row sizes must be positive integers, got {self.rows}")
        object.__setattr__(self, "rows", tuple(self.rows))

    @classmethod
    def from_cols(cls, cols: Sequence[int]) -> "Ribbon":
        """Build from the column reading [c_1,...,c_n], left to right.

        The ribbon with column reading c is the transpose of the ribbon
        whose row reading is c reversed.
        """
        if not cols or any(c < 1 for c in cols):
            raise InvalidArg(f"column sizes must be positive integers, got {tuple(cols)}")
        shape = transpose(ribbon_shape(tuple(reversed(tuple(cols)))))
        rows = ribbon_rows(shape)
        assert rows is not None
        return cls(rows)

    @classmethod
    def from_shape(cls, shape: SkewShape) -> "Ribbon":
        rows = ribbon_rows(shape)
        if rows is None:
            raise InvalidArg(f"{shape} is not a ribbon")
        return cls(rows)

    @classmethod
    def parse(cls, text: str) -> "Ribbon":
        """Parse "(a,b,...)" as a row reading or "[c,d,...]" as a
        column reading."""
        return cls(parse_ribbon_text(text))

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def shape(self) -> SkewShape:
        return ribbon_shape(self.rows)

    @property
    def cols(self) -> tuple[int, ...]:
        """Column reading: column heights left to right."""
        return tuple(bot - top + 1 for top, bot in self.shape.column_intervals)

    @property
    def num_cols(self) -> int:
        return self.size - len(self.rows) + 1

    @property
    def is_row(self) -> bool:
        return len(self.rows) == 1

    @property
    def is_col(self) -> bool:
        return all(r == 1 for r in self.rows)

    def __str__(self) -> str:
        return f"({','.join(str(r) for r in self.rows)})"

    def cols_syntax(self) -> str:
        return f"[{','.join(str(c) for c in self.cols)}]"


def concat(a: Ribbon, b: Ribbon) -> Ribbon:
    """a.b: stack b on top of a, no shared column."""
    return Ribbon(a.rows + b.rows)


def near_concat(a: Ribbon, b: Ribbon) -> Ribbon:
    """a (.) b: fuse a's top row with b's bottom row."""
    return Ribbon(a.rows[:-1] + (a.rows[-1] + b.rows[0],) + b.rows[1:])


def _fused_power(b: Ribbon, m: int) -> Ribbon:
    out = b
    for _ in range(m - 1):
        out = near_concat(out, b)
    return out


def compose(a: Ribbon, b: Ribbon) -> Ribbon:
    """a o b: replace every square of a with a copy of b.

    Equals the concatenation over rows of a of the (row size)-fold
    near-concatenation powers of b; size multiplies.
    """
    blocks = [_fused_power(b, r) for r in a.rows]
    out = blocks[0]
    for block in blocks[1:]:
        out = concat(out, block)
    return out


def reverse(a: Ribbon) -> Ribbon:
    """180-degree rotation: the row reading reversed."""
    return Ribbon(a.rows[::-1])


SQUARE = Ribbon((1,))


def all_ribbons(size: int) -> Iterator[Ribbon]:
    """All ribbons of the given size, as compositions in lexicographic
    order of their row readings."""
    if size < 0:
        raise InvalidArg(f"size must be nonnegative, got {size}")

    def parts(remaining: int, prefix: tuple[int, ...]) -> Iterator[Ribbon]:
        if remaining == 0:
            yield Ribbon(prefix)
            return
        for first in range(1, remaining + 1):
            yield from parts(remaining - first, prefix + (first,))

    if size > 0:
        yield from parts(size, ())


@dataclass(frozen=True)
class Factorization:
    """An ordered factorization under o; composing the factors in order
    reproduces the ribbon they factor."""

    factors: tuple[Ribbon, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise InvalidArg("a factorization needs at least one factor")

    def recompose(self) -> Ribbon:
        out = self.factors[0]
        for f in self.factors[1:]:
            out = compose(out, f)
        return out

    def __str__(self) -> str:
        return " o ".join(str(f) for f in self.factors)


def is_trivial_split(b: Ribbon, g: Ribbon) -> bool:
    """Whether the factorization (b o g) is trivial: a single-square
    factor, two single rows, or two single columns."""
    if b.size == 1 or g.size == 1:
        return True
    if b.is_row and g.is_row:
        return True
    if b.is_col and g.is_col:
        return True
    return False


def _parse_blocks(alpha: tuple[int, ...], gamma: tuple[int, ...]) -> tuple[int, ...] | None:
    """Recover b with alpha = b o gamma by scanning alpha's rows.

    Copies of gamma tile alpha bottom to top; inside one row of b the
    copies fuse (the junction row reads gamma's last plus first row),
    between rows of b they abut cleanly.  Both junction values differ,
    so the scan is deterministic; returns b's row reading or None.
    """
    t = len(gamma)
    if t == 1:
        g = gamma[0]
        if all(r % g == 0 for r in alpha):
            return tuple(r // g for r in alpha)
        return None
    rows = alpha
    n = len(rows)
    beta: list[int] = []
    copies = 1
    offset = 0
    i = 0
    while True:
        need = gamma[offset : t - 1]
        if tuple(rows[i : i + len(need)]) != need:
            return None
        i += len(need)
        if i >= n:
            return None
        last = rows[i]
        i += 1
        if last == gamma[t - 1]:
            beta.append(copies)
            if i == n:
                return tuple(beta)
            copies = 1
            offset = 0
        elif last == gamma[t - 1] + gamma[0]:
            copies += 1
            offset = 1
            if i >= n:
                return None
        else:
            return None


def _candidate_right_factors(alpha: tuple[int, ...], q: int) -> list[tuple[int, ...]]:
    """Right factors of size q consistent with alpha's bottom rows.

    The first copy of a right factor gamma occupies alpha's lowest rows
    verbatim, except that its top row may be fused with the next copy;
    that leaves at most two candidates per size.
    """
    out = []
    acc = 0
    for t, r in enumerate(alpha, 1):
        if acc + r == q:
            out.append(alpha[:t])
        fused_top = q - acc
        if 1 <= fused_top < r and t < len(alpha):
            out.append(alpha[: t - 1] + (fused_top,))
        acc += r
        if acc >= q:
            break
    return out


def _split_nontrivial(a: Ribbon) -> tuple[Ribbon, Ribbon] | None:
    n = a.size
    for q in range(2, n // 2 + 1):
        if n % q != 0:
            continue
        for gamma_rows in _candidate_right_factors(a.rows, q):
            beta_rows = _parse_blocks(a.rows, gamma_rows)
            if beta_rows is None:
                continue
            b, g = Ribbon(beta_rows), Ribbon(gamma_rows)
            if is_trivial_split(b, g):
                continue
            if compose(b, g) != a:
                continue
            return b, g
    return None


def irreducible_factorization(a: Ribbon) -> Factorization:
    """The unique irreducible factorization of a under o.

    Splits greedily, then fuses the one possibly-trivial junction pair
    a split can create; a fused single-row (or single-column) factor is
    itself irreducible and cannot make its new neighbors trivial, so no
    cascade is possible.  Uniqueness of the result lets any discovered
    nontrivial split be taken first; recomposition is asserted.
    """

    def factors_of(r: Ribbon) -> list[Ribbon]:
        split = _split_nontrivial(r)
        if split is None:
            return [r]
        b, g = split
        left, right = factors_of(b), factors_of(g)
        x, y = left[-1], right[0]
        if is_trivial_split(x, y):
            left = left[:-1] + [compose(x, y)]
            right = right[1:]
        return left + right

    result = Factorization(tuple(factors_of(a)))
    if result.recompose() != a:
        raise InvalidArg(f"factorization of {a} failed to recompose")
    return result


def schur_equivalent(a: Ribbon, b: Ribbon) -> bool:
    """Whether the ribbon Schur functions of a and b coincide: equal-
    length irreducible factorizations matching factor by factor up to
    reversal."""
    fa = irreducible_factorization(a).factors
    fb = irreducible_factorization(b).factors
    if len(fa) != len(fb):
        return False
    return all(x == y or x == reverse(y) for x, y in zip(fa, fb))


def g_equivalent(a: Ribbon, b: Ribbon) -> bool:
    """Whether the dual stable Grothendieck polynomials of a and b
    coincide: exactly when a = b or a = b reversed."""
    return a == b or a == reverse(b)


def g_schur_coefficient(a: Ribbon, c: Ribbon) -> int:
    """Coefficient of the ribbon Schur function s_c in the Schur
    expansion of g_a, on column readings: the product over columns of
    C(a_i - 1, a_i - c_i); zero unless c has the same column count as a
    and is dominated by it columnwise."""
    ac, cc = a.cols, c.cols
    if len(ac) != len(cc):
        return 0
    out = 1
    for ai, ci in zip(ac, cc):
        if ci > ai:
            return 0
        out *= comb(ai - 1, ai - ci)
    return out


def dominated_ribbons(a: Ribbon) -> Iterator[Ribbon]:
    """All ribbons c <= a columnwise (same column count, each column no
    taller), in lexicographic order of column readings."""
    ac = a.cols

    def walk(i: int, prefix: tuple[int, ...]) -> Iterator[Ribbon]:
        if i == len(ac):
            yield Ribbon.from_cols(prefix)
            return
        for c in range(1, ac[i] + 1):
            yield from walk(i + 1, prefix + (c,))

    yield from walk(0, ())
