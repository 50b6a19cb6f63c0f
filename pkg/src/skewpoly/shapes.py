"""Skew shapes as normalized partition pairs.

A skew shape outer/inner is stored as a pair of integer partitions with
inner contained in outer.  All SkewShape instances are normalized: no row
and no column of the diagram is empty, and the diagram touches row 1 and
column 1.  Two placements of the same diagram therefore compare equal,
which every downstream equality cache relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArg, InvalidShape, ParseError

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing sequence and strip trailing zeros.

    Zeros are accepted as padding anywhere they keep the sequence weakly
    decreasing; negative or increasing entries raise InvalidShape.
    """
    seq = tuple(int(p) for p in parts)
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise InvalidShape(f"parts must be weakly decreasing, got {seq}")
    if seq and seq[-1] < 0:
        raise InvalidShape(f"parts must be nonnegative, got {seq}")
    return tuple(p for p in seq if p > 0)


def conjugate(parts: Sequence[int]) -> Partition:
    """Transpose a partition: column lengths of its Young diagram."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Whether the diagram of inner fits inside the diagram of outer."""
    if len(inner) > len(outer):
        return all(p == 0 for p in inner[len(outer):])
    return all(i <= o for i, o in zip(inner, outer))


@dataclass(frozen=True)
class SkewShape:
    """A normalized skew diagram outer/inner.

    Construct through normalize() or parse_shape(); the constructor
    rejects pairs that are not already in normal form.
    """

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        outer, inner = self.outer, self.inner
        if inner and not outer:
            raise InvalidShape(f"inner {inner} not contained in empty outer")
        if any(p <= 0 for p in outer) or any(p <= 0 for p in inner):
            raise InvalidShape(f"normalized shape stores no zero parts: {self}")
        for a, b in zip(outer, outer[1:]):
            if a < b:
                raise InvalidShape(f"outer {outer} is not a partition")
        for a, b in zip(inner, inner[1:]):
            if a < b:
                raise InvalidShape(f"inner {inner} is not a partition")
        if outer:
            if len(inner) >= len(outer):
                raise InvalidShape(f"{self} has an empty last row")
            for j, p in enumerate(inner):
                if p >= outer[j]:
                    raise InvalidShape(f"{self} has an empty row {j + 1}")
                if p > outer[j + 1]:
                    raise InvalidShape(f"{self} has an empty column {outer[j + 1] + 1}")

    def __str__(self) -> str:
        return shape_syntax(self)

    @property
    def rows(self) -> int:
        return len(self.outer)

    @property
    def cols(self) -> int:
        return self.outer[0] if self.outer else 0

    @cached_property
    def cells(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @cached_property
    def inner_padded(self) -> Partition:
        """inner padded with zeros to the number of rows."""
        return self.inner + (0,) * (self.rows - len(self.inner))

    @cached_property
    def row_intervals(self) -> tuple[tuple[int, int], ...]:
        """Per row, the 1-based (first, last) occupied column."""
        return tuple(
            (mu + 1, lam) for mu, lam in zip(self.inner_padded, self.outer)
        )

    @cached_property
    def column_intervals(self) -> tuple[tuple[int, int], ...]:
        """Per column, the 1-based (top, bottom) occupied row.

        Rows occupying any fixed column form a contiguous interval, so a
        (top, bottom) pair per column describes the diagram completely.
        """
        out = []
        for c in range(1, self.cols + 1):
            top = min(i for i, (s, e) in enumerate(self.row_intervals, 1) if s <= c <= e)
            bot = max(i for i, (s, e) in enumerate(self.row_intervals, 1) if s <= c <= e)
            out.append((top, bot))
        return tuple(out)

    @cached_property
    def column_heights(self) -> tuple[int, ...]:
        return tuple(b - t + 1 for t, b in self.column_intervals)

    def cells_colmajor(self) -> Iterator[tuple[int, int]]:
        """All cells as (row, col), leftmost column first, top to bottom."""
        for c, (top, bot) in enumerate(self.column_intervals, 1):
            for r in range(top, bot + 1):
                yield (r, c)

    @cached_property
    def connected(self) -> bool:
        """Whether consecutive rows always share a column."""
        r2 = self.row_overlaps(2)
        return all(v >= 1 for v in r2)

    def row_overlaps(self, k: int) -> tuple[int, ...]:
        """Number of columns meeting every one of rows i..i+k-1, per i."""
        if k < 2 or k > max(self.rows, 2):
            raise InvalidArg(f"overlap window {k} out of range for {self}")
        lam, mu = self.outer, self.inner_padded
        return tuple(
            max(0, lam[i + k - 1] - mu[i]) for i in range(self.rows - k + 1)
        )


EMPTY_SHAPE = SkewShape((), ())


def normalize(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    """Canonical SkewShape from a raw partition pair.

    Empty rows and empty columns are deleted and the diagram is pulled to
    row 1 and column 1.  Deleting an empty row or column never changes a
    tableau constraint or a column weight, so the three polynomial
    families do not see the difference.
    """
    lam = tuple(int(p) for p in outer)
    mu = tuple(int(p) for p in inner)
    for name, parts in (("outer", lam), ("inner", mu)):
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidShape(f"{name} {parts} is not a partition")
        if parts and parts[-1] < 0:
            raise InvalidShape(f"{name} {parts} has negative parts")
    if not contains(lam, mu):
        raise InvalidShape(f"inner {mu} not contained in outer {lam}")

    mu_pad = mu[: len(lam)] + (0,) * max(0, len(lam) - len(mu))
    intervals = [
        (m + 1, l) for m, l in zip(mu_pad, lam) if l > m
    ]
    if not intervals:
        return EMPTY_SHAPE

    occupied = sorted({c for s, e in intervals for c in range(s, e + 1)})
    rank = {c: i + 1 for i, c in enumerate(occupied)}
    new_outer = tuple(rank[e] for s, e in intervals)
    new_inner = tuple(rank[s] - 1 for s, e in intervals)
    return SkewShape(new_outer, tuple(p for p in new_inner if p > 0))


def rotate180(shape: SkewShape) -> SkewShape:
    """Antipodal rotation of the diagram."""
    if not shape.outer:
        return shape
    lam, mu = shape.outer, shape.inner_padded
    width = shape.cols
    new_outer = tuple(width - m for m in reversed(mu))
    new_inner = tuple(width - l for l in reversed(lam))
    return normalize(new_outer, new_inner)


def transpose(shape: SkewShape) -> SkewShape:
    """Reflect the diagram across the main diagonal."""
    return normalize(conjugate(shape.outer), conjugate(shape.inner))


@dataclass(frozen=True, eq=True)
class BottleneckProfile:
    """Width-w bottleneck counts and derived comparison data for a shape.

    b is the width-one sequence: b[i-1] counts adjacent row pairs whose
    overlap is exactly column i.  pair_sums folds b with its reversal,
    the middle term staying unpaired when the column count is odd.
    overlaps maps each window height k to the k-row overlap sequence.
    """

    b: tuple[int, ...]
    wide: dict[int, tuple[int, ...]]
    pair_sums: tuple[int, ...]
    overlaps: dict[int, tuple[int, ...]]

    @property
    def sum_b(self) -> int:
        return sum(self.b)

    @property
    def sum_b_squares(self) -> int:
        return sum(v * v for v in self.b)


def bottleneck_profile(shape: SkewShape, max_width: int = 2) -> BottleneckProfile:
    """Bottleneck sequences of widths 1..max_width plus overlap data."""
    n = shape.cols
    if not shape.outer:
        return BottleneckProfile((), {}, (), {})
    if max_width < 1 or max_width > n:
        raise InvalidArg(f"max_width {max_width} out of range 1..{n}")
    lam, mu = shape.outer, shape.inner_padded
    wide: dict[int, tuple[int, ...]] = {}
    for w in range(1, max_width + 1):
        counts = [0] * (n - w + 1)
        for j in range(shape.rows - 1):
            i = mu[j] + 1
            if lam[j + 1] == i + w - 1 and i <= n - w + 1:
                counts[i - 1] += 1
        wide[w] = tuple(counts)
    b = wide[1]
    half = (n + 1) // 2
    pair_sums = tuple(
        b[i] if n % 2 == 1 and i == half - 1 else b[i] + b[n - i - 1]
        for i in range(half)
    )
    overlaps = {k: shape.row_overlaps(k) for k in range(2, shape.rows + 1)}
    return BottleneckProfile(b, wide, pair_sums, overlaps)


def ribbon_shape(rows_bottom_to_top: Sequence[int]) -> SkewShape:
    """Shape of the ribbon with the given row sizes, bottom row first.

    Consecutive rows overlap in exactly one column, so the result is a
    connected skew diagram with no 2x2 block.
    """
    rows = tuple(int(r) for r in rows_bottom_to_top)
    if not rows or any(r < 1 for r in rows):
        raise InvalidArg(f"ribbon rows must be positive, got {rows}")
    prefix = [0]
    for r in rows:
        prefix.append(prefix[-1] + r)
    k = len(rows)
    outer = []
    inner = []
    for i in range(1, k + 1):
        j = k - i + 1
        outer.append(prefix[j] - (j - 1))
        inner.append(prefix[j - 1] - (j - 1))
    return SkewShape(tuple(outer), tuple(p for p in inner if p > 0))


def is_ribbon(shape: SkewShape) -> bool:
    """Connected, nonempty, and free of 2x2 blocks."""
    if not shape.outer:
        return False
    if shape.rows == 1:
        return True
    return all(v == 1 for v in shape.row_overlaps(2))


def ribbon_rows(shape: SkewShape) -> tuple[int, ...] | None:
    """Row sizes bottom to top if the shape is a ribbon, else None."""
    if not is_ribbon(shape):
        return None
    return tuple(
        e - s + 1 for s, e in reversed(shape.row_intervals)
    )


def parse_partition(text: str) -> Partition:
    """Partition from comma separated parts; empty text is the empty one."""
    body = text.strip()
    if body in ("", "0", "-"):
        return ()
    parts = []
    for token in body.split(","):
        token = token.strip()
        if not token.isdigit():
            raise ParseError(f"bad partition part {token!r}", token)
        parts.append(int(token))
    try:
        return as_partition(parts)
    except InvalidShape as exc:
        raise ParseError(f"{exc}", body) from exc


def parse_shape(text: str) -> SkewShape:
    """SkewShape from 'outer/inner' text such as '6,3,1/3,1'.

    The inner part is optional.  Ribbon syntax, '(6,5,3)' for a row
    reading or '[1,1,2]' for a column reading, is accepted too and
    resolves to the ribbon's shape.
    """
    body = text.strip()
    if body.startswith("(") or body.startswith("["):
        rows = parse_ribbon_text(body)
        return ribbon_shape(rows)
    if body.count("/") > 1:
        raise ParseError(f"bad shape {text!r}: more than one '/'", body)
    outer_text, _, inner_text = body.partition("/")
    try:
        return normalize(parse_partition(outer_text), parse_partition(inner_text))
    except InvalidShape as exc:
        raise ParseError(f"bad shape {text!r}: {exc}", body) from exc


def parse_ribbon_text(text: str) -> tuple[int, ...]:
    """Ribbon row sizes, bottom to top, from '(..)' or '[..]' syntax.

    '(a,b,c)' is read directly as the row sizes.  '[a,b,c]' is a column
    reading, left to right, and is converted to row sizes.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        reading, is_cols = body[1:-1], False
    elif body.startswith("[") and body.endswith("]"):
        reading, is_cols = body[1:-1], True
    else:
        raise ParseError(f"bad ribbon {text!r}: expected (..) or [..]", body)
    parts = []
    for token in reading.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) < 1:
            raise ParseError(f"bad ribbon part {token!r}", token)
        parts.append(int(token))
    if not parts:
        raise ParseError(f"bad ribbon {text!r}: empty", body)
    if not is_cols:
        return tuple(parts)
    shape = transpose(ribbon_shape(tuple(reversed(parts))))
    rows = ribbon_rows(shape)
    assert rows is not None
    return rows


def shape_syntax(shape: SkewShape) -> str:
    """Canonical text form, the inverse of parse_shape for shapes."""
    outer = ",".join(str(p) for p in shape.outer)
    if not shape.inner:
        return outer
    return outer + "/" + ",".join(str(p) for p in shape.inner)
