"""Tableau enumeration over skew shapes.

Three filling families over a common cell grid:

- ssyt: semistandard Young tableaux, rows weakly increasing left to
  right, columns strictly increasing top to bottom, one entry per cell.
- svt: set-valued tableaux, a nonempty finite set per cell, where A <= B
  means max(A) <= min(B) and A < B means max(A) < min(B); rows weakly
  increase, columns strictly increase.
- rpp: reverse plane partitions, rows and columns weakly increasing.

Enumeration is cell by cell in column-major order (leftmost column
first, top to bottom inside a column), so each cell only checks its
upper and left neighbors, both already placed.  Streams are generators,
contain no duplicates, and yield in lexicographic order of the
column-major sequence of per-cell value tuples.  The zero-cell shape
yields exactly one empty filling.

The fold_* and *_monomial_count functions walk the same trees without
building Filling objects; polynomial construction uses them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .errors import InvalidArg, InvalidBound
from .shapes import SkewShape

SSYT = "ssyt"
SET_VALUED = "svt"
RPP = "rpp"
KINDS = (SSYT, SET_VALUED, RPP)

Cell = tuple[int, int]


@lru_cache(maxsize=None)
def _grid(shape: SkewShape) -> tuple[tuple[Cell, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Column-major cell list with neighbor indices.

    Returns (cells, up, left, col_of) where up[i] and left[i] are the
    indices of the neighbor above and to the left of cells[i], or -1
    when that neighbor is outside the shape, and col_of[i] is the
    1-based column of cells[i].
    """
    cells = tuple(shape.cells_colmajor())
    index = {cell: i for i, cell in enumerate(cells)}
    up = tuple(index.get((r - 1, c), -1) for r, c in cells)
    left = tuple(index.get((r, c - 1), -1) for r, c in cells)
    col_of = tuple(c for _, c in cells)
    return cells, up, left, col_of


class Filling:
    """An assignment of sorted value tuples to the cells of a shape.

    ssyt and rpp fillings hold one value per cell; svt fillings hold a
    nonempty strictly increasing tuple.  Construction validates the
    ordering constraints of the requested kind.
    """

    __slots__ = ("shape", "kind", "cells", "_hash")

    def __init__(self, shape: SkewShape, kind: str, cells: Mapping[Cell, Sequence[int]]):
        if kind not in KINDS:
            raise InvalidArg(f"unknown filling kind {kind!r}")
        grid_cells = _grid(shape)[0]
        normalized: dict[Cell, tuple[int, ...]] = {}
        for cell in grid_cells:
            if cell not in cells:
                raise InvalidArg(f"cell {cell} of {shape} is not filled")
            vals = tuple(cells[cell])
            if not vals or any(v < 1 for v in vals):
                raise InvalidArg(f"cell {cell} needs positive entries, got {vals}")
            if kind != SET_VALUED and len(vals) != 1:
                raise InvalidArg(f"{kind} cell {cell} must hold one entry, got {vals}")
            if any(a >= b for a, b in zip(vals, vals[1:])):
                raise InvalidArg(f"cell {cell} is not a strictly increasing set: {vals}")
            normalized[cell] = vals
        if len(cells) != len(grid_cells):
            extras = set(cells) - set(grid_cells)
            raise InvalidArg(f"cells {sorted(extras)} lie outside {shape}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "cells", normalized)
        object.__setattr__(self, "_hash", None)
        self._check_order()

    def _check_order(self) -> None:
        strict_cols = self.kind in (SSYT, SET_VALUED)
        for (r, c), vals in self.cells.items():
            left = self.cells.get((r, c - 1))
            if left is not None and left[-1] > vals[0]:
                raise InvalidArg(f"row {r} decreases at column {c}")
            above = self.cells.get((r - 1, c))
            if above is not None:
                if strict_cols and above[-1] >= vals[0]:
                    raise InvalidArg(f"column {c} fails to increase at row {r}")
                if not strict_cols and above[-1] > vals[0]:
                    raise InvalidArg(f"column {c} decreases at row {r}")

    @classmethod
    def from_rows(cls, shape: SkewShape, kind: str, rows: Sequence[Sequence]) -> "Filling":
        """Build from per-row value lists, top row first.

        Each row lists its cells left to right; an svt cell may be an
        int or an iterable of ints.
        """
        if len(rows) != shape.rows:
            raise InvalidArg(f"expected {shape.rows} rows, got {len(rows)}")
        cells = {}
        for r, ((start, end), row_vals) in enumerate(zip(shape.row_intervals, rows), 1):
            if len(row_vals) != end - start + 1:
                raise InvalidArg(f"row {r} expects {end - start + 1} cells")
            for c, val in zip(range(start, end + 1), row_vals):
                if isinstance(val, int):
                    cells[(r, c)] = (val,)
                else:
                    cells[(r, c)] = tuple(sorted(val))
        return cls(shape, kind, cells)

    def values(self, row: int, col: int) -> tuple[int, ...]:
        return self.cells[(row, col)]

    @property
    def size(self) -> int:
        """Total number of entries counted with set multiplicity."""
        return sum(len(v) for v in self.cells.values())

    def weight(self) -> dict[int, int]:
        """Exponent vector of x^T.

        For ssyt and svt, entry i contributes once per cell containing
        it.  For rpp, entry i contributes once per column containing it.
        """
        exps: dict[int, int] = {}
        if self.kind == RPP:
            for (top, _), c in zip(self.shape.column_intervals, range(1, self.shape.cols + 1)):
                seen = set()
                r = top
                while (r, c) in self.cells:
                    seen.add(self.cells[(r, c)][0])
                    r += 1
                for v in seen:
                    exps[v] = exps.get(v, 0) + 1
        else:
            for vals in self.cells.values():
                for v in vals:
                    exps[v] = exps.get(v, 0) + 1
        return exps

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Filling)
            and self.shape == other.shape
            and self.kind == other.kind
            and self.cells == other.cells
        )

    def __hash__(self) -> int:
        if self._hash is None:
            item = (self.shape, self.kind, tuple(sorted(self.cells.items())))
            object.__setattr__(self, "_hash", hash(item))
        return self._hash

    def __repr__(self) -> str:
        rows = []
        for (start, end), r in zip(self.shape.row_intervals, range(1, self.shape.rows + 1)):
            vals = [
                "".join(str(x) for x in self.cells[(r, c)])
                for c in range(start, end + 1)
            ]
            rows.append("." * (start - 1) + "|".join(vals))
        return f"Filling({self.kind}, {self.shape}, {' / '.join(rows)})"


def weight(filling: Filling) -> dict[int, int]:
    return filling.weight()


def sorted_key(exps: Mapping[int, int]) -> tuple[int, ...]:
    """Exponent partition of a weight: positive exponents, sorted down."""
    return tuple(sorted((e for e in exps.values() if e), reverse=True))


def _check_entry_bound(max_entry: int) -> None:
    if max_entry < 0:
        raise InvalidBound(f"max_entry must be nonnegative, got {max_entry}")


def enumerate_rpp(shape: SkewShape, max_entry: int) -> Iterator[Filling]:
    """All reverse plane partitions with entries in 1..max_entry."""
    _check_entry_bound(max_entry)
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    if count == 0:
        yield Filling(shape, RPP, {})
        return
    values = [0] * count

    def rec(i: int) -> Iterator[Filling]:
        if i == count:
            yield Filling(shape, RPP, {cells[j]: (values[j],) for j in range(count)})
            return
        lo = 1
        if up[i] >= 0 and values[up[i]] > lo:
            lo = values[up[i]]
        if left[i] >= 0 and values[left[i]] > lo:
            lo = values[left[i]]
        for v in range(lo, max_entry + 1):
            values[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def enumerate_ssyt(shape: SkewShape, max_entry: int) -> Iterator[Filling]:
    """All semistandard tableaux with entries in 1..max_entry."""
    _check_entry_bound(max_entry)
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    if count == 0:
        yield Filling(shape, SSYT, {})
        return
    values = [0] * count

    def rec(i: int) -> Iterator[Filling]:
        if i == count:
            yield Filling(shape, SSYT, {cells[j]: (values[j],) for j in range(count)})
            return
        lo = 1
        if up[i] >= 0 and values[up[i]] + 1 > lo:
            lo = values[up[i]] + 1
        if left[i] >= 0 and values[left[i]] > lo:
            lo = values[left[i]]
        for v in range(lo, max_entry + 1):
            values[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def enumerate_svt(shape: SkewShape, max_entry: int, max_size: int) -> Iterator[Filling]:
    """All set-valued tableaux with entries in 1..max_entry and at most
    max_size entries in total."""
    _check_entry_bound(max_entry)
    if max_size < shape.cells:
        raise InvalidBound(
            f"max_size {max_size} is below the {shape.cells} cells of {shape}"
        )
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    if count == 0:
        yield Filling(shape, SET_VALUED, {})
        return
    sets: list[list[int]] = [[] for _ in range(count)]
    maxval = [0] * count

    def rec(i: int, used: int) -> Iterator[Filling]:
        if i == count:
            yield Filling(
                shape, SET_VALUED, {cells[j]: tuple(sets[j]) for j in range(count)}
            )
            return
        room = max_size - used - (count - 1 - i)
        if room < 1:
            return
        lo = 1
        if up[i] >= 0 and maxval[up[i]] + 1 > lo:
            lo = maxval[up[i]] + 1
        if left[i] >= 0 and maxval[left[i]] > lo:
            lo = maxval[left[i]]

        def extend(v_from: int, size: int) -> Iterator[Filling]:
            for v in range(v_from, max_entry + 1):
                sets[i].append(v)
                maxval[i] = v
                yield from rec(i + 1, used + size + 1)
                if size + 1 < room:
                    yield from extend(v + 1, size + 1)
                sets[i].pop()
            return

        yield from extend(lo, 0)

    yield from rec(0, 0)


def fold_rpp(shape: SkewShape, max_entry: int) -> dict[tuple[int, ...], int]:
    """Raw monomial totals of the rpp family, keyed by exponent partition.

    Each filling with entries in 1..max_entry contributes 1 to the key
    sorted from its weight; totals cover whole symmetry orbits.
    """
    _check_entry_bound(max_entry)
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    totals: dict[tuple[int, ...], int] = {}
    if count == 0:
        return {(): 1}
    if max_entry == 0:
        return totals
    values = [0] * count
    exps = [0] * (max_entry + 1)

    def rec(i: int) -> None:
        if i == count:
            key = tuple(sorted((e for e in exps if e), reverse=True))
            totals[key] = totals.get(key, 0) + 1
            return
        u, l = up[i], left[i]
        lo = 1
        if u >= 0 and values[u] > lo:
            lo = values[u]
        if l >= 0 and values[l] > lo:
            lo = values[l]
        if u < 0:
            for v in range(lo, max_entry + 1):
                values[i] = v
                exps[v] += 1
                rec(i + 1)
                exps[v] -= 1
        else:
            uv = values[u]
            for v in range(lo, max_entry + 1):
                values[i] = v
                if v != uv:
                    exps[v] += 1
                    rec(i + 1)
                    exps[v] -= 1
                else:
                    rec(i + 1)

    rec(0)
    return totals


def fold_ssyt(shape: SkewShape, max_entry: int) -> dict[tuple[int, ...], int]:
    """Raw monomial totals of the ssyt family, keyed by exponent partition."""
    _check_entry_bound(max_entry)
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    totals: dict[tuple[int, ...], int] = {}
    if count == 0:
        return {(): 1}
    if max_entry == 0:
        return totals
    values = [0] * count
    exps = [0] * (max_entry + 1)

    def rec(i: int) -> None:
        if i == count:
            key = tuple(sorted((e for e in exps if e), reverse=True))
            totals[key] = totals.get(key, 0) + 1
            return
        u, l = up[i], left[i]
        lo = 1
        if u >= 0 and values[u] + 1 > lo:
            lo = values[u] + 1
        if l >= 0 and values[l] > lo:
            lo = values[l]
        for v in range(lo, max_entry + 1):
            values[i] = v
            exps[v] += 1
            rec(i + 1)
            exps[v] -= 1

    rec(0)
    return totals


def fold_svt(shape: SkewShape, max_entry: int, max_size: int) -> dict[tuple[int, ...], int]:
    """Signed raw monomial totals of the svt family.

    A filling of total size s carries sign (-1)**(s - cells); totals are
    the signed orbit sums keyed by exponent partition.
    """
    _check_entry_bound(max_entry)
    if max_size < shape.cells:
        raise InvalidBound(
            f"max_size {max_size} is below the {shape.cells} cells of {shape}"
        )
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    if count == 0:
        return {(): 1}
    totals: dict[tuple[int, ...], int] = {}
    maxval = [0] * count
    exps = [0] * (max_entry + 1)

    def rec(i: int, used: int) -> None:
        if i == count:
            key = tuple(sorted((e for e in exps if e), reverse=True))
            sign = 1 if (used - count) % 2 == 0 else -1
            totals[key] = totals.get(key, 0) + sign
            return
        room = max_size - used - (count - 1 - i)
        if room < 1:
            return
        u, l = up[i], left[i]
        lo = 1
        if u >= 0 and maxval[u] + 1 > lo:
            lo = maxval[u] + 1
        if l >= 0 and maxval[l] > lo:
            lo = maxval[l]

        def extend(v_from: int, size: int) -> None:
            for v in range(v_from, max_entry + 1):
                exps[v] += 1
                maxval[i] = v
                rec(i + 1, used + size + 1)
                if size + 1 < room:
                    extend(v + 1, size + 1)
                exps[v] -= 1

        extend(lo, 0)

    rec(0, 0)
    return totals


def _target_total(target: Sequence[int]) -> int:
    if any(t < 0 for t in target):
        raise InvalidArg(f"exponents must be nonnegative, got {tuple(target)}")
    return sum(target)


def rpp_monomial_count(shape: SkewShape, target: Sequence[int]) -> int:
    """Number of rpp fillings whose weight is exactly x1^t1 x2^t2 ...

    target[v-1] is the required number of columns containing v; entries
    beyond len(target) are forbidden.
    """
    total = _target_total(target)
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    if count == 0:
        return 1 if total == 0 else 0
    k = len(target)
    if k == 0:
        return 0
    quota = (0,) + tuple(target)
    values = [0] * count
    exps = [0] * (k + 1)
    # each still-unstarted column will contribute at least one unit
    min_remaining = [0] * (count + 1)
    for i in range(count - 1, -1, -1):
        min_remaining[i] = min_remaining[i + 1] + (1 if up[i] < 0 else 0)

    def rec(i: int, placed: int) -> int:
        if i == count:
            return 1 if placed == total else 0
        need = total - placed
        if need > count - i or need < min_remaining[i]:
            return 0
        u, l = up[i], left[i]
        lo = 1
        if u >= 0 and values[u] > lo:
            lo = values[u]
        if l >= 0 and values[l] > lo:
            lo = values[l]
        found = 0
        uv = values[u] if u >= 0 else 0
        for v in range(lo, k + 1):
            if u >= 0 and v == uv:
                values[i] = v
                found += rec(i + 1, placed)
            elif exps[v] < quota[v]:
                values[i] = v
                exps[v] += 1
                found += rec(i + 1, placed + 1)
                exps[v] -= 1
        return found

    return rec(0, 0)


def ssyt_monomial_count(shape: SkewShape, target: Sequence[int]) -> int:
    """Number of ssyt fillings whose weight is exactly the target."""
    total = _target_total(target)
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    if count == 0:
        return 1 if total == 0 else 0
    if total != count or not target:
        return 0
    k = len(target)
    quota = (0,) + tuple(target)
    values = [0] * count
    exps = [0] * (k + 1)

    def rec(i: int) -> int:
        if i == count:
            return 1
        u, l = up[i], left[i]
        lo = 1
        if u >= 0 and values[u] + 1 > lo:
            lo = values[u] + 1
        if l >= 0 and values[l] > lo:
            lo = values[l]
        found = 0
        for v in range(lo, k + 1):
            if exps[v] < quota[v]:
                values[i] = v
                exps[v] += 1
                found += rec(i + 1)
                exps[v] -= 1
        return found

    return rec(0)


def svt_monomial_count(shape: SkewShape, target: Sequence[int]) -> int:
    """Number of svt fillings whose weight is exactly the target.

    The count is unsigned; the corresponding series coefficient is this
    count times (-1)**(sum(target) - cells).
    """
    total = _target_total(target)
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    if count == 0:
        return 1 if total == 0 else 0
    if total < count or not target:
        return 0
    k = len(target)
    quota = (0,) + tuple(target)
    maxval = [0] * count
    exps = [0] * (k + 1)

    def rec(i: int, placed: int) -> int:
        if i == count:
            return 1 if placed == total else 0
        need = total - placed
        if need < count - i or need > (count - i) * k:
            return 0
        u, l = up[i], left[i]
        lo = 1
        if u >= 0 and maxval[u] + 1 > lo:
            lo = maxval[u] + 1
        if l >= 0 and maxval[l] > lo:
            lo = maxval[l]
        found = 0

        def extend(v_from: int, size: int) -> None:
            nonlocal found
            for v in range(v_from, k + 1):
                if exps[v] >= quota[v]:
                    continue
                exps[v] += 1
                maxval[i] = v
                found += rec(i + 1, placed + size + 1)
                extend(v + 1, size + 1)
                exps[v] -= 1

        extend(lo, 0)
        return found

    return rec(0, 0)


def rpp_degree_slice(shape: SkewShape, degree: int) -> dict[tuple[int, ...], int]:
    """Raw totals restricted to rpp weights of one exact degree.

    Entries run over 1..degree, enough variables to reach every
    exponent partition of that degree.  Intended for small slices just
    above the column count; the walk prunes any prefix whose eventual
    degree must exceed the target.
    """
    if degree < 0:
        raise InvalidBound(f"degree must be nonnegative, got {degree}")
    cells, up, left, _ = _grid(shape)
    count = len(cells)
    if count == 0:
        return {(): 1} if degree == 0 else {}
    totals: dict[tuple[int, ...], int] = {}
    max_entry = degree
    if max_entry == 0:
        return totals
    values = [0] * count
    exps = [0] * (max_entry + 1)
    cols_after = [0] * (count + 1)
    for i in range(count - 1, -1, -1):
        cols_after[i] = cols_after[i + 1] + (1 if up[i] < 0 else 0)

    def rec(i: int, deg: int) -> None:
        if i == count:
            if deg == degree:
                key = tuple(sorted((e for e in exps if e), reverse=True))
                totals[key] = totals.get(key, 0) + 1
            return
        if deg + cols_after[i] > degree:
            return
        u, l = up[i], left[i]
        lo = 1
        if u >= 0 and values[u] > lo:
            lo = values[u]
        if l >= 0 and values[l] > lo:
            lo = values[l]
        uv = values[u] if u >= 0 else 0
        for v in range(lo, max_entry + 1):
            values[i] = v
            if u >= 0 and v == uv:
                rec(i + 1, deg)
            elif deg < degree:
                exps[v] += 1
                rec(i + 1, deg + 1)
                exps[v] -= 1

    rec(0, 0)
    return totals


@dataclass(frozen=True)
class LatticePath:
    """Monotone staircase across a shape, one horizontal edge per column.

    heights[c-1] is the row index of the horizontal edge in column c:
    the edge sits below row heights[c-1], so top-1 means the column is
    entirely below the path (all 2 in the matching filling) and bottom
    means entirely above (all 1).  Heights weakly decrease left to
    right.  Edges strictly between a column's boundaries are interior.
    """

    shape: SkewShape
    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        intervals = self.shape.column_intervals
        if len(self.heights) != len(intervals):
            raise InvalidArg(
                f"path needs {len(intervals)} heights, got {len(self.heights)}"
            )
        for h, (top, bot) in zip(self.heights, intervals):
            if not top - 1 <= h <= bot:
                raise InvalidArg(f"height {h} outside column range {top - 1}..{bot}")
        for a, b in zip(self.heights, self.heights[1:]):
            if a < b:
                raise InvalidArg(f"heights {self.heights} are not weakly decreasing")

    @property
    def interior_edges(self) -> tuple[tuple[int, int], ...]:
        """(height, column) pairs strictly inside the shape, by column."""
        return tuple(
            (h, c)
            for c, (h, (top, bot)) in enumerate(
                zip(self.heights, self.shape.column_intervals), 1
            )
            if top <= h <= bot - 1
        )


def rpp12_to_path(filling: Filling) -> LatticePath:
    """Lattice path of a 1,2-filling: 1s above the path, 2s below."""
    if filling.kind != RPP:
        raise InvalidArg(f"expected an rpp filling, got {filling.kind}")
    heights = []
    for c, (top, bot) in enumerate(filling.shape.column_intervals, 1):
        h = top - 1
        for r in range(top, bot + 1):
            vals = filling.values(r, c)
            if vals[0] > 2:
                raise InvalidArg(f"entry {vals[0]} at {(r, c)} is not in {{1, 2}}")
            if vals[0] == 1:
                h = r
        heights.append(h)
    return LatticePath(filling.shape, tuple(heights))


def path_to_rpp12(path: LatticePath) -> Filling:
    """Inverse of rpp12_to_path."""
    cells = {}
    for c, ((top, bot), h) in enumerate(
        zip(path.shape.column_intervals, path.heights), 1
    ):
        for r in range(top, bot + 1):
            cells[(r, c)] = (1,) if r <= h else (2,)
    return Filling(path.shape, RPP, cells)
