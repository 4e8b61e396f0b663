"""Special rim hook tabloids and signed inverse Kostka coefficients.

A rim hook is an edgewise-connected set of cells of a Ferrers diagram
containing no 2x2 block; a special rim hook additionally touches the first
column.  A special rim hook tabloid tiles an entire shape with such hooks.
The signed count of tabloids of shape lambda and content mu (hook sizes,
sorted) is the (lambda, mu) entry of the inverse Kostka matrix, i.e. the
coefficient of s_lambda when m_mu is expanded in Schur functions.

Cells are (row, column) pairs, 1-based, with row 1 the longest row (English
notation).  Hooks are stored bottom-up in peel order: the first hook is the
one through the bottom-left cell.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache

from .errors import DomainError, SizeMismatchError
from .partitions import Partition, as_partition, dominance_leq, sorted_partition


@dataclass(frozen=True)
class RimHook:
    """One rim hook, stored as per-row column intervals.

    ``spans`` lists (row, col_lo, col_hi) with rows ascending; consecutive
    rows overlap in exactly one column, which is what makes the cell set a
    rim hook.
    """

    spans: tuple[tuple[int, int, int], ...]

    @property
    def size(self) -> int:
        return sum(hi - lo + 1 for _, lo, hi in self.spans)

    @property
    def height(self) -> int:
        """Rows spanned minus one."""
        return len(self.spans) - 1

    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (row, col) for row, lo, hi in self.spans for col in range(lo, hi + 1)
        )


@dataclass(frozen=True)
class SpecialRimHookTabloid:
    shape: Partition
    hooks: tuple[RimHook, ...]

    @property
    def content(self) -> Partition:
        return sorted_partition(h.size for h in self.hooks)

    @property
    def height(self) -> int:
        return sum(h.height for h in self.hooks)

    @property
    def sign(self) -> int:
        return -1 if self.height % 2 else 1

    def validate(self) -> None:
        """Re-check every defining invariant from the raw cell sets; shares
        nothing with the enumeration."""
        shape_cells = {
            (r, c)
            for r, length in enumerate(self.shape, start=1)
            for c in range(1, length + 1)
        }
        seen: set[tuple[int, int]] = set()
        for hook in self.hooks:
            cells = set(hook.cells())
            if seen & cells:
                raise DomainError("hooks overlap")
            seen |= cells
            if not any(c == 1 for _, c in cells):
                raise DomainError("hook misses the first column")
            # Connectivity by flood fill.
            stack = [next(iter(cells))]
            reached = {stack[0]}
            while stack:
                r, c = stack.pop()
                for nxt in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                    if nxt in cells and nxt not in reached:
                        reached.add(nxt)
                        stack.append(nxt)
            if reached != cells:
                raise DomainError("hook is not connected")
            if any(
                (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells
                for r, c in cells
            ):
                raise DomainError("hook contains a 2x2 block")
        if seen != shape_cells:
            raise DomainError("hooks do not tile the shape")
        # Peeling bottom-up must leave a Ferrers diagram at every step:
        # occupied rows are exactly 1..k, left-justified, weakly decreasing.
        remaining = set(shape_cells)
        for hook in self.hooks:
            remaining -= set(hook.cells())
            rows = Counter(r for r, _ in remaining)
            if sorted(rows) != list(range(1, len(rows) + 1)):
                raise DomainError("peeling leaves a gap row")
            lengths = [rows[r] for r in sorted(rows)]
            if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
                raise DomainError("peeling does not leave a Ferrers shape")
            if any((r, c) not in remaining for r in rows for c in range(1, rows[r] + 1)):
                raise DomainError("peeling leaves a ragged row")
        if not dominance_leq(self.shape, self.content):
            raise DomainError("shape does not precede content in dominance")


@dataclass(frozen=True)
class TabloidFamily:
    shape: Partition
    tabloids: tuple[SpecialRimHookTabloid, ...]

    def __len__(self) -> int:
        return len(self.tabloids)

    def __iter__(self):
        return iter(self.tabloids)

    def __getitem__(self, index):
        return self.tabloids[index]


def enumerate_srht(
    shape,
    content: Partition | None = None,
    content_prefix: Partition | None = None,
) -> TabloidFamily:
    """All special rim hook tabloids of ``shape``.

    With ``content`` the family is restricted to tabloids of exactly that
    content (the filter is pushed into the recursion); with
    ``content_prefix`` to tabloids whose sorted content starts with the given
    parts.  Output is sorted by the sequence of hook sizes in peel order.
    """
    shape = as_partition(shape)
    if content is not None and content_prefix is not None:
        raise DomainError("give at most one of content and content_prefix")
    remaining: Counter[int] | None = None
    if content is not None:
        content = as_partition(content)
        if sum(content) != sum(shape):
            raise SizeMismatchError(f"content {content} does not fill shape {shape}")
        remaining = Counter(content)
    if content_prefix is not None:
        content_prefix = as_partition(content_prefix)
        if sum(content_prefix) > sum(shape):
            raise SizeMismatchError(f"prefix {content_prefix} exceeds shape {shape}")

    found: list[SpecialRimHookTabloid] = []

    # The hook through the bottom-left cell is forced once its top row r is
    # chosen: it takes the whole bottom row and, climbing, the cells of row i
    # between the lengths of rows i+1 and i.  Its size mu_r + L - r is
    # strictly decreasing in r, so distinct choices give distinct hooks and
    # the recursion produces each tabloid exactly once.
    def peel(lengths: tuple[int, ...], rows: tuple[int, ...], acc: list[RimHook]):
        if not lengths:
            found.append(SpecialRimHookTabloid(shape, tuple(acc)))
            return
        bottom = len(lengths) - 1
        for top in range(bottom + 1):
            size = lengths[top] + bottom - top
            if remaining is not None:
                if not remaining[size]:
                    continue
                remaining[size] -= 1
            spans = tuple(
                (rows[i], 1 if i == bottom else lengths[i + 1], lengths[i])
                for i in range(top, bottom + 1)
            )
            trimmed = lengths[:top] + tuple(x - 1 for x in lengths[top + 1 :])
            keep = sum(1 for x in trimmed if x > 0)
            acc.append(RimHook(spans))
            peel(trimmed[:keep], rows[:keep], acc)
            acc.pop()
            if remaining is not None:
                remaining[size] += 1

    peel(shape, tuple(range(1, len(shape) + 1)), [])
    if content_prefix is not None:
        k = len(content_prefix)
        found = [t for t in found if t.content[:k] == content_prefix]
    found.sort(key=lambda t: tuple(h.size for h in t.hooks))
    return TabloidFamily(shape, tuple(found))


def inverse_kostka(lam, mu) -> int:
    """Coefficient of s_lam in m_mu: the signed tabloid count of shape lam
    and content mu; zero unless lam precedes mu in dominance."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    if not dominance_leq(lam, mu):
        return 0
    return sum(t.sign for t in enumerate_srht(lam, content=mu))


def kostka_number(lam, mu) -> int:
    """Count of semistandard tableaux of shape lam and content mu, built as a
    chain of horizontal-strip additions."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"{lam} and {mu} have different sizes")
    if sum(lam) == 0:
        return 1

    @cache
    def grow(cur: Partition, i: int) -> int:
        if i == len(mu):
            return 1 if cur == lam else 0
        return sum(grow(nxt, i + 1) for nxt in _strip_extensions(cur, mu[i], lam))

    return grow((), 0)


def _strip_extensions(cur: Partition, k: int, bound: Partition):
    """Partitions inside ``bound`` obtained from ``cur`` by adding a
    horizontal strip of k cells (at most one new cell per column)."""
    out: list[Partition] = []
    row_caps = []
    for j in range(len(bound)):
        base = cur[j] if j < len(cur) else 0
        cap = bound[j]
        if j:
            cap = min(cap, cur[j - 1] if j - 1 < len(cur) else 0)
        row_caps.append((base, cap))

    def rec(j: int, rem: int, acc: list[int]):
        if rem == 0:
            rest = [base for base, _ in row_caps[j:]]
            out.append(tuple(x for x in acc + rest if x))
            return
        if j == len(row_caps):
            return
        base, cap = row_caps[j]
        for v in range(base, min(cap, base + rem) + 1):
            rec(j + 1, rem - (v - base), acc + [v])

    rec(0, k, [])
    return out


def render_tabloid(tabloid: SpecialRimHookTabloid) -> str:
    """ASCII grid with cells labeled by hook index (bottom-up, 1-based)."""
    owner: dict[tuple[int, int], int] = {}
    for idx, hook in enumerate(tabloid.hooks, start=1):
        for cell in hook.cells():
            owner[cell] = idx
    width = len(str(len(tabloid.hooks)))
    lines = []
    for row, length in enumerate(tabloid.shape, start=1):
        lines.append(" ".join(str(owner[row, c]).rjust(width) for c in range(1, length + 1)))
    return "\n".join(lines)
