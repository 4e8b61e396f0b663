"""Exact counts of semi-ordered chain partitions of posets and semi-ordered
stable partitions of graphs.

Both counters enumerate *unordered* partitions — always growing the block
that contains the lowest-indexed uncovered element, so each partition is
built exactly once — and restore orderings with the product of alpha_k!
symmetry factors.  The two implementations are deliberately independent (the
poset one prunes with longest-chain and antichain-width bounds; the graph one
is plain) so their agreement on incomparability graphs is a meaningful test.

For a product of two chains m x n and a type whose first n-1 parts are the
forced staircase values m+n-2i+1, the count also has a closed form: a
weak-composition sum over the ways of distributing the remaining parts among
the n maximal "threads" of the product.  ``scp_closed_form`` evaluates it in
pure integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import InternalInvariantError, PreconditionError, SizeMismatchError
from .partitions import (
    Partition,
    as_partition,
    multinomial,
    multiplicity_profile,
    sorted_partition,
    suffix,
    symmetry_factor,
    weak_compositions,
)
from .posets import Graph, Poset


@dataclass
class SearchStats:
    """Mutable node counter threaded through the backtracking searches."""

    nodes: int = 0


class StablePartitionCounter:
    """Counts semi-ordered stable partitions of a graph, sharing a memo
    across types (useful when expanding a whole symmetric function)."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.full = (1 << len(graph)) - 1
        self._memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def count(self, type_, stats: SearchStats | None = None) -> int:
        lam = as_partition(type_)
        if sum(lam) != len(self.graph):
            raise SizeMismatchError(f"type {lam} does not cover {len(self.graph)} vertices")
        self._stats = stats
        return self._count(self.full, lam) * symmetry_factor(lam)

    def _count(self, rem: int, sizes: tuple[int, ...]) -> int:
        if not sizes:
            return 1
        key = (rem, sizes)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        adj = self.graph.adj
        v = (rem & -rem).bit_length() - 1
        rest = rem ^ (1 << v)
        total = 0
        for i, s in enumerate(sizes):
            if i and sizes[i - 1] == s:
                continue
            tail = sizes[:i] + sizes[i + 1 :]
            total += self._grow(rest, 1 << v, rest & ~adj[v], s - 1, tail)
        self._memo[key] = total
        return total

    def _grow(self, rest: int, block: int, cand: int, need: int, tail) -> int:
        if self._stats is not None:
            self._stats.nodes += 1
        if need == 0:
            return self._count(rest & ~block, tail)
        if cand.bit_count() < need:
            return 0
        adj = self.graph.adj
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            total += self._grow(rest, block | low, cand & ~adj[w], need - 1, tail)
        return total


class ChainPartitionCounter:
    """Counts semi-ordered chain partitions of a poset directly on the order
    relation, with longest-chain and antichain-width pruning."""

    def __init__(self, poset: Poset):
        self.poset = poset
        self._memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def count(self, type_, stats: SearchStats | None = None) -> int:
        lam = as_partition(type_)
        if sum(lam) != len(self.poset):
            raise SizeMismatchError(f"type {lam} does not cover {len(self.poset)} elements")
        self._stats = stats
        return self._count(self.poset.full_mask, lam) * symmetry_factor(lam)

    def _count(self, rem: int, sizes: tuple[int, ...]) -> int:
        if not sizes:
            return 1
        key = (rem, sizes)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        total = 0
        # A block longer than the longest chain, or an antichain wider than
        # the number of blocks left, kills the branch outright.
        if sizes[0] <= self.poset.max_chain_size(rem) and self.poset.width(rem) <= len(sizes):
            comp = self.poset.comp
            v = (rem & -rem).bit_length() - 1
            rest = rem ^ (1 << v)
            for i, s in enumerate(sizes):
                if i and sizes[i - 1] == s:
                    continue
                tail = sizes[:i] + sizes[i + 1 :]
                total += self._grow(rest, 1 << v, rest & comp[v], s - 1, tail)
        self._memo[key] = total
        return total

    def _grow(self, rest: int, block: int, cand: int, need: int, tail) -> int:
        if self._stats is not None:
            self._stats.nodes += 1
        if need == 0:
            return self._count(rest & ~block, tail)
        if cand.bit_count() < need:
            return 0
        comp = self.poset.comp
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            total += self._grow(rest, block | low, cand & comp[w], need - 1, tail)
        return total


def count_semiordered_stable_partitions(
    graph: Graph, type_, stats: SearchStats | None = None
) -> int:
    """Ordered tuples of disjoint independent sets covering the graph with
    the given block sizes."""
    return StablePartitionCounter(graph).count(type_, stats)


def count_scp(poset: Poset, type_, stats: SearchStats | None = None) -> int:
    """Semi-ordered chain partitions of the poset with the given type."""
    return ChainPartitionCounter(poset).count(type_, stats)


# ---------------------------------------------------------------------------
# Closed form for products of two chains


@dataclass(frozen=True)
class StaircaseContext:
    """A product of chains m x n (m >= n >= 1) together with the forced
    staircase prefix shared by every type the closed form applies to."""

    m: int
    n: int

    def __post_init__(self):
        if not self.m >= self.n >= 1:
            raise PreconditionError(f"need m >= n >= 1, got ({self.m}, {self.n})")

    @property
    def staircase(self) -> Partition:
        """(m+n-1, m+n-3, ..., m-n+3): the forced first n-1 parts."""
        return tuple(self.m + self.n - 2 * i + 1 for i in range(1, self.n))

    def split(self, type_) -> tuple[Partition, Partition]:
        """Split a type into (forced prefix, tail), validating both."""
        lam = as_partition(type_)
        if sum(lam) != self.m * self.n:
            raise SizeMismatchError(f"type {lam} does not cover the {self.m}x{self.n} product")
        pre = self.staircase
        if lam[: len(pre)] != pre:
            raise PreconditionError(f"type {lam} does not start with the staircase {pre}")
        tail = suffix(lam, self.n)
        assert sum(tail) == self.m - self.n + 1
        return pre, tail


def scp_closed_form(ctx: StaircaseContext, type_) -> int:
    """Closed-form chain-partition count for a staircase-prefixed type.

    For each part size k of the tail (multiplicity alpha_k), a weak
    composition distributes its copies among the n threads; thread j then
    contributes (sum of its assigned sizes)!.  The total is scaled by (n-1)!
    and divided — exactly — by the product of k!^alpha_k.
    """
    _, tail = ctx.split(type_)
    n = ctx.n
    profile = multiplicity_profile(tail)
    total = 0
    splits = [list(weak_compositions(alpha, n)) for _, alpha in profile]
    for combo in itertools.product(*splits):
        loads = [0] * n
        weight = 1
        for (k, alpha), comp in zip(profile, combo):
            weight *= multinomial(alpha, comp)
            for j, a in enumerate(comp):
                loads[j] += k * a
        for load in loads:
            weight *= math.factorial(load)
        total += weight
    total *= math.factorial(n - 1)
    denom = 1
    for k, alpha in profile:
        denom *= math.factorial(k) ** alpha
    out, r = divmod(total, denom)
    if r:
        raise InternalInvariantError("closed-form sum not divisible by the block factorials")
    return out


def forced_content_prefix(shape, m: int, n: int) -> Partition | None:
    """The staircase prefix forced on every nonzero-count content of the
    shape, when the shape itself carries it; None when the fast path does
    not apply."""
    lam = as_partition(shape)
    if not m >= n >= 1:
        raise PreconditionError(f"need m >= n >= 1, got ({m}, {n})")
    if sum(lam) != m * n:
        raise SizeMismatchError(f"shape {lam} does not fill the {m}x{n} product")
    pre = tuple(m + n - 2 * i + 1 for i in range(1, n))
    if lam[: len(pre)] != pre:
        return None
    return pre


# ---------------------------------------------------------------------------
# The six witness contents and their closed-form counts


WITNESS_CASE_HEIGHTS = {"T1": 3, "T2": 2, "T3": 2, "T4": 1, "T5": 1, "T6": 0}


def staircase_delta(n: int, k: int) -> Partition:
    """(2n+k-1, 2n+k-3, ..., k+3): the length-(n-1) forced prefix for the
    (n+k) x n product."""
    if k < 5 or n < 2:
        raise PreconditionError(f"need k >= 5 and n >= 2, got ({n}, {k})")
    return tuple(range(2 * n + k - 1, k + 2, -2))


def witness_case_contents(n: int, k: int) -> dict[str, Partition]:
    """Contents of the six tabloids of the negativity witness shape."""
    delta = staircase_delta(n, k)
    tails = {
        "T1": (k - 1, 2),
        "T2": (k - 1, 1, 1),
        "T3": (k - 2, 3),
        "T4": (k - 2, 2, 1),
        "T5": (k - 3, 3, 1),
        "T6": (k - 3, 2, 2),
    }
    return {name: delta + sorted_partition(tail) for name, tail in tails.items()}


def _exact(num: int, den: int) -> int:
    out, r = divmod(num, den)
    if r:
        raise InternalInvariantError(f"{num} is not divisible by {den}")
    return out


def proof_case_closed_forms(n: int, k: int) -> dict[str, int]:
    """Chain-partition counts of the (n+k) x n product for the six witness
    contents, from their closed polynomial forms (with the small-k branches
    where the tail multiplicities change)."""
    if k < 5 or n < 2:
        raise PreconditionError(f"need k >= 5 and n >= 2, got ({n}, {k})")
    nf = math.factorial(n)
    t1 = nf * (n + _exact(k * k + k - 2, 2))
    t2 = nf * (n * n + (2 * k - 1) * n + (k * k - k))
    if k == 5:
        t3 = nf * (n + 19)
    else:
        t3 = nf * (n + _exact(k**3 - k - 6, 6))
    t4 = nf * (n * n + _exact(k * k + k - 2, 2) * n + _exact(k**3 - k * k - 2 * k, 2))
    if k == 6:
        t5 = nf * (n * n + 25 * n + 114)
    else:
        t5 = nf * (
            n * n
            + _exact(k**3 - 3 * k * k + 8 * k - 6, 6) * n
            + _exact(k**4 - 3 * k**3 + 2 * k * k - 6 * k, 6)
        )
    if k == 5:
        t6 = nf * (n * n + 15 * n + 74)
    else:
        t6 = nf * (
            n * n
            + (k * k - 3 * k + 5) * n
            + _exact(k**4 - 2 * k**3 - 5 * k * k + 14 * k - 24, 4)
        )
    return {"T1": t1, "T2": t2, "T3": t3, "T4": t4, "T5": t5, "T6": t6}
