"""Deciding the nice property: which chain-partition types a poset achieves,
whether that set is closed downward in dominance, and machine-checkable
certificates for the positive answers.

The existence search mirrors the counting engine's canonical scheme (always
extend the block holding the lowest-indexed uncovered element) but memoizes
failures across types, short-circuits on the first hit, and prunes with three
bounds: per-height capacity, longest chain, and exact antichain width.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .counting import SearchStats
from .errors import (
    BudgetExceededError,
    CertificateError,
    InternalInvariantError,
    InvalidParamsError,
    PreconditionError,
    SizeMismatchError,
    TooLargeError,
)
from .partitions import Partition, as_partition, dominance_leq, partitions_of
from .posets import Poset, Product, build_poset, OrdinalSum, iter_bits


@dataclass(frozen=True)
class ChainPartitionCertificate:
    """An ordered list of blocks (element labels) claimed to be a chain
    partition of the poset of the given type."""

    poset: Poset
    blocks: tuple[tuple[str, ...], ...]
    type: Partition

    def validate(self) -> None:
        """Re-check the claim from scratch: blocks disjoint, covering, each
        pairwise comparable, sizes matching the type.  Uses only the raw
        order relation, none of the search machinery."""
        poset = self.poset
        seen: set[str] = set()
        for block in self.blocks:
            for label in block:
                if label in seen:
                    raise CertificateError(f"element {label!r} appears twice")
                seen.add(label)
            for x, y in itertools.combinations(block, 2):
                i, j = poset.index_of(x), poset.index_of(y)
                if not (poset.up[i] >> j & 1 or poset.up[j] >> i & 1):
                    raise CertificateError(f"{x!r} and {y!r} are incomparable")
        if seen != set(poset.labels):
            raise CertificateError("blocks do not cover the poset")
        sizes = tuple(sorted((len(b) for b in self.blocks), reverse=True))
        if sizes != self.type:
            raise CertificateError(f"block sizes {sizes} do not match type {self.type}")

    def to_jsonable(self) -> dict:
        return {
            "type": ",".join(str(x) for x in self.type),
            "blocks": [list(block) for block in self.blocks],
        }


@dataclass
class NiceVerdict:
    nice: bool
    witness: tuple[Partition, Partition] | None = None
    witness_certificate: ChainPartitionCertificate | None = None
    achieved_types: tuple[Partition, ...] | None = None
    nodes: int = 0


class ChainPartitionSearcher:
    """Existence search for chain partitions, with failures memoized across
    types so a whole niceness scan shares one cache."""

    def __init__(self, poset: Poset, node_budget: int | None = None):
        self.poset = poset
        self.node_budget = node_budget
        self.nodes = 0
        self._failed: set[tuple[int, tuple[int, ...]]] = set()
        # Elements of a chain have pairwise distinct heights, so each height
        # level contributes at most one element per block.
        n = len(poset)
        heights = [0] * n
        for i in poset.topo:
            for j in iter_bits(poset.dn[i] ^ (1 << i)):
                if heights[j] + 1 > heights[i]:
                    heights[i] = heights[j] + 1
        masks: dict[int, int] = {}
        for i, h in enumerate(heights):
            masks[h] = masks.get(h, 0) | 1 << i
        self._height_masks = tuple(masks.values())

    def find(self, type_) -> list[int] | None:
        """Block bitmasks of a chain partition of the given type, or None
        after exhausting the (pruned) search space."""
        lam = as_partition(type_)
        if sum(lam) != len(self.poset):
            raise SizeMismatchError(f"type {lam} does not cover {len(self.poset)} elements")
        blocks: list[int] = []
        if self._search(self.poset.full_mask, lam, blocks):
            return blocks
        return None

    def _search(self, rem: int, sizes: tuple[int, ...], blocks: list[int]) -> bool:
        if not sizes:
            return True
        key = (rem, sizes)
        if key in self._failed:
            return False
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise BudgetExceededError(f"search exceeded {self.node_budget} nodes")
        k = len(sizes)
        capacity = 0
        for hm in self._height_masks:
            c = (rem & hm).bit_count()
            capacity += c if c < k else k
        ok = capacity >= rem.bit_count()
        ok = ok and sizes[0] <= self.poset.max_chain_size(rem)
        ok = ok and self.poset.width(rem) <= k
        if ok:
            comp = self.poset.comp
            v = (rem & -rem).bit_length() - 1
            rest = rem ^ (1 << v)
            for i, s in enumerate(sizes):
                if i and sizes[i - 1] == s:
                    continue
                tail = sizes[:i] + sizes[i + 1 :]
                if self._place(rem, tail, 1 << v, rest & comp[v], s - 1, blocks):
                    return True
        self._failed.add(key)
        return False

    def _place(
        self, rem: int, tail: tuple[int, ...], block: int, cand: int, need: int, blocks: list[int]
    ) -> bool:
        if need == 0:
            blocks.append(block)
            if self._search(rem & ~block, tail, blocks):
                return True
            blocks.pop()
            return False
        if cand.bit_count() < need:
            return False
        comp = self.poset.comp
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if self._place(rem, tail, block | low, cand & comp[w], need - 1, blocks):
                return True
        return False


def _certificate_from_masks(
    poset: Poset, masks: list[int], type_: Partition
) -> ChainPartitionCertificate:
    heights = {i: poset.dn[i].bit_count() for i in range(len(poset))}
    ordered = sorted(masks, key=lambda b: (-b.bit_count(), b))
    blocks = tuple(
        tuple(poset.labels[i] for i in sorted(iter_bits(b), key=lambda i: heights[i]))
        for b in ordered
    )
    cert = ChainPartitionCertificate(poset, blocks, type_)
    cert.validate()
    return cert


def chain_partition_exists(
    poset: Poset,
    type_,
    node_budget: int | None = None,
    stats: SearchStats | None = None,
) -> ChainPartitionCertificate | None:
    """A validated certificate of the given type, or None when the exhaustive
    (pruned) search proves none exists."""
    lam = as_partition(type_)
    searcher = ChainPartitionSearcher(poset, node_budget)
    masks = searcher.find(lam)
    if stats is not None:
        stats.nodes += searcher.nodes
    if masks is None:
        return None
    return _certificate_from_masks(poset, masks, lam)


def is_nice(
    poset: Poset,
    max_elements: int = 20,
    include_types: bool = False,
    node_budget: int | None = None,
) -> NiceVerdict:
    """Compute the achievable chain-partition types and decide whether they
    are closed downward in dominance.

    The witness of a failure is the first pair (achieved type, unachieved
    dominated type) in descending lexicographic order over both coordinates.
    """
    n = len(poset)
    if n > max_elements:
        raise TooLargeError(f"{n} elements exceeds the niceness limit of {max_elements}")
    if n == 0:
        return NiceVerdict(True, achieved_types=((),) if include_types else None)
    searcher = ChainPartitionSearcher(poset, node_budget)
    longest = poset.max_chain_size()
    width = poset.width()
    found: dict[Partition, list[int] | None] = {}
    for lam in partitions_of(n):
        if lam[0] > longest or len(lam) < width:
            found[lam] = None
        else:
            found[lam] = searcher.find(lam)
    types = list(found)
    achieved = tuple(lam for lam in types if found[lam] is not None)
    for lam in achieved:
        for mu in types:
            if found[mu] is None and dominance_leq(mu, lam):
                cert = _certificate_from_masks(poset, found[lam], lam)
                return NiceVerdict(
                    False,
                    witness=(lam, mu),
                    witness_certificate=cert,
                    achieved_types=achieved if include_types else None,
                    nodes=searcher.nodes,
                )
    return NiceVerdict(
        True,
        achieved_types=achieved if include_types else None,
        nodes=searcher.nodes,
    )


# ---------------------------------------------------------------------------
# Constructive results for products of two chains and their ordinal sums


def staircase_type(m: int, n: int) -> Partition:
    """(m+n-1, m+n-3, ..., m-n+1): the dominance-maximal chain-partition type
    of the m x n product."""
    if not m >= n >= 1:
        raise PreconditionError(f"need m >= n >= 1, got ({m}, {n})")
    out = tuple(m + n - 2 * i + 1 for i in range(1, n + 1))
    assert sum(out) == m * n
    return out


@dataclass(frozen=True)
class ChainFamilyParams:
    """A permutation of {1..n-1} and an (n-1)-subset of {1..m}, the data that
    freely parameterizes the families of n-1 nested chains in m x n."""

    m: int
    n: int
    sigma: tuple[int, ...]
    upsilon: tuple[int, ...]

    def __post_init__(self):
        if not self.m >= self.n >= 1:
            raise InvalidParamsError(f"need m >= n >= 1, got ({self.m}, {self.n})")
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "upsilon", tuple(sorted(self.upsilon)))
        if sorted(self.sigma) != list(range(1, self.n)):
            raise InvalidParamsError(f"sigma {self.sigma} is not a permutation of 1..{self.n - 1}")
        if len(set(self.upsilon)) != self.n - 1 or any(
            not 1 <= r <= self.m for r in self.upsilon
        ):
            raise InvalidParamsError(
                f"upsilon {self.upsilon} is not an ({self.n - 1})-subset of 1..{self.m}"
            )


def parameterized_chain_family(
    params: ChainFamilyParams,
) -> tuple[tuple[tuple[tuple[int, int], ...], ...], tuple[tuple[tuple[int, int], ...], ...]]:
    """The chains C_1..C_{n-1} (sizes m+n-1, m+n-3, ..., m-n+3) and leftover
    blocks R_1..R_n determined by (sigma, upsilon) inside the m x n product.

    Chain number sigma_i runs through the i-th position: up the column n-i
    from (i, n-i) to row r_i, across to column n-i+1, and on to
    (m-n+1+i, n-i+1).  Below rank n-2 and above rank m, the i leftmost
    elements of rank i-1 and of rank m+n-i-1 go to the chains numbered by
    sigma with entries larger than i removed.  Leftover block R_i is the run
    of column n+1-i strictly between r_{i-1} and r_i.
    """
    m, n, sigma = params.m, params.n, params.sigma
    r = (0,) + params.upsilon + (m + 1,)
    chains: dict[int, list[tuple[int, int]]] = {j: [] for j in range(1, n)}
    for i in range(1, n):
        ri = r[i]
        mid = [(x, n - i) for x in range(i, ri + 1)]
        mid += [(x, n - i + 1) for x in range(ri, m - n + 1 + i + 1)]
        chains[sigma[i - 1]].extend(mid)
    for i in range(1, n - 1):
        trunc = [v for v in sigma if v <= i]
        for k in range(1, i + 1):
            chains[trunc[k - 1]].append((k, i - k + 1))
            chains[trunc[k - 1]].append((m - i + k, n - k + 1))
    family = tuple(
        tuple(sorted(chains[j], key=lambda c: c[0] + c[1])) for j in range(1, n)
    )
    blocks = tuple(
        tuple((x, n + 1 - i) for x in range(r[i - 1] + 1, r[i])) for i in range(1, n + 1)
    )
    _check_chain_family(m, n, family, blocks)
    return family, blocks


def _check_chain_family(m, n, family, blocks) -> None:
    for j, chain in enumerate(family, start=1):
        if len(chain) != m + n + 1 - 2 * j:
            raise InternalInvariantError(f"chain {j} has size {len(chain)}")
    cells = [c for chain in family for c in chain] + [c for b in blocks for c in b]
    if len(cells) != m * n or len(set(cells)) != m * n:
        raise InternalInvariantError("family and leftovers do not tile the product")
    comparable = lambda a, b: (a[0] <= b[0] and a[1] <= b[1]) or (b[0] <= a[0] and b[1] <= a[1])
    for chain in family:
        for a, b in itertools.combinations(chain, 2):
            if not comparable(a, b):
                raise InternalInvariantError(f"{a} and {b} share a chain but are incomparable")
    for b1, b2 in itertools.combinations(blocks, 2):
        for a, b in itertools.product(b1, b2):
            if comparable(a, b):
                raise InternalInvariantError(f"leftovers {a} and {b} are comparable")


def ordinal_sum_chain_partition(
    p: int, q: int, m: int, n: int, mu
) -> ChainPartitionCertificate:
    """Constructive chain partition of the ordinal sum p + (m x n) + q for
    any type mu dominated by the shifted staircase.

    The recursion t_j = max(0, prefix(mu, j) - prefix(lam, j) - sum of
    earlier t) decides how many elements of the added chains each block
    absorbs; the remainder nu = mu - t is again dominated by the staircase,
    so the product part can be partitioned by search, and block j is topped
    up with t_j consecutive added-chain elements.
    """
    if p < 0 or q < 0:
        raise PreconditionError("added chain lengths must be >= 0")
    lam = staircase_type(m, n)
    lam_tilde = (lam[0] + p + q,) + lam[1:]
    mu = as_partition(mu)
    if not dominance_leq(mu, lam_tilde):
        raise PreconditionError(f"{mu} is not dominated by {lam_tilde}")
    padded = lam + (0,) * max(0, len(mu) - n)
    t: list[int] = []
    acc_mu = acc_lam = 0
    for j, part in enumerate(mu):
        acc_mu += part
        acc_lam += padded[j]
        t.append(max(0, acc_mu - acc_lam - sum(t)))
    nu = tuple(mu[j] - t[j] for j in range(len(mu)))
    if sum(t) != p + q or any(x < 0 for x in nu):
        raise InternalInvariantError(f"bad absorption split t={t} for mu={mu}")
    if list(nu) != sorted(nu, reverse=True):
        raise InternalInvariantError(f"nu={nu} is not a partition")
    positive = tuple(x for x in nu if x)
    if not dominance_leq(positive, lam):
        raise InternalInvariantError(f"nu={positive} escapes the staircase {lam}")

    product = build_poset(Product((m, n)))
    inner = chain_partition_exists(product, positive)
    if inner is None:
        raise InternalInvariantError(f"no product partition of type {positive}")
    sum_poset = build_poset(OrdinalSum(p, product.spec, q))
    # Inner labels can be renamed on collision, so map by element index.
    rename = {
        product.labels[i]: sum_poset.labels[p + i] for i in range(len(product))
    }
    extras = [f"lo{i + 1}" for i in range(p)] + [f"hi{j + 1}" for j in range(q)]
    blocks: list[tuple[str, ...]] = []
    inner_iter = iter(inner.blocks)
    cursor = 0
    for j in range(len(mu)):
        base = tuple(rename[x] for x in next(inner_iter)) if nu[j] else ()
        take = extras[cursor : cursor + t[j]]
        cursor += t[j]
        lo_part = tuple(x for x in take if x.startswith("lo"))
        hi_part = tuple(x for x in take if x.startswith("hi"))
        blocks.append(lo_part + base + hi_part)
    cert = ChainPartitionCertificate(sum_poset, tuple(blocks), mu)
    cert.validate()
    return cert
