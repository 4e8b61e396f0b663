"""Chromatic symmetric functions of incomparability graphs, expanded exactly
in the monomial and Schur bases.

Monomial coefficients are semi-ordered stable-partition counts.  Schur
coefficients come from the signed tabloid sum: for each special rim hook
tabloid of the requested shape, add its sign times the chain-partition count
of its content.  For a product of two chains and a shape carrying the forced
staircase prefix, the counts have a closed form and the sum collapses to a
handful of terms; that fast path is what makes the large negativity sweeps
cheap.
"""

from __future__ import annotations

import math

from .counting import (
    WITNESS_CASE_HEIGHTS,
    ChainPartitionCounter,
    StablePartitionCounter,
    StaircaseContext,
    forced_content_prefix,
    proof_case_closed_forms,
    scp_closed_form,
    staircase_delta,
)
from .errors import (
    DomainError,
    FastPathInapplicableError,
    InternalInvariantError,
    PreconditionError,
    SizeMismatchError,
    TooLargeError,
)
from .partitions import (
    Partition,
    as_partition,
    partitions_of,
    rearrangement_count,
)
from .posets import Boolean, Chain, Graph, Poset, Product, build_poset, iter_bits
from .rimhooks import enumerate_srht, kostka_number


class MonomialExpansion:
    """Sparse map from partitions to monomial coefficients (absent = 0)."""

    def __init__(self, degree: int, coeffs: dict[Partition, int]):
        self.degree = degree
        self.coeffs = dict(coeffs)

    def coefficient(self, lam) -> int:
        return self.coeffs.get(as_partition(lam), 0)

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), reverse=True)

    def specialize(self, colors: int) -> int:
        """Underlying function with ``colors`` variables set to 1: the
        chromatic polynomial of the source graph at that many colors."""
        return sum(
            c * rearrangement_count(lam, colors) for lam, c in self.coeffs.items()
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialExpansion)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"MonomialExpansion(degree={self.degree}, {len(self.coeffs)} terms)"


class SchurExpansion:
    """Sparse map from partitions to Schur coefficients (absent = 0)."""

    def __init__(self, degree: int, coeffs: dict[Partition, int]):
        self.degree = degree
        self.coeffs = dict(coeffs)

    def coefficient(self, lam) -> int:
        return self.coeffs.get(as_partition(lam), 0)

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), reverse=True)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def specialize(self, colors: int) -> int:
        return sum(
            c * schur_at_ones(lam, colors) for lam, c in self.coeffs.items()
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurExpansion)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"SchurExpansion(degree={self.degree}, {len(self.coeffs)} terms)"


def schur_at_ones(lam, colors: int) -> int:
    """The Schur function of shape ``lam`` with ``colors`` variables set
    to 1: semistandard tableaux with bounded entries, counted through the
    Kostka numbers."""
    lam = as_partition(lam)
    return sum(
        kostka_number(lam, mu) * rearrangement_count(mu, colors)
        for mu in partitions_of(sum(lam))
    )


def monomial_expansion(graph: Graph) -> MonomialExpansion:
    """Monomial coefficients of the chromatic symmetric function: one
    stable-partition count per type."""
    n = len(graph)
    if n == 0:
        return MonomialExpansion(0, {(): 1})
    counter = StablePartitionCounter(graph)
    coeffs = {}
    for lam in partitions_of(n):
        c = counter.count(lam)
        if c:
            coeffs[lam] = c
    return MonomialExpansion(n, coeffs)


# ---------------------------------------------------------------------------
# Schur coefficients


def _two_chain_lengths(poset: Poset) -> tuple[int, int] | None:
    """(m, n) with m >= n when the poset was built as a product of at most
    two chains; None otherwise."""
    spec = poset.spec
    if isinstance(spec, Chain):
        return (spec.n, 1)
    if isinstance(spec, Boolean) and spec.rank <= 2:
        return (2, 2) if spec.rank == 2 else (2, 1)
    if isinstance(spec, Product) and len(spec.lengths) <= 2:
        ls = sorted(spec.lengths, reverse=True)
        return (ls[0], ls[-1]) if len(ls) == 2 else (ls[0], 1)
    return None


def closed_fast_path(poset: Poset, shape) -> tuple[StaircaseContext, Partition] | None:
    """Context and forced content prefix when the closed evaluation applies
    to this poset and shape."""
    mn = _two_chain_lengths(poset)
    if mn is None:
        return None
    m, n = mn
    pre = forced_content_prefix(shape, m, n)
    if pre is None:
        return None
    return StaircaseContext(m, n), pre


def schur_coefficient(poset: Poset, shape, method: str = "auto") -> int:
    """Coefficient of the Schur function of ``shape`` in the chromatic
    symmetric function of the poset's incomparability graph.

    ``tabloid_brute`` counts every tabloid content by backtracking search;
    ``tabloid_closed`` (products of two chains, staircase-prefixed shapes
    only) evaluates each content by the closed form; ``auto`` picks the
    closed route whenever it applies.
    """
    shape = as_partition(shape)
    if sum(shape) != len(poset):
        raise SizeMismatchError(f"shape {shape} does not fill the poset")
    if method not in ("auto", "tabloid_brute", "tabloid_closed"):
        raise DomainError(f"unknown method {method!r}")
    fast = closed_fast_path(poset, shape) if method != "tabloid_brute" else None
    if method == "tabloid_closed" and fast is None:
        raise FastPathInapplicableError(
            "closed path needs a product of two chains and a staircase-prefixed shape"
        )
    if fast is not None:
        ctx, pre = fast
        return sum(
            t.sign * scp_closed_form(ctx, t.content)
            for t in enumerate_srht(shape, content_prefix=pre)
        )
    counter = ChainPartitionCounter(poset)
    longest = poset.max_chain_size() if len(poset) else 0
    cache: dict[Partition, int] = {}
    total = 0
    for t in enumerate_srht(shape):
        content = t.content
        if content and content[0] > longest:
            continue
        cnt = cache.get(content)
        if cnt is None:
            cnt = cache[content] = counter.count(content)
        total += t.sign * cnt
    return total


def schur_expansion(poset: Poset, max_elements: int = 12) -> SchurExpansion:
    """Full Schur expansion over all partitions of |P|; shapes longer than
    the longest chain are omitted (their coefficients vanish)."""
    n = len(poset)
    if n > max_elements:
        raise TooLargeError(
            f"{n} elements exceeds the expansion limit of {max_elements}"
        )
    if n == 0:
        return SchurExpansion(0, {(): 1})
    longest = poset.max_chain_size()
    counter = ChainPartitionCounter(poset)
    cache: dict[Partition, int] = {}
    coeffs = {}
    for lam in partitions_of(n):
        if lam[0] > longest:
            continue
        total = 0
        for t in enumerate_srht(lam):
            content = t.content
            if content[0] > longest:
                continue
            cnt = cache.get(content)
            if cnt is None:
                cnt = cache[content] = counter.count(content)
            total += t.sign * cnt
        if total:
            coeffs[lam] = total
    return SchurExpansion(n, coeffs)


# ---------------------------------------------------------------------------
# The negativity witness for products of two chains


def rho_shape(n: int, k: int) -> Partition:
    """The witness shape: staircase prefix down to k+3, then (k-3, 2, 2).
    A partition of n(n+k) with n+2 parts."""
    shape = staircase_delta(n, k) + (k - 3, 2, 2)
    assert sum(shape) == n * (n + k)
    return shape


def theorem41_coefficient(n: int, k: int) -> int:
    """Closed form of the witness-shape coefficient for the (n+k) x n
    product.  Negative for every n >= (k+2)/2; signs outside that range are
    reported by the caller, not asserted here."""
    if k < 5 or n < 2:
        raise PreconditionError(f"need k >= 5 and n >= 2, got ({n}, {k})")
    nf = math.factorial(n)
    if k == 5:
        return nf * (-4 * n + 9)
    if k == 6:
        return nf * (-11 * n + 32)
    num = nf * (k - 4) * ((-2 * k * k + 4 * k - 18) * n + (k**3 - 7 * k + 18))
    out, r = divmod(num, 12)
    if r:
        raise InternalInvariantError("witness coefficient numerator not divisible by 12")
    return out


def witness_coefficient_from_cases(n: int, k: int) -> int:
    """The same coefficient assembled compositionally: six case counts, each
    weighted by the sign of its tabloid.  Cross-checks theorem41_coefficient."""
    counts = proof_case_closed_forms(n, k)
    return sum(
        (-1) ** WITNESS_CASE_HEIGHTS[name] * count for name, count in counts.items()
    )


def pieri_shift_coefficient(p: int, q: int, m: int, n: int, shape_tilde) -> int:
    """Coefficient of the shifted shape in the ordinal sum of a p-chain, the
    m x n product, and a q-chain: the added chain is absorbed entirely by the
    first part, so the value equals the unshifted coefficient on the product
    alone."""
    if p < 0 or q < 0:
        raise PreconditionError("added chain lengths must be >= 0")
    if m < 1 or n < 1:
        raise PreconditionError("product sides must be >= 1")
    tilde = as_partition(shape_tilde)
    if sum(tilde) != m * n + p + q:
        raise SizeMismatchError(f"shape {tilde} does not fill the ordinal sum")
    if not tilde or tilde[0] != m + n - 1 + p + q:
        raise PreconditionError(
            "first part must equal the longest chain of the ordinal sum"
        )
    rho = (m + n - 1,) + tilde[1:]
    if any(rho[i] < rho[i + 1] for i in range(len(rho) - 1)):
        raise PreconditionError(f"{tilde} is not a shift of a valid product shape")
    big, small = max(m, n), min(m, n)
    return schur_coefficient(build_poset(Product((big, small))), rho)


# ---------------------------------------------------------------------------
# Coloring oracles


def count_proper_colorings(graph: Graph, colors: int) -> int:
    """Proper colorings with a fixed palette, by direct enumeration."""
    n = len(graph)
    assignment = [0] * n

    def rec(i: int) -> int:
        if i == n:
            return 1
        below = graph.adj[i] & ((1 << i) - 1)
        forbidden = {assignment[j] for j in iter_bits(below)}
        total = 0
        for c in range(colors):
            if c in forbidden:
                continue
            assignment[i] = c
            total += rec(i + 1)
        return total

    return rec(0)


def count_colorings_by_type(graph: Graph, type_) -> int:
    """Proper colorings in which color i is used exactly type_[i] times —
    the monomial coefficient read directly off the coloring sum, sharing no
    code with the stable-partition counter."""
    lam = as_partition(type_)
    if sum(lam) != len(graph):
        raise SizeMismatchError(f"type {lam} does not cover the graph")
    n = len(graph)
    caps = list(lam)
    assignment = [0] * n

    def rec(i: int) -> int:
        if i == n:
            return 1
        below = graph.adj[i] & ((1 << i) - 1)
        forbidden = {assignment[j] for j in iter_bits(below)}
        total = 0
        for c in range(len(caps)):
            if not caps[c] or c in forbidden:
                continue
            caps[c] -= 1
            assignment[i] = c
            total += rec(i + 1)
            caps[c] += 1
        return total

    return rec(0)
