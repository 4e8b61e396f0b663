"""Integer partitions, weak compositions, and the dominance order.

Partitions are plain tuples of weakly decreasing positive ints; ``()`` is the
unique partition of 0.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator

from .errors import DomainError, DslParseError, SizeMismatchError

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` as a partition (weakly decreasing, positive)."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x < 1:
            raise DomainError(f"partition parts must be positive, got {x}")
        if i and p[i - 1] < x:
            raise DomainError(f"parts must be weakly decreasing, got {p}")
    return p


def sorted_partition(parts: Iterable[int]) -> Partition:
    """Sort nonnegative entries into a partition, dropping zeros."""
    p = sorted((int(x) for x in parts), reverse=True)
    if p and p[-1] < 0:
        raise DomainError("partition parts must be nonnegative")
    return tuple(x for x in p if x > 0)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form; the empty string is ``()``.

    Unparseable text raises :class:`DslParseError` with the byte offset of
    the offending piece; text that parses but is not weakly decreasing and
    positive is a plain domain error.
    """
    if text == "":
        return ()
    parts = []
    offset = 0
    for piece in text.split(","):
        try:
            parts.append(int(piece))
        except ValueError as exc:
            raise DslParseError(f"bad partition part {piece!r}", offset) from exc
        offset += len(piece) + 1
    return as_partition(parts)


def format_partition(p: Partition) -> str:
    """Inverse of :func:`parse_partition`."""
    return ",".join(str(x) for x in p)


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True when ``mu`` is dominated by ``lam``: every prefix sum of ``mu``
    is at most the corresponding prefix sum of ``lam`` (zero-padded).

    Both arguments must be partitions of the same total.
    """
    mu = as_partition(mu)
    lam = as_partition(lam)
    if sum(mu) != sum(lam):
        raise SizeMismatchError(f"{mu} and {lam} have different totals")
    acc_mu = acc_lam = 0
    for k in range(len(mu)):
        acc_mu += mu[k]
        acc_lam += lam[k] if k < len(lam) else 0
        if acc_mu > acc_lam:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise DomainError("cannot partition a negative integer")
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def weak_compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All length-``length`` tuples of nonnegative ints summing to ``total``,
    in descending lexicographic order."""
    if total < 0 or length < 1:
        raise DomainError("need total >= 0 and length >= 1")
    if length == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in weak_compositions(total - first, length - 1):
            yield (first,) + rest


def multiplicity_profile(lam: Partition) -> tuple[tuple[int, int], ...]:
    """Part sizes with multiplicities, ascending by size: ((k, alpha_k), ...)."""
    lam = as_partition(lam)
    pairs: list[tuple[int, int]] = []
    for part in sorted(lam):
        if pairs and pairs[-1][0] == part:
            pairs[-1] = (part, pairs[-1][1] + 1)
        else:
            pairs.append((part, 1))
    return tuple(pairs)


def profile_to_partition(profile: Iterable[tuple[int, int]]) -> Partition:
    parts: list[int] = []
    for size, count in profile:
        parts.extend([size] * count)
    return sorted_partition(parts)


def suffix(lam: Partition, k: int) -> Partition:
    """Drop the first ``k - 1`` parts (the parts from index ``k`` on)."""
    lam = as_partition(lam)
    if k < 1:
        raise DomainError("suffix index must be >= 1")
    return lam[k - 1 :]


def multinomial(n: int, parts: Iterable[int]) -> int:
    """Exact ``n! / (parts_1! * parts_2! * ...)`` with ``sum(parts) == n``."""
    parts = [int(x) for x in parts]
    if any(x < 0 for x in parts):
        raise DomainError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise SizeMismatchError(f"parts {parts} do not sum to {n}")
    out = 1
    remaining = n
    for x in parts:
        out *= math.comb(remaining, x)
        remaining -= x
    return out


def symmetry_factor(lam: Partition) -> int:
    """Product of ``alpha_k!`` over the multiplicities of ``lam``; the number
    of orderings of equal-size blocks."""
    out = 1
    for _, count in multiplicity_profile(lam):
        out *= math.factorial(count)
    return out


def rearrangement_count(lam: Partition, length: int) -> int:
    """Number of distinct length-``length`` vectors whose nonzero entries are
    a rearrangement of ``lam`` (the monomial basis evaluated at that many
    ones).  Zero when ``lam`` has more parts than ``length``."""
    lam = as_partition(lam)
    if len(lam) > length:
        return 0
    out = math.factorial(length) // math.factorial(length - len(lam))
    return out // symmetry_factor(lam)
