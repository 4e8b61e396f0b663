"""Finite posets: builders (chains, products of chains, boolean algebras, the
tailed-cube family, ordinal sums), incomparability graphs, and order-theoretic
queries (chains, longest chain, width, distributivity).

Elements are indexed 0..n-1 in construction order, and every subset is a
bitmask over those indices; labels are human-readable strings used in
certificates and JSON output.  Posets are immutable once built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DslParseError, InvalidSpecError, UnknownElementError


def iter_bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Builder specs


class PosetSpec:
    """Abstract syntax for the poset builder DSL."""

    def dsl(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Chain(PosetSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpecError(f"chain length must be >= 1, got {self.n}")

    def dsl(self) -> str:
        return f"chain:{self.n}"


@dataclass(frozen=True)
class Product(PosetSpec):
    lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        if not self.lengths or any(x < 1 for x in self.lengths):
            raise InvalidSpecError(f"product factors must be >= 1, got {self.lengths}")

    def dsl(self) -> str:
        return "prod:" + "x".join(str(x) for x in self.lengths)


@dataclass(frozen=True)
class Boolean(PosetSpec):
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidSpecError(f"boolean rank must be >= 1, got {self.rank}")

    def dsl(self) -> str:
        return f"bool:{self.rank}"


@dataclass(frozen=True)
class B3(PosetSpec):
    """The 2n+6-element lattice: a 3-cube with two parallel n-element tails."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpecError(f"tail length must be >= 1, got {self.n}")

    def dsl(self) -> str:
        return f"b3:{self.n}"


@dataclass(frozen=True)
class OrdinalSum(PosetSpec):
    """A p-chain placed entirely below ``inner``, a q-chain entirely above."""

    p: int
    inner: PosetSpec
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise InvalidSpecError("ordinal-sum chain lengths must be >= 0")
        if not isinstance(self.inner, PosetSpec):
            raise InvalidSpecError("ordinal-sum inner part must be a poset spec")

    def dsl(self) -> str:
        return f"sum:{self.p}+{self.inner.dsl()}+{self.q}"


# ---------------------------------------------------------------------------
# Core types


class Poset:
    """Immutable finite poset.

    ``up[i]`` is the bitmask of j with i <= j (including i itself), ``dn[i]``
    the bitmask of j <= i, ``comp[i]`` their union, and ``covers[i]`` the
    bitmask of elements covering i.  The order relation is validated at
    construction.
    """

    __slots__ = (
        "labels",
        "up",
        "dn",
        "comp",
        "covers",
        "full_mask",
        "topo",
        "spec",
        "_index",
    )

    def __init__(self, labels: tuple[str, ...], up: tuple[int, ...]):
        n = len(labels)
        if len(set(labels)) != n:
            raise InvalidSpecError("element labels must be distinct")
        if len(up) != n:
            raise InvalidSpecError("one up-set mask per element required")
        full = (1 << n) - 1
        dn = [0] * n
        for i in range(n):
            if up[i] & ~full:
                raise InvalidSpecError("up-set mask out of range")
            if not up[i] >> i & 1:
                raise InvalidSpecError(f"order not reflexive at {labels[i]}")
            for j in iter_bits(up[i]):
                dn[j] |= 1 << i
        for i in range(n):
            if up[i] & dn[i] != 1 << i:
                raise InvalidSpecError(f"order not antisymmetric at {labels[i]}")
            for j in iter_bits(up[i]):
                if up[j] & ~up[i]:
                    raise InvalidSpecError(f"order not transitive at {labels[i]}")
        self.labels = tuple(labels)
        self.up = tuple(up)
        self.dn = tuple(dn)
        self.comp = tuple(up[i] | dn[i] for i in range(n))
        self.full_mask = full
        # Covers: j covers i when i < j with nothing strictly between.
        covers = []
        for i in range(n):
            strict_up = up[i] ^ (1 << i)
            c = 0
            for j in iter_bits(strict_up):
                if not strict_up & (dn[j] ^ (1 << j)):
                    c |= 1 << j
            covers.append(c)
        self.covers = tuple(covers)
        # Any index order ascending in down-set size is a linear extension.
        self.topo = tuple(sorted(range(n), key=lambda i: (dn[i].bit_count(), i)))
        self.spec: PosetSpec | None = None  # set by build_poset
        self._index = {lab: i for i, lab in enumerate(labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements)"

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElementError(f"no element labeled {label!r}") from None

    def subset_mask(self, labels) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index_of(lab)
        return mask

    def is_chain_mask(self, mask: int) -> bool:
        for i in iter_bits(mask):
            if mask & ~self.comp[i]:
                return False
        return True

    def max_chain_size(self, mask: int | None = None) -> int:
        """Size of the longest chain inside ``mask`` (whole poset by default)."""
        if mask is None:
            mask = self.full_mask
        best = [0] * len(self)
        out = 0
        for i in self.topo:
            if not mask >> i & 1:
                continue
            b = 1
            for j in iter_bits((self.dn[i] ^ (1 << i)) & mask):
                if best[j] >= b:
                    b = best[j] + 1
            best[i] = b
            if b > out:
                out = b
        return out

    def width(self, mask: int | None = None) -> int:
        """Largest antichain inside ``mask``: |mask| minus a maximum matching
        in the bipartite graph of strict comparabilities (Dilworth)."""
        if mask is None:
            mask = self.full_mask
        elems = list(iter_bits(mask))
        match_to: dict[int, int] = {}

        def try_match(i: int, seen: set[int]) -> bool:
            for j in iter_bits((self.up[i] ^ (1 << i)) & mask):
                if j in seen:
                    continue
                seen.add(j)
                if j not in match_to or try_match(match_to[j], seen):
                    match_to[j] = i
                    return True
            return False

        matched = 0
        for i in elems:
            if try_match(i, set()):
                matched += 1
        return len(elems) - matched

    def meet(self, i: int, j: int) -> int | None:
        """Index of the greatest lower bound of i and j, or None."""
        cand = self.dn[i] & self.dn[j]
        for k in iter_bits(cand):
            if cand & ~self.dn[k] == 0:
                return k
        return None

    def join(self, i: int, j: int) -> int | None:
        cand = self.up[i] & self.up[j]
        for k in iter_bits(cand):
            if cand & ~self.up[k] == 0:
                return k
        return None


class Graph:
    """Undirected graph with labeled vertices; ``adj[i]`` is a neighbor
    bitmask (no self-loops)."""

    __slots__ = ("labels", "adj")

    def __init__(self, labels: tuple[str, ...], adj: tuple[int, ...]):
        n = len(labels)
        if len(adj) != n:
            raise InvalidSpecError("one adjacency mask per vertex required")
        for i in range(n):
            if adj[i] >> i & 1:
                raise InvalidSpecError(f"self-loop at {labels[i]}")
            for j in iter_bits(adj[i]):
                if j >= n or not adj[j] >> i & 1:
                    raise InvalidSpecError("adjacency not symmetric")
        self.labels = tuple(labels)
        self.adj = tuple(adj)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Graph({len(self)} vertices, {self.edge_count()} edges)"

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2


# ---------------------------------------------------------------------------
# Spec-level operations


def incomparability_graph(poset: Poset) -> Graph:
    """Graph on the poset's elements joining exactly the incomparable pairs."""
    full = poset.full_mask
    adj = tuple(full & ~poset.comp[i] for i in range(len(poset)))
    return Graph(poset.labels, adj)


def is_chain_subset(poset: Poset, elements) -> bool:
    """True iff the labeled elements are pairwise comparable."""
    return poset.is_chain_mask(poset.subset_mask(elements))


def max_chain_size(poset: Poset) -> int:
    if len(poset) == 0:
        raise InvalidSpecError("poset is empty")
    return poset.max_chain_size()


def verify_distributive_lattice(poset: Poset) -> bool:
    """True iff all pairwise meets and joins exist and both distributive laws
    hold over all triples."""
    n = len(poset)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m = poset.meet(i, j)
            v = poset.join(i, j)
            if m is None or v is None:
                return False
            meet[i][j] = meet[j][i] = m
            join[i][j] = join[j][i] = v
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    return False
                if join[a][meet[b][c]] != meet[join[a][b]][join[a][c]]:
                    return False
    return True


# ---------------------------------------------------------------------------
# Builders


def _poset_from_coords(labels, coords) -> Poset:
    """Poset on coordinate tuples under the componentwise order."""
    n = len(coords)
    up = []
    for i in range(n):
        mask = 0
        ci = coords[i]
        for j in range(n):
            cj = coords[j]
            if all(a <= b for a, b in zip(ci, cj)):
                mask |= 1 << j
        up.append(mask)
    return Poset(tuple(labels), tuple(up))


def _build_chain(n: int) -> Poset:
    labels = tuple(str(i + 1) for i in range(n))
    full = (1 << n) - 1
    up = tuple(full & ~((1 << i) - 1) for i in range(n))
    return Poset(labels, up)


def _build_product(lengths: tuple[int, ...]) -> Poset:
    coords = list(itertools.product(*(range(1, m + 1) for m in lengths)))
    labels = ["(" + ",".join(str(x) for x in c) + ")" for c in coords]
    return _poset_from_coords(labels, coords)


def _build_b3(n: int) -> Poset:
    # Coordinate realization inside the product (n+1) x 2 x 2.  The named
    # elements sit on the cube at the top; the two n-element tails hang from
    # b and e.
    named = {
        "a": (n + 1, 2, 2),
        "b": (n + 1, 1, 2),
        "c": (n, 2, 2),
        "d": (n + 1, 2, 1),
        "e": (n + 1, 1, 1),
        "f": (n, 2, 1),
    }
    labels = ["a", "b", "c", "d", "e", "f"]
    coords = [named[x] for x in labels]
    for i in range(1, n + 1):
        labels += [str(i), f"{i}'"]
        coords += [(n + 1 - i, 1, 2), (n + 1 - i, 1, 1)]
    assert len(set(coords)) == 2 * n + 6
    poset = _poset_from_coords(labels, coords)

    # The structural facts the non-niceness argument relies on are cheap;
    # check them every time the lattice is built.
    comparable = lambda x, y: is_chain_subset(poset, (x, y))
    tail = [str(i) for i in range(1, n + 1)]
    tick = [f"{i}'" for i in range(1, n + 1)]
    assert is_chain_subset(poset, ["a", "d", "f", *tick])
    assert is_chain_subset(poset, ["c", *tail])
    assert comparable("b", "e")
    assert not any(comparable(x, y) for x, y in itertools.combinations(("b", "c", "d"), 2))
    assert not any(comparable(x, y) for x, y in itertools.combinations(("e", "f", "1"), 2))
    assert not any(comparable("d", i) for i in tail)
    assert not any(comparable(i, x) for i in tail for x in ("e", "f"))
    # Meet/join closure of the coordinate set: the lattice is distributive.
    cset = set(coords)
    for x, y in itertools.combinations(coords, 2):
        assert tuple(map(min, x, y)) in cset and tuple(map(max, x, y)) in cset
    if n == 1:
        assert cset == set(itertools.product((1, 2), repeat=3))
    return poset


def _build_ordinal_sum(p: int, inner: Poset, q: int) -> Poset:
    k = len(inner)
    n = p + k + q
    reserved = {f"lo{i + 1}" for i in range(p)} | {f"hi{j + 1}" for j in range(q)}
    labels = [f"lo{i + 1}" for i in range(p)]
    for lab in inner.labels:
        while lab in reserved or lab in labels:
            lab += "'"
        labels.append(lab)
    labels += [f"hi{j + 1}" for j in range(q)]

    full = (1 << n) - 1
    hi_mask = ((1 << q) - 1) << (p + k)
    up = []
    for i in range(p):
        up.append(full & ~((1 << i) - 1))
    for i in range(k):
        up.append((inner.up[i] << p) | hi_mask)
    for j in range(q):
        up.append(hi_mask & ~((1 << (p + k + j)) - 1))
    return Poset(tuple(labels), tuple(up))


def build_poset(spec: PosetSpec) -> Poset:
    """Construct the poset described by ``spec``."""
    if isinstance(spec, Chain):
        poset = _build_chain(spec.n)
    elif isinstance(spec, Product):
        poset = _build_product(spec.lengths)
    elif isinstance(spec, Boolean):
        poset = _build_product((2,) * spec.rank)
    elif isinstance(spec, B3):
        poset = _build_b3(spec.n)
    elif isinstance(spec, OrdinalSum):
        poset = _build_ordinal_sum(spec.p, build_poset(spec.inner), spec.q)
    else:
        raise InvalidSpecError(f"unknown poset spec {spec!r}")
    poset.spec = spec
    return poset


# ---------------------------------------------------------------------------
# DSL parsing: chain:N | prod:N1xN2x... | bool:R | b3:N | sum:P+<spec>+Q


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise DslParseError("expected an integer", start)
    return int(text[start:pos]), pos


def _expect(text: str, pos: int, token: str) -> int:
    if not text.startswith(token, pos):
        raise DslParseError(f"expected {token!r}", pos)
    return pos + len(token)


def _parse_spec(text: str, pos: int) -> tuple[PosetSpec, int]:
    for head in ("chain", "prod", "bool", "b3", "sum"):
        if text.startswith(head + ":", pos):
            break
    else:
        raise DslParseError("expected chain:, prod:, bool:, b3:, or sum:", pos)
    pos += len(head) + 1
    if head == "chain":
        n, pos = _parse_int(text, pos)
        return Chain(n), pos
    if head == "bool":
        r, pos = _parse_int(text, pos)
        return Boolean(r), pos
    if head == "b3":
        n, pos = _parse_int(text, pos)
        return B3(n), pos
    if head == "prod":
        lengths = []
        n, pos = _parse_int(text, pos)
        lengths.append(n)
        while pos < len(text) and text[pos] == "x":
            n, pos = _parse_int(text, pos + 1)
            lengths.append(n)
        return Product(tuple(lengths)), pos
    p, pos = _parse_int(text, pos)
    pos = _expect(text, pos, "+")
    inner, pos = _parse_spec(text, pos)
    pos = _expect(text, pos, "+")
    q, pos = _parse_int(text, pos)
    return OrdinalSum(p, inner, q), pos


def parse_poset_spec(text: str) -> PosetSpec:
    """Parse the whitespace-free poset DSL; syntax errors carry the byte
    offset, while semantically invalid parameters (e.g. ``chain:0``) raise
    plain :class:`InvalidSpecError`."""
    spec, pos = _parse_spec(text, 0)
    if pos != len(text):
        raise DslParseError("unexpected trailing text", pos)
    return spec
