import itertools

import pytest
from hypothesis import given, strategies as st

from chromaposet.errors import (
    DslParseError,
    InvalidSpecError,
    UnknownElementError,
)
from chromaposet.posets import (
    B3,
    Boolean,
    Chain,
    OrdinalSum,
    Poset,
    Product,
    build_poset,
    incomparability_graph,
    max_chain_size,
    parse_poset_spec,
    verify_distributive_lattice,
)

SPEC_SAMPLES = [
    Chain(1),
    Chain(5),
    Product((2, 2)),
    Product((4, 3)),
    Product((2, 2, 2)),
    Boolean(3),
    B3(1),
    B3(4),
    OrdinalSum(1, Product((3, 2)), 2),
    OrdinalSum(0, Chain(2), 0),
    OrdinalSum(2, OrdinalSum(1, Chain(1), 0), 1),
]


def test_chain_basics():
    c = build_poset(Chain(4))
    assert len(c) == 4
    assert c.labels == ("1", "2", "3", "4")
    assert c.max_chain_size() == 4
    assert c.width() == 1
    assert incomparability_graph(c).edge_count() == 0


def test_invalid_specs():
    with pytest.raises(InvalidSpecError):
        Chain(0)
    with pytest.raises(InvalidSpecError):
        Product(())
    with pytest.raises(InvalidSpecError):
        Product((3, 0))
    with pytest.raises(InvalidSpecError):
        Boolean(-1)
    with pytest.raises(InvalidSpecError):
        B3(0)
    with pytest.raises(InvalidSpecError):
        OrdinalSum(-1, Chain(1), 0)


def test_product_structure():
    p = build_poset(Product((4, 3)))
    assert len(p) == 12
    assert p.max_chain_size() == 6  # 4 + 3 - 1
    assert p.width() == 3
    i = p.index_of("(2,2)")
    j = p.index_of("(3,3)")
    assert p.up[i] >> j & 1
    assert not p.up[j] >> i & 1
    with pytest.raises(UnknownElementError):
        p.index_of("(9,9)")
    # incomparable pair count: total pairs minus comparable ones
    comparable = sum(
        1
        for a, b in itertools.combinations(range(12), 2)
        if p.up[a] >> b & 1 or p.up[b] >> a & 1
    )
    assert incomparability_graph(p).edge_count() == 66 - comparable


def test_covers_generate_order():
    # transitive closure of the cover relation reproduces up
    for spec in SPEC_SAMPLES:
        poset = build_poset(spec)
        n = len(poset)
        reach = [1 << i | poset.covers[i] for i in range(n)]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                new = reach[i]
                for j in range(n):
                    if reach[i] >> j & 1:
                        new |= reach[j]
                if new != reach[i]:
                    reach[i] = new
                    changed = True
        for i in range(n):
            assert reach[i] == poset.up[i], spec


def test_max_chain_examples():
    assert max_chain_size(build_poset(Product((8, 3)))) == 10
    assert max_chain_size(build_poset(B3(6))) == 9
    assert build_poset(B3(6)).width() == 3


def test_boolean_is_cube_product():
    b = build_poset(Boolean(3))
    p = build_poset(Product((2, 2, 2)))
    assert len(b) == len(p) == 8
    # same up-set profile under the coordinate bijection
    assert sorted(m.bit_count() for m in b.up) == sorted(m.bit_count() for m in p.up)


def test_b3_embeds_cube_with_tails():
    for n in range(1, 7):
        poset = build_poset(B3(n))
        assert len(poset) == 2 * n + 6
        a = poset.index_of("a")
        assert poset.dn[a].bit_count() == len(poset) - poset.up[a].bit_count() + 1
        # b,c,d mutually incomparable; e,f,1 mutually incomparable
        for x, y in itertools.combinations(("b", "c", "d"), 2):
            i, j = poset.index_of(x), poset.index_of(y)
            assert not poset.up[i] >> j & 1 and not poset.up[j] >> i & 1
        if n >= 2:
            for x, y in itertools.combinations(("e", "f", "1"), 2):
                i, j = poset.index_of(x), poset.index_of(y)
                assert not poset.up[i] >> j & 1 and not poset.up[j] >> i & 1
        assert verify_distributive_lattice(poset)


def test_b3_1_is_boolean_cube():
    poset = build_poset(B3(1))
    assert len(poset) == 8
    assert sorted(m.bit_count() for m in poset.up) == sorted(
        m.bit_count() for m in build_poset(Boolean(3)).up
    )


def test_meet_join():
    p = build_poset(Product((3, 3)))
    i, j = p.index_of("(1,3)"), p.index_of("(3,1)")
    assert p.labels[p.meet(i, j)] == "(1,1)"
    assert p.labels[p.join(i, j)] == "(3,3)"


def test_distributive_examples():
    assert verify_distributive_lattice(build_poset(Product((6, 3))))
    assert verify_distributive_lattice(build_poset(Boolean(3)))
    # an antichain of 2 has no meets at all
    two = Poset(("x", "y"), (0b01, 0b10))
    assert not verify_distributive_lattice(two)


def test_dsl_round_trip():
    for spec in SPEC_SAMPLES:
        assert parse_poset_spec(spec.dsl()) == spec


def test_dsl_parse_errors_carry_offsets():
    for text, offset in [("chain:x", 6), ("prod:3x", 7), ("nope:3", 0), ("sum:1+chain:2", 13)]:
        with pytest.raises(DslParseError) as exc:
            parse_poset_spec(text)
        assert exc.value.offset == offset, text
    # trailing garbage is a parse error, bad parameters a semantic one
    with pytest.raises(DslParseError):
        parse_poset_spec("chain:3junk")
    with pytest.raises(InvalidSpecError) as exc2:
        parse_poset_spec("chain:0")
    assert not isinstance(exc2.value, DslParseError)


def test_ordinal_sum_labels_and_order():
    poset = build_poset(OrdinalSum(2, Product((2, 2)), 1))
    assert poset.labels[:2] == ("lo1", "lo2")
    assert poset.labels[-1] == "hi1"
    lo1, hi1 = poset.index_of("lo1"), poset.index_of("hi1")
    assert poset.up[lo1] == poset.full_mask
    assert poset.dn[hi1] == poset.full_mask
    mid = poset.index_of("(2,1)")
    assert poset.up[lo1] >> mid & 1
    assert poset.up[mid] >> hi1 & 1


def test_ordinal_sum_renames_colliding_labels():
    # inner chain has elements "1","2"; a lo/hi chain never collides, but a
    # nested ordinal sum reuses "lo1"/"hi1" and must be renamed
    inner = OrdinalSum(1, Chain(1), 1)
    poset = build_poset(OrdinalSum(1, inner, 1))
    assert poset.labels.count("lo1") == 1
    assert "lo1'" in poset.labels
    assert "hi1'" in poset.labels


def test_subset_helpers():
    p = build_poset(Product((4, 2)))
    chain_mask = p.subset_mask(["(1,1)", "(2,1)", "(2,2)"])
    assert p.is_chain_mask(chain_mask)
    anti = p.subset_mask(["(1,2)", "(2,1)"])
    assert not p.is_chain_mask(anti)
    assert p.max_chain_size(anti) == 1
    assert p.width(anti) == 2


@given(st.integers(1, 5), st.integers(1, 4))
def test_product_width_equals_min_side_count(m, n):
    lengths = tuple(sorted((m, n), reverse=True))
    poset = build_poset(Product(lengths))
    assert poset.width() == min(m, n)
    assert poset.max_chain_size() == m + n - 1
