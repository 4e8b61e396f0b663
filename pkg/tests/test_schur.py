"""Schur and monomial expansions, checked against routes that share no code
with the library: coloring enumeration for monomial coefficients, the hook
length and hook content formulas for chain expansions and principal
specializations, and the closed witness formula against its six-case
assembly."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromaposet import (
    B3,
    Boolean,
    Chain,
    DomainError,
    FastPathInapplicableError,
    Graph,
    OrdinalSum,
    PreconditionError,
    Product,
    SizeMismatchError,
    TooLargeError,
    build_poset,
    count_colorings_by_type,
    count_proper_colorings,
    incomparability_graph,
    kostka_number,
    monomial_expansion,
    partitions_of,
    pieri_shift_coefficient,
    rho_shape,
    schur_at_ones,
    schur_coefficient,
    schur_expansion,
    theorem41_coefficient,
    witness_coefficient_from_cases,
)
from chromaposet.schur import closed_fast_path


def hook_products(lam):
    """Product of hook lengths, plus the multiset of cell contents j - i."""
    hooks = 1
    contents = []
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for below in lam[i + 1 :] if below > j)
            hooks *= arm + leg + 1
            contents.append(j - i)
    return hooks, contents


def standard_tableaux_count(lam):
    hooks, _ = hook_products(lam)
    q, r = divmod(math.factorial(sum(lam)), hooks)
    assert r == 0
    return q


def schur_ones_by_hook_content(lam, colors):
    hooks, contents = hook_products(lam)
    val = Fraction(1)
    for c in contents:
        val *= Fraction(colors + c)
    val /= hooks
    assert val.denominator == 1
    return int(val)


def path_graph(n):
    adj = tuple(
        (1 << (i - 1) if i else 0) | (1 << (i + 1) if i + 1 < n else 0)
        for i in range(n)
    )
    return Graph(tuple(f"v{i}" for i in range(n)), adj)


SMALL_SPECS = [
    Chain(4),
    Product((2, 2)),
    Product((3, 2)),
    B3(1),
    OrdinalSum(1, Product((2, 2)), 1),
]


# ---------------------------------------------------------------------------
# monomial side


def test_edgeless_monomial_expansion():
    # a chain's incomparability graph has no edges, so every set partition
    # of the vertices is stable
    mono = monomial_expansion(incomparability_graph(build_poset(Chain(3))))
    assert mono.degree == 3
    assert mono.coeffs == {(3,): 1, (2, 1): 3, (1, 1, 1): 6}


def test_monomial_coefficients_count_colorings_by_type():
    """[m_mu] X_G is the number of proper colorings using color i exactly
    mu_i times; the coloring enumerator computes that without touching the
    stable-partition counter."""
    for spec in SMALL_SPECS:
        g = incomparability_graph(build_poset(spec))
        mono = monomial_expansion(g)
        for mu in partitions_of(len(g)):
            assert mono.coefficient(mu) == count_colorings_by_type(g, mu), (spec, mu)


@pytest.mark.parametrize("colors", [1, 2, 3, 4])
def test_monomial_specialization_is_chromatic_polynomial(colors):
    for spec in SMALL_SPECS:
        g = incomparability_graph(build_poset(spec))
        assert monomial_expansion(g).specialize(colors) == count_proper_colorings(
            g, colors
        )


def test_coloring_counters_on_a_path():
    g = path_graph(3)
    for colors in range(6):
        assert count_proper_colorings(g, colors) == colors * (colors - 1) ** 2
    assert count_colorings_by_type(g, (3,)) == 0
    assert count_colorings_by_type(g, (2, 1)) == 1
    assert count_colorings_by_type(g, (1, 1, 1)) == 6
    with pytest.raises(SizeMismatchError):
        count_colorings_by_type(g, (2, 2))


# ---------------------------------------------------------------------------
# Schur expansions


def test_chain_expansion_frozen():
    exp = schur_expansion(build_poset(Chain(3)))
    assert exp.coeffs == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    assert exp.is_nonnegative()


@pytest.mark.parametrize("n", range(1, 9))
def test_chain_expansion_counts_standard_tableaux(n):
    """A chain's function is h_1^n, whose Schur coefficients are the numbers
    of standard tableaux — independently available from hook lengths."""
    exp = schur_expansion(build_poset(Chain(n)), max_elements=n)
    assert exp.coeffs == {
        lam: standard_tableaux_count(lam) for lam in partitions_of(n)
    }


def test_product_2x2_expansion_frozen():
    exp = schur_expansion(build_poset(Product((2, 2))))
    assert exp.coeffs == {(3, 1): 2, (2, 2): 2, (2, 1, 1): 4, (1, 1, 1, 1): 2}


def test_schur_expansion_matches_monomials_through_kostka():
    """Converting the Schur expansion back to the monomial basis must
    reproduce the directly-computed monomial coefficients."""
    for spec in SMALL_SPECS:
        poset = build_poset(spec)
        mono = monomial_expansion(incomparability_graph(poset))
        schur = schur_expansion(poset)
        n = len(poset)
        for mu in partitions_of(n):
            via_kostka = sum(
                c * kostka_number(lam, mu) for lam, c in schur.coeffs.items()
            )
            assert via_kostka == mono.coefficient(mu), (spec, mu)


@pytest.mark.parametrize("colors", [1, 2, 3])
def test_schur_specialization_is_chromatic_polynomial(colors):
    for spec in SMALL_SPECS:
        poset = build_poset(spec)
        g = incomparability_graph(poset)
        assert schur_expansion(poset).specialize(colors) == count_proper_colorings(
            g, colors
        )


def test_schur_at_ones_matches_hook_content_formula():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for colors in range(5):
                assert schur_at_ones(lam, colors) == schur_ones_by_hook_content(
                    lam, colors
                )


def test_schur_expansion_size_guard():
    with pytest.raises(TooLargeError):
        schur_expansion(build_poset(Chain(13)))
    # explicit limit overrides the default
    schur_expansion(build_poset(Chain(13)), max_elements=13)


@given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=4))
def test_chain_specialization_is_power(n, colors):
    exp = schur_expansion(build_poset(Chain(n)), max_elements=13)
    assert exp.specialize(colors) == colors**n


# ---------------------------------------------------------------------------
# single coefficients and the closed fast path


def test_witness_coefficient_every_method():
    poset = build_poset(Product((8, 3)))
    shape = rho_shape(3, 5)
    for method in ("auto", "tabloid_brute", "tabloid_closed"):
        assert schur_coefficient(poset, shape, method=method) == -18


def test_witness_coefficient_10x4():
    poset = build_poset(Product((10, 4)))
    assert schur_coefficient(poset, rho_shape(4, 6)) == -288


def test_fast_path_detection():
    ctx, pre = closed_fast_path(build_poset(Boolean(2)), (3, 1))
    assert (ctx.m, ctx.n) == (2, 2)
    assert pre == (3,)
    # a chain is a product with one side of length 1: no forced prefix at all
    ctx, pre = closed_fast_path(build_poset(Chain(4)), (2, 1, 1))
    assert (ctx.m, ctx.n) == (4, 1)
    assert pre == ()
    assert closed_fast_path(build_poset(B3(1)), (7, 1)) is None


def test_fast_path_agrees_on_boolean_square():
    poset = build_poset(Boolean(2))
    assert schur_coefficient(poset, (3, 1), method="tabloid_closed") == 2
    assert schur_coefficient(poset, (3, 1), method="tabloid_brute") == 2


def test_schur_coefficient_errors():
    poset = build_poset(Product((8, 3)))
    with pytest.raises(SizeMismatchError):
        schur_coefficient(poset, (10, 8, 2, 2))
    with pytest.raises(DomainError):
        schur_coefficient(poset, rho_shape(3, 5), method="closed")
    with pytest.raises(FastPathInapplicableError):
        # no staircase prefix under this shape
        schur_coefficient(poset, (9, 9, 2, 2, 2), method="tabloid_closed")
    with pytest.raises(FastPathInapplicableError):
        b3 = build_poset(B3(1))
        schur_coefficient(b3, (len(b3) - 1, 1), method="tabloid_closed")


# ---------------------------------------------------------------------------
# the negativity witness in closed form


def test_rho_shape_values():
    assert rho_shape(3, 5) == (10, 8, 2, 2, 2)
    assert rho_shape(2, 5) == (8, 2, 2, 2)
    for n, k in [(2, 5), (3, 5), (4, 7), (6, 9)]:
        shape = rho_shape(n, k)
        assert sum(shape) == n * (n + k)
        assert len(shape) == n + 2
        assert all(a >= b for a, b in zip(shape, shape[1:]))


def test_theorem41_values():
    assert theorem41_coefficient(3, 5) == -18
    assert theorem41_coefficient(4, 6) == -288
    assert theorem41_coefficient(5, 7) == -3840


def test_theorem41_negative_in_stated_range():
    for k in range(5, 13):
        threshold = -(-(k + 2) // 2)
        for n in range(threshold, threshold + 5):
            assert theorem41_coefficient(n, k) < 0, (n, k)


def test_theorem41_matches_case_assembly():
    for k in range(5, 10):
        for n in range(2, 7):
            assert witness_coefficient_from_cases(n, k) == theorem41_coefficient(
                n, k
            ), (n, k)


def test_theorem41_preconditions():
    with pytest.raises(PreconditionError):
        theorem41_coefficient(3, 4)
    with pytest.raises(PreconditionError):
        theorem41_coefficient(1, 5)


# ---------------------------------------------------------------------------
# shifted shapes on ordinal sums


def test_pieri_shift_examples():
    assert pieri_shift_coefficient(0, 0, 8, 3, (10, 8, 2, 2, 2)) == -18
    assert pieri_shift_coefficient(1, 0, 8, 3, (11, 8, 2, 2, 2)) == -18
    assert pieri_shift_coefficient(1, 1, 2, 2, (5, 1)) == 2


def test_pieri_shift_matches_direct_expansion():
    """On a small ordinal sum the shifted coefficients can be read off the
    full expansion directly."""
    poset = build_poset(OrdinalSum(1, Product((2, 2)), 1))
    exp = schur_expansion(poset)
    longest = poset.max_chain_size()
    for tilde in partitions_of(len(poset)):
        if tilde[0] != longest:
            continue
        rho = (3,) + tilde[1:]
        if any(rho[i] < rho[i + 1] for i in range(len(rho) - 1)):
            continue
        assert pieri_shift_coefficient(1, 1, 2, 2, tilde) == exp.coefficient(
            tilde
        ), tilde


def test_pieri_shift_preconditions():
    with pytest.raises(PreconditionError):
        pieri_shift_coefficient(-1, 0, 8, 3, (10, 8, 2, 2, 2))
    with pytest.raises(PreconditionError):
        pieri_shift_coefficient(0, 0, 8, 0, (10, 8, 2, 2, 2))
    with pytest.raises(SizeMismatchError):
        pieri_shift_coefficient(1, 0, 8, 3, (10, 8, 2, 2, 2))
    with pytest.raises(PreconditionError):
        # first part must be the longest chain of the sum
        pieri_shift_coefficient(1, 0, 8, 3, (10, 8, 3, 2, 2))
    with pytest.raises(PreconditionError):
        # stripping the shift leaves a non-partition
        pieri_shift_coefficient(1, 0, 4, 4, (8, 8, 1))
