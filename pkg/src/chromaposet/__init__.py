"""Exact chromatic symmetric function computations for incomparability
graphs of finite posets: monomial and Schur expansions, chain-partition
counting, and the nice property with certificates."""

from .counting import (
    ChainPartitionCounter,
    SearchStats,
    StablePartitionCounter,
    StaircaseContext,
    count_scp,
    count_semiordered_stable_partitions,
    forced_content_prefix,
    proof_case_closed_forms,
    scp_closed_form,
    staircase_delta,
    witness_case_contents,
)
from .errors import (
    BudgetExceededError,
    CertificateError,
    DomainError,
    DslParseError,
    FastPathInapplicableError,
    InternalInvariantError,
    InvalidParamsError,
    InvalidSpecError,
    PreconditionError,
    SizeMismatchError,
    TooLargeError,
    UnknownElementError,
)
from .nice import (
    ChainFamilyParams,
    ChainPartitionCertificate,
    ChainPartitionSearcher,
    NiceVerdict,
    chain_partition_exists,
    is_nice,
    ordinal_sum_chain_partition,
    parameterized_chain_family,
    staircase_type,
)
from .partitions import (
    Partition,
    as_partition,
    dominance_leq,
    format_partition,
    parse_partition,
    partitions_of,
    rearrangement_count,
    sorted_partition,
)
from .posets import (
    B3,
    Boolean,
    Chain,
    Graph,
    OrdinalSum,
    Poset,
    PosetSpec,
    Product,
    build_poset,
    incomparability_graph,
    parse_poset_spec,
    verify_distributive_lattice,
)
from .rimhooks import (
    RimHook,
    SpecialRimHookTabloid,
    TabloidFamily,
    enumerate_srht,
    inverse_kostka,
    kostka_number,
    render_tabloid,
)
from .schur import (
    MonomialExpansion,
    SchurExpansion,
    count_colorings_by_type,
    count_proper_colorings,
    monomial_expansion,
    pieri_shift_coefficient,
    rho_shape,
    schur_at_ones,
    schur_coefficient,
    schur_expansion,
    theorem41_coefficient,
    witness_coefficient_from_cases,
)

__version__ = "0.1.0"

__all__ = [
    "B3",
    "Boolean",
    "BudgetExceededError",
    "CertificateError",
    "Chain",
    "ChainFamilyParams",
    "ChainPartitionCertificate",
    "ChainPartitionCounter",
    "ChainPartitionSearcher",
    "DomainError",
    "DslParseError",
    "FastPathInapplicableError",
    "Graph",
    "InternalInvariantError",
    "InvalidParamsError",
    "InvalidSpecError",
    "MonomialExpansion",
    "NiceVerdict",
    "OrdinalSum",
    "Partition",
    "Poset",
    "PosetSpec",
    "PreconditionError",
    "Product",
    "RimHook",
    "SchurExpansion",
    "SearchStats",
    "SizeMismatchError",
    "SpecialRimHookTabloid",
    "StablePartitionCounter",
    "StaircaseContext",
    "TabloidFamily",
    "TooLargeError",
    "UnknownElementError",
    "as_partition",
    "build_poset",
    "chain_partition_exists",
    "count_colorings_by_type",
    "count_proper_colorings",
    "count_scp",
    "count_semiordered_stable_partitions",
    "dominance_leq",
    "enumerate_srht",
    "forced_content_prefix",
    "format_partition",
    "incomparability_graph",
    "inverse_kostka",
    "is_nice",
    "kostka_number",
    "monomial_expansion",
    "ordinal_sum_chain_partition",
    "parameterized_chain_family",
    "parse_partition",
    "parse_poset_spec",
    "partitions_of",
    "pieri_shift_coefficient",
    "proof_case_closed_forms",
    "rearrangement_count",
    "render_tabloid",
    "rho_shape",
    "schur_at_ones",
    "schur_coefficient",
    "schur_expansion",
    "scp_closed_form",
    "sorted_partition",
    "staircase_delta",
    "staircase_type",
    "theorem41_coefficient",
    "verify_distributive_lattice",
    "witness_case_contents",
    "witness_coefficient_from_cases",
]
