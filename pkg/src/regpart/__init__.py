"""Exact combinatorics of ell-regular partitions.

Partitions are immutable part -> multiplicity multisets.  The package
provides constrained exhaustive enumeration, the parity-flipping involutions
and merge/split bijections that act on regular partitions, exact truncated
q-series for every counting sequence, and identity verifiers that cross-check
enumeration, series coefficients, and closed forms against each other.
"""

from .partition import (
    ALL,
    EMPTY,
    All,
    Constraint,
    DistinctOddNotDivisible,
    DistinctWithAllowedResidues,
    DomainError,
    EllRegular,
    MaxMultiplicity,
    ParseError,
    Partition,
    SetA,
    SetC,
    SetD,
    count_partitions,
    count_partitions_by_length_parity,
    enumerate_partitions,
    format_partition,
    parse_partition,
    satisfies,
)
from .maps import (
    Action,
    CaseLabel,
    MapTrace,
    TraceStep,
    glaisher_phi,
    glaisher_phi_inv,
    psi,
    psi_even,
    psi_odd,
    psi_stats,
    sigma,
    sigma_inv,
    stat_e_even,
    stat_e_odd,
    stat_t_even,
    stat_t_odd,
)
from .series import (
    FactorSpec,
    TruncatedSeries,
    gf,
    gf_b,
    gf_c,
    gf_d,
    gf_delta,
    gf_signed_b,
    product,
    series_mul,
    series_reciprocal,
)
from .counting import (
    IdentityReport,
    IdentityRow,
    PairTable,
    count,
    count_range,
    pair_table,
    pentagonal_delta1,
    triangular_delta3,
    verify_identity,
    verify_parity,
)

__version__ = "0.1.0"

__all__ = [
    "ALL",
    "EMPTY",
    "Action",
    "All",
    "CaseLabel",
    "Constraint",
    "DistinctOddNotDivisible",
    "DistinctWithAllowedResidues",
    "DomainError",
    "EllRegular",
    "FactorSpec",
    "IdentityReport",
    "IdentityRow",
    "MapTrace",
    "MaxMultiplicity",
    "PairTable",
    "ParseError",
    "Partition",
    "SetA",
    "SetC",
    "SetD",
    "TraceStep",
    "TruncatedSeries",
    "count",
    "count_partitions",
    "count_partitions_by_length_parity",
    "count_range",
    "enumerate_partitions",
    "format_partition",
    "gf",
    "gf_b",
    "gf_c",
    "gf_d",
    "gf_delta",
    "gf_signed_b",
    "glaisher_phi",
    "glaisher_phi_inv",
    "pair_table",
    "parse_partition",
    "pentagonal_delta1",
    "product",
    "psi",
    "psi_even",
    "psi_odd",
    "psi_stats",
    "satisfies",
    "series_mul",
    "series_reciprocal",
    "sigma",
    "sigma_inv",
    "stat_e_even",
    "stat_e_odd",
    "stat_t_even",
    "stat_t_odd",
    "triangular_delta3",
    "verify_identity",
    "verify_parity",
]
