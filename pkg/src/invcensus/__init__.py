"""Exact counting of local unitary invariants of bipartite density matrices.

The census route counts invariants through symmetric-group characters and
Kronecker coefficients; the Molien route recounts them by torus constant
terms; the factorizer searches for integrity-basis presentations of the
resulting series.  All arithmetic is exact.
"""

from .census import DEFAULT_DEGREE_LIMIT, CensusProblem, generating_series, invariant_count
from .characters import CharTable, char_table, character
from .errors import (
    ConsistencyError,
    InvcensusError,
    PartitionParseError,
    ResourceLimitError,
    SeriesFormatError,
    WeightMismatchError,
)
from .factorizer import (
    FitReport,
    RationalForm,
    compare,
    expand,
    fit_denominator,
    numerator_for_denominator,
    search_candidates,
)
from .kronecker import (
    SchurExpansion,
    inner_product_expansion,
    kronecker_coefficient,
    pair_weight,
)
from .laurent import LaurentPoly
from .molien import (
    complete_homogeneous,
    haar_constant_term,
    molien_coefficient,
    molien_series,
    power_sum,
)
from .partitions import (
    Partition,
    conjugate,
    dimension,
    format_partition,
    parse_partition,
    partitions_of,
    z_order,
)
from .series import Series, read_series_file, series_from_json, series_to_json, write_series_file

__version__ = "0.1.0"

__all__ = [
    "CensusProblem",
    "CharTable",
    "ConsistencyError",
    "DEFAULT_DEGREE_LIMIT",
    "FitReport",
    "InvcensusError",
    "LaurentPoly",
    "Partition",
    "PartitionParseError",
    "RationalForm",
    "ResourceLimitError",
    "SchurExpansion",
    "Series",
    "SeriesFormatError",
    "WeightMismatchError",
    "char_table",
    "character",
    "compare",
    "complete_homogeneous",
    "conjugate",
    "dimension",
    "expand",
    "fit_denominator",
    "format_partition",
    "generating_series",
    "haar_constant_term",
    "inner_product_expansion",
    "invariant_count",
    "kronecker_coefficient",
    "molien_coefficient",
    "molien_series",
    "numerator_for_denominator",
    "pair_weight",
    "parse_partition",
    "partitions_of",
    "power_sum",
    "read_series_file",
    "search_candidates",
    "series_from_json",
    "series_to_json",
    "write_series_file",
    "z_order",
    "__version__",
]
