"""Unit groups of commutative rings: which cardinals and odd abelian
groups occur, with witness constructions and brute-force verification.

The decision layer lives in realize; abgroup handles finite abelian
groups and 64-bit integer factorization; gf2poly and gf2ext provide the
GF(2)[x] and GF(2**n) machinery the witnesses are built from; oracle
re-checks every claim by explicit enumeration.
"""

from .abgroup import (
    AbelianGroup,
    factor_integer,
    is_prime,
    iso_test,
    units_of_field_product,
)
from .errors import DomainError, ResourceError, UsageError
from .realize import (
    Cardinal,
    EvenUnitRing,
    OddCertificate,
    ProductOfFields,
    RationalFunctionField,
    RealizabilityAnswer,
    group_algebra_degrees,
    group_algebra_subset_search,
    mersenne_power_check,
    odd_product_decomposition,
    realize_cardinal,
    realize_group_odd,
    realize_p_group,
)
from .oracle import (
    FiniteAlgebra,
    build_group_algebra,
    build_product_of_fields,
    enumerate_units,
    even_ring_unit_survey,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "Cardinal",
    "DomainError",
    "EvenUnitRing",
    "FiniteAlgebra",
    "OddCertificate",
    "ProductOfFields",
    "RationalFunctionField",
    "RealizabilityAnswer",
    "ResourceError",
    "UsageError",
    "build_group_algebra",
    "build_product_of_fields",
    "enumerate_units",
    "even_ring_unit_survey",
    "factor_integer",
    "group_algebra_degrees",
    "group_algebra_subset_search",
    "is_prime",
    "iso_test",
    "mersenne_power_check",
    "odd_product_decomposition",
    "realize_cardinal",
    "realize_group_odd",
    "realize_p_group",
    "units_of_field_product",
    "verify_witness",
]
