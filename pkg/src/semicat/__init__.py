"""Finite semigroups: structure, congruences, decompositions and automorphism orbits."""

from .aut import (AutGroup, OrbitReport, automorphism_group, automorphism_group_order,
                  characteristic_ideal_tower, class_orbit_count, is_characteristic,
                  orbit_count, point_orbits, pointwise_stabilizer, setwise_stabilizer, tau)
from .congruence import (Congruence, congruence_generated_by, largest_congruence_within,
                         least_group_congruence, max_idempotent_separating, quotient,
                         rees_quotient)
from .constructions import (boolean_zs, brandt, brandt_automorphism, chain_of_semigroups,
                            chain_semilattice, cyclic_group, direct_product, example_c,
                            left_zero_band, null_semigroup, zero_direct_union)
from .core import FiniteSemigroup, adjoin_identity, adjoin_zero, validate
from .decomp import greatest_zero_direct_decomposition, is_primitive
from .green import green_relations, principal_factor
from .mcalister import FinitePoset, McAlisterTriple, p_semigroup, triple_apparatus
from .partition import Partition
from .semidirect import SemidirectData, kappa_partition, semidirect_product

__all__ = [
    "adjoin_identity", "adjoin_zero", "AutGroup", "automorphism_group",
    "automorphism_group_order", "boolean_zs", "brandt", "brandt_automorphism",
    "chain_of_semigroups", "chain_semilattice", "characteristic_ideal_tower",
    "class_orbit_count", "Congruence", "congruence_generated_by", "cyclic_group",
    "direct_product", "example_c", "FinitePoset", "FiniteSemigroup",
    "greatest_zero_direct_decomposition", "green_relations", "is_characteristic",
    "is_primitive", "kappa_partition", "largest_congruence_within", "least_group_congruence",
    "left_zero_band", "max_idempotent_separating", "McAlisterTriple", "null_semigroup",
    "orbit_count", "OrbitReport", "p_semigroup", "Partition", "point_orbits",
    "pointwise_stabilizer", "principal_factor", "quotient", "rees_quotient",
    "semidirect_product", "SemidirectData", "setwise_stabilizer", "tau", "triple_apparatus",
    "validate", "zero_direct_union",
]

__version__ = "0.1.0"
