"""GBG-rank of partitions and t-cores, computed exactly in Z[w_s]."""
from .cyclotomic import CycInt, ExponentVector, cyclotomic_polynomial, root_power
from .gbg import gbg_direct, gbg_formula, gbg_mod2, nu, nu_bound, table1
from .littlewood import decompose, recompose, st_cores
from .partition_core import (
    NVector,
    Partition,
    conjugate,
    core_to_nvec,
    is_t_core,
    norm_from_nvec,
    nvec_to_core,
    parse_partition,
    r_vector,
    t_core_of,
)
from .qseries import QSeries, check_identity

__version__ = "0.1.0"

__all__ = [
    "CycInt", "ExponentVector", "cyclotomic_polynomial", "root_power",
    "gbg_direct", "gbg_formula", "gbg_mod2", "nu", "nu_bound", "table1",
    "decompose", "recompose", "st_cores",
    "NVector", "Partition", "conjugate", "core_to_nvec", "is_t_core", "norm_from_nvec",
    "nvec_to_core", "parse_partition", "r_vector", "t_core_of",
    "QSeries", "check_identity",
]
