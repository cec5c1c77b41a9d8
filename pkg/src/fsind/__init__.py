"""Higher Frobenius-Schur indicators of the Drinfel'd doubles D(S_n)."""

from .chartab import CharacterTable, character_table, group_indicator, power_map
from .cyclo import Cyclotomic, E, root_of_unity
from .engine import (GammaSet, IndicatorMatrix, Label, compute_matrix, extend_to_all_m,
                     gamma_set, get_engine, indicator, indicators_for_class)
from .equivalence import IEquivalenceClass, reduce, reduce_matrix, zero_audit, zero_table
from .perm import (GroupContext, Permutation, Subgroup, centralizer, class_reps,
                   compose, conjugacy_classes_of, cycle_type, parity, power)

__all__ = [
    "CharacterTable", "Cyclotomic", "E", "GammaSet", "GroupContext", "IEquivalenceClass",
    "IndicatorMatrix", "Label", "Permutation", "Subgroup", "centralizer", "character_table",
    "class_reps", "compose", "compute_matrix", "conjugacy_classes_of", "cycle_type",
    "extend_to_all_m", "gamma_set", "get_engine", "group_indicator", "indicator",
    "indicators_for_class", "parity", "power", "power_map", "reduce", "reduce_matrix",
    "root_of_unity", "zero_audit", "zero_table",
]

__version__ = "0.1.0"
