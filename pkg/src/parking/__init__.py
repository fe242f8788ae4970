"""The four representations of noncrossing 2-partitions and their bijections."""

from src.parking.conversions import (
    AnyParking,
    ConversionError,
    act,
    convert,
    eta,
    is_prime,
    orbit_count,
    orbit_representative_check,
    prime_criteria,
    to_pair,
    word_prime_criterion,
)
from src.parking.generation import enumerate_parking, enumerate_parking_words
from src.parking.objects import (
    EtaSequence,
    KParkingTree,
    KParkingWord,
    NC2Pair,
    NC2Triple,
    ParkingTree,
    ParkingWord,
    TreeNode,
)
from src.parking.trees import (
    composition_to_right_comb,
    is_right_comb,
    nilpotent_function,
    right_comb_to_composition,
    tree_from_nilpotent,
    upper_cover_trees,
)

__all__ = [
    "AnyParking",
    "ConversionError",
    "EtaSequence",
    "KParkingTree",
    "KParkingWord",
    "NC2Pair",
    "NC2Triple",
    "ParkingTree",
    "ParkingWord",
    "TreeNode",
    "act",
    "composition_to_right_comb",
    "convert",
    "enumerate_parking",
    "enumerate_parking_words",
    "eta",
    "is_prime",
    "is_right_comb",
    "nilpotent_function",
    "orbit_count",
    "orbit_representative_check",
    "prime_criteria",
    "right_comb_to_composition",
    "to_pair",
    "tree_from_nilpotent",
    "upper_cover_trees",
    "word_prime_criterion",
]
