"""Exact and numerical toolkit for coset-state measurements on symmetric groups."""

__version__ = "0.1.0"

from .partitions import Partition, enumerate_partitions, partition_count
from .permutations import Permutation, compose, matching_class
from .characters import character, normalized_character, tensor_square_multiplicity

__all__ = [
    "Partition",
    "Permutation",
    "character",
    "compose",
    "enumerate_partitions",
    "matching_class",
    "normalized_character",
    "partition_count",
    "tensor_square_multiplicity",
    "__version__",
]
