# src/families/__init__.py
from src.families.find_tail_split_witness import find_tail_split_witness
from src.families.gen_ex1 import gen_ex1
from src.families.gen_ex2 import gen_ex2
from src.families.gen_family import gen_family
from src.families.gen_l1_basis import L1_BASIS_LOWER, L1_BASIS_UPPER, gen_l1_basis, l1_basis_vectors
from src.families.gen_random_graph_metric import floyd_warshall, gen_random_graph_metric
from src.families.gen_random_l1_cloud import gen_random_l1_cloud
from src.families.models.family_spec import FamilySpec
from src.families.models.tail_split_witness import TailSplitWitness
from src.families.truncation_assumption import truncation_assumption

__all__ = [
    "FamilySpec",
    "L1_BASIS_LOWER",
    "L1_BASIS_UPPER",
    "TailSplitWitness",
    "find_tail_split_witness",
    "floyd_warshall",
    "gen_ex1",
    "gen_ex2",
    "gen_family",
    "gen_l1_basis",
    "gen_random_graph_metric",
    "gen_random_l1_cloud",
    "l1_basis_vectors",
    "truncation_assumption",
]
