# src/families/gen_family.py
from src.core.models import PointedMetricSpace
from src.families.gen_ex1 import gen_ex1
from src.families.gen_ex2 import gen_ex2
from src.families.gen_l1_basis import gen_l1_basis
from src.families.gen_random_graph_metric import gen_random_graph_metric
from src.families.gen_random_l1_cloud import gen_random_l1_cloud
from src.families.models.family_spec import FamilySpec
from src.metric.build_from_l1_vectors import build_from_l1_vectors


def gen_family(spec: FamilySpec) -> PointedMetricSpace:
    match spec.family:
        case "ex1":
            return gen_ex1(spec.size)
        case "ex2":
            return gen_ex2(spec.size)
        case "l1_basis":
            return gen_l1_basis(spec.size)
        case "random_graph_metric":
            return gen_random_graph_metric(spec.size, spec.seed)
        case "random_l1_cloud":
            return build_from_l1_vectors(gen_random_l1_cloud(spec.size, spec.seed), "p0")
