# tests/test_integration.py
"""
Integration tests for SLTPLab

族の空間で判定・スキャン・証人探し・構成を通しで実行し、既知の結論を厳密な値で再現します。
"""

import itertools
import random
from fractions import Fraction

import pytest

from src.cli import Invocation, run
from src.construction import ConstructionStatus, build_symmetric_witnesses
from src.documents import SpaceDocument
from src.families import FamilySpec, gen_random_l1_cloud
from src.freespace import SliceMembership, evaluate_pairing, make_slice, pair_molecule
from src.metric import build_from_l1_vectors
from src.trapezoid import WitnessQuery, check_ineq_ltp, check_ineq_sym, counterexample_scan, find_witness
from tests.conftest import pts
from tests.oracles import brute_lip

EPS = Fraction(1, 10)


def subsets(points, max_size: int | None = None):
    """空でない部分集合をすべて列挙する"""
    top = len(points) if max_size is None else max_size
    for size in range(1, top + 1):
        yield from itertools.combinations(points, size)


class TestFirstExample:
    """台形性はあるが対称版の台形性がない例"""

    @pytest.mark.parametrize("fresh", [4, 5])
    def test_ltp_holds_with_fresh_index(self, ex1_5, fresh):
        """添字 1..3 だけを使う N なら、新しい添字のペアで台形不等式が成り立つ"""
        pool = pts(ex1_5, "a1", "a2", "b1", "b2", "u1", "v1", "u2", "v2", "u3", "v3")
        a1, a2 = pts(ex1_5, "a1", "a2")
        u, v = pts(ex1_5, f"u{fresh}", f"v{fresh}")

        for subset in subsets(pool):
            check = check_ineq_ltp(ex1_5, subset, 0, u, v)
            assert check.holds
            assert check.slack >= 0
            if a1 in subset and a2 in subset:
                assert check.slack == 0

    def test_sltp_scan_fails_everywhere(self, ex1_5):
        report = counterexample_scan(ex1_5, pts(ex1_5, "a1", "a2", "b1", "b2"), 0, "sltp")

        assert report.verdict.kind == "all_pairs_fail"
        assert report.verdict.pair == tuple(pts(ex1_5, "u1", "v1"))
        assert report.verdict.min_required_epsilon == Fraction(1, 3)
        assert len(report.results) == 14 * 13 // 2
        for check in report.results.values():
            assert not check.holds
            assert check.slack <= -1
            assert check.slack.denominator == 1
            assert check.lhs > check.rhs

    def test_every_pair_breaks_the_symmetric_inequality(self, ex1_5):
        """どのペアにも対称版を破る 4 つ組があり、(左辺, 右辺) は 8>4, ≥6>4, ≥4>2 のいずれか"""
        report = counterexample_scan(ex1_5, pts(ex1_5, "a1", "a2", "b1", "b2"), 0, "sltp")

        assert report.sym_checks.keys() == report.results.keys()
        for check in report.sym_checks.values():
            assert check.inequality == "sym"
            assert not check.holds
            assert check.slack <= -1
            assert check.slack.denominator == 1
            assert len(check.worst_tuple) == 4
            lhs, rhs = check.lhs, check.rhs
            assert (lhs, rhs) == (8, 4) or (lhs >= 6 and rhs == 4) or (lhs >= 4 and rhs == 2)


class TestSecondExample:
    """対称版の不等式は成り立つが台形性がない例"""

    def test_sym_holds_with_fresh_index(self, ex2_3):
        pool = pts(ex2_3, "a", "b", "u1", "v1", "u2", "v2")
        u, v = pts(ex2_3, "u3", "v3")

        for subset in subsets(pool):
            check = check_ineq_sym(ex2_3, subset, 0, u, v)
            assert check.holds, [p.name for p in subset]

    def test_ltp_scan_fails_everywhere(self, ex2_3):
        report = counterexample_scan(ex2_3, pts(ex2_3, "a", "b"), 0, "ltp")

        assert report.verdict.kind == "all_pairs_fail"
        assert report.sym_checks == {}
        for check in report.results.values():
            assert check.slack <= -1
            assert check.lhs > check.rhs


class TestL1Witnesses:
    """ℓ₁ の空間では小さな N に対して証人ペアが見つかる"""

    def test_l1_basis_every_small_subset(self, l1_basis_8):
        for subset in subsets(l1_basis_8.points, max_size=4):
            result = find_witness(l1_basis_8, WitnessQuery(subset=tuple(subset), epsilon=EPS), "sltp")
            assert result.found, [p.name for p in subset]
            assert result.check.holds

    @pytest.mark.parametrize("seed", range(50))
    def test_random_clouds(self, seed):
        rng = random.Random(seed)
        space = build_from_l1_vectors(gen_random_l1_cloud(rng.randint(12, 20), seed, EPS), "p0")

        for _ in range(20):
            subset = tuple(rng.sample(space.points, rng.randint(1, 4)))
            result = find_witness(space, WitnessQuery(subset=subset, epsilon=EPS), "sltp")
            assert result.found, [p.name for p in subset]


class TestSymmetricConstruction:
    """スライスに対する対称な証人関数の構成"""

    def test_l1_basis_pair_slices(self, l1_basis_8):
        zero, e1, e2 = pts(l1_basis_8, "0", "e1", "e2")
        slices = [
            make_slice(l1_basis_8, pair_molecule(l1_basis_8, zero, e1), Fraction(1, 2)),
            make_slice(l1_basis_8, pair_molecule(l1_basis_8, e1, e2), Fraction(1, 2)),
        ]
        report = build_symmetric_witnesses(l1_basis_8, slices, EPS)
        g = report.g

        assert report.status == ConstructionStatus.PASSED
        assert brute_lip(l1_basis_8, g.values) >= Fraction(81, 100)
        for item in report.slices:
            assert brute_lip(l1_basis_8, item.f.values) <= 1
            assert brute_lip(l1_basis_8, (item.f + g).values) <= 1
            assert brute_lip(l1_basis_8, (item.f - g).values) <= 1
            assert evaluate_pairing(item.f, item.slice.functional) / item.slice.norm_of_functional > Fraction(1, 2)
            assert item.membership == SliceMembership.INSIDE


class TestCommandPipeline:
    """example の出力をそのまま別のコマンドに渡す"""

    def test_example_then_scan(self, tmp_path):
        generated = run(Invocation(subcommand="example", family="ex2", k=3))
        path = tmp_path / "ex2.json"
        path.write_text(generated.document.model_dump_json(), encoding="utf-8")

        result = run(Invocation(subcommand="scan", space=str(path), subset="a,b", eps="0", mode="ltp"))
        assert result.exit_code == 1
        assert result.document.verdict.kind == "all_pairs_fail"
        assert "十分" in result.document.assumptions[0]

    def test_example_round_trip(self, tmp_path):
        generated = run(Invocation(subcommand="example", family="l1_basis", m=4))
        space = SpaceDocument.model_validate_json(generated.document.model_dump_json()).to_space()
        assert space.names == ["0", "e1", "e2", "e3", "e4"]
        assert generated.document.family == FamilySpec(family="l1_basis", size=4)
