# tests/test_properties.py
"""
Property-based tests (hypothesis) for the trapezoid checks, norms, extension and construction

乱数シードから空間・部分集合・ペアを作り、実装と定義どおりの総当たりを突き合わせます。
"""

import random
from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

from src.construction import ConstructionStatus, build_symmetric_witnesses
from src.core.models import LipschitzFunction, Molecule, PartialFunction
from src.families import find_tail_split_witness, gen_random_graph_metric, gen_random_l1_cloud
from src.freespace import evaluate_pairing, lip_norm, make_slice, molecule_norm, pair_molecule, sup_extend
from src.metric import build_from_l1_vectors, scale_space
from src.trapezoid import check_ineq_ltp, check_ineq_sym, check_sltp, required_epsilon
from tests.oracles import (
    brute_lip,
    brute_ltp_slack,
    brute_required_epsilon,
    brute_sym_slack,
    dual_lp_norm,
    ltp_slack,
    sym_slack,
)

EPS = Fraction(1, 10)

seeds = st.integers(min_value=0, max_value=10 ** 6)
epsilons = st.integers(min_value=0, max_value=9).map(lambda i: Fraction(i, 10))


def random_instance(seed: int, max_points: int = 6, max_subset: int = 4):
    """ランダムなグラフ距離空間・部分集合 N・相異なるペア (u, v)"""
    rng = random.Random(seed)
    space = gen_random_graph_metric(rng.randint(3, max_points), rng.randrange(10 ** 6))
    subset = rng.sample(space.points, rng.randint(1, min(max_subset, len(space.points))))
    u, v = rng.sample(space.points, 2)
    return rng, space, subset, u, v


def random_function(rng: random.Random, space, points) -> dict:
    """基点で 0、それ以外は小さな有理数の値"""
    return {p: Fraction(0) if p == space.base else Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for p in points}


def random_molecule(rng: random.Random, space) -> Molecule:
    others = [p for p in space.points if p != space.base]
    chosen = rng.sample(others, min(3, len(others)))
    coefficients = {}
    for p in chosen:
        numerator = rng.choice([i for i in range(-5, 6) if i != 0])
        coefficients[p] = Fraction(numerator, rng.randint(1, 4))
    return Molecule.of(coefficients)


class TestTrapezoidProperties:
    """台形不等式の性質"""

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, eps=epsilons)
    def test_swap_symmetry(self, seed, eps):
        """(u, v) と (v, u) で slack が一致する"""
        _, space, subset, u, v = random_instance(seed)
        assert check_ineq_ltp(space, subset, eps, u, v).slack == check_ineq_ltp(space, subset, eps, v, u).slack
        assert check_ineq_sym(space, subset, eps, u, v).slack == check_ineq_sym(space, subset, eps, v, u).slack

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, eps=epsilons, step=st.integers(min_value=0, max_value=9))
    def test_epsilon_monotone(self, seed, eps, step):
        """ε で成り立てば、より大きい ε でも成り立つ"""
        _, space, subset, u, v = random_instance(seed)
        larger = min(eps + Fraction(step, 10), Fraction(9, 10))
        if check_sltp(space, subset, eps, u, v).holds:
            assert check_sltp(space, subset, larger, u, v).holds
        if check_ineq_ltp(space, subset, eps, u, v).holds:
            assert check_ineq_ltp(space, subset, larger, u, v).holds

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, eps=epsilons)
    def test_subset_monotone(self, seed, eps):
        """N で成り立てば、N の部分集合でも成り立つ"""
        rng, space, subset, u, v = random_instance(seed)
        smaller = rng.sample(subset, rng.randint(1, len(subset)))
        if check_sltp(space, subset, eps, u, v).holds:
            assert check_sltp(space, smaller, eps, u, v).holds

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, eps=epsilons, numerator=st.integers(1, 7), denominator=st.integers(1, 5))
    def test_scale_invariance(self, seed, eps, numerator, denominator):
        """距離を t 倍しても判定は変わらず、slack は t 倍になる"""
        _, space, subset, u, v = random_instance(seed)
        t = Fraction(numerator, denominator)
        scaled = scale_space(space, t)

        original = check_sltp(space, subset, eps, u, v)
        result = check_sltp(scaled, subset, eps, u, v)
        assert result.holds == original.holds
        assert result.slack == t * original.slack

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, eps=epsilons)
    def test_holds_iff_epsilon_reaches_required(self, seed, eps):
        _, space, subset, u, v = random_instance(seed)
        required = required_epsilon(space, subset, u, v)
        assert check_ineq_ltp(space, subset, eps, u, v).holds == (eps >= required.eps_ltp)
        assert check_sltp(space, subset, eps, u, v).holds == (eps >= required.eps_sltp)

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_required_epsilon_matches_brute_force(self, seed):
        _, space, subset, u, v = random_instance(seed, max_points=5)
        required = required_epsilon(space, subset, u, v)
        assert (required.eps_ltp, required.eps_sltp) == brute_required_epsilon(space, subset, u, v)

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds, eps=epsilons)
    def test_slack_matches_brute_force(self, seed, eps):
        _, space, subset, u, v = random_instance(seed, max_points=5)
        assert check_ineq_ltp(space, subset, eps, u, v).slack == brute_ltp_slack(space, subset, eps, u, v)
        assert check_ineq_sym(space, subset, eps, u, v).slack == brute_sym_slack(space, subset, eps, u, v)

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, eps=epsilons)
    def test_degenerate_quadruple(self, seed, eps):
        """(x, x, z, z) の四つ組の slack は台形不等式の slack の 2 倍と 2(1-ε)d(x, z) の和"""
        rng, space, _, u, v = random_instance(seed)
        x, z = rng.choice(space.points), rng.choice(space.points)
        expected = 2 * ltp_slack(space, u, v, eps, x, z) + 2 * (1 - eps) * space.d(x, z)
        assert sym_slack(space, u, v, eps, (x, x, z, z)) == expected

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, eps=epsilons)
    def test_sltp_implies_ltp(self, seed, eps):
        _, space, subset, u, v = random_instance(seed)
        if check_sltp(space, subset, eps, u, v).holds:
            assert check_ineq_ltp(space, subset, eps, u, v).holds


class TestFreeSpaceProperties:
    """Lipschitz ノルムと自由空間ノルムの性質"""

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds)
    def test_sup_extension_keeps_norm(self, seed):
        """‖f‖_L = 1 なら延長 F も ‖F‖ = 1 で、L 上では f と一致する"""
        rng, space, subset, _, _ = random_instance(seed)
        domain = sorted(set(subset) | {space.base})
        assume(len(domain) >= 2)
        values = random_function(rng, space, domain)
        constant = brute_lip(space, values)
        assume(constant > 0)
        f = PartialFunction({p: value / constant for p, value in values.items()})
        weight = PartialFunction({p: Fraction(0) for p in domain})

        extended = sup_extend(space, f, weight)
        assert lip_norm(space, extended).value == 1
        for p in domain:
            assert extended(p) == f(p)

    @settings(max_examples=1000, deadline=None)
    @given(seed=seeds)
    def test_duality_bound(self, seed):
        """‖f‖ ≤ 1 なら |⟨f, μ⟩| ≤ ‖μ‖"""
        rng, space, _, _, _ = random_instance(seed)
        values = random_function(rng, space, space.points)
        constant = brute_lip(space, values)
        if constant > 1:
            values = {p: value / constant for p, value in values.items()}
        f = LipschitzFunction.on(space, values)
        mu = random_molecule(rng, space)

        assert abs(evaluate_pairing(f, mu)) <= molecule_norm(space, mu).norm

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_molecule_norm_matches_dual_lp(self, seed):
        rng = random.Random(seed)
        space = gen_random_graph_metric(rng.randint(2, 5), rng.randrange(10 ** 6))
        mu = random_molecule(rng, space)

        result = molecule_norm(space, mu)
        assert result.norm == dual_lp_norm(space, mu)
        assert lip_norm(space, result.optimizer).value <= 1
        assert evaluate_pairing(result.optimizer, mu) == result.norm

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds)
    def test_pair_molecule_has_unit_norm(self, seed):
        rng, space, _, x, y = random_instance(seed)
        assert molecule_norm(space, pair_molecule(space, x, y)).norm == 1

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds, numerator=st.integers(-6, 6).filter(lambda i: i != 0), denominator=st.integers(1, 4))
    def test_homogeneity(self, seed, numerator, denominator):
        rng, space, _, _, _ = random_instance(seed)
        mu = random_molecule(rng, space)
        t = Fraction(numerator, denominator)
        assert molecule_norm(space, mu.scaled(t)).norm == abs(t) * molecule_norm(space, mu).norm


class TestConstructionProperties:
    """ランダムな ℓ₁ 点群での構成"""

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds)
    def test_random_cloud_construction(self, seed):
        """構成は検証失敗にならず、成功したものは総当たりでも条件を満たす"""
        rng = random.Random(seed)
        vectors = gen_random_l1_cloud(rng.randint(12, 20), rng.randrange(10 ** 6), EPS)
        space = build_from_l1_vectors(vectors, "p0")
        slices = [
            make_slice(space, pair_molecule(space, *rng.sample(space.points, 2)), Fraction(1, 2))
            for _ in range(2)
        ]

        report = build_symmetric_witnesses(space, slices, EPS)
        assert report.status != ConstructionStatus.FAILED

        subset_labels = [p.name for p in report.subset]
        if find_tail_split_witness(vectors, subset_labels, EPS) is not None:
            assert report.status == ConstructionStatus.PASSED
        if report.status == ConstructionStatus.PASSED:
            g = report.g
            assert (1 - EPS) ** 2 <= brute_lip(space, g.values) <= 1
            for item in report.slices:
                assert brute_lip(space, (item.f + g).values) <= 1
                assert brute_lip(space, (item.f - g).values) <= 1
                assert evaluate_pairing(item.f, item.slice.functional) / item.slice.norm_of_functional > Fraction(1, 2)

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_tail_split_certificate_is_a_witness(self, seed):
        """尾部分割で見つかったペアは実際に両方の不等式を満たす"""
        rng = random.Random(seed)
        vectors = gen_random_l1_cloud(rng.randint(12, 20), rng.randrange(10 ** 6), EPS)
        space = build_from_l1_vectors(vectors, "p0")
        labels = ["p0"] + rng.sample([label for label, _ in vectors[1:]], rng.randint(0, 4))

        witness = find_tail_split_witness(vectors, labels, EPS)
        if witness is not None:
            u, v = space.points_named([witness.u, witness.v])
            assert check_sltp(space, space.points_named(labels), EPS, u, v).holds
