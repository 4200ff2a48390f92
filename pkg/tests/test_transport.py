# tests/test_transport.py
"""
Tests for the exact transportation simplex
"""

from fractions import Fraction

import pytest

from src.core.errors import InternalInvariantError, PreconditionError
from src.freespace.transport import solve_transport
from src.freespace.transport.compute_potentials import compute_potentials
from src.freespace.transport.find_pivot_cycle import find_pivot_cycle
from src.freespace.transport.north_west_corner import north_west_corner

F = Fraction


class TestNorthWestCorner:
    """北西隅法のテスト"""

    def test_spanning_basis(self):
        flows = north_west_corner([F(2), F(1)], [F(1), F(2)])
        assert flows == {(0, 0): 1, (0, 1): 1, (1, 1): 1}

    def test_degenerate_cell_is_kept(self):
        """流量 0 のセルも残り、基底は常に m+n-1 セル"""
        flows = north_west_corner([F(1), F(1)], [F(1), F(1)])
        assert len(flows) == 3
        assert flows[(1, 0)] == 0

    def test_single_row(self):
        flows = north_west_corner([F(3)], [F(1), F(2)])
        assert flows == {(0, 0): 1, (0, 1): 2}


class TestPotentialsAndCycles:
    """ポテンシャルと閉路のテスト"""

    def test_potentials_on_basis(self):
        cost = [[F(5), F(1)], [F(1), F(5)]]
        u, v = compute_potentials([(0, 0), (1, 0), (1, 1)], cost, 2, 2)
        assert u == [0, -4]
        assert v == [5, 9]

    def test_disconnected_basis(self):
        """全域木でなければ InternalInvariantError"""
        with pytest.raises(InternalInvariantError):
            compute_potentials([(0, 0), (1, 1)], [[F(1), F(1)], [F(1), F(1)]], 2, 2)

    def test_cycle_signs_alternate(self):
        """先頭は流入セル (+1)、以降は -1 から交互"""
        cycle = find_pivot_cycle([(0, 0), (1, 0), (1, 1)], (0, 1))
        assert cycle == [((0, 1), 1), ((0, 0), -1), ((1, 0), 1), ((1, 1), -1)]


class TestSolveTransport:
    """solve_transport のテスト"""

    def test_optimal_plan(self):
        """交差させない割り当てが選ばれる"""
        plan = solve_transport([F(1), F(1)], [F(1), F(1)], [[F(5), F(1)], [F(1), F(5)]], max_pivots=100)

        assert plan.cost == 2
        assert plan.pivots == 1
        assert plan.flows[(0, 1)] == 1
        assert plan.flows[(1, 0)] == 1
        assert len(plan.basis) == 3

    def test_potentials_certify_optimality(self):
        """基底で u+v = c、全セルで u+v ≤ c"""
        cost = [[F(3), F(1), F(4)], [F(1), F(5), F(9)], [F(2), F(6), F(5)]]
        plan = solve_transport([F(1, 2), F(3, 2), F(1)], [F(1), F(1), F(1)], cost, max_pivots=100)
        u, v = plan.row_potentials, plan.column_potentials

        for i, row in enumerate(cost):
            for j, c in enumerate(row):
                assert u[i] + v[j] <= c
        for i, j in plan.basis:
            assert u[i] + v[j] == cost[i][j]
        assert plan.cost == sum(u[i] * a for i, a in enumerate([F(1, 2), F(3, 2), F(1)])) + sum(v)

    def test_flows_respect_marginals(self):
        supply = [F(1, 3), F(2, 3), F(2)]
        demand = [F(3, 2), F(3, 2)]
        plan = solve_transport(supply, demand, [[F(1), F(2)], [F(3), F(1)], [F(2), F(2)]], max_pivots=100)

        for i, a in enumerate(supply):
            assert sum(x for (r, _), x in plan.flows.items() if r == i) == a
        for j, b in enumerate(demand):
            assert sum(x for (_, c), x in plan.flows.items() if c == j) == b
        assert all(x >= 0 for x in plan.flows.values())

    def test_unbalanced(self):
        with pytest.raises(PreconditionError):
            solve_transport([F(1)], [F(2)], [[F(1)]], max_pivots=10)

    def test_non_positive_amount(self):
        with pytest.raises(PreconditionError):
            solve_transport([F(0), F(1)], [F(1)], [[F(1)], [F(1)]], max_pivots=10)

    def test_empty_side(self):
        with pytest.raises(PreconditionError):
            solve_transport([], [F(1)], [], max_pivots=10)

    def test_pivot_cap(self):
        """ピボット上限を超えると InternalInvariantError"""
        with pytest.raises(InternalInvariantError):
            solve_transport([F(1), F(1)], [F(1), F(1)], [[F(5), F(1)], [F(1), F(5)]], max_pivots=0)

    def test_pivot_cap_from_settings(self):
        """上限を省略すると設定値が使われる"""
        plan = solve_transport([F(1), F(1)], [F(1), F(1)], [[F(5), F(1)], [F(1), F(5)]])
        assert plan.cost == 2
